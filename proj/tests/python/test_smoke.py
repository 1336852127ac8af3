# Copyright 2026 The Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.


import json
import os
from fractions import Fraction

import pytest

import rayleigh_forge as rf

DATA = os.environ.get("RFORGE_TEST_DATA", os.path.join(os.path.dirname(__file__), "..", "data"))


def test_version():
    assert rf.__version__ == "0.1.0"


def test_k4_counts():
    k4 = rf.load_matroid("K4")
    assert k4.size == 6
    assert k4.full_rank() == 3
    assert len(k4.bases()) == 16
    inv = rf.invariants(k4)
    assert inv["independent"] == [1, 6, 15, 16]
    assert inv["flats"] == [1, 6, 7, 1]


def test_graph_file_matches_builtin():
    g = rf.load_matroid(os.path.join(DATA, "k4.graph"))
    assert sorted(map(sorted, g.bases())) == sorted(map(sorted, rf.load_matroid("K4").bases()))


def test_uniform_potts_poly():
    p = rf.model_poly(rf.uniform(3, 2), "potts", Fraction(1, 2))
    assert p[()] == 1
    assert p[("1",)] == 2
    assert p[("1", "2", "3")] == 4


def test_pair_verdicts():
    ok = rf.check_pair({(): 1, ("1",): 1, ("2",): 1, ("1", "2"): 1}, 1, 2)
    assert ok["status"] == "Verified"
    bad = rf.check_pair({(): 1, ("1", "2"): 1}, 1, 2, strategy="sample", samples=20)
    assert bad["status"] == "Refuted"
    assert bad["witness"]


def test_conditions():
    assert rf.check_condition([1, 0, 1], "a0") == (False, 1)
    assert rf.check_condition([1, 12, 60, 80, 60, 12, 1], "a4", m=6)[0]
    assert not rf.check_condition([1, 12, 60, Fraction(798, 10), 60, 12, 1], "a4", m=6)[0]
    assert rf.exchangeable_status(["1", "1/2", "1/4"]) == "Verified"


def test_bad_input_raises():
    with pytest.raises(ValueError):
        rf.load_matroid("U(2,5)")
    with pytest.raises(ValueError):
        rf.from_bases(["a", "b", "c", "d"], [["a", "b"], ["c", "d"]])


def test_cli_in_process():
    code, out, _ = rf.run_cli(["--format", "json", "mason", "K4"])
    assert code == 0
    assert json.loads(out)["tool"] == "rayleigh-forge"
    assert rf.run_cli(["frobnicate"])[0] == 3
