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


"""Exact Rayleigh and log-concavity checks for matroids and weight functions."""

from fractions import Fraction

from ._core import (
    InputError,
    InternalError,
    Matroid,
    __version__,
    check_matroid,
    exchangeable_status,
    from_bases,
    graphic,
    load_matroid,
    run_cli,
    two_sum,
    uniform,
)
from . import _core

__all__ = [
    "InputError",
    "InternalError",
    "Matroid",
    "__version__",
    "check_condition",
    "check_matroid",
    "check_pair",
    "exchangeable_status",
    "from_bases",
    "graphic",
    "invariants",
    "load_matroid",
    "model_poly",
    "run_cli",
    "two_sum",
    "uniform",
]


def _s(x):
    return str(Fraction(x))


def model_poly(matroid, model="bases", q=None):
    """Partition polynomial as {label tuple: Fraction}."""
    raw = _core.model_poly(matroid, model, None if q is None else _s(q))
    return {k: Fraction(v) for k, v in raw.items()}


def check_pair(weights, e, f, strategy="coeff", samples=1000, seed=0xD1CE):
    """Rayleigh verdict for one pair. `weights` maps label tuples to numbers."""
    elements = sorted({x for s in weights for x in s}, key=lambda x: (len(x), x))
    return _core.check_pair(elements, {tuple(k): _s(v) for k, v in weights.items()}, str(e), str(f),
                            strategy, samples, seed)


def check_condition(values, condition, m=None, offset=0):
    """(holds, witness index or None) for one of a0..a6."""
    return _core.check_condition([_s(v) for v in values], condition, m, offset)


def invariants(matroid):
    return {k: [Fraction(x) for x in v] for k, v in _core.invariants(matroid).items()}
