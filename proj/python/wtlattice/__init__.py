# Copyright 2026 The wtlattice Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Python bindings for the wtlattice library."""

import json as _json

from ._wtlattice import (
    DecoderState,
    Lattice,
    NestedPair,
    TruncationError,
    WiretapDecoder,
    WiretapEncoder,
    WtlError,
    achievable_rate,
    check_secrecy,
    config_hash,
    flatness_factor,
    leakage_bound,
    mmse_gdfe,
    sample_discrete_gaussian,
    sample_nested_pair,
    smoothing_parameter,
    theta_series,
    vnr,
)
from ._wtlattice import run_experiment as _run_experiment


def run_experiment(config_text):
    """Runs a configuration in memory; returns (summary dict, trials CSV)."""
    summary, trials = _run_experiment(config_text)
    return _json.loads(summary), trials


__all__ = [
    "DecoderState",
    "Lattice",
    "NestedPair",
    "TruncationError",
    "WiretapDecoder",
    "WiretapEncoder",
    "WtlError",
    "achievable_rate",
    "check_secrecy",
    "config_hash",
    "flatness_factor",
    "leakage_bound",
    "mmse_gdfe",
    "run_experiment",
    "sample_discrete_gaussian",
    "sample_nested_pair",
    "smoothing_parameter",
    "theta_series",
    "vnr",
]
