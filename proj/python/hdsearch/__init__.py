# SPDX-License-Identifier: Apache-2.0
#
# hdsearch - hierarchical dictionary search for greedy sparse recovery
# Copyright (C) 2026 The hdsearch authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
# ------------------------------------------------------------------------

import json

from . import _core
from ._core import (
    BudgetExceeded,
    ConfigError,
    GridKind,
    ObservationGrid,
    TargetDomain,
    atomic_signal,
    classical_dictionary,
    csv_header,
    homp,
    hsearch,
    meta_atom,
    mhomp,
    momp,
    omp,
    predict_selection_mults,
    response_profile,
)

__version__ = _core.__version__


def default_config(scenario):
    return json.loads(_core.default_config(scenario))


def normalize_config(config):
    """Fill defaults and validate keys; returns the full config dict."""
    return json.loads(_core.normalize_config(json.dumps(config)))


def run_experiment(config):
    """Run one experiment; returns a list of dicts with the CSV columns."""
    return _core.run_experiment(json.dumps(config))


def gen_dataset(config):
    return [json.loads(line) for line in _core.gen_dataset(json.dumps(config)).splitlines()]
