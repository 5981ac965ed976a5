# Copyright 2026 The Groves Toolkit Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.


"""Exact-arithmetic toolkit for non-deficit Groves redistribution mechanisms.

Rationals are returned as fractions.Fraction and accepted as Fraction, int or
"p/q" strings. Agents are numbered from 0.
"""

from ._groves import (
    DeficitError,
    Domain,
    Mechanism,
    ParseError,
    TypeGrid,
    anonymize,
    bcgc,
    bcgc_j,
    compare_collective,
    compare_individual,
    dump_mechanism,
    fixture,
    fixture_names,
    integer_grid,
    is_individually_undominated,
    is_non_deficit,
    is_pay_only,
    is_strategy_proof,
    iterate_until,
    load_mechanism,
    load_mechanism_file,
    oel_coefficients,
    oel_mechanism,
    priority_improve,
    save_mechanism_file,
    search_collective_dominator,
    surplus_guarantee,
)

__all__ = [
    "DeficitError",
    "Domain",
    "Mechanism",
    "ParseError",
    "TypeGrid",
    "anonymize",
    "bcgc",
    "bcgc_j",
    "compare_collective",
    "compare_individual",
    "dump_mechanism",
    "fixture",
    "fixture_names",
    "integer_grid",
    "is_individually_undominated",
    "is_non_deficit",
    "is_pay_only",
    "is_strategy_proof",
    "iterate_until",
    "load_mechanism",
    "load_mechanism_file",
    "oel_coefficients",
    "oel_mechanism",
    "priority_improve",
    "save_mechanism_file",
    "search_collective_dominator",
    "surplus_guarantee",
]
