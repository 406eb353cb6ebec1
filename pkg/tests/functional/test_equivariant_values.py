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

import pytest

from matroidkl import equivariant
from matroidkl import kl
from tests.functional import utils


CHARACTERS = utils.equivariant_info()
UNIFORM = [info for info in CHARACTERS if info.family == "uniform"]


def _coefficient(ekl, t_degree):
    coefficients = ekl.coefficients
    if t_degree >= len(coefficients):
        return 0
    return coefficients[t_degree]


@pytest.mark.parametrize("character_info", UNIFORM, ids=utils.id_func)
def test_uniform_closed_form(character_info):
    m, d = character_info.params
    result = equivariant.uniform_equivariant_closed(
        m, d, character_info.t_degree
    )
    assert result == character_info.character


@pytest.mark.parametrize("character_info", UNIFORM, ids=utils.id_func)
def test_uniform_functional_equation(character_info):
    m, d = character_info.params
    table = equivariant.solve_uniform_fe(m + 1, d + 1, equivariant=True)
    result = _coefficient(table[(m, d)], character_info.t_degree)
    assert result == character_info.character


@pytest.mark.parametrize("character_info", CHARACTERS, ids=utils.id_func)
def test_dimension(character_info):
    m, d = character_info.params
    poly = kl.kl_uniform_type(m, d).polynomial
    expected = poly.coefficients[character_info.t_degree]
    assert character_info.character.dimension() == expected


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_braid_characters_are_representations(n):
    table = equivariant.solve_braid_fe(n, equivariant=True)
    ekl = table[n]
    assert equivariant.equivariant_positivity_check(ekl)
    assert ekl.dimension() == kl.kl_braid_type(n).polynomial


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_thagomizer_characters_are_representations(n):
    table = equivariant.solve_thagomizer_fe(n, equivariant=True)
    ekl = table[n]
    assert equivariant.equivariant_positivity_check(ekl)
    assert ekl.dimension() == kl.kl_thagomizer_closed(n)
