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

"""Utilities for running functional tests.

The JSON files next to this module map an ID to a known value. Their
layout is described by the schemas in ``schema/``.
"""

import io
import json
import os

from matroidkl import kl
from matroidkl import symfunc
from matroidkl.hazmat import polynomial

FNL_TESTS_DIR = os.path.abspath(os.path.dirname(__file__))


def _load_map(name):
    filename = os.path.join(FNL_TESTS_DIR, name)
    with io.open(filename, "r", encoding="utf-8") as file_obj:
        return json.load(file_obj)


def _ensure_empty(info):
    """Make sure a JSON info dictionary is empty.

    Args:
        info (dict): Expected to be exhausted.

    Raises:
        ValueError: If there are any keys remaining in ``info``.
    """
    if info:
        raise ValueError("Unexpected keys remaining in JSON info", info)


class MatroidInfo:  # pylint: disable=too-few-public-methods
    """Information about a matroid from ``matroids.json``.

    Args:
        id_ (str): The ID of the matroid.
        spec (str): The matroid in the spec grammar.
        rank (int): The rank.
        kl_polynomial (~matroidkl.hazmat.polynomial.Polynomial): The known
            Kazhdan-Lusztig polynomial.
        method (Optional[~matroidkl.kl.Method]): The method chosen by
            default, if recorded.
        note (Optional[str]): A note about the matroid.
    """

    def __init__(self, id_, spec, rank, kl_polynomial, method=None, note=None):
        self.id_ = id_
        self.spec = spec
        self.rank = rank
        self.kl_polynomial = kl_polynomial
        self.method = method
        self.note = note

    @property
    def test_id(self):
        """str: The ID for this matroid in functional tests."""
        return f"matroid {self.id_}: {self.spec}"

    @classmethod
    def from_json(cls, id_, info):
        """Convert JSON matroid info into ``MatroidInfo``.

        Args:
            id_ (str): The ID of the matroid.
            info (dict): The JSON data of the matroid.

        Returns:
            MatroidInfo: The matroid info parsed from the JSON.
        """
        spec = info.pop("spec")
        rank = info.pop("rank")
        kl_polynomial = polynomial.Polynomial(info.pop("kl"))
        # Optional fields.
        method = info.pop("method", None)
        if method is not None:
            method = kl.Method(method)
        note = info.pop("note", None)
        _ensure_empty(info)
        return cls(id_, spec, rank, kl_polynomial, method=method, note=note)


class EquivariantInfo:  # pylint: disable=too-few-public-methods
    """Information about a character from ``equivariant.json``.

    Args:
        id_ (str): The ID of the value.
        family (str): The matroid family.
        params (Tuple[int, ...]): The family parameters.
        t_degree (int): The power of :math:`t`.
        character (~matroidkl.symfunc.SymFunc): The Schur expansion.
        note (Optional[str]): A note about the value.
    """

    def __init__(self, id_, family, params, t_degree, character, note=None):
        self.id_ = id_
        self.family = family
        self.params = params
        self.t_degree = t_degree
        self.character = character
        self.note = note

    @property
    def test_id(self):
        """str: The ID for this character in functional tests."""
        params = ",".join(str(value) for value in self.params)
        return f"{self.family}({params}) t^{self.t_degree}"

    @classmethod
    def from_json(cls, id_, info):
        """Convert JSON character info into ``EquivariantInfo``.

        Args:
            id_ (str): The ID of the value.
            info (dict): The JSON data of the value.

        Returns:
            EquivariantInfo: The character info parsed from the JSON.
        """
        family = info.pop("family")
        params = tuple(info.pop("params"))
        t_degree = info.pop("t_degree")
        terms = {
            tuple(entry["partition"]): entry["multiplicity"]
            for entry in info.pop("schur")
        }
        character = symfunc.SymFunc(terms, basis="schur")
        note = info.pop("note", None)
        _ensure_empty(info)
        return cls(id_, family, params, t_degree, character, note=note)


def matroids_info():
    """Load matroid info from JSON file.

    Returns:
        List[MatroidInfo]: The matroids, ordered by ID.
    """
    matroid_json = _load_map("matroids.json")
    return [
        MatroidInfo.from_json(id_, matroid_json[id_])
        for id_ in sorted(matroid_json, key=int)
    ]


def equivariant_info():
    """Load equivariant character info from JSON file.

    Returns:
        List[EquivariantInfo]: The characters, ordered by ID.
    """
    equivariant_json = _load_map("equivariant.json")
    return [
        EquivariantInfo.from_json(id_, equivariant_json[id_])
        for id_ in sorted(equivariant_json, key=int)
    ]


def id_func(value):
    """ID function for pytest parametrized tests.

    Args:
        value (Union[MatroidInfo, EquivariantInfo]): The info.

    Returns:
        str: The ID for a parameter in a parametrized test.
    """
    return value.test_id
