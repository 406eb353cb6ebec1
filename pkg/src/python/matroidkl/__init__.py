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

r"""Kazhdan-Lusztig polynomials of matroids.

Exact computation of Kazhdan-Lusztig polynomials from lattices of flats
and family recursions, their symmetric group equivariant refinements via
generating function identities, and exact checks of positivity, log
concavity, real rootedness and interlacing.
"""

from matroidkl import __config__  # noqa: F401
from matroidkl.equivariant import EquivariantKL
from matroidkl.hazmat.helpers import InconsistentRecursion
from matroidkl.hazmat.helpers import ResourceCapExceeded
from matroidkl.hazmat.polynomial import Polynomial
from matroidkl.kl import KLResult
from matroidkl.kl import Method
from matroidkl.kl import kl_polynomial
from matroidkl.lattice import FlatLattice
from matroidkl.matroid import Matroid
from matroidkl.matroid import SpecParseError
from matroidkl.matroid import build_matroid
from matroidkl.symfunc import SymFunc

# NOTE: The ``__version__`` and ``__author__`` are hard-coded here, rather
#       than read from the installed distribution, so that ``matroidkl``
#       can be imported from source.
__author__ = "matroidkl developers"
__version__ = "2026.10.0.dev1"
"""str: The current version of :mod:`matroidkl`."""
__all__ = [
    "__author__",
    "__version__",
    "EquivariantKL",
    "FlatLattice",
    "InconsistentRecursion",
    "KLResult",
    "Matroid",
    "Method",
    "Polynomial",
    "ResourceCapExceeded",
    "SpecParseError",
    "SymFunc",
    "build_matroid",
    "kl_polynomial",
]
