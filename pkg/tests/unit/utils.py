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

import contextlib
import os
import unittest
import unittest.mock


WRONG_COEFFICIENTS_TEMPLATE = """\
Polynomials differ
expected =
{!r}
actual =
{!r}
"""


def poly(*coefficients):
    from matroidkl.hazmat import polynomial

    return polynomial.Polynomial(coefficients)


def tpoly(terms):
    from matroidkl.hazmat import polynomial

    return polynomial.TPoly(terms)


@contextlib.contextmanager
def patched_env(**values):
    """Temporarily set environment variables (``None`` removes one)."""
    updated = {key: value for key, value in values.items() if value}
    with unittest.mock.patch.dict(os.environ, updated):
        for key, value in values.items():
            if value is None:
                os.environ.pop(key, None)
        yield


class PolynomialTestCase(unittest.TestCase):
    def __init__(self, *args, **kwargs):
        from matroidkl.hazmat import polynomial

        super().__init__(*args, **kwargs)
        self.addTypeEqualityFunc(
            polynomial.Polynomial, self.assertPolynomialEqual
        )

    def assertPolynomialEqual(self, poly1, poly2, msg=None):
        if poly1.coefficients != poly2.coefficients:  # pragma: NO COVER
            standard_msg = WRONG_COEFFICIENTS_TEMPLATE.format(
                poly1.coefficients, poly2.coefficients
            )
            self.fail(self._formatMessage(msg, standard_msg))

    def assertCoefficients(self, value, expected, msg=None):
        self.assertEqual(list(value.coefficients), list(expected), msg)
