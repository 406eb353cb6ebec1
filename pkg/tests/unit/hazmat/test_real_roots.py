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

import fractions
import unittest

from tests.unit import utils


class Test_is_log_concave_no_internal_zeros(unittest.TestCase):
    @staticmethod
    def _call_function_under_test(poly):
        from matroidkl.hazmat import real_roots

        return real_roots.is_log_concave_no_internal_zeros(poly)

    def test_log_concave(self):
        self.assertTrue(self._call_function_under_test(utils.poly(1, 4)))
        self.assertTrue(
            self._call_function_under_test(utils.poly(1, 14, 21))
        )

    def test_not_log_concave(self):
        self.assertFalse(self._call_function_under_test(utils.poly(1, 1, 3)))

    def test_internal_zero(self):
        self.assertFalse(self._call_function_under_test(utils.poly(1, 0, 1)))

    def test_constant(self):
        self.assertTrue(self._call_function_under_test(utils.poly(1)))


class Test_square_free_decomposition(utils.PolynomialTestCase):
    @staticmethod
    def _call_function_under_test(poly):
        from matroidkl.hazmat import real_roots

        return real_roots.square_free_decomposition(poly)

    def test_it(self):
        # (t + 1)^2 (t + 2)
        result = self._call_function_under_test(utils.poly(2, 5, 4, 1))
        self.assertEqual(
            result, [(utils.poly(2, 1), 1), (utils.poly(1, 1), 2)]
        )

    def test_constant(self):
        self.assertEqual(self._call_function_under_test(utils.poly(3)), [])

    def test_zero(self):
        with self.assertRaises(ValueError):
            self._call_function_under_test(utils.poly())


class Test_square_free_part(utils.PolynomialTestCase):
    def test_it(self):
        from matroidkl.hazmat import real_roots

        # 2 (t - 1)^3
        result = real_roots.square_free_part(utils.poly(-2, 6, -6, 2))
        self.assertEqual(result, utils.poly(-1, 1))


class Test_sturm_chain(utils.PolynomialTestCase):
    def test_it(self):
        from matroidkl.hazmat import real_roots

        chain = real_roots.sturm_chain(utils.poly(-2, 0, 1))
        self.assertEqual(
            chain, (utils.poly(-2, 0, 1), utils.poly(0, 2), utils.poly(2))
        )


class Test_count_real_roots(unittest.TestCase):
    @staticmethod
    def _call_function_under_test(poly, lower=None, upper=None):
        from matroidkl.hazmat import real_roots

        return real_roots.count_real_roots(poly, lower, upper)

    def test_non_positive(self):
        poly = utils.poly(-2, 0, 1)
        self.assertEqual(self._call_function_under_test(poly, upper=0), 1)
        self.assertEqual(self._call_function_under_test(poly), 2)

    def test_no_real_roots(self):
        result = self._call_function_under_test(utils.poly(1, 0, 1))
        self.assertEqual(result, 0)

    def test_distinct_roots_only(self):
        # (t + 1)^2 (t + 2)
        poly = utils.poly(2, 5, 4, 1)
        self.assertEqual(self._call_function_under_test(poly), 2)

    def test_half_open(self):
        poly = utils.poly(-1, 1)
        self.assertEqual(self._call_function_under_test(poly, 0, 1), 1)
        self.assertEqual(self._call_function_under_test(poly, 1, 2), 0)

    def test_zero(self):
        with self.assertRaises(ValueError):
            self._call_function_under_test(utils.poly())

    def test_reversed(self):
        with self.assertRaises(ValueError):
            self._call_function_under_test(utils.poly(1, 1), 2, 1)


class Test_all_roots_negative_real(unittest.TestCase):
    @staticmethod
    def _call_function_under_test(poly):
        from matroidkl.hazmat import real_roots

        return real_roots.all_roots_negative_real(poly)

    def test_kl_polynomials(self):
        self.assertTrue(self._call_function_under_test(utils.poly(1, 2)))
        self.assertTrue(
            self._call_function_under_test(utils.poly(1, 14, 21))
        )
        self.assertTrue(
            self._call_function_under_test(utils.poly(1, 20, 56, 14))
        )

    def test_complex_roots(self):
        self.assertFalse(self._call_function_under_test(utils.poly(1, 1, 1)))

    def test_root_at_zero(self):
        self.assertFalse(self._call_function_under_test(utils.poly(0, 1)))

    def test_repeated_root(self):
        self.assertTrue(self._call_function_under_test(utils.poly(1, 2, 1)))

    def test_constant(self):
        self.assertTrue(self._call_function_under_test(utils.poly(5)))


class Test_isolate_roots(unittest.TestCase):
    @staticmethod
    def _call_function_under_test(poly, budget=None):
        from matroidkl.hazmat import real_roots

        return real_roots.isolate_roots(poly, budget)

    def test_two_roots(self):
        poly = utils.poly(-2, 0, 1)
        isolated = self._call_function_under_test(poly)
        self.assertEqual(len(isolated), 2)
        (lower, upper), _ = isolated.intervals
        self.assertLess(lower, upper)
        self.assertLessEqual(upper, 0)
        self.assertLess(poly(lower) * poly(upper), 0)

    def test_isolation_budget(self):
        from matroidkl.hazmat import helpers

        with self.assertRaises(helpers.RefinementBudgetExceeded):
            self._call_function_under_test(utils.poly(-2, 0, 1), budget=1)
        isolated = self._call_function_under_test(
            utils.poly(-2, 0, 1), budget=2
        )
        self.assertEqual(isolated.steps, 2)

    def test_three_roots(self):
        # (t + 1)(t + 2)(t + 3)
        isolated = self._call_function_under_test(utils.poly(6, 11, 6, 1))
        self.assertEqual(len(isolated), 3)
        self.assertEqual(isolated.multiplicities, (1, 1, 1))
        bounds = [value for interval in isolated for value in interval]
        self.assertEqual(bounds, sorted(bounds))

    def test_multiplicities(self):
        # (t + 1)^2 (t + 2)
        isolated = self._call_function_under_test(utils.poly(2, 5, 4, 1))
        self.assertEqual(isolated.multiplicities, (1, 2))

    def test_constant(self):
        isolated = self._call_function_under_test(utils.poly(7))
        self.assertEqual(len(isolated), 0)

    def test_refine(self):
        poly = utils.poly(-2, 0, 1)
        isolated = self._call_function_under_test(poly)
        refined = isolated.refine(fractions.Fraction(1, 100))
        for lower, upper in refined:
            self.assertLess(upper - lower, fractions.Fraction(1, 100))
            self.assertLessEqual(poly(lower) * poly(upper), 0)
        self.assertGreater(refined.steps, isolated.steps)

    def test_refine_budget(self):
        from matroidkl.hazmat import helpers

        isolated = self._call_function_under_test(utils.poly(-2, 0, 1))
        with self.assertRaises(helpers.RefinementBudgetExceeded):
            isolated.refine(fractions.Fraction(1, 10**9), budget=4)

    def test_refine_bad_width(self):
        isolated = self._call_function_under_test(utils.poly(-2, 0, 1))
        with self.assertRaises(ValueError):
            isolated.refine(0)

    def test___repr__(self):
        isolated = self._call_function_under_test(utils.poly(-2, 0, 1))
        self.assertEqual(
            repr(isolated), "<IsolatingIntervals (degree=2, roots=2)>"
        )


class Test_interlaces(unittest.TestCase):
    @staticmethod
    def _call_function_under_test(f, g):
        from matroidkl.hazmat import real_roots

        return real_roots.interlaces(f, g)

    def test_interlacing(self):
        # (t + 1)(t + 3) against t + 2.
        f = utils.poly(3, 4, 1)
        self.assertTrue(self._call_function_under_test(f, utils.poly(2, 1)))

    def test_not_interlacing(self):
        # (t + 1)(t + 2) against t + 3.
        f = utils.poly(2, 3, 1)
        self.assertFalse(self._call_function_under_test(f, utils.poly(3, 1)))

    def test_close_roots(self):
        # Roots -1, -1/2 and -3/4 need a few refinement steps to separate.
        f = utils.poly(1, 3, 2)
        g = utils.poly(3, 4)
        self.assertTrue(self._call_function_under_test(f, g))

    def test_non_real_roots(self):
        f = utils.poly(1, 0, 1)
        self.assertFalse(self._call_function_under_test(f, utils.poly(0, 1)))

    def test_repeated_root(self):
        from matroidkl.hazmat import helpers

        with self.assertRaises(helpers.DegenerateRoots):
            self._call_function_under_test(
                utils.poly(1, 2, 1), utils.poly(2, 1)
            )

    def test_shared_root(self):
        from matroidkl.hazmat import helpers

        with self.assertRaises(helpers.DegenerateRoots):
            self._call_function_under_test(
                utils.poly(2, 3, 1), utils.poly(1, 1)
            )

    def test_bad_degrees(self):
        with self.assertRaises(ValueError):
            self._call_function_under_test(utils.poly(1, 1), utils.poly(1, 1))
