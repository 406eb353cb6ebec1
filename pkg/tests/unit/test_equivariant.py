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
import math
import unittest

import pytest

from tests.unit import utils


def _schur(terms):
    from matroidkl import symfunc

    return symfunc.SymFunc(terms, basis="schur")


class TestEquivariantKL(unittest.TestCase):
    @staticmethod
    def _get_target_class():
        from matroidkl import equivariant

        return equivariant.EquivariantKL

    def _make_one(self, *args):
        klass = self._get_target_class()
        return klass(*args)

    def test_constructor(self):
        character = _schur({(4,): 1}) + _schur({(2, 2): 1}) * utils.tpoly(
            {1: 1}
        )
        ekl = self._make_one("uniform", (1, 3), 4, 3, character)
        self.assertEqual(
            ekl.coefficients, [_schur({(4,): 1}), _schur({(2, 2): 1})]
        )
        self.assertEqual(ekl.dimension(), utils.poly(1, 2))

    def test_not_homogeneous(self):
        character = _schur({(2,): 1, (1,): 1})
        with self.assertRaises(ValueError):
            self._make_one("uniform", (1, 1), 2, 1, character)

    def test_wrong_degree(self):
        with self.assertRaises(ValueError):
            self._make_one("uniform", (1, 2), 3, 2, _schur({(2,): 1}))

    def test_degree_bound(self):
        from matroidkl.hazmat import helpers

        character = _schur({(2,): 1}) * utils.tpoly({1: 1})
        with self.assertRaises(helpers.InconsistentRecursion):
            self._make_one("braid", (2,), 2, 2, character)

    def test_to_json(self):
        character = _schur({(4,): 1}) + _schur({(2, 2): 1}) * utils.tpoly(
            {1: 1}
        )
        ekl = self._make_one("uniform", (1, 3), 4, 3, character)
        self.assertEqual(
            ekl.to_json(),
            {
                "family": "uniform",
                "params": [1, 3],
                "n": 4,
                "t_degree": 1,
                "character": [
                    {"partition": [4], "multiplicity": {"0": 1}},
                    {"partition": [2, 2], "multiplicity": {"1": 1}},
                ],
            },
        )


class Test_uniform_equivariant_closed(unittest.TestCase):
    @staticmethod
    def _call_function_under_test(m, d, i):
        from matroidkl import equivariant

        return equivariant.uniform_equivariant_closed(m, d, i)

    def test_single_shape(self):
        result = self._call_function_under_test(1, 3, 1)
        self.assertEqual(result, _schur({(2, 2): 1}))

    def test_two_shapes(self):
        result = self._call_function_under_test(2, 4, 1)
        self.assertEqual(result, _schur({(4, 2): 1, (3, 3): 1}))
        self.assertEqual(result.dimension(), 14)

    def test_higher_power(self):
        result = self._call_function_under_test(1, 5, 2)
        self.assertEqual(result, _schur({(2, 2, 2): 1}))

    def test_empty_range(self):
        self.assertFalse(self._call_function_under_test(1, 2, 1))
        self.assertFalse(self._call_function_under_test(0, 5, 1))

    def test_constant_term(self):
        result = self._call_function_under_test(2, 3, 0)
        self.assertEqual(result, _schur({(5,): 1}))

    def test_bad_parameters(self):
        with self.assertRaises(ValueError):
            self._call_function_under_test(-1, 3, 1)
        with self.assertRaises(ValueError):
            self._call_function_under_test(1, 0, 1)


class Test_uniform_equivariant(utils.PolynomialTestCase):
    @staticmethod
    def _call_function_under_test(m, d):
        from matroidkl import equivariant

        return equivariant.uniform_equivariant(m, d)

    def test_dimension_matches(self):
        from matroidkl.hazmat import kl_helpers

        for m, d in ((1, 3), (2, 4), (1, 6), (3, 5)):
            result = self._call_function_under_test(m, d)
            self.assertEqual(result.size, m + d)
            self.assertEqual(result.rank, d)
            self.assertEqual(
                result.dimension(), kl_helpers.kl_uniform_type(m, d)
            )

    def test_rank_zero(self):
        result = self._call_function_under_test(2, 0)
        self.assertEqual(result.character, _schur({(2,): 1}))
        self.assertEqual(result.rank, 0)


class Test_solve_uniform_fe(utils.PolynomialTestCase):
    @staticmethod
    def _call_function_under_test(*args, **kwargs):
        from matroidkl import equivariant

        return equivariant.solve_uniform_fe(*args, **kwargs)

    def test_polynomials(self):
        from matroidkl import equivariant

        table = self._call_function_under_test(3, 7)
        self.assertEqual(len(table), 18)
        self.assertEqual(table[(1, 3)], utils.poly(1, 2))
        self.assertEqual(table[(1, 6)], utils.poly(1, 14, 21))
        self.assertEqual(table[(0, 4)], utils.poly(1))
        self.assertEqual(equivariant.cross_check("uniform", table), [])

    def test_x_slices(self):
        from matroidkl import equivariant
        from matroidkl import kl

        _, shared = equivariant._uniform_kernels(0, 6, False)
        table = self._call_function_under_test(3, 6)
        for m in range(3):
            kernel, multiplier = equivariant._uniform_kernels(m, 6, False)
            # The multiplier is the same for every power of x.
            self.assertEqual(multiplier, shared)
            solution = equivariant._solve_linear(kernel, multiplier)
            for d in range(1, 6):
                value = equivariant._integral(
                    solution.coefficient(d), math.factorial(m + d)
                )
                self.assertEqual(value, table[(m, d)])
                if m:
                    expected = kl.kl_uniform_type(m, d).polynomial
                    self.assertEqual(value, expected)

    def test_max_size(self):
        table = self._call_function_under_test(3, 7, max_size=4)
        self.assertEqual(max(m + d for m, d in table), 4)
        self.assertIn((2, 2), table)
        self.assertNotIn((2, 3), table)

    def test_characters(self):
        from matroidkl import equivariant

        table = self._call_function_under_test(3, 5, equivariant=True)
        self.assertEqual(
            table[(1, 3)].character,
            equivariant.uniform_equivariant(1, 3).character,
        )
        self.assertEqual(equivariant.cross_check("uniform", table), [])


class Test_solve_thagomizer_fe(utils.PolynomialTestCase):
    @staticmethod
    def _call_function_under_test(n_max, equivariant=False):
        from matroidkl import equivariant as equivariant_mod

        return equivariant_mod.solve_thagomizer_fe(n_max, equivariant)

    def test_polynomials(self):
        from matroidkl import equivariant

        table = self._call_function_under_test(8)
        self.assertEqual(table[0], utils.poly(1))
        self.assertEqual(table[3], utils.poly(1, 4))
        self.assertEqual(equivariant.cross_check("thagomizer", table), [])

    def test_characters(self):
        from matroidkl import equivariant

        table = self._call_function_under_test(4, True)
        self.assertEqual(table[3].dimension(), utils.poly(1, 4))
        self.assertTrue(
            all(
                equivariant.equivariant_positivity_check(value)
                for value in table.values()
            )
        )
        self.assertEqual(equivariant.cross_check("thagomizer", table), [])

    def test_negative(self):
        with self.assertRaises(ValueError):
            self._call_function_under_test(-1)


class Test_braid_kernel(unittest.TestCase):
    def test_low_orders(self):
        from matroidkl import equivariant
        from matroidkl import symfunc

        kernel = equivariant.braid_kernel(4)
        self.assertFalse(kernel.coefficient(0))
        self.assertEqual(kernel.coefficient(1), symfunc.SymFunc.power((1,)))
        t_minus_one = utils.tpoly({0: -1, 1: 1})
        self.assertEqual(
            kernel.coefficient(2), symfunc.SymFunc.schur((2,), t_minus_one)
        )
        specialized = symfunc.exponential_specialization(kernel)
        half = fractions.Fraction(1, 2)
        self.assertEqual(
            specialized.coefficient(2), utils.tpoly({0: -half, 1: half})
        )


class Test_solve_braid_fe(utils.PolynomialTestCase):
    @staticmethod
    def _call_function_under_test(n_max=None, equivariant=False):
        from matroidkl import equivariant as equivariant_mod

        return equivariant_mod.solve_braid_fe(n_max, equivariant)

    def test_polynomials(self):
        from matroidkl import equivariant

        table = self._call_function_under_test(8)
        self.assertEqual(table[1], utils.poly(1))
        self.assertEqual(table[4], utils.poly(1, 1))
        self.assertEqual(table[5], utils.poly(1, 5))
        self.assertEqual(equivariant.cross_check("braid", table), [])

    @pytest.mark.slow
    def test_default_order(self):
        from matroidkl import equivariant

        table = self._call_function_under_test()
        self.assertEqual(len(table), equivariant.DEFAULT_BRAID_ORDER)
        self.assertEqual(equivariant.cross_check("braid", table), [])

    def test_characters(self):
        from matroidkl import equivariant

        table = self._call_function_under_test(5, True)
        self.assertEqual(table[4].dimension(), utils.poly(1, 1))
        self.assertEqual(table[5].dimension(), utils.poly(1, 5))
        self.assertTrue(
            all(
                equivariant.equivariant_positivity_check(value)
                for value in table.values()
            )
        )
        self.assertEqual(equivariant.cross_check("braid", table), [])

    def test_out_of_range(self):
        from matroidkl import equivariant

        with self.assertRaises(ValueError):
            self._call_function_under_test(0)
        with self.assertRaises(ValueError):
            self._call_function_under_test(equivariant.MAX_FE_BRAID + 1)
        with self.assertRaises(ValueError):
            self._call_function_under_test(
                equivariant.MAX_EQUIVARIANT_BRAID + 1, True
            )


class Test_independent_polynomial(utils.PolynomialTestCase):
    def test_it(self):
        from matroidkl import equivariant

        self.assertEqual(
            equivariant.independent_polynomial("uniform", (1, 3)),
            utils.poly(1, 2),
        )
        self.assertEqual(
            equivariant.independent_polynomial("braid", (5,)),
            utils.poly(1, 5),
        )
        with self.assertRaises(ValueError):
            equivariant.independent_polynomial("wheel", (4,))


class Test_cross_check(unittest.TestCase):
    def test_mismatch(self):
        from matroidkl import equivariant

        table = {(1, 3): utils.poly(1, 3), (1, 4): utils.poly(1, 5)}
        self.assertEqual(equivariant.cross_check("uniform", table), [(1, 3)])


class Test_equivariant_positivity_check(unittest.TestCase):
    def test_it(self):
        from matroidkl import equivariant
        from matroidkl import symfunc

        ekl = equivariant.uniform_equivariant(2, 4)
        self.assertTrue(equivariant.equivariant_positivity_check(ekl))
        virtual = symfunc.SymFunc.power((2,))
        self.assertFalse(equivariant.equivariant_positivity_check(virtual))


class Test_strong_log_concavity_failures(unittest.TestCase):
    def test_single_coefficient(self):
        from matroidkl import equivariant

        ekl = equivariant.uniform_equivariant(0, 3)
        self.assertEqual(equivariant.strong_log_concavity_failures(ekl), [])


class Test_braid_leading_coeff_check(unittest.TestCase):
    @staticmethod
    def _call_function_under_test(k_max):
        from matroidkl import equivariant

        return equivariant.braid_leading_coeff_check(k_max)

    def test_it(self):
        rows = self._call_function_under_test(4)
        self.assertEqual([row.k for row in rows], [2, 3, 4])
        self.assertEqual(rows[0].computed, 1)
        self.assertEqual(rows[1].computed, 15)
        self.assertEqual(rows[2].conjectured, 735)
        self.assertTrue(all(row.match for row in rows))

    def test_out_of_range(self):
        with self.assertRaises(ValueError):
            self._call_function_under_test(1)
        with self.assertRaises(ValueError):
            self._call_function_under_test(13)


class Test_braid_coefficient_series(unittest.TestCase):
    @staticmethod
    def _call_function_under_test(index, n_max):
        from matroidkl import equivariant

        return equivariant.braid_coefficient_series(index, n_max)

    def test_first_coefficient(self):
        result = self._call_function_under_test(1, 5)
        self.assertEqual(result, [0] * 4 + [1, 5])

    def test_second_coefficient(self):
        result = self._call_function_under_test(2, 6)
        self.assertEqual(result, [0] * 6 + [15])

    def test_unknown_index(self):
        with self.assertRaises(ValueError):
            self._call_function_under_test(3, 5)


class Test_braid_coefficient_gf_check(unittest.TestCase):
    @staticmethod
    def _call_function_under_test(index, n_max=14):
        from matroidkl import equivariant

        return equivariant.braid_coefficient_gf_check(index, n_max)

    def test_first_coefficient(self):
        report = self._call_function_under_test(1, 12)
        self.assertTrue(report.match)
        self.assertIsNone(report.first_mismatch)
        self.assertEqual(report.computed[:4], [0, 0, 0, 0])
        self.assertEqual(report.computed, report.expected)

    def test_second_coefficient(self):
        report = self._call_function_under_test(2, 12)
        self.assertTrue(report.match)

    def test_small_order(self):
        report = self._call_function_under_test(1, 2)
        self.assertEqual(report.computed, [0, 0, 0])
        self.assertTrue(report.match)

    def test_out_of_range(self):
        with self.assertRaises(ValueError):
            self._call_function_under_test(1, 26)


class Test_first_row_stability_check(unittest.TestCase):
    @staticmethod
    def _call_function_under_test(m, i, d):
        from matroidkl import equivariant

        return equivariant.first_row_stability_check(m, i, d)

    def test_stable(self):
        self.assertTrue(self._call_function_under_test(1, 1, 3))
        self.assertTrue(self._call_function_under_test(2, 1, 4))
        self.assertTrue(self._call_function_under_test(2, 2, 7))

    def test_too_small(self):
        with self.assertRaises(ValueError):
            self._call_function_under_test(2, 1, 3)


class Test_uniform_interlacing_chain(unittest.TestCase):
    def test_it(self):
        from matroidkl import equivariant
        from matroidkl import kl

        reports = equivariant.uniform_interlacing_chain(1, 6)
        self.assertEqual([report.rank for report in reports], [2, 3, 4, 5, 6])
        self.assertIs(reports[-1].status, kl.InterlacingStatus.PASS)


class Test_catalan_checks(unittest.TestCase):
    def test_thagomizer(self):
        from matroidkl import equivariant

        self.assertEqual(equivariant.thagomizer_catalan_check(10), [])

    def test_uniform_top(self):
        from matroidkl import equivariant

        self.assertEqual(equivariant.uniform_top_catalan_check(6), [])
