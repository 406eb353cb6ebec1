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

import pytest

from tests.unit import utils


FANO = (
    (1, 0, 0, 1, 1, 0, 1),
    (0, 1, 0, 1, 0, 1, 1),
    (0, 0, 1, 0, 1, 1, 1),
)


class TestKLResult(unittest.TestCase):
    @staticmethod
    def _get_target_class():
        from matroidkl import kl

        return kl.KLResult

    def _make_one(self, poly, rank):
        from matroidkl import kl

        klass = self._get_target_class()
        return klass(poly, rank, kl.Method.LATTICE)

    def test_to_json(self):
        result = self._make_one(utils.poly(1, 2), 3)
        self.assertEqual(result.coefficients, [1, 2])
        self.assertEqual(
            result.to_json(), {"rank": 3, "method": "lattice", "kl": [1, 2]}
        )

    def test_bad_constant(self):
        from matroidkl.hazmat import helpers

        with self.assertRaises(helpers.InconsistentRecursion):
            self._make_one(utils.poly(2), 1)

    def test_rank_zero(self):
        from matroidkl.hazmat import helpers

        with self.assertRaises(helpers.InconsistentRecursion):
            self._make_one(utils.poly(1, 1), 0)

    def test_degree_bound(self):
        from matroidkl.hazmat import helpers

        with self.assertRaises(helpers.InconsistentRecursion):
            self._make_one(utils.poly(1, 1), 2)

    def test_non_integral(self):
        from matroidkl.hazmat import helpers

        poly = utils.poly(1, fractions.Fraction(1, 2))
        with self.assertRaises(helpers.NonIntegralCoefficient):
            self._make_one(poly, 3)


class Test_upper_interval_polynomials(unittest.TestCase):
    @staticmethod
    def _call_function_under_test(lattice):
        from matroidkl import kl

        return kl.upper_interval_polynomials(lattice)

    def test_rank_two(self):
        from matroidkl import matroid

        result = self._call_function_under_test(
            matroid.uniform(1, 2).lattice()
        )
        self.assertEqual([poly.coefficients for poly in result], [(1,)] * 5)

    def test_braid_intervals(self):
        from matroidkl import matroid

        lattice = matroid.complete_graph(4).lattice()
        result = self._call_function_under_test(lattice)
        self.assertEqual(result[0].coefficients, (1, 1))
        # Every proper upper interval of the partition lattice of a
        # four element set is a smaller partition lattice.
        self.assertTrue(all(poly.coefficients == (1,) for poly in result[1:]))


class Test_kl_polynomial(unittest.TestCase):
    @staticmethod
    def _call_function_under_test(matroid, method=None):
        from matroidkl import kl

        return kl.kl_polynomial(matroid, method)

    def _check(self, spec, expected, method):
        from matroidkl import kl
        from matroidkl import matroid

        result = self._call_function_under_test(matroid.build_matroid(spec))
        self.assertEqual(result.coefficients, expected)
        self.assertIs(result.method, method)
        forced = self._call_function_under_test(
            matroid.build_matroid(spec), kl.Method.LATTICE
        )
        self.assertEqual(forced.coefficients, expected)
        self.assertIs(forced.method, kl.Method.LATTICE)

    def test_uniform(self):
        from matroidkl import kl

        self._check("uniform:1,6", [1, 14, 21], kl.Method.CLOSED_FORM)
        self._check("uniform:2,3", [1, 5], kl.Method.UNIFORM_TYPE)
        self._check("uniform:0,4", [1], kl.Method.CLOSED_FORM)

    def test_braid(self):
        from matroidkl import kl

        self._check("complete:4", [1, 1], kl.Method.BRAID_TYPE)
        self._check("complete:5", [1, 5], kl.Method.BRAID_TYPE)

    def test_thagomizer(self):
        from matroidkl import kl

        self._check("thagomizer:3", [1, 4], kl.Method.CLOSED_FORM)

    def test_k2n(self):
        from matroidkl import kl

        self._check("k2n:3", [1, 5], kl.Method.CLOSED_FORM)
        self._check("k2n:2", [1, 2], kl.Method.CLOSED_FORM)

    def test_direct_sum(self):
        from matroidkl import kl

        self._check(
            "dsum:(uniform:1,3)+(uniform:1,3)",
            [1, 4, 4],
            kl.Method.DIRECT_SUM,
        )

    def test_unnamed_graph(self):
        from matroidkl import kl
        from matroidkl import matroid

        result = self._call_function_under_test(
            matroid.build_matroid("graph:@K4")
        )
        self.assertEqual(result.coefficients, [1, 1])
        self.assertIs(result.method, kl.Method.LATTICE)

    def test_fano(self):
        from matroidkl import matroid

        result = self._call_function_under_test(matroid.linear(FANO, 2))
        self.assertEqual(result.coefficients, [1])
        self.assertEqual(result.matroid_rank, 3)

    def test_loops_and_parallel_elements(self):
        from matroidkl import matroid

        # A doubled triangle with a loop has the lattice of U(1, 2).
        edges = [(0, 1), (1, 2), (0, 2), (0, 2), (1, 1)]
        result = self._call_function_under_test(matroid.graphic(edges))
        self.assertEqual(result.coefficients, [1])

    def test_rank_zero(self):
        from matroidkl import kl
        from matroidkl import matroid

        result = self._call_function_under_test(matroid.uniform(3, 0))
        self.assertEqual(result.coefficients, [1])
        self.assertIs(result.method, kl.Method.CLOSED_FORM)

    def test_bad_method(self):
        from matroidkl import kl
        from matroidkl import matroid

        with self.assertRaises(ValueError):
            self._call_function_under_test(
                matroid.uniform(1, 2), kl.Method.BRAID_TYPE
            )

    @pytest.mark.slow
    def test_braid_lattice_six(self):
        from matroidkl import kl
        from matroidkl import matroid

        forced = self._call_function_under_test(
            matroid.complete_graph(6), kl.Method.LATTICE
        )
        self.assertEqual(
            forced.coefficients, kl.kl_braid_type(6).coefficients
        )


def _contractions(value, depth):
    from matroidkl import matroid

    yield value
    if depth == 0:
        return
    loops = value.loops()
    for element in range(value.size):
        if not (loops >> element) & 1:
            child = matroid.contract_element(value, element)
            yield from _contractions(child, depth - 1)


def _family_roots():
    roots = [f"uniform:{m},{d}" for m in range(7) for d in range(7 - m)]
    roots.extend(f"thagomizer:{n}" for n in range(5))
    roots.extend(f"k2n:{n}" for n in range(1, 5))
    roots.extend(f"complete:{n}" for n in range(2, 6))
    return roots


@pytest.mark.parametrize("spec", _family_roots())
def test_family_tags_agree_with_lattice(spec):
    from matroidkl import kl
    from matroidkl import matroid

    root = matroid.build_matroid(spec)
    for value in _contractions(root, 2):
        if value.family is None:
            continue
        tagged = kl.kl_polynomial(value)
        forced = kl.kl_polynomial(value, kl.Method.LATTICE)
        assert tagged.coefficients == forced.coefficients, (
            spec,
            value.family,
            value.labels,
        )


class Test_family_wrappers(utils.PolynomialTestCase):
    def test_kl_uniform_type(self):
        from matroidkl import kl

        result = kl.kl_uniform_type(2, 3)
        self.assertEqual(result.coefficients, [1, 5])
        self.assertEqual(result.matroid_rank, 3)

    def test_kl_braid_type(self):
        from matroidkl import kl

        self.assertEqual(kl.kl_braid_type(5).coefficients, [1, 5])
        self.assertEqual(kl.kl_braid_type(5).matroid_rank, 4)
        with self.assertRaises(ValueError):
            kl.kl_braid_type(0)
        with self.assertRaises(ValueError):
            kl.kl_braid_type(kl.MAX_BRAID + 1)

    def test_kl_thagomizer_type(self):
        from matroidkl import kl

        result = kl.kl_thagomizer_type(3)
        self.assertEqual(result.coefficients, [1, 4])
        self.assertEqual(result.matroid_rank, 4)

    def test_kl_uniform_1d_closed(self):
        from matroidkl import kl

        self.assertEqual(kl.kl_uniform_1d_closed(3), utils.poly(1, 2))
        with self.assertRaises(ValueError):
            kl.kl_uniform_1d_closed(0)

    def test_kl_thagomizer_closed(self):
        from matroidkl import kl

        self.assertEqual(kl.kl_thagomizer_closed(3), utils.poly(1, 4))

    def test_kl_k2n(self):
        from matroidkl import kl

        self.assertEqual(kl.kl_k2n(3), utils.poly(1, 5))
        with self.assertRaises(ValueError):
            kl.kl_k2n(1)


class Test_is_non_degenerate(unittest.TestCase):
    @staticmethod
    def _call_function_under_test(matroid):
        from matroidkl import kl

        return kl.is_non_degenerate(matroid)

    def test_it(self):
        from matroidkl import matroid

        self.assertFalse(self._call_function_under_test(matroid.uniform(0, 3)))
        self.assertTrue(self._call_function_under_test(matroid.uniform(1, 3)))
        self.assertTrue(
            self._call_function_under_test(matroid.complete_graph(4))
        )
        self.assertTrue(self._call_function_under_test(matroid.uniform(2, 0)))


class Test_interlacing_verdicts(unittest.TestCase):
    def test_even_rank(self):
        from matroidkl import kl

        result = kl.interlacing_verdicts(
            utils.poly(1, 5), utils.poly(1, 1), 4
        )
        self.assertEqual(result, (True, True))

    def test_odd_rank(self):
        from matroidkl import kl

        result = kl.interlacing_verdicts(
            utils.poly(1, 14, 21), utils.poly(1, 9, 5), 6
        )
        self.assertEqual(result, (True, True))


class Test_check_contraction_interlacing(unittest.TestCase):
    @staticmethod
    def _call_function_under_test(matroid, element, budget=None):
        from matroidkl import kl

        return kl.check_contraction_interlacing(matroid, element, budget)

    def test_uniform(self):
        from matroidkl import kl
        from matroidkl import matroid

        report = self._call_function_under_test(matroid.uniform(1, 7), 0)
        self.assertIs(report.status, kl.InterlacingStatus.PASS)
        self.assertEqual(report.parent_kl, [1, 20, 56, 14])
        self.assertEqual(report.child_kl, [1, 14, 21])
        self.assertTrue(report.p_form)
        self.assertTrue(report.q_form)

    def test_braid(self):
        from matroidkl import kl
        from matroidkl import matroid

        report = self._call_function_under_test(matroid.complete_graph(5), 0)
        self.assertIs(report.status, kl.InterlacingStatus.PASS)
        self.assertEqual(report.to_json()["status"], "pass")

    def test_rank_one(self):
        from matroidkl import kl
        from matroidkl import matroid

        report = self._call_function_under_test(matroid.uniform(1, 1), 0)
        self.assertIs(report.status, kl.InterlacingStatus.HYPOTHESIS_NOT_MET)
        self.assertIsNone(report.p_form)

    def test_degenerate_matroid(self):
        from matroidkl import kl
        from matroidkl import matroid

        report = self._call_function_under_test(matroid.uniform(0, 3), 0)
        self.assertIs(report.status, kl.InterlacingStatus.HYPOTHESIS_NOT_MET)
        self.assertEqual(report.note, "degenerate matroid")

    def test_budget(self):
        from matroidkl import kl
        from matroidkl import matroid

        report = self._call_function_under_test(matroid.uniform(1, 7), 0, 0)
        self.assertIs(report.status, kl.InterlacingStatus.BUDGET_EXCEEDED)
        self.assertEqual(
            report.to_json()["status"], "budget-exceeded"
        )

    def test_loop(self):
        from matroidkl import matroid

        with self.assertRaises(ValueError):
            self._call_function_under_test(
                matroid.graphic([(0, 0), (0, 1)]), 0
            )
