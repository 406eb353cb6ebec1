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

import math
import unittest

import numpy as np


class Test_partitions(unittest.TestCase):
    @staticmethod
    def _call_function_under_test(n):
        from matroidkl.hazmat import partitions

        return partitions.partitions(n)

    def test_zero(self):
        self.assertEqual(self._call_function_under_test(0), ((),))

    def test_counts(self):
        counts = [len(self._call_function_under_test(n)) for n in range(10)]
        self.assertEqual(counts, [1, 1, 2, 3, 5, 7, 11, 15, 22, 30])

    def test_negative(self):
        with self.assertRaises(ValueError):
            self._call_function_under_test(-1)


class Test_z_factor(unittest.TestCase):
    def test_it(self):
        from matroidkl.hazmat import partitions

        self.assertEqual(partitions.z_factor((2, 1, 1)), 4)
        self.assertEqual(partitions.z_factor((3,)), 3)
        self.assertEqual(partitions.z_factor(()), 1)

    def test_class_sizes_sum(self):
        from matroidkl.hazmat import partitions

        total = sum(
            math.factorial(5) // partitions.z_factor(shape)
            for shape in partitions.partitions(5)
        )
        self.assertEqual(total, math.factorial(5))


class Test_set_partition_count(unittest.TestCase):
    def test_it(self):
        from matroidkl.hazmat import partitions

        self.assertEqual(partitions.set_partition_count((2, 2)), 3)
        self.assertEqual(partitions.set_partition_count((2, 1, 1)), 6)

    def test_bell_number(self):
        from matroidkl.hazmat import partitions

        total = sum(
            partitions.set_partition_count(shape)
            for shape in partitions.partitions(5)
        )
        self.assertEqual(total, 52)


class Test_merge(unittest.TestCase):
    def test_it(self):
        from matroidkl.hazmat import partitions

        self.assertEqual(partitions.merge((3, 1), (2, 2)), (3, 2, 2, 1))


class Test_conjugate_partition(unittest.TestCase):
    def test_it(self):
        from matroidkl.hazmat import partitions

        self.assertEqual(partitions.conjugate_partition((3, 1)), (2, 1, 1))
        self.assertEqual(partitions.conjugate_partition(()), ())


class Test_hook_length_dimension(unittest.TestCase):
    def test_it(self):
        from matroidkl.hazmat import partitions

        self.assertEqual(partitions.hook_length_dimension((3, 2)), 5)
        self.assertEqual(partitions.hook_length_dimension((2, 2)), 2)
        self.assertEqual(partitions.hook_length_dimension((3, 1, 1)), 6)

    def test_sum_of_squares(self):
        from matroidkl.hazmat import partitions

        total = sum(
            partitions.hook_length_dimension(shape) ** 2
            for shape in partitions.partitions(6)
        )
        self.assertEqual(total, math.factorial(6))


class Test_character(unittest.TestCase):
    @staticmethod
    def _call_function_under_test(shape, cycle_type):
        from matroidkl.hazmat import partitions

        return partitions.character(shape, cycle_type)

    def test_identity_is_dimension(self):
        from matroidkl.hazmat import partitions

        for shape in partitions.partitions(5):
            self.assertEqual(
                self._call_function_under_test(shape, (1,) * 5),
                partitions.hook_length_dimension(shape),
            )

    def test_sign(self):
        self.assertEqual(self._call_function_under_test((1, 1, 1), (3,)), 1)
        self.assertEqual(
            self._call_function_under_test((1, 1, 1, 1), (2, 1, 1)), -1
        )

    def test_unequal_sizes(self):
        with self.assertRaises(ValueError):
            self._call_function_under_test((2,), (1,))


class Test_character_table(unittest.TestCase):
    @staticmethod
    def _call_function_under_test(n):
        from matroidkl.hazmat import partitions

        return partitions.character_table(n)

    def test_s3(self):
        table = self._call_function_under_test(3)
        expected = np.array([[1, 1, 1], [-1, 0, 2], [1, -1, 1]])
        self.assertTrue(np.array_equal(table, expected))

    def test_orthogonality(self):
        from matroidkl.hazmat import partitions

        table = self._call_function_under_test(5)
        weights = np.array(
            [
                math.factorial(5) // partitions.z_factor(shape)
                for shape in partitions.partitions(5)
            ]
        )
        gram = (table * weights) @ table.T
        self.assertTrue(
            np.array_equal(gram, math.factorial(5) * np.eye(7, dtype=int))
        )

    def test_read_only(self):
        table = self._call_function_under_test(2)
        with self.assertRaises(ValueError):
            table[0, 0] = 5
