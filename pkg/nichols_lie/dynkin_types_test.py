# Copyright 2026 The Nichols-Lie Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Tests for nichols_lie.dynkin_types."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import pickle

import numpy as np

from nichols_lie import dynkin_types
from nichols_lie import errors
from nichols_lie import test_case

_FINITE_TYPES = [('A', 1), ('A', 4), ('B', 2), ('B', 5), ('C', 3), ('C', 4),
                 ('D', 4), ('D', 6), ('E', 6), ('E', 7), ('E', 8), ('F', 4),
                 ('G', 2)]


def _block_diagonal(*blocks):
  n = sum(len(b) for b in blocks)
  a = np.zeros((n, n), dtype=np.int64)
  offset = 0
  for block in blocks:
    size = len(block)
    a[offset:offset + size, offset:offset + size] = block
    offset += size
  return a


class CartanMatrixTest(test_case.NicholsTestCase):

  def testB3(self):
    self.assertMatrixEqual(
        dynkin_types.cartan_matrix('B', 3),
        [[2, -1, 0], [-1, 2, -1], [0, -2, 2]])

  def testC3(self):
    self.assertMatrixEqual(
        dynkin_types.cartan_matrix('C', 3),
        [[2, -1, 0], [-1, 2, -2], [0, -1, 2]])

  def testG2(self):
    self.assertMatrixEqual(dynkin_types.cartan_matrix('G', 2),
                           [[2, -3], [-1, 2]])

  def testE6Branches(self):
    a = dynkin_types.cartan_matrix('E', 6)
    self.assertEqual(int((a[3] != 0).sum()), 4)
    self.assertEqual(a[0, 2], -1)
    self.assertEqual(a[1, 3], -1)

  @test_case.parameters(('D', 3), ('E', 5), ('F', 3), ('G', 3), ('B', 1),
                        ('H', 2))
  def testRejectsInfiniteOrUnknown(self, family, rank):
    with self.assertRaises(ValueError):
      dynkin_types.cartan_matrix(family, rank)


class ClassifyTest(test_case.NicholsTestCase):

  @test_case.parameters(*_FINITE_TYPES)
  def testTemplatesClassifyAsThemselves(self, family, rank):
    lie_type = dynkin_types.classify(dynkin_types.cartan_matrix(family, rank))
    self.assertEqual(lie_type.name, '{}{}'.format(family, rank))
    self.assertEqual(lie_type.rank, rank)

  @test_case.parameters(*_FINITE_TYPES)
  def testPermutationInvariance(self, family, rank):
    a = dynkin_types.cartan_matrix(family, rank)
    random_state = np.random.RandomState(rank)
    for _ in range(5):
      p = random_state.permutation(rank)
      permuted = a[np.ix_(p, p)]
      self.assertEqual(
          dynkin_types.classify(permuted).name, '{}{}'.format(family, rank))

  def testTransposeIsLanglandsDual(self):
    b4 = dynkin_types.cartan_matrix('B', 4)
    self.assertEqual(dynkin_types.classify(b4.T).name, 'C4')
    g2 = dynkin_types.cartan_matrix('G', 2)
    self.assertEqual(dynkin_types.classify(g2.T).name, 'G2')

  def testProducts(self):
    a = _block_diagonal(
        dynkin_types.cartan_matrix('B', 2), dynkin_types.cartan_matrix('A', 1),
        dynkin_types.cartan_matrix('B', 2).T)
    lie_type = dynkin_types.classify(a)
    self.assertEqual(lie_type.name, 'A1xB2xB2')
    self.assertEqual(lie_type.positive_root_count(), 9)

  def testA1xA1(self):
    self.assertEqual(dynkin_types.classify(2 * np.eye(2)).name, 'A1xA1')

  def testUnclassifiable(self):
    affine_a2 = [[2, -1, -1], [-1, 2, -1], [-1, -1, 2]]
    with self.assertRaises(errors.Unclassifiable):
      dynkin_types.classify(affine_a2)
    with self.assertRaises(errors.Unclassifiable):
      dynkin_types.classify([[2, -2], [-2, 2]])

  def testRejectsNonCartan(self):
    with self.assertRaises(ValueError):
      dynkin_types.classify([[2, -1], [0, 2]])
    with self.assertRaises(ValueError):
      dynkin_types.classify([[1]])
    with self.assertRaises(ValueError):
      dynkin_types.classify(np.zeros((0, 0)))


class NamingTest(test_case.NicholsTestCase):

  @test_case.parameters(('B1', 'A1'), ('C1', 'A1'), ('C2', 'B2'), ('D3', 'A3'),
                        ('D2', 'A1xA1'), ('C2xB2', 'B2xB2'),
                        ('G2xA1', 'A1xG2'), ('ZERO', 'ZERO'))
  def testCanonicalNames(self, text, name):
    self.assertEqual(dynkin_types.parse_type(text).name, name)

  @test_case.parameters(('',), ('A',), ('Q3',), ('A1x',), ('A-1',))
  def testParseRejects(self, text):
    with self.assertRaises(errors.DecodeError):
      dynkin_types.parse_type(text)

  def testZero(self):
    self.assertTrue(dynkin_types.ZERO.is_zero)
    self.assertEqual(dynkin_types.ZERO.positive_root_count(), 0)
    self.assertNotEqual(dynkin_types.ZERO, dynkin_types.SemisimpleType([]))
    self.assertIs(pickle.loads(pickle.dumps(dynkin_types.ZERO)),
                  dynkin_types.ZERO)

  def testLanglandsDual(self):
    dual = dynkin_types.langlands_dual
    self.assertEqual(str(dual(dynkin_types.SimpleFactor('B', 3))), 'C3')
    self.assertEqual(str(dual(dynkin_types.SimpleFactor('C', 2))), 'B2')
    self.assertEqual(str(dual(dynkin_types.SimpleFactor('F', 4))), 'F4')

  @test_case.parameters((('A', 5), 15), (('B', 3), 9), (('D', 4), 12),
                        (('E', 6), 36), (('E', 8), 120), (('F', 4), 24),
                        (('G', 2), 6))
  def testPositiveRootCount(self, factor, count):
    self.assertEqual(dynkin_types.positive_root_count(factor), count)


if __name__ == '__main__':
  test_case.main()
