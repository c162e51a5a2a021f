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
"""Tests for nichols_lie.groupoid."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import itertools

import numpy as np

from nichols_lie import braiding
from nichols_lie import errors
from nichols_lie import groupoid
from nichols_lie import test_case
from nichols_lie.catalog import generators


def _a01():
  return test_case.path_diagram(['1/2', '1/3'], ['2/3'])


def _ufo3():
  return test_case.path_diagram(['1/2', '1/3', '5/6'], ['2/3', '1/6'])


def _g26():
  return test_case.path_diagram(['1/3', '1/3', '1/2', '1/3', '1/3'],
                                ['2/3'] * 4)


def _positive_root_set(atlas, start_object=0):
  word = groupoid.longest_word(atlas, start_object=start_object)
  return groupoid.positive_roots(atlas, word).as_set()


class GroupoidAtlasTest(test_case.NicholsTestCase):

  def testSymmetricCartanTypeHasOneObject(self):
    atlas = groupoid.explore(generators.cartan_type_braiding('B', 3, 5))
    self.assertEqual(atlas.size, 1)
    self.assertTrue(atlas.is_closed)
    self.assertEqual(atlas.edges(), [(0, 0, 0), (0, 1, 0), (0, 2, 0)])

  @test_case.named_parameters(
      dict(testcase_name='a01', make=_a01, size=6),
      dict(testcase_name='ufo3', make=_ufo3, size=60),
      dict(testcase_name='g26', make=_g26, size=2160),
  )
  def testClosureSize(self, make, size):
    self.assertEqual(groupoid.explore(make()).size, size)

  def testTraversalOrderDoesNotChangeObjects(self):
    breadth = groupoid.explore(_ufo3(), order=groupoid.BREADTH_FIRST)
    depth = groupoid.explore(_ufo3(), order=groupoid.DEPTH_FIRST)
    self.assertEqual(set(breadth.objects), set(depth.objects))
    self.assertEqual(len(breadth.edges()), len(depth.edges()))

  def testEdgesAreInvolutive(self):
    atlas = groupoid.explore(_ufo3())
    edges = {(source, i): target for source, i, target in atlas.edges()}
    self.assertLen(edges, atlas.size * atlas.theta)
    for (source, i), target in edges.items():
      self.assertEqual(edges[(target, i)], source)
      self.assertEqual(
          braiding.rho(atlas.matrix(source), i), atlas.matrix(target))

  def testObjectIds(self):
    atlas = groupoid.GroupoidAtlas(_a01())
    target = atlas.edge(0, 0)
    self.assertEqual(target, 1)
    self.assertEqual(atlas.object_id(braiding.rho(_a01(), 0)), 1)
    self.assertIsNone(atlas.object_id(_ufo3()))
    self.assertFalse(atlas.is_closed)

  def testBound(self):
    with self.assertRaises(errors.BoundExceeded) as raised:
      groupoid.explore(_a01(), max_objects=5)
    self.assertEqual(raised.exception.bound, 5)
    with self.assertRaises(errors.BoundExceeded):
      groupoid.GroupoidAtlas(_a01(), max_objects=0)

  def testRejectsUnknownOrder(self):
    with self.assertRaises(ValueError):
      groupoid.explore(_a01(), order='sideways')


class LongestWordTest(test_case.NicholsTestCase):

  def testA01(self):
    atlas = groupoid.GroupoidAtlas(_a01())
    word = groupoid.longest_word(atlas)
    self.assertEqual(word.letters, (0, 1, 0))
    self.assertEqual(word.objects[0], 0)
    self.assertEqual(atlas.size, 4)
    roots = groupoid.positive_roots(atlas, word)
    self.assertEqual(roots.roots, ((1, 0), (1, 1), (0, 1)))
    self.assertEqual(roots.witnesses[2].prefix, (0, 1, 0))
    self.assertEqual(roots.witnesses[2].letter, 0)

  def testUfo3(self):
    atlas = groupoid.GroupoidAtlas(_ufo3())
    word = groupoid.longest_word(atlas)
    self.assertEqual(word.letters, (0, 1, 0, 2, 0, 1, 2, 1, 0, 2))
    self.assertEqual(atlas.size, 11)

  def testAcceptsMatrix(self):
    self.assertLen(groupoid.longest_word(_g26()), 25)

  @test_case.named_parameters(
      dict(testcase_name='a01', make=_a01),
      dict(testcase_name='ufo3', make=_ufo3),
      dict(testcase_name='g26', make=_g26),
  )
  def testRootsArePositiveAndDistinct(self, make):
    atlas = groupoid.GroupoidAtlas(make())
    roots = groupoid.positive_roots(atlas, groupoid.longest_word(atlas))
    self.assertLen(roots.as_set(), len(roots))
    for beta in roots.roots:
      self.assertGreaterEqual(min(beta), 0)
    for i in range(atlas.theta):
      simple = tuple(int(i == j) for j in range(atlas.theta))
      self.assertIn(simple, roots.as_set())

  @test_case.parameters((0,), (1,), (2,))
  def testRootSetDoesNotDependOnFirstLetter(self, first_letter):
    atlas = groupoid.GroupoidAtlas(_ufo3())
    reference = groupoid.positive_roots(atlas, groupoid.longest_word(atlas))
    word = groupoid.longest_word(atlas, first_letter=first_letter)
    self.assertEqual(word.letters[0], first_letter)
    self.assertEqual(
        groupoid.positive_roots(atlas, word).as_set(), reference.as_set())

  @test_case.named_parameters(*test_case.fixture_parameters())
  def testRootsTransformAlongEdges(self, fixture):
    # Delta_+ at rho_i(q) is s_i(Delta_+ at q minus alpha_i) plus alpha_i.
    atlas = self.ExploreOrSkip(fixture)
    root_sets = [_positive_root_set(atlas, o) for o in range(atlas.size)]
    for source, i, target in atlas.edges():
      s = atlas.reflection(source, i)
      simple = tuple(int(i == j) for j in range(atlas.theta))
      image = set(
          tuple(int(x) for x in s.dot(np.asarray(beta)))
          for beta in root_sets[source] if beta != simple)
      image.add(simple)
      self.assertEqual(image, set(root_sets[target]),
                       msg='edge {} -{}-> {}'.format(source, i, target))

  @test_case.named_parameters(*test_case.fixture_parameters())
  def testRestrictionKeepsRootsSupportedOnJ(self, fixture):
    q = fixture.matrix
    roots = _positive_root_set(groupoid.GroupoidAtlas(q))
    for pair in itertools.combinations(range(q.theta), 2):
      restricted = braiding.restrict(q, pair)
      lifted = frozenset(
          restricted.lift(beta, q.theta) for beta in _positive_root_set(
              groupoid.GroupoidAtlas(restricted.matrix)))
      supported = frozenset(
          beta for beta in roots if restricted.project(beta) is not None)
      self.assertEqual(lifted, supported, msg='J={}'.format(pair))

  def testMaxLength(self):
    q = generators.cartan_type_braiding('A', 2, 3)
    with self.assertRaises(errors.BoundExceeded):
      groupoid.longest_word(q, max_length=1)
    self.assertLen(groupoid.longest_word(q, max_length=3), 3)

  def testFirstLetterOutOfRange(self):
    with self.assertRaises(ValueError):
      groupoid.longest_word(_a01(), first_letter=2)


class ReducedWordTest(test_case.NicholsTestCase):

  def testValidation(self):
    with self.assertRaises(ValueError):
      groupoid.ReducedWord((0, 1), 0, (0,))
    with self.assertRaises(ValueError):
      groupoid.ReducedWord((0,), 1, (0,))

  def testNonReducedWordIsDetected(self):
    atlas = groupoid.GroupoidAtlas(_a01())
    word = groupoid.ReducedWord((0, 0), 0, (0, atlas.edge(0, 0)))
    with self.assertRaises(errors.InternalInconsistency):
      groupoid.positive_roots(atlas, word)


if __name__ == '__main__':
  test_case.main()
