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
"""The Weyl groupoid of a braiding matrix: objects, longest word, roots.

The object set X is the orbit of q under the transforms rho_i.  A
`GroupoidAtlas` holds the part of X discovered so far and grows on demand, so
that a reduced word of the longest element only materializes the objects it
passes through.  `explore` forces the full closure.

Positive roots are read off a reduced word w0 = s_{i_1} ... s_{i_M} as
beta_j = s_{i_1} ... s_{i_{j-1}}(alpha_{i_j}), where each s is the reflection
at the object reached by the preceding letters.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import collections

from absl import logging
import numpy as np

from nichols_lie import braiding
from nichols_lie import errors

__all__ = [
    'DEFAULT_MAX_OBJECTS',
    'DEFAULT_MAX_ROOTS',
    'GroupoidAtlas',
    'ReducedWord',
    'RootWitness',
    'PositiveRoots',
    'explore',
    'longest_word',
    'positive_roots',
]

DEFAULT_MAX_OBJECTS = 100000
DEFAULT_MAX_ROOTS = 10000

BREADTH_FIRST = 'breadth'
DEPTH_FIRST = 'depth'


class GroupoidAtlas(object):
  """The objects of the Weyl groupoid reachable from a start matrix.

  Object 0 is the start matrix.  Objects are deduplicated by exact matrix
  equality and numbered in order of discovery.
  """

  def __init__(self, q, max_objects=DEFAULT_MAX_OBJECTS):
    """Creates an atlas holding only q.

    Args:
      q: the start `braiding.BraidingMatrix`.
      max_objects: the largest number of objects the atlas may hold.

    Raises:
      errors.BoundExceeded: if max_objects < 1.
    """
    if not isinstance(q, braiding.BraidingMatrix):
      raise TypeError('q must be a BraidingMatrix, got {}'.format(type(q)))
    if max_objects < 1:
      raise errors.BoundExceeded(max_objects, 'groupoid objects')
    self._max_objects = max_objects
    self._objects = [q]
    self._ids = {q: 0}
    self._edges = {}

  @property
  def theta(self):
    return self._objects[0].theta

  @property
  def size(self):
    return len(self._objects)

  @property
  def objects(self):
    return tuple(self._objects)

  @property
  def is_closed(self):
    return len(self._edges) == self.size * self.theta

  def matrix(self, object_id):
    return self._objects[object_id]

  def object_id(self, q):
    """Returns the id of a known object, or None."""
    return self._ids.get(q)

  def reflection(self, object_id, i):
    """The integer matrix of s_i at the given object."""
    return braiding.reflection_matrix(self._objects[object_id], i)

  def edge(self, object_id, i):
    """Returns the id of rho_i(object), materializing it if new.

    Raises:
      errors.BoundExceeded: if a new object would exceed max_objects.
      errors.ValidationError: if rho_i produces a diagonal entry 1.
    """
    key = (object_id, i)
    target = self._edges.get(key)
    if target is None:
      reflected = braiding.rho(self._objects[object_id], i)
      target = self._ids.get(reflected)
      if target is None:
        if len(self._objects) >= self._max_objects:
          raise errors.BoundExceeded(self._max_objects, 'groupoid objects')
        target = len(self._objects)
        self._objects.append(reflected)
        self._ids[reflected] = target
      self._edges[key] = target
      # rho_i is an involution, so the reverse edge comes for free.
      self._edges.setdefault((target, i), object_id)
    return target

  def edges(self):
    """Returns the known edges as a sorted list of (source, i, target)."""
    return sorted((o, i, t) for (o, i), t in self._edges.items())

  def close(self, order=BREADTH_FIRST):
    """Materializes every object and edge reachable from object 0.

    Args:
      order: BREADTH_FIRST or DEPTH_FIRST traversal.

    Returns:
      self.

    Raises:
      errors.BoundExceeded: if the closure exceeds max_objects.
    """
    if order not in (BREADTH_FIRST, DEPTH_FIRST):
      raise ValueError('unknown traversal order {!r}'.format(order))
    pending = collections.deque([0])
    visited = {0}
    while pending:
      current = pending.popleft() if order == BREADTH_FIRST else pending.pop()
      for i in range(self.theta):
        target = self.edge(current, i)
        if target not in visited:
          visited.add(target)
          pending.append(target)
    logging.info('Closed groupoid atlas with %d objects', self.size)
    return self


def explore(q, max_objects=DEFAULT_MAX_OBJECTS, order=BREADTH_FIRST):
  """Computes the object set X of q with all edges.

  Args:
    q: a validated `braiding.BraidingMatrix`.
    max_objects: bound on |X|.
    order: BREADTH_FIRST or DEPTH_FIRST.

  Returns:
    A closed `GroupoidAtlas`.

  Raises:
    errors.BoundExceeded: if |X| > max_objects.
  """
  return GroupoidAtlas(q, max_objects).close(order)


class ReducedWord(
    collections.namedtuple('ReducedWord', ['letters', 'start_object',
                                           'objects'])):
  """A reduced expression of the longest element.

  Attributes:
    letters: tuple of indices i_1, ..., i_M.
    start_object: id of the object the word starts from.
    objects: tuple of object ids; objects[j] is the object reached after the
      letters i_1, ..., i_j, so objects[0] == start_object.
  """

  __slots__ = ()

  def __new__(cls, letters, start_object, objects):
    letters = tuple(int(i) for i in letters)
    objects = tuple(int(o) for o in objects)
    if len(objects) != len(letters):
      raise ValueError('need one object per letter, got {} and {}'.format(
          len(objects), len(letters)))
    if objects and objects[0] != start_object:
      raise ValueError('objects must begin at the start object')
    return super(ReducedWord, cls).__new__(cls, letters, start_object, objects)

  def __len__(self):
    return len(self.letters)


class RootWitness(
    collections.namedtuple('RootWitness', ['prefix', 'object_id'])):
  """How a positive root was reached.

  Attributes:
    prefix: the letters (i_1, ..., i_j); the root is
      s_{i_1} ... s_{i_{j-1}}(alpha_{i_j}).
    object_id: the object at which i_j is applied, i.e. rho_{i_{j-1}} ...
      rho_{i_1} of the start object.
  """

  __slots__ = ()

  @property
  def letter(self):
    return self.prefix[-1]


class PositiveRoots(
    collections.namedtuple('PositiveRoots', ['roots', 'witnesses'])):
  """The positive roots in the convex order of a reduced word.

  Attributes:
    roots: tuple of integer tuples beta_1, ..., beta_M.
    witnesses: tuple of `RootWitness`, one per root.
  """

  __slots__ = ()

  def __len__(self):
    return len(self.roots)

  def as_set(self):
    return frozenset(self.roots)


def _column(t, i):
  return tuple(int(x) for x in t[:, i])


def longest_word(atlas, max_length=DEFAULT_MAX_ROOTS, first_letter=None,
                 start_object=0):
  """Builds a reduced expression of w0 greedily.

  With t = s_{i_1} ... s_{i_k} accumulated so far, the next letter is the
  smallest i (or `first_letter` at step 0) with t(alpha_i) >= 0.  The word is
  complete when every t(alpha_i) is negative.

  Args:
    atlas: a `GroupoidAtlas`, or a `braiding.BraidingMatrix` to wrap in one.
    max_length: bound on the word length.
    first_letter: optional index seeding i_1.
    start_object: id of the object to start from.

  Returns:
    A `ReducedWord`.

  Raises:
    errors.BoundExceeded: if the word grows longer than max_length.
    ValueError: if first_letter is out of range.
  """
  if isinstance(atlas, braiding.BraidingMatrix):
    atlas = GroupoidAtlas(atlas)
  theta = atlas.theta
  if first_letter is not None and not 0 <= first_letter < theta:
    raise ValueError('first_letter {} out of range for rank {}'.format(
        first_letter, theta))
  t = np.eye(theta, dtype=np.int64)
  current = start_object
  letters = []
  objects = []
  while True:
    if not letters and first_letter is not None:
      candidates = [first_letter]
    else:
      candidates = range(theta)
    chosen = None
    for i in candidates:
      if (t[:, i] >= 0).all():
        chosen = i
        break
    if chosen is None:
      break
    if len(letters) >= max_length:
      raise errors.BoundExceeded(max_length, 'positive roots')
    letters.append(chosen)
    objects.append(current)
    t = t.dot(atlas.reflection(current, chosen))
    current = atlas.edge(current, chosen)
  logging.info('Longest word of length %d from object %d', len(letters),
               start_object)
  return ReducedWord(letters, start_object, objects)


def positive_roots(atlas, word):
  """Enumerates beta_j = s_{i_1} ... s_{i_{j-1}}(alpha_{i_j}).

  Args:
    atlas: the `GroupoidAtlas` the word was built on.
    word: a `ReducedWord`.

  Returns:
    `PositiveRoots` with one witness per root.

  Raises:
    errors.InternalInconsistency: if a root has a negative coordinate or
      repeats, i.e. the word is not reduced.
  """
  theta = atlas.theta
  t = np.eye(theta, dtype=np.int64)
  roots = []
  witnesses = []
  seen = set()
  for j, (letter, object_id) in enumerate(zip(word.letters, word.objects)):
    beta = _column(t, letter)
    if min(beta) < 0 or not any(beta):
      raise errors.InternalInconsistency(
          'root {} at position {} is not positive'.format(beta, j + 1))
    if beta in seen:
      raise errors.InternalInconsistency(
          'root {} repeats at position {}'.format(beta, j + 1))
    seen.add(beta)
    roots.append(beta)
    witnesses.append(RootWitness(word.letters[:j + 1], object_id))
    t = t.dot(atlas.reflection(object_id, letter))
  return PositiveRoots(tuple(roots), tuple(witnesses))
