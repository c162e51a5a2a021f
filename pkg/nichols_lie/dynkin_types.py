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
"""Finite-type Cartan matrices and recognition of semisimple types.

Cartan matrices follow the convention a_ij = -2 (or -3) when alpha_i is the
short root of the bond, so B_n has a_{n,n-1} = -2 and C_n has a_{n-1,n} = -2
with Bourbaki numbering.  Recognition splits a matrix into connected
components and matches each against the templates of its rank by labelled
directed-graph isomorphism.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import collections

import networkx as nx
import numpy as np

from nichols_lie import errors

__all__ = [
    'SimpleFactor',
    'SemisimpleType',
    'ZERO',
    'cartan_matrix',
    'canonical_factor',
    'langlands_dual',
    'positive_root_count',
    'parse_type',
    'classify',
]

FAMILIES = 'ABCDEFG'


class SimpleFactor(collections.namedtuple('SimpleFactor', ['family', 'rank'])):
  """A simple Lie type such as ('B', 3)."""

  __slots__ = ()

  def __new__(cls, family, rank):
    if family not in FAMILIES or len(family) != 1:
      raise ValueError('unknown family {!r}'.format(family))
    if rank < 1:
      raise ValueError('rank must be positive, got {}'.format(rank))
    return super(SimpleFactor, cls).__new__(cls, family, int(rank))

  def __str__(self):
    return '{}{}'.format(self.family, self.rank)


class SemisimpleType(collections.namedtuple('SemisimpleType', ['factors'])):
  """A product of simple types, stored sorted in canonical names.

  The zero Lie algebra is the distinct value `ZERO`, never an empty product.
  """

  __slots__ = ()

  def __new__(cls, factors):
    factors = tuple(sorted(canonical_factor(f) for f in factors))
    return super(SemisimpleType, cls).__new__(cls, factors)

  @property
  def is_zero(self):
    return False

  @property
  def rank(self):
    return sum(f.rank for f in self.factors)

  @property
  def name(self):
    return 'x'.join(str(f) for f in self.factors)

  def positive_root_count(self):
    return sum(positive_root_count(f) for f in self.factors)

  def __str__(self):
    return self.name


class _ZeroType(object):
  """The type of the zero Lie algebra."""

  __slots__ = ()
  is_zero = True
  rank = 0
  name = 'ZERO'
  factors = ()

  def positive_root_count(self):
    return 0

  def __repr__(self):
    return 'ZERO'

  __str__ = __repr__

  def __reduce__(self):
    return 'ZERO'


ZERO = _ZeroType()


def canonical_factor(factor):
  """Renames low-rank coincidences: B1, C1 -> A1; C2 -> B2; D3 -> A3.

  D2 is not a simple type; use `canonical_factors` for it.
  """
  family, rank = factor
  if family in 'BC' and rank == 1:
    return SimpleFactor('A', 1)
  if family == 'C' and rank == 2:
    return SimpleFactor('B', 2)
  if family == 'D' and rank == 3:
    return SimpleFactor('A', 3)
  if family == 'D' and rank < 3:
    raise ValueError('D{} is not simple'.format(rank))
  return SimpleFactor(family, rank)


def canonical_factors(family, rank):
  """Like `canonical_factor` but also splits D2 into A1 x A1."""
  if family == 'D' and rank == 2:
    return [SimpleFactor('A', 1), SimpleFactor('A', 1)]
  return [canonical_factor(SimpleFactor(family, rank))]


def langlands_dual(factor):
  """Exchanges long and short roots: B <-> C, others unchanged."""
  family, rank = factor
  swapped = {'B': 'C', 'C': 'B'}.get(family, family)
  return canonical_factor(SimpleFactor(swapped, rank))


def positive_root_count(factor):
  family, n = factor
  if family == 'A':
    return n * (n + 1) // 2
  if family in 'BC':
    return n * n
  if family == 'D':
    return n * (n - 1)
  return {('E', 6): 36, ('E', 7): 63, ('E', 8): 120, ('F', 4): 24,
          ('G', 2): 6}[(family, n)]


def parse_type(text):
  """Parses 'A5', 'C2xB2' or 'ZERO'.

  Raises:
    errors.DecodeError: on malformed names.
  """
  text = text.strip()
  if text == 'ZERO':
    return ZERO
  factors = []
  for part in text.split('x'):
    if len(part) < 2 or part[0] not in FAMILIES or not part[1:].isdigit():
      raise errors.DecodeError('bad Lie type {!r}'.format(text))
    factors.extend(canonical_factors(part[0], int(part[1:])))
  return SemisimpleType(factors)


def cartan_matrix(family, rank):
  """The Cartan matrix of a finite type in Bourbaki numbering.

  Args:
    family: one of 'ABCDEFG'.
    rank: the rank; B, C need rank >= 2, D rank >= 4, E rank 6-8, F rank 4,
      G rank 2.

  Returns:
    A numpy int64 array.

  Raises:
    ValueError: if (family, rank) is not a finite type.
  """
  n = rank
  valid = {
      'A': n >= 1, 'B': n >= 2, 'C': n >= 2, 'D': n >= 4,
      'E': n in (6, 7, 8), 'F': n == 4, 'G': n == 2,
  }
  if family not in valid or not valid[family]:
    raise ValueError('{}{} is not a finite Cartan type'.format(family, rank))
  a = 2 * np.eye(n, dtype=np.int64)

  def bond(i, j):
    a[i, j] = a[j, i] = -1

  if family in 'ABCF':
    for i in range(n - 1):
      bond(i, i + 1)
    if family == 'B':
      a[n - 1, n - 2] = -2
    elif family == 'C':
      a[n - 2, n - 1] = -2
    elif family == 'F':
      a[2, 1] = -2
  elif family == 'D':
    for i in range(n - 2):
      bond(i, i + 1)
    bond(n - 3, n - 1)
  elif family == 'E':
    bond(0, 2)
    bond(1, 3)
    for i in range(2, n - 1):
      bond(i, i + 1)
  else:
    bond(0, 1)
    a[0, 1] = -3
  return a


def _as_digraph(a, nodes):
  graph = nx.DiGraph()
  graph.add_nodes_from(range(len(nodes)))
  for x, i in enumerate(nodes):
    for y, j in enumerate(nodes):
      if i != j and a[i][j]:
        graph.add_edge(x, y, a=int(a[i][j]))
  return graph


def _candidates(rank):
  """Templates of a given rank, in canonical-name preference order."""
  names = [('A', rank)]
  if rank >= 2:
    names += [('B', rank)]
  if rank >= 3:
    names += [('C', rank)]
  if rank >= 4:
    names += [('D', rank)]
  if rank in (6, 7, 8):
    names += [('E', rank)]
  if rank == 4:
    names += [('F', 4)]
  if rank == 2:
    names += [('G', 2)]
  return names


def _edge_match(first, second):
  return first['a'] == second['a']


def classify(a):
  """Classifies a Cartan matrix as a product of finite simple types.

  Args:
    a: a square integer matrix with a_ii = 2, a_ij <= 0 and
      a_ij = 0 iff a_ji = 0.

  Returns:
    A `SemisimpleType`.

  Raises:
    errors.Unclassifiable: if a component matches no template or the
      positive-root count check fails.
    ValueError: if a is not a generalized Cartan matrix.
  """
  a = np.asarray(a, dtype=np.int64)
  n = a.shape[0]
  if a.shape != (n, n) or n == 0:
    raise ValueError('expected a nonempty square matrix, got shape {}'.format(
        a.shape))
  for i in range(n):
    if a[i, i] != 2:
      raise ValueError('a[{0}][{0}] must be 2'.format(i))
    for j in range(n):
      if i != j and (a[i, j] > 0 or bool(a[i, j]) != bool(a[j, i])):
        raise ValueError('not a generalized Cartan matrix at ({}, {})'.format(
            i, j))
  support = nx.Graph()
  support.add_nodes_from(range(n))
  support.add_edges_from(
      (i, j) for i in range(n) for j in range(i + 1, n) if a[i, j])
  factors = []
  for component in nx.connected_components(support):
    nodes = sorted(component)
    graph = _as_digraph(a, nodes)
    for family, rank in _candidates(len(nodes)):
      template = _as_digraph(cartan_matrix(family, rank), range(rank))
      if nx.is_isomorphic(graph, template, edge_match=_edge_match):
        factors.append(canonical_factor(SimpleFactor(family, rank)))
        break
    else:
      raise errors.Unclassifiable(
          'component {} with matrix {} is not of finite type'.format(
              [k + 1 for k in nodes], a[np.ix_(nodes, nodes)].tolist()))
  return SemisimpleType(factors)
