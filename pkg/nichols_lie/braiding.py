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
"""Braiding matrices of diagonal type and their reflections.

A `BraidingMatrix` is an immutable theta x theta grid of `UnityRoot`s.  On
construction it is validated (q_ii != 1) and its generalized Cartan entries
and Dynkin diagram are computed once, so every later query is a lookup.

Indices are 0-based in this module; user-facing code adds 1.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import collections
import math

from absl import logging
import networkx as nx
import numpy as np

from nichols_lie import cyclotomic
from nichols_lie import errors

__all__ = [
    'BraidingMatrix',
    'DynkinDiagram',
    'RestrictedBraiding',
    'from_diagram',
    'qtilde',
    'cartan_entry',
    'is_cartan_vertex',
    'reflection_matrix',
    'rho',
    'restrict',
    'FULL_FORM',
    'DIAGRAM_FORM',
]

# How a matrix was given: in full, or as a diagram completed by from_diagram.
FULL_FORM = 'matrix'
DIAGRAM_FORM = 'diagram'


class DynkinDiagram(
    collections.namedtuple('DynkinDiagram', ['vertex_labels', 'edge_labels'])):
  """The Dynkin diagram of a braiding matrix.

  Attributes:
    vertex_labels: tuple of `UnityRoot`, the labels q_ii.
    edge_labels: tuple of ((i, j), qtilde_ij) with i < j, one per edge; an edge
      is present iff qtilde_ij != 1.
  """

  __slots__ = ()

  @property
  def theta(self):
    return len(self.vertex_labels)

  def as_graph(self):
    """Returns the underlying undirected `networkx.Graph`."""
    graph = nx.Graph()
    graph.add_nodes_from(range(self.theta))
    graph.add_edges_from(edge for edge, _ in self.edge_labels)
    return graph

  @property
  def is_connected(self):
    return nx.is_connected(self.as_graph())

  def components(self):
    """Returns the vertex sets of the connected components, sorted."""
    return sorted(
        tuple(sorted(c)) for c in nx.connected_components(self.as_graph()))


class RestrictedBraiding(
    collections.namedtuple('RestrictedBraiding', ['matrix', 'indices'])):
  """A braiding matrix restricted to a subset J of the vertices.

  Attributes:
    matrix: the |J| x |J| `BraidingMatrix`.
    indices: tuple mapping each restricted index to its index in the original.
  """

  __slots__ = ()

  def lift(self, vector, theta):
    """Embeds a vector indexed by J into the rank-theta root lattice."""
    lifted = [0] * theta
    for index, value in zip(self.indices, vector):
      lifted[index] = int(value)
    return tuple(lifted)

  def project(self, vector):
    """Returns the J-coordinates of vector, or None if supp is not in J."""
    if any(v for k, v in enumerate(vector) if k not in self.indices):
      return None
    return tuple(int(vector[k]) for k in self.indices)


class BraidingMatrix(object):
  """An immutable braiding matrix of diagonal type with roots-of-unity entries.

  Two matrices are equal iff all canonical entries are equal; this is the
  deduplication rule for the objects of the Weyl groupoid.
  """

  __slots__ = ('_entries', '_level', '_exponents', '_cartan', '_diagram',
               '_reflections', '_hash')

  def __init__(self, entries):
    """Validates entries and computes the derived caches.

    Args:
      entries: a square sequence of sequences of `cyclotomic.UnityRoot`.

    Raises:
      TypeError: if an entry is not a `UnityRoot`.
      errors.ValidationError: if the grid is empty or not square, or a
        diagonal entry equals 1.
    """
    rows = tuple(tuple(row) for row in entries)
    theta = len(rows)
    if theta == 0:
      raise errors.ValidationError('a braiding matrix needs rank >= 1')
    for row in rows:
      if len(row) != theta:
        raise errors.ValidationError(
            'braiding matrix must be square, got a row of length {} in rank '
            '{}'.format(len(row), theta))
      for entry in row:
        if not isinstance(entry, cyclotomic.UnityRoot):
          raise TypeError(
              'entries must be UnityRoot, got {} of type {}'.format(
                  entry, type(entry)))
    for i in range(theta):
      if rows[i][i].is_one():
        raise errors.ValidationError(
            'q_{0}{0} = 1: the Nichols algebra is infinite-dimensional'.format(
                i + 1))
    self._entries = rows
    level = 1
    for row in rows:
      for entry in row:
        level = level * entry.den // math.gcd(level, entry.den)
    self._level = level
    self._exponents = tuple(
        tuple(entry.num * (level // entry.den) for entry in row)
        for row in rows)
    self._hash = hash(rows)
    self._cartan = tuple(
        tuple(2 if i == j else cartan_entry(self, i, j) for j in range(theta))
        for i in range(theta))
    self._diagram = _make_diagram(self)
    self._reflections = {}

  @classmethod
  def from_exponents(cls, exponents, level):
    """Builds a matrix from integer exponents over a common denominator."""
    return cls([[cyclotomic.UnityRoot(int(e), level) for e in row]
                for row in exponents])

  @property
  def theta(self):
    return len(self._entries)

  @property
  def entries(self):
    return self._entries

  @property
  def level(self):
    """The least common denominator of all entry exponents."""
    return self._level

  @property
  def exponents(self):
    """Entry exponents as integers over `level`, a tuple of tuples."""
    return self._exponents

  @property
  def cartan_entries(self):
    """The generalized Cartan matrix (c_ij) as a tuple of tuples."""
    return self._cartan

  @property
  def diagram(self):
    return self._diagram

  def entry(self, i, j):
    return self._entries[i][j]

  def __eq__(self, other):
    if not isinstance(other, BraidingMatrix):
      return NotImplemented
    return self._entries == other._entries

  def __ne__(self, other):
    result = self.__eq__(other)
    return result if result is NotImplemented else not result

  def __hash__(self):
    return self._hash

  def __repr__(self):
    return 'BraidingMatrix([{}])'.format(', '.join(
        '[{}]'.format(' '.join(str(e) for e in row)) for row in self._entries))


def _make_diagram(q):
  theta = q.theta
  edges = []
  for i in range(theta):
    for j in range(i + 1, theta):
      label = qtilde(q, i, j)
      if not label.is_one():
        edges.append(((i, j), label))
  return DynkinDiagram(
      tuple(q.entry(i, i) for i in range(theta)), tuple(edges))


def from_diagram(vertex_labels, edge_labels):
  """Completes a Dynkin diagram to a braiding matrix.

  The completion is q_ij = qtilde_ij and q_ji = 1 for i < j.  Every quantity
  except the centrality condition depends only on the diagram, so centrality
  verdicts on the result apply to this representative only.

  Args:
    vertex_labels: sequence of `UnityRoot`, q_ii.
    edge_labels: dict mapping an index pair to qtilde; missing pairs are 1.

  Returns:
    A `BraidingMatrix`.

  Raises:
    errors.ValidationError: on out-of-range or diagonal edge indices, or
      conflicting labels for the same pair.
  """
  theta = len(vertex_labels)
  rows = [[cyclotomic.ONE] * theta for _ in range(theta)]
  for i, label in enumerate(vertex_labels):
    rows[i][i] = label
  seen = {}
  for (i, j), label in sorted(edge_labels.items()):
    if not (0 <= i < theta and 0 <= j < theta) or i == j:
      raise errors.ValidationError(
          'invalid edge ({}, {}) in rank {}'.format(i + 1, j + 1, theta))
    key = (min(i, j), max(i, j))
    if key in seen and seen[key] != label:
      raise errors.ValidationError(
          'conflicting labels for edge ({}, {})'.format(key[0] + 1, key[1] + 1))
    seen[key] = label
    rows[key[0]][key[1]] = label
  q = BraidingMatrix(rows)
  if not q.diagram.is_connected:
    logging.warning('Dynkin diagram is disconnected; components: %s',
                    q.diagram.components())
  return q


def qtilde(q, i, j):
  """Returns qtilde_ij = q_ij q_ji."""
  return cyclotomic.times(q.entry(i, j), q.entry(j, i))


def cartan_entry(q, i, j):
  """Computes the generalized Cartan entry c_ij, i != j.

  c_ij = -min{n >= 0 : (n+1)_{q_ii} (1 - q_ii^n qtilde_ij) = 0}.  Since
  q_ii != 1, the first factor vanishes exactly at n = ord(q_ii) - 1, which
  bounds the search.

  Args:
    q: a `BraidingMatrix`.
    i: row index.
    j: column index, different from i.

  Returns:
    The non-positive integer c_ij.
  """
  if i == j:
    raise ValueError('cartan_entry needs i != j, got {}'.format(i))
  q_ii = q.entry(i, i)
  target = qtilde(q, i, j)
  last = cyclotomic.order(q_ii) - 1
  for n in range(last):
    if cyclotomic.times(cyclotomic.power(q_ii, n), target).is_one():
      return -n
  return -last


def is_cartan_vertex(q, i):
  """True iff qtilde_ij = q_ii^{c_ij} for every j != i."""
  q_ii = q.entry(i, i)
  return all(
      qtilde(q, i, j) == cyclotomic.power(q_ii, q.cartan_entries[i][j])
      for j in range(q.theta) if j != i)


def reflection_matrix(q, i):
  """Returns the integer matrix of s_i: column j is alpha_j - c_ij alpha_i.

  The result is cached on `q` and must not be mutated.
  """
  cached = q._reflections.get(i)  # pylint: disable=protected-access
  if cached is None:
    cached = np.eye(q.theta, dtype=np.int64)
    cached[i, :] -= np.asarray(q.cartan_entries[i], dtype=np.int64)
    cached.setflags(write=False)
    q._reflections[i] = cached  # pylint: disable=protected-access
  return cached


def rho(q, i):
  """Computes rho_i(q)_jk = q(s_i(alpha_j), s_i(alpha_k)).

  Args:
    q: a `BraidingMatrix`.
    i: the reflecting index.

  Returns:
    The reflected `BraidingMatrix`.

  Raises:
    errors.ValidationError: if a diagonal entry of the result equals 1.
  """
  s = reflection_matrix(q, i).astype(object)
  exponents = np.array(q.exponents, dtype=object)
  reflected = s.T.dot(exponents).dot(s) % q.level
  return BraidingMatrix.from_exponents(reflected.tolist(), q.level)


def restrict(q, indices):
  """Restricts q to the vertex subset J.

  Args:
    q: a `BraidingMatrix`.
    indices: a nonempty iterable of vertex indices.

  Returns:
    A `RestrictedBraiding` with the submatrix and the sorted index map.

  Raises:
    errors.ValidationError: if J is empty or out of range.
  """
  indices = tuple(sorted(set(indices)))
  if not indices:
    raise errors.ValidationError('restriction needs a nonempty index set')
  if indices[0] < 0 or indices[-1] >= q.theta:
    raise errors.ValidationError(
        'restriction indices out of range for rank {}'.format(q.theta))
  matrix = BraidingMatrix([[q.entry(j, k) for k in indices] for j in indices])
  return RestrictedBraiding(matrix, indices)
