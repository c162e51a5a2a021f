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
"""Braiding matrices of Cartan and super type B at a root of unity q.

Exponents are written relative to q = exp(2 pi i / N), i.e. q^a is the
`UnityRoot` a/N.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import fractions
import math

from nichols_lie import braiding
from nichols_lie import cyclotomic
from nichols_lie import dynkin_types

__all__ = [
    'symmetrizer',
    'cartan_type_braiding',
    'expected_cartan_type',
    'super_b_braiding',
    'expected_super_b_type',
]


def symmetrizer(a):
  """Returns d with d_i a_ij = d_j a_ji and d_i = 1 on short roots.

  Args:
    a: a connected finite Cartan matrix as a square integer array.
  """
  n = len(a)
  d = [None] * n
  d[0] = fractions.Fraction(1)
  pending = [0]
  while pending:
    i = pending.pop()
    for j in range(n):
      if j != i and a[i][j] and d[j] is None:
        d[j] = d[i] * fractions.Fraction(int(a[i][j]), int(a[j][i]))
        pending.append(j)
  smallest = min(d)
  return [int(x / smallest) for x in d]


def _check_order(family, order):
  if order < 2:
    raise ValueError('order must be at least 2, got {}'.format(order))
  if family in 'BCF' and order in (2, 4):
    raise ValueError('{} needs order N != 2, 4'.format(family))
  if family == 'G' and order < 4:
    raise ValueError('G needs order N >= 4')


def _half_power(x, order):
  """A square root of q^x; inside mu_N when possible."""
  if x % 2 == 0:
    return cyclotomic.UnityRoot(x // 2, order)
  if order % 2:
    return cyclotomic.UnityRoot(x * (order + 1) // 2, order)
  return cyclotomic.UnityRoot(x, 2 * order)


def cartan_type_braiding(family, rank, order):
  """The symmetric Cartan-type braiding of a finite Cartan matrix.

  q_ii = q^{d_i} and q_ij = q_ji with q_ij^2 = q^{d_i a_ij}.  Symmetric
  entries make every rho_i fix the matrix, so the groupoid has one object.

  Args:
    family: one of 'ABCDEFG'.
    rank: the rank of the Cartan matrix.
    order: N, the order of q.

  Returns:
    A `braiding.BraidingMatrix`.

  Raises:
    ValueError: if the type or the order is not admissible.
  """
  _check_order(family, order)
  a = dynkin_types.cartan_matrix(family, rank)
  d = symmetrizer(a)
  rows = []
  for i in range(rank):
    row = []
    for j in range(rank):
      if i == j:
        row.append(cyclotomic.UnityRoot(d[i], order))
      else:
        row.append(_half_power(d[i] * int(a[i][j]), order))
    rows.append(row)
  return braiding.BraidingMatrix(rows)


def expected_cartan_type(family, rank, order):
  """The type of the scaled root system of `cartan_type_braiding`.

  It is the type of the Cartan matrix when N is coprime to every entry, and
  that of its Langlands dual otherwise.
  """
  a = dynkin_types.cartan_matrix(family, rank)
  coprime = all(
      math.gcd(order, int(x)) == 1 for x in a.flatten() if x and x != 2)
  factor = dynkin_types.SimpleFactor(family, rank)
  if not coprime:
    factor = dynkin_types.langlands_dual(factor)
  return dynkin_types.SemisimpleType([factor])


def super_b_braiding(k, theta, order):
  """A braiding of super type B(k|theta-k) in diagram form.

  Vertices are q^-2 before k, -1 at k, q^2 after k and q at theta; the edges
  are q^2 up to vertex k and q^-2 from there on.  Indices are 1-based.

  Raises:
    ValueError: unless 1 <= k < theta and N >= 3, N != 4.
  """
  if not 1 <= k < theta:
    raise ValueError('need 1 <= k < theta, got k={} theta={}'.format(
        k, theta))
  if order < 3 or order == 4:
    raise ValueError('super type B needs N >= 3, N != 4, got {}'.format(order))
  vertices = []
  for i in range(1, theta + 1):
    if i == theta:
      vertices.append(cyclotomic.UnityRoot(1, order))
    elif i < k:
      vertices.append(cyclotomic.UnityRoot(-2, order))
    elif i == k:
      vertices.append(cyclotomic.UnityRoot(1, 2))
    else:
      vertices.append(cyclotomic.UnityRoot(2, order))
  edges = {(i - 1, i): cyclotomic.UnityRoot(2 if i < k else -2, order)
           for i in range(1, theta)}
  return braiding.from_diagram(vertices, edges)


def expected_super_b_type(k, theta, order):
  """The type `super_b_braiding(k, theta, order)` classifies as.

  C_k x B_{theta-k} for N odd and C_k x C_{theta-k} for N = 0 mod 4.  The
  roots alpha_i + ... + alpha_theta with i <= k scale by the order of
  -q^-1, which is N/2 when N = 2 mod 4; they stop being the long roots of
  the first factor, which becomes B_k.
  """
  first = 'B' if order % 4 == 2 else 'C'
  second = 'B' if order % 2 else 'C'
  factors = dynkin_types.canonical_factors(first, k)
  factors += dynkin_types.canonical_factors(second, theta - k)
  return dynkin_types.SemisimpleType(factors)
