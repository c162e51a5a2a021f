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
"""Cartan roots, their orders, and the centrality condition on them."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import collections

from absl import logging

from nichols_lie import braiding
from nichols_lie import cyclotomic
from nichols_lie import errors

__all__ = [
    'INFINITE',
    'HOLDS',
    'VIOLATED',
    'UNKNOWN',
    'RootDatum',
    'Condition31',
    'cartan_roots',
    'cartan_subset',
    'check_31',
    'check_scaling_injective',
]

HOLDS = 'HOLDS'
VIOLATED = 'VIOLATED'
UNKNOWN = 'UNKNOWN'


class _Infinite(object):
  """Marker for the order of a Cartan root's non-truncated power."""

  __slots__ = ()

  def __repr__(self):
    return 'INFINITE'

  __str__ = __repr__

  def __reduce__(self):
    return 'INFINITE'


INFINITE = _Infinite()


class RootDatum(
    collections.namedtuple(
        'RootDatum', ['beta', 'n_beta', 'n_tilde', 'is_cartan', 'witness'])):
  """A positive root with its orders and Cartan flag.

  Attributes:
    beta: the root as an integer tuple.
    n_beta: the order of q(beta, beta).
    n_tilde: INFINITE for a Cartan root, otherwise n_beta.
    is_cartan: whether beta is a Cartan root.
    witness: the `groupoid.RootWitness` that reached beta.
  """

  __slots__ = ()

  def __new__(cls, beta, n_beta, n_tilde, is_cartan, witness):
    if (n_tilde is INFINITE) != bool(is_cartan):
      raise ValueError(
          'n_tilde must be INFINITE exactly for Cartan roots, got {} for '
          'is_cartan={}'.format(n_tilde, is_cartan))
    return super(RootDatum, cls).__new__(
        cls, tuple(int(x) for x in beta), int(n_beta), n_tilde,
        bool(is_cartan), witness)

  @property
  def scaled(self):
    """The scaled root N_beta * beta."""
    return tuple(self.n_beta * x for x in self.beta)


class Condition31(collections.namedtuple('Condition31', ['status', 'witness'])):
  """Verdict of q(alpha, beta)^{N_beta} = 1 over all Cartan roots.

  Attributes:
    status: HOLDS, VIOLATED or UNKNOWN.
    witness: for VIOLATED, the first failing pair (alpha, beta) of Cartan
      roots; otherwise None.
  """

  __slots__ = ()

  @property
  def holds(self):
    return self.status == HOLDS


def cartan_roots(q, roots, atlas):
  """Computes a `RootDatum` for every positive root.

  beta_j is a Cartan root iff i_j is a Cartan vertex of the object its
  witness reaches.  N_beta is the order of q(beta, beta).

  Args:
    q: the `braiding.BraidingMatrix` the roots belong to.
    roots: `groupoid.PositiveRoots` enumerated over atlas.
    atlas: the `groupoid.GroupoidAtlas` holding the witness objects.

  Returns:
    A list of `RootDatum` in the order of roots.
  """
  data = []
  for beta, witness in zip(roots.roots, roots.witnesses):
    is_cartan = braiding.is_cartan_vertex(
        atlas.matrix(witness.object_id), witness.letter)
    n_beta = cyclotomic.order(cyclotomic.bilinear_form(q, beta, beta))
    data.append(
        RootDatum(beta, n_beta, INFINITE if is_cartan else n_beta, is_cartan,
                  witness))
  return data


def cartan_subset(data):
  """The Cartan roots D_+ among the given data, in order."""
  return [datum for datum in data if datum.is_cartan]


def check_31(q, cartan):
  """Checks q(alpha, beta)^{N_beta} = 1 for all Cartan roots alpha, beta.

  By bilinearity, pairs of positive representatives cover all signs.

  Args:
    q: the `braiding.BraidingMatrix`.
    cartan: list of `RootDatum`; non-Cartan entries are ignored.

  Returns:
    A `Condition31` verdict.
  """
  cartan = cartan_subset(cartan)
  for alpha in cartan:
    for beta in cartan:
      value = cyclotomic.bilinear_form(q, alpha.beta, beta.beta)
      if not cyclotomic.power(value, beta.n_beta).is_one():
        logging.warning('Centrality condition fails at alpha=%s, beta=%s',
                        alpha.beta, beta.beta)
        return Condition31(VIOLATED, (alpha.beta, beta.beta))
  return Condition31(HOLDS, None)


def check_scaling_injective(cartan):
  """Asserts beta -> N_beta * beta is injective on the Cartan roots.

  Raises:
    errors.InternalInconsistency: naming two roots with the same image.
  """
  images = {}
  for datum in cartan_subset(cartan):
    other = images.setdefault(datum.scaled, datum.beta)
    if other != datum.beta:
      raise errors.InternalInconsistency(
          'Cartan roots {} and {} have the same scaled root {}'.format(
              other, datum.beta, datum.scaled))
