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
"""The scaled root system {N_beta beta : beta Cartan} and its axioms.

Scaled roots are written beta_bar = N_beta * beta.  Each Cartan root comes
with a reflection s_beta_bar, the conjugate of a simple reflection at a
Cartan vertex along the root's witness path; pairing and axiom checks are
all exact integer computations with these matrices.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import collections

import numpy as np
import sympy

from nichols_lie import cartan_roots
from nichols_lie import errors

__all__ = [
    'ScaledRootSystem',
    'SimpleScaledRoots',
    'ScaledReflection',
    'AxiomResult',
    'AxiomReport',
    'scaled_system',
    'simple_scaled',
    'scaled_reflection',
    'coroot_pairing',
    'verify_axioms',
]

AXIOM_FINITE_NONZERO = 'finite_nonzero'
AXIOM_SPANS = 'spans'
AXIOM_REFLECTION_STABLE = 'reflection_stable'
AXIOM_INTEGRAL = 'integral'


def _span_rank(vectors):
  if not vectors:
    return 0
  # Exact rank over Q.
  return int(sympy.Matrix([[int(x) for x in v] for v in vectors]).rank())


class ScaledRootSystem(
    collections.namedtuple('ScaledRootSystem',
                           ['positive', 'ambient_rank', 'span_rank'])):
  """The positive part of the scaled root system.

  Attributes:
    positive: sorted tuple of scaled positive roots.
    ambient_rank: theta.
    span_rank: rank of the lattice spanned by `positive`.
  """

  __slots__ = ()

  def __new__(cls, positive, ambient_rank, span_rank=None):
    positive = tuple(sorted(set(tuple(int(x) for x in v) for v in positive)))
    for v in positive:
      if len(v) != ambient_rank:
        raise ValueError('vector {} does not have length {}'.format(
            v, ambient_rank))
      if not any(v):
        raise ValueError('0 is not a scaled root')
    if span_rank is None:
      span_rank = _span_rank(positive)
    return super(ScaledRootSystem, cls).__new__(cls, positive, ambient_rank,
                                                span_rank)

  def members(self):
    """All scaled roots: the positive ones and their negatives."""
    return frozenset(self.positive) | frozenset(
        tuple(-x for x in v) for v in self.positive)

  def __len__(self):
    return len(self.positive)

  def __contains__(self, vector):
    return tuple(vector) in self.members()


class SimpleScaledRoots(collections.namedtuple('SimpleScaledRoots', ['pi'])):
  """The simple scaled roots in lexicographic order.

  Attributes:
    pi: tuple of integer tuples.
  """

  __slots__ = ()

  def __len__(self):
    return len(self.pi)


class ScaledReflection(
    collections.namedtuple('ScaledReflection', ['beta_bar', 'matrix'])):
  """The reflection s_beta_bar as an integer matrix.

  Attributes:
    beta_bar: the scaled root it reflects.
    matrix: read-only numpy int64 array.
  """

  __slots__ = ()

  def apply(self, vector):
    return tuple(int(x) for x in self.matrix.dot(np.asarray(vector,
                                                            dtype=np.int64)))


class AxiomResult(
    collections.namedtuple('AxiomResult', ['name', 'passed', 'witness'])):
  """Outcome of one root-system axiom; witness explains a failure."""

  __slots__ = ()


class AxiomReport(collections.namedtuple('AxiomReport', ['results'])):
  """Per-axiom outcomes, in a fixed order."""

  __slots__ = ()

  @property
  def passed(self):
    return all(result.passed for result in self.results)

  def failures(self):
    return [result for result in self.results if not result.passed]


def scaled_system(cartan, theta=None):
  """Collects {N_beta beta : beta in D_+}.

  Args:
    cartan: list of `cartan_roots.RootDatum`; non-Cartan entries are skipped.
    theta: the rank; required when there are no Cartan roots.

  Returns:
    A `ScaledRootSystem`.
  """
  cartan = cartan_roots.cartan_subset(cartan)
  if theta is None:
    if not cartan:
      raise ValueError('theta is required for an empty set of Cartan roots')
    theta = len(cartan[0].beta)
  return ScaledRootSystem([datum.scaled for datum in cartan], theta)


def simple_scaled(omega):
  """Returns the members of Omega_+ that are not a sum of two members.

  Args:
    omega: a nonempty `ScaledRootSystem`.

  Returns:
    `SimpleScaledRoots` sorted lexicographically.

  Raises:
    ValueError: if omega is empty.
  """
  if not omega.positive:
    raise ValueError('simple_scaled needs a nonempty scaled root system')
  sums = set()
  for a in omega.positive:
    for b in omega.positive:
      sums.add(tuple(x + y for x, y in zip(a, b)))
  return SimpleScaledRoots(tuple(v for v in omega.positive if v not in sums))


def scaled_reflection(atlas, datum, start_object=0):
  """Builds s_beta_bar = t s_i t^{-1} along the witness of a Cartan root.

  Here t = s_{i_1} ... s_{i_{k}} is the product of the reflections met along
  the witness prefix before its last letter i.

  Args:
    atlas: the `groupoid.GroupoidAtlas` holding the witness objects.
    datum: a Cartan `cartan_roots.RootDatum`.
    start_object: the object the witness word starts from.

  Returns:
    A `ScaledReflection`.

  Raises:
    ValueError: if datum is not a Cartan root.
    errors.InternalInconsistency: if the product is not an involution
      sending beta_bar to -beta_bar.
  """
  if not datum.is_cartan:
    raise ValueError('{} is not a Cartan root'.format(datum.beta))
  prefix = datum.witness.prefix
  theta = atlas.theta
  # Replay the witness path to recover the objects before the last letter.
  path = []
  current = start_object
  for letter in prefix[:-1]:
    path.append(atlas.reflection(current, letter))
    current = atlas.edge(current, letter)
  if current != datum.witness.object_id:
    raise errors.InternalInconsistency(
        'witness of {} does not end at object {}'.format(
            datum.beta, datum.witness.object_id))
  t = np.eye(theta, dtype=np.int64)
  for s in path:
    t = t.dot(s)
  t_inverse = np.eye(theta, dtype=np.int64)
  for s in reversed(path):
    t_inverse = t_inverse.dot(s)
  matrix = t.dot(atlas.reflection(current, prefix[-1])).dot(t_inverse)
  matrix.setflags(write=False)
  reflection = ScaledReflection(datum.scaled, matrix)
  if not (matrix.dot(matrix) == np.eye(theta, dtype=np.int64)).all():
    raise errors.InternalInconsistency(
        'reflection for {} is not an involution'.format(datum.beta))
  if reflection.apply(datum.scaled) != tuple(-x for x in datum.scaled):
    raise errors.InternalInconsistency(
        'reflection for {} does not negate it'.format(datum.beta))
  return reflection


def coroot_pairing(reflection, gamma):
  """Returns the integer b with gamma - s(gamma) = b * beta_bar.

  Args:
    reflection: the `ScaledReflection` of beta_bar.
    gamma: a scaled root.

  Returns:
    The integer beta_bar^vee(gamma).

  Raises:
    errors.NotIntegral: if gamma - s(gamma) is not an integer multiple of
      beta_bar.
  """
  beta_bar = reflection.beta_bar
  difference = [g - h for g, h in zip(gamma, reflection.apply(gamma))]
  pivot = next(k for k, x in enumerate(beta_bar) if x)
  b, remainder = divmod(difference[pivot], beta_bar[pivot])
  if remainder or any(d != b * x for d, x in zip(difference, beta_bar)):
    raise errors.NotIntegral(
        '{} - s({}) = {} is not an integer multiple of {}'.format(
            tuple(gamma), tuple(gamma), tuple(difference), beta_bar))
  return b


def verify_axioms(omega, reflections):
  """Checks that Omega is a root system of the space it spans.

  Args:
    omega: the `ScaledRootSystem`.
    reflections: iterable of `ScaledReflection`, one per positive scaled root.

  Returns:
    An `AxiomReport`; failures carry a witness string.
  """
  members = omega.members()
  reflections = list(reflections)
  results = []

  zero = tuple([0] * omega.ambient_rank)
  results.append(
      AxiomResult(AXIOM_FINITE_NONZERO, zero not in members,
                  None if zero not in members else '0 is a member'))

  # V is the span of Omega, so the spanning axiom amounts to Pi being a
  # basis of it.
  num_simple = len(simple_scaled(omega)) if omega.positive else 0
  spans = num_simple == omega.span_rank
  results.append(
      AxiomResult(AXIOM_SPANS, spans, None if spans else
                  'span rank {} but {} simple roots'.format(
                      omega.span_rank, num_simple)))

  stable_witness = None
  integral_witness = None
  for reflection in reflections:
    for gamma in sorted(members):
      if stable_witness is None and reflection.apply(gamma) not in members:
        stable_witness = 's_{}({}) = {} is not a member'.format(
            reflection.beta_bar, gamma, reflection.apply(gamma))
      if integral_witness is None:
        try:
          coroot_pairing(reflection, gamma)
        except errors.NotIntegral as e:
          integral_witness = str(e)
  results.append(
      AxiomResult(AXIOM_REFLECTION_STABLE, stable_witness is None,
                  stable_witness))
  results.append(
      AxiomResult(AXIOM_INTEGRAL, integral_witness is None, integral_witness))
  return AxiomReport(tuple(results))
