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
"""The Lie type of the scaled root system and the full analysis pipeline.

`analyze` runs, in order: longest word, positive roots, Cartan roots,
centrality condition, scaled roots, simple scaled roots, reflections,
axioms, Cartan matrix, classification.  A violated condition does not
abort; the report then says that the classification is computed but the
isomorphism with the primitive Lie algebra is not guaranteed.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import collections

from absl import logging
import numpy as np

from nichols_lie import braiding
from nichols_lie import cartan_roots
from nichols_lie import dynkin_types
from nichols_lie import errors
from nichols_lie import groupoid
from nichols_lie import scaled_system

__all__ = [
    'AnalysisOptions',
    'LieTypeReport',
    'cartan_matrix_a',
    'check_pairing_consistency',
    'ScaledClassification',
    'classify_scaled',
    'analyze',
    'analyze_atlas',
]


class AnalysisOptions(
    collections.namedtuple('AnalysisOptions', [
        'max_objects', 'max_roots', 'skip_31', 'close_atlas', 'first_letter'
    ])):
  """Bounds and switches for `analyze`.

  Attributes:
    max_objects: bound on the number of groupoid objects.
    max_roots: bound on the number of positive roots.
    skip_31: if set, the centrality condition is not checked and is
      reported UNKNOWN.
    close_atlas: if set, the whole object set X is explored first.
    first_letter: optional 0-based seed for the longest word.
  """

  __slots__ = ()

  def __new__(cls,
              max_objects=groupoid.DEFAULT_MAX_OBJECTS,
              max_roots=groupoid.DEFAULT_MAX_ROOTS,
              skip_31=False,
              close_atlas=False,
              first_letter=None):
    for name, value in (('max_objects', max_objects),
                        ('max_roots', max_roots)):
      if not isinstance(value, int) or value < 1:
        raise ValueError('{} must be a positive integer, got {!r}'.format(
            name, value))
    return super(AnalysisOptions, cls).__new__(cls, max_objects, max_roots,
                                               bool(skip_31),
                                               bool(close_atlas), first_letter)


class LieTypeReport(
    collections.namedtuple('LieTypeReport', [
        'matrix', 'input_form', 'diagram', 'objects_count', 'atlas_closed',
        'word', 'positive_roots', 'root_data', 'condition_31', 'omega', 'pi',
        'cartan_matrix', 'lie_type', 'axioms', 'warnings'
    ])):
  """Everything the analysis of one braiding matrix produces.

  Attributes:
    matrix: the analyzed `braiding.BraidingMatrix`.
    input_form: `braiding.FULL_FORM` or `braiding.DIAGRAM_FORM`, how the
      matrix was given.
    diagram: its `braiding.DynkinDiagram`.
    objects_count: groupoid objects materialized during the analysis.
    atlas_closed: whether objects_count is the full |X|.
    word: the `groupoid.ReducedWord` used.
    positive_roots: tuple of positive roots in word order.
    root_data: tuple of `cartan_roots.RootDatum`, one per positive root.
    condition_31: `cartan_roots.Condition31`.
    omega: the `scaled_system.ScaledRootSystem`.
    pi: tuple of simple scaled roots, lexicographically sorted.
    cartan_matrix: tuple of tuples a_ij indexed like pi.
    lie_type: a `dynkin_types.SemisimpleType` or `dynkin_types.ZERO`.
    axioms: `scaled_system.AxiomReport`.
    warnings: tuple of strings.
  """

  __slots__ = ()

  @property
  def cartan(self):
    return tuple(cartan_roots.cartan_subset(self.root_data))

  @property
  def theorem_applies(self):
    """Whether the classification is backed by the centrality condition."""
    return self.condition_31.holds


def cartan_matrix_a(pi, omega):
  """a_ij = -max{m >= 0 : m pi_i + pi_j in Omega_+}, a_ii = 2.

  Args:
    pi: nonempty `scaled_system.SimpleScaledRoots`.
    omega: the `scaled_system.ScaledRootSystem`.

  Returns:
    A tuple of tuples of ints.
  """
  if not pi.pi:
    raise ValueError('cartan_matrix_a needs at least one simple root')
  members = frozenset(omega.positive)
  limit = len(omega.positive)
  rows = []
  for i, pi_i in enumerate(pi.pi):
    row = []
    for j, pi_j in enumerate(pi.pi):
      if i == j:
        row.append(2)
        continue
      best = 0
      for m in range(1, limit + 1):
        if tuple(m * x + y for x, y in zip(pi_i, pi_j)) in members:
          best = m
      row.append(-best)
    rows.append(tuple(row))
  return tuple(rows)


def check_pairing_consistency(a, pi, reflections):
  """Asserts a_ij equals the coroot pairing of pi_i with pi_j.

  Args:
    a: the Cartan matrix from `cartan_matrix_a`.
    pi: `scaled_system.SimpleScaledRoots`.
    reflections: dict from scaled root to `scaled_system.ScaledReflection`.

  Raises:
    errors.InternalInconsistency: on the first disagreement.
    errors.NotIntegral: if a pairing is not an integer.
  """
  for i, pi_i in enumerate(pi.pi):
    for j, pi_j in enumerate(pi.pi):
      pairing = scaled_system.coroot_pairing(reflections[pi_i], pi_j)
      if pairing != a[i][j]:
        raise errors.InternalInconsistency(
            'a_{}{} = {} but the coroot pairing of {} with {} is {}'.format(
                i + 1, j + 1, a[i][j], pi_i, pi_j, pairing))


class ScaledClassification(
    collections.namedtuple('ScaledClassification', [
        'omega', 'pi', 'cartan_matrix', 'lie_type', 'axioms'
    ])):
  """The scaled root system of a set of root data and its type."""

  __slots__ = ()


def classify_scaled(atlas, data, start_object=0):
  """Builds Omega, Pi, the reflections and a, and classifies a.

  An empty Omega gives `dynkin_types.ZERO` with empty Pi and a.

  Args:
    atlas: the `groupoid.GroupoidAtlas` holding the witness objects.
    data: list of `cartan_roots.RootDatum` at start_object.
    start_object: the object the root witnesses start from.

  Returns:
    A `ScaledClassification`.

  Raises:
    errors.Unclassifiable: if no finite type matches, or the matched type
      has a different number of positive roots than Omega.
    errors.NotIntegral: if a coroot pairing is not an integer.
    errors.InternalInconsistency: if a reflection or pairing check fails.
  """
  omega = scaled_system.scaled_system(data, atlas.theta)
  if not omega.positive:
    return ScaledClassification(omega, (), (),
                                dynkin_types.ZERO,
                                scaled_system.verify_axioms(omega, []))
  pi = scaled_system.simple_scaled(omega)
  reflections = collections.OrderedDict(
      (datum.scaled,
       scaled_system.scaled_reflection(atlas, datum, start_object))
      for datum in cartan_roots.cartan_subset(data))
  axioms = scaled_system.verify_axioms(omega, reflections.values())
  a = cartan_matrix_a(pi, omega)
  check_pairing_consistency(a, pi, reflections)
  lie_type = dynkin_types.classify(np.asarray(a, dtype=np.int64))
  if lie_type.positive_root_count() != len(omega):
    raise errors.Unclassifiable(
        'type {} has {} positive roots but there are {} scaled roots'.format(
            lie_type, lie_type.positive_root_count(), len(omega)))
  return ScaledClassification(omega, pi.pi, a, lie_type, axioms)


def analyze(q, options=None, input_form=braiding.FULL_FORM):
  """Runs the full pipeline on a braiding matrix.

  Args:
    q: a validated `braiding.BraidingMatrix`.
    options: `AnalysisOptions`; defaults apply when None.
    input_form: how q was given; see `analyze_atlas`.

  Returns:
    A `LieTypeReport`.

  Raises:
    errors.BoundExceeded: if an exploration bound is hit.
    errors.ValidationError: if a reflected matrix is invalid.
    errors.Unclassifiable: if no finite type matches.
    errors.NotIntegral: if a coroot pairing is not an integer.
    errors.InternalInconsistency: if a self-check fails.
  """
  options = options or AnalysisOptions()
  atlas = groupoid.GroupoidAtlas(q, options.max_objects)
  if options.close_atlas:
    atlas.close()
  return analyze_atlas(atlas, options, input_form=input_form)


def analyze_atlas(atlas,
                  options=None,
                  start_object=0,
                  input_form=braiding.FULL_FORM):
  """Runs the pipeline at one object of an existing atlas.

  Running at different objects of the same atlas yields isomorphic scaled
  root systems, which is how the type is checked to be an invariant of X.

  Args:
    atlas: a `groupoid.GroupoidAtlas`.
    options: `AnalysisOptions`; `close_atlas` is ignored here.
    start_object: id of the object to analyze.
    input_form: `braiding.DIAGRAM_FORM` if the atlas was seeded by
      `braiding.from_diagram`; the centrality verdict then only holds for
      that representative of the diagram, and the report says so.

  Returns:
    A `LieTypeReport` for atlas.matrix(start_object).
  """
  if input_form not in (braiding.FULL_FORM, braiding.DIAGRAM_FORM):
    raise ValueError('unknown input form {!r}'.format(input_form))
  options = options or AnalysisOptions()
  q = atlas.matrix(start_object)
  warnings = []
  if not q.diagram.is_connected:
    warnings.append('Dynkin diagram is disconnected')

  word = groupoid.longest_word(atlas, options.max_roots, options.first_letter,
                               start_object)
  roots = groupoid.positive_roots(atlas, word)
  data = cartan_roots.cartan_roots(q, roots, atlas)
  cartan_roots.check_scaling_injective(data)
  if options.skip_31:
    condition = cartan_roots.Condition31(cartan_roots.UNKNOWN, None)
  else:
    condition = cartan_roots.check_31(q, data)
    if not condition.holds:
      warnings.append(
          'centrality condition fails at {} and {}; the type is computed '
          'but not guaranteed to be that of the primitive Lie '
          'algebra'.format(*condition.witness))
    if input_form == braiding.DIAGRAM_FORM:
      warnings.append(
          'input given as a Dynkin diagram; the centrality verdict applies '
          'to the representative with q_ji = 1 for i < j only')

  scaled = classify_scaled(atlas, data, start_object)
  for failure in scaled.axioms.failures():
    warnings.append('axiom {} fails: {}'.format(failure.name, failure.witness))
  omega = scaled.omega
  lie_type = scaled.lie_type

  for warning in warnings:
    logging.warning('%s', warning)
  if not atlas.is_closed:
    logging.warning(
        'Atlas not closed: %d objects materialized; --explore computes all',
        atlas.size)
  logging.info('Classified %d positive roots, %d Cartan roots as %s',
               len(roots), len(omega), lie_type)
  return LieTypeReport(
      matrix=q,
      input_form=input_form,
      diagram=q.diagram,
      objects_count=atlas.size,
      atlas_closed=atlas.is_closed,
      word=word,
      positive_roots=roots.roots,
      root_data=tuple(data),
      condition_31=condition,
      omega=omega,
      pi=scaled.pi,
      cartan_matrix=scaled.cartan_matrix,
      lie_type=lie_type,
      axioms=scaled.axioms,
      warnings=tuple(warnings))
