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
"""Runs the analysis on the bundled fixtures and compares with expectations.

Mismatches are verdicts, not exceptions: a run always covers every fixture
and reports both the expected and the computed value of whatever differs.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import collections

from absl import logging

from nichols_lie import errors
from nichols_lie import lie_type
from nichols_lie.catalog import fixtures as fixtures_lib
from nichols_lie.coders import report_coder

__all__ = [
    'PASS',
    'FAIL',
    'DISPUTED',
    'Verdict',
    'compare',
    'verify_fixture',
    'select_fixtures',
    'verify_tables',
    'has_failures',
]

PASS = 'PASS'
FAIL = 'FAIL'
DISPUTED = 'DISPUTED'


class Verdict(
    collections.namedtuple('Verdict',
                           ['fixture', 'status', 'lie_type', 'detail'])):
  """The outcome for one fixture.

  Attributes:
    fixture: the fixture name.
    status: PASS, FAIL or DISPUTED.
    lie_type: the computed type name, or '' if the analysis raised.
    detail: differences and notes, '; '-separated.
  """

  __slots__ = ()


def _vectors(vectors):
  return ' '.join(report_coder.format_vector(v) for v in sorted(vectors))


def compare(fixture, report):
  """Compares a `lie_type.LieTypeReport` with a `fixtures_lib.Fixture`.

  Returns:
    A `Verdict`.  A disputed fixture whose other expectations hold gets
    DISPUTED, naming the candidate the computed type matched.
  """
  problems = []
  notes = []
  computed = report.lie_type.name
  disputed_match = None
  if fixture.is_disputed:
    expected = fixture.expected_type
    matched = [
        label for label, candidate in (('tabulated', expected.tabulated),
                                       ('derived', expected.derived))
        if candidate.name == computed
    ]
    if matched:
      disputed_match = (
          'tabulated {}, derived {}, computed {} matches {}'.format(
              expected.tabulated, expected.derived, computed,
              matched[0]))
    else:
      problems.append('type: expected one of {} or {}, got {}'.format(
          expected.tabulated, expected.derived, computed))
  elif fixture.expected_type.name != computed:
    problems.append('type: expected {}, got {}'.format(
        fixture.expected_type.name, computed))

  cartan = frozenset(datum.beta for datum in report.cartan)
  if fixture.cartan_roots is not None:
    missing = fixture.cartan_roots - cartan
    if missing:
      problems.append('missing Cartan roots: {}'.format(_vectors(missing)))
    extra = cartan - fixture.cartan_roots
    if extra:
      notes.append('Cartan roots not listed: {}'.format(_vectors(extra)))
  if fixture.count is not None and len(cartan) != fixture.count:
    problems.append('Cartan root count: expected {}, got {}'.format(
        fixture.count, len(cartan)))
  if fixture.n_beta is not None:
    wrong = [d.beta for d in report.cartan if d.n_beta != fixture.n_beta]
    if wrong:
      problems.append('N_beta != {} at {}'.format(fixture.n_beta,
                                                  _vectors(wrong)))
  if fixture.pi is not None and frozenset(report.pi) != fixture.pi:
    problems.append('pi: expected {}, got {}'.format(
        _vectors(fixture.pi), _vectors(report.pi)))
  if (fixture.condition_31 is not None and
      report.condition_31.status != fixture.condition_31):
    problems.append('condition_31: expected {}, got {}'.format(
        fixture.condition_31, report.condition_31.status))
  for failure in report.axioms.failures():
    problems.append('axiom {} fails: {}'.format(failure.name, failure.witness))

  if problems:
    status = FAIL
  elif disputed_match:
    status = DISPUTED
    notes.insert(0, disputed_match)
  else:
    status = PASS
  return Verdict(fixture.name, status, computed, '; '.join(problems + notes))


def verify_fixture(fixture, options=None):
  """Analyzes one fixture; analysis errors become FAIL verdicts."""
  try:
    report = lie_type.analyze(fixture.matrix, options, fixture.input_form)
  except errors.Error as e:
    logging.error('Fixture %s: %s', fixture.name, e)
    return Verdict(fixture.name, FAIL, '', '{}: {}'.format(
        type(e).__name__, e))
  return compare(fixture, report)


def verify_tables(options=None, names=None, fixture_list=None):
  """Verifies fixtures sequentially.

  Args:
    options: `lie_type.AnalysisOptions` shared by all fixtures.
    names: optional fixture names to restrict the run to.
    fixture_list: fixtures to use instead of the bundled ones.

  Returns:
    A list of `Verdict` sorted by fixture name.

  Raises:
    errors.UnknownFixture: if a requested name is not a fixture.
  """
  selected = select_fixtures(names, fixture_list)
  verdicts = [verify_fixture(f, options) for f in selected]
  for verdict in verdicts:
    logging.info('%s: %s %s', verdict.fixture, verdict.status,
                 verdict.lie_type)
  return sorted(verdicts)


def select_fixtures(names=None, fixture_list=None):
  """Returns the fixtures to verify, sorted by name."""
  available = sorted(
      fixture_list if fixture_list is not None else fixtures_lib.fixtures(),
      key=lambda f: f.name)
  if names is None:
    return available
  by_name = {f.name: f for f in available}
  unknown = sorted(set(names) - set(by_name))
  if unknown:
    raise errors.UnknownFixture('unknown fixtures {}'.format(unknown))
  return [by_name[name] for name in sorted(set(names))]


def has_failures(verdicts):
  """True iff some verdict is FAIL; DISPUTED does not count."""
  return any(verdict.status == FAIL for verdict in verdicts)
