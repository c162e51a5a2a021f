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
"""Tests for nichols_lie.catalog.verify."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from nichols_lie import dynkin_types
from nichols_lie import errors
from nichols_lie import lie_type
from nichols_lie import test_case
from nichols_lie.catalog import fixtures
from nichols_lie.catalog import verify


class VerifyTablesTest(test_case.NicholsTestCase):

  @classmethod
  def setUpClass(cls):
    super(VerifyTablesTest, cls).setUpClass()
    cls._verdicts = verify.verify_tables()

  def testEveryFixtureIsReproduced(self):
    statuses = {v.fixture: v.status for v in self._verdicts}
    self.assertLen(statuses, 28)
    self.assertEqual(
        sorted(name for name, status in statuses.items()
               if status != verify.PASS), ['ufo3', 'ufo3_twisted'])
    self.assertEqual(statuses['ufo3'], verify.DISPUTED)
    self.assertEqual(statuses['ufo3_twisted'], verify.DISPUTED)
    self.assertFalse(verify.has_failures(self._verdicts))

  def testVerdictsAreSorted(self):
    self.assertEqual(self._verdicts, sorted(self._verdicts))

  def testDisputedDetail(self):
    [ufo3] = [v for v in self._verdicts if v.fixture == 'ufo3']
    self.assertEqual(ufo3.lie_type, 'A2')
    self.assertEqual(ufo3.detail,
                     'tabulated A1xA1, derived A2, computed A2 matches derived')

  def testUnlistedCartanRootIsANote(self):
    [ufo2] = [v for v in self._verdicts if v.fixture == 'ufo2']
    self.assertEqual(ufo2.status, verify.PASS)
    self.assertEqual(ufo2.detail,
                     'Cartan roots not listed: (1, 1, 2, 3, 3, 1)')

  def testDualTypes(self):
    types = {v.fixture: v.lie_type for v in self._verdicts}
    self.assertEqual(types['cartanB3_N6'], 'C3')
    self.assertEqual(types['cartanC3_N6'], 'B3')
    self.assertEqual(types['superB4_N6'], 'B2xB2')

  def testDeterministic(self):
    names = ['a01', 'cartanG2_N5', 'ufo3']
    self.assertEqual(
        verify.verify_tables(names=names),
        [v for v in self._verdicts if v.fixture in names])


class CompareTest(test_case.NicholsTestCase):

  def testCorruptedExpectationFails(self):
    fixture = fixtures.fixture('a01')._replace(
        expected_type=dynkin_types.parse_type('A2'),
        pi=frozenset([(0, 2)]),
        count=2)
    verdict = verify.verify_fixture(fixture)
    self.assertEqual(verdict.status, verify.FAIL)
    self.assertEqual(verdict.lie_type, 'A1')
    self.assertEqual(
        verdict.detail, 'type: expected A2, got A1; '
        'Cartan root count: expected 2, got 1; '
        'pi: expected (0, 2), got (0, 3)')
    self.assertTrue(verify.has_failures([verdict]))

  def testMissingCartanRootAndWrongOrder(self):
    fixture = fixtures.fixture('a01')._replace(
        cartan_roots=frozenset([(0, 1), (1, 1)]), n_beta=2)
    verdict = verify.compare(fixture, lie_type.analyze(fixture.matrix))
    self.assertEqual(verdict.status, verify.FAIL)
    self.assertEqual(
        verdict.detail,
        'missing Cartan roots: (1, 1); N_beta != 2 at (0, 1)')

  def testDisputedWithoutMatchFails(self):
    fixture = fixtures.fixture('ufo3')._replace(
        expected_type=fixtures.Disputed(
            dynkin_types.parse_type('A1xA1'), dynkin_types.parse_type('B2')))
    verdict = verify.compare(fixture, lie_type.analyze(fixture.matrix))
    self.assertEqual(verdict.status, verify.FAIL)
    self.assertEqual(verdict.detail,
                     'type: expected one of A1xA1 or B2, got A2')

  def testConditionMismatch(self):
    fixture = fixtures.fixture('ufo3_twisted')._replace(condition_31='HOLDS')
    verdict = verify.compare(fixture, lie_type.analyze(fixture.matrix))
    self.assertEqual(verdict.status, verify.FAIL)
    self.assertIn('condition_31: expected HOLDS, got VIOLATED',
                  verdict.detail)

  def testAnalysisErrorBecomesFailure(self):
    verdict = verify.verify_fixture(
        fixtures.fixture('cartanA2_N3'), lie_type.AnalysisOptions(max_roots=1))
    self.assertEqual(verdict.status, verify.FAIL)
    self.assertEqual(verdict.lie_type, '')
    self.assertStartsWith(verdict.detail, 'BoundExceeded: ')


class SelectFixturesTest(test_case.NicholsTestCase):

  def testSelect(self):
    selected = verify.select_fixtures(['ufo3', 'a01', 'ufo3'])
    self.assertEqual([f.name for f in selected], ['a01', 'ufo3'])

  def testAll(self):
    self.assertLen(verify.select_fixtures(), 28)

  def testCustomList(self):
    custom = [fixtures.fixture('a01')._replace(name='mine')]
    self.assertEqual(
        [v.fixture for v in verify.verify_tables(fixture_list=custom)],
        ['mine'])

  def testUnknown(self):
    with self.assertRaisesRegex(errors.UnknownFixture, 'ufo9'):
      verify.select_fixtures(['a01', 'ufo9'])


if __name__ == '__main__':
  test_case.main()
