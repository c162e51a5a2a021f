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
"""Tests for nichols_lie.catalog.fixtures."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from nichols_lie import braiding
from nichols_lie import dynkin_types
from nichols_lie import errors
from nichols_lie import test_case
from nichols_lie.catalog import fixtures

_A01_BLOCK = """\
fixture a01   # comment
file a01.nq
type A1
cartan_roots 2
n_beta 3
pi 2^3
count 1
condition_31 HOLDS
note restricted
end
"""


class ParseVectorTest(test_case.NicholsTestCase):

  @test_case.parameters(
      ('1', 3, (1, 0, 0)),
      ('12^2 3', 3, (1, 2, 1)),
      ('12^3 3^2', 3, (1, 3, 2)),
      ('1^2 2^3', 2, (2, 3)),
      ('3^4 4^8 5^{12} 6^4', 6, (0, 0, 4, 8, 12, 4)),
      ('2^{10} 3^{10}', 3, (0, 10, 10)),
      ('  2 1 ', 2, (1, 1)),
      ('11', 2, (2, 0)),
  )
  def testParseVector(self, text, theta, expected):
    self.assertEqual(fixtures.parse_vector(text, theta), expected)

  @test_case.parameters(
      ('', 'empty root'),
      ('0', 'bad root index'),
      ('1a', 'bad root index'),
      ('4', 'exceeds rank 3'),
      ('1^', 'bad exponent'),
      ('1^{x}', 'bad exponent'),
      ('1^{2', 'unclosed brace'),
  )
  def testParseVectorErrors(self, text, error_msg):
    with self.assertRaisesRegex(errors.DecodeError, error_msg):
      fixtures.parse_vector(text, 3)

  def testParseVectorListDeduplicates(self):
    self.assertEqual(
        fixtures.parse_vector_list('1, 12, 1 2, 2', 2),
        frozenset([(1, 0), (1, 1), (0, 1)]))


class ParseExpectationsTest(test_case.NicholsTestCase):

  def testParseBlock(self):
    [fixture] = fixtures.parse_expectations(_A01_BLOCK)
    self.assertEqual(fixture.name, 'a01')
    self.assertEqual(fixture.source, 'a01.nq')
    self.assertEqual(fixture.matrix.theta, 2)
    self.assertEqual(fixture.input_form, braiding.DIAGRAM_FORM)
    self.assertEqual(fixture.expected_type, dynkin_types.parse_type('A1'))
    self.assertEqual(fixture.cartan_roots, frozenset([(0, 1)]))
    self.assertEqual(fixture.n_beta, 3)
    self.assertEqual(fixture.pi, frozenset([(0, 3)]))
    self.assertEqual(fixture.count, 1)
    self.assertEqual(fixture.condition_31, 'HOLDS')
    self.assertEqual(fixture.note, 'restricted')
    self.assertFalse(fixture.is_disputed)

  def testGeneratedAndDisputed(self):
    [generated, disputed] = fixtures.parse_expectations(
        'fixture g\ngenerate cartan B 3 6\ntype C3\nend\n'
        'fixture d\nfile ufo3.nq\ntype DISPUTED A1xA1|A2\nend\n')
    self.assertEqual(generated.source, 'generate cartan B 3 6')
    self.assertEqual(generated.input_form, braiding.FULL_FORM)
    self.assertIsNone(generated.pi)
    self.assertIsNone(generated.condition_31)
    self.assertEqual(generated.note, '')
    self.assertTrue(disputed.is_disputed)
    self.assertEqual(disputed.expected_type.name, 'DISPUTED A1xA1|A2')
    self.assertEqual(disputed.expected_type.derived.name, 'A2')

  @test_case.named_parameters(
      dict(testcase_name='end_outside_block', text='end\n',
           error_msg='line 1: "end" outside a block'),
      dict(testcase_name='unknown_key', text='fixture a\nrank 2\n',
           error_msg="line 2: unknown key 'rank'"),
      dict(testcase_name='key_outside_block', text='type A1\n',
           error_msg="line 1: 'type' outside a block"),
      dict(testcase_name='missing_end', text='fixture a\nfixture b\n',
           error_msg='line 2: missing "end" before a new fixture'),
      dict(testcase_name='unterminated', text='fixture a\ntype A1\n',
           error_msg='missing "end" at end of file'),
      dict(testcase_name='duplicate_key',
           text='fixture a\ntype A1\ntype A2\n',
           error_msg="line 3: duplicate key 'type'"),
      dict(testcase_name='no_type', text='fixture a\nfile a01.nq\nend\n',
           error_msg='block without "type"'),
      dict(testcase_name='no_source', text='fixture a\ntype A1\nend\n',
           error_msg='needs exactly one of "file" and "generate"'),
      dict(testcase_name='bad_generate',
           text='fixture a\ngenerate super B 3 6\ntype A1\nend\n',
           error_msg='expected "generate cartan FAMILY RANK N"'),
      dict(testcase_name='bad_generated_order',
           text='fixture a\ngenerate cartan B 3 4\ntype A1\nend\n',
           error_msg='fixture a: B needs order'),
      dict(testcase_name='bad_condition',
           text='fixture a\nfile a01.nq\ntype A1\ncondition_31 yes\nend\n',
           error_msg="bad condition_31 'yes'"),
      dict(testcase_name='bad_disputed',
           text='fixture a\nfile a01.nq\ntype DISPUTED A1\nend\n',
           error_msg='expected "DISPUTED tabulated|derived"'),
      dict(testcase_name='bad_type',
           text='fixture a\nfile a01.nq\ntype H3\nend\n',
           error_msg="bad Lie type 'H3'"),
      dict(testcase_name='missing_file',
           text='fixture a\nfile nowhere.nq\ntype A1\nend\n',
           error_msg='cannot read'),
      dict(testcase_name='duplicate_fixture',
           text=_A01_BLOCK + _A01_BLOCK,
           error_msg=r"duplicate fixtures \['a01'\]"),
  )
  def testErrors(self, text, error_msg):
    with self.assertRaisesRegex(errors.DecodeError, error_msg):
      fixtures.parse_expectations(text)


class BundledFixturesTest(test_case.NicholsTestCase):

  def testAllLoad(self):
    bundled = fixtures.fixtures()
    self.assertLen(bundled, 28)
    self.assertEqual([f.name for f in bundled],
                     sorted(f.name for f in bundled))
    for fixture in bundled:
      if fixture.count is not None and fixture.cartan_roots is not None:
        self.assertLessEqual(len(fixture.cartan_roots), fixture.count,
                             msg=fixture.name)

  def testPrintedDuplicateCollapses(self):
    g26 = fixtures.fixture('g26')
    self.assertLen(g26.cartan_roots, 15)
    self.assertIn((1, 2, 2, 1, 1), g26.cartan_roots)

  def testIncompleteListing(self):
    self.assertLen(fixtures.fixture('ufo2').cartan_roots, 35)

  def testDisputed(self):
    self.assertEqual(
        sorted(f.name for f in fixtures.fixtures() if f.is_disputed),
        ['ufo3', 'ufo3_twisted'])

  def testUnknownFixture(self):
    with self.assertRaises(errors.UnknownFixture):
      fixtures.fixture('ufo9')
    with self.assertRaises(KeyError):
      fixtures.fixture('ufo9')


if __name__ == '__main__':
  test_case.main()
