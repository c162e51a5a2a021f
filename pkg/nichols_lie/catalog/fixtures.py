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
"""Bundled fixtures and the expectations they are verified against."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import collections
import io
import os

from nichols_lie import braiding
from nichols_lie import dynkin_types
from nichols_lie import errors
from nichols_lie.catalog import generators
from nichols_lie.coders import matrix_coder

__all__ = [
    'DATA_DIR',
    'Disputed',
    'Fixture',
    'parse_vector',
    'parse_vector_list',
    'parse_expectations',
    'fixtures',
    'fixture',
]

DATA_DIR = os.path.join(os.path.dirname(__file__), 'data')
EXPECTATIONS_FILE = 'expectations.txt'

_KEYS = ('fixture', 'file', 'generate', 'type', 'cartan_roots', 'n_beta',
         'pi', 'count', 'condition_31', 'note')


class Disputed(collections.namedtuple('Disputed', ['tabulated', 'derived'])):
  """An expected type that is under dispute between two candidates."""

  __slots__ = ()

  @property
  def name(self):
    return 'DISPUTED {}|{}'.format(self.tabulated, self.derived)

  def __str__(self):
    return self.name


class Fixture(
    collections.namedtuple('Fixture', [
        'name', 'source', 'matrix', 'input_form', 'expected_type',
        'cartan_roots', 'n_beta', 'pi', 'count', 'condition_31', 'note'
    ])):
  """A braiding matrix with its expected analysis outcome.

  Attributes:
    name: the fixture name.
    source: the matrix file name, or the generator call as a string.
    matrix: the `braiding.BraidingMatrix`.
    input_form: `braiding.FULL_FORM` or `braiding.DIAGRAM_FORM`.
    expected_type: a `dynkin_types.SemisimpleType`, `dynkin_types.ZERO` or
      `Disputed`.
    cartan_roots: frozenset of Cartan roots that must be found, or None.
    n_beta: the common N_beta of all Cartan roots, or None.
    pi: frozenset of simple scaled roots, or None.
    count: the exact number of Cartan roots, or None.
    condition_31: the expected centrality status, or None.
    note: free text.
  """

  __slots__ = ()

  @property
  def is_disputed(self):
    return isinstance(self.expected_type, Disputed)


def parse_vector(text, theta):
  """Parses compact root notation, e.g. '12^2 3^{10}' or '1^2 2^3'.

  Each digit is a 1-based simple root index, optionally followed by '^k' or
  '^{k}'.  An exponent without braces extends over all following digits, so
  a space must end it before the next index.

  Args:
    text: the vector in compact notation.
    theta: the rank.

  Returns:
    A tuple of theta integers.

  Raises:
    errors.DecodeError: on malformed text or an index above theta.
  """
  vector = [0] * theta
  position = 0
  end = len(text)
  found = False
  while position < end:
    char = text[position]
    if char.isspace():
      position += 1
      continue
    if not char.isdigit() or char == '0':
      raise errors.DecodeError('bad root index {!r} in {!r}'.format(char, text))
    index = int(char)
    if index > theta:
      raise errors.DecodeError('root index {} exceeds rank {} in {!r}'.format(
          index, theta, text))
    position += 1
    multiplicity = 1
    if position < end and text[position] == '^':
      position += 1
      if position < end and text[position] == '{':
        close = text.find('}', position)
        if close < 0:
          raise errors.DecodeError('unclosed brace in {!r}'.format(text))
        digits = text[position + 1:close]
        position = close + 1
      else:
        start = position
        while position < end and text[position].isdigit():
          position += 1
        digits = text[start:position]
      if not digits.isdigit():
        raise errors.DecodeError('bad exponent in {!r}'.format(text))
      multiplicity = int(digits)
    vector[index - 1] += multiplicity
    found = True
  if not found:
    raise errors.DecodeError('empty root')
  return tuple(vector)


def parse_vector_list(text, theta):
  """Parses comma-separated compact vectors into a frozenset."""
  return frozenset(parse_vector(part, theta) for part in text.split(','))


def _parse_type(text):
  if text.startswith('DISPUTED'):
    candidates = text[len('DISPUTED'):].strip().split('|')
    if len(candidates) != 2:
      raise errors.DecodeError(
          'expected "DISPUTED tabulated|derived", got {!r}'.format(text))
    return Disputed(*[dynkin_types.parse_type(c) for c in candidates])
  return dynkin_types.parse_type(text)


def _load_matrix(block, data_dir):
  if ('file' in block) == ('generate' in block):
    raise errors.DecodeError(
        'fixture {} needs exactly one of "file" and "generate"'.format(
            block['fixture']))
  if 'file' in block:
    source = block['file']
    decoded = matrix_coder.read_matrix_input(os.path.join(data_dir, source))
    return source, decoded.matrix, decoded.form
  source = block['generate']
  parts = source.split()
  if len(parts) != 4 or parts[0] != 'cartan' or not all(
      p.isdigit() for p in parts[2:]):
    raise errors.DecodeError(
        'expected "generate cartan FAMILY RANK N", got {!r}'.format(source))
  try:
    matrix = generators.cartan_type_braiding(parts[1], int(parts[2]),
                                             int(parts[3]))
  except ValueError as e:
    raise errors.DecodeError('fixture {}: {}'.format(block['fixture'], e))
  return 'generate ' + source, matrix, braiding.FULL_FORM


def _make_fixture(block, data_dir):
  for required in ('fixture', 'type'):
    if required not in block:
      raise errors.DecodeError('block without "{}"'.format(required),
                               block.get('_line'))
  source, matrix, input_form = _load_matrix(block, data_dir)
  theta = matrix.theta

  def optional(key, parse):
    return parse(block[key]) if key in block else None

  condition = block.get('condition_31')
  if condition not in (None, 'HOLDS', 'VIOLATED'):
    raise errors.DecodeError('bad condition_31 {!r} for {}'.format(
        condition, block['fixture']))
  return Fixture(
      name=block['fixture'],
      source=source,
      matrix=matrix,
      input_form=input_form,
      expected_type=_parse_type(block['type']),
      cartan_roots=optional('cartan_roots',
                            lambda t: parse_vector_list(t, theta)),
      n_beta=optional('n_beta', int),
      pi=optional('pi', lambda t: parse_vector_list(t, theta)),
      count=optional('count', int),
      condition_31=condition,
      note=block.get('note', ''))


def parse_expectations(text, data_dir=DATA_DIR):
  """Parses an expectations file into fixtures.

  Args:
    text: the file contents.
    data_dir: the directory matrix files are resolved against.

  Returns:
    A list of `Fixture` in file order.

  Raises:
    errors.DecodeError: on malformed blocks, unknown keys, or matrices and
      vectors that fail to parse.
  """
  result = []
  block = None
  for line_number, line in enumerate(text.splitlines(), 1):
    line = line.split('#', 1)[0].strip()
    if not line:
      continue
    key, _, value = line.partition(' ')
    value = value.strip()
    if key == 'end':
      if block is None:
        raise errors.DecodeError('"end" outside a block', line_number)
      result.append(_make_fixture(block, data_dir))
      block = None
      continue
    if key not in _KEYS:
      raise errors.DecodeError('unknown key {!r}'.format(key), line_number)
    if key == 'fixture':
      if block is not None:
        raise errors.DecodeError('missing "end" before a new fixture',
                                 line_number)
      block = {'_line': line_number}
    elif block is None:
      raise errors.DecodeError('{!r} outside a block'.format(key), line_number)
    if key in block:
      raise errors.DecodeError('duplicate key {!r}'.format(key), line_number)
    block[key] = value
  if block is not None:
    raise errors.DecodeError('missing "end" at end of file')
  names = [f.name for f in result]
  duplicates = sorted(set(n for n in names if names.count(n) > 1))
  if duplicates:
    raise errors.DecodeError('duplicate fixtures {}'.format(duplicates))
  return result


def fixtures():
  """Returns the bundled fixtures, sorted by name."""
  with io.open(os.path.join(DATA_DIR, EXPECTATIONS_FILE),
               encoding='utf-8') as f:
    return sorted(parse_expectations(f.read()), key=lambda item: item.name)


def fixture(name):
  """Returns the bundled fixture with the given name.

  Raises:
    errors.UnknownFixture: if there is no such fixture.
  """
  for candidate in fixtures():
    if candidate.name == name:
      return candidate
  raise errors.UnknownFixture('unknown fixture {!r}'.format(name))
