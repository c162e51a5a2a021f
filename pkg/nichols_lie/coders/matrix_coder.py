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
"""Coder for the plain-text braiding matrix format.

Full form:

    matrix
    theta 2
    1/2 2/3
    0/1 1/3

Diagram form (q_ij = qtilde_ij, q_ji = 1 for i < j):

    diagram
    theta 2
    v 1 1/2
    v 2 1/3
    e 1 2 2/3

'#' starts a comment; indices are 1-based.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import collections
import io

from nichols_lie import braiding
from nichols_lie import cyclotomic
from nichols_lie import errors

FULL_FORM = braiding.FULL_FORM
DIAGRAM_FORM = braiding.DIAGRAM_FORM


class DecodedMatrix(
    collections.namedtuple('DecodedMatrix', ['matrix', 'form'])):
  """A decoded `braiding.BraidingMatrix` and the form it was written in."""

  __slots__ = ()


def _content_lines(text):
  """Yields (line_number, tokens) for non-blank lines without comments."""
  for line_number, line in enumerate(text.splitlines(), 1):
    tokens = line.split('#', 1)[0].split()
    if tokens:
      yield line_number, tokens


def _parse_root(token, line_number):
  try:
    return cyclotomic.parse_unity_root(token)
  except errors.DecodeError as e:
    raise errors.DecodeError(str(e), line_number)


def _parse_index(token, theta, line_number):
  try:
    index = int(token)
  except ValueError:
    raise errors.DecodeError('expected an index, got {!r}'.format(token),
                             line_number)
  if not 1 <= index <= theta:
    raise errors.DecodeError(
        'index {} out of range 1..{}'.format(index, theta), line_number)
  return index - 1


class MatrixCoder(object):
  """A coder to encode and decode braiding matrices as text."""

  def __init__(self, form=FULL_FORM):
    """Initializes the coder.

    Args:
      form: FULL_FORM or DIAGRAM_FORM, used by `encode` only; `decode`
        accepts both.
    """
    if form not in (FULL_FORM, DIAGRAM_FORM):
      raise ValueError('unknown matrix form {!r}'.format(form))
    self._form = form

  def decode(self, text):
    """Parses text into a `braiding.BraidingMatrix`.

    Raises:
      errors.DecodeError: if the text is malformed.
      errors.ValidationError: if the matrix is invalid (e.g. q_ii = 1).
    """
    return self.decode_input(text).matrix

  def decode_input(self, text):
    """Like `decode`, but returns a `DecodedMatrix` that keeps the form."""
    lines = list(_content_lines(text))
    if len(lines) < 2:
      raise errors.DecodeError('expected a form line and a theta line')
    (form_line, form_tokens), (theta_line, theta_tokens) = lines[:2]
    if len(form_tokens) != 1 or form_tokens[0] not in (FULL_FORM,
                                                       DIAGRAM_FORM):
      raise errors.DecodeError(
          'first line must be "matrix" or "diagram", got {!r}'.format(
              ' '.join(form_tokens)), form_line)
    if len(theta_tokens) != 2 or theta_tokens[0] != 'theta':
      raise errors.DecodeError('expected "theta N"', theta_line)
    try:
      theta = int(theta_tokens[1])
    except ValueError:
      theta = 0
    if theta < 1:
      raise errors.DecodeError(
          'theta must be a positive integer, got {!r}'.format(theta_tokens[1]),
          theta_line)
    if form_tokens[0] == FULL_FORM:
      return DecodedMatrix(self._decode_full(theta, lines[2:]), FULL_FORM)
    return DecodedMatrix(self._decode_diagram(theta, lines[2:]), DIAGRAM_FORM)

  def _decode_full(self, theta, lines):
    if len(lines) != theta:
      raise errors.DecodeError('expected {} matrix rows, got {}'.format(
          theta, len(lines)), lines[-1][0] if lines else None)
    rows = []
    for line_number, tokens in lines:
      if len(tokens) != theta:
        raise errors.DecodeError(
            'expected {} entries, got {}'.format(theta, len(tokens)),
            line_number)
      rows.append([_parse_root(token, line_number) for token in tokens])
    return braiding.BraidingMatrix(rows)

  def _decode_diagram(self, theta, lines):
    vertices = [None] * theta
    edges = {}
    for line_number, tokens in lines:
      kind = tokens[0]
      if kind == 'v' and len(tokens) == 3:
        i = _parse_index(tokens[1], theta, line_number)
        if vertices[i] is not None:
          raise errors.DecodeError('vertex {} given twice'.format(i + 1),
                                   line_number)
        vertices[i] = _parse_root(tokens[2], line_number)
      elif kind == 'e' and len(tokens) == 4:
        i = _parse_index(tokens[1], theta, line_number)
        j = _parse_index(tokens[2], theta, line_number)
        if i == j:
          raise errors.DecodeError('edge from a vertex to itself',
                                   line_number)
        key = (min(i, j), max(i, j))
        if key in edges:
          raise errors.DecodeError(
              'edge {} {} given twice'.format(key[0] + 1, key[1] + 1),
              line_number)
        edges[key] = _parse_root(tokens[3], line_number)
      else:
        raise errors.DecodeError(
            'expected "v i a/b" or "e i j a/b", got {!r}'.format(
                ' '.join(tokens)), line_number)
    missing = [i + 1 for i, v in enumerate(vertices) if v is None]
    if missing:
      raise errors.DecodeError('missing vertex labels for {}'.format(missing))
    return braiding.from_diagram(vertices, edges)

  def encode(self, q):
    """Formats a `braiding.BraidingMatrix` as text in this coder's form."""
    out = io.StringIO()
    out.write('{}\ntheta {}\n'.format(self._form, q.theta))
    if self._form == FULL_FORM:
      for row in q.entries:
        out.write(' '.join(str(entry) for entry in row) + '\n')
    else:
      for i, label in enumerate(q.diagram.vertex_labels):
        out.write('v {} {}\n'.format(i + 1, label))
      for (i, j), label in q.diagram.edge_labels:
        out.write('e {} {} {}\n'.format(i + 1, j + 1, label))
    return out.getvalue()


def read_matrix_input(path):
  """Reads and decodes a matrix file into a `DecodedMatrix`.

  Raises:
    errors.DecodeError: if the file cannot be read or parsed.
  """
  try:
    with io.open(path, encoding='utf-8') as f:
      text = f.read()
  except (IOError, OSError) as e:
    raise errors.DecodeError('cannot read {}: {}'.format(path, e))
  return MatrixCoder().decode_input(text)


def read_matrix_file(path):
  """Reads and decodes a matrix file into a `braiding.BraidingMatrix`."""
  return read_matrix_input(path).matrix
