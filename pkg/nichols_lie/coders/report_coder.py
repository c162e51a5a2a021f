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
"""Coders that serialize a `lie_type.LieTypeReport`.

Both coders number vertices from 1.  The JSON form is a flat document with
sorted keys, so encoding the same report twice gives identical bytes.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import io
import json

__all__ = ['JsonReportCoder', 'TextReportCoder', 'format_vector']


def format_vector(vector):
  return '({})'.format(', '.join(str(int(x)) for x in vector))


def _vector_list(vectors):
  return [[int(x) for x in v] for v in vectors]


def _matrix_rows(q):
  return [[str(entry) for entry in row] for row in q.entries]


def _diagram_dict(diagram):
  return {
      'vertices': [str(label) for label in diagram.vertex_labels],
      'edges': [[i + 1, j + 1, str(label)]
                for (i, j), label in diagram.edge_labels],
  }


def _root_entries(report, cartan_only):
  entries = []
  for datum in report.root_data:
    if cartan_only and not datum.is_cartan:
      continue
    entry = {'beta': [int(x) for x in datum.beta], 'n_beta': datum.n_beta}
    if not cartan_only:
      entry['cartan'] = datum.is_cartan
    entries.append(entry)
  return entries


class JsonReportCoder(object):
  """Encodes reports as JSON documents."""

  def __init__(self, indent=2):
    self._indent = indent

  def _dumps(self, document):
    return json.dumps(document, sort_keys=True, indent=self._indent) + '\n'

  def as_dict(self, report):
    """The full report as a JSON-compatible dict."""
    return {
        'input': _matrix_rows(report.matrix),
        'input_form': report.input_form,
        'diagram': _diagram_dict(report.diagram),
        'objects_count': report.objects_count,
        'atlas_closed': report.atlas_closed,
        'word': [i + 1 for i in report.word.letters],
        'positive_roots': _vector_list(report.positive_roots),
        'cartan_roots': _root_entries(report, cartan_only=True),
        'condition_31': report.condition_31.status,
        'omega_plus': _vector_list(report.omega.positive),
        'pi': _vector_list(report.pi),
        'cartan_matrix': [list(row) for row in report.cartan_matrix],
        'type': report.lie_type.name,
        'axioms': {r.name: r.passed for r in report.axioms.results},
        'warnings': list(report.warnings),
    }

  def encode(self, report):
    return self._dumps(self.as_dict(report))

  def encode_roots(self, report):
    """Only the positive roots with their orders and Cartan flags."""
    return self._dumps({
        'input': _matrix_rows(report.matrix),
        'positive_roots': _root_entries(report, cartan_only=False),
        'cartan_roots': _root_entries(report, cartan_only=True),
    })

  def encode_verdicts(self, verdicts):
    return self._dumps([verdict._asdict() for verdict in verdicts])


class TextReportCoder(object):
  """Encodes reports as human-readable `key: value` blocks."""

  def encode(self, report):
    out = io.StringIO()
    q = report.matrix
    out.write('input:\n')
    for row in _matrix_rows(q):
      out.write('  {}\n'.format(' '.join(row)))
    out.write('diagram:\n')
    for i, label in enumerate(report.diagram.vertex_labels):
      out.write('  v {} {}\n'.format(i + 1, label))
    for (i, j), label in report.diagram.edge_labels:
      out.write('  e {} {} {}\n'.format(i + 1, j + 1, label))
    out.write('objects: {}{}\n'.format(
        report.objects_count, '' if report.atlas_closed else ' (partial)'))
    out.write('word: {}\n'.format(' '.join(
        str(i + 1) for i in report.word.letters)))
    out.write('positive roots: {}\n'.format(len(report.positive_roots)))
    self._write_root_table(out, report)
    out.write('condition_31: {}'.format(report.condition_31.status))
    if report.condition_31.witness:
      alpha, beta = report.condition_31.witness
      out.write(' at {} {}'.format(format_vector(alpha), format_vector(beta)))
    out.write('\n')
    out.write('omega_plus: {}\n'.format(' '.join(
        format_vector(v) for v in report.omega.positive)))
    out.write('pi: {}\n'.format(' '.join(format_vector(v) for v in report.pi)))
    out.write('cartan matrix:\n')
    for row in report.cartan_matrix:
      out.write('  {}\n'.format(' '.join('{:>2}'.format(x) for x in row)))
    out.write('type: {}\n'.format(report.lie_type.name))
    out.write('axioms: {}\n'.format(', '.join(
        '{}={}'.format(r.name, 'ok' if r.passed else 'FAILED')
        for r in report.axioms.results)))
    for warning in report.warnings:
      out.write('warning: {}\n'.format(warning))
    return out.getvalue()

  def encode_roots(self, report):
    out = io.StringIO()
    out.write('positive roots: {}\n'.format(len(report.positive_roots)))
    self._write_root_table(out, report)
    return out.getvalue()

  def encode_verdicts(self, verdicts):
    out = io.StringIO()
    for verdict in verdicts:
      out.write('{:<16} {}'.format(verdict.fixture, verdict.status))
      if verdict.detail:
        out.write('  {}'.format(verdict.detail))
      out.write('\n')
    return out.getvalue()

  def _write_root_table(self, out, report):
    for datum in report.root_data:
      out.write('  {:<24} N={:<3} {}\n'.format(
          format_vector(datum.beta), datum.n_beta,
          'cartan' if datum.is_cartan else 'n~={}'.format(datum.n_tilde)))
