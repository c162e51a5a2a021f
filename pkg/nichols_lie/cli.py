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
"""Command-line front end.

Usage:
  nichols-lie analyze FILE [--json] [--skip_31] [--explore] ...
  nichols-lie roots FILE [--json]
  nichols-lie verify-tables [FIXTURE ...] [--parallel]

Exit codes: 0 success, 1 verification mismatch, 2 invalid input, 3 bound
exceeded, 4 internal inconsistency.  Reports go to stdout; diagnostics go to
stderr through absl logging.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import collections
import io
import sys

from absl import app
from absl import flags
from absl import logging

from nichols_lie import dot_graphs
from nichols_lie import errors
from nichols_lie import groupoid
from nichols_lie import lie_type
from nichols_lie.catalog import verify
from nichols_lie.coders import matrix_coder
from nichols_lie.coders import report_coder

FLAGS = flags.FLAGS

flags.DEFINE_integer('max_objects', groupoid.DEFAULT_MAX_OBJECTS,
                     'Bound on the number of Weyl groupoid objects.')
flags.DEFINE_integer('max_roots', groupoid.DEFAULT_MAX_ROOTS,
                     'Bound on the number of positive roots.')
flags.DEFINE_boolean('json', False, 'Emit JSON instead of text.')
flags.DEFINE_boolean(
    'skip_31', False,
    'Do not check the centrality condition; report it as UNKNOWN.')
flags.DEFINE_boolean('explore', False,
                     'Compute the whole object set of the groupoid first.')
flags.DEFINE_integer('first_letter', None,
                     '1-based index to start the longest word with.')
flags.DEFINE_boolean('parallel', False,
                     'verify-tables: run fixtures in a local Beam pipeline.')
flags.DEFINE_string('dot_output', None,
                    'analyze: write the Dynkin diagram as DOT to this path.')
flags.DEFINE_string('dot_atlas_output', None,
                    'analyze: write the groupoid objects as DOT to this path.')

flags.DEFINE_alias('max-objects', 'max_objects')
flags.DEFINE_alias('max-roots', 'max_roots')
flags.DEFINE_alias('skip-31', 'skip_31')

ANALYZE = 'analyze'
ROOTS = 'roots'
VERIFY_TABLES = 'verify-tables'
COMMANDS = (ANALYZE, ROOTS, VERIFY_TABLES)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INVALID = 2
EXIT_BOUND = 3
EXIT_INTERNAL = 4


class CliConfig(
    collections.namedtuple('CliConfig', [
        'command', 'input_path', 'fixtures', 'output_format', 'options',
        'parallel', 'dot_output', 'dot_atlas_output'
    ])):
  """A validated command line.

  Attributes:
    command: one of COMMANDS.
    input_path: the matrix file for analyze and roots, else None.
    fixtures: fixture names for verify-tables; None means all.
    output_format: 'text' or 'json'.
    options: `lie_type.AnalysisOptions`.
    parallel: whether verify-tables uses the Beam pipeline.
    dot_output: optional path for the Dynkin diagram.
    dot_atlas_output: optional path for the groupoid atlas.
  """

  __slots__ = ()


def config_from_argv(argv, flag_values=FLAGS):
  """Builds a `CliConfig` from positional arguments and parsed flags.

  Raises:
    errors.ValidationError: on an unknown command, a missing or extra
      argument, or non-positive bounds.
  """
  args = list(argv[1:])
  if not args or args[0] not in COMMANDS:
    raise errors.ValidationError('expected a command out of {}, got {}'.format(
        ', '.join(COMMANDS), args[:1]))
  command = args.pop(0)
  input_path = None
  names = None
  if command == VERIFY_TABLES:
    names = args or None
  elif len(args) != 1:
    raise errors.ValidationError('{} takes exactly one input file'.format(
        command))
  else:
    input_path = args[0]
  first_letter = flag_values.first_letter
  if first_letter is not None:
    if first_letter < 1:
      raise errors.ValidationError('--first_letter is 1-based')
    first_letter -= 1
  try:
    options = lie_type.AnalysisOptions(
        max_objects=flag_values.max_objects,
        max_roots=flag_values.max_roots,
        skip_31=flag_values.skip_31,
        close_atlas=flag_values.explore,
        first_letter=first_letter)
  except ValueError as e:
    raise errors.ValidationError(str(e))
  return CliConfig(
      command=command,
      input_path=input_path,
      fixtures=names,
      output_format='json' if flag_values.json else 'text',
      options=options,
      parallel=flag_values.parallel,
      dot_output=flag_values.dot_output,
      dot_atlas_output=flag_values.dot_atlas_output)


def _coder(config):
  if config.output_format == 'json':
    return report_coder.JsonReportCoder()
  return report_coder.TextReportCoder()


def _write_dot(graph, path):
  with io.open(path, 'w', encoding='utf-8') as f:
    f.write(graph.to_string())


def _run_analysis(config, out):
  decoded = matrix_coder.read_matrix_input(config.input_path)
  q = decoded.matrix
  if config.options.first_letter is not None and (
      config.options.first_letter >= q.theta):
    raise errors.ValidationError('--first_letter {} exceeds rank {}'.format(
        config.options.first_letter + 1, q.theta))
  atlas = groupoid.GroupoidAtlas(q, config.options.max_objects)
  if config.options.close_atlas:
    atlas.close()
  report = lie_type.analyze_atlas(
      atlas, config.options, input_form=decoded.form)
  coder = _coder(config)
  if config.command == ROOTS:
    out.write(coder.encode_roots(report))
    return EXIT_OK
  out.write(coder.encode(report))
  if config.dot_output:
    _write_dot(dot_graphs.diagram_graph(report.diagram), config.dot_output)
  if config.dot_atlas_output:
    _write_dot(dot_graphs.atlas_graph(atlas), config.dot_atlas_output)
  return EXIT_OK


def _run_verification(config, out):
  if config.parallel:
    # Beam is only loaded for --parallel.
    from nichols_lie.beam import verify_pipeline  # pylint: disable=g-import-not-at-top
    verdicts = verify_pipeline.run_verify_tables(config.options,
                                                 config.fixtures)
  else:
    verdicts = verify.verify_tables(config.options, config.fixtures)
  out.write(_coder(config).encode_verdicts(verdicts))
  return EXIT_MISMATCH if verify.has_failures(verdicts) else EXIT_OK


def run(config, out=None):
  """Executes a command and returns its exit code.

  Domain errors are logged and mapped onto exit codes; nothing but the
  report is written to out.
  """
  out = out or sys.stdout
  try:
    if config.command == VERIFY_TABLES:
      return _run_verification(config, out)
    return _run_analysis(config, out)
  except errors.ValidationError as e:
    logging.error('Invalid input: %s', e)
    return EXIT_INVALID
  except errors.UnknownFixture as e:
    logging.error('Invalid input: %s', e)
    return EXIT_INVALID
  except errors.BoundExceeded as e:
    logging.error('%s', e)
    return EXIT_BOUND
  except errors.InternalInconsistency as e:
    logging.error('Internal inconsistency: %s', e)
    return EXIT_INTERNAL


def main(argv):
  try:
    config = config_from_argv(argv)
  except errors.ValidationError as e:
    logging.error('%s', e)
    return EXIT_INVALID
  return run(config)


def run_main():
  app.run(main)


if __name__ == '__main__':
  run_main()
