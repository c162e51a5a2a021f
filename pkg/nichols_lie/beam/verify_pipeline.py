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
"""Fixture verification as an Apache Beam pipeline.

Each fixture is analyzed independently, so the work is a single ParDo over
fixture names.  Verdicts are sorted after collection, which makes the output
identical to `catalog.verify.verify_tables`.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import io
import json
import os
import shutil
import tempfile

from absl import logging
import apache_beam as beam

from nichols_lie.catalog import verify


@beam.typehints.with_input_types(str)
@beam.typehints.with_output_types(verify.Verdict)
class _VerifyFixtureDoFn(beam.DoFn):
  """Maps a fixture name to its `verify.Verdict`."""

  def __init__(self, options, fixture_list):
    super(_VerifyFixtureDoFn, self).__init__()
    self._options = options
    self._fixture_list = fixture_list
    self._fixtures = None

  def setup(self):
    self._fixtures = {
        f.name: f for f in verify.select_fixtures(None, self._fixture_list)
    }

  def process(self, name):
    if self._fixtures is None:
      self.setup()
    yield verify.verify_fixture(self._fixtures[name], self._options)


class AnalyzeFixtures(beam.PTransform):
  """Verifies a PCollection of fixture names, producing `verify.Verdict`s."""

  def __init__(self, options=None, fixture_list=None):
    """Initializes the transform.

    Args:
      options: `lie_type.AnalysisOptions` shared by all fixtures.
      fixture_list: fixtures to use instead of the bundled ones.
    """
    super(AnalyzeFixtures, self).__init__()
    self._options = options
    self._fixture_list = fixture_list

  def expand(self, names):
    return (names
            | 'Reshuffle' >> beam.Reshuffle()
            | 'VerifyFixture' >> beam.ParDo(
                _VerifyFixtureDoFn(self._options, self._fixture_list)))


def _verdict_to_json(verdict):
  return json.dumps(verdict._asdict(), sort_keys=True)


def run_verify_tables(options=None, names=None, fixture_list=None,
                      pipeline_options=None):
  """Runs `AnalyzeFixtures` on a local pipeline and collects the verdicts.

  Args:
    options: `lie_type.AnalysisOptions` shared by all fixtures.
    names: optional fixture names to restrict the run to.
    fixture_list: fixtures to use instead of the bundled ones.
    pipeline_options: optional `beam.options.pipeline_options.PipelineOptions`.

  Returns:
    A list of `verify.Verdict` sorted by fixture name.
  """
  selected = [
      f.name for f in verify.select_fixtures(names, fixture_list)
  ]
  output_dir = tempfile.mkdtemp(prefix='nichols_lie_verify')
  prefix = os.path.join(output_dir, 'verdicts')
  try:
    with beam.Pipeline(options=pipeline_options) as pipeline:
      _ = (pipeline
           | 'CreateNames' >> beam.Create(selected)
           | 'AnalyzeFixtures' >> AnalyzeFixtures(options, fixture_list)
           | 'ToJson' >> beam.Map(_verdict_to_json)
           | 'WriteVerdicts' >> beam.io.WriteToText(
               prefix, shard_name_template=''))
    with io.open(prefix, encoding='utf-8') as f:
      verdicts = [
          verify.Verdict(**json.loads(line)) for line in f if line.strip()
      ]
  finally:
    shutil.rmtree(output_dir, ignore_errors=True)
  logging.info('Verified %d fixtures in a Beam pipeline', len(verdicts))
  return sorted(verdicts)
