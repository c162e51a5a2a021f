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
"""Tests for nichols_lie.dot_graphs."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from nichols_lie import dot_graphs
from nichols_lie import groupoid
from nichols_lie import test_case
from nichols_lie.catalog import fixtures


class DotGraphsTest(test_case.NicholsTestCase):

  def testDiagramGraph(self):
    q = fixtures.fixture('ufo3').matrix
    graph = dot_graphs.diagram_graph(q.diagram)
    self.assertEqual(graph.get_type(), 'graph')
    self.assertEqual(
        [node.get('xlabel') for node in
         (graph.get_node(name)[0] for name in ('1', '2', '3'))],
        ['"1/2"', '"1/3"', '"5/6"'])
    self.assertEqual(
        sorted((e.get_source(), e.get_destination(), e.get('label'))
               for e in graph.get_edges()),
        [('1', '2', '"2/3"'), ('2', '3', '"1/6"')])
    dot_string = graph.to_string()
    self.assertIn('shape=circle', dot_string)

  def testDisconnectedDiagramHasNoEdges(self):
    q = test_case.full_matrix([['1/3', '1'], ['1', '1/3']])
    graph = dot_graphs.diagram_graph(q.diagram)
    self.assertEmpty(graph.get_edges())
    self.assertLen(graph.get_node('2'), 1)

  def testAtlasGraph(self):
    atlas = groupoid.explore(fixtures.fixture('a01').matrix)
    graph = dot_graphs.atlas_graph(atlas)
    dot_string = graph.to_string()
    self.WriteRenderedDotFile(dot_string)
    self.assertIn('shape=Mrecord', dot_string)
    self.assertEqual(
        graph.get_node('x0')[0].get('label'), '"{x0|1/2 2/3|0/1 1/3}"')
    edges = graph.get_edges()
    # One drawn edge per pair of mutually inverse arrows, or per loop.
    self.assertLen(edges, len(set(
        (min(s, t), i, max(s, t)) for s, i, t in atlas.edges())))
    for edge in edges:
      self.assertIn(edge.get('label'), ('1', '2'))
    self.assertLen([n for n in graph.get_nodes() if n.get_name() != 'node'],
                   atlas.size)

  def testEscape(self):
    self.assertEqual(dot_graphs._escape('{a|<b>}'), r'\{a\|\<b\>\}')


if __name__ == '__main__':
  test_case.main()
