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
"""DOT renderings of Dynkin diagrams and Weyl groupoid atlases."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import collections

import pydot

__all__ = ['diagram_graph', 'atlas_graph']


def _escape(line):
  for char in '<>{}|':
    line = line.replace(char, '\\%s' % char)
  return line


def _sorted_dot(directed):
  graph = pydot.Dot(graph_type='digraph' if directed else 'graph')
  graph.obj_dict = collections.OrderedDict(
      sorted(graph.obj_dict.items(), key=lambda t: t[0]))
  return graph


def diagram_graph(diagram):
  """Renders a `braiding.DynkinDiagram`.

  Vertices are named by their 1-based index and labelled with q_ii; edges
  carry qtilde_ij.

  Returns:
    An undirected `pydot.Dot`.
  """
  graph = _sorted_dot(directed=False)
  graph.set_node_defaults(shape='circle')
  for i, label in enumerate(diagram.vertex_labels):
    graph.add_node(pydot.Node(str(i + 1), xlabel='"{}"'.format(label),
                              label=str(i + 1)))
  for (i, j), label in diagram.edge_labels:
    graph.add_edge(pydot.Edge(str(i + 1), str(j + 1),
                              label='"{}"'.format(label)))
  return graph


def atlas_graph(atlas):
  """Renders the known objects and edges of a `groupoid.GroupoidAtlas`.

  Each object is a record node listing its matrix rows.  The involution
  rho_i gives a pair of edges; only the one from the lower id is drawn,
  labelled with the 1-based reflecting index.

  Returns:
    A `pydot.Dot`.
  """
  graph = _sorted_dot(directed=False)
  graph.set_node_defaults(shape='Mrecord')
  for object_id, q in enumerate(atlas.objects):
    rows = [_escape(' '.join(str(e) for e in row)) for row in q.entries]
    graph.add_node(
        pydot.Node('x{}'.format(object_id),
                   label='"{{x{}|{}}}"'.format(object_id, '|'.join(rows))))
  for source, i, target in atlas.edges():
    if source <= target:
      graph.add_edge(pydot.Edge('x{}'.format(source), 'x{}'.format(target),
                                label=str(i + 1)))
  return graph
