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
"""Module level imports for nichols_lie.coders."""

from nichols_lie.coders.matrix_coder import DecodedMatrix
from nichols_lie.coders.matrix_coder import MatrixCoder
from nichols_lie.coders.matrix_coder import read_matrix_file
from nichols_lie.coders.matrix_coder import read_matrix_input
from nichols_lie.coders.report_coder import JsonReportCoder
from nichols_lie.coders.report_coder import TextReportCoder
