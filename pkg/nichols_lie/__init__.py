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
"""Init module for nichols_lie."""

# cartan_roots and scaled_system each export a function named like the
# module, so they are not star-imported.
from nichols_lie import cartan_roots
from nichols_lie import coders
from nichols_lie import scaled_system
# pylint: disable=wildcard-import
from nichols_lie.braiding import *
from nichols_lie.cyclotomic import *
from nichols_lie.dynkin_types import *
from nichols_lie.errors import *
from nichols_lie.groupoid import *
from nichols_lie.lie_type import *
# pylint: enable=wildcard-import

# Import version string.
from nichols_lie.version import __version__
