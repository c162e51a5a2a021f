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
"""Exceptions raised by nichols_lie.

The CLI maps these onto exit codes, so every module raises from this
hierarchy rather than defining its own.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function


class Error(Exception):
  """Base class for all nichols_lie errors."""


class ValidationError(Error, ValueError):
  """A braiding matrix or input file violates the accepted input class."""


class DecodeError(ValidationError):
  """Text input could not be parsed.

  Attributes:
    line_number: 1-based line of the offending input, or None.
  """

  def __init__(self, message, line_number=None):
    if line_number is not None:
      message = 'line {}: {}'.format(line_number, message)
    super(DecodeError, self).__init__(message)
    self.line_number = line_number


class BoundExceeded(Error):
  """An exploration bound was hit; the input is likely not of finite type.

  Attributes:
    bound: the bound that was exceeded.
    what: a short name of the bounded quantity, e.g. 'objects'.
  """

  def __init__(self, bound, what):
    super(BoundExceeded, self).__init__(
        'more than {} {}; the input is probably not of finite type'.format(
            bound, what))
    self.bound = bound
    self.what = what


class InternalInconsistency(Error):
  """A runtime self-check failed."""


class NotIntegral(InternalInconsistency):
  """A coroot pairing is not an integer."""


class Unclassifiable(InternalInconsistency):
  """A Cartan matrix component matches no finite-type template."""


class UnknownFixture(Error, KeyError):
  """A requested catalog fixture does not exist."""

  def __str__(self):
    return str(self.args[0]) if self.args else ''
