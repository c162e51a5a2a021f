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
"""Exact arithmetic on roots of unity.

A root of unity exp(2*pi*i*num/den) is stored by its exponent num/den reduced
into [0, 1).  Products, powers, orders and the test for 1 are all the
pipeline needs, and each reduces to integer arithmetic on the exponent.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import collections
import fractions
import math
import numbers

from nichols_lie import errors

__all__ = [
    'UnityRoot',
    'ONE',
    'times',
    'power',
    'order',
    'bilinear_form',
    'parse_unity_root',
]


class UnityRoot(collections.namedtuple('UnityRoot', ['num', 'den'])):
  """A root of unity in canonical form.

  Attributes:
    num: numerator of the exponent, 0 <= num < den.
    den: denominator of the exponent, coprime to num.  This is also the
      multiplicative order.
  """

  __slots__ = ()

  def __new__(cls, num, den=1):
    if not isinstance(num, numbers.Integral) or isinstance(num, bool):
      raise TypeError('num must be an integer, got {!r}'.format(num))
    if not isinstance(den, numbers.Integral) or isinstance(den, bool):
      raise TypeError('den must be an integer, got {!r}'.format(den))
    if den < 1:
      raise ValueError('den must be positive, got {}'.format(den))
    num = int(num) % int(den)
    divisor = math.gcd(num, int(den))
    return super(UnityRoot, cls).__new__(cls, num // divisor,
                                         int(den) // divisor)

  @classmethod
  def from_fraction(cls, exponent):
    exponent = fractions.Fraction(exponent)
    return cls(exponent.numerator, exponent.denominator)

  @property
  def exponent(self):
    return fractions.Fraction(self.num, self.den)

  def is_one(self):
    return self.num == 0

  def __mul__(self, other):
    if not isinstance(other, UnityRoot):
      return NotImplemented
    return times(self, other)

  def __pow__(self, k):
    return power(self, k)

  def __str__(self):
    return '{}/{}'.format(self.num, self.den)


ONE = UnityRoot(0, 1)


def times(u, v):
  """Returns the product u*v."""
  return UnityRoot(u.num * v.den + v.num * u.den, u.den * v.den)


def power(u, k):
  """Returns u**k; k may be negative."""
  return UnityRoot(u.num * k, u.den)


def order(u):
  """Returns the multiplicative order of u."""
  return u.den


def bilinear_form(q, alpha, beta):
  """Evaluates q(alpha, beta) = prod_{i,j} q_ij^(alpha_i beta_j).

  Args:
    q: a `braiding.BraidingMatrix`.
    alpha: a root-lattice vector of length theta.
    beta: a root-lattice vector of length theta.

  Returns:
    The `UnityRoot` q(alpha, beta).

  Raises:
    ValueError: if a vector does not have length theta.
  """
  theta = q.theta
  if len(alpha) != theta or len(beta) != theta:
    raise ValueError('vectors must have length {}, got {} and {}'.format(
        theta, len(alpha), len(beta)))
  exponents = q.exponents
  total = 0
  for i, a in enumerate(alpha):
    if not a:
      continue
    row = exponents[i]
    total += int(a) * sum(int(b) * row[j] for j, b in enumerate(beta) if b)
  return UnityRoot(total, q.level)


def parse_unity_root(text):
  """Parses 'a/b' (reduced or not) or '1' into a `UnityRoot`.

  Args:
    text: the textual exponent.

  Returns:
    The canonical `UnityRoot`.

  Raises:
    errors.DecodeError: if the text is not an exponent.
  """
  text = text.strip()
  if text == '1':
    return ONE
  message = 'expected an exponent "a/b", got {!r}'.format(text)
  parts = text.split('/')
  if len(parts) != 2:
    raise errors.DecodeError(message)
  try:
    num, den = int(parts[0]), int(parts[1])
  except ValueError:
    raise errors.DecodeError(message)
  if den < 1:
    raise errors.DecodeError(
        'exponent denominator must be positive, got {!r}'.format(text))
  return UnityRoot(num, den)
