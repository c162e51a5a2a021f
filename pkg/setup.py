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
"""Package Setup script for nichols-lie.
"""
from setuptools import find_packages
from setuptools import setup

# Get version from version module.
with open('nichols_lie/version.py') as fp:
  globals_dict = {}
  exec(fp.read(), globals_dict)  # pylint: disable=exec-used
__version__ = globals_dict['__version__']


def _make_required_install_packages():
  return [
      'absl-py>=0.7,<2',
      'apache-beam>=2.14,<3',
      'numpy>=1.16,<2',
      'networkx>=2.3,<4',
      'pydot>=1.2.0,<2',
      'sympy>=1.4,<2',
  ]


# Get the long description from the README file.
with open('README.md') as fp:
  _LONG_DESCRIPTION = fp.read()

setup(
    name='nichols-lie',
    version=__version__,
    author='The Nichols-Lie Authors',
    license='Apache 2.0',
    classifiers=[
        'Development Status :: 4 - Beta',
        'Intended Audience :: Education',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: Apache Software License',
        'Operating System :: OS Independent',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.7',
        'Programming Language :: Python :: 3.8',
        'Topic :: Scientific/Engineering',
        'Topic :: Scientific/Engineering :: Mathematics',
        'Topic :: Software Development :: Libraries :: Python Modules',
    ],
    namespace_packages=[],
    install_requires=_make_required_install_packages(),
    python_requires='>=3.7,<4',
    packages=find_packages(),
    package_data={'nichols_lie.catalog': ['data/*.nq', 'data/*.txt']},
    entry_points={
        'console_scripts': ['nichols-lie=nichols_lie.cli:run_main'],
    },
    description=('Lie types of the primitive Lie algebras of finite-'
                 'dimensional Nichols algebras of diagonal type'),
    long_description=_LONG_DESCRIPTION,
    long_description_content_type='text/markdown',
    keywords='nichols algebra weyl groupoid root system lie algebra',
    requires=[])
