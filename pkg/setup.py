#!/usr/bin/env python
"""
Sadic - Setup Script
Installs the sadic package and the ``sadic`` console script

Usage:
    pip install .
"""
import os
import re

from setuptools import find_packages, setup

HERE = os.path.dirname(os.path.abspath(__file__))


def read_version():
    """Version string from sadic/__init__.py"""
    with open(os.path.join(HERE, 'sadic', '__init__.py')) as f:
        return re.search(r"__version__ = '([^']+)'", f.read()).group(1)


def read_requirements():
    """Runtime requirements (everything above the testing section)"""
    requirements = []
    with open(os.path.join(HERE, 'requirements.txt')) as f:
        for line in f:
            line = line.strip()
            if line.startswith('# Testing'):
                break
            if line and not line.startswith('#'):
                requirements.append(line)
    return requirements


setup(
    name='sadic',
    version=read_version(),
    description='Multidimensional S-adic substitutions: generation, languages, decoration and desubstitution',
    packages=find_packages(exclude=('tests', 'tests.*')),
    py_modules=['config'],
    package_data={'sadic': ['static/systems/*.json']},
    python_requires='>=3.9',
    install_requires=read_requirements(),
    extras_require={'test': ['pytest==7.4.3']},
    entry_points={'console_scripts': ['sadic=sadic.controllers.cli:main']},
)
