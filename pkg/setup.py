#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Python setup file for the csalab package.
"""
from setuptools import find_packages, setup

version = {}
with open('csalab/version.py') as f:
    exec(f.read(), version)

setup(
    name='csalab',
    version=version['__version__'],
    description='Index computations for central simple algebras.',
    license='MIT',
    packages=find_packages(exclude=['tests', 'tests.*', 'examples', 'examples.*']),
    include_package_data=True,
    package_data={'csalab': ['resources/schema/*.json']},
    install_requires=['sympy>=1.9', 'jsonschema>=3.2.0'],
    python_requires='>=3.6',
    zip_safe=False,
)
