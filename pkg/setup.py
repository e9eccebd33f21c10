#!/usr/bin/env python
from setuptools import setup, find_packages

setup(name='gaussci',
      version='0.1.0',
      description='Exact Gaussian conditional independence implication for cyclic binomial models',
      packages=find_packages(exclude=['tests']),
      install_requires=['sympy>=1.12', 'numpy>=1.17'],
      extras_require={'test': ['pytest', 'hypothesis']},
      entry_points={'console_scripts': ['gaussci = gaussci:main']},
      author='The gaussci developers',
      license='GPLv3',
      python_requires='>=3.7')
