#
# PDD
#
# Copyright (C) 2026 The PDD Graph developers
# All rights reserved.
#
# This software may be modified and distributed under the terms
# of the MIT license.  See the LICENSE file for details.
#


from setuptools import setup, find_packages

from pdd import About


setup(name="pddgraph",
      version=About.VERSION,
      description=About.DESCRIPTION,
      packages=find_packages(exclude=["tests*", "tests.*"]),
      license="MIT",
      python_requires=">=3.7",
      install_requires=[
          "PyYAML>=5.1",
          "rdflib>=6.0"
      ],
      test_suite="tests",
      entry_points = {
          'console_scripts': [
              'pdd = pdd.run:main'
          ]
      }
)
