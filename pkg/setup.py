#!/usr/bin/env python
# -*- coding: utf-8 -*-
from io import open
from setuptools import setup

"""
:authors: qpredict contributors
:license: Apache License, Version 2.0, see LICENSE file

:copyright: (c) 2026 qpredict contributors
"""


version = '1.0.0'

with open('README.md', encoding='utf-8') as f:
    long_description = f.read()

setup(
    name='qpredict',
    version=version,

    author='qpredict contributors',

    description=(
        u'Обобщенные байесовские предсказательные операторы плотности '
        u'и численная проверка их оптимальности по alpha-дивергенциям'
    ),
    long_description=long_description,
    long_description_content_type='text/markdown',

    license='Apache License, Version 2.0, see LICENSE file',

    packages=['qpredict', 'jconfig'],
    install_requires=['numpy', 'scipy', 'enum34;python_version<"3.4"', 'six'],
    entry_points={
        'console_scripts': ['qpredict = qpredict.cli:main'],
    },
    python_requires='>=3.6',

    classifiers=[
        'License :: OSI Approved :: Apache Software License',
        'Operating System :: OS Independent',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.6',
        'Programming Language :: Python :: 3.7',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: Implementation :: CPython',
        'Topic :: Scientific/Engineering :: Physics',
    ]
)
