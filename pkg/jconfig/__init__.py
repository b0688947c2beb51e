# -*- coding: utf-8 -*-
"""
:authors: qpredict contributors
:license: Apache License, Version 2.0, see LICENSE file

:copyright: (c) 2026 qpredict contributors
"""

__author__ = 'qpredict contributors'
__version__ = '1.0'

from .base import BaseConfig, ConfigSyntaxError
from .jconfig import Config
from .memory import MemoryConfig
