# -*- coding: utf-8 -*-
__title__ = 'csalab'
__license__ = 'MIT'

import sys

from .cli import main

sys.exit(main())
