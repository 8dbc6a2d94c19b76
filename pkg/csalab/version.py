# -*- coding: utf-8 -*-
"""
To change the version of entire package, just edit this one location.
"""
__title__ = 'csalab'
__license__ = 'MIT'

version_info = (0, 1, 0)
__version__ = ".".join(map(str, version_info))
