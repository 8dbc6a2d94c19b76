# -*- coding: utf-8 -*-
"""
Unlike configuration.py, this file is meant for static, entire project
encompassing settings, like enumeration ceilings read from the
environment and the location of bundled resources.
"""
__title__ = 'csalab'
__license__ = 'MIT'

import logging
import os

from .version import __version__

log = logging.getLogger(__name__)

PARENT_DIRECTORY = os.path.dirname(os.path.abspath(__file__))

SCHEMA_DIRECTORY = os.path.join(PARENT_DIRECTORY, 'resources', 'schema')
SCHEMA_FILE = os.path.join(SCHEMA_DIRECTORY, 'scenario.json')

# sympy.isprime is exact below this bound (fixed Miller-Rabin bases) and
# falls back to the strong BPSW test above it
PRIMALITY_DETERMINISTIC_BOUND = 2 ** 64

# Exhaustive enumerations larger than this switch to seeded sampling
DEFAULT_BUDGET = 10 ** 6
DEFAULT_SAMPLES = 10 ** 4
DEFAULT_SEED = 0

REPORT_FORMAT_VERSION = 'csalab/%s' % __version__


def _read_int_env(name):
    raw = os.environ.get(name)
    if raw is None or raw == '':
        return None
    try:
        value = int(raw)
    except ValueError:
        log.warning('ignoring %s=%r, not an integer', name, raw)
        return None
    if value < 1:
        log.warning('ignoring %s=%r, must be positive', name, raw)
        return None
    return value


# Hard ceiling for every enumeration in the process, whatever the
# per-run configuration says
GLOBAL_BUDGET = _read_int_env('CSALAB_BUDGET')

# Structural re-validation of subgroups and Brauer classes on every
# construction; tests switch this on
VALIDATE_STRUCTURES = os.environ.get('CSALAB_VALIDATE', '') not in ('', '0')
