# -*- coding: utf-8 -*-
"""
Holds misc. utility methods and the exception roots which prove to be
useful throughout this library.
"""
__title__ = 'csalab'
__license__ = 'MIT'

import codecs
import json
import logging
import os
import re
from fractions import Fraction

log = logging.getLogger(__name__)


class CsalabException(Exception):
    """Root of every error this library raises on purpose. Anything
    deriving from it is a precondition or input problem, except
    `ConsistencyException`.
    """
    kind = 'precondition'


class ConsistencyException(CsalabException):
    """A mathematical statement the library relies on failed for the
    computed numbers: an implementation or scenario error, never bad input.
    """
    kind = 'consistency'


class FileHelper(object):
    @staticmethod
    def loadResourceFile(filename):
        if not os.path.isabs(filename):
            dirpath = os.path.abspath(os.path.dirname(__file__))
            path = os.path.join(dirpath, 'resources', filename)
        else:
            path = filename
        try:
            with codecs.open(path, 'r', 'utf-8') as f:
                return f.read()
        except IOError:
            raise IOError("Couldn't open resource %s" % path)

    @staticmethod
    def loadResourceJson(filename):
        return json.loads(FileHelper.loadResourceFile(filename))


RATIONAL_RE = re.compile(r'^\s*(-?\d+)\s*(?:/\s*(-?\d+)\s*)?$')


def parse_fraction(value):
    """Exact rational from an int, a Fraction or a "num/den" string.
    Floats are refused, there is no exact reading of them.
    """
    if isinstance(value, bool):
        raise CsalabException('booleans are not rationals: %r' % (value,))
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        match = RATIONAL_RE.match(value)
        if match is None:
            raise CsalabException('malformed rational %r' % value)
        num = int(match.group(1))
        den = int(match.group(2)) if match.group(2) is not None else 1
        if den == 0:
            raise CsalabException('zero denominator in %r' % value)
        return Fraction(num, den)
    raise CsalabException('cannot read %r as an exact rational' % (value,))


def format_fraction(value):
    value = Fraction(value)
    return '%d/%d' % (value.numerator, value.denominator)


def extend_config(config, config_items):
    """
    We are handling config value setting like this for a cleaner api.
    Users just need to pass in a named param to an engine and we can
    dynamically generate a config object for it.
    """
    for key, val in list(config_items.items()):
        if hasattr(config, key):
            setattr(config, key, val)
        else:
            log.debug('ignoring unknown config key %s', key)

    return config
