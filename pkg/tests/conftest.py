# -*- coding: utf-8 -*-
import pytest

from csalab import settings


@pytest.fixture(autouse=True, scope='session')
def validate_structures():
    previous = settings.VALIDATE_STRUCTURES
    settings.VALIDATE_STRUCTURES = True
    yield
    settings.VALIDATE_STRUCTURES = previous
