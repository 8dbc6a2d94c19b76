# -*- coding: utf-8 -*-
"""
An algebra that embeds nowhere still has an index to compute.
"""
__title__ = 'csalab'
__license__ = 'MIT'

from .arith import QmodZ
from .brauer import (QQ, AbelianField, BrauerClass, CyclicData,
                     DivisionAlgebra, cyclic_algebra, field_layer, index,
                     make_class, restrict, splits, tensor)
from .configuration import Configuration, Enumeration
from .embed import (EmbedInstance, Thm6Scenario, counterexample_run,
                    embed_check, thm6_certificate, thm6_divisibility,
                    thm6_expression, thm7_pipeline)
from .generic import GenericAlgebra, MixedClass, mixed_index, n_ab, ud_power_index
from .groupring import CosetSpace, FiniteGroup, GroupRingElement, Subgroup
from .reduction import (SplitOracle, TableOracle, TransferSetup, UnmovedOracle,
                        reduce_double, reduce_single, term_value, unmoved_oracle)
from .utils import ConsistencyException, CsalabException
from .version import __version__

# Set default logging handler to avoid "No handler found" warnings.
import logging
from logging import NullHandler

logging.getLogger(__name__).addHandler(NullHandler())
