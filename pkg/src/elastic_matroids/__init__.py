"""Exact connectivity analysis of small matroids and their elastic elements."""

from .catalog import glue, glued_theta, mk4, random_linear, theta, theta_minus, uniform, wheel, whirl
from .connectivity import (
    SeparationTriple,
    cyclic_3_separations,
    is_swirl_like,
    is_three_connected,
    k_separations,
    lambda_,
    local_connectivity,
    mark_maximal,
    vertical_3_separations,
)
from .core import (
    Matroid,
    closure,
    coclosure,
    cocircuits,
    circuits,
    contract,
    corank,
    cosimplify,
    delete,
    dual,
    rank,
    restrict,
    settings,
    simplify,
)
from .documents import parse, to_document
from .elasticity import ElasticityReport, elasticity_report, is_contractible, is_deletable
from .structures import cosegments, fans, is_theta_restriction, segments, theta_separators, triads, triangles
from .verify import oracle_crosscheck, verify_bixby, verify_corollary2, verify_theorem1

__version__ = "0.1.0"
