"""Phase diagrams of finite group actions, singularity invariants and rate functions."""

import json as _json

from . import _core
from ._core import (
    CapExceeded,
    DomainError,
    ParseError,
    ValidationError,
    bernoulli_rate,
    binary_entropy,
    milnor_number,
    seed_fixtures,
    spectrum,
    stabilize,
    weight_milnor,
)

__all__ = [
    "CapExceeded",
    "DomainError",
    "ParseError",
    "ValidationError",
    "bernoulli_rate",
    "binary_entropy",
    "categories_isomorphic",
    "cgf",
    "corpus",
    "cramer",
    "degeneracy_quiver",
    "export_dot",
    "group_info",
    "legendre",
    "milnor_number",
    "orbit_category",
    "phase_diagram",
    "seed_fixtures",
    "spectrum",
    "stabilize",
    "strata_category",
    "weight_milnor",
]


def _text(value):
    return value if isinstance(value, str) else _json.dumps(value)


def _outcomes(outcomes):
    if isinstance(outcomes, dict):
        return list(outcomes.items())
    return [tuple(o) for o in outcomes]


def group_info(group):
    return _json.loads(_core.group_info(_text(group)))


def orbit_category(group):
    """Olog dict of the orbit category."""
    return _json.loads(_core.orbit_category(_text(group)))


def phase_diagram(group, complex):
    return _json.loads(_core.phase_diagram(_text(group), _text(complex)))


def strata_category(strata):
    return _json.loads(_core.strata_category(_text(strata)))


def degeneracy_quiver(group, representation):
    return _json.loads(_core.degeneracy_quiver(_text(group), _text(representation)))


def export_dot(olog):
    return _core.export_dot(_text(olog))


def categories_isomorphic(a, b):
    return _core.categories_isomorphic(_text(a), _text(b))


def corpus():
    return _json.loads(_core.corpus())


def cgf(outcomes, theta):
    """outcomes: {value: probability} or [(value, probability), ...]."""
    return _core.cgf(_outcomes(outcomes), theta)


def legendre(outcomes, x):
    """Rate function; +inf outside the outcome hull."""
    return _core.legendre(_outcomes(outcomes), x)


def cramer(outcomes, x):
    return _core.cramer(_outcomes(outcomes), x)
