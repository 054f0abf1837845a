"""Python bindings for the nlgraph library.

Graphs, configurations and certificates are backed by the C++ core.
Rational inputs accept ``int``, ``str`` or ``fractions.Fraction``; rational
outputs are returned as ``Fraction``, with ``None`` standing for +infinity.
"""

from fractions import Fraction

from . import _nlgraph
from ._nlgraph import (
    CertificateError,
    Config,
    ConfigError,
    Graph,
    GraphError,
    ModificationError,
    NlgraphError,
    ParseError,
    ValuationError,
    apply_script,
    betti,
    certify,
    core,
    equivalent,
    homeomorphic,
    is_connected,
    is_tree,
    isomorphism,
    random_modifications,
    reduce,
    validate,
    verify,
)

__all__ = [
    "CertificateError",
    "Config",
    "ConfigError",
    "Graph",
    "GraphError",
    "ModificationError",
    "NlgraphError",
    "ParseError",
    "ValuationError",
    "apply_script",
    "betti",
    "certify",
    "core",
    "equivalent",
    "eval_iterated",
    "eval_monomial",
    "homeomorphic",
    "is_connected",
    "is_tree",
    "isomorphism",
    "normalize",
    "random_modifications",
    "reduce",
    "retract_to_skeleton",
    "skeleton_weights",
    "validate",
    "value_on_ideal",
    "verify",
]


def _q(x):
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    return str(x)


def _frac(s):
    return None if s is None else Fraction(s)


def eval_monomial(weights, poly):
    """Value of the polynomial ``poly`` (a string in x1, x2, ...) under monomial weights."""
    return _frac(_nlgraph.eval_monomial([_q(w) for w in weights], poly))


def value_on_ideal(weights, gens):
    """Least value over the generators of an ideal."""
    return _frac(_nlgraph.value_on_ideal([_q(w) for w in weights], list(gens)))


def normalize(weights, gens=None):
    """Scales weights to value 1 on the ideal (the maximal ideal by default)."""
    return [Fraction(b) for b in _nlgraph.normalize([_q(w) for w in weights], gens)]


def eval_iterated(arity, stages, poly):
    """Lexicographic order tuple along 1-based variable ``stages``; ``None`` for the zero polynomial."""
    v = _nlgraph.eval_iterated(arity, list(stages), poly)
    return None if v is None else tuple(v)


def skeleton_weights(b1, b2, t):
    s1, s2 = _nlgraph.skeleton_weights(str(b1), str(b2), _q(t))
    return Fraction(s1), Fraction(s2)


def retract_to_skeleton(b1, b2, s1, s2):
    return Fraction(_nlgraph.retract_to_skeleton(str(b1), str(b2), _q(s1), _q(s2)))
