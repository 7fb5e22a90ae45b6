"""Certified numerics for the maximum-term ratio of a scaling family of entire functions.

The package evaluates the two-parameter family of entire functions whose
coefficients are unimodular phases over inverse powers of K, certifies a
rigorous upper bound for the maximum of the associated Laurent series on the
unit circle (mesh evaluation in ball arithmetic + Lipschitz slack + tail
bound), and derives from it a certified lower bound for the liminf of
mu(r, f) / M(r, f).

Rigor boundary: everything under :mod:`maxterm.ball`, :mod:`maxterm.series`
and :mod:`maxterm.certify` carries containment guarantees; :mod:`maxterm.search`
and :mod:`maxterm.oracle` are non-rigorous (parameter exploration and test
reference values) and never feed a certificate.
"""

from maxterm.ball import (
    BallDomainError,
    ComplexBall,
    Dyadic,
    Precision,
    RealBall,
    certainly_gt,
    certainly_le,
    certainly_lt,
    certainly_ne,
    exp_i,
    pi_ball,
)
from maxterm.certify import Certificate, MeshSpec, certify, emit_log, mesh_max_upper
from maxterm.rational import parse_rational, rational_from_decimal, rational_pow
from maxterm.series import (
    FamilyParams,
    eval_laurent,
    eval_trig_poly,
    lipschitz_bound,
    max_term_at_power,
    max_term_indices,
    tail_bound,
    triangular,
)

__version__ = "1.0.0"

__all__ = [
    "BallDomainError",
    "Certificate",
    "ComplexBall",
    "Dyadic",
    "FamilyParams",
    "MeshSpec",
    "Precision",
    "RealBall",
    "certainly_gt",
    "certainly_le",
    "certainly_lt",
    "certainly_ne",
    "certify",
    "emit_log",
    "eval_laurent",
    "eval_trig_poly",
    "exp_i",
    "lipschitz_bound",
    "max_term_at_power",
    "max_term_indices",
    "mesh_max_upper",
    "parse_rational",
    "pi_ball",
    "rational_from_decimal",
    "rational_pow",
    "tail_bound",
    "triangular",
    "__version__",
]
