"""Exact multivariate Faa di Bruno expansions.

Signatures and partitions use the command-line notation: ``"x1 x2^2"`` and
``"[x2][x1 x2]"``. Cumulant and moment keys use ``"id:mult,id:mult"``.
"""

import json
from fractions import Fraction

from . import _core
from ._core import GuardExceeded, IncompleteAssignment, ParseError

__all__ = [
    "GuardExceeded",
    "IncompleteAssignment",
    "ParseError",
    "all_cumulants_from_moments",
    "all_moments_from_cumulants",
    "bell",
    "cumulant_from_moments",
    "expand",
    "faa_di_bruno_coefficient",
    "moment_from_cumulants",
    "multiplicity",
    "multiplicity_bruteforce",
    "partitions",
    "render",
    "stirling2",
    "verify",
]


def bell(n):
    return int(_core.bell(n))


def stirling2(n, k):
    return int(_core.stirling2(n, k))


def faa_di_bruno_coefficient(block_counts):
    """``block_counts[j - 1]`` is the number of blocks of size j."""
    return int(_core.faa_di_bruno_coefficient(list(block_counts)))


def multiplicity(signature, partition):
    return int(_core.multiplicity(signature, partition))


def multiplicity_bruteforce(signature, partition):
    return int(_core.multiplicity_bruteforce(signature, partition))


def partitions(signature):
    """(partition, multiplicity) pairs in display order."""
    return [(p, int(c)) for p, c in _core.partitions(signature)]


def render(signature, mode="composition", format="text"):
    return _core.render(signature, mode, format)


def expand(signature, mode="composition"):
    """The expansion as a JSON document with integer coefficients."""
    doc = json.loads(_core.render(signature, mode, "json"))
    for term in doc["terms"]:
        term["coefficient"] = int(term["coefficient"])
    return doc


def verify(kind, **options):
    """Run an oracle check: "composition", "product" or "multiplicity"."""
    runners = {
        "composition": _core.composition_trials,
        "product": _core.product_trials,
        "multiplicity": _core.sweep_multiplicities,
    }
    if kind not in runners:
        raise ValueError(f"unknown verification kind {kind!r}")
    return json.loads(runners[kind](**options))


def _text(values):
    return {key: str(Fraction(value)) for key, value in values.items()}


def _fractions(values):
    return {key: Fraction(value) for key, value in values.items()}


def moment_from_cumulants(target, kappa):
    return Fraction(_core.moment_from_cumulants(target, _text(kappa)))


def cumulant_from_moments(target, mu):
    return Fraction(_core.cumulant_from_moments(target, _text(mu)))


def all_moments_from_cumulants(target, kappa):
    return _fractions(_core.all_moments_from_cumulants(target, _text(kappa)))


def all_cumulants_from_moments(target, mu):
    return _fractions(_core.all_cumulants_from_moments(target, _text(mu)))
