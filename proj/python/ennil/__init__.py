"""Python interface to the enhanced nilHecke algebra toolkit.

Elements are exchanged as canonical strings in the same grammar the ``nhv``
CLI uses; verification entry points return report dicts with keys
``command``, ``status``, ``checks`` and ``timing_ms``.
"""

import json as _json

import _ennil
from _ennil import (
    ContextError,
    ExprSyntaxError,
    IndexOutOfRange,
    apply,
    epsilon,
    k0_eval,
    mul,
    normalize_algebra,
    normalize_ring,
)

__all__ = [
    "apply",
    "conjecture",
    "ContextError",
    "e_class",
    "epsilon",
    "ExprSyntaxError",
    "filtration",
    "IndexOutOfRange",
    "iso",
    "k0_eval",
    "mul",
    "nilpotency",
    "normalize_algebra",
    "normalize_ring",
    "pcomplex_blocks",
    "relations",
    "uqsl2",
]


def _report(raw):
    return _json.loads(raw)


def relations(n, degree=12):
    """Verify the defining relations of A_n up to the given degree bound."""
    return _report(_ennil.relations(n, degree))


def nilpotency(p, n):
    """Check d^p = 0 on R_n and A_n over F_p (requires n < p, p prime)."""
    return _report(_ennil.nilpotency(p, n))


def uqsl2(p, model):
    """Check the small quantum group relations on the 'K0' or 'Verma' model."""
    return _report(_ennil.uqsl2(p, model))


def iso(p):
    """Check the K0-to-baby-Verma intertwiner."""
    return _report(_ennil.iso(p))


def e_class(n, p):
    """Compare the categorified E class against the closed formula."""
    return _report(_ennil.e_class(n, p))


def filtration(n, m, degree=10):
    """Slice-exact filtration and character checks."""
    return _report(_ennil.filtration(n, m, degree))


def conjecture(n, mmax):
    """Scan sl2 decompositions of R_{n,m} for m <= mmax (informational)."""
    return _report(_ennil.conjecture(n, mmax))


def pcomplex_blocks(desc):
    """Jordan blocks and K0 symbol of a p-complex.

    ``desc`` may be a dict or a JSON string following the documented schema.
    """
    if not isinstance(desc, str):
        desc = _json.dumps(desc)
    return _report(_ennil.pcomplex_blocks(desc))
