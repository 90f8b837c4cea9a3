"""Exact spectral invariants of Dirac operators on circle bundles.

Thin Python surface over the C++ core: eta/xi invariants, spectral flows,
resonance-form signatures, and virtual-dimension reports, all in exact
rational arithmetic.
"""

from fractions import Fraction

try:  # packaged layout: the extension lives inside this package
    from ._etacalc import *  # noqa: F401,F403
    from . import _etacalc as _impl
except ImportError:  # in-tree build: the extension sits on PYTHONPATH
    from _etacalc import *  # noqa: F401,F403
    import _etacalc as _impl

__all__ = [name for name in dir(_impl) if not name.startswith("_")] + [
    "fraction"
]


def fraction(value):
    """Exact ``fractions.Fraction`` from a Rational or a "p/q" string."""
    return Fraction(str(value))
