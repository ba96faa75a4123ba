"""Exact combinatorics of graded root systems: facets, the form space V,
PBW and canonical bases, restriction and the Weyl group matching."""

__version__ = "0.1.0"


def clear_caches():
    """Forget memoized spaces, recursions, bases and matchings."""
    from . import bases, form, springer
    for d in (bases._REC, bases._RIGID, bases._FAMILIES, form._SPACES, springer._MATCHES):
        d.clear()
