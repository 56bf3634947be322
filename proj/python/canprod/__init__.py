"""Canonical-product numerical laboratory (python bindings)."""

try:
    from ._canprod import *  # noqa: F401,F403  (installed layout)
except ImportError:
    from _canprod import *  # noqa: F401,F403  (build-tree layout)

__version__ = "0.1.0"
