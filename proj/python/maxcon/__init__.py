"""Degree-sequence realization, edge-connectivity rewiring, and factor tools."""

try:
    from ._maxcon import *  # noqa: F401,F403  (installed package layout)
except ImportError:  # pragma: no cover - in-tree test layout
    from _maxcon import *  # noqa: F401,F403
