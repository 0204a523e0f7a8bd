"""Nonlinear conjugate gradient methods for interval-valued multiobjective problems."""

try:
    from . import _ivncg
except ImportError:  # in-tree build: the extension sits on PYTHONPATH
    import _ivncg

__all__ = [name for name in dir(_ivncg) if not name.startswith("_")]
globals().update({name: getattr(_ivncg, name) for name in __all__})

VARIANTS = ("sd", "prp", "hs", "ls")
__all__.append("VARIANTS")
