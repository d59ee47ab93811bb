"""Blow-up invariants of monomial ideals and plane pencils, with Konno bounds."""

from .blowup import ClusterTree, hoskin_deligne_check, lech_check, resolve_ideal
from .bounds import konno_bounds_hypersurface, konno_bounds_k3
from .errors import DepthExceeded, InputError, KonnoError, MathError
from .pencil import Pencil, resolve_pencil
from .staircase import MonomialIdeal

__all__ = [
    "ClusterTree", "DepthExceeded", "InputError", "KonnoError", "MathError",
    "MonomialIdeal", "Pencil", "hoskin_deligne_check", "konno_bounds_hypersurface",
    "konno_bounds_k3", "lech_check", "resolve_ideal", "resolve_pencil",
]
__version__ = "0.1.0"
