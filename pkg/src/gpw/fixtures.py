"""Small reference structures used throughout the docs and tests."""

from .core import Structure

_T = True
_F = False


def singleton() -> Structure:
    """One element, one operation, reflexive order."""
    return Structure(1, ("g0",), (((0,),),), ((_T,),))


def min_semilattice() -> Structure:
    """Two elements, x*y = min(x, y), ordered 0 < 1."""
    return Structure(2, ("g0",), (((0, 0), (0, 1)),), ((_T, _T), (_F, _T)))


def left_zero() -> Structure:
    """Two elements, x*y = x, trivial order."""
    return Structure(2, ("g0",), (((0, 0), (1, 1)),), ((_T, _F), (_F, _T)))


def right_zero() -> Structure:
    """Two elements, x*y = y, trivial order."""
    return Structure(2, ("g0",), (((0, 1), (0, 1)),), ((_T, _F), (_F, _T)))


def constant_zero() -> Structure:
    """Two elements, x*y = 0, trivial order."""
    return Structure(2, ("g0",), (((0, 0), (0, 0)),), ((_T, _F), (_F, _T)))
