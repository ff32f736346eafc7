"""Kernel backend selection.

The compiled extension is used when it was built; otherwise the pure-Python
twin is imported. Both expose identical functions.
"""

from . import _pykernels

try:
    from . import _ckernels as _active
except ImportError:  # extension not built
    _active = _pykernels

BACKEND = _active.BACKEND

rank_table = _active.rank_table
minimal_dependent_sets = _active.minimal_dependent_sets
closed_sets = _active.closed_sets
blue_keys = _active.blue_keys
red_keys = _active.red_keys
first_unique_max = _active.first_unique_max


def available_backends():
    """Map backend name to kernel module for every importable backend."""
    found = {"python": _pykernels}
    try:
        from . import _ckernels
    except ImportError:
        pass
    else:
        found["cython"] = _ckernels
    return found
