"""Kernel selection: the compiled extension when available, else pure Python.

Set ``NCHILBERT_PURE=1`` to force the pure-Python kernels.
"""

import os

from . import _kernels_py

BACKEND = "python"
_compiled = None
if os.environ.get("NCHILBERT_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _compiled

        BACKEND = "cython"
    except ImportError:
        _compiled = None

def hopcroft_classes(n_states, n_letters, table, accepting):
    if _compiled is not None:
        return _compiled.hopcroft_classes(n_states, n_letters, table, accepting)
    return _kernels_py.hopcroft_classes(n_states, n_letters, table, accepting)


def count_walks(n_states, n_letters, table, start, blocked, max_degree):
    if _compiled is not None:
        out = _compiled.count_walks(n_states, n_letters, table, start, blocked, max_degree)
        if out is not None:
            return out
    # the compiled kernel gave up on int64 overflow
    return _kernels_py.count_walks(n_states, n_letters, table, start, blocked, max_degree)
