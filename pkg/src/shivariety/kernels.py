"""Backend selection for the hot loops.

The compiled extension ``shivariety._kernels`` is used when it was built;
otherwise, or when ``SHIVARIETY_PURE_PYTHON=1`` is set, the pure-Python
implementations in ``shivariety._kernels_py`` are used.  Both expose

``coroot_first_violation(tuples, triples)``
    first violated coroot triple per row (``-1`` if none);
``bfs_alcoves(gen_perm, wall, step, roots, simple_idx, max_length, parallelepiped)``
    breadth-first alcove search returning ``(k, x, perm, parent, gen, depth)``.
"""
import os

from . import _kernels_py as python_backend

compiled_backend = None
if os.environ.get("SHIVARIETY_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as compiled_backend
    except ImportError:  # extension not built
        compiled_backend = None

_impl = compiled_backend if compiled_backend is not None else python_backend
BACKEND = "cython" if compiled_backend is not None else "python"

coroot_first_violation = _impl.coroot_first_violation
bfs_alcoves = _impl.bfs_alcoves
