"""Kernel selection: compiled extension when available, pure Python otherwise.

``UNILEIB_PURE=1`` forces the pure kernel (useful for benchmarking and for
verifying that both implementations agree).
"""

import os

if os.environ.get("UNILEIB_PURE"):
    from . import _pure as _impl
else:
    try:
        from . import _speedups as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _pure as _impl

KERNEL = _impl.KERNEL
DEGREVLEX = _impl.DEGREVLEX
LEX = _impl.LEX

exp_mul = _impl.exp_mul
exp_divides = _impl.exp_divides
exp_quot = _impl.exp_quot
exp_lcm = _impl.exp_lcm
exp_deg = _impl.exp_deg
exp_cmp = _impl.exp_cmp
lead_exp = _impl.lead_exp
poly_neg = _impl.poly_neg
poly_add = _impl.poly_add
poly_sub = _impl.poly_sub
poly_scale = _impl.poly_scale
poly_term_mul = _impl.poly_term_mul
poly_mul = _impl.poly_mul
normal_form = _impl.normal_form
enumerate_points = _impl.enumerate_points


def kernel_name() -> str:
    return KERNEL
