"""Backend dispatch for the scan kernels.

The numba backend is the default; set BILOCALE_LAB_PURE_NUMPY=1 to force
the pure-numpy fallback (it is also used when numba fails to import).
`python -m bilocale_lab.bench` times the two side by side.
"""

import os

if os.environ.get("BILOCALE_LAB_PURE_NUMPY", "").lower() in ("1", "true", "yes"):
    from . import _kernels_numpy as _impl
else:
    try:
        from . import _kernels_numba as _impl
    except ImportError:  # numba missing or broken build
        from . import _kernels_numpy as _impl

BACKEND = _impl.backend_name

heyting_table = _impl.heyting_table
distributive_witness = _impl.distributive_witness
frame_law_witness = _impl.frame_law_witness
is_sublocale_mask = _impl.is_sublocale_mask
sublocale_masks = _impl.sublocale_masks
meet_close = _impl.meet_close
ideal_masks = _impl.ideal_masks
supplement_scan = _impl.supplement_scan
supplement_gen = _impl.supplement_gen
category_statements = _impl.category_statements
fip_violation = _impl.fip_violation
covering_witness = _impl.covering_witness
