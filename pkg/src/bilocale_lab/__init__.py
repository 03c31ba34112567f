"""Finite-model workbench for frames, sublocales, bilocales and
bitopological Baire-category properties."""

from .version import __version__

from .frames import Frame, validate_frame, frame_from_json, frame_to_json, subframe
from .sublocales import (
    booleanization,
    closed_sublocale,
    closure,
    enumerate_sublocales,
    gdelta_closure_family,
    is_complemented_sublocale,
    is_sublocale,
    nu,
    open_sublocale,
    sublocale_join,
    sublocale_meet,
    supplement,
)
from .bilocales import (
    Bilocale,
    Subbilocale,
    bilocale_from_json,
    bilocale_to_json,
    build_bilocale,
    bullet,
    closure_i,
    interior_i,
    is_boolean_bilocale,
    is_compact_bilocale,
    is_i_dense,
    is_i_gdelta_dense,
    is_i_prefit,
    is_ij_nowhere_dense,
    is_prefit,
    is_regular_bilocale,
    is_strongly_prefit,
    subbilocale,
    symmetric_bilocale,
)
from .baire import (
    BaireVerdict,
    CategoryVerdict,
    category,
    is_ij_baire,
    is_relatively_ij_baire,
    theorem_main_equivalence,
)
from .bispaces import (
    Bispace,
    bilocale_of,
    bispace_from_json,
    bispace_to_json,
    is_almost_ij_baire,
    join_topology,
    validate_bispace,
)
from .topobilocales import (
    TopoBilocale,
    build_topobilocale,
    is_tau_ij_baire,
    tau_closure,
    tau_interior,
    topobilocale_from_json,
)
from .maps import BiframeMap, right_adjoint, validate_biframe_map
from .ideals import ideal_bilocale, noetherian_transfer_check

__all__ = [name for name in dir() if not name.startswith("_")]
