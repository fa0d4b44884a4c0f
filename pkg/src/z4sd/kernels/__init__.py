"""Hot enumeration kernels, backed by numba or by numpy (see ``_accel``)."""

from z4sd._accel import BACKEND, USE_NUMBA

if USE_NUMBA:
    from z4sd.kernels._numba import (
        coset_leader_hist,
        gf2_combo_min,
        gf2_weight_hist,
        lift_descend,
        popcount,
        subset_counts,
        z4_low_support,
        z4_supports,
        z4_swe,
    )
else:
    from z4sd.kernels._numpy import (
        coset_leader_hist,
        gf2_combo_min,
        gf2_weight_hist,
        lift_descend,
        popcount,
        subset_counts,
        z4_low_support,
        z4_supports,
        z4_swe,
    )

__all__ = [
    "BACKEND",
    "coset_leader_hist",
    "gf2_combo_min",
    "gf2_weight_hist",
    "lift_descend",
    "popcount",
    "subset_counts",
    "z4_low_support",
    "z4_supports",
    "z4_swe",
]
