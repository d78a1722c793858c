"""Zeckendorf and Chung-Graham numeration, the golden string, and the sets of
integers carrying F_2k in one or both decompositions."""

from .chung_graham import (ChungGrahamDecomposition, cg_coeff, cg_decompose,
                           cg_min_index, cg_value)
from .fibcore import fib, fib_index_below, floor_inv_phi, floor_phi, isqrt
from .golden import (DEFAULT_PREFIX_CAP, ResourceLimitError, beta, count_A, count_B,
                     letter_at, prefix)
from .index_sets import (SetHandle, SetKind, check_cg_to_z, check_z_to_cg, diff_p,
                         diff_r, enumerate_set, i_element, member, p, q, r, ranked)
from .zeckendorf import (ZeckendorfDecomposition, z_contains, z_decompose,
                         z_min_index, z_value)

__version__ = "0.1.0"
