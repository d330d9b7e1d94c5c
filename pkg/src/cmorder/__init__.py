"""Orders on multipartitions from charged abacus maps and shifted symbols."""
from .afunction import AContext, a_value, c_compare
from .blocks import (BlockPartition, GlenLabel, afc_on_blocks, cm_blocks_jclass,
                     cm_blocks_l2, cm_blocks_regular, glen_block_order,
                     glen_blocks, glen_dimensions, irr_glen_labels)
from .charged import core_by_hooks, ell_core, j_heart, tau, tau_inverse
from .errors import *  # noqa: F401,F403
from .orders import (block_order, comb_order, comb_order_theta_l2,
                     order_poset, wall_preorder, wall_reachable)
from .params import (Alcove, Degenerate, GitWall, ParamH, ParamMR, WallL2,
                     alcove_kappa_m, alcove_l2, alcove_rep, classify_theta_l2,
                     git_walls, h_to_mr, h_to_theta, is_regular, mr_to_h,
                     theta_bar, theta_to_h, wall_adjacent_alcoves_l2)
from .partitions import Verdict, dominance_compare, multipartitions, transpose
from .poset import FinitePoset, GroupAction, quotient_by_group
from .symbols import Symbol, kappa, kappa_compare, min_size, n_value, shifted_symbol

__version__ = "0.1.0"
