"""Exact combinatorics of Gelfand-Tsetlin patterns and partition overlays.

The package covers interlacing and majorization predicates, integer
partitions with the generalized Durfee breakup, GT patterns with their
area functionals and the canonical area maximizer, partition-overlaid
patterns with graded characters and the basis-index bijection, and the
colored-partition correspondence with its stability machinery.
"""

from .errors import ContractViolation
from .maxarea import max_area_pattern, max_area_step
from .partition import (
    BreakResult,
    ColoredPartition,
    Partition,
    Rectangle,
    box_size_counts,
    break_multi,
    break_multi_inv,
    break_single,
    break_single_inv,
    enumerate_colored,
    enumerate_in_box,
    enumerate_partitions_of,
)
from .pattern import GTPattern, area_pair, enumerate_patterns, traparea_pair
from .pop import (
    CLEntry,
    CLIndex,
    GradedCharacter,
    POP,
    TopGradeProfile,
    enumerate_pops,
    from_cl_index,
    generator_pop,
    graded_character,
    render_cl_monomial,
    to_cl_index,
    top_grade_profile,
)
from .seqcore import (
    interlaces,
    majorizes,
    norm_sq,
    weakly_interlaces,
    weakly_majorizes,
)
from .stability import (
    AONP,
    NearPattern,
    StableRangeReport,
    complement_pop,
    cp_to_pop,
    embed,
    nearly_interlaces,
    phi,
    proptrap_np,
    proptrap_pair,
    shift,
    shift_seq,
    stable_range,
    stable_range_report,
    theta_tuple,
    xi,
    xi_inv,
    xi_np,
    xi_np_inv,
)

__version__ = "0.1.0"
