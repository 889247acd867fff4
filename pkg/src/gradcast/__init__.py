"""gradcast: runtime-checked refinement casts.

Values are promoted into refinement-carrying wrappers by running decision
procedures; functions are wrapped by higher-order casts that check each
application.  Failed casts are either poisoned values whose projections fault
(lazy regime) or immediate faults (eager regime).
"""

from .casts import (
    Attested,
    CastFault,
    FailedCast,
    FailureMode,
    Refined,
    cast,
    map_cast,
    proj1,
    proj2,
    try_cast,
)
from .hocasts import (
    IList,
    build_list,
    cast_forall_dom,
    cast_forall_range,
    cast_fun_dom,
    cast_fun_range,
)
from .instances import (
    EqDec,
    Nat,
    check_nat,
    dec_le,
    eq_bool,
    eq_list,
    eq_nat,
    eq_option,
    pred_equals,
    pred_ge_const,
    pred_gt_const,
    pred_lt_const,
)
from .predicates import (
    Decision,
    Evidence,
    Holds,
    Pred,
    PredFamily,
    Refutes,
    RelateReport,
    check_relate_spec,
    p_and,
    p_equivalent,
    p_false,
    p_forall_bounded,
    p_implies,
    p_is_true,
    p_not,
    p_or,
    p_proven,
    p_relate,
    p_true,
)
from .render import show_optional, show_sequence, show_value

__all__ = [
    "Attested",
    "CastFault",
    "Decision",
    "EqDec",
    "Evidence",
    "FailedCast",
    "FailureMode",
    "Holds",
    "IList",
    "Nat",
    "Pred",
    "PredFamily",
    "Refined",
    "Refutes",
    "RelateReport",
    "build_list",
    "cast",
    "cast_forall_dom",
    "cast_forall_range",
    "cast_fun_dom",
    "cast_fun_range",
    "check_nat",
    "check_relate_spec",
    "dec_le",
    "eq_bool",
    "eq_list",
    "eq_nat",
    "eq_option",
    "map_cast",
    "p_and",
    "p_equivalent",
    "p_false",
    "p_forall_bounded",
    "p_implies",
    "p_is_true",
    "p_not",
    "p_or",
    "p_proven",
    "p_relate",
    "p_true",
    "pred_equals",
    "pred_ge_const",
    "pred_gt_const",
    "pred_lt_const",
    "proj1",
    "proj2",
    "show_optional",
    "show_sequence",
    "show_value",
    "try_cast",
]
