import random

import pytest

from exprgen import ALL_OPS, COMMUTATIVE_OPS, exprs_by_op_count, random_exp
from gradcast.casts import Attested, CastFault, FailedCast
from gradcast.compiler import (
    BinOp,
    Binop,
    Const,
    IBinop,
    IConst,
    ParseError,
    checked_compile,
    compile_buggy,
    compile_fixed,
    correct_prog,
    eval_binop,
    eval_exp,
    format_exp,
    parse_exp,
    run_instr,
    run_prog,
    runc,
)
from gradcast.predicates import Holds
from gradcast.render import show_value

MINUS_2_1 = BinOp(Binop.MINUS, Const(2), Const(1))
PLUS_2_2 = BinOp(Binop.PLUS, Const(2), Const(2))


def holds(decision):
    return isinstance(decision, Holds)


def test_eval_binop():
    assert eval_binop(Binop.MINUS, 1, 2) == 0  # natural subtraction truncates
    assert eval_binop(Binop.PLUS, 2, 2) == 4
    assert eval_binop(Binop.TIMES, 3, 0) == 0
    assert eval_binop(Binop.MINUS, 5, 3) == 2


def test_eval_exp():
    assert eval_exp(PLUS_2_2) == 4
    assert eval_exp(MINUS_2_1) == 1
    assert eval_exp(Const(5)) == 5


def test_run_instr():
    assert run_instr(IConst(3), []) == [3]
    assert run_instr(IBinop(Binop.MINUS), [1, 2]) == [eval_binop(Binop.MINUS, 1, 2)]
    assert run_instr(IBinop(Binop.PLUS), [5]) is None


def test_run_prog():
    assert run_prog([], [7]) == [7]
    assert run_prog([IConst(2), IConst(2), IBinop(Binop.PLUS)], []) == [4]
    assert run_prog([IBinop(Binop.PLUS)], []) is None


def test_compile_buggy_emits_left_then_right():
    assert compile_buggy(MINUS_2_1) == [IConst(2), IConst(1), IBinop(Binop.MINUS)]
    assert compile_buggy(Const(7)) == [IConst(7)]


def test_compile_fixed_runs_subtraction_correctly():
    assert run_prog(compile_fixed(MINUS_2_1), []) == [1]


def test_buggy_compiler_gets_subtraction_backwards():
    assert run_prog(compile_buggy(MINUS_2_1), []) == [0]


def test_correct_prog_examples():
    assert holds(correct_prog(PLUS_2_2).decide(compile_buggy(PLUS_2_2)))
    verdict = correct_prog(MINUS_2_1).decide(compile_buggy(MINUS_2_1))
    assert not holds(verdict)
    rendered = correct_prog(MINUS_2_1).render(compile_buggy(MINUS_2_1))
    assert rendered == "Some (0 :: nil) = Some (1 :: nil)"
    assert holds(correct_prog(Const(0)).decide([IConst(0)]))


def test_checked_compile_success():
    refined = checked_compile("buggy")(PLUS_2_2)
    assert isinstance(refined, Attested)
    assert refined.value == [IConst(2), IConst(2), IBinop(Binop.PLUS)]


def test_checked_compile_failure_reports_program_and_equation():
    refined = checked_compile("buggy")(MINUS_2_1)
    assert refined == FailedCast(
        value_text="iConst 2 :: iConst 1 :: iBinop Minus :: nil",
        prop_text="Some (0 :: nil) = Some (1 :: nil)",
    )


def test_checked_compile_rejects_unknown_variant():
    with pytest.raises(ValueError):
        checked_compile("optimizing")


def test_runc():
    assert runc(checked_compile("buggy"), PLUS_2_2) == [4]
    assert runc(checked_compile("fixed"), MINUS_2_1) == [1]
    with pytest.raises(CastFault):
        runc(checked_compile("buggy"), MINUS_2_1)


def test_checked_fixed_is_attested_on_random_expressions():
    rng = random.Random(60923)
    checked = checked_compile("fixed")
    for _ in range(1000):
        e = random_exp(rng, max_depth=6)
        refined = checked(e)
        assert isinstance(refined, Attested), format_exp(e)
        assert run_prog(refined.value, []) == [eval_exp(e)]


def test_fixed_compiler_correct_on_exhaustive_small_expressions():
    for e in exprs_by_op_count(3, ALL_OPS):
        assert run_prog(compile_fixed(e), []) == [eval_exp(e)]


def test_buggy_and_fixed_agree_on_commutative_fragment():
    rng = random.Random(424242)
    for _ in range(500):
        e = random_exp(rng, max_depth=5, ops=COMMUTATIVE_OPS)
        assert run_prog(compile_buggy(e), []) == run_prog(compile_fixed(e), [])


def test_checked_compile_fails_exactly_when_correct_prog_refutes():
    rng = random.Random(5150)
    checked = checked_compile("buggy")
    for _ in range(300):
        e = random_exp(rng, max_depth=4)
        failed = isinstance(checked(e), FailedCast)
        refuted = not holds(correct_prog(e).decide(compile_buggy(e)))
        assert failed == refuted


def test_program_rendering_uses_instruction_notation():
    prog = compile_buggy(MINUS_2_1)
    assert show_value(prog) == "iConst 2 :: iConst 1 :: iBinop Minus :: nil"
    assert show_value([]) == "nil"


def test_parse_exp_examples():
    assert parse_exp("2 - 1") == MINUS_2_1
    assert parse_exp("(2+2)*3") == BinOp(Binop.TIMES, PLUS_2_2, Const(3))
    assert parse_exp("12") == Const(12)


def test_parse_exp_precedence_and_associativity():
    assert parse_exp("1+2*3") == BinOp(
        Binop.PLUS, Const(1), BinOp(Binop.TIMES, Const(2), Const(3))
    )
    assert parse_exp("1-2-3") == BinOp(
        Binop.MINUS, BinOp(Binop.MINUS, Const(1), Const(2)), Const(3)
    )


def test_parse_exp_ignores_ascii_whitespace():
    assert parse_exp(" 1 +\t2 ") == BinOp(Binop.PLUS, Const(1), Const(2))


def test_parse_exp_error_offsets():
    with pytest.raises(ParseError) as excinfo:
        parse_exp("2 + ")
    assert excinfo.value.offset == 5

    with pytest.raises(ParseError) as excinfo:
        parse_exp("")
    assert excinfo.value.offset == 1

    with pytest.raises(ParseError) as excinfo:
        parse_exp("(1+2")
    assert excinfo.value.offset == 5

    with pytest.raises(ParseError) as excinfo:
        parse_exp("1 + x")
    assert excinfo.value.offset == 5

    with pytest.raises(ParseError) as excinfo:
        parse_exp("1 2")
    assert excinfo.value.offset == 3


def test_parse_format_roundtrip():
    rng = random.Random(31337)
    for _ in range(500):
        e = random_exp(rng, max_depth=6)
        assert parse_exp(format_exp(e)) == e
