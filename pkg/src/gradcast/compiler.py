"""A gradually checked compiler for arithmetic expressions.

Source expressions are built from naturals and three binary operations; the
target is a tiny stack machine.  Two compilers are provided: ``compile_buggy``
emits the left subexpression's code first, which reverses the operand order on
the stack and miscompiles every non-commutative node, and ``compile_fixed``
emits right-then-left so the stack top lines up with the first operand.

Rather than proving either compiler correct, :func:`checked_compile` wraps one
in a dependent range cast: each compiled program is checked, at compile time
of that one expression, to run to the same result the interpreter gives.

Subtraction on naturals truncates at zero (1 - 2 = 0); that is what makes the
buggy compiler observably wrong on subtraction while agreeing on sums and
products.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, Optional, Union

from .casts import FailureMode, Refined, proj1
from .hocasts import cast_forall_range
from .instances import Nat, check_nat, eq_list, eq_nat, eq_option
from .predicates import Pred, PredFamily
from .render import show_value


class Binop(enum.Enum):
    PLUS = "Plus"
    MINUS = "Minus"
    TIMES = "Times"


@dataclass(frozen=True)
class Const:
    value: Nat


@dataclass(frozen=True)
class BinOp:
    op: Binop
    left: "Exp"
    right: "Exp"


Exp = Union[Const, BinOp]


@dataclass(frozen=True)
class IConst:
    value: Nat


@dataclass(frozen=True)
class IBinop:
    op: Binop


Instr = Union[IConst, IBinop]
Prog = list[Instr]
Stack = list[Nat]


@show_value.register
def _show_iconst(instr: IConst) -> str:
    return f"iConst {instr.value}"


@show_value.register
def _show_ibinop(instr: IBinop) -> str:
    return f"iBinop {instr.op.value}"


def eval_binop(b: Binop, x: Nat, y: Nat) -> Nat:
    check_nat(x)
    check_nat(y)
    if b is Binop.PLUS:
        return x + y
    if b is Binop.MINUS:
        return x - y if x >= y else 0
    return x * y


def eval_exp(e: Exp) -> Nat:
    match e:
        case Const(value=n):
            return check_nat(n)
        case BinOp(op=b, left=left, right=right):
            return eval_binop(b, eval_exp(left), eval_exp(right))
    raise TypeError(f"not an expression: {e!r}")


def run_instr(i: Instr, s: Stack) -> Optional[Stack]:
    """Execute one instruction. The stack top is the first element; a binary
    operation pops arg1 then arg2 and pushes arg1 OP arg2. ``None`` signals
    stack underflow."""
    match i:
        case IConst(value=n):
            return [n, *s]
        case IBinop(op=b):
            if len(s) < 2:
                return None
            arg1, arg2, *rest = s
            return [eval_binop(b, arg1, arg2), *rest]
    raise TypeError(f"not an instruction: {i!r}")


def run_prog(p: Prog, s: Stack) -> Optional[Stack]:
    current: Optional[Stack] = list(s)
    for instr in p:
        current = run_instr(instr, current)
        if current is None:
            return None
    return current


def compile_buggy(e: Exp) -> Prog:
    """Compile left subexpression first. Looks plausible, reverses operands."""
    match e:
        case Const(value=n):
            return [IConst(n)]
        case BinOp(op=b, left=left, right=right):
            return compile_buggy(left) + compile_buggy(right) + [IBinop(b)]
    raise TypeError(f"not an expression: {e!r}")


def compile_fixed(e: Exp) -> Prog:
    """Compile right subexpression first so the stack top is the first operand."""
    match e:
        case Const(value=n):
            return [IConst(n)]
        case BinOp(op=b, left=left, right=right):
            return compile_fixed(right) + compile_fixed(left) + [IBinop(b)]
    raise TypeError(f"not an expression: {e!r}")


_RESULT_EQ = eq_option(eq_list(eq_nat()))


def correct_prog(e: Exp) -> Pred[Prog]:
    """The property of programs: running on an empty stack yields exactly the
    interpreter's value for ``e``.  Decided by synthesized equality over
    optional stacks."""
    expected: Optional[Stack] = [eval_exp(e)]

    return Pred(
        decide=lambda p: _RESULT_EQ.eq_decide(run_prog(p, []), expected),
        render=lambda p: _RESULT_EQ.render_eq(run_prog(p, []), expected),
    )


COMPILERS: dict[str, Callable[[Exp], Prog]] = {
    "buggy": compile_buggy,
    "fixed": compile_fixed,
}


def checked_compile(
    variant: str = "buggy", mode: FailureMode = FailureMode.LAZY
) -> Callable[[Exp], Refined]:
    """Wrap a compiler so each compiled program carries (or fails to carry)
    evidence of correctness for the expression it was compiled from."""
    if variant not in COMPILERS:
        raise ValueError(f"unknown compiler variant {variant!r}")
    return cast_forall_range(PredFamily(at=correct_prog), COMPILERS[variant], mode)


def runc(c: Callable[[Exp], Refined], e: Exp) -> Optional[Stack]:
    """Run a checked compiler's output on the empty stack.

    Projects the compiled program out of the refined wrapper first, so a
    failed compilation cast faults here rather than producing a wrong answer.
    """
    return run_prog(proj1(c(e)), [])


class ParseError(Exception):
    """Raised on malformed expression text; ``offset`` is the 1-based byte
    position of the failure."""

    def __init__(self, reason: str, offset: int) -> None:
        super().__init__(f"{reason} at offset {offset}")
        self.reason = reason
        self.offset = offset


_WHITESPACE = " \t\r\n\f\v"
_ADDITIVE = {"+": Binop.PLUS, "-": Binop.MINUS}


def parse_exp(src: str) -> Exp:
    """Parse ``expr := term (('+'|'-') term)*; term := factor ('*' factor)*;
    factor := NAT | '(' expr ')'``; operators are left-associative and ``*``
    binds tighter."""
    pos = 0

    def skip_whitespace() -> None:
        nonlocal pos
        while pos < len(src) and src[pos] in _WHITESPACE:
            pos += 1

    def peek() -> str:
        return src[pos] if pos < len(src) else ""

    def parse_expr() -> Exp:
        nonlocal pos
        node = parse_term()
        while True:
            skip_whitespace()
            ch = peek()
            if ch in _ADDITIVE:
                pos += 1
                node = BinOp(_ADDITIVE[ch], node, parse_term())
            else:
                return node

    def parse_term() -> Exp:
        nonlocal pos
        node = parse_factor()
        while True:
            skip_whitespace()
            if peek() == "*":
                pos += 1
                node = BinOp(Binop.TIMES, node, parse_factor())
            else:
                return node

    def parse_factor() -> Exp:
        nonlocal pos
        skip_whitespace()
        ch = peek()
        if ch == "(":
            pos += 1
            node = parse_expr()
            skip_whitespace()
            if peek() != ")":
                raise ParseError("expected ')'", pos + 1)
            pos += 1
            return node
        if ch.isascii() and ch.isdigit():
            start = pos
            while peek().isascii() and peek().isdigit():
                pos += 1
            return Const(int(src[start:pos]))
        if ch == "":
            raise ParseError("expected a number or '('", pos + 1)
        raise ParseError(f"unexpected character {ch!r}", pos + 1)

    node = parse_expr()
    skip_whitespace()
    if pos != len(src):
        raise ParseError(f"unexpected character {src[pos]!r}", pos + 1)
    return node


_PRECEDENCE = {Binop.PLUS: 1, Binop.MINUS: 1, Binop.TIMES: 2}
_SYMBOL = {Binop.PLUS: "+", Binop.MINUS: "-", Binop.TIMES: "*"}


def format_exp(e: Exp) -> str:
    """Render an expression in the grammar :func:`parse_exp` accepts;
    round-trips through the parser."""

    def go(node: Exp, min_prec: int) -> str:
        match node:
            case Const(value=n):
                return str(n)
            case BinOp(op=b, left=left, right=right):
                prec = _PRECEDENCE[b]
                text = f"{go(left, prec)} {_SYMBOL[b]} {go(right, prec + 1)}"
                return f"({text})" if prec < min_prec else text
        raise TypeError(f"not an expression: {node!r}")

    return go(e, 0)
