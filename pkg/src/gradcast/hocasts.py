"""Higher-order casts: defer checking to each application of a function.

Wrapping a function runs no decision procedure at all; only applying the
wrapper does.  ``cast_fun_range`` strengthens what a function promises about
its results, ``cast_fun_dom`` weakens what it demands of its arguments.  The
``forall`` variants cover the dependent cases, where the checked property (or
the shape of the result) varies with the argument.

Dependent result shapes are modelled by runtime-indexed data: an
:class:`IList` carries its own length, and that index is validated as a data
invariant at construction.  The type-level bridge that would realign a
result index after a domain cast erases to the identity at runtime, which is
why :func:`cast_forall_dom` behaves exactly like :func:`cast_fun_dom`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, TypeVar

from .casts import FailureMode, Refined, cast
from .instances import check_nat
from .predicates import Pred, PredFamily
from .render import show_value

A = TypeVar("A")
B = TypeVar("B")


@dataclass(frozen=True)
class IList:
    """A list of naturals carrying its own length index."""

    length: int
    items: tuple[int, ...]

    def __post_init__(self) -> None:
        check_nat(self.length)
        if self.length != len(self.items):
            raise ValueError(
                f"length index {self.length} does not match {len(self.items)} items"
            )
        for item in self.items:
            check_nat(item)


@show_value.register
def _show_ilist(value: IList) -> str:
    # Constructor notation interleaves the tail's length index with the
    # element: an IList of two zeros prints "Cons 1 0 (Cons 0 0 Nil)".
    text = "Nil"
    for index, item in enumerate(reversed(value.items)):
        tail = text if text == "Nil" else f"({text})"
        text = f"Cons {index} {show_value(item)} {tail}"
    return text


def build_list(n: int) -> IList:
    """Build an :class:`IList` of length ``n`` whose elements are all zero."""
    check_nat(n)
    return IList(length=n, items=(0,) * n)


def cast_fun_range(
    p: Pred[B],
    f: Callable[[A], B],
    mode: FailureMode = FailureMode.LAZY,
) -> Callable[[A], Refined]:
    """Strengthen a function's range: every result is cast against ``p``."""

    def wrapped(a: A) -> Refined:
        return cast(p, f(a), mode)

    return wrapped


def cast_fun_dom(
    p: Pred[A],
    f: Callable[[Refined], B],
    mode: FailureMode = FailureMode.LAZY,
) -> Callable[[A], B]:
    """Weaken a function's domain: the argument is cast before ``f`` sees it.

    In LAZY mode ``f`` may receive a poisoned value; the fault fires only if
    ``f`` projects it.  A function that ignores its argument therefore runs
    to completion even on arguments that violate ``p``.
    """

    def wrapped(a: A) -> B:
        return f(cast(p, a, mode))

    return wrapped


def cast_forall_range(
    family: PredFamily[A, B],
    f: Callable[[A], B],
    mode: FailureMode = FailureMode.LAZY,
) -> Callable[[A], Refined]:
    """Strengthen a range dependently: ``f(a)`` is cast against ``family.at(a)``."""

    def wrapped(a: A) -> Refined:
        return cast(family.at(a), f(a), mode)

    return wrapped


def cast_forall_dom(
    p: Pred[A],
    f: Callable[[Refined], B],
    mode: FailureMode = FailureMode.LAZY,
) -> Callable[[A], B]:
    """Weaken the domain of a function whose result shape depends on the
    argument.  The index-realigning bridge is the identity at runtime, so this
    is observably :func:`cast_fun_dom`."""
    return cast_fun_dom(p, f, mode)
