"""Refinement casts: run a decision procedure and wrap the value in evidence.

``cast`` turns a plain value into a :class:`Refined` value.  When the decision
procedure refutes the property, what happens depends on the failure regime:

* ``FailureMode.LAZY`` (the default) produces a poisoned :class:`FailedCast`
  value.  It can be passed around freely; the fault surfaces only when
  somebody tries to project the value or its evidence out of it.
* ``FailureMode.EAGER`` raises :class:`CastFault` at the cast site, which is
  how extracted/compiled code in strict languages behaves.

A ``FailedCast`` stores only a *rendering* of the offending value, never the
value itself, so no code path can smuggle a value out of a failed cast.
Library code never catches :class:`CastFault`; catching it is the business of
the outermost boundary (for instance the CLI).

Refined values are immutable and safe to hand between threads; ``cast`` is
pure apart from fault raising.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Generic, Sequence, TypeVar

from .predicates import Evidence, Holds, Pred
from .render import show_value

A = TypeVar("A")


class FailureMode(enum.Enum):
    """How a failed cast manifests: poisoned value (LAZY) or raised fault (EAGER)."""

    LAZY = "lazy"
    EAGER = "eager"


class CastFault(Exception):
    """A failed cast was forced.

    ``message`` is the bare fault text; ``value_text`` and ``prop_text``
    identify the rejected value and the violated proposition.
    """

    def __init__(self, value_text: str, prop_text: str) -> None:
        super().__init__(f"Cast has failed: value {value_text} does not satisfy {prop_text}")
        self.message = "Cast has failed"
        self.value_text = value_text
        self.prop_text = prop_text


@dataclass(frozen=True)
class Attested(Generic[A]):
    """A value paired with evidence that the property holds of it."""

    value: A
    prop_text: str
    evidence: Evidence


@dataclass(frozen=True)
class FailedCast:
    """The poisoned result of a failed cast: a rendering of the rejected value
    and the violated proposition, with no way back to the value itself."""

    value_text: str
    prop_text: str


Refined = Attested | FailedCast


def cast(p: Pred[A], a: A, mode: FailureMode = FailureMode.LAZY) -> Refined:
    """Check ``p`` against ``a`` and wrap the outcome.

    Returns ``Attested`` exactly when ``p.decide(a)`` holds.  In EAGER mode a
    refuted property raises :class:`CastFault` instead of returning.
    """
    verdict = p.decide(a)
    if isinstance(verdict, Holds):
        return Attested(value=a, prop_text=p.render(a), evidence=verdict.evidence)
    if mode is FailureMode.EAGER:
        raise CastFault(show_value(a), p.render(a))
    return FailedCast(value_text=show_value(a), prop_text=p.render(a))


def try_cast(p: Pred[A], a: A) -> Attested[A] | CastFault:
    """Cast with failure as a value: never raises.

    Returns the :class:`Attested` pair on success and an *unraised*
    :class:`CastFault` record on failure, for callers who prefer to branch
    locally instead of living with poisoned values.
    """
    verdict = p.decide(a)
    if isinstance(verdict, Holds):
        return Attested(value=a, prop_text=p.render(a), evidence=verdict.evidence)
    return CastFault(show_value(a), p.render(a))


def proj1(r: Refined) -> A:
    """Project the value. Forcing a failed cast this way raises the fault."""
    if isinstance(r, Attested):
        return r.value
    raise CastFault(r.value_text, r.prop_text)


def proj2(r: Refined) -> Evidence:
    """Project the evidence.

    On a failed cast this raises: evidence for a refuted property must be
    unobtainable, otherwise a failed cast could be laundered into a proof.
    """
    if isinstance(r, Attested):
        return r.evidence
    raise CastFault(r.value_text, r.prop_text)


def map_cast(
    p: Pred[A], xs: Sequence[A], mode: FailureMode = FailureMode.LAZY
) -> list[Refined]:
    """Cast every element of a sequence.

    In LAZY mode the result is a mixed list of attested and failed entries; in
    EAGER mode the first failing element raises.
    """
    return [cast(p, x, mode) for x in xs]
