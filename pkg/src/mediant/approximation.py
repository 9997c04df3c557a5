"""Rational approximation engines: mediant bisection and continued fractions.

Both engines run on exact integer arithmetic; the target is an exact
fraction parsed from a decimal string, never a binary float.

* :func:`farey_approximate` brackets the target between two neighbour
  fractions, starting from 0/1 and 1/1, and repeatedly replaces one bracket
  with the mediant (a walk down the Stern-Brocot tree).  Every mediant is
  emitted; the loop counter starts at 1 and increments once per bracket
  update.

* :func:`cf_expand` builds the continued-fraction expansion
  1/(a1 + 1/(a2 + ...)) by repeated subtraction on the remainder pair,
  stopping when the remainder drops below the tolerance.  The loop counter
  starts at 1 and increments once per unit subtraction, which makes it
  directly comparable with the mediant engine's counter.  A division-based
  fast mode produces identical coefficients and the identical counter.

For an exact rational target and a small enough tolerance both engines
terminate exactly on the target, and every continued-fraction convergent
inside (0, 1) appears, in order, among the emitted mediants.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import IterationLimitError
from .fraction import (
    Fraction,
    NeighbourPair,
    ONE,
    ZERO,
    abs_difference,
    mediant,
    parse_decimal,
)

DEFAULT_MAX_LOOPS = 10**6

FAREY = "farey"
CONTINUED_FRACTION = "continued-fraction"


@dataclass(frozen=True)
class Target:
    """An exact value in [0, 1] and a positive tolerance."""

    value: Fraction
    epsilon: Fraction

    def __post_init__(self):
        if self.value > ONE:
            raise ValueError("target value must lie in [0, 1]")
        if self.epsilon.p == 0:
            raise ValueError(
                "epsilon must be positive (a zero tolerance never terminates "
                "for targets the engines cannot hit exactly)"
            )

    @classmethod
    def from_strings(cls, value_text: str, epsilon_text: str) -> "Target":
        return cls(parse_decimal(value_text), parse_decimal(epsilon_text))


@dataclass(frozen=True)
class CFExpansion:
    """Positive partial quotients a1..aN of 1/(a1 + 1/(a2 + ...))."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        if any(a < 1 for a in self.coefficients):
            raise ValueError("all partial quotients must be >= 1")


@dataclass(frozen=True)
class ApproximationTrack:
    """Ordered approximants plus the engine's raw loop counter.

    For the mediant engine, ``brackets`` holds the (lo, hi) neighbour pair
    that was current when the same-index step was emitted.
    """

    steps: tuple[Fraction, ...]
    loop_count: int
    method: str
    brackets: tuple[tuple[Fraction, Fraction], ...] = ()


def farey_approximate(target: Target, max_loops: int = DEFAULT_MAX_LOOPS) -> ApproximationTrack:
    """Mediant bisection of the bracket (0/1, 1/1) down to the tolerance.

    Emits every mediant; terminates as soon as |mediant - value| < epsilon.
    The endpoints 0 and 1 are immediate hits (no mediant ever equals them).
    """
    vn, vd = target.value.p, target.value.q
    en, ed = target.epsilon.p, target.epsilon.q

    if target.value == ZERO or target.value == ONE:
        return ApproximationTrack(
            steps=(target.value,),
            loop_count=1,
            method=FAREY,
            brackets=((ZERO, ONE),),
        )

    lp, lq = 0, 1
    hp, hq = 1, 1
    mp, mq = lp + hp, lq + hq
    loop = 1
    steps = [Fraction._coprime(mp, mq)]
    brackets = [(ZERO, ONE)]

    # |mp/mq - vn/vd| >= en/ed, cross-multiplied to integers.
    while abs(mp * vd - vn * mq) * ed >= en * mq * vd:
        if loop >= max_loops:
            raise IterationLimitError(
                f"mediant engine hit the {max_loops}-loop cap "
                f"before reaching tolerance {target.epsilon}",
                partial=ApproximationTrack(
                    tuple(steps), loop, FAREY, tuple(brackets)
                ),
            )
        loop += 1
        if mp * vd > vn * mq:
            hp, hq = mp, mq
        else:
            lp, lq = mp, mq
        mp, mq = lp + hp, lq + hq
        steps.append(Fraction._coprime(mp, mq))
        brackets.append((Fraction._coprime(lp, lq), Fraction._coprime(hp, hq)))

    return ApproximationTrack(tuple(steps), loop, FAREY, tuple(brackets))


def cf_expand(
    target: Target,
    fast: bool = False,
    max_loops: int = DEFAULT_MAX_LOOPS,
) -> tuple[CFExpansion, ApproximationTrack]:
    """Continued-fraction expansion of the target by repeated subtraction.

    Works on the remainder pair (rad, mod), initialized to (value, 1); each
    pass extracts one partial quotient and swaps the pair, i.e. Euclid's
    algorithm on the value's numerator and denominator.  The outer loop
    stops when the remainder mod drops below epsilon; for a rational target
    mod reaches exactly zero.  The first pass extracts the integer part,
    which is always 0 here and is not reported as a coefficient.

    ``fast=True`` replaces the unit-subtraction inner loop with one
    division, producing identical coefficients and loop count.

    Returns the expansion and a track containing the convergent after each
    completed coefficient.
    """
    vn, vd = target.value.p, target.value.q
    if vn == 0 or target.value == ONE:
        raise ValueError("continued-fraction engine needs 0 < value < 1")
    en, ed = target.epsilon.p, target.epsilon.q

    # Remainders as numerators over the fixed denominator vd.
    rad, mod = vn, vd
    loop = 1
    coefficients: list[int] = []
    steps: list[Fraction] = []
    # Convergent recurrence state for [0; a1, a2, ...].
    h_prev2, h_prev = 1, 0
    k_prev2, k_prev = 0, 1
    pass_index = 0

    while mod * ed >= en * vd:  # mod/vd >= epsilon
        if fast:
            c = rad // mod
            loop += c
            rem = rad - c * mod
            if loop > max_loops:
                raise IterationLimitError(
                    f"continued-fraction engine hit the {max_loops}-loop cap",
                    partial=(tuple(coefficients), tuple(steps), loop),
                )
        else:
            c = 0
            rem = rad
            while rem >= mod:  # rad - c*mod >= mod
                if loop >= max_loops:
                    raise IterationLimitError(
                        f"continued-fraction engine hit the {max_loops}-loop cap",
                        partial=(tuple(coefficients), tuple(steps), loop),
                    )
                loop += 1
                c += 1
                rem -= mod
        rad, mod = mod, rem
        if pass_index > 0:
            coefficients.append(c)
            h_prev2, h_prev = h_prev, c * h_prev + h_prev2
            k_prev2, k_prev = k_prev, c * k_prev + k_prev2
            steps.append(Fraction._coprime(h_prev, k_prev))
        pass_index += 1

    track = ApproximationTrack(tuple(steps), loop, CONTINUED_FRACTION)
    return CFExpansion(tuple(coefficients)), track


def evaluate_cf(expansion: CFExpansion) -> Fraction:
    """Exact value of 1/(a1 + 1/(a2 + ... + 1/aN)), folded right to left."""
    coeffs = expansion.coefficients
    if not coeffs:
        raise ValueError("cannot evaluate an empty expansion")
    num, den = 1, coeffs[-1]
    for a in reversed(coeffs[:-1]):
        num, den = den, a * den + num
    return Fraction(num, den)


def convergents(expansion: CFExpansion) -> list[Fraction]:
    """Value of every non-empty prefix of the expansion.

    Denominators strictly increase, and each convergent is closer to the
    full value than the previous one.
    """
    return [
        evaluate_cf(CFExpansion(expansion.coefficients[: k + 1]))
        for k in range(len(expansion.coefficients))
    ]


@dataclass(frozen=True)
class EquivalenceReport:
    """Side-by-side run of both engines on one target.

    ``subsequence_ok`` is True when every continued-fraction convergent
    strictly inside (0, 1) appears, in order, among the mediant steps.
    ``loop_difference`` is the continued-fraction counter minus the mediant
    counter.
    """

    target: Fraction
    epsilon: Fraction
    farey_track: ApproximationTrack
    cf_track: ApproximationTrack
    cf_coefficients: CFExpansion
    subsequence_ok: bool
    loop_difference: int
    farey_final: Fraction
    farey_error: Fraction
    cf_final: Fraction | None
    cf_error: Fraction | None


def _is_ordered_subsequence(needles, haystack) -> bool:
    it = iter(haystack)
    for needle in needles:
        for item in it:
            if item == needle:
                break
        else:
            return False
    return True


def compare_tracks(target: Target, max_loops: int = DEFAULT_MAX_LOOPS) -> EquivalenceReport:
    """Run both engines and report how closely their tracks agree."""
    farey_track = farey_approximate(target, max_loops=max_loops)
    expansion, cf_track = cf_expand(target, max_loops=max_loops)

    interior = [s for s in cf_track.steps if ZERO < s < ONE]
    subsequence_ok = _is_ordered_subsequence(interior, farey_track.steps)

    farey_final = farey_track.steps[-1]
    cf_final = cf_track.steps[-1] if cf_track.steps else None
    return EquivalenceReport(
        target=target.value,
        epsilon=target.epsilon,
        farey_track=farey_track,
        cf_track=cf_track,
        cf_coefficients=expansion,
        subsequence_ok=subsequence_ok,
        loop_difference=cf_track.loop_count - farey_track.loop_count,
        farey_final=farey_final,
        farey_error=abs_difference(farey_final, target.value),
        cf_final=cf_final,
        cf_error=(
            abs_difference(cf_final, target.value) if cf_final is not None else None
        ),
    )


def fibonacci_lucas_track(seed: NeighbourPair, steps: int) -> list[Fraction]:
    """Zigzag mediant iteration x(n+1) = mediant(x(n), x(n-1)).

    Starting from a neighbour pair, numerators and denominators along the
    track each satisfy the two-term recurrence a(n) = a(n-1) + a(n-2); the
    seed (0/1, 1/1) yields the Fibonacci numbers as denominators.  Returns
    steps + 2 fractions (the seed followed by `steps` mediants); every
    consecutive pair along the track is again a neighbour pair.
    """
    if steps < 1:
        raise ValueError("steps must be >= 1")
    track = [seed.lo, seed.hi]
    for _ in range(steps):
        track.append(mediant(track[-1], track[-2]))
    return track


def random_reduced_fractions(count: int, max_q: int, seed: int = 0) -> list[Fraction]:
    """Deterministic sample of reduced fractions strictly inside (0, 1)."""
    if max_q < 2:
        raise ValueError("max_q must be >= 2")
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        q = rng.randint(2, max_q)
        p = rng.randint(1, q - 1)
        f = Fraction(p, q)  # reduction keeps the value, only shrinks q
        out.append(f)
    return out
