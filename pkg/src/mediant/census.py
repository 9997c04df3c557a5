"""Counting census over reduced fractions, exact statistics, Farey sequences.

The census enumerates every pair (p, q) with 0 <= p <= q <= kappa, reduces
it, and tallies how often each reduced fraction appears.  That brute-force
enumeration (:func:`enumerate_trial`) is the oracle; the closed form
``t = kappa // q`` (:func:`occurrence`, :func:`closed_form_census`) is the
fast path checked against it.

All derived statistics are exact rationals:

* percentage of the total pair count: 2*t / (kappa*(kappa+3)),
* min-max normalized count: (t - 1) / (kappa - 1),
* its limiting value ("relative normalized frequency"): 1/q.

An extended census over all non-negative values (pairs a <= kappa,
1 <= b <= kappa) is also provided, together with the reciprocal counterpart
map between a fraction in [0, 1] and its mirror in [1, oo).
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import kernels
from .errors import ResourceLimitError
from .fraction import Fraction

CAP_ENV = "MEDIANT_MAX_KAPPA"
DEFAULT_MAX_KAPPA = 10000

STANDARD = "standard"
EXTENDED = "extended"


def max_kappa() -> int:
    """Enumeration cap; override with the MEDIANT_MAX_KAPPA env variable."""
    raw = os.environ.get(CAP_ENV)
    if raw is None:
        return DEFAULT_MAX_KAPPA
    try:
        cap = int(raw)
    except ValueError as exc:
        raise ValueError(f"{CAP_ENV} must be an integer, got {raw!r}") from exc
    if cap < 1:
        raise ValueError(f"{CAP_ENV} must be >= 1")
    return cap


def _check_bound(kappa: int) -> None:
    if not isinstance(kappa, int) or kappa < 1:
        raise ValueError("bound must be a positive integer")
    cap = max_kappa()
    if kappa > cap:
        raise ResourceLimitError(
            f"bound {kappa} exceeds the enumeration cap {cap} "
            f"(set {CAP_ENV} to raise it)"
        )


@dataclass(frozen=True)
class FrequencyRecord:
    """One census row: a fraction, its raw count and the exact statistics.

    ``t_norm`` is None when kappa == 1 (max and min counts coincide, the
    normalization is degenerate).
    """

    fraction: Fraction
    t: int
    p_pct: Fraction
    t_norm: Fraction | None
    rnf: Fraction


@dataclass(frozen=True)
class Census:
    kappa: int
    records: tuple[FrequencyRecord, ...]  # ascending by fraction value
    mode: str = STANDARD

    @cached_property
    def _index(self):
        return {r.fraction: r for r in self.records}

    def record_of(self, fraction: Fraction) -> FrequencyRecord | None:
        return self._index.get(fraction)

    def count_of(self, fraction: Fraction) -> int:
        rec = self._index.get(fraction)
        return rec.t if rec is not None else 0

    @property
    def total_occurrences(self) -> int:
        return sum(r.t for r in self.records)


def _build_records(kappa, p_arr, q_arr, t_arr, mode):
    """Value-sorted record tuple from raw (p, q, t) arrays."""
    order = np.argsort(p_arr / q_arr, kind="stable")
    if mode == STANDARD:
        pct_den = kappa * (kappa + 3)  # twice the pair total
        pct_num_factor = 2
    else:
        pct_den = kappa * (kappa + 1)  # (kappa+1)*kappa pairs
        pct_num_factor = 1
    norm_den = kappa - 1
    records = []
    for i in order:
        p = int(p_arr[i])
        q = int(q_arr[i])
        t = int(t_arr[i])
        f = Fraction._coprime(p, q)
        t_norm = Fraction(t - 1, norm_den) if kappa >= 2 else None
        records.append(
            FrequencyRecord(
                fraction=f,
                t=t,
                p_pct=Fraction(pct_num_factor * t, pct_den),
                t_norm=t_norm,
                rnf=Fraction(1, max(p, q)),
            )
        )
    return tuple(records)


def enumerate_trial(kappa: int) -> Census:
    """Brute-force census oracle: reduce and tally every pair.

    Quadratic in kappa and guarded by :func:`max_kappa`; this path never
    consults the closed form.
    """
    _check_bound(kappa)
    try:
        p_arr, q_arr, t_arr = kernels.trial_tally(kappa)
    except MemoryError as exc:
        raise ResourceLimitError(
            f"census at kappa={kappa} exhausted memory"
        ) from exc
    return Census(kappa, _build_records(kappa, p_arr, q_arr, t_arr, STANDARD))


def closed_form_census(kappa: int) -> Census:
    """Census built from the Farey enumeration and t = kappa // q.

    Equivalent to :func:`enumerate_trial` (an equivalence the test suite
    checks exhaustively) but linear in the output size.
    """
    _check_bound(kappa)
    p_arr, q_arr = _farey_arrays(kappa)
    t_arr = kappa // q_arr
    return Census(kappa, _build_records(kappa, p_arr, q_arr, t_arr, STANDARD))


def occurrence(f: Fraction, kappa: int) -> int:
    """Closed-form count of f in the census: floor(kappa / q).

    Returns 0 iff f.q > kappa (an in-range fraction always occurs at least
    once, so 0 doubles as the out-of-range signal).
    """
    if kappa < 1:
        raise ValueError("kappa must be >= 1")
    return kappa // f.q


def percentage(f: Fraction, kappa: int) -> Fraction:
    """Share of all pairs that reduce to f: 2*t / (kappa*(kappa+3))."""
    t = occurrence(f, kappa)
    return Fraction(2 * t, kappa * (kappa + 3))


def normalized(f: Fraction, kappa: int) -> Fraction:
    """Min-max normalized count (t - 1) / (kappa - 1) in [0, 1]."""
    if kappa < 2:
        raise ValueError("normalization needs kappa >= 2 (max count != min)")
    if f.q > kappa:
        raise ValueError(f"{f} does not occur in a census bounded by {kappa}")
    t = occurrence(f, kappa)
    return Fraction(t - 1, kappa - 1)


def rnf(f: Fraction) -> Fraction:
    """Limit of the normalized count as the bound grows: exactly 1/q."""
    return Fraction(1, f.q)


def _farey_arrays(n):
    size = distinct_count(n)
    return kernels.farey_pairs(n, size)


def farey_sequence(n: int) -> list[Fraction]:
    """All reduced p/q with 0 <= p <= q <= n, strictly increasing.

    Adjacent elements always satisfy the determinant-1 neighbour condition.
    """
    _check_bound(n)
    p_arr, q_arr = _farey_arrays(n)
    return [
        Fraction._coprime(int(p), int(q)) for p, q in zip(p_arr, q_arr)
    ]


def distinct_count(kappa: int) -> int:
    """Number of distinct reduced fractions in [0, 1] with q <= kappa.

    Computed as 1 + sum(phi(q) for q in 1..kappa) by totient sieve, i.e.
    the length of the order-kappa Farey sequence; grows like 3*kappa^2/pi^2.
    """
    if not isinstance(kappa, int) or kappa < 1:
        raise ValueError("kappa must be a positive integer")
    phi = kernels.totient_sieve(kappa)
    return 1 + int(phi[1:].sum())


def extended_trial(kappa: int) -> Census:
    """Brute-force census over all pairs (a, b), a <= kappa, 1 <= b <= kappa.

    Covers every non-negative reduced value up to kappa.  Restricted to
    [0, 1] it coincides with :func:`enumerate_trial`.
    """
    _check_bound(kappa)
    try:
        p_arr, q_arr, t_arr = kernels.extended_tally(kappa)
    except MemoryError as exc:
        raise ResourceLimitError(
            f"extended census at kappa={kappa} exhausted memory"
        ) from exc
    return Census(kappa, _build_records(kappa, p_arr, q_arr, t_arr, EXTENDED), EXTENDED)


def extended_occurrence(f: Fraction, kappa: int) -> int:
    """Closed-form count in the extended census: floor(kappa / max(p, q)).

    A multiple (m*p, m*q) stays within the square iff m*max(p, q) <= kappa.
    Validated against :func:`extended_trial` by the test suite before being
    trusted here.
    """
    if kappa < 1:
        raise ValueError("kappa must be >= 1")
    return kappa // max(f.p, f.q)


def counterpart(f: Fraction) -> Fraction:
    """Reciprocal partner q/p of p/q; pairs (p/q, 1/q) with (q/p, 1/q)."""
    if f.p == 0:
        raise ValueError("0/1 has no reciprocal counterpart")
    return Fraction(f.q, f.p)


def top_records_by_rnf(kappa: int, k: int) -> list[FrequencyRecord]:
    """First k census records ordered by descending 1/q, then ascending p.

    Built directly from small denominators; never materializes the full
    census.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    _check_bound(kappa)
    from math import gcd

    records = []
    for q in range(1, kappa + 1):
        numerators = [0, 1] if q == 1 else [
            p for p in range(1, q) if gcd(p, q) == 1
        ]
        for p in numerators:
            t = kappa // q
            records.append(
                FrequencyRecord(
                    fraction=Fraction._coprime(p, q),
                    t=t,
                    p_pct=Fraction(2 * t, kappa * (kappa + 3)),
                    t_norm=Fraction(t - 1, kappa - 1) if kappa >= 2 else None,
                    rnf=Fraction(1, q),
                )
            )
            if len(records) == k:
                return records
    return records
