"""Hot numeric kernels with a numba fast path and a pure-numpy fallback.

The quadratic census tallies, the Farey sequence recurrence and the totient
sieve dominate runtime at large bounds, so each has two interchangeable
implementations:

* a ``@njit`` kernel (default when numba is importable), and
* a vectorized pure-numpy fallback.

Selection: set ``MEDIANT_BACKEND=numpy`` or ``MEDIANT_BACKEND=numba`` in the
environment, or call :func:`set_backend`.  When numba is requested but not
importable, the numpy path is used.  Both backends produce identical arrays
(covered by tests and compared by ``benchmarks/bench_kernels.py``).

numba is imported lazily on first use so that CLI paths that never touch a
kernel do not pay its import cost.

All kernels work on machine integers; the bound caps enforced by callers
(see ``census.py``) keep every intermediate far below 2**63, so fixed-width
arithmetic cannot wrap.  Exact arbitrary-precision arithmetic lives in the
``fraction``/``approximation`` layer and is deliberately not jitted.
"""

from __future__ import annotations

import os
import warnings

import numpy as np

BACKEND_ENV = "MEDIANT_BACKEND"

_VALID_BACKENDS = ("numba", "numpy")
_backend = None  # resolved lazily
_numba_kernels = None  # compiled kernel table, built on first numba call


def _resolve_backend() -> str:
    requested = os.environ.get(BACKEND_ENV, "numba").strip().lower()
    if requested not in _VALID_BACKENDS:
        raise ValueError(
            f"{BACKEND_ENV} must be one of {_VALID_BACKENDS}, got {requested!r}"
        )
    return requested


def active_backend() -> str:
    """The backend that will serve the next kernel call."""
    global _backend
    if _backend is None:
        _backend = _resolve_backend()
    if _backend == "numba" and _numba_kernels is None and not _numba_available():
        return "numpy"
    return _backend


def set_backend(name: str) -> None:
    """Force a backend ("numba" or "numpy"); mainly for tests/benchmarks."""
    global _backend
    if name not in _VALID_BACKENDS:
        raise ValueError(f"backend must be one of {_VALID_BACKENDS}")
    _backend = name


def _numba_available() -> bool:
    try:
        import numba  # noqa: F401
    except ImportError:
        return False
    return True


def _get_numba_kernels():
    """Compile (once) and return the table of @njit kernels."""
    global _numba_kernels, _backend
    if _numba_kernels is not None:
        return _numba_kernels
    try:
        from numba import njit
    except ImportError:
        warnings.warn(
            "numba requested but not importable; falling back to numpy kernels",
            RuntimeWarning,
            stacklevel=3,
        )
        _backend = "numpy"
        return None

    @njit(cache=True)
    def trial_tally(kappa):
        # Brute-force tally of every pair (p, q), 0 <= p <= q <= kappa,
        # reduced by Euclid's algorithm.  Dense triangular count array:
        # slot(q, p) = q*(q+1)//2 + p - 1, contiguous over p in [0, q].
        counts = np.zeros(kappa * (kappa + 3) // 2, dtype=np.int32)
        for q in range(1, kappa + 1):
            for p in range(0, q + 1):
                a, b = p, q
                while b:
                    a, b = b, a % b
                counts[(q // a) * (q // a + 1) // 2 + (p // a) - 1] += 1
        distinct = 0
        for i in range(counts.shape[0]):
            if counts[i] > 0:
                distinct += 1
        out_p = np.empty(distinct, dtype=np.int64)
        out_q = np.empty(distinct, dtype=np.int64)
        out_t = np.empty(distinct, dtype=np.int64)
        i = 0
        for q in range(1, kappa + 1):
            base = q * (q + 1) // 2 - 1
            for p in range(0, q + 1):
                c = counts[base + p]
                if c > 0:
                    out_p[i] = p
                    out_q[i] = q
                    out_t[i] = c
                    i += 1
        return out_p, out_q, out_t

    @njit(cache=True)
    def extended_tally(kappa):
        # Pairs (a, b) with 0 <= a <= kappa, 1 <= b <= kappa; reduced
        # values cover [0, kappa].  Dense grid slot(p, q) = p*(kappa+1)+q.
        counts = np.zeros((kappa + 1) * (kappa + 1), dtype=np.int32)
        for b in range(1, kappa + 1):
            for a in range(0, kappa + 1):
                x, y = a, b
                while y:
                    x, y = y, x % y
                counts[(a // x) * (kappa + 1) + (b // x)] += 1
        distinct = 0
        for i in range(counts.shape[0]):
            if counts[i] > 0:
                distinct += 1
        out_p = np.empty(distinct, dtype=np.int64)
        out_q = np.empty(distinct, dtype=np.int64)
        out_t = np.empty(distinct, dtype=np.int64)
        i = 0
        for q in range(1, kappa + 1):
            for p in range(0, kappa + 1):
                c = counts[p * (kappa + 1) + q]
                if c > 0:
                    out_p[i] = p
                    out_q[i] = q
                    out_t[i] = c
                    i += 1
        return out_p, out_q, out_t

    @njit(cache=True)
    def farey_pairs(n, size):
        # Next-term recurrence: from adjacent terms a/b < c/d of F_n the
        # successor is (k*c - a)/(k*d - b) with k = (n + b)//d.
        out_p = np.empty(size, dtype=np.int64)
        out_q = np.empty(size, dtype=np.int64)
        a, b, c, d = 0, 1, 1, n
        out_p[0] = 0
        out_q[0] = 1
        i = 1
        while c <= n:
            k = (n + b) // d
            a, b, c, d = c, d, k * c - a, k * d - b
            out_p[i] = a
            out_q[i] = b
            i += 1
        return out_p[:i], out_q[:i]

    @njit(cache=True)
    def totient_sieve(n):
        # Linear sieve: phi multiplicative, phi(p^k * m) via smallest
        # prime factor bookkeeping.
        phi = np.zeros(n + 1, dtype=np.int64)
        primes = np.empty(n + 1, dtype=np.int64)
        nprimes = 0
        phi[1] = 1
        for i in range(2, n + 1):
            if phi[i] == 0:
                phi[i] = i - 1
                primes[nprimes] = i
                nprimes += 1
            for j in range(nprimes):
                p = primes[j]
                if i * p > n:
                    break
                if i % p == 0:
                    phi[i * p] = phi[i] * p
                    break
                phi[i * p] = phi[i] * (p - 1)
        return phi

    _numba_kernels = {
        "trial_tally": trial_tally,
        "extended_tally": extended_tally,
        "farey_pairs": farey_pairs,
        "totient_sieve": totient_sieve,
    }
    return _numba_kernels


# ---------------------------------------------------------------------------
# pure-numpy fallbacks
# ---------------------------------------------------------------------------


def _triangle_pairs(kappa):
    """All (p, q) with 1 <= q <= kappa, 0 <= p <= q, in (q asc, p asc) order."""
    lens = np.arange(2, kappa + 2, dtype=np.int64)  # row q holds q+1 pairs
    qs = np.repeat(np.arange(1, kappa + 1, dtype=np.int64), lens)
    starts = np.repeat(np.cumsum(lens) - lens, lens)
    ps = np.arange(qs.shape[0], dtype=np.int64) - starts
    return ps, qs


def _trial_tally_np(kappa):
    ps, qs = _triangle_pairs(kappa)
    g = np.gcd(ps, qs)
    pr = ps // g
    qr = qs // g
    keys = qr * (qr + 1) // 2 + pr - 1
    counts = np.bincount(keys, minlength=kappa * (kappa + 3) // 2)
    reduced = g == 1  # the reduced pairs, already in (q asc, p asc) order
    out_p = ps[reduced]
    out_q = qs[reduced]
    out_t = counts[out_q * (out_q + 1) // 2 + out_p - 1]
    return out_p, out_q, out_t


def _extended_tally_np(kappa):
    side = kappa + 1
    ps = np.tile(np.arange(side, dtype=np.int64), kappa)
    qs = np.repeat(np.arange(1, kappa + 1, dtype=np.int64), side)
    g = np.gcd(ps, qs)
    keys = (ps // g) * side + (qs // g)
    counts = np.bincount(keys, minlength=side * side)
    reduced = g == 1
    out_p = ps[reduced]
    out_q = qs[reduced]
    out_t = counts[out_p * side + out_q]
    order = np.lexsort((out_p, out_q))  # (q asc, p asc), as the njit walk
    return out_p[order], out_q[order], out_t[order]


def _farey_pairs_np(n, size):
    ps, qs = _triangle_pairs(n)
    reduced = np.gcd(ps, qs) == 1
    out_p = ps[reduced]
    out_q = qs[reduced]
    # Value sort is exact here: adjacent reduced fractions differ by at
    # least 1/(q1*q2), far above float64 resolution at these bounds.
    order = np.argsort(out_p / out_q, kind="stable")
    return out_p[order], out_q[order]


def _totient_sieve_np(n):
    phi = np.arange(n + 1, dtype=np.int64)
    for p in range(2, n + 1):
        if phi[p] == p:  # p is prime
            phi[p::p] -= phi[p::p] // p
    return phi


# ---------------------------------------------------------------------------
# dispatch
# ---------------------------------------------------------------------------


def _dispatch(name, *args):
    if active_backend() == "numba":
        table = _get_numba_kernels()
        if table is not None:
            return table[name](*args)
    return _NUMPY_IMPLS[name](*args)


def trial_tally(kappa: int):
    """(p, q, t) arrays for the [0,1] census, (q asc, p asc) order."""
    return _dispatch("trial_tally", kappa)


def extended_tally(kappa: int):
    """(p, q, t) arrays for the non-negative census, (q asc, p asc) order."""
    return _dispatch("extended_tally", kappa)


def farey_pairs(n: int, size: int):
    """(p, q) arrays of the order-n Farey sequence, ascending by value.

    `size` must be the sequence length (1 + totient summatory), known in
    advance from the sieve.
    """
    return _dispatch("farey_pairs", n, size)


def totient_sieve(n: int):
    """Euler phi for 0..n as an int64 array (phi[0] is unused)."""
    return _dispatch("totient_sieve", n)


_NUMPY_IMPLS = {
    "trial_tally": _trial_tally_np,
    "extended_tally": _extended_tally_np,
    "farey_pairs": _farey_pairs_np,
    "totient_sieve": _totient_sieve_np,
}
