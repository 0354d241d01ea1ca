"""Interval membership of tail values and the counting function A([a,b); N)."""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Sequence

from .exactnum import (
    DigitString,
    HalfOpenInterval,
    PrefixOrder,
    compare_prefix,
    digit_length,
    int_to_digits,
)
from .seqgen import TailSpec, term


class UndecidedMembershipError(RuntimeError):
    """Membership could not be resolved within the digit budget."""

    def __init__(self, prefix: DigitString, interval: HalfOpenInterval):
        self.prefix = prefix
        self.interval = interval
        super().__init__(
            f"membership in {interval} undecided after {len(prefix)} digits "
            f"(prefix 0.{prefix})"
        )


@dataclass(frozen=True)
class CountResult:
    interval: HalfOpenInterval
    N: int
    count: int
    ratio: float
    digits_consulted_max: int


def leading_digit(m: int, base: int = 10) -> int:
    """Most significant digit of the base-b expansion of m >= 1."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if base == 10:
        return int(str(m)[0])
    while m >= base:
        m //= base
    return m


def census(terms: Iterable[int], base: int = 10) -> list[int]:
    """Leading-digit counts for a stream of positive integers.

    Returns a list indexed by digit - 1 (length base - 1); counts sum to the
    stream length.
    """
    counts = [0] * (base - 1)
    empty = True
    for m in terms:
        counts[leading_digit(m, base) - 1] += 1
        empty = False
    if empty:
        raise ValueError("empty term stream")
    return counts


def _fast_digit_bounds(interval: HalfOpenInterval) -> tuple[int, int] | None:
    """(c_lo, c_hi) such that membership == c_lo <= leading digit < c_hi.

    Applies only when both endpoints have at most one digit (the first-digit
    reduction); returns None otherwise.
    """
    lo, hi = interval.lo, interval.hi
    if lo.is_one or len(lo.digits) > 1:
        return None
    if not hi.is_one and len(hi.digits) > 1:
        return None
    c_lo = lo.digits[0] if lo.digits else 0
    c_hi = interval.base if hi.is_one else hi.digits[0]
    return c_lo, c_hi


def default_max_digits(spec: TailSpec, n: int) -> int:
    """Digit budget before membership is declared undecided."""
    return 4 * digit_length(term(spec, n, 0), spec.base) + 16


def _membership_stream(
    spec: TailSpec, n: int, interval: HalfOpenInterval, max_digits: int
) -> tuple[bool, int]:
    """Decide lo <= x_n < hi by extending the digit prefix term by term."""
    base = spec.base
    buf: list[int] = []
    lo_state = PrefixOrder.UNDECIDED
    hi_state = PrefixOrder.UNDECIDED
    offset = 0
    while len(buf) < max_digits:
        buf.extend(int_to_digits(term(spec, n, offset), base).digits)
        offset += 1
        prefix = DigitString(base, tuple(buf[:max_digits]))
        if lo_state is PrefixOrder.UNDECIDED:
            lo_state = compare_prefix(prefix, interval.lo)
        if hi_state is PrefixOrder.UNDECIDED:
            hi_state = compare_prefix(prefix, interval.hi)
        if lo_state is PrefixOrder.DEFINITELY_LESS:
            return False, len(prefix)
        if hi_state is PrefixOrder.DEFINITELY_GREATER_OR_EQUAL:
            return False, len(prefix)
        if (
            lo_state is PrefixOrder.DEFINITELY_GREATER_OR_EQUAL
            and hi_state is PrefixOrder.DEFINITELY_LESS
        ):
            return True, len(prefix)
    raise UndecidedMembershipError(DigitString(base, tuple(buf[:max_digits])), interval)


def in_interval(
    spec: TailSpec,
    n: int,
    interval: HalfOpenInterval,
    max_digits: int | None = None,
    fast: bool = True,
) -> bool:
    """True iff lo <= x_n < hi, decided by exact digit comparison."""
    if spec.base != interval.base:
        raise ValueError(f"base mismatch: spec base {spec.base} vs interval base {interval.base}")
    if fast:
        bounds = _fast_digit_bounds(interval)
        if bounds is not None:
            c_lo, c_hi = bounds
            return c_lo <= leading_digit(term(spec, n, 0), spec.base) < c_hi
    budget = max_digits if max_digits is not None else default_max_digits(spec, n)
    if budget < 1:
        raise ValueError(f"max_digits must be >= 1, got {budget}")
    member, _ = _membership_stream(spec, n, interval, budget)
    return member


def _count_range_fast(spec: TailSpec, c_lo: int, c_hi: int, start: int, stop: int) -> int:
    base = spec.base
    if base == 10:
        # tight loops per kind; leading decimal digit via str
        kind = spec.kind
        if kind == "champ":
            return sum(1 for i in range(start, stop) if c_lo <= int(str(i)[0]) < c_hi)
        if kind == "mult":
            k = spec.k
            return sum(1 for i in range(start, stop) if c_lo <= int(str(k * i)[0]) < c_hi)
        ev = spec.poly.eval
        return sum(1 for i in range(start, stop) if c_lo <= int(str(ev(i))[0]) < c_hi)
    return sum(
        1 for i in range(start, stop) if c_lo <= leading_digit(term(spec, i, 0), base) < c_hi
    )


def _split_range(start: int, stop: int, parts: int) -> Sequence[tuple[int, int]]:
    total = stop - start
    parts = max(1, min(parts, total))
    step = total // parts
    bounds = [start + i * step for i in range(parts)] + [stop]
    return [(bounds[i], bounds[i + 1]) for i in range(parts)]


def count_A(
    spec: TailSpec,
    interval: HalfOpenInterval,
    N: int,
    max_digits: int | None = None,
    fast: bool = True,
    workers: int = 1,
) -> CountResult:
    """Count indices n_min <= n < n_min + N with x_n in [lo, hi).

    The result is identical regardless of ``workers``; parallel chunks cover
    disjoint index ranges and combine by integer addition.
    """
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    if spec.base != interval.base:
        raise ValueError(f"base mismatch: spec base {spec.base} vs interval base {interval.base}")
    start = spec.n_min
    stop = start + N
    bounds = _fast_digit_bounds(interval) if fast else None
    if bounds is not None:
        c_lo, c_hi = bounds
        if workers > 1:
            chunks = _split_range(start, stop, workers)
            with ThreadPoolExecutor(max_workers=len(chunks)) as pool:
                count = sum(
                    pool.map(lambda ab: _count_range_fast(spec, c_lo, c_hi, *ab), chunks)
                )
        else:
            count = _count_range_fast(spec, c_lo, c_hi, start, stop)
        digits_max = digit_length(term(spec, stop - 1, 0), spec.base)
    else:
        count = 0
        digits_max = 0
        for n in range(start, stop):
            budget = max_digits if max_digits is not None else default_max_digits(spec, n)
            member, used = _membership_stream(spec, n, interval, budget)
            count += member
            digits_max = max(digits_max, used)
    return CountResult(interval, N, count, count / N, digits_max)
