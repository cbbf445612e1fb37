"""Exact counting formulas for words, necklaces and word patterns.

Everything here is integer arithmetic; nothing touches floating point.

Counting primitive pattern classes
----------------------------------
The classical inclusion-exclusion sum for the number of rotation classes of
primitive patterns of length ``i`` over ``k = min(i, m)`` letters sieves only
on the absence of the letters ``1..k-1``.  That counts classes whose letter set
contains ``{1..k-1}``, so patterns built on ``{1..t}`` with ``t <= k-2`` are
dropped as soon as ``k >= 4``.  :func:`primitive_pattern_classes` sums the
surjective count over every ``t = 1..k`` instead; the single-sieve form is kept
as :func:`primitive_pattern_classes_sieved` (``printed=True`` throughout this
module) and agrees with it whenever ``min(i, m) <= 3``.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from math import comb, factorial
from typing import Callable, Iterator

COMPOSITION_CUTOFF = 20


@dataclass(frozen=True)
class CountResult:
    kind: str
    n: int
    m: int
    value: int

    def to_json(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class BoundPair:
    lower: int
    upper: int


def _check(n: int, m: int, n_min: int = 1, m_min: int = 1) -> None:
    if not isinstance(n, int) or not isinstance(m, int):
        raise TypeError("parameters must be ints")
    if n < n_min or m < m_min:
        raise ValueError(f"need n >= {n_min} and m >= {m_min}, got n={n}, m={m}")


def _factorize(k: int) -> dict[int, int]:
    factors: dict[int, int] = {}
    p = 2
    while p * p <= k:
        while k % p == 0:
            factors[p] = factors.get(p, 0) + 1
            k //= p
        p += 1
    if k > 1:
        factors[k] = factors.get(k, 0) + 1
    return factors


def divisors(k: int) -> list[int]:
    small = [d for d in range(1, int(k**0.5) + 1) if k % d == 0]
    return sorted(set(small + [k // d for d in small]))


def mobius(k: int) -> int:
    if k < 1:
        raise ValueError("mobius is defined for k >= 1")
    factors = _factorize(k)
    if any(e > 1 for e in factors.values()):
        return 0
    return -1 if len(factors) % 2 else 1


def euler_phi(k: int) -> int:
    """Euler's totient, with the standard convention ``euler_phi(1) == 1``.

    Counting only over ``1..k-1`` would give 0 at k = 1 and break the necklace
    count (``mw_count(2, 2)`` would come out 2 instead of 3).
    """
    if k < 1:
        raise ValueError("euler_phi is defined for k >= 1")
    result = k
    for p in _factorize(k):
        result = result // p * (p - 1)
    return result


def mw_count(n: int, a: int) -> CountResult:
    """Number of rotation classes of words of length ``n`` over ``a`` letters."""
    _check(n, a)
    total = sum(euler_phi(n // d) * a**d for d in divisors(n))
    assert total % n == 0
    return CountResult("Mw", n, a, total // n)


def _lyndon_count_times_i(i: int, a: int) -> int:
    # i times the number of primitive necklaces of length i over a letters
    return sum(mobius(d) * a ** (i // d) for d in divisors(i))


def primitive_pattern_classes(i: int, m: int, weight: int = 1) -> int:
    """Primitive pattern classes of length ``i`` over [m], each scaled by ``weight/i``.

    ``weight=1`` gives the class count, ``weight=i`` the number of primitive
    patterns and ``weight=i-1`` the per-length term of the chordless-path
    upper bound.
    """
    k = min(i, m)
    total = 0
    for t in range(1, k + 1):
        total += sum((-1) ** j * comb(t, j) * _lyndon_count_times_i(i, t - j) for j in range(t))
    total *= weight
    assert total % i == 0
    return total // i


def primitive_pattern_classes_sieved(i: int, m: int, weight: int = 1) -> int:
    """Single-sieve variant; undercounts when ``min(i, m) >= 4``."""
    k = min(i, m)
    total = sum((-1) ** j * comb(k - 1, j) * _lyndon_count_times_i(i, k - j) for j in range(k))
    total *= weight
    assert total % i == 0
    return total // i


def _class_sum(n: int, m: int, weight: Callable[[int], int], printed: bool) -> int:
    term = primitive_pattern_classes_sieved if printed else primitive_pattern_classes
    return sum(term(i, m, weight(i)) for i in divisors(n))


def tp_count(n: int, m: int, printed: bool = False) -> CountResult:
    """Number of rotation classes of patterns of length ``n`` over [m].

    This is also the least size of an unavoidable set of length-``n``
    patterns.
    """
    _check(n, m)
    return CountResult("Tp", n, m, _class_sum(n, m, lambda i: 1, printed))


def mp_count(n: int, m: int) -> CountResult:
    return CountResult("Mp", n, m, tp_count(n, m).value)


def compositions(n: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Compositions of ``n`` into ``parts`` positive summands."""
    if parts == 1:
        if n >= 1:
            yield (n,)
        return
    for first in range(1, n - parts + 2):
        for rest in compositions(n - first, parts - 1):
            yield (first,) + rest


def multinomial(parts: tuple[int, ...]) -> int:
    out = factorial(sum(parts))
    for a in parts:
        out //= factorial(a)
    return out


def pattern_count_by_compositions(n: int, m: int) -> int:
    return sum(multinomial(c) for i in range(1, min(n, m) + 1) for c in compositions(n, i))


def surjections(n: int, i: int) -> int:
    return sum((-1) ** j * comb(i, j) * (i - j) ** n for j in range(i + 1))


def pattern_count_by_surjections(n: int, m: int) -> int:
    return sum(surjections(n, i) for i in range(1, min(n, m) + 1))


def pattern_count(n: int, m: int) -> CountResult:
    """Number of patterns of length ``n`` over [m]."""
    _check(n, m)
    if n <= COMPOSITION_CUTOFF:
        value = pattern_count_by_compositions(n, m)
    else:
        value = pattern_count_by_surjections(n, m)
    return CountResult("PatternCount", n, m, value)


def cp_bounds(n: int, m: int, printed: bool = False) -> BoundPair:
    """Bounds on the longest chordless loop-free path in the pattern-overlap graph.

    ``upper`` keeps at most ``i - 1`` vertices of every rotation class of size
    ``i``; ``lower`` is the number of patterns of length ``n - 1``.  Both are
    reported as the formulas give them; the lower one is attained only up to
    one vertex by the line-graph lift (see ``ucycle.lower_bound_path``).
    """
    _check(n, m, 2, 2)
    upper = _class_sum(n, m, lambda i: i - 1, printed)
    lower = pattern_count(n - 1, m).value
    return BoundPair(lower=lower, upper=upper)


@dataclass(frozen=True)
class ExtremalLengths:
    n: int
    a: int
    lw: int
    lp_binary: int
    lp_general_rule: Callable[[int], int] = field(repr=False, compare=False)

    def lp_from_cp(self, cp: int) -> int:
        return self.lp_general_rule(cp)


def extremal_lengths(n: int, a: int) -> ExtremalLengths:
    """Longest free words for worst-case unavoidable sets of length ``n``.

    ``lw`` is the word case over ``a`` letters, ``lp_binary`` the pattern
    case over two letters; ``lp_from_cp`` turns a chordless-path length into
    the pattern-case value for any alphabet.
    """
    _check(n, a, 2, 1)
    return ExtremalLengths(
        n=n,
        a=a,
        lw=a ** (n - 1) + n - 2,
        lp_binary=2 ** (n - 1) + n - 2,
        lp_general_rule=lambda cp: cp + n - 1,
    )


@dataclass(frozen=True)
class IdentityCheck:
    n: int
    m: int
    lhs: int
    rhs: int

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


def identity_check(n: int, m: int, printed: bool = False) -> IdentityCheck:
    """Compare the pattern count with the class sum weighted by class size."""
    _check(n, m)
    lhs = pattern_count_by_compositions(n, m)
    rhs = _class_sum(n, m, lambda i: i, printed)
    return IdentityCheck(n, m, lhs, rhs)


def table1(a: int = 2, n_range: range = range(2, 11)) -> list[CountResult]:
    return [mw_count(n, a) for n in n_range]
