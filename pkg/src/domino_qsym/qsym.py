"""Exact polynomials over a truncated alphabet x_0..x_m and the (quasi)symmetric
function families built on them."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Sequence

from .core import (DomainError, Partition, as_partition, enumerate_partitions,
                   enumerate_semistandard_domino, enumerate_semistandard_young,
                   is_empty_two_core, is_horizontal_strip, two_quotient)
from .descents import SignedDescentSet, wdes

Exps = tuple[int, ...]


@dataclass(frozen=True)
class QPoly:
    """Homogeneous integer polynomial in ``nvars`` variables x_0..x_{nvars-1}.

    ``degree`` is -1 only for the zero polynomial built without a degree hint.
    """

    nvars: int
    terms: Mapping[Exps, int] = field(default_factory=dict)
    degree: int = -1

    def __post_init__(self):
        clean = {tuple(e): int(c) for e, c in self.terms.items() if c}
        for e in clean:
            if len(e) != self.nvars:
                raise ValueError(f"exponent {e} does not have {self.nvars} entries")
        degrees = {sum(e) for e in clean}
        if len(degrees) > 1:
            raise ValueError("polynomial is not homogeneous")
        degree = degrees.pop() if degrees else self.degree
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "degree", degree)

    @classmethod
    def zero(cls, nvars: int, degree: int = -1) -> QPoly:
        return cls(nvars, {}, degree)

    @classmethod
    def monomial(cls, exps: Sequence[int], coef: int = 1) -> QPoly:
        return cls(len(exps), {tuple(exps): coef})

    @property
    def m(self) -> int:
        return self.nvars - 1

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: QPoly) -> None:
        if self.nvars != other.nvars:
            raise ValueError(f"alphabet mismatch: {self.nvars} vs {other.nvars} variables")

    def __add__(self, other: QPoly) -> QPoly:
        self._check(other)
        out = defaultdict(int, self.terms)
        for e, c in other.terms.items():
            out[e] += c
        return QPoly(self.nvars, out, max(self.degree, other.degree))

    def __neg__(self) -> QPoly:
        return QPoly(self.nvars, {e: -c for e, c in self.terms.items()}, self.degree)

    def __sub__(self, other: QPoly) -> QPoly:
        return self + (-other)

    def scale(self, k: int) -> QPoly:
        return QPoly(self.nvars, {e: k * c for e, c in self.terms.items()}, self.degree)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        self._check(other)
        out: dict[Exps, int] = defaultdict(int)
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                out[tuple(a + b for a, b in zip(e1, e2))] += c1 * c2
        deg = self.degree + other.degree if self.degree >= 0 and other.degree >= 0 else -1
        return QPoly(self.nvars, out, deg)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, QPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.terms.items())))

    def leading(self) -> tuple[Exps, int]:
        e = max(self.terms)
        return e, self.terms[e]

    def to_json(self) -> dict:
        return {"degree": max(self.degree, 0), "vars": self.nvars,
                "terms": [{"exps": list(e), "coef": self.terms[e]} for e in sorted(self.terms)]}

    @classmethod
    def from_json(cls, data: dict) -> QPoly:
        return cls(data["vars"], {tuple(t["exps"]): t["coef"] for t in data["terms"]}, data["degree"])

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            mono = "*".join(f"x{i}" + (f"^{k}" if k > 1 else "") for i, k in enumerate(e) if k)
            parts.append(f"{self.terms[e]}*{mono or '1'}")
        return " + ".join(parts)


def qsum(polys: Iterable[QPoly], nvars: int, degree: int = -1) -> QPoly:
    out: dict[Exps, int] = defaultdict(int)
    for p in polys:
        if p.nvars != nvars:
            raise ValueError("alphabet mismatch")
        for e, c in p.terms.items():
            out[e] += c
    return QPoly(nvars, out, degree)


def _chains(lower: Sequence[int], strict: frozenset[int], m: int) -> Iterator[list[int]]:
    """Index chains i_1 <= ... <= i_n <= m with i_j >= lower[j-1] and i_j < i_{j+1} for j in strict."""
    n = len(lower)
    chain: list[int] = []

    def rec(j: int, prev: int) -> Iterator[list[int]]:
        if j == n:
            yield chain
            return
        lo = max(lower[j], prev + (1 if j in strict else 0)) if j else lower[0]
        for v in range(lo, m + 1):
            chain.append(v)
            yield from rec(j + 1, v)
            chain.pop()

    yield from rec(0, 0)


def _from_chains(chains: Iterable[list[int]], m: int, n: int) -> QPoly:
    terms: dict[Exps, int] = defaultdict(int)
    for chain in chains:
        e = [0] * (m + 1)
        for v in chain:
            e[v] += 1
        terms[tuple(e)] += 1
    return QPoly(m + 1, terms, n)


@lru_cache(maxsize=None)
def _fundamental(i_set: frozenset[int], n: int, m: int, start: int) -> QPoly:
    return _from_chains(_chains([start] * n, i_set, m), m, n)


def fundamental_f(i_set: Iterable[int], n: int, m: int, include_x0: bool = False) -> QPoly:
    """Gessel's F_I in x_1..x_m (x_0..x_m with ``include_x0``), stored over x_0..x_m."""
    i_set = frozenset(i_set)
    if not i_set <= set(range(1, n)):
        raise DomainError(f"{sorted(i_set)} is not a subset of [{n - 1}]")
    return _fundamental(i_set, n, m, 0 if include_x0 else 1)


@lru_cache(maxsize=None)
def _chow(i_set: frozenset[int], n: int, m: int) -> QPoly:
    first = 1 if 0 in i_set else 0
    return _from_chains(_chains([first] * n, i_set - {0}, m), m, n)


def chow_f(i_set: Iterable[int], n: int, m: int) -> QPoly:
    """Chow's type B fundamental function: chains 0 = i_0 <= i_1 <= ... <= i_n, strict at I."""
    i_set = frozenset(i_set)
    if not i_set <= set(range(n)):
        raise DomainError(f"{sorted(i_set)} is not a subset of {{0..{n - 1}}}")
    return _chow(i_set, n, m)


@lru_cache(maxsize=None)
def _poirier(sd: SignedDescentSet, m: int) -> QPoly:
    lower = [1 if sign == "-" else 0 for sign in sd.extended]
    return _from_chains(_chains(lower, frozenset(wdes(sd)), m), m, sd.n)


def poirier_f(sd: SignedDescentSet, m: int) -> QPoly:
    """Poirier's signed fundamental function evaluated at (X*, X).

    Both alphabets share one index chain, strict at the weak descents; a
    negative block draws from X* = {x_1, x_2, ...} and a positive block from
    X = {x_0, x_1, ...}.
    """
    return _poirier(sd, m)


@lru_cache(maxsize=None)
def _schur(shape: Partition, m: int, start: int) -> QPoly:
    terms: dict[Exps, int] = defaultdict(int)
    for t in enumerate_semistandard_young(shape, m, start):
        e = [0] * (m + 1)
        for v in t.entries():
            e[v] += 1
        terms[tuple(e)] += 1
    return QPoly(m + 1, terms, sum(shape))


def schur(shape: Sequence[int], m: int, include_x0: bool = False) -> QPoly:
    """s_shape over X = {x_0..x_m} (``include_x0``) or X* = {x_1..x_m}."""
    return _schur(as_partition(shape), m, 0 if include_x0 else 1)


@lru_cache(maxsize=None)
def _domino_function(shape: Partition, m: int) -> QPoly:
    terms: dict[Exps, int] = defaultdict(int)
    for t in enumerate_semistandard_domino(shape, m, 0):
        e = [0] * (m + 1)
        for d in t.dominoes:
            e[d.label] += 1
        terms[tuple(e)] += 1
    return QPoly(m + 1, terms, sum(shape) // 2)


def domino_function(shape: Sequence[int], m: int) -> QPoly:
    """G_shape: generating function of semistandard domino tableaux with labels 0..m."""
    shape = as_partition(shape)
    if sum(shape) % 2 or not is_empty_two_core(shape):
        raise DomainError(f"shape {shape} has no domino tiling")
    return _domino_function(shape, m)


def x0_power(k: int, m: int) -> QPoly:
    return QPoly.monomial([k] + [0] * m)


def type_b_schur(rho: Sequence[int], n: int, m: int) -> QPoly:
    """s^B_{(n-|rho|, rho)} = x_0^{n-|rho|} s_rho(X*)."""
    rho = as_partition(rho)
    if sum(rho) > n:
        raise DomainError(f"|{rho}| exceeds n={n}")
    return x0_power(n - sum(rho), m) * schur(rho, m)


# ---------------------------------------------------------------------------
# Littlewood-Richardson coefficients and Schur expansions
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _lr(rho: Partition, alpha: Partition, nu: Partition) -> int:
    if sum(rho) != sum(alpha) + sum(nu):
        return 0
    if any(a > r for a, r in zip(alpha, rho)) or len(alpha) > len(rho):
        return 0
    inner = list(alpha) + [0] * (len(rho) - len(alpha))
    # reading order: rows top to bottom, each row right to left
    order = [(r, c) for r in range(len(rho)) for c in range(rho[r] - 1, inner[r] - 1, -1)]
    filling: dict[tuple[int, int], int] = {}
    counts = [0] * (len(nu) + 1)

    def rec(k: int) -> int:
        if k == len(order):
            return 1
        r, c = order[k]
        hi = filling.get((r, c + 1), len(nu))
        lo = filling[(r - 1, c)] + 1 if (r - 1, c) in filling else 1
        total = 0
        for v in range(lo, hi + 1):
            if counts[v] >= nu[v - 1]:
                continue
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            filling[(r, c)] = v
            counts[v] += 1
            total += rec(k + 1)
            counts[v] -= 1
            del filling[(r, c)]
        return total

    return rec(0)


def lr_coefficient(rho: Sequence[int], alpha: Sequence[int], nu: Sequence[int]) -> int:
    """k^rho_{alpha,nu}: LR fillings of rho/alpha with content nu and lattice reverse reading word."""
    return _lr(as_partition(rho), as_partition(alpha), as_partition(nu))


def schur_decompose(p: QPoly) -> dict[Partition, int]:
    """Expand a symmetric polynomial in x_1..x_m in the Schur basis s_rho(X*).

    Terms must not involve x_0. Raises :class:`DomainError` if ``p`` is not
    symmetric.
    """
    out: dict[Partition, int] = {}
    rest = p
    while not rest.is_zero():
        e, c = rest.leading()
        if e[0]:
            raise DomainError("polynomial involves x_0")
        lam = e[1:]
        if any(a < b for a, b in zip(lam, lam[1:])):
            raise DomainError("not symmetric in x_1..x_m")
        lam = as_partition(lam)
        out[lam] = c
        rest = rest - schur(lam, p.m).scale(c)
    return out


@dataclass(frozen=True)
class SBExpansion:
    """sum of c_rho * s^B_{(n-|rho|, rho)}."""

    n: int
    coefficients: Mapping[Partition, int]

    def __post_init__(self):
        object.__setattr__(self, "coefficients",
                           {as_partition(r): c for r, c in self.coefficients.items() if c})

    def to_poly(self, m: int) -> QPoly:
        return qsum((type_b_schur(r, self.n, m).scale(c) for r, c in self.coefficients.items()),
                    m + 1, self.n)

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coefficients.values())

    def to_json(self) -> dict:
        return {"n": self.n, "coefficients": [{"rho": list(r), "coef": c}
                                              for r, c in sorted(self.coefficients.items())]}


def decompose_lambda_b(p: QPoly, n: int) -> SBExpansion:
    """Write p in the s^B basis; raises DomainError("not in Λ^B_n") otherwise."""
    if p.m < n:
        raise DomainError(f"need at least n+1={n + 1} variables, got {p.nvars}")
    groups: dict[int, dict[Exps, int]] = defaultdict(dict)
    for e, c in p.terms.items():
        if sum(e) != n:
            raise DomainError(f"not homogeneous of degree {n}")
        groups[e[0]][(0,) + e[1:]] = c
    coefficients: dict[Partition, int] = {}
    for k, terms in groups.items():
        try:
            expansion = schur_decompose(QPoly(p.nvars, terms))
        except DomainError:
            raise DomainError("not in Λ^B_n") from None
        for rho, c in expansion.items():
            coefficients[rho] = c
    return SBExpansion(n, coefficients)


def g_in_sb(shape: Sequence[int]) -> SBExpansion:
    """s^B expansion of G_shape via LR coefficients and horizontal strips of the plus side."""
    shape = as_partition(shape)
    minus, plus = two_quotient(shape)
    n = sum(shape) // 2
    coefficients: dict[Partition, int] = defaultdict(int)
    for size in range(sum(plus) + 1):
        for nu in enumerate_partitions(size):
            if not is_horizontal_strip(nu, plus):
                continue
            for rho in enumerate_partitions(sum(minus) + size):
                k = lr_coefficient(rho, minus, nu)
                if k:
                    coefficients[rho] += k
    return SBExpansion(n, coefficients)


def qsym_of_set(descents: Iterable[Iterable[int]], n: int, m: int) -> QPoly:
    """Sum of Chow functions over a multiset of type B descent sets."""
    return qsum((chow_f(d, n, m) for d in descents), m + 1, n)


def exact_rank(polys: Sequence[QPoly]) -> int:
    """Rank of the coefficient matrix of ``polys`` over the rationals."""
    from sympy import Matrix

    monomials = sorted({e for p in polys for e in p.terms})
    if not monomials:
        return 0
    rows = [[p.terms.get(e, 0) for e in monomials] for p in polys]
    return Matrix(rows).rank()
