"""Descent statistics for signed permutations, Young tableaux, domino tableaux
and bi-tableaux."""

from __future__ import annotations

from dataclasses import dataclass

from .core import BiTableau, DominoTableau, SignedPermutation, YoungTableau

DescentSet = frozenset


def des_b(pi: SignedPermutation) -> frozenset[int]:
    """Positions 0 <= i < n with pi(i) > pi(i+1), where pi(0) = 0."""
    w = (0,) + pi.window
    return frozenset(i for i in range(pi.n) if w[i] > w[i + 1])


def des_a(word) -> frozenset[int]:
    """Ordinary descent set of a word of distinct integers (1-based positions)."""
    return frozenset(i for i in range(1, len(word)) if word[i - 1] > word[i])


def _r_key(v: int, n: int) -> int:
    # -1 <_r -2 <_r ... <_r -n <_r 0 <_r 1 <_r ... <_r n
    return v if v >= 0 else -(n + 1) - v


def des_r(pi: SignedPermutation) -> frozenset[int]:
    n = pi.n
    w = [_r_key(v, n) for v in (0,) + pi.window]
    return frozenset(i for i in range(n) if w[i] > w[i + 1])


@dataclass(frozen=True)
class SignedDescentSet:
    """Marked positions ``s`` (always containing n) with a sign per position."""

    n: int
    s: tuple[int, ...]
    eps: str

    def __post_init__(self):
        if not self.s or self.s[-1] != self.n or list(self.s) != sorted(set(self.s)):
            raise ValueError(f"invalid signed descent set {self.s} for n={self.n}")
        if len(self.eps) != len(self.s) or set(self.eps) - {"+", "-"}:
            raise ValueError("eps must give one sign per member of s")

    @property
    def extended(self) -> str:
        """Sign of every position 1..n, constant on each block (s_{i-1}, s_i]."""
        out = []
        prev = 0
        for s, e in zip(self.s, self.eps):
            out.extend(e * (s - prev))
            prev = s
        return "".join(out)

    def to_json(self) -> dict:
        return {"S": list(self.s), "eps": self.eps}

    def __str__(self) -> str:
        return f"({{{','.join(map(str, self.s))}}},{self.eps})"


def sdes(pi: SignedPermutation) -> SignedDescentSet:
    w = pi.window
    n = pi.n
    s = []
    for i in range(n - 1):
        a, b = w[i], w[i + 1]
        if a > 0:
            marked = a > b
        else:
            marked = b > 0 or abs(a) > abs(b)
        if marked:
            s.append(i + 1)
    s.append(n)
    eps = "".join("+" if w[i - 1] > 0 else "-" for i in s)
    return SignedDescentSet(n, tuple(s), eps)


def wdes(sd: SignedDescentSet) -> frozenset[int]:
    ext = sd.extended
    return frozenset(s for s in sd.s if s != sd.n and ext[s - 1] + ext[s] in ("++", "--", "+-"))


def neg_count(pi: SignedPermutation) -> int:
    return sum(v < 0 for v in pi.window)


def des_syt(t: YoungTableau) -> frozenset[int]:
    """{i : i+1 lies in a strictly lower row than i}."""
    row = {v: r for v, (r, _) in t.cell_of().items()}
    return frozenset(i for i in range(1, t.size) if row[i + 1] > row[i])


def des_sdt(t: DominoTableau) -> frozenset[int]:
    """Domino descent set: 0 if domino 1 is vertical, i if domino i+1's top row is lower."""
    by = t.by_label()
    out = set()
    if t.n and by[1].vertical:
        out.add(0)
    out.update(i for i in range(1, t.n) if by[i + 1].row > by[i].row)
    return frozenset(out)


def sdes_bitableau(b: BiTableau) -> SignedDescentSet:
    where = b.side_of()
    n = b.n
    s = []
    for i in range(1, n):
        (side_a, row_a, _), (side_b, row_b, _) = where[i], where[i + 1]
        if side_a != side_b or row_b > row_a:
            s.append(i)
    s.append(n)
    eps = "".join("-" if where[i][0] == 1 else "+" for i in s)
    return SignedDescentSet(n, tuple(s), eps)


def des_r_bitableau(b: BiTableau) -> frozenset[int]:
    """Same-tableau row descents, steps from t2 into t1, and 0 when 1 sits in t1."""
    where = b.side_of()
    out = set()
    if b.n and where[1][0] == 1:
        out.add(0)
    for i in range(1, b.n):
        (side_a, row_a, _), (side_b, row_b, _) = where[i], where[i + 1]
        if (side_a == side_b and row_b > row_a) or (side_a == 2 and side_b == 1):
            out.add(i)
    return frozenset(out)


def des_tableau(t) -> frozenset[int]:
    """Descent set of any standard tableau-like object (Young, domino, bi-tableau)."""
    if isinstance(t, DominoTableau):
        return des_sdt(t)
    if isinstance(t, BiTableau):
        return des_r_bitableau(t)
    return des_syt(t)
