"""Value types and exhaustive enumerators: partitions, signed permutations,
Young tableaux, domino tableaux and bi-tableaux."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

Partition = tuple[int, ...]


class DomainError(ValueError):
    """Raised when an argument is outside an operation's domain."""


# ---------------------------------------------------------------------------
# Partitions
# ---------------------------------------------------------------------------

def as_partition(parts: Sequence[int]) -> Partition:
    """Normalise ``parts`` to a partition tuple, dropping trailing zeros."""
    parts = tuple(int(p) for p in parts)
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    if any(p < 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
        raise DomainError(f"not a partition: {parts}")
    return parts


def parse_shape(text: str) -> Partition:
    text = text.strip()
    if not text:
        return ()
    return as_partition(int(tok) for tok in text.split(","))


def _partitions(n: int, largest: int) -> Iterator[Partition]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def enumerate_partitions(n: int, even_size: bool = False) -> Iterator[Partition]:
    """Partitions of ``n`` (of ``2n`` with ``even_size``) in reverse lexicographic order."""
    if n < 0:
        raise DomainError("n must be non-negative")
    total = 2 * n if even_size else n
    return _partitions(total, total)


@lru_cache(maxsize=None)
def partition_count(n: int) -> int:
    return sum(1 for _ in enumerate_partitions(n))


def contains(outer: Partition, inner: Partition) -> bool:
    if len(inner) > len(outer):
        return False
    return all(i <= o for i, o in zip(inner, outer))


def cells(shape: Partition) -> list[tuple[int, int]]:
    return [(r, c) for r, length in enumerate(shape, 1) for c in range(1, length + 1)]


def _beta_numbers(shape: Partition, length: int) -> list[int]:
    padded = list(shape) + [0] * (length - len(shape))
    return [padded[i] + (length - 1 - i) for i in range(length)]


def _from_beta(beads: Sequence[int]) -> Partition:
    beads = sorted(beads, reverse=True)
    k = len(beads)
    return as_partition(b - (k - 1 - i) for i, b in enumerate(beads))


def is_empty_two_core(shape: Partition) -> bool:
    """True iff the Young diagram of ``shape`` can be tiled by dominoes."""
    size = sum(shape)
    if size % 2:
        raise DomainError(f"odd size {size}: only even-size shapes can be domino tiled")
    length = len(shape) + len(shape) % 2
    beta = _beta_numbers(shape, length)
    return sum(b % 2 for b in beta) == length // 2


def two_quotient(shape: Partition) -> tuple[Partition, Partition]:
    """The 2-quotient (minus, plus) of a domino-tileable shape.

    Uses a two-runner abacus on an even number of beta-numbers: the even
    runner carries ``minus`` and the odd runner ``plus``.
    """
    shape = as_partition(shape)
    if sum(shape) % 2 or not is_empty_two_core(shape):
        raise DomainError(f"shape {shape} has no domino tiling")
    length = len(shape) + len(shape) % 2
    beta = _beta_numbers(shape, length)
    minus = _from_beta([b // 2 for b in beta if b % 2 == 0])
    plus = _from_beta([b // 2 for b in beta if b % 2 == 1])
    return minus, plus


def quotient_to_shape(minus: Partition, plus: Partition) -> Partition:
    """Inverse of :func:`two_quotient`."""
    minus, plus = as_partition(minus), as_partition(plus)
    k = max(len(minus), len(plus))
    beads = [2 * b for b in _beta_numbers(minus, k)] + [2 * b + 1 for b in _beta_numbers(plus, k)]
    return _from_beta(beads)


@lru_cache(maxsize=None)
def domino_shapes(n: int) -> tuple[Partition, ...]:
    """All shapes of ``2n`` cells admitting a domino tiling."""
    return tuple(p for p in enumerate_partitions(n, even_size=True) if is_empty_two_core(p))


def is_horizontal_strip(inner: Partition, outer: Partition) -> bool:
    if not contains(outer, inner):
        return False
    inner = list(inner) + [0] * (len(outer) - len(inner))
    nxt = list(outer[1:]) + [0]
    return all(nxt[i] <= inner[i] <= outer[i] for i in range(len(outer)))


# ---------------------------------------------------------------------------
# Signed permutations
# ---------------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class SignedPermutation:
    """An element of B_n stored as its window ``(pi(1), ..., pi(n))``."""

    window: tuple[int, ...]

    def __post_init__(self):
        window = tuple(int(v) for v in self.window)
        object.__setattr__(self, "window", window)
        if sorted(abs(v) for v in window) != list(range(1, len(window) + 1)):
            raise DomainError(f"not a signed permutation: {window}")

    @property
    def n(self) -> int:
        return len(self.window)

    def __call__(self, i: int) -> int:
        if i == 0:
            return 0
        if i < 0:
            return -self.window[-i - 1]
        return self.window[i - 1]

    def __len__(self) -> int:
        return len(self.window)

    def __iter__(self):
        return iter(self.window)

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.window)

    def inverse(self) -> SignedPermutation:
        out = [0] * self.n
        for i, v in enumerate(self.window, 1):
            out[abs(v) - 1] = i if v > 0 else -i
        return SignedPermutation(tuple(out))

    def is_positive(self) -> bool:
        return all(v > 0 for v in self.window)


def parse_signed_permutation(text: str) -> SignedPermutation:
    """Parse ``"-3,8,5"``-style text; spaces around tokens are tolerated."""
    tokens = [tok.strip() for tok in text.strip().split(",")] if text.strip() else []
    values: list[int] = []
    for tok in tokens:
        try:
            values.append(int(tok))
        except ValueError:
            raise DomainError(f"malformed token {tok!r}") from None
    seen: set[int] = set()
    for tok, v in zip(tokens, values):
        if v == 0:
            raise DomainError(f"value 0 is not allowed (token {tok!r})")
        if abs(v) > len(values):
            raise DomainError(f"|{v}| exceeds the window length {len(values)} (token {tok!r})")
        if abs(v) in seen:
            raise DomainError(f"duplicate absolute value {abs(v)} (token {tok!r})")
        seen.add(abs(v))
    return SignedPermutation(tuple(values))


def inverse(pi: SignedPermutation) -> SignedPermutation:
    return pi.inverse()


def enumerate_signed_permutations(n: int) -> Iterator[SignedPermutation]:
    for perm in itertools.permutations(range(1, n + 1)):
        for signs in itertools.product((1, -1), repeat=n):
            yield SignedPermutation(tuple(s * v for s, v in zip(signs, perm)))


def enumerate_permutations(n: int) -> Iterator[tuple[int, ...]]:
    return itertools.permutations(range(1, n + 1))


# ---------------------------------------------------------------------------
# Young tableaux
# ---------------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class YoungTableau:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.rows if len(row))
        object.__setattr__(self, "rows", rows)
        if any(len(a) < len(b) for a, b in zip(rows, rows[1:])):
            raise DomainError(f"rows do not form a Young diagram: {rows}")

    @property
    def shape(self) -> Partition:
        return tuple(len(row) for row in self.rows)

    @property
    def size(self) -> int:
        return sum(self.shape)

    def entries(self) -> list[int]:
        return [v for row in self.rows for v in row]

    def cell_of(self) -> dict[int, tuple[int, int]]:
        """Map entry -> (row, col); only meaningful for distinct entries."""
        return {v: (r, c) for r, row in enumerate(self.rows, 1) for c, v in enumerate(row, 1)}

    def is_column_strict(self) -> bool:
        return all(self.rows[r][c] < self.rows[r + 1][c]
                   for r in range(len(self.rows) - 1) for c in range(len(self.rows[r + 1])))

    def is_semistandard(self, min_label: int = 1) -> bool:
        rows_ok = all(a <= b for row in self.rows for a, b in zip(row, row[1:]))
        return rows_ok and self.is_column_strict() and all(v >= min_label for v in self.entries())

    def is_standard(self, labels: set[int] | None = None) -> bool:
        """Row and column strict with distinct entries (``1..n`` unless ``labels`` given)."""
        entries = self.entries()
        expected = set(range(1, self.size + 1)) if labels is None else labels
        if sorted(entries) != sorted(expected) or len(set(entries)) != len(entries):
            return False
        return all(a < b for row in self.rows for a, b in zip(row, row[1:])) and self.is_column_strict()

    def to_json(self) -> dict:
        return {"rows": [list(row) for row in self.rows]}

    @classmethod
    def from_json(cls, data: dict) -> YoungTableau:
        return cls(tuple(tuple(row) for row in data["rows"]))


EMPTY_TABLEAU = YoungTableau(())


def _corners(shape: Partition) -> list[int]:
    """Row indices (0-based) whose last cell is removable."""
    return [i for i in range(len(shape)) if i + 1 == len(shape) or shape[i] > shape[i + 1]]


def enumerate_standard_young(shape: Partition) -> Iterator[YoungTableau]:
    shape = as_partition(shape)
    n = sum(shape)

    def grow(current: Partition, label: int) -> Iterator[list[list[int]]]:
        if label == 0:
            yield [[] for _ in shape]
            return
        for i in _corners(current):
            smaller = list(current)
            smaller[i] -= 1
            for rows in grow(as_partition(smaller), label - 1):
                rows[i].append(label)
                yield rows

    for rows in grow(shape, n):
        yield YoungTableau(tuple(tuple(r) for r in rows))


def enumerate_semistandard_young(shape: Partition, max_label: int, min_label: int = 1
                                 ) -> Iterator[YoungTableau]:
    """Row-weak, column-strict fillings of ``shape`` with labels in ``[min_label, max_label]``."""
    shape = as_partition(shape)
    if max_label < min_label and shape:
        return
    positions = cells(shape)
    filling: dict[tuple[int, int], int] = {}

    def fill(k: int) -> Iterator[YoungTableau]:
        if k == len(positions):
            yield YoungTableau(tuple(tuple(filling[(r, c)] for c in range(1, length + 1))
                                     for r, length in enumerate(shape, 1)))
            return
        r, c = positions[k]
        lo = min_label
        if c > 1:
            lo = max(lo, filling[(r, c - 1)])
        if r > 1:
            lo = max(lo, filling[(r - 1, c)] + 1)
        for v in range(lo, max_label + 1):
            filling[(r, c)] = v
            yield from fill(k + 1)
        filling.pop((r, c), None)

    yield from fill(0)


# ---------------------------------------------------------------------------
# Domino tableaux
# ---------------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class Domino:
    row: int
    col: int
    orient: str  # "H" or "V"
    label: int

    def __post_init__(self):
        if self.orient not in ("H", "V"):
            raise DomainError(f"orientation must be 'H' or 'V', got {self.orient!r}")
        if self.row < 1 or self.col < 1:
            raise DomainError("rows and columns are 1-based")

    @property
    def vertical(self) -> bool:
        return self.orient == "V"

    @property
    def cells(self) -> tuple[tuple[int, int], tuple[int, int]]:
        if self.vertical:
            return (self.row, self.col), (self.row + 1, self.col)
        return (self.row, self.col), (self.row, self.col + 1)

    @property
    def top_right(self) -> tuple[int, int]:
        return self.cells[0] if self.vertical else self.cells[1]

    def to_json(self) -> dict:
        return {"row": self.row, "col": self.col, "orient": self.orient, "label": self.label}


def _sort_key(d: Domino):
    return (d.label, d.row, d.col)


@dataclass(frozen=True)
class DominoTableau:
    """A tiling of a Young diagram by labelled dominoes.

    ``dominoes`` is kept sorted by label (ties by position) so that equality
    is structural.
    """

    dominoes: tuple[Domino, ...]
    standard: bool = True

    def __post_init__(self):
        object.__setattr__(self, "dominoes", tuple(sorted(self.dominoes, key=_sort_key)))

    @property
    def n(self) -> int:
        return len(self.dominoes)

    @property
    def shape(self) -> Partition:
        lengths: dict[int, int] = {}
        for d in self.dominoes:
            for r, c in d.cells:
                lengths[r] = max(lengths.get(r, 0), c)
        return tuple(lengths[r] for r in range(1, len(lengths) + 1)) if lengths else ()

    def cell_map(self) -> dict[tuple[int, int], Domino]:
        return {cell: d for d in self.dominoes for cell in d.cells}

    def by_label(self) -> dict[int, Domino]:
        return {d.label: d for d in self.dominoes}

    def weight(self) -> tuple[int, ...]:
        if not self.dominoes:
            return ()
        mu = [0] * (max(d.label for d in self.dominoes) + 1)
        for d in self.dominoes:
            mu[d.label] += 1
        return tuple(mu)

    def vertical_count(self) -> int:
        return sum(d.vertical for d in self.dominoes)

    def validate(self) -> None:
        """Raise :class:`DomainError` unless this is a valid (semi)standard domino tableau."""
        grid = self.cell_map()
        if len(grid) != 2 * self.n:
            raise DomainError("dominoes overlap")
        shape = self.shape
        if any(a < b for a, b in zip(shape, shape[1:])) or set(grid) != set(cells(shape)):
            raise DomainError("dominoes do not tile a Young diagram")
        if self.standard:
            if sorted(d.label for d in self.dominoes) != list(range(1, self.n + 1)):
                raise DomainError("standard labels must be exactly 1..n")
        elif any(d.label < 0 for d in self.dominoes):
            raise DomainError("labels must be non-negative")
        for (r, c), d in grid.items():
            left, up = grid.get((r, c - 1)), grid.get((r - 1, c))
            if left is not None and left is not d:
                if left.label > d.label or (self.standard and left.label == d.label):
                    raise DomainError(f"row condition fails at {(r, c)}")
            if up is not None and up is not d and up.label >= d.label:
                raise DomainError(f"column condition fails at {(r, c)}")
        corner = grid.get((1, 1))
        if not self.standard and corner is not None and corner.vertical and corner.label == 0:
            raise DomainError("a vertical domino at (1,1) cannot be labelled 0")

    def to_json(self) -> dict:
        return {
            "shape": list(self.shape),
            "kind": "standard" if self.standard else "semistandard",
            "dominoes": [d.to_json() for d in sorted(self.dominoes, key=lambda d: (d.row, d.col))],
        }

    @classmethod
    def from_json(cls, data: dict) -> DominoTableau:
        dominoes = tuple(Domino(int(d["row"]), int(d["col"]), d["orient"], int(d["label"]))
                         for d in data["dominoes"])
        t = cls(dominoes, standard=data.get("kind", "standard") == "standard")
        if "shape" in data and as_partition(data["shape"]) != t.shape:
            raise DomainError("declared shape does not match the dominoes")
        return t


def _addable_dominoes(shape: Partition) -> list[tuple[str, int, int]]:
    """Dominoes (orient, row, col) whose addition keeps ``shape`` a partition."""
    rows = list(shape) + [0, 0]
    out = []
    for i in range(len(shape) + 1):
        above = rows[i - 1] if i > 0 else float("inf")
        if rows[i] + 2 <= above:
            out.append(("H", i + 1, rows[i] + 1))
        if rows[i] == rows[i + 1] and rows[i] + 1 <= above:
            out.append(("V", i + 1, rows[i] + 1))
    return out


def add_domino(shape: Partition, orient: str, row: int) -> Partition | None:
    """Shape after adding a domino at the end of ``row``; ``None`` if not a partition."""
    rows = list(shape) + [0, 0]
    if orient == "H":
        rows[row - 1] += 2
    else:
        if rows[row - 1] != rows[row]:
            return None
        rows[row - 1] += 1
        rows[row] += 1
    try:
        return as_partition(rows)
    except DomainError:
        return None


def enumerate_standard_domino(shape: Partition) -> Iterator[DominoTableau]:
    """Every standard domino tableau of ``shape``, built by growth."""
    shape = as_partition(shape)
    if sum(shape) % 2 or not is_empty_two_core(shape):
        raise DomainError(f"shape {shape} has no domino tiling")
    n = sum(shape) // 2

    def grow(current: Partition, placed: list[Domino]) -> Iterator[DominoTableau]:
        if len(placed) == n:
            yield DominoTableau(tuple(placed))
            return
        for orient, row, col in _addable_dominoes(current):
            nxt = add_domino(current, orient, row)
            if nxt is None or not contains(shape, nxt):
                continue
            placed.append(Domino(row, col, orient, len(placed) + 1))
            yield from grow(nxt, placed)
            placed.pop()

    yield from grow((), [])


def tilings(region: set[tuple[int, int]]) -> Iterator[list[tuple[str, int, int]]]:
    """All domino tilings of a finite cell set, as lists of (orient, row, col)."""
    region = set(region)

    def rec(remaining: set[tuple[int, int]]) -> Iterator[list[tuple[str, int, int]]]:
        if not remaining:
            yield []
            return
        r, c = min(remaining)
        if (r, c + 1) in remaining:
            for rest in rec(remaining - {(r, c), (r, c + 1)}):
                yield [("H", r, c)] + rest
        if (r + 1, c) in remaining:
            for rest in rec(remaining - {(r, c), (r + 1, c)}):
                yield [("V", r, c)] + rest

    yield from rec(region)


def _label_tiling(tiling: list[tuple[str, int, int]], min_label: int, max_label: int,
                  fixed: dict[tuple[int, int], int] | None = None) -> Iterator[list[int]]:
    """Semistandard labelings of a tiling (row weak, column strict between dominoes).

    ``fixed`` supplies labels of cells outside the tiling that constrain it.
    """
    owner: dict[tuple[int, int], int] = {}
    for k, (orient, r, c) in enumerate(tiling):
        owner[(r, c)] = k
        owner[(r, c + 1) if orient == "H" else (r + 1, c)] = k
    fixed = fixed or {}
    # lower bounds (strict flag) from neighbours; upper bounds likewise
    constraints: list[list[tuple[int, bool, str]]] = [[] for _ in tiling]
    ext_lo = [min_label] * len(tiling)
    ext_hi = [max_label] * len(tiling)
    for cell, k in owner.items():
        r, c = cell
        for (nb, strict, kind) in (((r, c - 1), False, "lo"), ((r - 1, c), True, "lo"),
                                   ((r, c + 1), False, "hi"), ((r + 1, c), True, "hi")):
            if nb in owner:
                j = owner[nb]
                if j != k:
                    constraints[k].append((j, strict, kind))
            elif nb in fixed:
                v = fixed[nb]
                if kind == "lo":
                    ext_lo[k] = max(ext_lo[k], v + 1 if strict else v)
                else:
                    ext_hi[k] = min(ext_hi[k], v - 1 if strict else v)
    labels: list[int | None] = [None] * len(tiling)

    def ok(k: int, v: int) -> bool:
        for j, strict, kind in constraints[k]:
            w = labels[j]
            if w is None:
                continue
            if kind == "lo" and (w > v or (strict and w == v)):
                return False
            if kind == "hi" and (w < v or (strict and w == v)):
                return False
        return True

    def rec(k: int) -> Iterator[list[int]]:
        if k == len(tiling):
            yield list(labels)  # type: ignore[arg-type]
            return
        for v in range(ext_lo[k], ext_hi[k] + 1):
            if ok(k, v):
                labels[k] = v
                yield from rec(k + 1)
        labels[k] = None

    yield from rec(0)


def enumerate_semistandard_domino(shape: Partition, max_label: int, min_label: int = 0
                                  ) -> Iterator[DominoTableau]:
    """Semistandard domino tableaux with labels in ``[min_label, max_label]``.

    A vertical domino covering (1,1) is never labelled 0.
    """
    shape = as_partition(shape)
    if sum(shape) % 2 or not is_empty_two_core(shape):
        raise DomainError(f"shape {shape} has no domino tiling")
    for tiling in tilings(set(cells(shape))):
        for labels in _label_tiling(tiling, min_label, max_label):
            dominoes = tuple(Domino(r, c, o, v) for (o, r, c), v in zip(tiling, labels))
            if any(d.row == 1 and d.col == 1 and d.vertical and d.label == 0 for d in dominoes):
                continue
            yield DominoTableau(dominoes, standard=False)


def enumerate_standard_tableaux(shape: Partition, family: str = "young"):
    if family == "young":
        return enumerate_standard_young(shape)
    if family == "domino":
        return enumerate_standard_domino(shape)
    raise DomainError(f"unknown family {family!r}")


def enumerate_semistandard_tableaux(shape: Partition, family: str, max_label: int,
                                    min_label: int | None = None):
    if family == "young":
        return enumerate_semistandard_young(shape, max_label, 1 if min_label is None else min_label)
    if family == "domino":
        return enumerate_semistandard_domino(shape, max_label, 0 if min_label is None else min_label)
    raise DomainError(f"unknown family {family!r}")


# ---------------------------------------------------------------------------
# Bi-tableaux
# ---------------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class BiTableau:
    """Ordered pair (t1, t2): t1 carries the negative side, t2 the positive side."""

    t1: YoungTableau
    t2: YoungTableau
    standard: bool = True

    @property
    def shape(self) -> tuple[Partition, Partition]:
        return self.t1.shape, self.t2.shape

    @property
    def n(self) -> int:
        return self.t1.size + self.t2.size

    def side_of(self) -> dict[int, tuple[int, int, int]]:
        """entry -> (side, row, col) with side 1 or 2 (standard bi-tableaux)."""
        out = {}
        for side, t in ((1, self.t1), (2, self.t2)):
            for v, (r, c) in t.cell_of().items():
                out[v] = (side, r, c)
        return out

    def validate(self) -> None:
        if self.standard:
            entries = self.t1.entries() + self.t2.entries()
            if sorted(entries) != list(range(1, len(entries) + 1)):
                raise DomainError("standard bi-tableau entries must be exactly 1..n")
            for t in (self.t1, self.t2):
                if not t.is_standard(set(t.entries())):
                    raise DomainError("component is not row and column strict")
        else:
            if not self.t1.is_semistandard(min_label=1):
                raise DomainError("t1 must be semistandard with positive entries")
            if not self.t2.is_semistandard(min_label=0):
                raise DomainError("t2 must be semistandard with non-negative entries")

    def weight(self) -> tuple[int, ...]:
        entries = self.t1.entries() + self.t2.entries()
        if not entries:
            return ()
        mu = [0] * (max(entries) + 1)
        for v in entries:
            mu[v] += 1
        return tuple(mu)

    def to_json(self) -> dict:
        return {"kind": "standard" if self.standard else "semistandard",
                "t1": self.t1.to_json()["rows"], "t2": self.t2.to_json()["rows"]}

    @classmethod
    def from_json(cls, data: dict) -> BiTableau:
        return cls(YoungTableau(tuple(map(tuple, data["t1"]))),
                   YoungTableau(tuple(map(tuple, data["t2"]))),
                   standard=data.get("kind", "standard") == "standard")


def enumerate_standard_bitableaux(minus: Partition, plus: Partition) -> Iterator[BiTableau]:
    """SBT(minus, plus): standard bi-tableaux with entries 1..n split between the sides."""
    minus, plus = as_partition(minus), as_partition(plus)
    n = sum(minus) + sum(plus)
    syt_minus = list(enumerate_standard_young(minus))
    syt_plus = list(enumerate_standard_young(plus))
    for chosen in itertools.combinations(range(1, n + 1), sum(minus)):
        rest = [v for v in range(1, n + 1) if v not in chosen]
        for a in syt_minus:
            t1 = YoungTableau(tuple(tuple(chosen[v - 1] for v in row) for row in a.rows))
            for b in syt_plus:
                t2 = YoungTableau(tuple(tuple(rest[v - 1] for v in row) for row in b.rows))
                yield BiTableau(t1, t2)
