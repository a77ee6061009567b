"""Signed arc permutations: recognition, the six-type classification, the
descent-preserving maps to domino tableaux and back, and the maps phi1/phi2
into bi-tableaux."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .core import (BiTableau, DomainError, Domino, DominoTableau, SignedPermutation,
                   YoungTableau)
from .descents import des_b


class ArcInvariantError(AssertionError):
    """An internal uniqueness or partition claim failed."""


# ---------------------------------------------------------------------------
# Recognition
# ---------------------------------------------------------------------------

def _succ(v: int, n: int) -> int:
    return 1 if v == n else v + 1


def _pred(v: int, n: int) -> int:
    return n if v == 1 else v - 1


def is_cyclic_interval(values: set[int], n: int) -> bool:
    if not values or len(values) == n:
        return True
    starts = sum(1 for v in values if _pred(v, n) not in values)
    return starts == 1


def _forced_sign(v: int, prefix: set[int], n: int) -> int:
    """+1 or -1 when the sign of |v| is forced by the prefix, 0 when free."""
    below = _pred(v, n) in prefix
    above = _succ(v, n) in prefix
    if below and not above:
        return 1
    if above and not below:
        return -1
    return 0


def is_signed_arc(pi: SignedPermutation) -> bool:
    """Every prefix of absolute values is a cyclic interval of Z_n and each new
    entry is positive when it extends the interval upward, negative when it
    extends it downward. An entry whose two neighbours are both already
    present (only the last one) may carry either sign."""
    n = pi.n
    prefix: set[int] = set()
    for v in pi.window:
        if not is_cyclic_interval(prefix, n):
            return False
        forced = _forced_sign(abs(v), prefix, n)
        if forced and (v > 0) != (forced > 0):
            return False
        prefix.add(abs(v))
    return True


# absolute-value order pattern of a triple, and the sign of its middle entry
FORBIDDEN_PATTERNS = frozenset({
    ((1, 2, 3), -1), ((1, 3, 2), 1), ((2, 3, 1), -1),
    ((2, 1, 3), 1), ((3, 1, 2), -1), ((3, 2, 1), 1),
})


def _std(triple) -> tuple[int, ...]:
    order = sorted(triple)
    return tuple(order.index(x) + 1 for x in triple)


def is_signed_arc_by_patterns(pi: SignedPermutation) -> bool:
    w = pi.window
    for i, j, k in itertools.combinations(range(pi.n), 3):
        key = (_std((abs(w[i]), abs(w[j]), abs(w[k]))), 1 if w[j] > 0 else -1)
        if key in FORBIDDEN_PATTERNS:
            return False
    return True


def enumerate_signed_arc(n: int) -> Iterator[SignedPermutation]:
    """Depth-first generation of A^s_n, in lexicographic order of windows by (|v|, sign)."""
    window: list[int] = []
    prefix: set[int] = set()

    def rec() -> Iterator[SignedPermutation]:
        if len(window) == n:
            yield SignedPermutation(tuple(window))
            return
        if prefix:
            candidates = {v for v in range(1, n + 1) if v not in prefix
                          and (_pred(v, n) in prefix or _succ(v, n) in prefix)}
        else:
            candidates = set(range(1, n + 1))
        for v in sorted(candidates):
            forced = _forced_sign(v, prefix, n)
            for sign in ((1, -1) if not forced else (forced,)):
                window.append(sign * v)
                prefix.add(v)
                yield from rec()
                prefix.discard(v)
                window.pop()

    yield from rec()


def arc_descents_by_rule(pi: SignedPermutation) -> frozenset[int]:
    """Descent set of an arc permutation read off from sign changes and the n->1, -1->-n steps."""
    w = pi.window
    n = pi.n
    out = {0} if w[0] < 0 else set()
    for i in range(n - 1):
        a, b = w[i], w[i + 1]
        if (a > 0 > b) or (a == n and b == 1) or (a == -1 and b == -n):
            out.add(i + 1)
    return frozenset(out)


def satisfies_subsequence_law(pi: SignedPermutation) -> bool:
    """Positive entries climb by +1 and negative entries by +1 cyclically, and the
    positive part starts right after the first negative's absolute value."""
    n = pi.n
    pos = [v for v in pi.window if v > 0]
    neg = [v for v in pi.window if v < 0]
    if any(b != _succ(a, n) for a, b in zip(pos, pos[1:])):
        return False
    # -1 + 1 wraps to -n
    if any(b != (-n if a == -1 else a + 1) for a, b in zip(neg, neg[1:])):
        return False
    if pos and neg and pos[0] != _succ(-neg[0], n):
        return False
    return True


# ---------------------------------------------------------------------------
# Classification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ArcClassification:
    arc_type: str
    k: int
    l: int | None = None
    pattern: str | None = None

    def to_json(self) -> dict:
        out = {"type": self.arc_type, "k": self.k}
        if self.l is not None:
            out["l"] = self.l
        if self.pattern is not None:
            out["pattern"] = self.pattern
        return out


def type_template(arc_type: str, n: int, k: int, l: int | None = None
                  ) -> tuple[list[int], list[int]]:
    """(negative subsequence, positive subsequence) of a type with parameters.

    T1 and T2 are returned as a single full window in the positive slot.
    T1 uses k = 1 for the identity; T2 uses k = n + 1 for -n..-1.
    """
    if arc_type == "T1":
        return [], list(range(k, n + 1)) + list(range(1, k))
    if arc_type == "T2":
        return [], [-v for v in range(k - 1, 0, -1)] + [-v for v in range(n, k - 1, -1)]
    if arc_type == "T3":
        return [-v for v in range(k, l, -1)], list(range(k + 1, n + 1)) + list(range(1, l + 1))
    if arc_type == "T4":
        return ([-v for v in range(k, 0, -1)] + [-v for v in range(n, l, -1)],
                list(range(k + 1, l + 1)))
    if arc_type == "T5":
        return [-v for v in range(k, 0, -1)], list(range(k + 1, n + 1))
    if arc_type == "T6":
        return [-v for v in range(n, k, -1)], list(range(1, k + 1))
    raise DomainError(f"unknown arc type {arc_type!r}")


def _t3_landmarks(w: tuple[int, ...]):
    n = len(w)
    pos_n = w.index(n) + 1
    i1 = w.index(1) + 1
    negs = [i for i, v in enumerate(w, 1) if v < 0]
    before = [i for i in negs if i < pos_n]
    between = [i for i in negs if pos_n < i < i1]
    after_one = [i for i in negs if i > i1]
    after_n = [i for i in negs if i > pos_n]
    b = before[-1] if before else None
    a = after_n[0] if after_n else None
    a2 = after_n[1] if len(after_n) > 1 else None
    pattern = "".join("-" if part else "+" for part in (before, between, after_one))
    return b, a, a2, i1, pattern


T3_PATTERNS = {"---": "P1", "--+": "P2", "-+-": "P3", "-++": "P4",
               "+--": "P5", "+-+": "P6", "++-": "P7"}


def classify(pi: SignedPermutation) -> ArcClassification:
    if not is_signed_arc(pi):
        raise DomainError(f"{pi} is not a signed arc permutation")
    n = pi.n
    w = pi.window
    neg = [v for v in w if v < 0]
    pos = [v for v in w if v > 0]
    if not neg:
        found = ArcClassification("T1", w[0])
    elif not pos:
        found = ArcClassification("T2", -w[0] + 1)
    else:
        one_pos, n_pos = 1 in pos, n in pos
        if not one_pos and n_pos:
            found = ArcClassification("T5", len(neg))
        elif one_pos and not n_pos:
            found = ArcClassification("T6", len(pos))
        elif one_pos and n_pos:
            k = -neg[0]
            l = k - len(neg)
            pattern = T3_PATTERNS[_t3_landmarks(w)[4]]
            found = ArcClassification("T3", k, l, pattern)
        else:
            k = -neg[0]
            l = n - (len(neg) - k)
            found = ArcClassification("T4", k, l)
    _check_template(pi, found)
    return found


def _check_template(pi: SignedPermutation, c: ArcClassification) -> None:
    n = pi.n
    negs, poss = type_template(c.arc_type, n, c.k, c.l)
    if c.arc_type in ("T1", "T2"):
        ok = list(pi.window) == poss
        in_range = 1 <= c.k <= n if c.arc_type == "T1" else 2 <= c.k <= n + 1
    else:
        ok = ([v for v in pi.window if v < 0] == negs and [v for v in pi.window if v > 0] == poss)
        if c.arc_type == "T3":
            in_range = 1 <= c.l < c.k < n
        elif c.arc_type == "T4":
            in_range = 1 <= c.k < c.l < n
        else:
            in_range = 1 <= c.k <= n - 1
    if not (ok and in_range):
        raise ArcInvariantError(f"{pi} does not match the {c.arc_type} template {c.to_json()}")


# ---------------------------------------------------------------------------
# Domino growth rules
# ---------------------------------------------------------------------------

class _Grower:
    def __init__(self):
        self.rows = [0, 0, 0, 0, 0]
        self.dominoes: list[Domino] = []

    def _put(self, orient: str, row: int, label: int) -> None:
        r = self.rows
        col = r[row - 1] + 1
        self.dominoes.append(Domino(row, col, orient, label))
        if orient == "H":
            r[row - 1] += 2
        else:
            r[row - 1] += 1
            r[row] += 1

    def _options(self, rule: int) -> list[tuple[str, int]]:
        r1, r2, r3, r4, _ = self.rows
        if rule == 1:
            return [("H", 1)]
        if rule == 2:
            opts = []
            if r2 + 2 <= r1:
                opts.append(("H", 2))
            if r1 == r2:
                opts.append(("V", 1))
            return opts
        if rule == 3:
            opts = []
            if r3 + 2 <= r2:
                opts.append(("H", 3))
            if r2 == r3 and r2 + 1 <= r1:
                opts.append(("V", 2))
            return opts
        if rule == 4:
            return [("V", 3)] if r3 == r4 and r3 + 1 <= r2 else []
        raise ValueError(rule)

    def apply(self, rule: int, label: int) -> None:
        opts = self._options(rule)
        if len(opts) != 1:
            raise ArcInvariantError(f"rule {rule} at step {label} has {len(opts)} legal placements")
        self._put(opts[0][0], opts[0][1], label)

    def vertical_start(self, label: int) -> None:
        """Vertical domino across rows 1-2, used outside the numbered rules."""
        if self.rows[0] != self.rows[1]:
            raise ArcInvariantError(f"no room for a vertical domino at step {label}")
        self._put("V", 1, label)

    def tableau(self) -> DominoTableau:
        t = DominoTableau(tuple(self.dominoes))
        t.validate()
        return t


# rule 0 stands for a vertical domino across rows 1-2 placed outside the
# numbered rules (first domino of type 2 and the all-vertical special cases)
def _rules_for(pi: SignedPermutation, c: ArcClassification) -> list[int]:
    """Growth rule used at each step."""
    w = pi.window
    n = pi.n
    default = [1 if v > 0 else 2 for v in w]
    if c.arc_type == "T1":
        rules = [1] * n
        if w[0] != 1:
            rules[w.index(1)] = 3
        return rules
    if c.arc_type == "T2":
        rules = [0] + [1] * (n - 1)
        if list(w) != list(range(-n, 0)):
            rules[w.index(-n)] = 4
        return rules
    if c.arc_type == "T5":
        if list(w) == [-1] + list(range(2, n + 1)):
            return [0] * n
        return default
    if c.arc_type == "T6":
        if list(w) == [-n] + list(range(1, n)):
            return [0] * n
        return default
    if c.arc_type == "T4":
        if w[0] == -1 and c.k == 1 and c.l == n - 1:
            # the plain rules would give shape (2n-3,1,1,1); use the
            # all-vertical tableau of the type 4 family instead
            rules = [0] * n
        else:
            rules = default[:]
        rules[w.index(-n)] = 4
        return rules
    # T3
    b, a, a2, i1, _ = _t3_landmarks(w)
    rules = default[:]
    p = c.pattern
    if p == "P1":
        exceptions = {b + 1: 2, a: 3}
    elif p == "P2":
        exceptions = {b + 1: 2, i1: 2, a: 3}
    elif p in ("P3", "P7"):
        exceptions = {i1: 2, a: 3}
    elif p == "P4":
        exceptions = {b + 1: 2, i1: 3}
    elif p == "P5":
        exceptions = {a: 3, a2: 3}
    elif a2 is not None and a2 < i1:  # P6
        exceptions = {a: 3, a2: 3, i1: 2}
    else:
        exceptions = {a: 3, i1: 3}
    for step, rule in exceptions.items():
        rules[step - 1] = rule
    return rules


def arc_to_domino(pi: SignedPermutation) -> DominoTableau:
    """Descent-preserving standard domino tableau of a signed arc permutation."""
    g = _Grower()
    for step, rule in enumerate(_rules_for(pi, classify(pi)), 1):
        if rule == 0:
            g.vertical_start(step)
        else:
            g.apply(rule, step)
    return g.tableau()


# ---------------------------------------------------------------------------
# Inverse maps
# ---------------------------------------------------------------------------

def _role(d: Domino) -> int:
    """Which growth rule placed a domino, read from its position."""
    if d.orient == "H":
        return d.row
    return d.row + 1  # V across rows 1-2 is rule 2, rows 2-3 rule 3, rows 3-4 rule 4


def _family(shape: tuple[int, ...], n: int) -> str:
    if shape == (2 * n,):
        return "T1"
    if shape == (2 * n - 1, 1):
        return "T2"
    if n >= 2 and shape == (2 * n - 2, 1, 1):
        return "T1"
    if n >= 2 and shape == (2 * n - 3, 1, 1, 1) and 2 * n - 3 >= 1:
        return "T2"
    if len(shape) == 2 and shape[1] >= 2:
        return "T56"
    if len(shape) == 3 and shape[1] >= 2 and shape[2] == 2:
        return "T3"
    if len(shape) == 4 and shape[1] >= 2 and shape[2:] == (1, 1):
        return "T4"
    raise DomainError(f"shape {shape} is outside the signed arc shape families")


def _fill(signs: list[int], negs: list[int], poss: list[int]) -> SignedPermutation:
    negs, poss = iter(negs), iter(poss)
    return SignedPermutation(tuple(next(negs) if s < 0 else next(poss) for s in signs))


def domino_to_arc(t: DominoTableau, which: str | None = None) -> SignedPermutation:
    """Inverse of :func:`arc_to_domino`.

    ``which`` ('T5' or 'T6') is required for two-row shapes, which are the
    image of both types.
    """
    t.validate()
    if not t.standard:
        raise DomainError("domino_to_arc needs a standard domino tableau")
    n = t.n
    shape = t.shape
    family = _family(shape, n)
    by = t.by_label()
    roles = {lab: _role(d) for lab, d in by.items()}
    if family == "T1":
        if len(shape) == 1:
            pi = SignedPermutation(tuple(range(1, n + 1)))
        else:
            i = next(lab for lab, r in roles.items() if r == 3)
            k = n - i + 2
            pi = SignedPermutation(tuple(type_template("T1", n, k)[1]))
    elif family == "T2":
        if len(shape) == 2:
            pi = SignedPermutation(tuple(range(-n, 0)))
        else:
            i = next(lab for lab, r in roles.items() if r == 4)
            pi = SignedPermutation(tuple(type_template("T2", n, i)[1]))
    elif family == "T56":
        if which not in ("T5", "T6"):
            raise DomainError("two-row shapes need which='T5' or which='T6'")
        if all(d.vertical for d in t.dominoes):
            window = [-1] + list(range(2, n + 1)) if which == "T5" else [-n] + list(range(1, n))
            pi = SignedPermutation(tuple(window))
        else:
            signs = [1 if roles[i] == 1 else -1 for i in range(1, n + 1)]
            k = signs.count(-1) if which == "T5" else signs.count(1)
            negs, poss = type_template(which, n, k)
            pi = _fill(signs, negs, poss)
    elif family == "T4" and all(d.vertical for d in t.dominoes):
        i = next(lab for lab, r in roles.items() if r == 4)
        window = [-1] + list(range(2, n))
        window.insert(i - 1, -n)
        pi = SignedPermutation(tuple(window))
    elif family == "T4":
        i = next(lab for lab, r in roles.items() if r == 4)
        k = sum(1 for lab, r in roles.items() if r == 2 and lab < i)
        l = n - 1 - sum(1 for lab, r in roles.items() if r == 2 and lab > i)
        signs = [1 if roles[s] == 1 else -1 for s in range(1, n + 1)]
        negs, poss = type_template("T4", n, k, l)
        pi = _fill(signs, negs, poss)
    else:
        pi = _t3_inverse(t, roles)
    if arc_to_domino(pi) != t:
        raise ArcInvariantError(f"inverse image {pi} does not map back to the tableau")
    return pi


def t3_pattern_of_tableau(t: DominoTableau, roles: dict[int, int] | None = None) -> str:
    """Pattern P1..P7 of the type 3 preimage, read from the tableau."""
    roles = roles or {lab: _role(d) for lab, d in t.by_label().items()}
    n = t.n
    r1 = sorted(lab for lab, r in roles.items() if r == 1)
    r2 = sorted(lab for lab, r in roles.items() if r == 2)
    by = t.by_label()
    row3_h = [lab for lab, d in by.items() if d.row == 3 and d.orient == "H"]
    if not row3_h:
        v1, v2 = sorted(lab for lab, r in roles.items() if r == 3)
        if v2 != v1 + 1:
            return "P5"
        f = min((lab for lab in r1 if lab > v2), default=n + 1)
        return "P6" if all(lab < f for lab in r2) else "P5"
    i = row3_h[0]
    r2_in = [lab for lab in r2 if lab < i]
    if len(r2_in) == 1:
        return "P7"
    j = max(r2_in)
    if roles.get(j - 1) == 1:
        return "P3"
    if not any(lab > i for lab in r2):
        return "P4"
    rest_descent = any(by[s + 1].row > by[s].row for s in range(i + 1, n))
    return "P1" if rest_descent else "P2"


def _t3_inverse(t: DominoTableau, roles: dict[int, int]) -> SignedPermutation:
    n = t.n
    pattern = t3_pattern_of_tableau(t, roles)
    r1 = sorted(lab for lab, r in roles.items() if r == 1)
    r2 = sorted(lab for lab, r in roles.items() if r == 2)
    r3 = sorted(lab for lab, r in roles.items() if r == 3)
    signs = {lab: (1 if r == 1 else -1) for lab, r in roles.items()}
    if pattern == "P1":
        a = r3[0]
        signs[max(lab for lab in r2 if lab < a)] = 1
        i1 = min(lab for lab in r1 if lab > a)
    elif pattern == "P2":
        a = r3[0]
        signs[max(lab for lab in r2 if lab < a)] = 1
        i1 = max(r2)
        signs[i1] = 1
    elif pattern in ("P3", "P7"):
        a = r3[0]
        i1 = max(lab for lab in r2 if lab < a)
        signs[i1] = 1
    elif pattern == "P4":
        i1 = r3[0]
        signs[i1] = 1
        signs[max(lab for lab in r2 if lab < i1)] = 1
    elif pattern == "P5":
        a = r3[0]
        i1 = min(lab for lab in r1 if lab > a)
    else:  # P6
        if not r2:
            i1 = r3[1]
        else:
            i1 = max(r2)
        signs[i1] = 1
    sign_list = [signs[s] for s in range(1, n + 1)]
    positives_before = sum(1 for s in range(1, i1) if sign_list[s - 1] > 0)
    k = n - positives_before
    l = k - sign_list.count(-1)
    negs, poss = type_template("T3", n, k, l)
    return _fill(sign_list, negs, poss)


# ---------------------------------------------------------------------------
# phi1 and phi2
# ---------------------------------------------------------------------------

def phi1(pi: SignedPermutation) -> SignedPermutation:
    """Reverse the negative values across the positions that hold negatives,
    pairing the position of the smallest with that of the largest, and so on."""
    neg_positions = sorted((i for i, v in enumerate(pi.window) if v < 0), key=lambda i: pi.window[i])
    out = list(pi.window)
    m = len(neg_positions)
    for k, i in enumerate(neg_positions):
        out[i] = pi.window[neg_positions[m - 1 - k]]
    return SignedPermutation(tuple(out))


def phi2(pi: SignedPermutation) -> BiTableau:
    """Two-row bi-tableau of an element of phi1(A^s_n).

    Labels of entries other than +-1 go to the first row of t2 (positive) or
    t1 (negative). The label of 1 (resp. -1) drops to the second row when n
    (resp. -n) has already appeared.
    """
    if not is_signed_arc(phi1(pi)):
        raise DomainError(f"{pi} is not the phi1-image of a signed arc permutation")
    n = pi.n
    rows = {1: ([], []), 2: ([], [])}
    seen: set[int] = set()
    for i, v in enumerate(pi.window, 1):
        side = 2 if v > 0 else 1
        second = abs(v) == 1 and n > 1 and (n if v > 0 else -n) in seen
        rows[side][1 if second else 0].append(i)
        seen.add(v)
    t1 = YoungTableau(tuple(tuple(r) for r in rows[1]))
    t2 = YoungTableau(tuple(tuple(r) for r in rows[2]))
    b = BiTableau(t1, t2)
    b.validate()
    return b
