"""Robinson-Schensted, its signed (bi-tableau) version, the sign-coloring map
from domino tableaux to bi-tableaux, and the descent-matching table between
standard bi-tableaux and standard domino tableaux."""

from __future__ import annotations

import json
from collections import defaultdict
from functools import lru_cache
from typing import Sequence

from .core import (BiTableau, DomainError, Domino, DominoTableau, SignedPermutation,
                   YoungTableau, cells, enumerate_standard_bitableaux,
                   enumerate_standard_domino, quotient_to_shape, tilings, two_quotient)
from .descents import des_r_bitableau, des_sdt


class LemmaViolation(RuntimeError):
    """A counting identity that should hold by theory failed on concrete data."""


def rs_insert(word: Sequence[int], positions: Sequence[int] | None = None
              ) -> tuple[YoungTableau, YoungTableau]:
    """Row-insertion RS. ``positions`` replaces 1..len(word) as recording labels."""
    if len(set(word)) != len(word):
        raise DomainError("RS insertion needs distinct entries")
    if positions is None:
        positions = range(1, len(word) + 1)
    p_rows: list[list[int]] = []
    q_rows: list[list[int]] = []
    for x, pos in zip(word, positions):
        r = 0
        while True:
            if r == len(p_rows):
                p_rows.append([x])
                q_rows.append([pos])
                break
            row = p_rows[r]
            bump = next((k for k, y in enumerate(row) if y > x), None)
            if bump is None:
                row.append(x)
                q_rows[r].append(pos)
                break
            row[bump], x = x, row[bump]
            r += 1
    to_t = lambda rows: YoungTableau(tuple(tuple(row) for row in rows))
    return to_t(p_rows), to_t(q_rows)


def bi_rs(pi: SignedPermutation) -> tuple[BiTableau, BiTableau]:
    """RS applied separately to the negative and positive subsequences.

    Returns ((P1, P2), (Q1, Q2)): P holds absolute values, Q holds positions.
    """
    neg = [(i, -v) for i, v in enumerate(pi.window, 1) if v < 0]
    pos = [(i, v) for i, v in enumerate(pi.window, 1) if v > 0]
    p1, q1 = rs_insert([v for _, v in neg], [i for i, _ in neg])
    p2, q2 = rs_insert([v for _, v in pos], [i for i, _ in pos])
    return BiTableau(p1, p2), BiTableau(q1, q2)


def _assemble(placed: dict[tuple[int, int], int]) -> YoungTableau:
    if not placed:
        return YoungTableau(())
    nrows = max(r for r, _ in placed)
    rows = []
    for r in range(1, nrows + 1):
        length = max((c for rr, c in placed if rr == r), default=0)
        rows.append(tuple(placed[(r, c)] for c in range(1, length + 1)))
    return YoungTableau(tuple(rows))


def littlewood(t: DominoTableau) -> BiTableau:
    """Sign-coloring map: cell (r, c) is '-' iff r + c is even.

    A domino goes to the minus side iff its top-right cell is '-'. Dominoes of
    one side whose top-right cells lie on the same diagonal fill the matching
    diagonal of the quotient tableau, top to bottom.
    """
    groups: dict[tuple[int, int], list[Domino]] = defaultdict(list)
    for d in t.dominoes:
        r, c = d.top_right
        side = 1 if (r + c) % 2 == 0 else 2
        groups[(side, (c - r) // 2)].append(d)
    placed: tuple[dict, dict] = ({}, {})
    for (side, e), dominoes in groups.items():
        for k, d in enumerate(sorted(dominoes, key=lambda d: d.row), 1):
            cell = (k, k + e) if e >= 0 else (k - e, k)
            placed[side - 1][cell] = d.label
    try:
        return BiTableau(_assemble(placed[0]), _assemble(placed[1]), standard=t.standard)
    except (KeyError, DomainError) as exc:
        raise DomainError(f"sign-coloring image is not a bi-tableau: {exc}") from None


def _restrict(t: YoungTableau, v: int) -> YoungTableau:
    return YoungTableau(tuple(tuple(x for x in row if x <= v) for row in t.rows))


def littlewood_inverse(b: BiTableau) -> DominoTableau:
    """Inverse of :func:`littlewood`, grown one label value at a time.

    For each label v the cells added to the domino shape are determined by the
    2-quotient of the entries <= v; among the tilings of those cells exactly
    one reproduces the bi-tableau under the forward map.
    """
    b.validate()
    labels = sorted(set(b.t1.entries()) | set(b.t2.entries()))
    dominoes: list[Domino] = []
    shape: tuple[int, ...] = ()
    for v in labels:
        sub = BiTableau(_restrict(b.t1, v), _restrict(b.t2, v), standard=b.standard)
        new_shape = quotient_to_shape(sub.t1.shape, sub.t2.shape)
        region = set(cells(new_shape)) - set(cells(shape))
        if len(region) != 2 * (sub.n - len(dominoes)) or not set(cells(shape)) <= set(cells(new_shape)):
            raise DomainError(f"no valid domino placement for label {v}")
        matches = []
        for tiling in tilings(region):
            candidate = dominoes + [Domino(r, c, o, v) for o, r, c in tiling]
            t = DominoTableau(tuple(candidate), standard=b.standard)
            try:
                t.validate()
            except DomainError:
                continue
            if littlewood(t) == sub:
                matches.append(candidate)
        if len(matches) != 1:
            raise DomainError(f"{len(matches)} valid domino placements for label {v}; expected 1")
        dominoes = matches[0]
        shape = new_shape
    return DominoTableau(tuple(dominoes), standard=b.standard)


def _canon(obj) -> str:
    return json.dumps(obj.to_json(), sort_keys=True)


def phi3_table(shape: Sequence[int]) -> list[tuple[BiTableau, DominoTableau, frozenset[int]]]:
    """Descent-preserving matching SBT(minus, plus) <-> SDT(shape).

    Both sides are grouped by descent set and paired in sorted serialized
    order inside each group.
    """
    return list(_phi3_table(tuple(shape)))


@lru_cache(maxsize=None)
def _phi3_table(shape: tuple[int, ...]) -> tuple:
    minus, plus = two_quotient(shape)
    bi_groups: dict[frozenset, list[BiTableau]] = defaultdict(list)
    dom_groups: dict[frozenset, list[DominoTableau]] = defaultdict(list)
    for b in enumerate_standard_bitableaux(minus, plus):
        bi_groups[des_r_bitableau(b)].append(b)
    for t in enumerate_standard_domino(shape):
        dom_groups[des_sdt(t)].append(t)
    table = []
    for des in sorted(set(bi_groups) | set(dom_groups), key=sorted):
        left = sorted(bi_groups.get(des, []), key=_canon)
        right = sorted(dom_groups.get(des, []), key=_canon)
        if len(left) != len(right):
            raise LemmaViolation(f"lemma violation at shape {shape}, descent set {sorted(des)}: "
                                 f"{len(left)} bi-tableaux vs {len(right)} domino tableaux")
        table.extend((b, t, des) for b, t in zip(left, right))
    return tuple(table)


def phi3(b: BiTableau) -> DominoTableau:
    shape = quotient_to_shape(b.t1.shape, b.t2.shape)
    for bi, t, _ in _phi3_table(shape):
        if bi == b:
            return t
    raise DomainError("bi-tableau is not standard")
