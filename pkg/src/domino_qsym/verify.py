"""Exhaustive checks of the identities this package is built around.

Each check takes ``n`` and a mode and returns a :class:`Report`. A failing
report carries the first counterexample met in enumeration order.
"""

from __future__ import annotations

import itertools
import math
import time
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable

from .arc import (arc_descents_by_rule, arc_to_domino, classify, domino_to_arc,
                  enumerate_signed_arc, is_cyclic_interval, is_signed_arc,
                  is_signed_arc_by_patterns, phi1, phi2, satisfies_subsequence_law)
from .core import (DominoTableau, SignedPermutation, as_partition, cells, domino_shapes,
                   enumerate_partitions, enumerate_permutations, enumerate_semistandard_domino,
                   enumerate_signed_permutations, enumerate_standard_bitableaux,
                   enumerate_standard_domino, enumerate_standard_young, is_empty_two_core,
                   partition_count, quotient_to_shape, tilings, two_quotient)
from .correspondences import littlewood, littlewood_inverse, phi3
from .descents import des_a, des_b, des_r, des_r_bitableau, des_sdt, des_syt, neg_count, sdes, sdes_bitableau
from .qsym import (QPoly, chow_f, decompose_lambda_b, domino_function, exact_rank,
                   fundamental_f, g_in_sb, lr_coefficient, poirier_f, qsum, qsym_of_set,
                   schur, schur_decompose, type_b_schur)


@dataclass
class Report:
    identity: str
    n: int
    mode: str
    status: str
    elapsed: float
    witness: object = None
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        out = {"identity": self.identity, "n": self.n, "mode": self.mode,
               "status": self.status, "elapsed": round(self.elapsed, 4), "witness": self.witness}
        if self.details:
            out["details"] = self.details
        return out


class Failure(Exception):
    def __init__(self, witness):
        super().__init__(str(witness))
        self.witness = witness


def _expect(cond: bool, witness) -> None:
    if not cond:
        raise Failure(witness)


def _sorted_set(s) -> list[int]:
    return sorted(s)


# ---------------------------------------------------------------------------
# Shape families of the signed arc theorem
# ---------------------------------------------------------------------------

def sap_shapes(n: int) -> list[tuple[tuple[int, ...], int]]:
    """(shape, multiplicity) pairs on the domino side of the signed arc theorem."""
    out: list[tuple[tuple[int, ...], int]] = []
    fixed = [(2 * n,), (2 * n - 1, 1)]
    if n >= 2:
        fixed += [(2 * n - 2, 1, 1), (2 * n - 3, 1, 1, 1)]
    out += [(as_partition(s), 1) for s in fixed]
    for a in range(2 * n, -1, -1):
        if a >= 2 * n - a >= 2:
            out.append(((a, 2 * n - a), 2))
    for a in range(2 * n, -1, -1):
        b = 2 * n - a - 2
        if a >= b >= 2:
            out.append(((a, b, 2), 1))
            out.append(((a, b, 1, 1), 1))
    return out


def type_a_arc_shapes(n: int) -> list[tuple[tuple[int, ...], int]]:
    out = [((n,), 1), (tuple([1] * n), 1)]
    out += [((n - k,) + (1,) * k, 2) for k in range(1, n - 1)]
    out += [((n - k, 2) + (1,) * (k - 2), 1) for k in range(2, n - 1)]
    return out


def is_type_a_arc(word) -> bool:
    n = len(word)
    return all(is_cyclic_interval(set(word[:j]), n) for j in range(1, n + 1))


def is_left_unimodal(pi: SignedPermutation) -> bool:
    inv = pi.inverse().window
    n = pi.n
    for i in range(1, n + 1):
        down = all(inv[j] > inv[j + 1] for j in range(0, i - 1))
        up = all(inv[j] < inv[j + 1] for j in range(i - 1, n - 1))
        if down and up:
            return True
    return False


# ---------------------------------------------------------------------------
# Checks
# ---------------------------------------------------------------------------

def check_thm_sap(n: int, mode: str) -> dict:
    arcs = list(enumerate_signed_arc(n))
    families = sap_shapes(n)
    if mode == "multiset":
        lhs = Counter(frozenset(des_b(pi)) for pi in arcs)
        rhs: Counter = Counter()
        for shape, mult in families:
            for t in enumerate_standard_domino(shape):
                rhs[des_sdt(t)] += mult
        if lhs != rhs:
            diff = sorted((lhs - rhs) + (rhs - lhs), key=lambda d: (len(d), sorted(d)))
            raise Failure({"descent_set": _sorted_set(diff[0])})
        return {"lhs_size": len(arcs)}
    lhs_poly = qsym_of_set((des_b(pi) for pi in arcs), n, n)
    rhs_poly = qsum((domino_function(s, n).scale(m) for s, m in families), n + 1, n)
    _expect(lhs_poly == rhs_poly, {"difference_terms": len((lhs_poly - rhs_poly).terms)})
    return {"lhs_size": len(arcs)}


def check_gdx(n: int, mode: str) -> dict:
    for shape in domino_shapes(n):
        g = domino_function(shape, n)
        expansion = qsym_of_set((des_sdt(t) for t in enumerate_standard_domino(shape)), n, n)
        _expect(g == expansion, {"shape": list(shape)})
    return {"shapes": len(domino_shapes(n))}


def check_gss(n: int, mode: str) -> dict:
    for shape in domino_shapes(n):
        minus, plus = two_quotient(shape)
        rhs = schur(minus, n) * schur(plus, n, include_x0=True)
        _expect(domino_function(shape, n) == rhs, {"shape": list(shape)})
    return {"shapes": len(domino_shapes(n))}


def check_sdecomp(n: int, mode: str) -> dict:
    count = 0
    for shape in enumerate_partitions(n):
        lhs = schur(shape, n, include_x0=True)
        rhs = qsum((fundamental_f(des_syt(t), n, n, include_x0=True)
                    for t in enumerate_standard_young(shape)), n + 1, n)
        _expect(lhs == rhs, {"shape": list(shape)})
        count += 1
    return {"shapes": count}


def check_type_a_arc(n: int, mode: str) -> dict:
    arcs = [w for w in enumerate_permutations(n) if is_type_a_arc(w)]
    shapes = type_a_arc_shapes(n)
    if mode == "multiset":
        lhs = Counter(des_a(w) for w in arcs)
        rhs: Counter = Counter()
        for shape, mult in shapes:
            for t in enumerate_standard_young(shape):
                rhs[des_syt(t)] += mult
        if lhs != rhs:
            diff = sorted((lhs - rhs) + (rhs - lhs), key=lambda d: (len(d), sorted(d)))
            raise Failure({"descent_set": _sorted_set(diff[0])})
    else:
        lhs_poly = qsum((fundamental_f(des_a(w), n, n) for w in arcs), n + 1, n)
        rhs_poly = qsum((schur(s, n).scale(m) for s, m in shapes), n + 1, n)
        _expect(lhs_poly == rhs_poly, {"difference_terms": len((lhs_poly - rhs_poly).terms)})
    return {"arc_permutations": len(arcs)}


def check_chow_poirier(n: int, mode: str) -> dict:
    for pi in enumerate_signed_permutations(n):
        _expect(chow_f(des_r(pi), n, n) == poirier_f(sdes(pi), n), {"perm": str(pi)})
    return {"perms": 2 ** n * math.factorial(n)}


def check_w1(n: int, mode: str) -> dict:
    for pi in enumerate_signed_permutations(n):
        f = phi1(pi)
        _expect(phi1(f) == pi and des_b(pi) == des_r(f) and des_r(pi) == des_b(f), {"perm": str(pi)})
    return {"perms": 2 ** n * math.factorial(n)}


def check_w2(n: int, mode: str) -> dict:
    by_type: dict[str, list] = {}
    quotient_shapes: dict[str, Counter] = {}
    for sigma in enumerate_signed_arc(n):
        f = phi1(sigma)
        b = phi2(f)
        _expect(des_r_bitableau(b) == des_r(f) and sdes_bitableau(b) == sdes(f),
                {"perm": str(sigma)})
        kind = classify(sigma).arc_type
        by_type.setdefault(kind, []).append(b)
        quotient_shapes.setdefault(kind, Counter())[two_quotient(arc_to_domino(sigma).shape)] += 1
    for kind, images in sorted(by_type.items()):
        _expect(len(set(images)) == len(images), {"type": kind, "reason": "phi2 not injective"})
        shapes = Counter(b.shape for b in images)
        _expect(shapes == quotient_shapes[kind], {"type": kind, "reason": "bi-shape multiset"})
        full = {bt for minus, plus in shapes for bt in enumerate_standard_bitableaux(minus, plus)}
        _expect(full == set(images), {"type": kind, "reason": "image is not all of SBT"})
    return {"types": sorted(by_type)}


def check_w3(n: int, mode: str) -> dict:
    for shape in domino_shapes(n):
        minus, plus = two_quotient(shape)
        left = Counter(des_r_bitableau(b) for b in enumerate_standard_bitableaux(minus, plus))
        right = Counter(des_sdt(t) for t in enumerate_standard_domino(shape))
        _expect(left == right, {"shape": list(shape)})
    for sigma in enumerate_signed_arc(n):
        f = phi1(sigma)
        b = phi2(f)
        t = phi3(b)
        _expect(des_b(sigma) == des_r(f) == des_r_bitableau(b) == des_sdt(t), {"perm": str(sigma)})
    return {"shapes": len(domino_shapes(n))}


def _sdt_by_shape(n: int) -> dict[tuple[int, ...], list[DominoTableau]]:
    return {s: list(enumerate_standard_domino(s)) for s in domino_shapes(n)}


def check_bv(n: int, mode: str) -> dict:
    sdt = _sdt_by_shape(n)
    total = sum(len(ts) ** 2 for ts in sdt.values())
    _expect(total == 2 ** n * math.factorial(n), {"sum_of_squares": total})
    lhs = Counter((des_b(pi.inverse()), des_b(pi), neg_count(pi))
                  for pi in enumerate_signed_permutations(n))
    rhs: Counter = Counter()
    for ts in sdt.values():
        for p in ts:
            for q in ts:
                v = p.vertical_count() + q.vertical_count()
                _expect(v % 2 == 0, {"P": p.to_json(), "Q": q.to_json()})
                rhs[(des_sdt(p), des_sdt(q), v // 2)] += 1
    if lhs != rhs:
        bad = min((lhs - rhs) + (rhs - lhs), key=lambda k: (sorted(k[0]), sorted(k[1]), k[2]))
        raise Failure({"des_inverse": sorted(bad[0]), "des": sorted(bad[1]), "neg": bad[2]})
    return {"sum_of_squares": total}


def _descent_subsets(n: int):
    for r in range(n + 1):
        for combo in itertools.combinations(range(n), r):
            yield frozenset(combo)


def check_idc(n: int, mode: str) -> dict:
    perms = list(enumerate_signed_permutations(n))
    sdt = _sdt_by_shape(n)
    classes: dict[frozenset, list] = {}
    for pi in perms:
        classes.setdefault(des_b(pi.inverse()), []).append(des_b(pi))
    for j in _descent_subsets(n):
        members = classes.get(j, [])
        weights = {s: sum(1 for p in ts if des_sdt(p) == j) for s, ts in sdt.items()}
        if mode == "multiset":
            rhs: Counter = Counter()
            for s, w in weights.items():
                for q in sdt[s]:
                    rhs[des_sdt(q)] += w
            _expect(Counter(members) == rhs, {"J": sorted(j)})
        else:
            lhs_poly = qsym_of_set(members, n, n)
            rhs_poly = qsum((domino_function(s, n).scale(w) for s, w in weights.items() if w), n + 1, n)
            _expect(lhs_poly == rhs_poly, {"J": sorted(j)})
    return {"classes": 2 ** n}


def left_unimodal_classes(n: int) -> list[frozenset[int]]:
    out = []
    for j in range(n):
        base = frozenset(range(1, j + 1))
        out += [base, base | {0}]
    return out


def check_left_unimodal(n: int, mode: str) -> dict:
    members = [pi for pi in enumerate_signed_permutations(n) if is_left_unimodal(pi)]
    allowed = set(left_unimodal_classes(n))
    by_class = [pi for pi in enumerate_signed_permutations(n) if des_b(pi.inverse()) in allowed]
    _expect(set(members) == set(by_class), {"reason": "not a union of inverse descent classes"})
    q = qsym_of_set((des_b(pi) for pi in members), n, n)
    expansion = decompose_lambda_b(q, n)
    _expect(expansion.is_nonnegative(), {"coefficients": expansion.to_json()["coefficients"]})
    _expect(expansion.to_poly(n) == q, {"reason": "expansion does not resum"})
    return {"size": len(members), "sB": expansion.to_json()["coefficients"]}


def check_gas(n: int, mode: str) -> dict:
    for shape in domino_shapes(n):
        expansion = g_in_sb(shape)
        _expect(expansion.is_nonnegative(), {"shape": list(shape)})
        _expect(expansion.to_poly(n) == domino_function(shape, n), {"shape": list(shape)})
        _expect(decompose_lambda_b(domino_function(shape, n), n) == expansion, {"shape": list(shape)})
    return {"shapes": len(domino_shapes(n))}


def check_lr_rule(n: int, mode: str) -> dict:
    """LR rule against Schur-basis elimination of s_alpha * s_nu for |alpha| + |nu| = n."""
    pairs = 0
    for a in range(n + 1):
        for alpha in enumerate_partitions(a):
            for nu in enumerate_partitions(n - a):
                product = schur(alpha, n) * schur(nu, n)
                oracle = schur_decompose(product)
                for rho in enumerate_partitions(n):
                    _expect(lr_coefficient(rho, alpha, nu) == oracle.get(rho, 0),
                            {"rho": list(rho), "alpha": list(alpha), "nu": list(nu)})
                pairs += 1
    return {"pairs": pairs}


def check_dim_b(n: int, mode: str) -> dict:
    rhos = [rho for i in range(n + 1) for rho in enumerate_partitions(i)]
    expected = sum(partition_count(i) for i in range(n + 1))
    rank = exact_rank([type_b_schur(rho, n, n) for rho in rhos])
    _expect(rank == expected == len(rhos), {"rank": rank, "expected": expected})
    sub = [quotient_to_shape(minus, (k,)) for k in range(n + 1) for minus in enumerate_partitions(n - k)]
    sub_rank = exact_rank([domino_function(s, n) for s in sub])
    _expect(sub_rank == expected, {"subfamily_rank": sub_rank, "expected": expected})
    if n >= 2:
        _expect(len(domino_shapes(n)) > expected, {"p0": len(domino_shapes(n)), "dim": expected})
    return {"rank": rank, "subfamily_rank": sub_rank, "p0": len(domino_shapes(n))}


def check_p0_count(n: int, mode: str) -> dict:
    count = len(domino_shapes(n))
    expected = sum(partition_count(i) * partition_count(n - i) for i in range(n + 1))
    _expect(count == expected, {"count": count, "expected": expected})
    for shape in enumerate_partitions(n, even_size=True):
        tileable = next(tilings(set(cells(shape))), None) is not None
        _expect(tileable == is_empty_two_core(shape), {"shape": list(shape)})
    return {"count": count}


def check_arc_defs(n: int, mode: str) -> dict:
    arcs = set()
    for pi in enumerate_signed_permutations(n):
        a = is_signed_arc(pi)
        _expect(a == is_signed_arc_by_patterns(pi), {"perm": str(pi)})
        if a:
            arcs.add(pi)
            _expect(des_b(pi) == arc_descents_by_rule(pi), {"perm": str(pi), "reason": "descent rule"})
            _expect(satisfies_subsequence_law(pi), {"perm": str(pi), "reason": "subsequence law"})
    generated = list(enumerate_signed_arc(n))
    _expect(len(generated) == len(set(generated)) and set(generated) == arcs,
            {"reason": "generator disagrees with the definition"})
    _expect(len(arcs) == n * 2 ** n, {"count": len(arcs)})
    # every pair of subsequences obeying the law shuffles into arc permutations only
    shuffles = set()
    for pi in enumerate_signed_permutations(n):
        if satisfies_subsequence_law(pi):
            shuffles.add(pi)
    _expect(shuffles == arcs, {"reason": "shuffle description differs"})
    return {"count": len(arcs)}


def check_arc_bij(n: int, mode: str) -> dict:
    images: dict[str, list[DominoTableau]] = {}
    for pi in enumerate_signed_arc(n):
        c = classify(pi)
        t = arc_to_domino(pi)
        _expect(des_sdt(t) == des_b(pi), {"perm": str(pi), "reason": "descents"})
        which = c.arc_type if c.arc_type in ("T5", "T6") else None
        _expect(domino_to_arc(t, which) == pi, {"perm": str(pi), "reason": "round trip"})
        images.setdefault(c.arc_type, []).append(t)
    for kind, family in _type_families(n).items():
        got = images.get(kind, [])
        target = {t for s in family for t in enumerate_standard_domino(s)}
        _expect(len(set(got)) == len(got) == len(target) and set(got) == target,
                {"type": kind, "reason": "image is not the full shape family"})
    return {"per_type": {k: len(v) for k, v in sorted(images.items())}}


def _type_families(n: int) -> dict[str, list[tuple[int, ...]]]:
    fam: dict[str, list[tuple[int, ...]]] = {k: [] for k in ("T1", "T2", "T3", "T4", "T5", "T6")}
    fam["T1"].append((2 * n,))
    fam["T2"].append(as_partition((2 * n - 1, 1)))
    if n >= 2:
        fam["T1"].append((2 * n - 2, 1, 1))
        fam["T2"].append(as_partition((2 * n - 3, 1, 1, 1)))
    for shape, mult in sap_shapes(n):
        if len(shape) == 2 and shape[1] >= 2:
            fam["T5"].append(shape)
            fam["T6"].append(shape)
        elif len(shape) == 3 and shape[1] >= 2:
            fam["T3"].append(shape)
        elif len(shape) == 4 and shape[1] >= 2:
            fam["T4"].append(shape)
    return fam


def check_littlewood(n: int, mode: str, max_label: int = 4) -> dict:
    count = 0
    for shape in domino_shapes(n):
        quotient = two_quotient(shape)
        for t in enumerate_semistandard_domino(shape, max_label):
            b = littlewood(t)
            b.validate()
            _expect(b.shape == quotient and b.weight() == t.weight(), {"tableau": t.to_json()})
            _expect(littlewood_inverse(b) == t, {"tableau": t.to_json(), "reason": "round trip"})
            count += 1
        for t in enumerate_standard_domino(shape):
            _expect(littlewood_inverse(littlewood(t)) == t, {"tableau": t.to_json()})
    return {"semistandard_tableaux": count}


@dataclass(frozen=True)
class Identity:
    check: Callable[[int, str], dict]
    min_n: int
    max_n: int
    modes: tuple[str, ...] = ("multiset",)
    polynomial_max_n: int | None = None


IDENTITIES: dict[str, Identity] = {
    "thm-sap": Identity(check_thm_sap, 1, 7, ("multiset", "polynomial"), 4),
    "gdx": Identity(check_gdx, 1, 4, ("polynomial",)),
    "gss": Identity(check_gss, 1, 5, ("polynomial",)),
    "sdecomp": Identity(check_sdecomp, 1, 6, ("polynomial",)),
    "chow-poirier": Identity(check_chow_poirier, 1, 4, ("polynomial",)),
    "w1": Identity(check_w1, 1, 6),
    "w2": Identity(check_w2, 1, 6),
    "w3": Identity(check_w3, 1, 5),
    "bv-descents": Identity(check_bv, 1, 5),
    "idc": Identity(check_idc, 1, 4, ("multiset", "polynomial")),
    "left-unimodal": Identity(check_left_unimodal, 1, 4, ("polynomial",)),
    "gas": Identity(check_gas, 1, 4, ("polynomial",)),
    "dim-b": Identity(check_dim_b, 1, 5, ("polynomial",)),
    "p0-count": Identity(check_p0_count, 0, 8),
    "arc-defs": Identity(check_arc_defs, 1, 6),
    "type-a-arc": Identity(check_type_a_arc, 2, 6, ("multiset", "polynomial")),
    "arc-bij": Identity(check_arc_bij, 1, 7),
    "littlewood": Identity(check_littlewood, 1, 4),
    "lr-rule": Identity(check_lr_rule, 0, 6, ("polynomial",)),
}


class BoundError(ValueError):
    pass


def resolve_mode(tag: str, mode: str | None) -> str:
    ident = IDENTITIES[tag]
    if mode is None:
        return ident.modes[0]
    # single-mode identities are exact polynomial or structural checks; either flag runs them
    return mode if mode in ident.modes else ident.modes[0]


def check_bounds(tag: str, n: int, mode: str, force: bool = False) -> None:
    if tag not in IDENTITIES:
        raise BoundError(f"unknown identity {tag!r}")
    ident = IDENTITIES[tag]
    limit = ident.polynomial_max_n if mode == "polynomial" and ident.polynomial_max_n else ident.max_n
    if n < ident.min_n:
        raise BoundError(f"{tag} needs n >= {ident.min_n}")
    if n > limit and not force:
        raise BoundError(f"{tag} in {mode} mode is bounded to n <= {limit}; pass --force to override")


def run(tag: str, n: int, mode: str | None = None, force: bool = False) -> Report:
    mode = resolve_mode(tag, mode)
    check_bounds(tag, n, mode, force)
    start = time.perf_counter()
    try:
        details = IDENTITIES[tag].check(n, mode)
        status, witness = "pass", None
    except Failure as f:
        details, status, witness = {}, "fail", f.witness
    return Report(tag, n, mode, status, time.perf_counter() - start, witness, details)


def _run_args(args: tuple) -> dict:
    return run(*args).to_json()


def run_many(tasks: list[tuple[str, int, str | None, bool]], jobs: int = 1) -> list[dict]:
    """Run checks, in parallel when ``jobs`` > 1; results keep the task order."""
    if jobs <= 1 or len(tasks) <= 1:
        return [_run_args(t) for t in tasks]
    from concurrent.futures import ProcessPoolExecutor

    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_run_args, tasks))
