"""Small-scale invariant checks run by ``groupdet selftest``."""

from __future__ import annotations

import itertools

import numpy as np

from .determinant import (
    GroupRingElement,
    det_via_reduction,
    factor_profile,
    group_determinant,
    random_elements,
)
from .eisenstein import ONE, OMEGA, Eisenstein
from .groups import GROUP_NAMES, get_group
from .search import ALL_CHECKS, SearchConfig, run_search
from .spectrum import FAMILIES, achieve, classify

SEED = 20260101


def check_group_axioms() -> bool:
    for name in GROUP_NAMES:
        G = get_group(name)
        n = G.order
        mult = G.mult
        for a, b, c in itertools.product(range(n), repeat=3):
            if mult[mult[a][b]][c] != mult[a][mult[b][c]]:
                return False
        if any(mult[g][G.inv[g]] != 0 for g in range(n)):
            return False
        if any(sorted(row) != list(range(n)) for row in mult):
            return False
    return True


def check_eisenstein() -> bool:
    rng = np.random.default_rng(SEED)
    if OMEGA**3 != ONE or ONE + OMEGA + OMEGA * OMEGA != Eisenstein(0, 0):
        return False
    for a, b, c, d in rng.integers(-1000, 1001, size=(500, 4)).tolist():
        x, y = Eisenstein(a, b), Eisenstein(c, d)
        if (x * y).norm() != x.norm() * y.norm() or (x * x.conj()).b != 0:
            return False
    return True


def check_family_round_trips() -> bool:
    for fams in FAMILIES.values():
        for fam in fams.values():
            for m in range(-3, 4):
                if det_via_reduction(fam.element(m)) != fam.value(m):
                    return False
    return True


def check_three_way_agreement() -> bool:
    rng = np.random.default_rng(SEED)
    for name in ("g18-4", "z3xd6"):
        for F in random_elements(get_group(name), -3, 3, 100, rng):
            d = group_determinant(F)
            if d != det_via_reduction(F) or d != factor_profile(F).product:
                return False
    return True


def check_ring_properties() -> bool:
    rng = np.random.default_rng(SEED)
    for name in GROUP_NAMES:
        G = get_group(name)
        elems = list(random_elements(G, -2, 2, 40, rng))
        for F1, F2 in zip(elems[::2], elems[1::2]):
            if det_via_reduction(F1 * F2) != det_via_reduction(F1) * det_via_reduction(F2):
                return False
            if det_via_reduction(F1.antipode()) != det_via_reduction(F1):
                return False
            if name != "d18" and det_via_reduction(F1.swap()) != -det_via_reduction(F1):
                return False
    return True


def check_achieve_small() -> bool:
    for name in ("g18-4", "z3xd6"):
        for D in range(-500, 501):
            if classify(D, name).member:
                achieve(D, name)
    return True


def check_search() -> bool:
    for name in GROUP_NAMES:
        cfg = SearchConfig(name, -2, 2, samples=500, seed=SEED, checks=ALL_CHECKS)
        if not run_search(cfg).ok:
            return False
    cfg = SearchConfig("g18-4", 0, 1, support=tuple(range(9)), mode="exhaustive", checks=ALL_CHECKS)
    return run_search(cfg).ok


def check_identity() -> bool:
    return all(
        group_determinant(GroupRingElement.identity(name)) == 1 for name in GROUP_NAMES
    )


CHECKS = [
    ("group axioms", check_group_axioms),
    ("identity determinant", check_identity),
    ("eisenstein arithmetic", check_eisenstein),
    ("family round trips m in [-3,3]", check_family_round_trips),
    ("three-way agreement on 200 elements", check_three_way_agreement),
    ("multiplicativity, antipode, swap", check_ring_properties),
    ("achieve for |D| <= 500", check_achieve_small),
    ("search with all predicates", check_search),
]


def run_selftest() -> list[tuple[str, bool]]:
    results = []
    for name, check in CHECKS:
        try:
            ok = bool(check())
        except Exception:
            ok = False
        results.append((name, ok))
    return results
