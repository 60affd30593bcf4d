"""Exit criteria.  Each test records one PASS/FAIL line, printed in the
terminal summary under "acceptance criteria"."""

import random
import time

import numpy as np
import pytest

from family_values import PAPER_VALUES
from groupdet.determinant import (
    GroupRingElement,
    det_via_reduction,
    factor_profile,
    group_determinant,
    random_elements,
)
from groupdet.eisenstein import Eisenstein
from groupdet.groups import get_group
from groupdet.search import (
    ALL_CHECKS,
    LEMMAS,
    MEMBERSHIP,
    ORACLE,
    SUBGROUPS,
    SearchConfig,
    run_search,
)
from groupdet.spectrum import FAMILIES, achieve, classify, in_d6_spectrum, in_z3xz3_spectrum

ORDER18 = ("g18-4", "z3xd6")
THREE_EXP = {"g18-4": 9, "z3xd6": 6}
SEED = 18


def theorem_member(D, group):
    """Set description of the theorems, by residues and valuations only."""
    e = THREE_EXP[group]
    if D == 0:
        return True
    n, a = D, 0
    while n % 2 == 0:
        n, a = n // 2, a + 1
    b = 0
    while n % 3 == 0:
        n, b = n // 3, b + 1
    if a == 0 and b == 0:
        return D % 18 in (1, 17)
    if b == 0:
        return a >= 2 and (D // 4) % 9 in (2, 7)
    return b >= e and (a == 0 or a >= 2)


@pytest.fixture(scope="module")
def three_way():
    t0 = time.perf_counter()
    rng = np.random.default_rng(SEED)
    out = {}
    for group in ORDER18:
        rows = []
        for F in random_elements(get_group(group), -3, 3, 1000, rng):
            rows.append((group_determinant(F), factor_profile(F).product, det_via_reduction(F)))
        out[group] = rows
    return out, time.perf_counter() - t0


@pytest.fixture(scope="module")
def sweep_random():
    t0 = time.perf_counter()
    reports = {
        group: run_search(SearchConfig(group, -2, 2, samples=10**5, seed=SEED,
                                       checks=frozenset({MEMBERSHIP, SUBGROUPS, LEMMAS})))
        for group in ORDER18
    }
    return reports, time.perf_counter() - t0


def supports(n_choices=20, size=10):
    rnd = random.Random(SEED)
    chosen = [tuple(range(10)), tuple(range(8, 18))]
    while len(chosen) < n_choices:
        s = tuple(sorted(rnd.sample(range(18), size)))
        if s not in chosen:
            chosen.append(s)
    return chosen


@pytest.fixture(scope="module")
def sweep_exhaustive():
    t0 = time.perf_counter()
    reports = {}
    for group in ORDER18:
        for support in supports():
            cfg = SearchConfig(group, 0, 1, support=support, mode="exhaustive",
                               checks=frozenset({MEMBERSHIP, SUBGROUPS, LEMMAS}))
            reports[group, support] = run_search(cfg)
    return reports, time.perf_counter() - t0


def test_1_family_round_trips(criterion):
    t0 = time.perf_counter()
    bad = []
    count = 0
    for group in ORDER18:
        assert len(FAMILIES[group]) == 10
        for fid, value in PAPER_VALUES[group].items():
            for m in range(-10, 11):
                count += 1
                got = det_via_reduction(FAMILIES[group][fid].element(m))
                if got != value(m):
                    bad.append((group, fid, m, got, value(m)))
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 5
    criterion("1 family round-trips", ok, f"{count} instances, {len(bad)} mismatches, {elapsed:.2f}s < 5s")
    assert not bad
    assert elapsed < 5


def test_2_three_way_agreement(criterion, three_way):
    results, elapsed = three_way
    bad = sum(1 for rows in results.values() for a, b, c in rows if not a == b == c)
    n = sum(len(rows) for rows in results.values())
    ok = bad == 0 and n == 2000 and elapsed < 30
    criterion("2 three-way determinant agreement", ok, f"{n} elements, {bad} disagreements, {elapsed:.1f}s < 30s")
    assert bad == 0 and n == 2000
    assert elapsed < 30


def test_3_membership_sweep(criterion, sweep_random):
    reports, elapsed = sweep_random
    total = sum(r.total for r in reports.values())
    violations = sum(r.violation_count for r in reports.values())
    ok = violations == 0 and total == 2 * 10**5 and elapsed < 120
    criterion("3 theorem-membership sweep + congruence lemmas", ok,
              f"{total} elements, {violations} violations, {elapsed:.1f}s < 120s")
    for group, r in reports.items():
        assert r.ok, (group, r.violations[:5])
        assert r.class_counts["NotMember"] == 0
    assert total == 2 * 10**5
    assert elapsed < 120


def test_4_exhaustive_small_sweep(criterion, sweep_exhaustive):
    reports, elapsed = sweep_exhaustive
    per_group = {g: sum(1 for (grp, _) in reports if grp == g) for g in ORDER18}
    total = sum(r.total for r in reports.values())
    violations = sum(r.violation_count for r in reports.values())
    ok = violations == 0 and all(n >= 20 for n in per_group.values()) and elapsed < 60
    criterion("4 exhaustive {0,1} sweep on 10-position supports", ok,
              f"{per_group} supports, {total} elements, {violations} violations, {elapsed:.1f}s < 60s")
    assert all(r.total == 2**10 for r in reports.values())
    assert violations == 0
    assert all(n >= 20 for n in per_group.values())
    assert elapsed < 60


def test_5_subgroup_containment(criterion, three_way, sweep_random, sweep_exhaustive):
    bad = 0
    checked = 0
    for rows in three_way[0].values():
        for D, _, _ in rows:
            checked += 1
            bad += not (in_z3xz3_spectrum(D) and in_d6_spectrum(D))
    # the sweeps ran with the subgroup predicates switched on
    for report in list(sweep_random[0].values()) + list(sweep_exhaustive[0].values()):
        checked += report.total
        bad += sum(1 for _, _, p in report.violations if p.startswith("subgroup"))
        assert not any(p.startswith("subgroup") for _, _, p in report.violations)
    criterion("5 subgroup containment in S(Z3xZ3) and S(D6)", bad == 0, f"{checked} determinants, {bad} violations")
    assert bad == 0


def test_6_classify_achieve_totality(criterion):
    t0 = time.perf_counter()
    mismatches = failures = members = 0
    for group in ORDER18:
        for D in range(-10**4, 10**4 + 1):
            member = classify(D, group).member
            if member != theorem_member(D, group):
                mismatches += 1
            if member:
                members += 1
                if det_via_reduction(achieve(D, group, verify=False)) != D:
                    failures += 1
    elapsed = time.perf_counter() - t0
    ok = mismatches == 0 and failures == 0 and elapsed < 60
    criterion("6 classify/achieve totality for |D| <= 10^4", ok,
              f"{members} witnesses, {mismatches} mismatches, {failures} failed witnesses, {elapsed:.1f}s < 60s")
    assert mismatches == 0 and failures == 0
    assert elapsed < 60


def test_7_algebraic_properties(criterion):
    t0 = time.perf_counter()
    rng = np.random.default_rng(SEED + 7)
    bad_mult = bad_anti = 0
    for group in ("g18-4", "z3xd6", "d18"):
        G = get_group(group)
        elems = list(random_elements(G, -2, 2, 1000, rng))
        for F1, F2 in zip(elems[::2], elems[1::2]):
            if det_via_reduction(F1 * F2) != det_via_reduction(F1) * det_via_reduction(F2):
                bad_mult += 1
        for F in elems[:500]:
            if det_via_reduction(F.antipode()) != det_via_reduction(F):
                bad_anti += 1
    bad_norm = 0
    for a, b, c, d in rng.integers(-10**6, 10**6, size=(10**4, 4)).tolist():
        x, y = Eisenstein(a, b), Eisenstein(c, d)
        if (x * y).norm() != x.norm() * y.norm():
            bad_norm += 1
    elapsed = time.perf_counter() - t0
    ok = bad_mult == bad_anti == bad_norm == 0 and elapsed < 30
    criterion("7 multiplicativity, antipode, Eisenstein norm", ok,
              f"{bad_mult}/{bad_anti}/{bad_norm} failures, {elapsed:.1f}s < 30s")
    assert bad_mult == bad_anti == bad_norm == 0
    assert elapsed < 30


def test_8_d18_generic_paths(criterion):
    t0 = time.perf_counter()
    report = run_search(SearchConfig("d18", -2, 2, samples=10**4, seed=SEED,
                                     checks=frozenset({MEMBERSHIP, ORACLE})))
    elapsed = time.perf_counter() - t0
    ok = report.ok and report.total == 10**4 and elapsed < 60
    criterion("8 D18 oracle/reduction agreement and S(D18) membership", ok,
              f"{report.total} elements, {report.violation_count} violations, {elapsed:.1f}s < 60s")
    assert report.ok, report.violations[:5]
    assert report.total == 10**4
    assert elapsed < 60
