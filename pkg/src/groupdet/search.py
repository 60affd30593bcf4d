"""Enumerate or sample group-ring elements and check every determinant.

Work is cut into tasks whose boundaries depend only on the config, never on
the number of workers, and partial reports merge associatively, so a report
is a deterministic function of its config.

* exhaustive: one task per assignment of the first ``split`` support positions.
* random: task i draws ``min(chunk, remaining)`` rows from
  ``numpy.random.default_rng([seed, i])``.
"""

from __future__ import annotations

import itertools
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Iterator

import numpy as np

from .determinant import (
    GroupRingElement,
    det_via_reduction,
    factor_profile,
    group_determinant,
)
from .groups import get_group
from .spectrum import (
    CLASSES,
    NOT_MEMBER,
    THREE_EXPONENT,
    classify,
    in_d6_spectrum,
    in_z3xz3_spectrum,
)

DEFAULT_BUDGET = 10**8
MAX_STORED_VIOLATIONS = 100
RANDOM_CHUNK = 4096

MEMBERSHIP = "membership"
SUBGROUPS = "subgroups"
LEMMAS = "lemmas"
ORACLE = "oracle"
ALL_CHECKS = frozenset({MEMBERSHIP, SUBGROUPS, LEMMAS, ORACLE})


class BudgetExceeded(ValueError):
    pass


@dataclass(frozen=True)
class SearchConfig:
    group: str
    lo: int = -1
    hi: int = 1
    support: tuple[int, ...] | None = None  # None means every position
    mode: str = "random"
    samples: int = 1000
    seed: int = 0
    budget: int = DEFAULT_BUDGET
    checks: frozenset = frozenset({MEMBERSHIP, SUBGROUPS})
    workers: int = 1
    split: int = 2

    def positions(self) -> tuple[int, ...]:
        order = get_group(self.group).order
        if self.support is None:
            return tuple(range(order))
        return tuple(sorted(set(self.support)))

    def validate(self) -> None:
        get_group(self.group)
        if self.lo > self.hi:
            raise ValueError(f"empty coefficient range {self.lo}..{self.hi}")
        if self.mode not in ("exhaustive", "random"):
            raise ValueError(f"unknown mode {self.mode!r}")
        order = get_group(self.group).order
        if any(not 0 <= p < order for p in self.positions()):
            raise ValueError(f"support positions must lie in 0..{order - 1}")
        if self.samples < 0:
            raise ValueError("sample count must be non-negative")
        unknown = set(self.checks) - ALL_CHECKS
        if unknown:
            raise ValueError(f"unknown checks {sorted(unknown)}")
        if self.mode == "exhaustive":
            size = (self.hi - self.lo + 1) ** len(self.positions())
            if size > self.budget:
                raise BudgetExceeded(
                    f"{size} evaluations exceed the budget of {self.budget}"
                )


@dataclass
class SearchReport:
    group: str
    total: int = 0
    class_counts: dict[str, int] = field(
        default_factory=lambda: {c: 0 for c in CLASSES + (NOT_MEMBER,)}
    )
    violation_count: int = 0
    violations: list[tuple[tuple[int, ...], int, str]] = field(default_factory=list)
    coverage: dict[int, set[int]] = field(default_factory=dict)
    minimum: int | None = None
    maximum: int | None = None

    @property
    def ok(self) -> bool:
        return self.violation_count == 0

    def merge(self, other: SearchReport) -> SearchReport:
        if other.group != self.group:
            raise ValueError("cannot merge reports for different groups")
        out = SearchReport(self.group)
        out.total = self.total + other.total
        out.class_counts = {
            k: self.class_counts[k] + other.class_counts[k] for k in self.class_counts
        }
        out.violation_count = self.violation_count + other.violation_count
        out.violations = sorted(self.violations + other.violations)[:MAX_STORED_VIOLATIONS]
        out.coverage = {
            mod: self.coverage.get(mod, set()) | other.coverage.get(mod, set())
            for mod in sorted(set(self.coverage) | set(other.coverage))
        }
        extremes = [v for v in (self.minimum, other.minimum) if v is not None]
        out.minimum = min(extremes) if extremes else None
        extremes = [v for v in (self.maximum, other.maximum) if v is not None]
        out.maximum = max(extremes) if extremes else None
        return out

    def as_dict(self) -> dict:
        return {
            "group": self.group,
            "total": self.total,
            "class_counts": dict(self.class_counts),
            "violation_count": self.violation_count,
            "violations": [
                {"coeffs": ",".join(map(str, c)), "determinant": d, "predicate": p}
                for c, d, p in self.violations
            ],
            "coverage": {str(mod): sorted(res) for mod, res in sorted(self.coverage.items())},
            "min": self.minimum,
            "max": self.maximum,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2)

    def to_text(self) -> str:
        d = self.as_dict()
        lines = [f"group: {d['group']}", f"total: {d['total']}"]
        for cls, n in d["class_counts"].items():
            lines.append(f"class {cls}: {n}")
        lines.append(f"violations: {d['violation_count']}")
        for v in d["violations"]:
            lines.append(f"  {v['predicate']}: D={v['determinant']} F={v['coeffs']}")
        for mod, res in d["coverage"].items():
            lines.append(f"residues mod {mod}: {len(res)} attained")
        mod18 = d["coverage"].get("18")
        if mod18 is not None:
            lines.append(f"attained mod 18: {' '.join(map(str, mod18))}")
        lines.append(f"min: {d['min']}")
        lines.append(f"max: {d['max']}")
        return "\n".join(lines)


def coverage_moduli(group: str) -> tuple[int, ...]:
    return (18, 36, 4 * 3 ** THREE_EXPONENT[group])


def _violations_for(F: GroupRingElement, D: int, group: str, checks) -> list[str]:
    failed = []
    if MEMBERSHIP in checks and not classify(D, group).member:
        failed.append("membership")
    order18 = group in ("g18-4", "z3xd6")
    if SUBGROUPS in checks and order18:
        if not in_z3xz3_spectrum(D):
            failed.append("subgroup-z3xz3")
        if not in_d6_spectrum(D):
            failed.append("subgroup-d6")
    if LEMMAS in checks:
        e = THREE_EXPONENT[group]
        if D % 2 == 0 and D % 4:
            failed.append("even-implies-4")
        if D % 3 == 0 and D % 3**e:
            failed.append(f"three-implies-3^{e}")
        if order18:
            failed.extend(_factor_congruences(factor_profile(F), D))
    if ORACLE in checks:
        if group_determinant(F) != D:
            failed.append("oracle-agreement")
        if order18 and LEMMAS not in checks and factor_profile(F).product != D:
            failed.append("profile-agreement")
    return failed


def _factor_congruences(profile, D: int) -> list[str]:
    failed = []
    if profile.product != D:
        failed.append("profile-agreement")
    if profile.variant == "g18-4":
        A = profile.factors[0]
        for i, B in enumerate(profile.factors[1:], start=1):
            if (B - A) % 3:
                failed.append(f"B{i}≡A mod 3")
    else:
        A1, A2, A3, A4 = profile.factors
        if (A2 - A1) % 3:
            failed.append("A2≡A1 mod 3")
        if (A3 - A1 * A1) % 3:
            failed.append("A3≡A1^2 mod 3")
        if (A4 - A1 * A1) % 3:
            failed.append("A4≡A1^2 mod 3")
    return failed


def evaluate(cfg: SearchConfig, rows) -> SearchReport:
    """Check every coefficient vector in ``rows`` and summarise."""
    group = get_group(cfg.group)
    moduli = coverage_moduli(cfg.group)
    report = SearchReport(cfg.group)
    counts = report.class_counts
    coverage = {mod: set() for mod in moduli}
    violations = []
    lo = hi = None
    n = 0
    for row in rows:
        F = GroupRingElement(group, row)
        D = det_via_reduction(F)
        n += 1
        counts[classify(D, cfg.group).cls] += 1
        for mod in moduli:
            coverage[mod].add(D % mod)
        if lo is None or D < lo:
            lo = D
        if hi is None or D > hi:
            hi = D
        for predicate in _violations_for(F, D, cfg.group, cfg.checks):
            report.violation_count += 1
            violations.append((F.coeffs, D, predicate))
    report.total = n
    report.violations = sorted(violations)[:MAX_STORED_VIOLATIONS]
    report.coverage = coverage
    report.minimum, report.maximum = lo, hi
    return report


def _tasks(cfg: SearchConfig) -> list:
    if cfg.mode == "exhaustive":
        positions = cfg.positions()
        values = range(cfg.lo, cfg.hi + 1)
        return list(itertools.product(values, repeat=min(cfg.split, len(positions))))
    n_tasks = -(-cfg.samples // RANDOM_CHUNK)
    return list(range(n_tasks))


def _task_rows(cfg: SearchConfig, task) -> Iterator[tuple[int, ...]]:
    order = get_group(cfg.group).order
    positions = cfg.positions()
    if cfg.mode == "exhaustive":
        prefix = task
        rest = positions[len(prefix):]
        values = range(cfg.lo, cfg.hi + 1)
        for tail in itertools.product(values, repeat=len(rest)):
            row = [0] * order
            for p, v in zip(positions, prefix + tail):
                row[p] = v
            yield tuple(row)
        return
    count = min(RANDOM_CHUNK, cfg.samples - task * RANDOM_CHUNK)
    rng = np.random.default_rng([cfg.seed, task])
    draws = rng.integers(cfg.lo, cfg.hi + 1, size=(count, len(positions))).tolist()
    for draw in draws:
        row = [0] * order
        for p, v in zip(positions, draw):
            row[p] = v
        yield tuple(row)


def _run_task(args) -> SearchReport:
    cfg, task = args
    return evaluate(cfg, _task_rows(cfg, task))


def _sweep(cfg: SearchConfig) -> SearchReport:
    cfg.validate()
    tasks = [(cfg, t) for t in _tasks(cfg)]
    report = SearchReport(cfg.group)
    if cfg.workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(cfg.workers) as pool:
            parts = list(pool.map(_run_task, tasks))
    else:
        parts = [_run_task(t) for t in tasks]
    for part in parts:
        report = report.merge(part)
    return report


def run_search(cfg: SearchConfig) -> SearchReport:
    """Evaluate every element named by cfg, checking the predicates in ``cfg.checks``."""
    return _sweep(cfg)


def verify_congruence_lemmas(cfg: SearchConfig) -> SearchReport:
    """As run_search, with the parity, 3-adic and factor-level congruences checked."""
    return _sweep(replace(cfg, checks=frozenset(cfg.checks | {LEMMAS})))
