"""Command-line front end.

Exit codes: 0 on success, 1 on domain errors (a value outside the spectrum,
disagreeing determinant paths, search violations), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .determinant import GroupRingElement, UnsupportedGroup, all_paths, factor_profile
from .groups import GROUP_NAMES, get_group
from .search import (
    DEFAULT_BUDGET,
    LEMMAS,
    MEMBERSHIP,
    ORACLE,
    SUBGROUPS,
    BudgetExceeded,
    SearchConfig,
    run_search,
)
from .spectrum import NotInSpectrum, achieve, classify, classify_subgroup_spectra


class DomainError(Exception):
    pass


class UsageError(Exception):
    pass


def render(record: dict, emit: str) -> str:
    if emit == "json":
        return json.dumps(record, indent=2)
    return "\n".join(_text_lines(record))


def _text_lines(record: dict, prefix: str = ""):
    for key, value in record.items():
        if isinstance(value, dict):
            yield from _text_lines(value, f"{prefix}{key}.")
        else:
            shown = value if isinstance(value, str) else json.dumps(value)
            yield f"{prefix}{key}: {shown}"


def parse_range(text: str) -> tuple[int, int]:
    try:
        lo, hi = text.split("..")
        return int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected lo..hi, got {text!r}") from None


def parse_support(text: str, order: int) -> tuple[int, ...]:
    """``all``, ``f``, ``g``, an ``order``-character 0/1 string, or positions like ``0-3,9``."""
    half = order // 2
    text = text.strip()
    if text == "all":
        return tuple(range(order))
    if text == "f":
        return tuple(range(half))
    if text == "g":
        return tuple(range(half, order))
    if text == "":
        return ()
    if len(text) == order and set(text) <= {"0", "1"}:
        return tuple(i for i, ch in enumerate(text) if ch == "1")
    out = set()
    for part in text.split(","):
        if "-" in part:
            a, b = part.split("-", 1)
            out.update(range(int(a), int(b) + 1))
        else:
            out.add(int(part))
    if any(not 0 <= p < order for p in out):
        raise ValueError(f"support positions must lie in 0..{order - 1}")
    return tuple(sorted(out))


def _element(args) -> GroupRingElement:
    text = args.coeffs_opt if args.coeffs_opt is not None else args.coeffs
    if text is None:
        raise UsageError("coefficients required (positionally or via --coeffs)")
    try:
        return GroupRingElement.parse(args.group, text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def det_record(F: GroupRingElement) -> dict:
    paths = all_paths(F)
    values = set(paths.values())
    record = {
        "group": F.group.spec.name,
        "coeffs": F.format(),
        "determinant": paths["oracle"],
        "paths": paths,
        "agree": len(values) == 1,
    }
    if "profile" in paths:
        record["profile"] = factor_profile(F).as_dict()
    return record


def cmd_det(args) -> tuple[dict, int]:
    record = det_record(_element(args))
    return record, 0 if record["agree"] else 1


def cmd_factor(args) -> tuple[dict, int]:
    F = _element(args)
    try:
        profile = factor_profile(F)
    except UnsupportedGroup as exc:
        raise DomainError(f"UnsupportedGroup: {exc}") from None
    record = {
        "group": F.group.spec.name,
        "coeffs": F.format(),
        "profile": profile.as_dict(),
        "product": profile.product,
    }
    return record, 0


def cmd_classify(args) -> tuple[dict, int]:
    D = args.value
    record = {"group": args.group, "value": D}
    record.update(classify(D, args.group).as_record())
    record["subgroup_spectra"] = classify_subgroup_spectra(D)
    return record, 0


def cmd_achieve(args) -> tuple[dict, int]:
    D = args.value
    if args.group == "d18":
        raise DomainError("UnsupportedGroup: no witness construction for d18")
    try:
        F = achieve(D, args.group)
    except NotInSpectrum as exc:
        raise DomainError(f"NotInSpectrum: {exc}") from None
    form = classify(D, args.group)
    check = det_record(F)
    record = {
        "group": args.group,
        "value": D,
        "family": form.family,
        "family_m": form.family_m,
        "coeffs": F.format(),
        "determinant": check["determinant"],
        "paths": check["paths"],
        "verified": check["agree"] and check["determinant"] == D,
    }
    return record, 0 if record["verified"] else 1


def cmd_search(args) -> tuple[dict, int]:
    order = get_group(args.group).order
    try:
        support = parse_support(args.support, order)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    checks = {MEMBERSHIP, SUBGROUPS}
    if args.lemmas:
        checks.add(LEMMAS)
    if args.oracle:
        checks.add(ORACLE)
    lo, hi = args.range
    cfg = SearchConfig(
        group=args.group,
        lo=lo,
        hi=hi,
        support=support,
        mode=args.mode,
        samples=args.samples,
        seed=args.seed,
        budget=args.budget,
        checks=frozenset(checks),
        workers=args.workers,
    )
    try:
        report = run_search(cfg)
    except BudgetExceeded as exc:
        raise DomainError(f"BudgetExceeded: {exc}") from None
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return report, 0 if report.ok else 1


def cmd_selftest(args) -> tuple[dict, int]:
    from .selftest import run_selftest

    results = run_selftest()
    record = {name: ("pass" if ok else "fail") for name, ok in results}
    record["summary"] = f"{sum(ok for _, ok in results)}/{len(results)} passed"
    return record, 0 if all(ok for _, ok in results) else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--group", choices=GROUP_NAMES, default="g18-4")
    common.add_argument("--emit", choices=("text", "json"), default="text")

    element = argparse.ArgumentParser(add_help=False)
    element.add_argument("coeffs", nargs="?", help="comma-separated coefficients, f-block then g-block")
    element.add_argument("--coeffs", dest="coeffs_opt", metavar="COEFFS")

    value = argparse.ArgumentParser(add_help=False)
    value.add_argument("value", type=int)

    parser = argparse.ArgumentParser(
        prog="groupdet",
        description="Integer group determinants of the non-abelian groups of order 18.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("det", parents=[common, element], help="determinant by every available path").set_defaults(run=cmd_det)
    sub.add_parser("factor", parents=[common, element], help="integer factor profile").set_defaults(run=cmd_factor)
    sub.add_parser("classify", parents=[common, value], help="spectrum membership").set_defaults(run=cmd_classify)
    sub.add_parser("achieve", parents=[common, value], help="explicit witness for a determinant").set_defaults(run=cmd_achieve)

    search = sub.add_parser("search", parents=[common], help="check determinants over many elements")
    search.add_argument("--mode", choices=("random", "exhaustive"), default="random")
    search.add_argument("--range", type=parse_range, default=(-1, 1), metavar="LO..HI")
    search.add_argument("--samples", type=int, default=10_000)
    search.add_argument("--support", default="all", metavar="MASK")
    search.add_argument("--seed", type=int, default=0)
    search.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    search.add_argument("--workers", type=int, default=1)
    search.add_argument("--lemmas", action="store_true", help="also check the congruence lemmas")
    search.add_argument("--oracle", action="store_true", help="also recompute each determinant from the full matrix")
    search.set_defaults(run=cmd_search)

    sub.add_parser("selftest", parents=[common], help="small-scale invariant suite").set_defaults(run=cmd_selftest)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result, code = args.run(args)
    except UsageError as exc:
        parser.error(str(exc))
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if hasattr(result, "to_json"):
        print(result.to_json() if args.emit == "json" else result.to_text())
    else:
        print(render(result, args.emit))
    return code


if __name__ == "__main__":
    sys.exit(main())
