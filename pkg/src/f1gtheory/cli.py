"""Command line interface.

Every subcommand takes a group source (library name, JSON file, or
generators), emits text by default or JSON on request, and is deterministic
for a fixed seed.  Exit status: 0 success, 1 mathematical check failure,
2 input error.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import random
import sys
from typing import Dict, List, Optional, Sequence

from .burnside import BurnsideRing, build_burnside, marks_to_csv
from .errors import InternalCheckError, ResourceLimitError
from .groups import (DEFAULT_ORDER_CAP, FiniteGroup, build_group,
                     classify_subgroups, conjugacy_classes_of_elements,
                     group_from_json)
from .gtheory import (cartan_zero, count_simple_factors, g0_presentation,
                      g1_via_splitting)
from .lambda_ops import (diamond, lambda_k, verify_lambda_ring,
                         verify_pre_lambda)
from .mackey import (check_double_coset, check_frobenius, green_morphism_check,
                     subgroup_context)
from .modules import (detect_group, diagonal_smash, group_monoid,
                      module_from_json, monoid_from_json)
from .reports import CheckReport
from .sampling import random_effective, random_element
from .snf import factorize

DEFAULT_SEED = 1729


def _order_cap() -> int:
    raw = os.environ.get("F1G_ORDER_CAP")
    if raw is None:
        return DEFAULT_ORDER_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"F1G_ORDER_CAP must be an integer, got {raw!r}")
    if cap < 1:
        raise ValueError("F1G_ORDER_CAP must be >= 1")
    return cap


def _add_group_args(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--group", help="library group name, e.g. S3 or C12")
    sub.add_argument("--group-json", help="path to a group JSON file")
    sub.add_argument("--generators",
                     help="permutation generators in cycle notation, "
                          "semicolon separated, e.g. '(1 2);(1 2 3)'")
    sub.add_argument("--degree", type=int,
                     help="number of permuted points for --generators")


def _add_common_args(sub: argparse.ArgumentParser, formats=("text", "json")) -> None:
    sub.add_argument("--format", choices=list(formats), default="text")
    sub.add_argument("--seed", type=int, default=DEFAULT_SEED)
    sub.add_argument("--jobs", type=int, default=1,
                     help="worker count; execution falls back to sequential")


def _group_from_args(args: argparse.Namespace) -> FiniteGroup:
    cap = _order_cap()
    sources = [args.group is not None, args.group_json is not None,
               args.generators is not None]
    if sum(sources) != 1:
        raise ValueError("exactly one of --group, --group-json, --generators is required")
    if args.group is not None:
        return build_group(name=args.group, order_cap=cap)
    if args.group_json is not None:
        with open(args.group_json, "r", encoding="utf-8") as fh:
            return group_from_json(json.load(fh), order_cap=cap)
    if args.degree is None:
        raise ValueError("--generators requires --degree")
    gens = [g for g in args.generators.split(";") if g.strip()]
    return build_group(generators=gens, degree=args.degree, order_cap=cap)


def _parse_coeffs(text: str, ring: BurnsideRing, what: str) -> List[int]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError:
        raise ValueError(f"{what} must be a JSON integer array, got {text!r}")
    if (not isinstance(data, list)
            or any(not isinstance(v, int) or isinstance(v, bool) for v in data)):
        raise ValueError(f"{what} must be a JSON integer array, got {text!r}")
    if len(data) != ring.rank:
        raise ValueError(
            f"{what} needs {ring.rank} coefficients for this group, got {len(data)}")
    return data


def _emit_json(payload: Dict) -> None:
    print(json.dumps(payload, sort_keys=True, indent=2))


def _compact(vec: Sequence[int]) -> str:
    return json.dumps(list(vec), separators=(",", ":"))


# --- subcommand bodies ---------------------------------------------------

def _cmd_subgroups(args) -> int:
    group = _group_from_args(args)
    ring = build_burnside(group)
    classification = classify_subgroups(group)
    rows = []
    total = 0
    for i, cls in enumerate(classification.classes):
        rep = cls[0]
        total += len(cls)
        rows.append({
            "index": i,
            "label": ring.labels[i],
            "order": rep.order,
            "representative": list(rep.elements),
            "class_size": len(cls),
        })
    if args.format == "json":
        _emit_json({
            "group": group.name or "custom",
            "order": group.order,
            "subgroup_count": total,
            "class_count": len(rows),
            "classes": rows,
        })
    else:
        print(f"group {group.name or 'custom'} of order {group.order}: "
              f"{total} subgroups in {len(rows)} conjugacy classes")
        for row in rows:
            print(f"  [{row['index']}] {row['label']} "
                  f"order={row['order']} class_size={row['class_size']} "
                  f"rep={row['representative']}")
    return 0


def _cmd_marks(args) -> int:
    group = _group_from_args(args)
    ring = build_burnside(group)
    if args.format == "csv":
        sys.stdout.write(marks_to_csv(ring))
    elif args.format == "json":
        _emit_json(ring.to_json())
    else:
        print(f"table of marks for {group.name or 'custom'} "
              f"({ring.rank} classes)")
        width = max(len(lab) for lab in ring.labels)
        for label, row in zip(ring.labels, ring.marks):
            cells = " ".join(f"{v:>4}" for v in row)
            print(f"  {label:<{width}} {cells}")
    return 0


def _cmd_burnside_mul(args) -> int:
    group = _group_from_args(args)
    ring = build_burnside(group)
    x = ring.element(_parse_coeffs(args.x, ring, "--x"))
    y = ring.element(_parse_coeffs(args.y, ring, "--y"))
    product = x * y
    if args.format == "json":
        _emit_json({
            "basis": list(ring.labels),
            "x": list(x.coeffs), "y": list(y.coeffs),
            "product": list(product.coeffs),
        })
    else:
        print(f"x       = {x.pretty()}")
        print(f"y       = {y.pretty()}")
        print(f"product = {product.pretty()}")
    return 0


def _cmd_decompose(args) -> int:
    group = _group_from_args(args)
    ring = build_burnside(group)
    with open(args.module_json, "r", encoding="utf-8") as fh:
        obj = json.load(fh)
    module = module_from_json(obj, group_monoid(group))
    if module.monoid != group_monoid(group):
        raise ValueError("module does not live over the selected group")
    element = ring.decompose(module)
    if args.format == "json":
        _emit_json({
            "basis": list(ring.labels),
            "size": module.size,
            "coeffs": list(element.coeffs),
        })
    else:
        print(f"module with {module.size - 1} nonzero elements decomposes as "
              f"{element.pretty()}")
    return 0


def _cmd_lambda(args) -> int:
    group = _group_from_args(args)
    ring = build_burnside(group)
    x = ring.element(_parse_coeffs(args.element, ring, "--element"))
    if args.k < 0:
        raise ValueError("--k must be >= 0")
    value = lambda_k(ring, x, args.k)
    if args.format == "json":
        _emit_json({
            "basis": list(ring.labels),
            "element": list(x.coeffs),
            "k": args.k,
            "result": list(value.coeffs),
        })
    else:
        print(_compact(value.coeffs))
    return 0


def _cmd_lambda_verify(args) -> int:
    group = _group_from_args(args)
    ring = build_burnside(group)
    rng = random.Random(args.seed)
    pre = verify_pre_lambda(ring, args.k_cap, args.trials, rng)
    families = verify_lambda_ring(ring, args.k_cap, args.l_cap, args.trials,
                                  random.Random(args.seed + 1))
    odd_cyclic = _is_odd_cyclic(group)
    guaranteed = [pre, families[0]] + (families[1:] if odd_cyclic else [])
    ok = all(rep.passed for rep in guaranteed)
    if args.format == "json":
        _emit_json({
            "group": group.name or "custom",
            "seed": args.seed,
            "odd_cyclic": odd_cyclic,
            "pre_lambda": pre.to_json(),
            "ring_axioms": [rep.to_json() for rep in families],
            "status": "pass" if ok else "fail",
        })
    else:
        print(f"lambda verification for {group.name or 'custom'} "
              f"(seed {args.seed})")
        print(f"  {pre.summary_line()}")
        for rep in families:
            tag = "" if (odd_cyclic or rep is families[0]) else " [informational]"
            print(f"  {rep.summary_line()}{tag}")
        print(f"overall: {'pass' if ok else 'FAIL'}")
    return 0 if ok else 1


def _is_odd_cyclic(group: FiniteGroup) -> bool:
    if group.order % 2 == 0 and group.order > 1:
        return False
    return any(group.element_order(x) == group.order
               for x in range(group.order))


def _cmd_diamond(args) -> int:
    group = _group_from_args(args)
    ring = build_burnside(group)
    x = ring.element(_parse_coeffs(args.element, ring, "--element"))
    if not x.is_effective:
        raise ValueError("--element must be effective for a diamond computation")
    if args.k < 1:
        raise ValueError("--k must be >= 1")
    module = diamond(ring.realize(x), args.k)
    element = ring.decompose(module)
    if args.format == "json":
        _emit_json({
            "basis": list(ring.labels),
            "element": list(x.coeffs),
            "k": args.k,
            "carrier_size": module.size,
            "decomposition": list(element.coeffs),
        })
    else:
        print(f"ordered {args.k}-tuple module has carrier size {module.size} "
              f"and decomposes as {element.pretty()}")
    return 0


def _run_mackey_checks(group: FiniteGroup, trials: int,
                       rng: random.Random) -> List[CheckReport]:
    ring = build_burnside(group)
    reps = ring.classification.representatives
    dc = CheckReport("double coset formula")
    for h in reps:
        h_ctx = subgroup_context(group, h.elements)
        for k in reps:
            for i in range(h_ctx.ring.rank):
                y = h_ctx.ring.basis_element(i)
                report = check_double_coset(group, h.elements, k.elements, y)
                dc.record(report.ok, report.to_json())
    fr = CheckReport("Frobenius reciprocity")
    for _ in range(trials):
        h = reps[rng.randrange(len(reps))]
        ctx = subgroup_context(group, h.elements)
        x = random_element(ring, rng)
        y = random_element(ctx.ring, rng)
        report = check_frobenius(group, h.elements, x, y)
        fr.record(report.ok, report.to_json())
    green = green_morphism_check(group)
    return [dc, fr, green]


def _cmd_mackey_check(args) -> int:
    group = _group_from_args(args)
    reports = _run_mackey_checks(group, args.trials, random.Random(args.seed))
    ok = all(rep.passed for rep in reports)
    if args.format == "json":
        _emit_json({
            "group": group.name or "custom",
            "seed": args.seed,
            "checks": [rep.to_json() for rep in reports],
            "status": "pass" if ok else "fail",
        })
    else:
        print(f"Mackey checks for {group.name or 'custom'} (seed {args.seed})")
        for rep in reports:
            print(f"  {rep.summary_line()}")
        print(f"overall: {'pass' if ok else 'FAIL'}")
    return 0 if ok else 1


def _cmd_g0(args) -> int:
    if args.monoid_json is not None:
        with open(args.monoid_json, "r", encoding="utf-8") as fh:
            monoid = monoid_from_json(json.load(fh))
        try:
            monoid = detect_group(monoid)
        except ValueError:
            pass
        label = "monoid"
        default_bound = monoid.size + 2
    else:
        group = _group_from_args(args)
        monoid = group_monoid(group)
        label = group.name or "custom"
        default_bound = group.order + 3
    bound = args.bound if args.bound is not None else default_bound
    presentation = g0_presentation(monoid, bound)
    if args.format == "json":
        _emit_json({"input": label, **presentation.to_json()})
    else:
        result = presentation.result
        print(f"degree-0 group of {label} at size bound {bound}: "
              f"{result.pretty()} ({presentation.stability})")
        print(f"  generators: {len(presentation.generators)}, "
              f"relations: {len(presentation.relations)}")
    return 0


def _cmd_g1(args) -> int:
    group = _group_from_args(args)
    report = g1_via_splitting(group)
    if args.format == "json":
        _emit_json({"group": group.name or "custom", **report.to_json()})
    else:
        print(f"degree-1 group of {group.name or 'custom'} ({report.provenance}): "
              f"{report.pretty()}")
        for line in report.basis_interpretation or ():
            print(f"  {line}")
    return 0


def _cmd_wh0(args) -> int:
    group = _group_from_args(args)
    report = cartan_zero(group)
    if args.format == "json":
        _emit_json({
            "group": group.name or "custom",
            "image": list(report.image),
            "free_rank": report.wh0.free_rank,
            "torsion": list(report.wh0.torsion),
            "provenance": report.wh0.provenance,
        })
    else:
        print(f"assembly image vector: {_compact(report.image)}")
        print(f"cokernel: {report.wh0.pretty()}")
    return 0


def _cmd_simple_factors(args) -> int:
    group = _group_from_args(args)
    count = count_simple_factors(group, args.q)
    if args.format == "json":
        _emit_json({"group": group.name or "custom", "q": args.q,
                    "simple_factors": count})
    else:
        print(f"group algebra over F_{args.q} splits into {count} simple factors")
    return 0


# --- the invariant suite -------------------------------------------------

def _suite_reports(group: FiniteGroup, seed: int) -> List[CheckReport]:
    ring = build_burnside(group)
    rng = random.Random(seed)
    reports: List[CheckReport] = []

    structure = CheckReport("marks diagonal and triangularity")
    for i in range(ring.rank):
        ok = all(ring.marks[i][j] == 0 for j in range(i + 1, ring.rank))
        structure.record(ok and ring.marks[i][i] > 0,
                         {"row": i, "marks": list(ring.marks[i])})
    reports.append(structure)

    oracle = CheckReport("product matches diagonal smash")
    for _ in range(20):
        x = random_effective(ring, rng, max_size=8)
        y = random_effective(ring, rng, max_size=8)
        direct = (x * y).coeffs
        modeled = ring.decompose(
            diagonal_smash(ring.realize(x), ring.realize(y))).coeffs
        oracle.record(direct == modeled, {
            "x": list(x.coeffs), "y": list(y.coeffs),
            "mul": list(direct), "smash": list(modeled),
        })
    reports.append(oracle)

    pre = verify_pre_lambda(ring, 4, 20, random.Random(seed + 1))
    reports.append(pre)

    mackey_reports = _run_mackey_checks(group, 20, random.Random(seed + 2))
    reports.extend(mackey_reports)

    g0_check = CheckReport("degree-0 presentation stabilizes at Burnside rank")
    presentation = g0_presentation(group_monoid(group), group.order + 3)
    g0_check.record(
        presentation.stability == "stable at bound"
        and presentation.result.free_rank == ring.rank
        and not presentation.result.torsion,
        presentation.to_json())
    reports.append(g0_check)

    wh0_check = CheckReport("assembly cokernel is free of rank r-1")
    cartan = cartan_zero(group)
    wh0_check.record(
        cartan.wh0.free_rank == ring.rank - 1 and not cartan.wh0.torsion,
        cartan.to_json())
    reports.append(wh0_check)

    g1_check = CheckReport("degree-1 splitting is well formed")
    g1 = g1_via_splitting(group)
    chain_ok = all(
        g1.torsion[i] % g1.torsion[i - 1] == 0 for i in range(1, len(g1.torsion))
    ) and g1.free_rank == 0 and len(g1.torsion) >= ring.rank
    g1_check.record(chain_ok, g1.to_json())
    reports.append(g1_check)

    factors_check = CheckReport("simple factor count at coprime prime powers")
    class_count = len(conjugacy_classes_of_elements(group))
    tested = 0
    q = 2
    while tested < 2 and q < 60:
        if math.gcd(q, group.order) == 1 and len(factorize(q)) == 1:
            count = count_simple_factors(group, q)
            factors_check.record(1 <= count <= class_count,
                                 {"q": q, "count": count})
            tested += 1
        q += 1
    reports.append(factors_check)
    return reports


def _cmd_suite(args) -> int:
    group = _group_from_args(args)
    reports = _suite_reports(group, args.seed)
    ring_axioms = verify_lambda_ring(build_burnside(group), 3, 2, 5,
                                     random.Random(args.seed + 3))
    odd_cyclic = _is_odd_cyclic(group)
    asserted = reports + [ring_axioms[0]] + (ring_axioms[1:] if odd_cyclic else [])
    ok = all(rep.passed for rep in asserted)
    if args.format == "json":
        _emit_json({
            "group": group.name or "custom",
            "order": group.order,
            "seed": args.seed,
            "checks": [rep.to_json() for rep in reports],
            "ring_axioms": [rep.to_json() for rep in ring_axioms],
            "odd_cyclic": odd_cyclic,
            "status": "pass" if ok else "fail",
        })
    else:
        print(f"invariant suite for {group.name or 'custom'} "
              f"(order {group.order}, seed {args.seed})")
        for rep in reports:
            print(f"  {rep.summary_line()}")
        for rep in ring_axioms:
            tag = "" if (odd_cyclic or rep is ring_axioms[0]) else " [informational]"
            print(f"  {rep.summary_line()}{tag}")
        print(f"overall: {'pass' if ok else 'FAIL'}")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="f1g",
        description="Burnside rings, modules over pointed monoids, lambda "
                    "operations, Mackey structure, and degree-0/1 invariants.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    sp = subs.add_parser("subgroups", help="conjugacy classes of subgroups")
    _add_group_args(sp)
    _add_common_args(sp)
    sp.set_defaults(func=_cmd_subgroups)

    sp = subs.add_parser("marks", help="table of marks")
    _add_group_args(sp)
    _add_common_args(sp, formats=("text", "json", "csv"))
    sp.set_defaults(func=_cmd_marks)

    sp = subs.add_parser("burnside-mul", help="multiply two virtual classes")
    _add_group_args(sp)
    _add_common_args(sp)
    sp.add_argument("--x", required=True, help="JSON coefficient array")
    sp.add_argument("--y", required=True, help="JSON coefficient array")
    sp.set_defaults(func=_cmd_burnside_mul)

    sp = subs.add_parser("decompose", help="decompose a module JSON file")
    _add_group_args(sp)
    _add_common_args(sp)
    sp.add_argument("--module-json", required=True)
    sp.set_defaults(func=_cmd_decompose)

    sp = subs.add_parser("lambda", help="apply a lambda operation")
    _add_group_args(sp)
    _add_common_args(sp)
    sp.add_argument("--element", required=True, help="JSON coefficient array")
    sp.add_argument("--k", type=int, required=True)
    sp.set_defaults(func=_cmd_lambda)

    sp = subs.add_parser("lambda-verify", help="check lambda axioms")
    _add_group_args(sp)
    _add_common_args(sp)
    sp.add_argument("--k-cap", type=int, default=3)
    sp.add_argument("--l-cap", type=int, default=2)
    sp.add_argument("--trials", type=int, default=20)
    sp.set_defaults(func=_cmd_lambda_verify)

    sp = subs.add_parser("diamond", help="ordered tuple module of an element")
    _add_group_args(sp)
    _add_common_args(sp)
    sp.add_argument("--element", required=True, help="JSON coefficient array")
    sp.add_argument("--k", type=int, required=True)
    sp.set_defaults(func=_cmd_diamond)

    sp = subs.add_parser("mackey-check", help="double coset, Frobenius, Green")
    _add_group_args(sp)
    _add_common_args(sp)
    sp.add_argument("--trials", type=int, default=50)
    sp.set_defaults(func=_cmd_mackey_check)

    sp = subs.add_parser("g0", help="degree-0 presentation")
    _add_group_args(sp)
    _add_common_args(sp)
    sp.add_argument("--monoid-json", help="pointed monoid JSON instead of a group")
    sp.add_argument("--bound", type=int, help="carrier size bound")
    sp.set_defaults(func=_cmd_g0)

    sp = subs.add_parser("g1", help="degree-1 group via the splitting formula")
    _add_group_args(sp)
    _add_common_args(sp)
    sp.set_defaults(func=_cmd_g1)

    sp = subs.add_parser("wh0", help="degree-0 assembly cokernel")
    _add_group_args(sp)
    _add_common_args(sp)
    sp.set_defaults(func=_cmd_wh0)

    sp = subs.add_parser("simple-factors", help="simple factors of F_q[G]")
    _add_group_args(sp)
    _add_common_args(sp)
    sp.add_argument("--q", type=int, required=True, help="prime power, coprime to |G|")
    sp.set_defaults(func=_cmd_simple_factors)

    sp = subs.add_parser("suite", help="full invariant suite for one group")
    _add_group_args(sp)
    _add_common_args(sp)
    sp.set_defaults(func=_cmd_suite)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "jobs", 1) > 1:
        print("note: running sequentially; --jobs is accepted for "
              "compatibility", file=sys.stderr)
    elif getattr(args, "jobs", 1) < 1:
        print("error: --jobs must be >= 1", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except InternalCheckError as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        return 1
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
