"""Command line interface: ``torsym {list,verify,verify-all,bounds,signatures,export}``.

Exit status is 0 when every check passes, 1 on a verification failure and 2
on usage or parameter errors.
"""
from __future__ import annotations

import argparse
import csv
import sys
import time
from pathlib import Path

from . import __version__
from .bounds import Mode, Surface, bound_table, enumerate_extremal
from .catalog import FAMILIES, FORM_LABEL, SUPERGROUP_FAMILIES, Tag, build, supergroup_checks, verify, verify_family_sweep
from .errors import ConstraintViolated, GenusOutOfRange, SupergroupNotFound
from .serialize import ReportDocument, dumps, patch_export

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

SUMMARY_FIELDS = [
    "family", "n", "form", "m", "genus", "expected_genus", "order", "expected_order",
    "lift_components", "certificate", "saturated", "passed",
]


def _fmt_lift(x) -> str:
    return "∞" if x == float("inf") else str(x)


def cmd_list(args) -> int:
    print(f"{'family':<7} {'net':<22} {'m-forms':<16} {'constraint':<10} {'closed form':<24} knotted")
    for f in FAMILIES.values():
        forms = ", ".join(FORM_LABEL[x] for x in f.m_forms)
        print(f"{f.tag.value:<7} {f.net:<22} {forms:<16} {f.constraint_text:<10} {f.genus_formula:<24} {'yes' if f.knotted else 'no'}")
    return EXIT_OK


def _print_report(r) -> None:
    status = "PASS" if r.passed else "FAIL"
    print(f"{r.tag} n={r.n} form={FORM_LABEL[r.form]} m={r.m}: {status}")
    for key in r.expected:
        got = r.computed.get(key)
        mark = "ok" if r.checks.get(key) else "MISMATCH"
        print(f"  {key:<16} {_fmt_lift(got):<14} expected {_fmt_lift(r.expected[key]):<14} {mark}")
    if "bound_saturated" in r.checks:
        print(f"  order = 12(g-1): {'yes' if r.checks['bound_saturated'] else 'NO'}")
    for note in r.notes:
        print(f"  note: {note}")
    if r.supergroups:
        sg = r.supergroups
        print(f"  inversion centre: ({', '.join(str(c) for c in sg['center'])})")
        for link in sg["chain"]:
            idx = "" if "index_two" not in link else f" index-two={link['index_two']}"
            print(f"  {link['group']:<18} order {link['order']:<8} expected {link['expected']:<8}{idx}")
        for gen in sg["generators"]:
            extra = f" swaps-sides={gen['swaps_sides']}" if "swaps_sides" in gen else ""
            print(f"  generator {gen['generator']:<10} character {gen['character']:+d} preserves={gen['preserves_graph']}{extra}")
        for k, v in sg["arithmetic"].items():
            print(f"  {k}: {v}")


def cmd_verify(args) -> int:
    inst = build(args.family, args.n, args.form)
    r = verify(inst)
    if args.supergroups:
        if inst.family.tag not in SUPERGROUP_FAMILIES:
            print(f"no supergroup chain for {inst.family.tag.value}", file=sys.stderr)
            return EXIT_USAGE
        r.supergroups = supergroup_checks(inst)
    if args.json:
        sys.stdout.write(ReportDocument.from_report(r).to_json())
    else:
        _print_report(r)
    return EXIT_OK if r.passed else EXIT_FAIL


def _summary_row(r) -> dict:
    c, e = r.computed, r.expected
    return {
        "family": r.tag, "n": r.n, "form": FORM_LABEL[r.form], "m": r.m,
        "genus": c.get("genus"), "expected_genus": e.get("genus"),
        "order": c.get("order"), "expected_order": e.get("order"),
        "lift_components": _fmt_lift(c.get("lift_components")), "certificate": c.get("certificate"),
        "saturated": r.checks.get("bound_saturated"), "passed": r.passed,
    }


def cmd_verify_all(args) -> int:
    t0 = time.perf_counter()
    reports = []
    for tag in Tag:
        reports.extend(verify_family_sweep(tag, args.max_n))
    done = [r for r in reports if not r.skipped]
    ok = all(r.passed for r in done)
    if args.json:
        docs = [ReportDocument.from_report(r).to_dict() for r in reports]
        sys.stdout.write(dumps({"version": __version__, "passed": ok, "reports": docs}))
    else:
        print(f"{'family':<7} {'n':>2} {'m':>5} {'genus':>6} {'|G|':>7} {'lift':>5} {'certificate':<13} result")
        for r in reports:
            if r.skipped:
                print(f"{r.tag:<7} {r.n:>2} {'':>5} {'':>6} {'':>7} {'':>5} {'':<13} skipped ({r.notes[0][9:]})")
                continue
            row = _summary_row(r)
            print(f"{r.tag:<7} {r.n:>2} {r.m:>5} {row['genus']!s:>6} {row['order']!s:>7} "
                  f"{row['lift_components']:>5} {row['certificate']!s:<13} {'pass' if r.passed else 'FAIL'}")
        print(f"{len(done)} instances, {sum(r.passed for r in done)} passed, "
              f"{len(reports) - len(done)} skipped, {time.perf_counter() - t0:.2f}s")
    if args.report_dir:
        out = Path(args.report_dir)
        out.mkdir(parents=True, exist_ok=True)
        with open(out / "summary.tsv", "w", newline="") as fh:
            w = csv.DictWriter(fh, fieldnames=SUMMARY_FIELDS, delimiter="\t", lineterminator="\n")
            w.writeheader()
            for r in done:
                w.writerow(_summary_row(r))
        from .plotting import plot_bound_saturation

        plot_bound_saturation(done, out / "bound_saturation.png")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_bounds(args) -> int:
    table = bound_table(args.g, args.surface)
    print(f"g = {table.g} ({table.surface.value})")
    for name, value in table.rows:
        print(f"  {name:<6} ≤ {value}")
    print("/".join(str(v) for v in table.values()))
    return EXIT_OK


def cmd_signatures(args) -> int:
    result = enumerate_extremal(args.mode)
    if args.json:
        sigs = [{"g_prime": s.g_prime, "indices": list(s.indices)} for s in result.extremal_signatures]
        sys.stdout.write(dumps({"mode": result.mode.value, "multiplier": result.multiplier, "signatures": sigs}))
    else:
        print(f"{result.mode.value}: {result}")
    return EXIT_OK


def cmd_export(args) -> int:
    inst = build(args.family, args.n)
    patch = patch_export(inst, tuple(args.box))
    text = patch.to_obj() if args.format == "obj" else patch.to_json()
    if args.output in (None, "-"):
        sys.stdout.write(text)
    else:
        try:
            with open(args.output, "w", newline="\n") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"cannot write {args.output}: {exc.strerror}", file=sys.stderr)
            return EXIT_USAGE
        if args.plot:
            from .plotting import plot_patch

            plot_patch(patch, Path(args.output).with_suffix(".png"))
    return EXIT_OK


def _positive(text: str) -> int:
    v = int(text)
    if v <= 0:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="torsym", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("list", help="show the graph families")
    s.set_defaults(func=cmd_list)

    s = sub.add_parser("verify", help="verify one instance")
    s.add_argument("family")
    s.add_argument("--n", type=int, default=1)
    s.add_argument("--form", choices=sorted(FORM_LABEL), help="m-form (default: the family's first)")
    s.add_argument("--json", action="store_true")
    s.add_argument("--supergroups", action="store_true", help="also check the index-two supergroup chain")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("verify-all", help="sweep every family up to --max-n")
    s.add_argument("--max-n", type=_positive, default=3)
    s.add_argument("--json", action="store_true")
    s.add_argument("--report-dir", help="write summary.tsv and bound_saturation.png here")
    s.set_defaults(func=cmd_verify_all)

    s = sub.add_parser("bounds", help="upper bounds on extendable group orders")
    s.add_argument("--g", type=int, required=True)
    s.add_argument("--surface", choices=[x.value for x in Surface], default=Surface.ORIENTABLE.value)
    s.set_defaults(func=cmd_bounds)

    s = sub.add_parser("signatures", help="extremal branching signatures")
    s.add_argument("--mode", choices=[x.value for x in Mode], default=Mode.EXCLUDE_SMALL_SPHERICAL.value)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_signatures)

    s = sub.add_parser("export", help="write a finite patch of a graph")
    s.add_argument("family")
    s.add_argument("--n", type=int, default=1)
    s.add_argument("--box", type=_positive, nargs=3, default=[1, 1, 1], metavar=("A", "B", "C"))
    s.add_argument("--format", choices=["obj", "json"], default="obj")
    s.add_argument("--output", help="output file (default: stdout)")
    s.add_argument("--plot", action="store_true", help="also render a PNG next to --output")
    s.set_defaults(func=cmd_export)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ConstraintViolated, GenusOutOfRange, KeyError, ValueError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return EXIT_USAGE
    except SupergroupNotFound as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
