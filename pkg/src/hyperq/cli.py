"""Command line driver.

Every command loads one JSON input file (see the io module for the
schema), runs part of the pipeline and prints either a fixed-width table
or a JSON report (--format json).  Output is deterministic: identical
input and flags produce identical bytes.  Exit status is 0 when all
requested checks pass, 1 when a check fails (the failing check is named
on stderr) and 2 for schema or usage problems.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import __version__
from .algebra import chi, convolve_ext, eta, kms_check, mul, sigma, validate_weights
from .errors import HyperqError, InfiniteCoefficient, SchemaError, ZeroWeight
from .extnat import extnat_to_json
from .hypergroupoid import check_hg_axioms, to_quantale
from .io import InputSpec, format_complex, format_element, load_input, parse_element
from .quantale import check_axioms, site
from .realization import orbit_atoms, weights


def _threads() -> int:
    raw = os.environ.get("HYPERQ_THREADS", "")
    try:
        return max(1, int(raw)) if raw else 1
    except ValueError:
        raise SchemaError(f"HYPERQ_THREADS must be an integer, got {raw!r}")


class Context:
    """Loaded input plus the realized structures the commands share."""

    def __init__(self, path: str):
        self.spec, self.digest = load_input(path)
        if self.spec.kind == "abstract":
            self.real = None
            self.weighted = self.spec.weighted
        else:
            self.real = orbit_atoms(self.spec.action)
            self.weighted = weights(self.real)
        self.base = self.weighted.base

    def header(self, command: str) -> list[str]:
        return [
            f"hyperq {__version__}",
            f"command: {command}",
            f"input: {self.spec.name} (sha256:{self.digest})",
            "",
        ]

    def report(self, command: str, payload: dict) -> dict:
        return {
            "tool": "hyperq",
            "version": __version__,
            "command": command,
            "input": self.spec.name,
            "digest": self.digest,
            **payload,
        }


def _emit(lines: list[str]):
    sys.stdout.write("\n".join(lines) + "\n")


def _emit_json(obj: dict):
    sys.stdout.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")


def _table(headers: list[str], rows: list[list[str]]) -> list[str]:
    widths = [len(h) for h in headers]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    fmt = "  ".join(f"{{:<{w}}}" for w in widths)
    out = [fmt.format(*headers).rstrip()]
    out.append("  ".join("-" * w for w in widths))
    out += [fmt.format(*row).rstrip() for row in rows]
    return out


def _elem_str(Q, e) -> str:
    """Render a quantale element as a set of atom names."""
    return "{" + ",".join(Q.atom_names[i] for i in sorted(e)) + "}"


def _chi_str(W, g: int) -> str:
    try:
        return str(chi(W, g))
    except (InfiniteCoefficient, ZeroWeight):
        return "-"


# ---------------------------------------------------------------------------
# commands


def _atoms_rows(ctx: Context) -> list[list[str]]:
    H = ctx.base
    rows = []
    for g in range(H.n_arrows):
        if ctx.real is not None:
            size = str(ctx.real.orbit_size[g])
            rep = "({},{})".format(*ctx.real.representative[g])
        else:
            size, rep = "-", "-"
        rows.append([
            H.arrow_names[g], H.unit_names[H.src[g]], H.unit_names[H.tgt[g]],
            H.arrow_names[H.star[g]], size, rep,
        ])
    return rows


def cmd_atoms(args) -> int:
    ctx = Context(args.file)
    H = ctx.base
    rows = _atoms_rows(ctx)
    if args.format == "json":
        payload = {"units": list(H.unit_names),
                   "atoms": [{"id": r[0], "src": r[1], "tgt": r[2], "star": r[3],
                              "orbit_size": None if r[4] == "-" else int(r[4]),
                              "representative": r[5]} for r in rows]}
        _emit_json(ctx.report("atoms", payload))
    else:
        lines = ctx.header("atoms")
        lines.append(f"units: {' '.join(H.unit_names)}")
        lines.append("")
        lines += _table(["id", "src", "tgt", "star", "size", "rep"], rows)
        _emit(lines)
    return 0


def cmd_algebra(args) -> int:
    ctx = Context(args.file)
    H, W = ctx.base, ctx.weighted
    wrows = [[H.arrow_names[g], str(W.left[g]), str(W.right[g]), _chi_str(W, g)]
             for g in range(H.n_arrows)]
    mu_keys = sorted(W.mu, key=lambda k: (k[1], k[2], k[0]))
    if args.format == "json":
        payload = {
            "atoms": [{"id": r[0], "src": r[1], "tgt": r[2], "star": r[3]}
                      for r in _atoms_rows(ctx)],
            "weights": [{"id": r[0], "left": extnat_to_json(W.left[g]),
                         "right": extnat_to_json(W.right[g]), "chi": r[3]}
                        for g, r in enumerate(wrows)],
            "mu": [{"a": H.arrow_names[a], "g": H.arrow_names[g],
                    "gp": H.arrow_names[gp], "value": extnat_to_json(W.mu[(a, g, gp)])}
                   for (a, g, gp) in mu_keys],
        }
        _emit_json(ctx.report("algebra", payload))
    else:
        lines = ctx.header("algebra")
        lines += _table(["id", "src", "tgt", "star", "size", "rep"], _atoms_rows(ctx))
        lines.append("")
        lines += _table(["id", "left", "right", "chi"], wrows)
        lines.append("")
        lines += _table(
            ["g", "gp", "a", "mu"],
            [[H.arrow_names[g], H.arrow_names[gp], H.arrow_names[a],
              str(W.mu[(a, g, gp)])] for (a, g, gp) in mu_keys])
        _emit(lines)
    return 0


def _axiom_rows(Q, report) -> list[list[str]]:
    rows = []
    for r in report.results:
        ce = "" if r.counterexample is None else \
            " ".join(_elem_str(Q, e) for e in r.counterexample)
        rows.append([r.name, "pass" if r.passed else "FAIL", ce, r.note])
    return rows


def _named_rows(names, report) -> list[list[str]]:
    rows = []
    for r in report.results:
        ce = "" if r.counterexample is None else str(r.counterexample)
        note = getattr(r, "note", "")
        rows.append([r.name, "pass" if r.passed else "FAIL", ce, note])
    return rows


def cmd_check(args) -> int:
    ctx = Context(args.file)
    Q = to_quantale(ctx.base)
    mode = "exhaustive" if args.exhaustive else "sampled"
    q_report = check_axioms(Q, mode=mode, samples=args.samples, seed=args.seed,
                            max_workers=_threads())
    h_report = check_hg_axioms(ctx.base)
    w_report = validate_weights(ctx.weighted)
    failed = [r.name for r in q_report.failing()]
    failed += [r.name for r in h_report.results if not r.passed]
    failed += [r.name for r in w_report.results if not r.passed]

    if args.format == "json":
        payload = {
            "mode": mode,
            "quantale": [{"name": r.name, "passed": r.passed,
                          "counterexample": None if r.counterexample is None else
                          [sorted(Q.atom_names[i] for i in e) for e in r.counterexample],
                          "note": r.note} for r in q_report.results],
            "hypergroupoid": [{"name": r.name, "passed": r.passed,
                               "counterexample": None if r.counterexample is None
                               else list(r.counterexample), "note": r.note}
                              for r in h_report.results],
            "weights": [{"name": r.name, "passed": r.passed, "checked": r.checked,
                         "failures": [list(f) for f in r.failures]}
                        for r in w_report.results],
            "ok": not failed,
        }
        _emit_json(ctx.report("check", payload))
    else:
        lines = ctx.header("check")
        lines.append(f"mode: {mode}" + (
            "" if mode == "exhaustive" else f" (samples={args.samples}, seed={args.seed})"))
        lines.append("")
        lines += _table(["axiom", "status", "counterexample", "note"],
                        _axiom_rows(Q, q_report))
        lines.append("")
        lines += _table(["axiom", "status", "counterexample", "note"],
                        _named_rows(None, h_report))
        lines.append("")
        lines += _table(["identity", "status", "failures", "checked"],
                        [[r.name, "pass" if r.passed else "FAIL",
                          str(len(r.failures)), str(r.checked)]
                         for r in w_report.results])
        _emit(lines)
    if failed:
        print("check failed: " + ", ".join(failed), file=sys.stderr)
        return 1
    return 0


def cmd_kms(args) -> int:
    ctx = Context(args.file)
    report = kms_check(ctx.weighted)
    H = ctx.base
    if args.format == "json":
        payload = {"checked": report.checked,
                   "failures": [{"q": H.arrow_names[q], "qp": H.arrow_names[qp],
                                 "lhs": str(lhs), "rhs": str(rhs)}
                                for (q, qp, lhs, rhs) in report.failures],
                   "ok": not report.failures}
        _emit_json(ctx.report("kms", payload))
    else:
        lines = ctx.header("kms")
        lines.append(f"checked pairs: {report.checked}")
        lines.append(f"failures: {len(report.failures)}")
        if report.failures:
            lines.append("")
            lines += _table(["q", "qp", "lhs", "rhs"],
                            [[H.arrow_names[q], H.arrow_names[qp], str(lhs), str(rhs)]
                             for (q, qp, lhs, rhs) in report.failures])
        _emit(lines)
    if report.failures:
        print("check failed: kms", file=sys.stderr)
        return 1
    return 0


def cmd_evolve(args) -> int:
    ctx = Context(args.file)
    H, W = ctx.base, ctx.weighted
    elem = parse_element(args.element, H.arrow_names)
    out = sigma(W, args.t, elem)
    rows = [[H.arrow_names[g], format_complex(out[g])] for g in sorted(out)]
    if args.format == "json":
        payload = {"t": args.t,
                   "element": format_element(elem, H.arrow_names),
                   "terms": [{"id": r[0], "value": r[1]} for r in rows]}
        _emit_json(ctx.report("evolve", payload))
    else:
        lines = ctx.header("evolve")
        lines.append(f"t: {args.t}")
        lines.append(f"element: {format_element(elem, H.arrow_names)}")
        lines.append("")
        lines += _table(["id", "coefficient"], rows)
        _emit(lines)
    return 0


def cmd_convolve(args) -> int:
    ctx = Context(args.file)
    H, W = ctx.base, ctx.weighted
    f = parse_element(args.f, H.arrow_names, allow_inf=True)
    g = parse_element(args.g, H.arrow_names, allow_inf=True)
    out = convolve_ext(W, f, g)
    rows = [[H.arrow_names[a], str(out[a])] for a in sorted(out)]
    if args.format == "json":
        payload = {"f": format_element(f, H.arrow_names),
                   "g": format_element(g, H.arrow_names),
                   "terms": [{"id": H.arrow_names[a], "value": extnat_to_json(out[a])}
                             for a in sorted(out)]}
        _emit_json(ctx.report("convolve", payload))
    else:
        lines = ctx.header("convolve")
        lines.append(f"f: {format_element(f, H.arrow_names)}")
        lines.append(f"g: {format_element(g, H.arrow_names)}")
        lines.append("")
        lines += _table(["id", "value"], rows)
        _emit(lines)
    return 0


def cmd_site(args) -> int:
    ctx = Context(args.file)
    Q = to_quantale(ctx.base)
    S = site(Q)
    names = [_elem_str(Q, q) for q in S.objects]
    counts = [[len(S.hom(q, q2)) for q2 in S.objects] for q in S.objects]
    if args.format == "json":
        payload = {"objects": [sorted(Q.atom_names[i] for i in q) for q in S.objects],
                   "hom_counts": counts}
        _emit_json(ctx.report("site", payload))
    else:
        lines = ctx.header("site")
        lines.append(f"objects: {len(S.objects)}")
        lines.append("")
        rows = [[names[i]] + [str(c) for c in row] for i, row in enumerate(counts)]
        lines += _table(["hom", *names], rows)
        _emit(lines)
    return 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperq",
        description="Weighted hypergroupoid algebras from group actions.")
    parser.add_argument("--version", action="version", version=f"hyperq {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file", help="input JSON file")
        p.add_argument("--format", choices=("table", "json"), default="table")
        p.set_defaults(func=func)
        return p

    add("atoms", cmd_atoms, "list the arrows of the realized hypergroupoid")
    add("algebra", cmd_algebra, "weights and structure constants")
    p = add("check", cmd_check, "quantale, hypergroupoid and weight identity checks")
    p.add_argument("--exhaustive", action="store_true",
                   help="check all element triples (gated by atom count)")
    p.add_argument("--samples", type=int, default=10_000,
                   help="sampled triples when not exhaustive")
    p.add_argument("--seed", type=int, default=0)
    add("kms", cmd_kms, "verify the KMS identity for the unit-supported weight")
    p = add("evolve", cmd_evolve, "apply the time evolution to an element")
    p.add_argument("--t", type=float, required=True)
    p.add_argument("--element", required=True, help="element literal, e.g. '2*[a1]'")
    p = add("convolve", cmd_convolve, "convolve two extended-natural functions")
    p.add_argument("--f", required=True)
    p.add_argument("--g", required=True)
    add("site", cmd_site, "objects and hom counts of the site of the quantale")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SchemaError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except HyperqError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
