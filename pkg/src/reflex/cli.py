"""Command-line interface: verify identities, print invariant tables, evaluate orders.

Exit codes: 0 all checks ok, 1 some check mismatched, 2 usage or parse error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
import time
from dataclasses import dataclass

SCHEMA_VERSION = 1


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# group specs

@dataclass(frozen=True)
class GroupSpec:
    kind: str          # 'monomial' | 'exceptional' | 'dihedral' | 'weyl'
    params: tuple
    affine: bool = False

    _MONO = re.compile(r"^G\((\d+),(\d+),(\d+)\)$")
    _EXC = re.compile(r"^G(\d+)$")
    _DIH = re.compile(r"^I2\((\d+)\)$")
    _WEYL = re.compile(r"^(~?)([A-G])(\d+)(~?)$")

    @classmethod
    def parse(cls, text: str) -> "GroupSpec":
        s = text.replace(" ", "")
        if m := cls._MONO.match(s):
            return cls("monomial", tuple(int(x) for x in m.groups()))
        if m := cls._EXC.match(s):
            return cls("exceptional", (int(m.group(1)),))
        if m := cls._DIH.match(s):
            return cls("dihedral", (int(m.group(1)),))
        if m := cls._WEYL.match(s):
            if m.group(1) and m.group(4):
                raise UsageError(f"cannot parse group spec {text!r}")
            return cls("weyl", (m.group(2), int(m.group(3))), bool(m.group(1) or m.group(4)))
        raise UsageError(f"cannot parse group spec {text!r}")

    def __str__(self) -> str:
        if self.kind == "monomial":
            return "G({},{},{})".format(*self.params)
        if self.kind == "exceptional":
            return f"G{self.params[0]}"
        if self.kind == "dihedral":
            return f"I2({self.params[0]})"
        return f"{self.params[0]}{self.params[1]}" + ("~" if self.affine else "")

    def reflection_group(self):
        from .groups import UnknownGroup, build_group
        if self.kind not in ("monomial", "exceptional"):
            raise UsageError(f"{self} is not a supported complex reflection group spec")
        try:
            return build_group(str(self))
        except (UnknownGroup, ValueError) as exc:
            raise UsageError(str(exc)) from exc


def _root_system(typ: str, rank: int):
    from .rootsys import build_root_system
    try:
        return build_root_system(typ, rank)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


# ---------------------------------------------------------------------------
# reports

class Report:
    def __init__(self, argv):
        self.command = list(argv)
        self.checks = []

    def add(self, name, ok, lhs=None, rhs=None, seconds=0.0, detail="", skipped=False, checks=None):
        rec = {"name": name, "status": "skipped" if skipped else ("ok" if ok else "mismatch"),
               "lhs": lhs, "rhs": rhs, "seconds": round(seconds, 3)}
        if detail:
            rec["detail"] = detail
        if checks is not None:
            rec["checks"] = checks
        self.checks.append(rec)

    @property
    def ok(self) -> bool:
        return all(c["status"] != "mismatch" for c in self.checks)

    def to_json(self):
        return {"schema_version": SCHEMA_VERSION, "command": self.command,
                "status": "ok" if self.ok else "mismatch", "checks": self.checks}

    def emit(self, as_json: bool, out):
        if as_json:
            json.dump(self.to_json(), out, indent=2, sort_keys=False)
            out.write("\n")
            return
        for c in self.checks:
            line = f"[{c['status']}] {c['name']}"
            if c["lhs"] is not None:
                line += f": {_show(c['lhs'])}"
                if c["rhs"] is not None:
                    line += f" {'=' if c['status'] == 'ok' else '!='} {_show(c['rhs'])}"
            if c.get("detail"):
                line += f"  ({c['detail']})"
            out.write(line + "\n")
        out.write(f"overall: {'ok' if self.ok else 'mismatch'}\n")


def _show(v):
    if isinstance(v, list):
        return ",".join(str(x) for x in v)
    return str(v)


def _timed(fn, *a, **k):
    t = time.time()
    r = fn(*a, **k)
    return r, time.time() - t


# ---------------------------------------------------------------------------
# verify

def _verify_solomon(args, rep: Report):
    from .series import invariant_table, lhs_solomon, poly_from_roots
    G = GroupSpec.parse(args.group).reflection_group()
    T = invariant_table(G)
    for signed in (False, True):
        lhs, dt = _timed(lhs_solomon, G, signed)
        rhs = poly_from_roots(T.coexponents, -1) if signed else poly_from_roots(T.exponents)
        ok = lhs == rhs[:len(lhs)] and not any(rhs[len(lhs):])
        rep.add(f"{G.name} {'signed' if signed else 'unsigned'}", ok, lhs, rhs[:max(len(lhs), 1)], dt,
                detail=f"{'e*' if signed else 'e'} = {T.coexponents if signed else T.exponents}")


def _verify_two_orbit(args, rep: Report):
    from .series import orbit_reps, verify_identity
    G = GroupSpec.parse(args.group).reflection_group()
    labels = [args.orbit] if args.orbit else G.orbit_labels
    for lab in labels:
        if lab not in G.orbits:
            raise UsageError(f"{G.name} has no orbit {lab!r} (orbits: {', '.join(G.orbit_labels)})")
        signs = {"both": (False, True), "signed": (True,), "unsigned": (False,)}[args.sign]
        for signed in signs:
            name = f"{G.name} orbit {lab} {'signed' if signed else 'unsigned'}"
            if orbit_reps(G, lab)[0] is None:
                rep.add(name, True, skipped=True, detail="orbit not well-restricted; no substitute")
                continue
            r, dt = _timed(verify_identity, G, lab, signed)
            if "error" in r:
                rep.add(name, False, detail=r["error"], seconds=dt)
                continue
            detail = f"pairing={r['pairing']}" + ("; substitute representation" if r["modified"] else "")
            rep.add(name, r["ok"], r["lhs"], r["rhs"], dt, detail=detail)


def _verify_weighted(args, rep: Report):
    from .weylpoincare import closed_form_finite, finite_weighted_poincare, macdonald_product
    Phi = _root_system(args.type, args.rank)
    lhs, dt = _timed(finite_weighted_poincare, Phi)
    rep.add(f"{Phi.label} sum = product", lhs == closed_form_finite(Phi), lhs, closed_form_finite(Phi), dt)
    rep.add(f"{Phi.label} sum = Macdonald product", lhs == macdonald_product(Phi), lhs, macdonald_product(Phi))


def _verify_affine(args, rep: Report):
    from .weylpoincare import (affine_rhs_corrected, affine_rhs_printed, affine_rhs_unweighted,
                               affine_weighted_series)
    Phi = _root_system(args.type, args.rank)
    if args.cutoff < 0:
        raise UsageError("--cutoff must be nonnegative")
    unit = args.rhs == "unit"
    lhs, dt = _timed(affine_weighted_series, Phi, args.cutoff, args.convention, unit)
    rhs = {"corrected": affine_rhs_corrected, "printed": affine_rhs_printed,
           "unit": affine_rhs_unweighted}[args.rhs](Phi, args.cutoff)
    rep.add(f"{Phi.label}~ to q^{args.cutoff} ({args.rhs} product, {args.convention} walls)",
            lhs == rhs, lhs, rhs, dt)


def _verify_dihedral(args, rep: Report):
    from .weylpoincare import dihedral_two_param
    b = args.b
    if args.group:
        g = GroupSpec.parse(args.group)
        if g.kind != "dihedral" or g.params[0] % 2:
            raise UsageError("dihedral check needs I2(2b)")
        b = g.params[0] // 2
    if b is None or b < 2:
        raise UsageError("need --b >= 2 or --group I2(2b)")
    r, dt = _timed(dihedral_two_param, b)
    rep.add(f"I2({2 * b}) two-parameter series", r["bivariate_ok"], r["bivariate"], None, dt)
    rep.add(f"I2({2 * b}) specialization q1=q^{b}, q2=q", r["specialized_ok"], r["specialized"],
            r["specialized_rhs"])


def _verify_all(args, rep: Report):
    from .acceptance import affine_supplementary, run_all
    nums = None
    if args.criteria:
        try:
            nums = sorted({int(x) for x in args.criteria.split(",")})
        except ValueError as exc:
            raise UsageError(f"bad --criteria {args.criteria!r}") from exc
        if any(k < 1 or k > 11 for k in nums):
            raise UsageError("criteria are numbered 1..11")
    progress = None if args.json else (lambda R: print(R.line(), file=sys.stderr, flush=True))
    for R in run_all(nums, progress):
        rep.add(f"criterion {R.number}: {R.title}", R.ok, seconds=R.seconds,
                detail=f"{len(R.checks) - len(R.failures)}/{len(R.checks)} checks",
                checks=[c.to_json() for c in R.checks])
    if nums is None:
        R = affine_supplementary()
        rep.add(f"supplementary: {R.title}", R.ok, detail=f"{len(R.checks)} checks",
                checks=[c.to_json() for c in R.checks])


VERIFY = {"solomon": _verify_solomon, "two-orbit": _verify_two_orbit, "weighted": _verify_weighted,
          "affine": _verify_affine, "dihedral": _verify_dihedral, "all": _verify_all}


def cmd_verify(args, argv, out) -> int:
    rep = Report(argv)
    VERIFY[args.check](args, rep)
    rep.emit(args.json, out)
    return 0 if rep.ok else 1


# ---------------------------------------------------------------------------
# tables

def _reflexponent_rows(groups):
    from .series import invariant_table
    rows = []
    for spec in groups:
        G = GroupSpec.parse(spec).reflection_group()
        T = invariant_table(G)
        row = {"group": G.name, "exponents": sorted(T.exponents),
               "coexponents": sorted(T.coexponents, reverse=True), "orbits": {}}
        for lab, o in sorted(T.orbits.items()):
            if not o.reflexponents:
                row["orbits"][lab] = None
                continue
            row["orbits"][lab] = {"reflexponents": sorted(o.reflexponents),
                                  "coreflexponents": sorted(o.coreflexponents, reverse=True),
                                  "extension": o.modified}
        rows.append(row)
    return rows


def _default_table_groups():
    from .acceptance import published_rows
    return [r[0] for r in published_rows()]


def _short_exponent_rows(max_rank):
    from .rootsys import exponents_from_heights, short_exponents
    rows = []
    for typ, ranks in (("B", range(2, max_rank + 1)), ("C", range(2, max_rank + 1)), ("F", (4,)), ("G", (2,))):
        for n in ranks:
            Phi = _root_system(typ, n)
            rows.append({"type": Phi.label, "r": Phi.r, "exponents": exponents_from_heights(Phi),
                         "short_exponents": short_exponents(Phi)})
    return rows


def _degree_rows(groups):
    from .series import invariant_table
    from .weylpoincare import degrees
    rows = []
    for spec in groups:
        g = GroupSpec.parse(spec)
        if g.kind == "weyl":
            Phi = _root_system(*g.params)
            rows.append({"group": Phi.label, "degrees": degrees(Phi)})
        else:
            T = invariant_table(g.reflection_group())
            rows.append({"group": T.name, "degrees": sorted(T.degrees)})
    return rows


def _fmt_list(v):
    return ",".join(str(x) for x in v)


def _render(table, rows, fmt, out):
    if fmt == "json":
        json.dump({"schema_version": SCHEMA_VERSION, "table": table, "rows": rows}, out, indent=2)
        out.write("\n")
        return
    flat = []
    for r in rows:
        if table == "reflexponents":
            base = {"group": r["group"], "e": _fmt_list(r["exponents"]), "e*": _fmt_list(r["coexponents"])}
            for lab in ("s", "t", "u"):
                o = r["orbits"].get(lab, "")
                if o is None:
                    base[lab], base[lab + "*"] = "*", "*"
                elif o:
                    tag = " (extension)" if o["extension"] and fmt == "plain" else ""
                    base[lab] = _fmt_list(o["reflexponents"]) + tag
                    base[lab + "*"] = _fmt_list(o["coreflexponents"])
                    if fmt == "csv":
                        base[lab + " extension"] = str(o["extension"]).lower()
                else:
                    base[lab] = base[lab + "*"] = ""
                    if fmt == "csv":
                        base[lab + " extension"] = ""
            flat.append(base)
        else:
            flat.append({k: _fmt_list(v) if isinstance(v, list) else v for k, v in r.items()})
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=list(flat[0]), lineterminator="\n")
        w.writeheader()
        w.writerows(flat)
        out.write(buf.getvalue())
        return
    if table == "reflexponents":
        for r in flat:
            parts = [f"{r['group']:<10} e: {r['e']} / {r['e*']}"]
            for lab in ("s", "t", "u"):
                if r[lab]:
                    parts.append(f"{lab}: {r[lab]} / {r[lab + '*']}")
            out.write("  ".join(parts) + "\n")
        return
    keys = list(flat[0])
    widths = {k: max(len(k), *(len(str(r[k])) for r in flat)) for k in keys}
    out.write("  ".join(k.ljust(widths[k]) for k in keys).rstrip() + "\n")
    for r in flat:
        out.write("  ".join(str(r[k]).ljust(widths[k]) for k in keys).rstrip() + "\n")


def cmd_table(args, argv, out) -> int:
    if args.table == "reflexponents":
        rows = _reflexponent_rows([args.group] if args.group else _default_table_groups())
    elif args.table == "short-exponents":
        if args.max_rank < 2:
            raise UsageError("--max-rank must be >= 2")
        rows = _short_exponent_rows(args.max_rank)
    else:
        if not args.group:
            raise UsageError("table degrees needs --group")
        rows = _degree_rows([args.group])
    _render(args.table, rows, args.format, out)
    return 0


# ---------------------------------------------------------------------------
# orders

def cmd_order(args, argv, out) -> int:
    from .weylpoincare import chevalley_order, chevalley_order_classical
    if args.q < 2:
        raise UsageError("--q must be >= 2")
    twisted = args.twisted.replace("^", "").replace("_", "").upper()
    if args.rank is not None:
        if twisted in ("2A", "2D"):
            twisted += str(args.rank)
        elif twisted[2:] != str(args.rank):
            raise UsageError(f"--rank {args.rank} does not match {args.twisted}")
    try:
        value = chevalley_order(twisted, args.q)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    rep = Report(argv)
    if args.check:
        oracle = chevalley_order_classical(twisted, args.q)
        rep.add(f"{twisted} q={args.q} oracle", value == oracle, str(value), str(oracle))
    if args.json:
        doc = rep.to_json()
        doc["value"] = str(value)
        json.dump(doc, out, indent=2)
        out.write("\n")
    else:
        out.write(f"{value}\n")
        if args.check:
            out.write(f"oracle {'ok' if rep.ok else 'mismatch'}: {rep.checks[0]['rhs']}\n")
    return 0 if rep.ok else 1


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="reflex", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="cmd", required=True)

    v = sub.add_parser("verify", help="verify identities")
    vs = v.add_subparsers(dest="check", required=True)

    def with_json(sp):
        sp.add_argument("--json", action="store_true", help="emit a JSON report")
        return sp

    with_json(vs.add_parser("solomon", help="exponent identity")).add_argument("--group", required=True)
    t = with_json(vs.add_parser("two-orbit", help="two-variable identity for a hyperplane orbit"))
    t.add_argument("--group", required=True)
    t.add_argument("--orbit", help="orbit label (default: all)")
    t.add_argument("--sign", choices=("both", "signed", "unsigned"), default="both")
    w = with_json(vs.add_parser("weighted", help="finite weighted Poincare polynomial"))
    w.add_argument("--type", required=True)
    w.add_argument("--rank", type=int, required=True)
    a = with_json(vs.add_parser("affine", help="affine weighted Poincare series"))
    a.add_argument("--type", required=True)
    a.add_argument("--rank", type=int, required=True)
    a.add_argument("--cutoff", type=int, default=12)
    a.add_argument("--rhs", choices=("corrected", "printed", "unit"), default="corrected")
    a.add_argument("--convention", choices=("coroot", "root"), default="coroot")
    d = with_json(vs.add_parser("dihedral", help="two-parameter dihedral series"))
    d.add_argument("--b", type=int)
    d.add_argument("--group", help="I2(2b)")
    al = with_json(vs.add_parser("all", help="run the acceptance suite"))
    al.add_argument("--criteria", help="comma-separated criterion numbers (default: all)")

    tb = sub.add_parser("table", help="print invariant tables")
    tb.add_argument("table", choices=("reflexponents", "short-exponents", "degrees"))
    tb.add_argument("--group")
    tb.add_argument("--max-rank", type=int, default=4)
    tb.add_argument("--format", choices=("plain", "csv", "json"), default="plain")

    o = sub.add_parser("order", help="twisted Chevalley group order")
    o.add_argument("--twisted", required=True, help="2A, 2D, 2E6 or 3D4 (2A/2D also accept e.g. 2A5)")
    o.add_argument("--rank", type=int, help="rank of the twisted type: 2A_k (k odd), 2D_k (k >= 3)")
    o.add_argument("--q", type=int, required=True)
    o.add_argument("--check", action="store_true", help="compare with the classical order formula")
    o.add_argument("--json", action="store_true")
    return p


def main(argv=None, out=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return {"verify": cmd_verify, "table": cmd_table, "order": cmd_order}[args.cmd](args, argv, out)
    except UsageError as exc:
        print(f"reflex: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
