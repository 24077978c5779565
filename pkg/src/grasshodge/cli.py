"""Command-line front end.

Exit codes: 0 success, 1 a verification failed, 2 invalid input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from dataclasses import dataclass, field
from math import comb
from typing import Any, Sequence

from . import exceptional, motive, schubert, sections
from .hodge import HodgePolynomial
from .tables import TABLE_ONE
from .twisted import grassmannian_diamond, twisted_form_cohomology

OK, FAILED, INVALID = 0, 1, 2
_INNER_LIST = re.compile(r"\[\n\s+([^\[\]{}]*?)\n\s*\]")
STATUS = {OK: "ok", FAILED: "verification_failed", INVALID: "invalid_input"}


@dataclass
class Check:
    name: str
    status: str  # "pass" | "fail" | "info"
    details: str = ""

    def as_dict(self) -> dict[str, str]:
        return {"name": self.name, "status": self.status, "details": self.details}


@dataclass
class Report:
    command: str
    status: str = "ok"
    variety: str = ""
    dimension: int | None = None
    hodge: list[list[Any]] = field(default_factory=list)
    checks: list[Check] = field(default_factory=list)
    results: dict[str, Any] = field(default_factory=dict)

    def add(self, name: str, ok: bool | None, details: str = "") -> None:
        status = "info" if ok is None else ("pass" if ok else "fail")
        self.checks.append(Check(name, status, details))

    @property
    def failed(self) -> bool:
        return any(c.status == "fail" for c in self.checks)

    def set_diamond(self, variety: str, poly: HodgePolynomial) -> None:
        self.variety = variety
        self.dimension = poly.dim
        self.hodge = [[p, q, str(h)] for (p, q), h in poly.items()]

    def as_dict(self) -> dict[str, Any]:
        return {
            "command": self.command,
            "status": self.status,
            "variety": self.variety,
            "dimension": self.dimension,
            "hodge": self.hodge,
            "checks": [c.as_dict() for c in self.checks],
            "results": self.results,
        }

    def to_json(self) -> str:
        text = json.dumps(self.as_dict(), indent=2)
        # keep innermost scalar lists such as [p, q, "h"] on one line
        return _INNER_LIST.sub(lambda m: "[" + ", ".join(x.strip() for x in m.group(1).split(",\n")) + "]", text) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "Report":
        data = json.loads(text)
        return cls(
            command=data["command"],
            status=data["status"],
            variety=data["variety"],
            dimension=data["dimension"],
            hodge=[list(t) for t in data["hodge"]],
            checks=[Check(**c) for c in data["checks"]],
            results=data["results"],
        )

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["section", "key", "value"])
        w.writerow(["meta", "command", self.command])
        w.writerow(["meta", "status", self.status])
        if self.variety:
            w.writerow(["meta", "variety", self.variety])
        if self.dimension is not None:
            w.writerow(["meta", "dimension", self.dimension])
        for p, q, h in self.hodge:
            w.writerow(["hodge", f"{p},{q}", h])
        for c in self.checks:
            w.writerow(["check", c.name, f"{c.status}: {c.details}" if c.details else c.status])
        for key, value in _flatten(self.results):
            w.writerow(["result", key, value])
        return buf.getvalue()

    def to_markdown(self) -> str:
        lines = [f"# {self.variety or self.command}", ""]
        if self.hodge:
            poly = HodgePolynomial({(p, q): int(h) for p, q, h in self.hodge}, self.dimension)
            lines += ["| weight | Hodge numbers |", "|---:|:---|"]
            for w, row in sections.lefschetz_rows(poly).items():
                lines.append(f"| {w} | {' '.join(str(h) for h in row)} |")
            lines.append("")
        if self.checks:
            lines += ["| check | status | details |", "|:---|:---|:---|"]
            for c in self.checks:
                lines.append(f"| {c.name} | {c.status} | {c.details} |")
            lines.append("")
        if self.results:
            lines += ["| result | value |", "|:---|:---|"]
            for key, value in _flatten(self.results):
                lines.append(f"| {key} | {value} |")
            lines.append("")
        lines.append(f"status: {self.status}")
        return "\n".join(lines) + "\n"

    def render(self, fmt: str) -> str:
        return {"json": self.to_json, "csv": self.to_csv, "md": self.to_markdown}[fmt]()


def _flatten(obj: Any, prefix: str = ""):
    if isinstance(obj, dict):
        for k, v in obj.items():
            yield from _flatten(v, f"{prefix}.{k}" if prefix else str(k))
    elif isinstance(obj, list):
        for i, v in enumerate(obj):
            yield from _flatten(v, f"{prefix}[{i}]")
    else:
        yield prefix, obj


def _strs(obj: Any) -> Any:
    """Integers become decimal strings; containers are converted recursively."""
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, dict):
        return {str(k): _strs(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_strs(v) for v in obj]
    return str(obj)


# -- command implementations ---------------------------------------------------------


def cmd_twisted(r: Report, a) -> None:
    table = twisted_form_cohomology(a.k, a.n, a.j, a.i)
    r.variety = f"Omega^{a.j}(-{a.i}) on Gr({a.k},{a.n})"
    r.dimension = a.k * (a.n - a.k)
    r.results = _strs({"cohomology": table.as_dict(), "euler": table.euler()})


def cmd_grass(r: Report, a) -> None:
    poly = grassmannian_diamond(a.k, a.n)
    r.set_diamond(f"Gr({a.k},{a.n})", poly)
    r.add("euler = C(n,k)", poly.total() == comb(a.n, a.k), f"{poly.total()}")


def _parse_cy(text: str) -> tuple[int, int]:
    try:
        j, level = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected J,LEVEL, got {text!r}") from None
    return j, level


def cmd_section(r: Report, a) -> None:
    y = sections.section_diamond(a.k, a.n)
    r.set_diamond(f"hyperplane section of Gr({a.k},{a.n})", y)
    r.add("Hodge symmetry and Poincare duality", y.is_hodge_symmetric() and y.satisfies_duality(y.dim))
    r.results = _strs({"euler": y.euler(), "cy_levels": [list(t) for t in sections.cy_levels(y)]})
    if a.cy is not None:
        j, level = a.cy
        r.add(f"H^{j} of {level}-Calabi-Yau type", sections.cy_type(y, j, level))
    if a.vanishing:
        van = sections.vanishing_part(a.k, a.n)
        r.results["vanishing"] = [[p, q, str(h)] for (p, q), h in van.items()]


DERIVE_NAMES = ("T2_10", "P1_10", "Y1", "Y2", "W", "IGr_3_8")


def cmd_derive(r: Report, a) -> None:
    cls = motive.solve_relation(a.name)
    r.set_diamond(cls.label or a.name, cls.poly)
    rel = motive.RELATIONS.get(a.name)
    r.results = _strs({"relation": rel.text if rel else "product formula", "euler": cls.euler()})
    key = {"T2_10": "T", "P1_10": "P", "Y1": "Y1", "Y2": "Y2"}.get(a.name)
    if key:
        expected = TABLE_ONE[key]["rows"]
        got = sections.lefschetz_rows(cls.poly)
        r.add(f"table column {key}", got == expected, _row_text(got))
    if a.name == "W":
        w = cls.poly
        r.add("chi(W) = 0", w.euler() == 0, str(w.euler()))
        vals = [w[(2, 3)], w[(3, 4)], w[(4, 5)]]
        r.add("h^{2,3} = h^{3,4} = h^{4,5} = 2", vals == [2, 2, 2], str(vals))
    if a.name == "IGr_3_8":
        oracle = motive.igr_class_by_cosets(3, 4)
        r.add("Weyl coset enumeration", oracle == cls.poly, f"total {oracle.total()}")


def _row_text(rows: dict[int, list[int]]) -> str:
    return "; ".join(" ".join(map(str, v)) for v in rows.values())


def cmd_schubert(r: Report, a) -> None:
    n = a.n
    if a.what == "class":
        cls = schubert.fundamental_class_T2(n)
        r.variety = f"[T(2,{n})] in Gr(2,{n})"
        r.results = _strs({"class": {f"{x},{y}": c for (x, y), c in cls.coeffs}, "text": str(cls)})
        r.add("non-negative coefficients", all(c > 0 for _, c in cls.coeffs))
        r.add("agrees with the sigma_{1,1} form", cls == schubert.fundamental_class_T2_factored(n))
    elif a.what == "degree":
        deg = schubert.degree_T2(n)
        r.variety = f"T(2,{n})"
        r.results = _strs({"degree": deg, "closed_forms": schubert.closed_form_report(n)})
        r.add("degree bound C(2n-7,n-4)", deg <= comb(2 * n - 7, n - 4), f"{deg}")
        if n <= 10:
            tab = schubert.degree_by_tableaux(n)
            r.add("skew tableaux oracle", tab == deg, str(tab))
    elif a.what == "index":
        res = schubert.index_check(n)
        r.variety = f"T(2,{n})"
        r.results = _strs({"index_is_3": res.index_is_3, "degree": res.degree, "witnesses": res.witnesses})
        r.add("index 3", res.index_is_3)
    elif a.what == "numbers":
        r.variety = f"T(2,{n})"
        rep = schubert.closed_form_report(n)
        r.results = _strs({"a_n": schubert.a_n(n), "b_n": schubert.b_n(n), "closed_forms": rep})
        for name, row in rep.items():
            r.add(f"{name} closed form vs oracle", None, f"delta {row['delta']}")


def _verify_table1(r: Report, a) -> None:
    for key, entry in TABLE_ONE.items():
        src = entry["source"]
        poly = sections.section_diamond(*src[1:]) if src[0] == "section" else motive.solve_relation(src[1]).poly
        got = sections.lefschetz_rows(poly)
        r.add(f"column {key}", got == entry["rows"], _row_text(got))


def _verify_collections(r: Report, a) -> None:
    for name in ("T", "P", "W"):
        rep = exceptional.verify_collection(name, jobs=a.jobs)
        bad = [f"Ext({c.source},{c.target}): {c.verdict}" for c in rep.checks if not c.passed]
        detail = f"{len(rep.objects)} objects, {len(rep.checks)} checks, {rep.inconclusive} inconclusive"
        if bad:
            detail += "; " + "; ".join(bad)
        r.add(f"collection {name}", rep.passed, detail)
        r.results[name] = [[c.source, c.target, c.kind, str(c.verdict)] for c in rep.checks]


def _verify_lemma_van(r: Report, a) -> None:
    rep = exceptional.lemma_van_check()
    r.add("all graded pieces acyclic for q > 0", rep.passed, f"{len(rep.factors)} factors")
    r.results = _strs({"factors_per_q": rep.counts, "failures": [f.label for f in rep.failures]})


def _verify_coble_fiber(r: Report, a) -> None:
    for dim in (7, 8):
        rep = exceptional.coble_fiber_check(dim)
        r.add(rep.name, rep.passed, "; ".join(f.label for f in rep.failures))


def _verify_counts(r: Report, a) -> None:
    expected = {
        "Y": 108, "A.blowup": 300, "A.projection": 252, "B.blowup": 66,
        "C.bundle": 324, "C.jump": 315, "D.blowup": 10,
    }
    for node, value in expected.items():
        got = motive.count_exceptional(node)
        r.add(f"count {node}", got == value, str(got))
    bad = []
    for k in range(3, 7):
        for n in range(3 * k + 1, 21):
            if motive.count_exceptional(f"jump({k},{n})") != comb(n - 1, k - 2):
                bad.append(f"({k},{n})")
    r.add("a - b = C(n-1,k-2)", not bad, ", ".join(bad))
    for z1 in (22, 24):
        for name, (left, right) in motive.diagram_balance(z1).items():
            r.add(f"balance {name} (Z_1 with {z1})", None, f"{left} vs {right}")


def _verify_hodge_jump(r: Report, a) -> None:
    if a.k is None or a.n is None:
        raise ValueError("hodge-jump needs k and n")
    res = motive.hodge_jump_identity_check(a.k, a.n)
    r.add(f"jump identity for ({a.k},{a.n})", res.ok, "; ".join(res.details))
    if res.z is not None:
        r.set_diamond(f"congruence from Gr({a.k},{a.n})", res.z)


VERIFY = {
    "table1": _verify_table1,
    "collections": _verify_collections,
    "lemma-van": _verify_lemma_van,
    "coble-fiber": _verify_coble_fiber,
    "counts": _verify_counts,
    "hodge-jump": _verify_hodge_jump,
}


def cmd_verify(r: Report, a) -> None:
    r.variety = a.what
    VERIFY[a.what](r, a)


# -- argument parsing -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "md"), default="json")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for independent checks")
    common.add_argument("--out", metavar="FILE", help="write the report here instead of stdout")

    parser = argparse.ArgumentParser(prog="grasshodge", description=__doc__)
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("twisted", parents=[common], help="H^*(Gr(k,n), Omega^j(-i))")
    for name in ("k", "n", "j", "i"):
        p.add_argument(name, type=int)
    p.set_defaults(func=cmd_twisted)

    p = sub.add_parser("grass", parents=[common], help="Hodge diamond of Gr(k,n)")
    p.add_argument("k", type=int)
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_grass)

    p = sub.add_parser("section", parents=[common], help="hyperplane section of Gr(k,n)")
    p.add_argument("k", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--cy", type=_parse_cy, metavar="J,LEVEL")
    p.add_argument("--vanishing", action="store_true")
    p.set_defaults(func=cmd_section)

    p = sub.add_parser("derive", parents=[common], help="solve a registered relation")
    p.add_argument("name", choices=DERIVE_NAMES)
    p.set_defaults(func=cmd_derive)

    p = sub.add_parser("schubert", parents=[common], help="Schubert calculus for T(2,n)")
    p.add_argument("what", choices=("class", "degree", "index", "numbers"))
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_schubert)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("what", choices=tuple(VERIFY))
    p.add_argument("k", type=int, nargs="?")
    p.add_argument("n", type=int, nargs="?")
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return INVALID if exc.code else OK
    if args.jobs < 1:
        print(parser.format_usage().rstrip(), file=stderr)
        print("error: --jobs must be positive", file=stderr)
        return INVALID
    report = Report(command=" ".join(_echo(argv)))
    try:
        args.func(report, args)
    except (ValueError, KeyError, ArithmeticError) as exc:
        print(parser.format_usage().rstrip(), file=stderr)
        print(f"error: {exc}", file=stderr)
        return INVALID
    code = FAILED if report.failed else OK
    report.status = STATUS[code]
    text = report.render(args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return code


def _echo(argv: list[str]) -> list[str]:
    """The command line minus options that do not change the report."""
    out, skip = [], False
    for tok in argv:
        if skip:
            skip = False
        elif tok in ("--jobs", "--out"):
            skip = True
        elif not tok.startswith(("--jobs=", "--out=")):
            out.append(tok)
    return out


def main() -> None:
    sys.exit(run())
