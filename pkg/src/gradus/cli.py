"""Command line front end.

Every subcommand builds a graded root system from ``--type``/``--m`` and
``--cocharacter`` (or ``--degrees``, or a JSON ``--config``), runs one
pipeline and prints a table.  Output is deterministic: rows are emitted
in a fixed order and JSON keys are sorted.

Exit codes: 0 success, 2 a computed object failed an internal check,
3 bad input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import warnings
from typing import List, Optional, Sequence

from . import __version__
from .errors import GradusError, ParseError
from .laurent import as_field, format_field
from .rootsys import Grading, RootSystem, grading_from_config

EXIT_OK, EXIT_INVARIANT, EXIT_INPUT = 0, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(json.dumps({"error": "UsageError", "message": message}) + "\n")
        sys.exit(EXIT_INPUT)


class Table:
    def __init__(self, columns: Sequence[str], rows: List[list], payload: Optional[dict] = None):
        self.columns = list(columns)
        self.rows = rows
        self.payload = payload if payload is not None else {
            "rows": [dict(zip(self.columns, r)) for r in rows]}

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return json.dumps(self.payload, sort_keys=True, indent=2) + "\n"
        if fmt == "csv":
            buf = io.StringIO()
            w = csv.writer(buf, lineterminator="\n")
            w.writerow(self.columns)
            for r in self.rows:
                w.writerow([_cell(x) for x in r])
            return buf.getvalue()
        cells = [self.columns] + [[_cell(x) for x in r] for r in self.rows]
        widths = [max(len(row[i]) for row in cells) for i in range(len(self.columns))]
        lines = ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in cells]
        lines.insert(1, "  ".join("-" * w for w in widths))
        return "\n".join(lines) + "\n"


def _cell(x) -> str:
    if isinstance(x, (list, tuple)):
        return " ".join(_cell(y) for y in x)
    return str(x)


# ---------------------------------------------------------------------------
# building the system


def _split(text: str) -> List[str]:
    return [t for t in text.replace(",", " ").split() if t]


def grading_from_args(args) -> Grading:
    if args.config:
        text = args.config
        if not text.lstrip().startswith("{"):
            with open(text) as fh:
                text = fh.read()
        if args.type or args.cocharacter or args.degrees:
            raise ParseError("--config cannot be combined with --type, --cocharacter or --degrees")
        return grading_from_config(text)
    if not args.type:
        raise ParseError("a system is required: give --type or --config")
    cfg = {"cartan_type": args.type, "m": args.m}
    if args.cocharacter is not None:
        cfg["cocharacter"] = _split(args.cocharacter)
    if args.degrees is not None:
        cfg["degrees"] = _split(args.degrees)
    return grading_from_config(cfg)


def _modulus(text: str):
    t = text.strip().lower()
    if t in ("inf", "infinity", "∞"):
        return "inf"
    try:
        return int(t)
    except ValueError:
        raise argparse.ArgumentTypeError(f"modulus must be a positive integer or 'inf', not {text!r}")


def _signature_text(sig, m) -> list:
    if not isinstance(m, int):
        return [str(x) for x in sig]
    return [str(k) if w else f"({k},{k + m})" for k, w in sig]


def _render(x) -> str:
    return format_field(as_field(x))


# ---------------------------------------------------------------------------
# subcommands


def cmd_facets(args) -> Table:
    from .facets import alcove_classes, enumerate_rigid_orbits
    g = grading_from_args(args)
    if args.rigid:
        if not g.finite:
            from .bases import assemble_bases
            orbits = assemble_bases(g).orbits
        else:
            orbits = enumerate_rigid_orbits(g, args.bound)
        rows = [[k, _signature_text(o.representative.signature, g.m), [str(x) for x in o.representative.point],
                 len(o.members), o.d if o.d is not None else "", o.subsystem.system.n_roots]
                for k, o in enumerate(orbits)]
        return Table(["orbit", "signature", "point", "size", "d", "roots"], rows,
                     {"orbits": [o.to_json() for o in orbits]})
    if not g.finite:
        raise ParseError("alcove classes need a finite modulus; use --rigid for Z-gradings")
    classes = alcove_classes(g)
    rows = [[k, list(c.signature), [str(x) for x in c.representative]] for k, c in enumerate(classes)]
    return Table(["class", "signature", "point"], rows, {"classes": [c.to_json() for c in classes]})


def cmd_gram(args) -> Table:
    from .form import build_form_space
    V = build_form_space(grading_from_args(args))
    idx = V.orbit_reps if not args.full else list(range(V.family_size))
    rows = []
    for a in idx:
        for b in idx:
            if b >= a:
                rows.append([a, b, _render(V.gram_entry(a, b))])
    return Table(["i", "j", "value"], rows,
                 {"family": [str(list(V.signatures[i])) for i in idx],
                  "entries": [dict(zip(["i", "j", "value"], r)) for r in rows]})


def cmd_dim(args) -> Table:
    from .form import build_form_space
    V = build_form_space(grading_from_args(args))
    d = V.describe()
    return Table(["family_size", "dim", "radical_dim"], [[d["family_size"], d["dim"], d["radical_dim"]]], d)


def _family(args):
    from .bases import assemble_bases
    return assemble_bases(grading_from_args(args), args.bound)


def cmd_basis(args) -> Table:
    fam = _family(args)
    rows = []
    for k, (z, b, t) in enumerate(zip(fam.pbw, fam.canonical, fam.orbit_index)):
        rows.append([k, t, fam.orbits[t].d if fam.orbits[t].d is not None else "",
                     " ; ".join(z.to_json()), " ; ".join(b.to_json())])
    return Table(["element", "orbit", "d", "pbw", "canonical"], rows, fam.to_json())


def cmd_matrix(args) -> Table:
    fam = _family(args)
    rows = [[i] + [_render(x) for x in row] for i, row in enumerate(fam.transition)]
    cols = ["row"] + [str(j) for j in range(len(fam.transition))]
    return Table(cols, rows, {"transition": [[_render(x) for x in row] for row in fam.transition]})


def _levi(args, system: RootSystem):
    from .restrict import levi_from_point, levi_from_simple
    if args.levi_point is not None:
        return levi_from_point(system, _split(args.levi_point))
    S = list(system.simple)
    try:
        J = [int(x) for x in _split(args.levi or "")]
    except ValueError:
        raise ParseError("--levi takes 1-based simple root numbers")
    if any(not 1 <= j <= len(S) for j in J):
        raise ParseError(f"simple roots are numbered 1..{len(S)}")
    return levi_from_simple(system, [S[j - 1] for j in J])


def cmd_restrict(args) -> Table:
    from .bases import assemble_bases
    from .restrict import branching_constants
    g = grading_from_args(args)
    lev = _levi(args, g.system)
    fam = assemble_bases(g, args.bound)
    sub = assemble_bases(lev.sub_grading)
    tab = branching_constants(g, lev, fam, sub)
    rows = [[jp] + row for jp, row in enumerate(tab.constants)]
    cols = ["levi_element"] + [str(j) for j in range(len(fam.canonical))]
    payload = tab.to_json()
    payload["coefficients"] = [[str(c) for c in row] for row in tab.coefficients]
    return Table(cols, rows, payload)


def cmd_springer(args) -> Table:
    from .springer import load_table, match_bijection, omega_table
    fam = _family(args)
    g = fam.grading
    if g.finite and g.m == 1:
        table = None
        if args.table:
            with open(args.table) as fh:
                table = load_table(fh.read())
        m = match_bijection(fam, table)
        rows = [[r["element"], r["orbit"], r["d"], r["label"], r["b"]] for r in m.rows()]
        return Table(["element", "orbit", "d", "label", "b"], rows,
                     {"matching": m.rows(), "eta0": m.eta0})
    rows = []
    for ob in omega_table(fam):
        for k, lab in zip(ob.elements, ob.labels):
            d = fam.orbits[ob.orbit].d
            rows.append([k, ob.orbit, d if d is not None else "", str(lab)])
    return Table(["element", "orbit", "d", "label"], rows,
                 {"omega": [ob.to_json() for ob in omega_table(fam)]})


def cmd_verify(args) -> Table:
    from .golden import run_all
    results = run_all()
    rows = [[name, "pass" if ok else "FAIL", detail] for name, ok, detail in results]
    t = Table(["check", "status", "detail"], rows)
    t.failed = sum(1 for _, ok, _ in results if not ok)
    return t


COMMANDS = {
    "facets": (cmd_facets, "alcove classes, or rigid facet orbits with --rigid"),
    "gram": (cmd_gram, "the form on a spanning family"),
    "dim": (cmd_dim, "dimension of the space and of the radical"),
    "basis": (cmd_basis, "PBW and canonical bases"),
    "matrix": (cmd_matrix, "transition matrix between the two bases"),
    "restrict": (cmd_restrict, "branching constants for a Levi subsystem (modulus 1)"),
    "springer": (cmd_springer, "labelling by irreducible Weyl group representations"),
    "verify-examples": (cmd_verify, "replay the built-in worked examples"),
}


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="gradus", description="Canonical bases attached to graded root systems.")
    p.add_argument("--version", action="version", version=f"gradus {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, (_, help_text) in COMMANDS.items():
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("--format", choices=["json", "csv", "table"], default="table")
        sp.add_argument("--output", "-o", help="write here instead of standard output")
        sp.add_argument("--workers", type=int, default=1,
                        help="accepted for compatibility; output does not depend on it")
        if name == "verify-examples":
            continue
        sp.add_argument("--type", help="Cartan type such as A2, B2 or A1xA1")
        sp.add_argument("--m", type=_modulus, default=1, help="modulus: positive integer or 'inf'")
        sp.add_argument("--cocharacter", help="comma separated rationals, fundamental coweight coordinates")
        sp.add_argument("--degrees", help="degrees of all roots in the package's root order")
        sp.add_argument("--config", help="JSON object or path to a JSON file describing the system")
        sp.add_argument("--bound", type=int, default=None, help="search bound for rigid facets")
        if name == "facets":
            sp.add_argument("--rigid", action="store_true")
        if name == "gram":
            sp.add_argument("--full", action="store_true", help="every family member, not only orbit representatives")
        if name == "restrict":
            sp.add_argument("--levi", help="1-based simple roots generating the Levi, e.g. '1' or '1,2'")
            sp.add_argument("--levi-point", help="a point y' given by comma separated rationals")
        if name == "springer":
            sp.add_argument("--table", help="JSON file with irreducible representation data")
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    func = COMMANDS[args.command][0]
    try:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            table = func(args)
        for w in caught:
            sys.stderr.write(f"warning: {w.message}\n")
    except GradusError as exc:
        sys.stderr.write(json.dumps(exc.to_json(), sort_keys=True) + "\n")
        return exc.exit_code if exc.exit_code in (EXIT_INVARIANT, EXIT_INPUT) else EXIT_INVARIANT
    except (OSError, ValueError) as exc:
        sys.stderr.write(json.dumps({"error": type(exc).__name__, "message": str(exc)}) + "\n")
        return EXIT_INPUT
    text = table.render(args.format)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if getattr(table, "failed", 0):
        return EXIT_INVARIANT
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
