"""Command-line front end.

Every command prints human-readable text, a ``---`` separator, then
``key=value`` lines.  Exit codes: 0 property holds / success, 1 property
fails (witness printed), 2 input error, 3 resource budget exceeded.
"""

from __future__ import annotations

import argparse
import re
import sys
from dataclasses import dataclass, field

from . import constructions as C
from .checks import CHECKS, run_checks
from .core import BudgetExceeded, InputError, components, read_image, write_image
from .homology import dimension, euler_characteristic, homology, simplex_counts
from .invariants import degree, lefschetz_number
from .maps import DigitalMap, discontinuities, fixed_points, read_map
from .search import default_budget, has_afpp, has_fpp, is_dominating, is_universal

EXIT_OK, EXIT_FAILS, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


@dataclass
class Report:
    command: str
    text: list = field(default_factory=list)
    data: dict = field(default_factory=dict)
    exit_code: int = EXIT_OK

    def render(self) -> str:
        lines = [f"$ digitop {self.command}", *self.text, "---"]
        lines += [f"{k}={v}" for k, v in self.data.items()]
        return "\n".join(lines) + "\n"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def _fmt_point(p) -> str:
    return "(" + ",".join(map(str, p)) + ")"


def _map_lines(f: DigitalMap) -> list[str]:
    return [f"  {_fmt_point(x)} -> {_fmt_point(y)}" for x, y in f.as_dict().items()]


def _map_value(f: DigitalMap) -> str:
    return ";".join(f"{_fmt_point(x)}->{_fmt_point(y)}" for x, y in f.as_dict().items())


def _parse_point(text: str) -> tuple:
    try:
        return tuple(int(t) for t in text.replace(" ", ",").split(",") if t)
    except ValueError:
        raise InputError(f"cannot parse point {text!r}; use comma-separated integers") from None


def _budget(args) -> int:
    return args.budget if args.budget is not None else default_budget()


def cmd_components(args, rep):
    X = read_image(args.image)
    blocks = components(X)
    rep.text.append(f"{len(blocks)} component(s)")
    for k, b in enumerate(blocks):
        rep.text.append(f"  [{k}] " + " ".join(_fmt_point(X.points[i]) for i in b))
    rep.data["components"] = len(blocks)
    rep.data["sizes"] = ",".join(str(len(b)) for b in blocks)


def cmd_check_continuous(args, rep):
    f = read_map(args.map)
    bad = discontinuities(f)
    X = f.domain
    if bad:
        i, j = bad[0]
        rep.text.append("not continuous; adjacent points with distant images:")
        rep.text.append(f"  {_fmt_point(X.points[i])} -> {_fmt_point(f.codomain.points[f.table[i]])}")
        rep.text.append(f"  {_fmt_point(X.points[j])} -> {_fmt_point(f.codomain.points[f.table[j]])}")
        rep.exit_code = EXIT_FAILS
    else:
        rep.text.append("continuous")
    rep.data["continuous"] = "false" if bad else "true"
    rep.data["violations"] = len(bad)


def cmd_homology(args, rep):
    X = read_image(args.image)
    top = dimension(X) if args.max_dim is None else args.max_dim
    for q in range(top + 1):
        h = homology(X, q)
        rep.text.append(f"H_{q} = {h}")
        rep.data[f"H_{q}"] = str(h)
    rep.data["dim"] = dimension(X)


def cmd_euler(args, rep):
    X = read_image(args.image)
    alpha = simplex_counts(X)
    rep.text.append(f"alpha = {alpha}")
    rep.text.append(f"chi = {euler_characteristic(X)}, dim = {dimension(X)}")
    rep.data["euler"] = euler_characteristic(X)
    rep.data["dim"] = dimension(X)
    rep.data["alpha"] = ",".join(map(str, alpha))


def _self_map(path):
    f = read_map(path)
    if not f.is_self_map:
        raise InputError("expected a self-map (domain equal to codomain)")
    return f


def cmd_lefschetz(args, rep):
    f = _self_map(args.map)
    lam = lefschetz_number(f)
    fixed = fixed_points(f)
    rep.text.append(f"lambda = {lam}")
    rep.text.append(f"{len(fixed)} fixed point(s)")
    rep.data["lefschetz"] = lam
    rep.data["fixed_points"] = len(fixed)


def cmd_degree(args, rep):
    f = _self_map(args.map)
    d = degree(f, args.n)
    rep.text.append(f"H_{args.n} = {d.group}")
    rep.text.append(f"degree = {d}" if d.defined else f"degree undefined: H_{args.n} is not Z")
    rep.data["degree"] = str(d)
    rep.data[f"H_{args.n}"] = str(d.group)


def _verdict(rep, name, verdict, witness_label):
    rep.data[name] = "true" if verdict.holds else "false"
    if verdict.holds:
        rep.text.append(f"{name}: holds")
    else:
        rep.text.append(f"{name}: fails; {witness_label}:")
        rep.text.extend(_map_lines(verdict.witness))
        rep.data["witness"] = _map_value(verdict.witness)
        rep.exit_code = EXIT_FAILS


def cmd_fpp(args, rep):
    X = read_image(args.image)
    _verdict(rep, "fpp", has_fpp(X, cross_check=args.cross_check, budget=_budget(args)),
             "fixed-point-free continuous map")


def cmd_afpp(args, rep):
    X = read_image(args.image)
    _verdict(rep, "afpp", has_afpp(X, budget=_budget(args), jobs=args.jobs),
             "continuous map without approximate fixed points")


def cmd_universal(args, rep):
    f = read_map(args.map)
    _verdict(rep, "universal", is_universal(f, budget=_budget(args), jobs=args.jobs),
             "continuous map never equal or adjacent to f")


def cmd_dominating(args, rep):
    X = read_image(args.image)
    try:
        idx = [int(t) for t in args.subset.split(",") if t.strip()]
    except ValueError:
        raise InputError("--subset takes comma-separated point indices") from None
    if any(not 0 <= i < len(X) for i in idx):
        raise InputError("subset index out of range")
    S = [X.points[i] for i in idx]
    ok = is_dominating(S, X)
    rep.data["dominating"] = "true" if ok else "false"
    if ok:
        rep.text.append("dominating")
    else:
        covered = set()
        for i in idx:
            covered |= {i, *X.neighbors[i]}
        missed = [X.points[i] for i in range(len(X)) if i not in covered]
        rep.text.append("not dominating; uncovered points: " + " ".join(map(_fmt_point, missed)))
        rep.data["uncovered"] = len(missed)
        rep.exit_code = EXIT_FAILS


def cmd_construct(args, rep):
    p = args.params
    kind = args.kind

    def need(k):
        if len(p) != k:
            raise InputError(f"construct {kind} takes {k} parameter(s)")

    def ints():
        try:
            return [int(v) for v in p]
        except ValueError:
            raise InputError(f"construct {kind} takes integer parameters") from None

    if kind == "interval":
        need(2)
        X = C.interval(*ints())
    elif kind == "scc":
        need(1)
        X = C.scc(*ints())
    elif kind == "sphere":
        need(1)
        X = C.sphere(*ints())
    elif kind == "cube":
        if not p:
            raise InputError("construct cube takes one or more extents")
        X = C.cube(ints())
    elif kind == "wedge":
        need(4)
        X = C.wedge(read_image(p[0]), _parse_point(p[1]), read_image(p[2]), _parse_point(p[3])).image
    else:
        if not p:
            raise InputError("construct product takes one or more image files")
        X = C.product([read_image(v) for v in p])
    write_image(X, args.output)
    rep.text.append(f"wrote {kind} with {len(X)} points and {X.n_edges} edges to {args.output}")
    rep.data["points"] = len(X)
    rep.data["edges"] = X.n_edges


def cmd_paper_checks(args, rep):
    if args.only is not None and args.only not in CHECKS:
        raise InputError(f"unknown check id {args.only!r}; known: {', '.join(CHECKS)}")
    results = run_checks(args.only)
    for r in results:
        rep.text.append(f"{'PASS' if r.passed else 'FAIL'} {r.id}: {r.detail}")
        rep.data[r.id] = "PASS" if r.passed else "FAIL"
    failed = sum(not r.passed for r in results)
    rep.data["failed"] = failed
    if failed:
        rep.exit_code = EXIT_FAILS


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="digitop", description="Digital topology: fixed points, AFPP, homology.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def search_flags(sp):
        sp.add_argument("--budget", type=int, default=None,
                        help="search node budget (default: $DIGITOP_BUDGET or 10^8)")
        sp.add_argument("--jobs", type=int, default=1, help="worker processes for the search")

    sp = sub.add_parser("components", help="connected components of an image")
    sp.add_argument("image")
    sp.set_defaults(func=cmd_components)

    sp = sub.add_parser("check-continuous", help="digital continuity of a map")
    sp.add_argument("map")
    sp.set_defaults(func=cmd_check_continuous)

    sp = sub.add_parser("homology", help="homology groups of the clique complex")
    sp.add_argument("image")
    sp.add_argument("--max-dim", type=int, default=None)
    sp.set_defaults(func=cmd_homology)

    sp = sub.add_parser("euler", help="simplex counts, Euler characteristic, dimension")
    sp.add_argument("image")
    sp.set_defaults(func=cmd_euler)

    sp = sub.add_parser("lefschetz", help="Lefschetz number of a self-map")
    sp.add_argument("map")
    sp.set_defaults(func=cmd_lefschetz)

    sp = sub.add_parser("degree", help="degree of a sphere self-map")
    sp.add_argument("map")
    sp.add_argument("--n", type=int, required=True, help="sphere dimension")
    sp.set_defaults(func=cmd_degree)

    sp = sub.add_parser("fpp", help="fixed point property")
    sp.add_argument("image")
    sp.add_argument("--cross-check", action="store_true",
                    help="also confirm by searching for a fixed-point-free map")
    search_flags(sp)
    sp.set_defaults(func=cmd_fpp)

    sp = sub.add_parser("afpp", help="approximate fixed point property")
    sp.add_argument("image")
    search_flags(sp)
    sp.set_defaults(func=cmd_afpp)

    sp = sub.add_parser("universal", help="whether a map is universal")
    sp.add_argument("map")
    search_flags(sp)
    sp.set_defaults(func=cmd_universal)

    sp = sub.add_parser("dominating", help="whether a point subset is dominating")
    sp.add_argument("image")
    sp.add_argument("--subset", required=True, help="comma-separated point indices")
    sp.set_defaults(func=cmd_dominating)

    sp = sub.add_parser("construct", help="build a standard image and write it as DIGIMG")
    sp.add_argument("kind", choices=["interval", "scc", "sphere", "cube", "wedge", "product"])
    sp.add_argument("params", nargs="*")
    sp.add_argument("-o", "--output", required=True)
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("paper-checks", help="run the reproduction suite")
    sp.add_argument("--only", default=None, help="run a single check id")
    sp.set_defaults(func=cmd_paper_checks)
    return parser


def _echo(argv: list[str]) -> list[str]:
    """The command line minus ``--jobs``, so output does not depend on parallelism."""
    out, skip = [], False
    for a in argv:
        if skip:
            skip = False
        elif a == "--jobs":
            skip = True
        elif not a.startswith("--jobs="):
            out.append(a)
    return out


_NEGATIVE = re.compile(r"^-\d+(,-?\d+)*$")


def run(argv) -> Report:
    argv = list(argv)
    rep = Report(" ".join(_echo(argv)))
    if argv[:1] == ["construct"]:
        # argparse would read "-1,-1" as an option; a leading space keeps it positional.
        argv = [" " + a if _NEGATIVE.match(a) else a for a in argv]
    try:
        args = build_parser().parse_args(argv)
        if getattr(args, "jobs", 1) < 1:
            raise InputError("--jobs must be positive")
        if getattr(args, "budget", None) is not None and args.budget < 1:
            raise InputError("--budget must be positive")
        args.func(args, rep)
    except InputError as exc:
        rep.text.append(f"error: {exc}")
        rep.data["error"] = "input"
        rep.exit_code = EXIT_INPUT
    except BudgetExceeded as exc:
        rep.text.append(f"error: {exc}")
        rep.data["error"] = "budget"
        rep.exit_code = EXIT_BUDGET
    return rep


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    if argv and argv[0] in ("-h", "--help"):
        build_parser().print_help()
        return EXIT_OK
    rep = run(argv)
    stream = sys.stdout if rep.exit_code in (EXIT_OK, EXIT_FAILS) else sys.stderr
    stream.write(rep.render())
    return rep.exit_code


if __name__ == "__main__":
    sys.exit(main())
