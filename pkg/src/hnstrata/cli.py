"""``hn``: command-line front end.

JSON on stdout by default (``--text`` for aligned text).  Exit codes:
0 ok, 1 a ``verify`` sweep failed, 2 bad input, 64 unknown subcommand,
65 malformed JSON, 69 Weyl group larger than the cap (``HN_CAP``).
"""

from __future__ import annotations

import argparse
import contextlib
import json
import os
import sys
from fractions import Fraction
from typing import List, Optional, Sequence

from . import __version__, bruhat, lattice, p1, reps, slope, strata, verify
from .rootdata import CapExceededError, RootDatum, build_named, from_json
from .slope import fmt

EX_OK = 0
EX_FAIL = 1
EX_INPUT = 2
EX_USAGE = 64
EX_DATAERR = 65
EX_UNAVAILABLE = 69

COMMANDS = ("datum", "slope", "bruhat", "weights", "strata", "p1", "verify")


class InputError(ValueError):
    pass


# -- parsing helpers -------------------------------------------------------------


def int_list(s: str) -> tuple:
    s = s.strip().strip("[]()")
    if not s:
        return ()
    try:
        return tuple(int(x) for x in s.replace(" ", "").split(","))
    except ValueError:
        raise InputError(f"expected comma-separated integers, got {s!r}") from None


def rational_list(s: str) -> tuple:
    s = s.strip().strip("[]()")
    if not s:
        return ()
    try:
        return tuple(Fraction(x) for x in s.replace(" ", "").split(","))
    except ValueError:
        raise InputError(f"expected comma-separated rationals, got {s!r}") from None


def load_json(text: str):
    """Inline JSON, or ``@path`` to read it from a file."""
    if text.startswith("@"):
        try:
            with open(text[1:], encoding="utf-8") as fh:
                text = fh.read()
        except OSError as e:
            raise InputError(f"cannot read {text[1:]}: {e.strerror}") from None
    return json.loads(text)


def weyl_cap() -> dict:
    raw = os.environ.get("HN_CAP")
    if raw is None:
        return {}
    try:
        cap = int(raw)
    except ValueError:
        raise InputError(f"HN_CAP must be an integer, got {raw!r}") from None
    if cap < 1:
        raise InputError("HN_CAP must be positive")
    return {"weyl_cap": cap}


def datum_from_args(args) -> RootDatum:
    kw = weyl_cap()
    if getattr(args, "datum", None):
        obj = load_json(args.datum)
        if not isinstance(obj, dict):
            raise InputError("root datum JSON must be an object")
        return from_json(obj, **kw)
    return build_named(args.named, **kw)


def add_datum_args(p: argparse.ArgumentParser, default: Optional[str] = None):
    g = p.add_mutually_exclusive_group(required=default is None)
    g.add_argument("--named", default=default, help='named group, e.g. "GL:3", "SL(2)", "PGL:2", "SC:B2", "Adjoint(G2)"')
    g.add_argument("--datum", help="root datum JSON (inline or @file)")


# -- output ---------------------------------------------------------------------


def _scalar(v) -> str:
    if isinstance(v, (dict, list)):
        return json.dumps(v)
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def render_text(obj) -> str:
    if isinstance(obj, dict):
        if not obj:
            return ""
        width = max(len(str(k)) for k in obj)
        return "\n".join(f"{str(k).ljust(width)}  {_scalar(v)}" for k, v in obj.items())
    if isinstance(obj, list):
        return "\n\n".join(render_text(x) for x in obj)
    return _scalar(obj)


def emit(obj, args, out) -> None:
    if isinstance(obj, str) and not getattr(args, "text", False) and getattr(args, "raw", False):
        out.write(obj)
        return
    if getattr(args, "text", False):
        out.write(render_text(obj) + "\n")
    else:
        out.write(json.dumps(obj) + "\n")


# -- commands -------------------------------------------------------------------


def cmd_datum(args):
    rd = datum_from_args(args)
    full = lattice.quotient_lattice(rd, rd.index_set)
    out = {
        "name": rd.name,
        "rank": rd.rank,
        "semisimple_rank": rd.semisimple_rank,
        "cartan_type": "x".join(f"{l}{r}" for l, r in rd.cartan_components()) or "trivial",
        "cartan": [list(r) for r in rd.cartan],
        "simple_roots": [list(r) for r in rd.simple_roots],
        "simple_coroots": [list(c) for c in rd.simple_coroots],
        "positive_roots": [list(r) for r in rd.positive_roots],
        "positive_coroots": [list(r) for r in rd.positive_coroots],
        "weyl_order": rd.weyl_order(),
        "center_lattice": {"free_rank": full.free_rank, "torsion": list(full.torsion_invariants)},
    }
    if args.weyl:
        out["weyl_group"] = [list(w.word) for w in rd.weyl_group]
    return out


def cmd_slope(args):
    rd = datum_from_args(args)
    I_M = rd.check_subset(int_list(args.IM))
    c = lattice.coerce_class(rd, I_M, int_list(args.degree))
    s = slope.phi(rd, I_M, c)
    out = {"phi": [fmt(x) for x in s.coords], "dominant_P_regular": slope.is_dominant_P_regular(s)}
    if args.verbose:
        out["failures"] = slope.regularity_failures(s)
        out["lambda_G"] = strata.induced_class(rd, c).to_json()
        out["phi_G"] = [fmt(x) for x in slope.phi_G(rd, strata.induced_class(rd, c)).coords]
        out["proj"] = {str(i): fmt(x) for i, x in slope.proj_P(rd, I_M, c).coefficients}
        out["positive_class"] = lattice.positive_class(c.lattice, c)
    return out


def cmd_bruhat(args):
    rd = datum_from_args(args)
    setup = bruhat.CosetSetup(rd, int_list(args.M1), int_list(args.M2))
    if args.w is not None:
        ws = [rd.element(int_list(args.w))]
    else:
        ws = bruhat.min_reps(setup)
    rows = []
    for w in ws:
        lp = bruhat.deeper_levi_sets(setup, w)
        rows.append(
            {
                "w": list(w.word),
                "I_L1": list(lp.I_L1),
                "I_L2": list(lp.I_L2),
                "identities": bruhat.verify_root_identities(setup, w),
            }
        )
    return {"I_M1": list(setup.I_M1), "I_M2": list(setup.I_M2), "count": len(rows), "reps": rows}


def cmd_weights(args):
    rd = datum_from_args(args)
    if args.multiset:
        V = reps.multiset_from_json(rd, load_json(args.multiset))
    else:
        V = reps.weyl_weights(rd, int_list(args.highest))
    out = {"dim": V.dim, "multiset": V.to_json()}
    if not args.multiset:
        out["weyl_dimension"] = reps.weyl_dimension(rd, V.highest)
    I_M = rd.check_subset(int_list(args.IM)) if args.IM is not None else None
    if I_M is not None:
        sub = reps.subspace_mod_RM(V, I_M)
        out["subspace"] = {"I_M": list(I_M), "dim": sub.dim, "weights": sub.to_json()["weights"]}
    s = None
    if args.slope is not None:
        if I_M is None:
            raise InputError("--slope needs --IM")
        s = slope.SlopeVector(tuple(rational_list(args.slope)), I_M, rd)
        if len(s.coords) != rd.rank:
            raise InputError(f"slope needs {rd.rank} coordinates")
    elif args.degree is not None:
        if I_M is None:
            raise InputError("--degree needs --IM")
        s = slope.phi(rd, I_M, lattice.coerce_class(rd, I_M, int_list(args.degree)))
    if s is not None:
        out["slope"] = [fmt(x) for x in s.coords]
        out["filtration"] = [lvl.to_json() for lvl in reps.filtration_levels(V, s)]
        out["degree"] = fmt(reps.assoc_degree(V, s))
        out["slope_top"] = fmt(reps.assoc_slope_top(V, s))
    if args.M1 is not None or args.M2 is not None:
        setup = bruhat.CosetSetup(rd, int_list(args.M1 or ""), int_list(args.M2 or ""))
        rows = []
        for w in bruhat.min_reps(setup):
            lp = bruhat.deeper_levi_sets(setup, w)
            rows.append({"w": list(w.word), **reps.bruhat_subspaces(V, lp).to_json()})
        out["bruhat"] = rows
    return out


def _stratum(rd, I_M: str, degree: str):
    return strata.make_stratum(rd, int_list(I_M), int_list(degree))


def cmd_strata(args):
    rd = datum_from_args(args)
    if args.action == "enumerate":
        lg = lattice.coerce_class(rd, rd.index_set, int_list(args.lambda_G))
        bound = Fraction(args.bound)
        return [s.to_json() for s in strata.enumerate_strata(rd, lg, bound)]
    if args.action == "destabilizing":
        I_M = int_list(args.IM)
        c = lattice.coerce_class(rd, I_M, int_list(args.degree))
        lg = strata.induced_class(rd, c) if args.lambda_G is None else int_list(args.lambda_G)
        return {"destabilizing": strata.is_destabilizing(rd, I_M, c, lg)}
    if args.action == "compare":
        a = _stratum(rd, args.IM, args.degree)
        res = strata.comparison_geq(a, int_list(args.other_IM), int_list(args.other_degree))
        return res.to_json()
    # closure
    a = _stratum(rd, args.IM, args.degree)
    b = _stratum(rd, args.other_IM, args.other_degree)
    try:
        same = strata.closure_same_parabolic_contains(a, b)
    except ValueError as e:
        same = f"precondition fails: {e}"
    return {
        "same_parabolic_contains": same,
        "meets": {"value": strata.closure_meets_necessary(a, b), "kind": "necessary-only"},
    }


def cmd_p1(args):
    if args.action == "hn":
        hn, st = p1.canonical_reduction(int_list(args.type))
        return {
            "type": list(p1.splitting_type(int_list(args.type)).degrees),
            "hn": hn.to_json(),
            "stratum": st.to_json(),
            "mds_hom_vanishing": p1.mds_hom_vanishing(int_list(args.type)),
        }
    if args.action == "specialize":
        return p1.specializes_to(int_list(args.from_), int_list(args.to))
    if args.action == "poset":
        rep = p1.strata_poset(args.n, args.degree, args.box)
        if args.dot:
            args.raw = True
            return rep.to_dot()
        return rep.to_json()
    return p1.gl3_report()


def cmd_verify(args):
    only = [x for x in args.only.split(",") if x] if args.only else None
    results = verify.run_all(max_rank=args.rank, box=args.box, seed=args.seed, only=only)
    args.exit_code = EX_OK if all(r.passed for r in results) else EX_FAIL
    return [r.to_json() for r in results]


# -- parser ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    fmt_parent = argparse.ArgumentParser(add_help=False)
    g = fmt_parent.add_mutually_exclusive_group()
    g.add_argument("--json", action="store_true", help="JSON output (default)")
    g.add_argument("--text", action="store_true", help="aligned text output")

    p = argparse.ArgumentParser(
        prog="hn",
        description="Root data, slope maps and Harder-Narasimhan strata.",
        epilog="Negative first entries need '=': --degree=-1,2",
    )
    p.add_argument("--version", action="version", version=f"hn {__version__}")
    sub = p.add_subparsers(dest="command", metavar="command")

    d = sub.add_parser("datum", parents=[fmt_parent], help="describe a root datum")
    add_datum_args(d)
    d.add_argument("--weyl", action="store_true", help="also list the Weyl group as reduced words")
    d.set_defaults(func=cmd_datum)

    s = sub.add_parser("slope", parents=[fmt_parent], help="slope of a degree class and its regularity")
    add_datum_args(s)
    s.add_argument("--IM", default="", help="Levi simple indices, e.g. 1 or 0,2 (empty: Borel)")
    s.add_argument("--degree", required=True, help="free coordinates of the class, or an integral lift")
    s.add_argument("--verbose", action="store_true", help="add lambda_G, phi_G, projection, positivity")
    s.set_defaults(func=cmd_slope)

    b = sub.add_parser("bruhat", parents=[fmt_parent], help="minimal double coset representatives")
    add_datum_args(b)
    b.add_argument("--M1", default="", help="first Levi subset")
    b.add_argument("--M2", default="", help="second Levi subset")
    b.add_argument("--w", help="a single element as a word, e.g. 1,0 (= s1 s0)")
    b.set_defaults(func=cmd_bruhat)

    w = sub.add_parser("weights", parents=[fmt_parent], help="Weyl module weights, subspaces, filtrations")
    add_datum_args(w)
    src = w.add_mutually_exclusive_group(required=True)
    src.add_argument("--highest", help="dominant highest weight")
    src.add_argument("--multiset", help="weight multiset JSON (inline or @file)")
    w.add_argument("--IM", help="Levi subset for the subspace V[lambda + Z R_M]")
    w.add_argument("--slope", help="rational slope vector (with --IM) for the filtration")
    w.add_argument("--degree", help="degree class (with --IM); its slope drives the filtration")
    w.add_argument("--M1", help="with --M2: dimensions of the coset subspaces per representative")
    w.add_argument("--M2")
    w.set_defaults(func=cmd_weights)

    st = sub.add_parser("strata", help="enumerate and compare strata")
    st_sub = st.add_subparsers(dest="action", metavar="action")
    st_sub.required = True
    e = st_sub.add_parser("enumerate", parents=[fmt_parent], help="strata over a G-degree")
    add_datum_args(e)
    e.add_argument("--lambda-G", dest="lambda_G", required=True, help="G-degree class")
    e.add_argument("--bound", default="2", help="cap on the slope coefficients (rational)")
    x = st_sub.add_parser("destabilizing", parents=[fmt_parent], help="does a reduction destabilize")
    add_datum_args(x)
    x.add_argument("--IM", default="")
    x.add_argument("--degree", required=True)
    x.add_argument("--lambda-G", dest="lambda_G")
    for name, hlp in (("compare", "comparison of two reductions"), ("closure", "closure predicates")):
        c = st_sub.add_parser(name, parents=[fmt_parent], help=hlp)
        add_datum_args(c)
        c.add_argument("--IM", default="", help="first stratum Levi subset")
        c.add_argument("--degree", required=True, help="first stratum degree")
        c.add_argument("--other-IM", dest="other_IM", default="")
        c.add_argument("--other-degree", dest="other_degree", required=True)
    st.set_defaults(func=cmd_strata)

    q = sub.add_parser("p1", help="bundles on the projective line")
    q_sub = q.add_subparsers(dest="action", metavar="action")
    q_sub.required = True
    h = q_sub.add_parser("hn", parents=[fmt_parent], help="canonical reduction of a splitting type")
    h.add_argument("--type", required=True, help="degrees, e.g. 3,1,1,0")
    sp = q_sub.add_parser("specialize", parents=[fmt_parent], help="does one type specialize to another")
    sp.add_argument("--from", dest="from_", required=True)
    sp.add_argument("--to", required=True)
    po = q_sub.add_parser("poset", parents=[fmt_parent], help="specialization poset in a box")
    po.add_argument("--n", type=int, required=True)
    po.add_argument("--degree", type=int, required=True)
    po.add_argument("--box", type=int, default=3)
    po.add_argument("--dot", action="store_true", help="emit DOT instead of JSON")
    q_sub.add_parser("gl3-report", parents=[fmt_parent], help="the GL(3) complete-flag vs (3,0) example")
    q.set_defaults(func=cmd_p1)

    v = sub.add_parser("verify", parents=[fmt_parent], help="run the property sweeps")
    v.add_argument("--rank", type=int, default=3)
    v.add_argument("--box", type=int, default=3)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--only", help=f"comma-separated subset of: {', '.join(verify.SWEEPS)}")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    out = out or sys.stdout
    err = err or sys.stderr
    first = next((a for a in argv if not a.startswith("-")), None)
    if first is not None and first not in COMMANDS:
        err.write(f"hn: unknown subcommand {first!r} (choose from {', '.join(COMMANDS)})\n")
        return EX_USAGE
    parser = build_parser()
    try:
        with contextlib.redirect_stderr(err):
            args = parser.parse_args(argv)
    except SystemExit as e:
        return EX_INPUT if e.code not in (0, None) else EX_OK
    if not getattr(args, "func", None):
        parser.print_help(err)
        return EX_USAGE
    try:
        result = args.func(args)
    except json.JSONDecodeError as e:
        err.write(f"hn: malformed JSON: {e}\n")
        return EX_DATAERR
    except CapExceededError as e:
        err.write(f"hn: {e} (raise HN_CAP to allow it)\n")
        return EX_UNAVAILABLE
    except (ValueError, KeyError, TypeError) as e:
        err.write(f"hn: {e}\n")
        return EX_INPUT
    emit(result, args, out)
    return getattr(args, "exit_code", EX_OK)


if __name__ == "__main__":
    sys.exit(main())
