"""Command-line entry point.

Exit codes: 0 = YES / valid, 1 = NO / invalid, 2 = usage, input or scale-guard error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import checks
from .connectivity import (
    lambda_dyper,
    lambda_dyper_brute,
    lambda_hyper,
    lambda_hyper_brute,
    strongly_connected_in,
)
from .hypercore import (
    Hypergraph,
    HypergraphError,
    format_hypergraph,
    format_orientation,
    orient,
    parse_hypergraph,
    parse_orientation,
)
from .orient import (
    SrcohInstance,
    is_well_balanced,
    rooted_connected,
    solve_srcoh,
    srcoh_oracle,
    sscoh_exhaustive,
    wboh_exhaustive,
)
from .reductions import (
    InvalidWitnessError,
    b2sat_to_wboh,
    hypertree_to_assignment,
    orientation_to_assignment,
    sat_to_sht,
    srcoh_to_sscoh,
)
from .satkit import CnfError, evaluate, format_assignment, parse_dimacs
from .steiner import (
    format_certificate,
    parse_certificate,
    sht_oracle,
    solve_sht,
    verify_sht_certificate,
)

YES, NO, ERROR = 0, 1, 2

# the fixed-terminal search enumerates trees on up to 2k-2 labels; beyond this
# many terminals the default engine hands over to the exhaustive oracle
FIXED_TERMINAL_LIMIT = 5


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _write(path: str | None, text: str) -> None:
    if path:
        Path(path).write_text(text)


def _hypergraph(args) -> Hypergraph:
    return parse_hypergraph(_read(args.hypergraph))


def _names(text: str | None) -> list[str]:
    return text.split() if text else []


def _verdict(ok: bool) -> int:
    print("YES" if ok else "NO")
    return YES if ok else NO


def cmd_sht(args) -> int:
    h = _hypergraph(args)
    s = h.indices(_names(args.terminals))
    use_oracle = args.oracle or len(s) > FIXED_TERMINAL_LIMIT
    print(f"engine: {'oracle' if use_oracle else 'fixed-terminal'}")
    cert = sht_oracle(h, s) if use_oracle else solve_sht(h, s)
    if cert is not None:
        text = format_certificate(h, cert)
        sys.stdout.write(text)
        _write(args.certificate, text)
    return _verdict(cert is not None)


def cmd_srcoh(args) -> int:
    h = _hypergraph(args)
    inst = SrcohInstance(h, h.index(args.root), h.indices(_names(args.terminals)))
    use_oracle = args.oracle or len(inst.s | {inst.r}) > FIXED_TERMINAL_LIMIT
    print(f"engine: {'oracle' if use_oracle else 'fixed-terminal'}")
    heads = srcoh_oracle(inst) if use_oracle else solve_srcoh(inst)
    if heads is not None:
        _write(args.certificate, format_orientation(h, heads))
    return _verdict(heads is not None)


def cmd_sscoh(args) -> int:
    h = _hypergraph(args)
    heads = sscoh_exhaustive(h, h.indices(_names(args.terminals)))
    if heads is not None:
        _write(args.certificate, format_orientation(h, heads))
    return _verdict(heads is not None)


def cmd_wbo_check(args) -> int:
    h = _hypergraph(args)
    heads = parse_orientation(_read(args.orientation), h)
    report = is_well_balanced(h, heads)
    if not report.verdict:
        u, v = report.witness
        print(
            f"violated at ({h.names[u]}, {h.names[v]}): oriented {report.lambda_orient} "
            f"< floor({report.lambda_hyper} / 2)"
        )
    return _verdict(report.verdict)


def cmd_wbo_solve(args) -> int:
    h = _hypergraph(args)
    heads = wboh_exhaustive(h)
    if heads is not None:
        _write(args.certificate, format_orientation(h, heads))
    return _verdict(heads is not None)


def cmd_lambda(args) -> int:
    h = _hypergraph(args)
    u, v = h.index(args.u), h.index(args.v)
    if args.orientation:
        d = orient(h, parse_orientation(_read(args.orientation), h))
        value = lambda_dyper_brute(d, u, v) if args.oracle else lambda_dyper(d, u, v)
    else:
        value = lambda_hyper_brute(h, u, v) if args.oracle else lambda_hyper(h, u, v)
    print(value)
    return YES


def cmd_reduce(args) -> int:
    if args.kind == "srcoh2sscoh":
        h = parse_hypergraph(_read(args.input))
        if args.root is None:
            raise UsageError("srcoh2sscoh needs --root")
        inst = SrcohInstance(h, h.index(args.root), h.indices(_names(args.terminals)))
        h2, s2 = srcoh_to_sscoh(inst)
        name_map = "".join(
            f"{h.names[v]} {'root' if v == inst.r else 'terminal'} -\n" for v in sorted(s2)
        )
        terminals = [h.names[v] for v in sorted(s2)]
    else:
        f = parse_dimacs(_read(args.input))
        if args.kind == "sat2sht":
            rm = sat_to_sht(f)
            terminals = [rm.h.names[v] for v in sorted(rm.terminals)]
        else:
            rm = b2sat_to_wboh(f)
            terminals = []
        h2, name_map = rm.h, rm.name_map()
    text = format_hypergraph(h2)
    if args.output:
        _write(args.output, text)
    else:
        sys.stdout.write(text)
    _write(args.map, name_map)
    if terminals:
        print("# terminals: " + " ".join(terminals))
    return YES


def _translate(args, h: Hypergraph, cert=None, heads=None) -> int:
    """Map a witness on a reduced instance back to a truth assignment."""
    f = parse_dimacs(_read(args.cnf))
    name_map = _read(args.map)
    kinds = {line.split()[1] for line in name_map.splitlines() if line.strip()}
    rm = b2sat_to_wboh(f) if "v" in kinds else sat_to_sht(f)
    if rm.name_map() != name_map or rm.h.names != h.names or rm.h.edges != h.edges:
        raise UsageError("name map and hypergraph do not match the formula's reduction")
    if (cert is not None) == ("v" in kinds):
        raise UsageError("certificates pair with sat2sht maps, orientations with b2sat2wboh maps")
    try:
        phi = hypertree_to_assignment(rm, cert) if cert is not None else orientation_to_assignment(rm, heads)
    except InvalidWitnessError as exc:
        print(f"invalid witness: {exc}")
        return _verdict(False)
    print("assignment: " + format_assignment(phi))
    return _verdict(evaluate(f, phi))


def cmd_verify(args) -> int:
    h = _hypergraph(args)
    s = h.indices(_names(args.terminals))
    if args.certificate:
        cert = parse_certificate(_read(args.certificate), h)
        if args.root:
            s |= {h.index(args.root)}
        ok = verify_sht_certificate(h, s, cert)
        if ok and args.cnf:
            return _translate(args, h, cert=cert)
        return _verdict(ok)
    if not args.orientation:
        raise UsageError("verify needs --certificate or --orientation")
    heads = parse_orientation(_read(args.orientation), h)
    if args.root:
        return _verdict(rooted_connected(h, heads, h.index(args.root), s))
    if args.terminals:
        return _verdict(strongly_connected_in(orient(h, heads), s))
    if args.cnf:
        return _translate(args, h, heads=heads)
    return _verdict(is_well_balanced(h, heads).verdict)


def cmd_selftest(args) -> int:
    results = checks.desk_suite(seed=args.seed, scale=args.scale)
    for res in results:
        print(res.line())
    return _verdict(all(res.passed for res in results))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypersteiner", description="Steiner hypertrees and hypergraph orientations."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name, func, help_text, hypergraph=True):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        if hypergraph:
            p.add_argument("--hypergraph", required=True, help="hypergraph file")
        return p

    p = command("sht", cmd_sht, "does a Steiner hypertree on the terminals exist")
    p.add_argument("--terminals", required=True, help="space-separated vertex names")
    p.add_argument("--certificate", help="write the trimming here")
    p.add_argument("--oracle", action="store_true", help="use exhaustive search")

    p = command("srcoh", cmd_srcoh, "orientation with all terminals reachable from a root")
    p.add_argument("--root", required=True)
    p.add_argument("--terminals", default="")
    p.add_argument("--certificate", help="write the orientation here")
    p.add_argument("--oracle", action="store_true")

    p = command("sscoh", cmd_sscoh, "orientation strongly connected on the terminals")
    p.add_argument("--terminals", required=True)
    p.add_argument("--certificate", help="write the orientation here")
    p.add_argument("--oracle", action="store_true", help="accepted; sscoh is always exhaustive")

    p = command("wbo-check", cmd_wbo_check, "is an orientation well-balanced")
    p.add_argument("--orientation", required=True)

    p = command("wbo-solve", cmd_wbo_solve, "search for a well-balanced orientation")
    p.add_argument("--certificate", help="write the orientation here")
    p.add_argument("--oracle", action="store_true", help="accepted; wbo-solve is always exhaustive")

    p = command("lambda", cmd_lambda, "local connectivity between two vertices")
    p.add_argument("u")
    p.add_argument("v")
    p.add_argument("--orientation", help="measure in this orientation instead")
    p.add_argument("--oracle", action="store_true", help="enumerate cuts instead of max-flow")

    p = command("reduce", cmd_reduce, "compile an instance through a reduction", hypergraph=False)
    p.add_argument("--kind", required=True, choices=["sat2sht", "srcoh2sscoh", "b2sat2wboh"])
    p.add_argument("--input", required=True, help="DIMACS file, or hypergraph for srcoh2sscoh")
    p.add_argument("--output", help="hypergraph output (default stdout)")
    p.add_argument("--map", help="write the vertex name map here")
    p.add_argument("--root")
    p.add_argument("--terminals", default="")

    p = command("verify", cmd_verify, "check a certificate or orientation")
    p.add_argument("--terminals", default="")
    p.add_argument("--root")
    p.add_argument("--certificate")
    p.add_argument("--orientation")
    p.add_argument("--cnf", help="translate the witness back to this formula")
    p.add_argument("--map", help="name map written by 'reduce'")

    p = command("selftest", cmd_selftest, "run the oracle cross-checks", hypergraph=False)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--scale", type=float, default=0.25, help="fraction of full instance counts")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return ERROR if exc.code else YES
    if getattr(args, "cnf", None) and not getattr(args, "map", None):
        print("error: --cnf needs --map", file=sys.stderr)
        return ERROR
    try:
        return args.func(args)
    except (UsageError, HypergraphError, CnfError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return ERROR


if __name__ == "__main__":
    sys.exit(main())
