"""Command-line interface.

Exit codes: 0 success, 1 mathematical refusal (a check came out negative),
2 input error, 3 compute budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import braid as br
from . import family as fam
from . import floer, homfly
from .config import Config, ConfigError, load_config
from .grid import (
    GridDiagram,
    GridError,
    IllegalCommutation,
    NoSuchStabilization,
    cromwell_move,
    diagonal_mirror,
    front_data,
    grid_to_planar,
    validate,
    x_plus,
)

EXIT_OK, EXIT_REFUSED, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


class InputError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


class Out:
    def __init__(self, fmt: str):
        self.fmt = fmt

    def emit(self, data: dict, text: str) -> None:
        print(_dump(data) if self.fmt == "json" else text)


def _load_grid(path: str) -> GridDiagram:
    try:
        with open(path) as fh:
            raw = fh.read()
    except OSError as exc:
        raise InputError(str(exc)) from exc
    try:
        data = json.loads(raw)
    except json.JSONDecodeError:
        return GridDiagram.from_ascii(raw)
    return GridDiagram.from_json(data)


def _parse_braid(text: str, strands: int | None = None) -> br.BraidWord:
    try:
        return br.BraidWord.parse(text, strands)
    except (ValueError, br.BraidError) as exc:
        raise InputError(f"cannot parse braid {text!r}: {exc}") from exc


# -- grid ----------------------------------------------------------------------


def cmd_grid(args, cfg: Config, out: Out) -> int:
    if args.action == "validate":
        try:
            with open(args.file) as fh:
                data = json.load(fh)
            G = GridDiagram(data["X"], data["O"])
            validate(G)
        except GridError as exc:
            out.emit({"valid": False, "error": type(exc).__name__, "message": str(exc)}, f"invalid: {exc}")
            return EXIT_REFUSED
        out.emit({"valid": True, "n": G.n}, "ok")
        return EXIT_OK
    G = _load_grid(args.file)
    if args.action == "show":
        out.emit(G.to_json(), G.ascii())
    elif args.action == "mirror":
        M = diagonal_mirror(G)
        out.emit(M.to_json(), _dump(M.to_json()))
    elif args.action == "xplus":
        xp = x_plus(G)
        out.emit({"x_plus": list(xp)}, " ".join(map(str, xp)))
    elif args.action == "front":
        f = front_data(G)
        data = {"writhe": f.writhe, "cusps_up": f.cusps_up, "cusps_down": f.cusps_down, "tb": f.tb, "r": f.r, "sl": f.sl}
        out.emit(data, " ".join(f"{k}={v}" for k, v in data.items()))
    elif args.action == "move":
        res = cromwell_move(G, args.kind, args.at or ())
        data = {"grid": res.grid.to_json(), "effect": res.effect.value}
        out.emit(data, f"{res.effect.value}\n{_dump(res.grid.to_json())}")
    elif args.action == "to-braid":
        B = br.bprime(G) if args.prime else br.grid_to_braid(G)
        out.emit({"braid": str(B), "sigma": B.sigma_string()}, str(B))
    elif args.action == "planar":
        d = grid_to_planar(G)
        out.emit({"pd": [list(c) for c in d.to_pd()], "free_loops": d.free_loops}, _dump(d.to_pd()))
    return EXIT_OK


# -- braid ---------------------------------------------------------------------


def cmd_braid(args, cfg: Config, out: Out) -> int:
    B = _parse_braid(args.braid, args.strands)
    act = args.action
    if act == "nf":
        nf = br.normal_form(B)
        out.emit(nf.to_json(), str(nf))
    elif act == "equal":
        C = _parse_braid(args.other, args.strands or B.strands)
        eq = br.braid_equal(B, C)
        out.emit({"equal": eq}, "equal" if eq else "not equal")
        return EXIT_OK if eq else EXIT_REFUSED
    elif act == "sl":
        out.emit({"sl": br.sl(B), "writhe": B.writhe, "strands": B.strands}, str(br.sl(B)))
    elif act == "conjugate":
        C = br.conjugate(B, args.by)
        out.emit({"braid": str(C)}, str(C))
    elif act == "exchange":
        sites = br.exchange_sites(B, args.gen)
        if args.site:
            site = tuple(args.site)
        elif sites:
            site = sites[0]
        else:
            out.emit({"error": "no exchange site"}, f"no sigma_{args.gen} exchange site")
            return EXIT_REFUSED
        C = br.exchange_move(B, site, args.gen)
        out.emit({"braid": str(C), "site": list(site)}, str(C))
    elif act == "stabilize":
        C = br.markov_destabilize(B) if args.inverse else br.markov_stabilize(B)
        out.emit({"braid": str(C)}, str(C))
    elif act == "to-grid":
        G = br.braid_to_grid(B)
        out.emit(G.to_json(), _dump(G.to_json()))
    elif act == "front":
        f = br.front_from_braid(B)
        data = {"writhe": f.writhe, "cusps_up": f.cusps_up, "cusps_down": f.cusps_down, "tb": f.tb, "r": f.r}
        out.emit(data, " ".join(f"{k}={v}" for k, v in data.items()))
    return EXIT_OK


# -- floer ---------------------------------------------------------------------


def _cert_text(cert) -> str:
    if isinstance(cert, floer.NullChain):
        lines = ["NullChain"] + [" ".join(map(str, s)) for s in cert.chain]
    else:
        lines = [f"NonVanishing |A|={len(cert.A)} |B|={len(cert.B)} rank={cert.rank}"]
        lines += cert.matrix_rows()
    return "\n".join(lines)


def cmd_floer(args, cfg: Config, out: Out) -> int:
    G = _load_grid(args.grid)
    if args.action == "verify":
        try:
            with open(args.cert) as fh:
                cert = floer.certificate_from_json(json.load(fh))
        except (OSError, ValueError, KeyError) as exc:
            raise InputError(f"cannot read certificate: {exc}") from exc
        ok = floer.verify_certificate(G, cert)
        out.emit({"verified": ok}, "verified" if ok else "rejected")
        return EXIT_OK if ok else EXIT_REFUSED
    cert = floer.theta_vanishes(G, cfg.theta_state_cap)
    data = cert.to_json()
    if args.oracle:
        bf = floer.brute_force_theta(G)
        data["oracle_agrees"] = bf == isinstance(cert, floer.NullChain)
    if args.emit_certificate:
        with open(args.emit_certificate, "w") as fh:
            fh.write(_dump(cert.to_json()) + "\n")
    text = _cert_text(cert)
    if args.oracle:
        text += f"\noracle agrees: {data['oracle_agrees']}"
    out.emit(data, text)
    if args.oracle and not data["oracle_agrees"]:
        return EXIT_REFUSED
    if args.expect:
        vanishes = isinstance(cert, floer.NullChain)
        if vanishes != (args.expect == "vanishing"):
            return EXIT_REFUSED
    return EXIT_OK


# -- homfly --------------------------------------------------------------------


def cmd_homfly(args, cfg: Config, out: Out) -> int:
    if args.source == "braid":
        B = _parse_braid(args.input, args.strands)
        P = homfly.homfly_braid(B.strands, B.letters, cfg.homfly_crossing_cap)
    else:
        P = homfly.homfly(grid_to_planar(_load_grid(args.input)), cfg.homfly_crossing_cap)
    data = {"P": str(P), "terms": P.to_json()}
    text = str(P)
    if args.eval == "z0":
        v = homfly.eval_z0(P)
        data["z0"], text = str(v), str(v)
    elif args.eval == "z2i":
        v = homfly.eval_z2i(P)
        data["z2i"], text = str(v), str(v)
    out.emit(data, text)
    return EXIT_OK


# -- family --------------------------------------------------------------------


def cmd_family(args, cfg: Config, out: Out) -> int:
    a, b = args.a, args.b
    what = args.what
    if what in ("g1", "g2"):
        G = fam.g1(a, b) if what == "g1" else fam.g2(a, b)
        out.emit(G.to_json(), _dump(G.to_json()))
    elif what in ("b1", "b2", "conjectured"):
        if what == "b1":
            B = fam.b1_word(a, b)
        elif what == "b2":
            B = fam.b2_word(a, b)
        else:
            B = fam.conjectured_word(a, b, args.c, args.d)
        out.emit({"braid": str(B), "sigma": B.sigma_string()}, f"{B}\n{B.sigma_string()}")
    elif what == "primality":
        cert = fam.primality_check(a, b)
        out.emit(cert.to_json(), f"{'pass' if cert.passes else 'FAIL'}: {cert.note}")
        return EXIT_OK if cert.passes else EXIT_REFUSED
    elif what == "reproduce":
        rep = fam.reproduce(a, b, cfg.homfly_crossing_cap, cfg.theta_state_cap)
        if args.report:
            with open(args.report, "w") as fh:
                fh.write(_dump(rep.to_json()) + "\n")
        out.emit(rep.to_json(), rep.to_text())
        if rep.errors:
            return EXIT_BUDGET
        return EXIT_OK if rep.certified else EXIT_REFUSED
    return EXIT_OK


# -- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="gridknot", description="Grid diagrams, braids, HOMFLY-PT and theta-hat.", allow_abbrev=False
    )
    p.add_argument("--config", help="JSON config file (default: $GRIDKNOT_CONFIG)")
    p.add_argument("--format", choices=["text", "json"], help="output format")
    p.add_argument("--crossing-cap", type=int, help="HOMFLY crossing cap")
    p.add_argument("--state-cap", type=int, help="theta saturation state cap")
    sub = p.add_subparsers(dest="cmd", required=True)

    g = sub.add_parser("grid", help="grid diagram operations")
    gs = g.add_subparsers(dest="action", required=True)
    for name in ("validate", "show", "mirror", "xplus", "front", "planar"):
        gs.add_parser(name).add_argument("file")
    mv = gs.add_parser("move", help="apply a Cromwell move")
    mv.add_argument("file")
    mv.add_argument("--kind", required=True,
                    help="translation|commutation|commutation-row|stab:NW|stab:NE|stab:SW|stab:SE|destab")
    mv.add_argument("--at", type=int, nargs="*", help="move location (see docs)")
    tb = gs.add_parser("to-braid")
    tb.add_argument("file")
    tb.add_argument("--prime", action="store_true", help="B' (braid of the diagonal mirror)")

    b = sub.add_parser("braid", help="braid word operations")
    bs = b.add_subparsers(dest="action", required=True)
    for name in ("nf", "sl", "to-grid", "front"):
        q = bs.add_parser(name)
        q.add_argument("braid")
    q = bs.add_parser("equal")
    q.add_argument("braid")
    q.add_argument("other")
    q = bs.add_parser("conjugate")
    q.add_argument("braid")
    q.add_argument("--by", type=int, required=True)
    q = bs.add_parser("exchange")
    q.add_argument("braid")
    q.add_argument("--gen", type=int, choices=[1, 3], required=True)
    q.add_argument("--site", type=int, nargs=2)
    q = bs.add_parser("stabilize")
    q.add_argument("braid")
    q.add_argument("--inverse", action="store_true", help="destabilize instead")
    for q in bs.choices.values():
        q.add_argument("--strands", type=int)

    f = sub.add_parser("floer", help="theta-hat vanishing")
    fs = f.add_subparsers(dest="action", required=True)
    th = fs.add_parser("theta")
    th.add_argument("grid")
    th.add_argument("--oracle", action="store_true", help="also run the exhaustive solver (n <= 7)")
    th.add_argument("--emit-certificate", metavar="OUT")
    th.add_argument("--expect", choices=["vanishing", "nonvanishing"])
    ve = fs.add_parser("verify")
    ve.add_argument("grid")
    ve.add_argument("cert")

    h = sub.add_parser("homfly", help="HOMFLY-PT polynomial")
    h.add_argument("source", choices=["braid", "grid"])
    h.add_argument("input", help="braid text or grid file")
    h.add_argument("--eval", choices=["z0", "z2i"])
    h.add_argument("--strands", type=int)

    fm = sub.add_parser("family", help="the K(a, b) family")
    fm.add_argument("what", choices=["g1", "g2", "b1", "b2", "conjectured", "primality", "reproduce"])
    fm.add_argument("--a", type=int, required=True)
    fm.add_argument("--b", type=int, required=True)
    fm.add_argument("--c", type=int, default=0)
    fm.add_argument("--d", type=int, default=0)
    fm.add_argument("--report", metavar="OUT")
    return p


HANDLERS = {"grid": cmd_grid, "braid": cmd_braid, "floer": cmd_floer, "homfly": cmd_homfly, "family": cmd_family}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = load_config(args.config).override(
            homfly_crossing_cap=args.crossing_cap,
            theta_state_cap=args.state_cap,
            output_format=args.format,
        )
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    out = Out(cfg.output_format)
    try:
        return HANDLERS[args.cmd](args, cfg, out)
    except (homfly.DiagramTooLarge, floer.BudgetExceeded, floer.TooLarge) as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (
        br.NotDestabilizable,
        br.PatternMismatch,
        br.ForbiddenSubgroupLetter,
        IllegalCommutation,
        NoSuchStabilization,
    ) as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_REFUSED
    except (InputError, GridError, br.BraidError, fam.NegativeParam, ValueError, KeyError, OSError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
