"""Command-line front end: ``k3stab <command> --d D ...``.

Every numeric input is parsed exactly before any computation starts. JSON
and CSV output contain only integers and ``p/q`` strings; SVG is the one
format that uses floats, for pixel coordinates.

Exit status: 0 on success, 1 on any input or computation error, and for
``certify`` 2 when the verdict is NotApplicable.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field

from .charge import (
    central_charge,
    in_V_X,
    lambda_,
    parse_point,
)
from .criteria import (
    Assumption,
    Theorem,
    Verdict,
    boundary_decomposition,
    certify,
    chi_positivity_C3,
    classify_moduli_B4,
    region_of,
)
from .lattice import (
    MukaiVector,
    SurfaceContext,
    euler_form,
    mukai_pairing,
    parse_context,
    parse_vector,
    spherical_reflect,
)
from .oracle import (
    Grid,
    SearchBounds,
    enumerate_destabilizers,
    scan_region,
    verify_certificate,
    wall_locus,
)
from .rational import format_rational, parse_rational

EXIT_OK, EXIT_ERROR, EXIT_NOT_APPLICABLE = 0, 1, 2

FORMATS = ("plain", "json", "csv", "svg")


class CliError(Exception):
    pass


@dataclass
class CliConfig:
    ctx: SurfaceContext
    bounds: SearchBounds = field(default_factory=SearchBounds)
    fmt: str = "plain"
    out: str | None = None


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _typed(parse, what):
    def conv(text):
        try:
            return parse(text)
        except (ValueError, TypeError) as exc:
            raise argparse.ArgumentTypeError(f"invalid {what} {text!r}: {exc}") from None
    conv.__name__ = what
    return conv


def _parse_grid(text: str) -> Grid:
    parts = text.split(",")
    if len(parts) != 5:
        raise ValueError("expected x0,x1,y0,y1,step")
    return Grid(*(parse_rational(p) for p in parts))


def _parse_wall_pair(text: str) -> tuple[MukaiVector, MukaiVector]:
    left, sep, right = text.partition(":")
    if not sep:
        raise ValueError("expected 'r,n,s:r,n,s'")
    return parse_vector(left), parse_vector(right)


VECTOR = _typed(parse_vector, "vector")
POINT = _typed(parse_point, "point")
CONTEXT = _typed(parse_context, "d")
GRID = _typed(_parse_grid, "grid")
WALL = _typed(_parse_wall_pair, "wall pair")


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _nonneg_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return value


# --- output ------------------------------------------------------------------

def _dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _emit(cfg: CliConfig, text: str) -> None:
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _render(cfg: CliConfig, payload: dict, plain: str) -> str:
    if cfg.fmt == "json":
        return _dump_json(payload)
    if cfg.fmt == "plain":
        return plain.rstrip("\n") + "\n"
    raise CliError(f"format {cfg.fmt!r} is not supported by this command")


# --- commands ----------------------------------------------------------------

def cmd_pairing(args, cfg):
    value = mukai_pairing(args.v, args.w, cfg.ctx)
    return _render(cfg, {"v": str(args.v), "w": str(args.w), "d": cfg.ctx.d, "pairing": value},
                   str(value)), EXIT_OK


def cmd_euler(args, cfg):
    value = euler_form(args.v, args.w, cfg.ctx)
    return _render(cfg, {"v": str(args.v), "w": str(args.w), "d": cfg.ctx.d, "chi": value},
                   str(value)), EXIT_OK


def cmd_charge(args, cfg):
    z = central_charge(args.v, args.sigma, cfg.ctx)
    lam = lambda_(args.v, args.sigma)
    payload = {"v": str(args.v), "d": cfg.ctx.d, "sigma": _sigma(args.sigma),
               "re": format_rational(z.re), "im": format_rational(z.im),
               "lambda": format_rational(lam)}
    plain = f"Z = {z}  lambda = {format_rational(lam)}"
    return _render(cfg, payload, plain), EXIT_OK


def cmd_certify(args, cfg):
    cert = certify(args.v, args.sigma, cfg.ctx, args.assume, args.theorem)
    payload = cert.to_dict()
    plain = cert.to_text()
    if args.verify and cert.verdict is Verdict.STABLE and cert.theorem in (
            Theorem.A4, Theorem.A5, Theorem.A10, Theorem.A11):
        ver = verify_certificate(args.v, args.sigma, cert, cfg.ctx, cfg.bounds)
        payload["oracle"] = {
            "status": ver.status.value,
            "max_rank": cfg.bounds.max_rank,
            "strict": [c.to_dict() for c in ver.strict],
            "on_wall": [c.to_dict() for c in ver.on_wall],
            "reason": ver.reason,
        }
        plain += f"\n  oracle (max_rank={cfg.bounds.max_rank}): {ver.status.value}"
        if ver.reason:
            plain += f"; {ver.reason}"
    code = EXIT_NOT_APPLICABLE if cert.verdict is Verdict.NOT_APPLICABLE else EXIT_OK
    return _render(cfg, payload, plain), code


def cmd_classify(args, cfg):
    res = classify_moduli_B4(args.v, cfg.ctx)
    return _render(cfg, res.to_dict(), res.to_text()), EXIT_OK


def cmd_region(args, cfg):
    rv = region_of(args.v, args.sigma, cfg.ctx)
    payload = dict(rv.to_dict(), v=str(args.v), d=cfg.ctx.d, sigma=_sigma(args.sigma))
    plain = f"{rv.region.value}  lambda={format_rational(rv.lam)}  factor={format_rational(rv.factor)}"
    if rv.bound_lhs is not None:
        plain += f"  |lambda|*factor={format_rational(rv.bound_lhs)} vs d*y^2={format_rational(rv.bound_rhs)}"
    if not rv.in_vx.member:
        plain += f"  (outside V(X), witness {rv.in_vx.witness})"
    return _render(cfg, payload, plain), EXIT_OK


def cmd_vx(args, cfg):
    res = in_V_X(args.sigma, cfg.ctx)
    payload = {"sigma": _sigma(args.sigma), "d": cfg.ctx.d, "member": res.member,
               "candidate": None if res.candidate is None else str(res.candidate),
               "candidate_re_z": None if res.real_part is None else format_rational(res.real_part)}
    if res.member:
        plain = "in V(X)"
    else:
        plain = f"not in V(X): Z({res.witness}) = {format_rational(res.real_part)} <= 0"
    return _render(cfg, payload, plain), EXIT_OK


def cmd_reflect(args, cfg):
    out = spherical_reflect(args.v, args.a, cfg.ctx)
    return _render(cfg, {"v": str(args.v), "a": str(args.a), "d": cfg.ctx.d, "image": str(out)},
                   str(out)), EXIT_OK


def cmd_decompose(args, cfg):
    dec = boundary_decomposition(args.a, cfg.ctx)
    lines = [f"a=({dec.a})  {dec.sign_convention}"]
    for name, facs in (("A_plus", dec.plus), ("A_minus", dec.minus)):
        parts = ", ".join(f"{f.label}=({f.vector}) x{f.multiplicity} [{f.shift}]" for f in facs)
        lines.append(f"  {name}: {parts}  sum=({dec.signed_sum(facs)})")
    return _render(cfg, dec.to_dict(), "\n".join(lines)), EXIT_OK


def cmd_chi(args, cfg):
    chi, closed = chi_positivity_C3(args.a, args.e, cfg.ctx)
    payload = {"a": str(args.a), "e": str(args.e), "d": cfg.ctx.d, "chi": chi,
               "closed_form": format_rational(closed)}
    plain = f"chi = {chi} = {args.a.r}*{args.e.r}*{format_rational(closed)}"
    return _render(cfg, payload, plain), EXIT_OK


def cmd_walls(args, cfg):
    curve = wall_locus(args.a, args.e, cfg.ctx, args.samples)
    payload = dict(curve.to_dict(), d=cfg.ctx.d)
    lines = [curve.describe(),
             "coefficients A..F: " + " ".join(format_rational(c) for c in curve.coefficients)]
    for p in curve.samples:
        y = p.y
        ytxt = format_rational(y) if y is not None else f"sqrt({format_rational(p.y_squared)})"
        lines.append(f"  x={format_rational(p.x)}  y={ytxt}  N=0")
    return _render(cfg, payload, "\n".join(lines)), EXIT_OK


def cmd_enumerate(args, cfg):
    cands = enumerate_destabilizers(args.v, args.sigma, cfg.ctx, cfg.bounds)
    payload = {"v": str(args.v), "d": cfg.ctx.d, "sigma": _sigma(args.sigma),
               "max_rank": cfg.bounds.max_rank, "pruning": cfg.bounds.pruning,
               "candidates": [c.to_dict() for c in cands]}
    if cands:
        plain = "\n".join(f"({c.vector})  N={format_rational(c.n_value)}"
                          f"{'  on-wall' if c.on_wall else ''}" for c in cands)
    else:
        plain = "no numerical destabilizer found"
    return _render(cfg, payload, plain), EXIT_OK


def cmd_scan(args, cfg):
    rows = scan_region(args.v, args.grid, cfg.ctx, args.assume or (Assumption.MU_STABLE_LOCALLY_FREE,))
    walls = tuple(wall_locus(a, e, cfg.ctx, 0) for a, e in args.wall)
    if cfg.fmt == "svg":
        from .svg import render_scan
        return render_scan(rows, args.grid, args.v, walls), EXIT_OK
    if cfg.fmt == "json":
        return _dump_json({
            "v": str(args.v), "d": cfg.ctx.d,
            "rows": [dict(zip(("x", "y", "in_VX", "region", "certificates"), r.csv_fields()),
                          witness=None if r.witness is None else str(r.witness)) for r in rows],
            "walls": [w.to_dict() for w in walls],
        }), EXIT_OK
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["x", "y", "in_VX", "region", "certificates"])
    for r in rows:
        writer.writerow(r.csv_fields())
    return buf.getvalue(), EXIT_OK


def _sigma(sigma) -> dict:
    return {"x": format_rational(sigma.x), "y": format_rational(sigma.y)}


# --- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--d", type=CONTEXT, required=True, help="half-degree d, L^2 = 2d")
    common.add_argument("--format", choices=FORMATS, default=None)
    common.add_argument("--out", default=None, help="write output to this path")
    common.add_argument("--max-rank", type=_positive_int, default=SearchBounds().max_rank)
    common.add_argument("--no-pruning", action="store_true",
                        help="disable subobject-inequality pruning in the enumerator")

    parser = _Parser(prog="k3stab", description="Exact stability data on a Picard-rank-one K3 surface.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_, *opts):
        p = sub.add_parser(name, parents=[common], help=help_)
        for opt in opts:
            opt(p)
        p.set_defaults(func=func)
        return p

    v = lambda p: p.add_argument("--v", type=VECTOR, required=True, help="r,n,s")
    w = lambda p: p.add_argument("--w", type=VECTOR, required=True, help="r,n,s")
    a = lambda p: p.add_argument("--a", type=VECTOR, required=True, help="r,n,s")
    e = lambda p: p.add_argument("--e", type=VECTOR, required=True, help="r,n,s")
    sigma = lambda p: p.add_argument("--sigma", type=POINT, required=True, help="x,y")

    def assume(p):
        p.add_argument("--assume", action="append", default=[],
                       choices=[x.value for x in Assumption],
                       help="sheaf-level assumption (repeatable)")

    add("pairing", cmd_pairing, "Mukai pairing <v,w>", v, w)
    add("euler", cmd_euler, "Euler form chi(v,w)", v, w)
    add("charge", cmd_charge, "central charge Z(v) at sigma", v, sigma)
    cert = add("certify", cmd_certify, "stability certificate", v, sigma, assume)
    cert.add_argument("--theorem", choices=[t.value for t in Theorem], default=None)
    cert.add_argument("--verify", action="store_true",
                      help="cross-check a Stable verdict with the destabilizer search")
    add("classify", cmd_classify, "fine moduli classification of an isotropic class", v)
    add("region", cmd_region, "locate sigma among V_plus, V_zero, V_minus", v, sigma)
    add("vx", cmd_vx, "membership of sigma in V(X)", sigma)
    add("reflect", cmd_reflect, "reflection in a spherical class", v, a)
    add("decompose", cmd_decompose, "JH factors of O_x on a spherical wall", a)
    add("chi", cmd_chi, "chi(a, e) for spherical a, isotropic e", a, e)
    walls = add("walls", cmd_walls, "wall N_{a,e} = 0", a, e)
    walls.add_argument("--samples", type=_nonneg_int, default=5)
    add("enumerate", cmd_enumerate, "numerical destabilizer candidates", v, sigma)
    scan = add("scan", cmd_scan, "region scan over a grid", v, assume)
    scan.add_argument("--grid", type=GRID, required=True, help="x0,x1,y0,y1,step")
    scan.add_argument("--wall", type=WALL, action="append", default=[],
                      help="overlay the wall of a pair 'r,n,s:r,n,s' (repeatable)")
    return parser


_VALUE_FLAGS = frozenset({"--d", "--v", "--w", "--a", "--e", "--sigma", "--grid", "--wall"})


def _glue_values(argv: list[str]) -> list[str]:
    """Turn ``--grid -1,2,...`` into ``--grid=-1,2,...``.

    argparse would otherwise read a leading minus sign as a new option.
    """
    out, i = [], 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_FLAGS and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = parser.parse_args(_glue_values(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    default_fmt = "csv" if args.command == "scan" else "plain"
    cfg = CliConfig(ctx=args.d,
                    bounds=SearchBounds(args.max_rank, not args.no_pruning),
                    fmt=args.format or default_fmt,
                    out=args.out)
    if cfg.fmt == "svg" and args.command != "scan":
        print("k3stab: error: svg output is only available for scan", file=sys.stderr)
        return EXIT_ERROR
    try:
        text, code = args.func(args, cfg)
        _emit(cfg, text)
    except (CliError, ValueError, ArithmeticError, OSError) as exc:
        print(f"k3stab: error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
