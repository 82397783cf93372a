"""Command-line interface.

Every run echoes its full effective configuration (including the
defaulted seed and tolerances) in the output header, emits JSON by
default (CSV for `report`), and uses exit status 0 on success, 2 on
invalid input and 3 on unsupported sizes.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from . import mermin as _mermin_mod
from . import polytopes, volume
from .classify import EPS_BOUNDARY, EPS_CLASS
from .classify import classify as _classify_state
from .decompose import certify_midpoint, cube_vertex_decomposition
from .errors import GhzPolytopeError, InvalidArgumentError, UnsupportedSizeError
from .indices import Bipartition, check_qubit_count, dimension, from_bits
from .states import GhzDiagonalState

SEED_ENV_VAR = "GHZPOLYTOPE_SEED"

EXIT_OK = 0
EXIT_INVALID_INPUT = 2
EXIT_UNSUPPORTED_SIZE = 3

_POLYTOPE_FAMILY = {"ghz": "GHZ", "bisep": "BISEP", "fbi": "FBI"}


def _default_seed() -> int:
    return int(os.environ.get(SEED_ENV_VAR, "0"))


def _parse_prob_vector(spec: str, n: int) -> GhzDiagonalState:
    """Inline comma list, or a file with one decimal per line."""
    check_qubit_count(n)
    if os.path.isfile(spec):
        with open(spec) as fh:
            raw = [line.strip() for line in fh if line.strip()]
    else:
        raw = spec.split(",")
    d = dimension(n)
    if len(raw) != d:
        raise InvalidArgumentError(
            f"probability vector has {len(raw)} entries, expected {d} for n={n}"
        )
    values = []
    for k, tok in enumerate(raw):
        try:
            values.append(float(tok))
        except ValueError:
            raise InvalidArgumentError(f"entry {k} is not a number: {tok!r}") from None
    return GhzDiagonalState(n, np.array(values))


def _fmt(x: float) -> str:
    return format(x, ".17g")


def _emit_json(payload: dict, out) -> None:
    json.dump(payload, out, indent=2, sort_keys=True)
    out.write("\n")


def _config_dict(args: argparse.Namespace, **extra) -> dict:
    cfg = {
        "subcommand": args.command,
        "eps_class": EPS_CLASS,
        "eps_boundary": EPS_BOUNDARY,
    }
    for key in ("n", "family", "p", "seed", "samples", "threads", "limit", "format"):
        if hasattr(args, key):
            cfg[key] = getattr(args, key)
    cfg.update(extra)
    return cfg


def _cmd_classify(args, out) -> int:
    state = _parse_prob_vector(args.p, args.n)
    result = _classify_state(state)
    _emit_json({"config": _config_dict(args), "result": result.to_json_dict(args.n)}, out)
    return EXIT_OK


def _cmd_mermin(args, out) -> int:
    state = _parse_prob_vector(args.p, args.n)
    violates, boundary = _mermin_mod.violates_mermin(state)
    result = {
        "expectation": _mermin_mod.mermin_expectation(state),
        "bound": _mermin_mod.mermin_bound(args.n),
        "threshold": _mermin_mod.mermin_threshold(args.n),
        "violates": violates,
        "boundary": boundary,
    }
    _emit_json({"config": _config_dict(args), "result": result}, out)
    return EXIT_OK


def _iter_vertices(family: str, n: int):
    if family == "ghz":
        return iter(polytopes.extreme_points_ghz(n))
    if family == "bisep":
        return polytopes.iter_extreme_points_bisep(n)
    if family == "fbi":
        return polytopes.iter_extreme_points_fbi(n)
    raise InvalidArgumentError(f"unknown family {family!r}")


def _cmd_extremes(args, out) -> int:
    vertices = []
    for k, state in enumerate(_iter_vertices(args.family, args.n)):
        if args.limit is not None and k >= args.limit:
            break
        vertices.append(state.p.tolist())
    payload = {
        "config": _config_dict(args),
        "family": args.family,
        "n": args.n,
        "count": polytopes.vertex_count(_POLYTOPE_FAMILY[args.family], args.n),
        "vertices": vertices,
    }
    _emit_json(payload, out)
    return EXIT_OK


def _cmd_facets(args, out) -> int:
    if args.family == "ghz":
        facets = iter(polytopes.facets_ghz(args.n))
    elif args.family == "bisep":
        facets = iter(polytopes.facets_bisep(args.n))
    else:
        facets = polytopes.iter_facets_fbi(args.n)
    rows = []
    for k, f in enumerate(facets):
        if args.limit is not None and k >= args.limit:
            break
        rows.append({"label": f.label, "coeffs": f.coeffs.tolist(), "offset": f.offset})
    payload = {
        "config": _config_dict(args),
        "family": args.family,
        "n": args.n,
        "count": polytopes.facet_count(_POLYTOPE_FAMILY[args.family], args.n),
        "facets": rows,
    }
    _emit_json(payload, out)
    return EXIT_OK


def _cmd_ball(args, out) -> int:
    ball = polytopes.inscribed_ball(_POLYTOPE_FAMILY[args.family], args.n)
    payload = {
        "config": _config_dict(args),
        "family": args.family,
        "n": args.n,
        "center": ball.center.p.tolist(),
        "radius": ball.radius,
    }
    _emit_json(payload, out)
    return EXIT_OK


def _cmd_volume(args, out) -> int:
    if args.mc:
        report = volume.mc_relative_volume(
            args.family, args.n, samples=args.samples, seed=args.seed, threads=args.threads
        )
    else:
        report = volume.VolumeReport(
            n=args.n, family=args.family, exact=volume.rel_vol_exact(args.family, args.n)
        )
    result = report.to_json_dict()
    result["vol_hs"] = volume.vol_exact(args.family, args.n)
    if args.family in volume.MC_FAMILIES:
        result["rvr"] = volume.rvr(args.family, args.n)
    _emit_json({"config": _config_dict(args), "result": result}, out)
    return EXIT_OK


def _cmd_certify(args, out) -> int:
    if args.pair is not None:
        bits = args.pair.split(",")
        if len(bits) != 2:
            raise InvalidArgumentError("--pair takes two comma-separated bit strings")
        i, n_i = from_bits(bits[0].strip())
        j, n_j = from_bits(bits[1].strip())
        if n_i != args.n or n_j != args.n:
            raise InvalidArgumentError(f"pair indices must have length n={args.n}")
        cert = certify_midpoint(args.n, i, j)
    elif args.sigma is not None:
        if args.bipartition is None:
            raise InvalidArgumentError("--sigma requires --bipartition")
        sigma = []
        for tok in args.sigma.split(","):
            idx, n_idx = from_bits(tok.strip())
            if n_idx != args.n:
                raise InvalidArgumentError(f"selection indices must have length n={args.n}")
            sigma.append(idx)
        positions = frozenset(int(tok) for tok in args.bipartition.split(","))
        bp = Bipartition(args.n, positions)
        cert = cube_vertex_decomposition(args.n, sigma, bp)
    else:
        raise InvalidArgumentError("certify needs either --pair or --sigma")
    _emit_json({"config": _config_dict(args), "result": cert.to_json_dict()}, out)
    return EXIT_OK


REPORT_COLUMNS = [
    "n",
    "d",
    "rel_genuine",
    "rel_bisep_minus_fbi",
    "rel_fbi",
    "rel_mermin",
    "rvr_genuine",
    "rvr_bisep_minus_fbi",
    "rvr_fbi",
    "rvr_mermin",
    "ball_radius",
    "nu",
    "mu",
    "dist_hm_fbi",
    "bisep_vertices",
    "bisep_facets",
    "fbi_vertices",
    "fbi_facets",
]


def _report_row(n: int, mc: bool, samples: int, seed: int, threads: int) -> dict:
    d = dimension(n)
    row: dict = {"n": n, "d": d}
    for fam in volume.MC_FAMILIES:
        row[f"rel_{fam}"] = volume.rel_vol_exact(fam, n)
        row[f"rvr_{fam}"] = volume.rvr(fam, n)
    row["ball_radius"] = polytopes.inscribed_ball("GHZ", n).radius
    row["nu"] = _mermin_mod.mermin_threshold(n) if n >= 2 else ""
    row["mu"] = _mermin_mod.mermin_bound(n) if n >= 2 else ""
    row["dist_hm_fbi"] = _mermin_mod.dist_mermin_to_fbi(n) if n >= 3 else ""
    row["bisep_vertices"] = polytopes.vertex_count("BISEP", n)
    row["bisep_facets"] = polytopes.facet_count("BISEP", n)
    row["fbi_vertices"] = polytopes.vertex_count("FBI", n)
    row["fbi_facets"] = polytopes.facet_count("FBI", n)
    if mc and n <= volume.MC_MAX_QUBITS:
        for fam in volume.MC_FAMILIES:
            count = samples if samples else volume.recommended_samples(row[f"rel_{fam}"])
            rep = volume.mc_relative_volume(fam, n, count, seed=seed, threads=threads)
            row[f"mc_{fam}"] = rep.mc_estimate
            row[f"mc_{fam}_stderr"] = rep.mc_stderr
            row[f"mc_{fam}_samples"] = rep.samples
    return row


def _cmd_report(args, out) -> int:
    if args.n_min < 1 or args.n_max < args.n_min:
        raise InvalidArgumentError("need 1 <= n-min <= n-max")
    if args.n_max > 20:
        raise UnsupportedSizeError("report is capped at n = 20")
    columns = list(REPORT_COLUMNS)
    if args.mc:
        for fam in volume.MC_FAMILIES:
            columns += [f"mc_{fam}", f"mc_{fam}_stderr", f"mc_{fam}_samples"]
    rows = [
        _report_row(n, args.mc, args.samples, args.seed, args.threads)
        for n in range(args.n_min, args.n_max + 1)
    ]
    config = _config_dict(args, n_min=args.n_min, n_max=args.n_max, mc=args.mc)
    if args.format == "json":
        _emit_json({"config": config, "columns": columns, "rows": rows}, out)
    else:
        out.write("# config: " + json.dumps(config, sort_keys=True) + "\n")
        out.write(",".join(columns) + "\n")
        for row in rows:
            cells = []
            for col in columns:
                val = row.get(col, "")
                if isinstance(val, float):
                    cells.append(_fmt(val))
                else:
                    cells.append(str(val))
            out.write(",".join(cells) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ghzpolytope",
        description="Polytope geometry of n-qubit GHZ-diagonal states",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_n(p):
        p.add_argument("--n", type=int, required=True, help="qubit count")

    p = sub.add_parser("classify", help="membership tests for a probability vector")
    add_n(p)
    p.add_argument("--p", required=True, help="comma list or file path")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("mermin", help="Mermin expectation, bound, threshold, violation")
    add_n(p)
    p.add_argument("--p", required=True, help="comma list or file path")
    p.set_defaults(func=_cmd_mermin)

    p = sub.add_parser("extremes", help="vertex enumeration")
    add_n(p)
    p.add_argument("--family", choices=sorted(_POLYTOPE_FAMILY), required=True)
    p.add_argument("--limit", type=int, default=None, help="stream at most this many")
    p.set_defaults(func=_cmd_extremes)

    p = sub.add_parser("facets", help="facet enumeration")
    add_n(p)
    p.add_argument("--family", choices=sorted(_POLYTOPE_FAMILY), required=True)
    p.add_argument("--limit", type=int, default=None)
    p.set_defaults(func=_cmd_facets)

    p = sub.add_parser("ball", help="largest inscribed ball")
    add_n(p)
    p.add_argument("--family", choices=sorted(_POLYTOPE_FAMILY), required=True)
    p.set_defaults(func=_cmd_ball)

    p = sub.add_parser("volume", help="closed-form and Monte-Carlo volumes")
    add_n(p)
    p.add_argument("--family", choices=sorted(volume.MC_FAMILIES + (volume.GHZ,)), required=True)
    p.add_argument("--exact", action="store_true", help="closed form only (default)")
    p.add_argument("--mc", action="store_true", help="add a Monte-Carlo estimate")
    p.add_argument("--samples", type=int, default=1_000_000)
    p.add_argument("--seed", type=int, default=_default_seed())
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=_cmd_volume)

    p = sub.add_parser("certify", help="separability certificates for extreme points")
    add_n(p)
    p.add_argument("--pair", help="two comma-separated bit strings, e.g. 000,011")
    p.add_argument("--sigma", help="comma-separated selection of bit strings")
    p.add_argument("--bipartition", help="comma-separated 1-based positions of S")
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("report", help="per-n table of all closed-form quantities")
    p.add_argument("--n-min", type=int, default=2)
    p.add_argument("--n-max", type=int, default=6)
    p.add_argument("--mc", action="store_true")
    p.add_argument("--samples", type=int, default=0, help="0 = auto per quantity")
    p.add_argument("--seed", type=int, default=_default_seed())
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=_cmd_report)

    return parser


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except UnsupportedSizeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED_SIZE
    except (GhzPolytopeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT


if __name__ == "__main__":
    sys.exit(main())
