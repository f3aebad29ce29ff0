"""Command-line front end.

Results go to stdout (or --out); diagnostics go to stderr.  Failures print a
single JSON line ``{"error": ..., "message": ...}`` to stderr and exit nonzero.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys
import time

import yaml

from . import __version__
from .decoder import DecoderConfig
from .distance import default_distance_config, distance_upper_bound, exhaustive_distance, search_optimal
from .noise import NoiseModel, threshold_sweep, to_csv
from .oracle import BudgetExceeded, EnumerationBudget, enumerate_logicals, logical_class
from .pauli import five_qubit_code, is_logical, weight
from .xyz import (
    InapplicableError,
    WitnessNotFound,
    XYZParams,
    build_code,
    code_dimension,
    dimension_from_gcd,
    has_repetition_structure,
    seed_label,
    x_logical_witness,
    x_witness_a,
    xzzx_rotated_qubits,
    y_logical_witness,
    y_weight_upper_bound,
)

log = logging.getLogger("xyzcyclic")

TABLE_COLUMNS = ("b", "a", "n", "d_x_up", "d_z_up", "d_y_up", "trials", "seed")
OVERHEAD_COLUMNS = ("d", "xyz_n", "xzzx_n")
SCHEMA_VERSION = 1


class UsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _emit(args, text: str) -> None:
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
        log.info("wrote %s", args.out)
    else:
        sys.stdout.write(text)


def _json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def _csv(kind: str, columns, rows) -> str:
    buf = io.StringIO()
    buf.write(f"# xyzcyclic {kind} schema v{SCHEMA_VERSION}\n")
    w = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow(r)
    return buf.getvalue()


def _decoder_cfg(args, base: DecoderConfig) -> DecoderConfig:
    changes = {}
    if getattr(args, "osd_order", None) is not None:
        changes["osd_order"] = args.osd_order
    if getattr(args, "max_iterations", None) is not None:
        changes["max_bp_iterations"] = args.max_iterations
    if not changes:
        return base
    return DecoderConfig(**{**base.__dict__, **changes})


# ---------------------------------------------------------------------------
# commands


def cmd_construct(args) -> None:
    params = XYZParams(args.a, args.b)
    code = build_code(params)
    k = code_dimension(params)
    rep = {}
    for s in "XZY":
        try:
            rep[s] = has_repetition_structure(params, s)
        except InapplicableError:
            rep[s] = "inapplicable"
    _emit(args, _json({
        "a": params.a, "b": params.b, "n": params.n,
        "k": k, "k_rank": code.k, "k_gcd": dimension_from_gcd(params),
        "repetition": rep,
        "s1": seed_label(params),
    }))


def cmd_dimension(args) -> None:
    rows = []
    for a in range(args.a_max + 1):
        for b in range(args.b_max + 1):
            params = XYZParams(a, b)
            closed = code_dimension(params)
            rank = build_code(params).k
            rows.append({"a": a, "b": b, "n": params.n, "k_closed": closed,
                         "k_gcd": dimension_from_gcd(params), "k_rank": rank,
                         "match": int(closed == rank)})
    _emit(args, _csv("dimension", ("a", "b", "n", "k_closed", "k_gcd", "k_rank", "match"), rows))


def cmd_distance(args) -> None:
    params = XYZParams(args.a, args.b)
    code = build_code(params)
    if code.k != 1:
        raise InapplicableError(f"C({args.a},{args.b}) encodes {code.k} qubits; distance estimation needs k = 1")
    t0 = time.time()
    rep = distance_upper_bound(code, args.trials, _decoder_cfg(args, default_distance_config()), args.seed)
    log.info("distance estimate finished in %.1fs", time.time() - t0)
    out = rep.record(params)
    out["witnesses"] = {s: rep.witnesses[s].label for s in "XZY"}
    if args.exact is not None:
        exact = exhaustive_distance(code, args.exact)
        out["exact"] = exact
        out["exact_w_max"] = args.exact
        out["confirmed"] = exact is not None and exact == rep.distance
    _emit(args, _json(out))


def cmd_witness(args) -> None:
    kind = args.type.upper()
    if kind == "X":
        if args.l is None:
            raise UsageError("witness X needs --l")
        p = x_logical_witness(args.b, args.l)
        params = XYZParams(x_witness_a(args.b, args.l), args.b)
    else:
        if args.a is None:
            raise UsageError("witness Y needs --a")
        params = XYZParams(args.a, args.b)
        p = y_logical_witness(params)
    _emit(args, _json({
        "type": kind, "a": params.a, "b": params.b, "n": params.n,
        "label": p.label, "weight": weight(p),
        "is_logical": is_logical(build_code(params), p),
        "y_bound": y_weight_upper_bound(params.b),
    }))


def cmd_table1(args) -> None:
    rows = []
    for b in range(args.b_min, args.b_max + 1):
        t0 = time.time()
        found = search_optimal(b, args.a_max, args.trials, _decoder_cfg(args, default_distance_config()), args.seed)
        if found is None:
            log.warning("b=%d: no optimal code with a <= %d", b, args.a_max)
            continue
        a, rep = found
        log.info("b=%d -> a=%d %s (%.1fs)", b, a, rep.as_tuple(), time.time() - t0)
        rec = rep.record(XYZParams(a, b))
        rows.append({k: rec[k] for k in TABLE_COLUMNS})
    _emit(args, _csv("table1", TABLE_COLUMNS, rows))


_NOISE_KINDS = {"depolarizing", "z_biased", "pure_x", "pure_y", "pure_z"}


def load_sweep_config(path: str) -> dict:
    """Flat key-value YAML document describing one sweep campaign."""
    with open(path) as fh:
        doc = yaml.safe_load(fh) or {}
    if not isinstance(doc, dict):
        raise UsageError("sweep config must be a flat mapping")
    for key in ("codes", "noise", "p_grid", "trials"):
        if key not in doc:
            raise UsageError(f"sweep config is missing {key!r}")
    return doc


def _parse_codes(entries) -> list[XYZParams]:
    if isinstance(entries, str):
        entries = [c.split(",") for c in entries.replace(" ", "").split(";") if c]
    return [XYZParams(int(a), int(b)) for a, b in entries]


def _noise_from(doc: dict) -> NoiseModel:
    kind = str(doc["noise"]).lower()
    if kind not in _NOISE_KINDS:
        raise UsageError(f"unknown noise {kind!r}; expected one of {sorted(_NOISE_KINDS)}")
    if kind == "depolarizing":
        return NoiseModel.depolarizing(0.0)
    if kind == "z_biased":
        if "eta" not in doc:
            raise UsageError("z_biased noise needs eta")
        return NoiseModel.z_biased(0.0, float(doc["eta"]))
    return NoiseModel.pure(kind[-1], 0.0)


def cmd_sweep(args) -> None:
    doc = load_sweep_config(args.config)
    trials = int(doc["trials"])
    if trials < 1:
        raise UsageError("trials must be at least 1")
    grid = [float(p) for p in doc["p_grid"]]
    codes = _parse_codes(doc["codes"])
    noise = _noise_from(doc)
    cfg = DecoderConfig.from_mapping(doc) if any(
        k in doc for k in ("bp_variant", "max_iterations", "max_bp_iterations", "osd_order", "osd_method", "schedule")
    ) else None
    if args.out is None and doc.get("out"):
        args.out = doc["out"]
    t0 = time.time()
    est = threshold_sweep(codes, noise, grid, trials, cfg, int(doc.get("seed", 0)), args.threads)
    log.info("sweep of %d points finished in %.1fs", len(est), time.time() - t0)
    _emit(args, to_csv(est))


def cmd_overhead(args) -> None:
    for d in args.d:
        if d < 3 or d % 2 == 0:
            raise UsageError(f"distance {d} rejected: family distances are odd and at least 3")
    rows = []
    from .xyz import overhead_pair

    for d in args.d:
        n, xzzx = overhead_pair(d, args.a_max, args.trials, args.seed, _decoder_cfg(args, default_distance_config()))
        rows.append({"d": d, "xyz_n": n, "xzzx_n": xzzx})
        assert xzzx == xzzx_rotated_qubits(d)
    _emit(args, _csv("overhead", OVERHEAD_COLUMNS, rows))


def cmd_oracle(args) -> None:
    if args.five_qubit:
        code, params = five_qubit_code(), None
    else:
        if args.a is None or args.b is None:
            raise UsageError("oracle needs --a and --b, or --five-qubit")
        params = XYZParams(args.a, args.b)
        code = build_code(params)
    budget = EnumerationBudget(max_candidates=args.max_candidates, max_weight=args.w_max)
    found = enumerate_logicals(code, args.w_max, budget)
    out = {"n": code.n, "w_max": args.w_max,
           "distance": min((weight(p) for p in found), default=None),
           "count": len(found)}
    if params is not None:
        out.update(a=params.a, b=params.b)
    if code.logicals is not None:
        out["by_class"] = {c: sum(1 for p in found if logical_class(code, p) == c) for c in "XYZ"}
    if args.list:
        out["logicals"] = [p.label for p in found]
    _emit(args, _json(out))


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="xyzcyclic", description="XYZ cyclic codes: construction, distance and threshold tools")
    ap.add_argument("--version", action="version", version=__version__)
    ap.add_argument("--out", help="write the result here instead of stdout")
    ap.add_argument("--threads", type=int, default=os.cpu_count() or 1, help="worker cap for sweeps")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def decoder_flags(p):
        p.add_argument("--osd-order", type=int)
        p.add_argument("--max-iterations", type=int)

    p = sub.add_parser("construct", help="code report for C(a, b)")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("dimension", help="closed-form vs rank dimension over a grid")
    p.add_argument("--a-max", type=int, default=10)
    p.add_argument("--b-max", type=int, default=10)
    p.set_defaults(func=cmd_dimension)

    p = sub.add_parser("distance", help="Monte Carlo distance upper bounds")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--exact", type=int, metavar="W_MAX", help="confirm by enumeration up to this weight")
    decoder_flags(p)
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("witness", help="closed-form low-weight logicals")
    p.add_argument("type", choices=["X", "Y", "x", "y"])
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--a", type=int)
    p.add_argument("--l", type=int)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("table1", help="optimal codes for a range of b")
    p.add_argument("--b-min", type=int, default=0)
    p.add_argument("--b-max", type=int, default=3)
    p.add_argument("--a-max", type=int, default=60)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    decoder_flags(p)
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("sweep", help="logical error rates from a config document")
    p.add_argument("config")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("overhead", help="qubit counts vs rotated XZZX codes")
    p.add_argument("d", type=int, nargs="+")
    p.add_argument("--a-max", type=int, default=60)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    decoder_flags(p)
    p.set_defaults(func=cmd_overhead)

    p = sub.add_parser("oracle", help="exhaustive logical enumeration")
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--five-qubit", action="store_true")
    p.add_argument("--w-max", type=int, default=5)
    p.add_argument("--max-candidates", type=int, default=10**8)
    p.add_argument("--list", action="store_true")
    p.set_defaults(func=cmd_oracle)
    return ap


def _fail(kind: str, message: str, code: int) -> int:
    sys.stderr.write(json.dumps({"error": kind, "message": message}) + "\n")
    return code


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        return _fail("usage", str(e), 2)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr,
                        format="%(levelname)s %(message)s")
    if args.threads < 1:
        return _fail("usage", "--threads must be at least 1", 2)
    try:
        args.func(args)
    except UsageError as e:
        return _fail("usage", str(e), 2)
    except InapplicableError as e:
        return _fail("inapplicable", str(e), 3)
    except BudgetExceeded as e:
        return _fail("budget_exceeded", str(e), 3)
    except (WitnessNotFound, LookupError) as e:
        return _fail("not_found", str(e), 4)
    except (ValueError, OSError, yaml.YAMLError) as e:
        return _fail(type(e).__name__, str(e), 1)
    return 0


if __name__ == "__main__":
    sys.exit(main())
