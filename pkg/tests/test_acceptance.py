"""Acceptance suite: one PASS/FAIL line per criterion.

Lines are printed as each criterion finishes and again in the pytest
terminal summary.  Run directly with ``python3 tests/test_acceptance.py``
to get only the twelve lines.
"""

from __future__ import annotations

import math
import sys
import time
from functools import lru_cache

import numpy as np

from xyzcyclic.decoder import ChannelPriors, Decoder, DecoderConfig
from xyzcyclic.distance import distance_upper_bound, search_optimal
from xyzcyclic.gf2 import naive_rank
from xyzcyclic.noise import (
    NoiseModel,
    TrialRunner,
    intervals_disjoint,
    sample_error,
    threshold_sweep,
    to_csv,
)
from xyzcyclic.oracle import EnumerationBudget, coset_probabilities, min_logical_weight, ml_decode
from xyzcyclic.pauli import PauliString, check_abelian, five_qubit_code, is_logical, weight
from xyzcyclic.xyz import (
    InapplicableError,
    XYZParams,
    build_code,
    code_dimension,
    has_repetition_structure,
    repetition_by_rank,
    x_logical_witness,
    x_witness_a,
    y_logical_witness,
    y_weight_upper_bound,
)

try:
    from conftest import ACCEPTANCE_LINES
except ImportError:  # run as a script from elsewhere
    ACCEPTANCE_LINES = []

SEED = 0
THREE = [XYZParams(5, 0), XYZParams(8, 1), XYZParams(13, 2)]


def _report(n: int, ok: bool, detail: str) -> None:
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line, file=sys.__stdout__, flush=True)
    assert ok, line


def _fmt(est) -> str:
    lo, hi = est.wilson()
    return f"C({est.a},{est.b})={est.p_logical:.4f}[{lo:.4f},{hi:.4f}]"


def _strictly_ordered(ests, decreasing: bool) -> bool:
    pairs = zip(ests, ests[1:])
    if decreasing:
        return all(intervals_disjoint(b, a) for a, b in pairs)
    return all(intervals_disjoint(a, b) for a, b in pairs)


# ---------------------------------------------------------------------------


def test_criterion_01_commutation():
    t0 = time.time()
    bad = [(a, b) for a in range(51) for b in range(51) if not check_abelian(build_code(XYZParams(a, b)))]
    dt = time.time() - t0
    _report(1, not bad and dt <= 60, f"2601 codes, {len(bad)} non-abelian, {dt:.1f}s (limit 60s)")


def test_criterion_02_dimension():
    t0 = time.time()
    bad = []
    for a in range(25):
        for b in range(25):
            p = XYZParams(a, b)
            code = build_code(p)
            h = np.hstack([code.hx, code.hz])
            if code_dimension(p) != p.n - naive_rank(h):
                bad.append((a, b))
    dt = time.time() - t0
    _report(2, not bad and dt <= 120, f"625 codes, {len(bad)} mismatches vs dense rank, {dt:.1f}s (limit 120s)")


def test_criterion_03_repetition():
    mism, k1, k3, k3_bad = [], 0, 0, []
    for a in range(48):
        for b in range(48 - a):
            p = XYZParams(a, b)
            if p.n > 101:
                continue
            if code_dimension(p) == 1:
                k1 += 1
                for s in "XYZ":
                    if has_repetition_structure(p, s) != repetition_by_rank(p, s):
                        mism.append((a, b, s))
            else:
                k3 += 1
                if repetition_by_rank(p, "Z"):
                    k3_bad.append((a, b))
    ok = not mism and not k3_bad
    _report(3, ok, f"{k1} k=1 codes x 3 types: {len(mism)} gcd/rank mismatches; "
                   f"{k3} k=3 codes: {len(k3_bad)} with full-rank Z block")


def test_criterion_04_table_rows():
    t0 = time.time()
    expected_a = {0: 5, 1: 8, 2: 13, 3: 20}
    expected_d = {0: (5, 5, 5), 1: (7, 7, 7), 2: (9, 9, 7), 3: (11, 11, 11)}
    got_a, got_d = {}, {}
    for b in range(4):
        found = search_optimal(b, 25, trials=1000, seed=SEED)
        got_a[b] = None if found is None else found[0]
        rep = distance_upper_bound(build_code(XYZParams(expected_a[b], b)), 1000, seed=SEED)
        got_d[b] = rep.as_tuple()
    dt = time.time() - t0
    ok = got_a == expected_a and got_d == expected_d and dt <= 900
    detail = (f"search a={[got_a[b] for b in range(4)]} (expected {list(expected_a.values())}); "
              f"T=1000 bounds {[got_d[b] for b in range(4)]}; {dt:.0f}s (limit 900s)")
    _report(4, ok, detail)


def test_criterion_05_exact_distance():
    t0 = time.time()
    five = min_logical_weight(five_qubit_code(), EnumerationBudget(max_weight=3))
    c50 = build_code(XYZParams(5, 0))
    below = min_logical_weight(c50, EnumerationBudget(max_weight=4))
    at5 = min_logical_weight(c50, EnumerationBudget(max_weight=5))
    dt = time.time() - t0
    ok = five == 3 and below is None and at5 == 5 and dt <= 300
    _report(5, ok, f"[[5,1,3]] d={five}; C(5,0) none<=4: {below is None}, d={at5}; {dt:.1f}s")


def test_criterion_06_x_witnesses():
    pattern_bad, api_bad, refused = [], [], 0
    for b in range(5):
        for l in range(1, 5):
            p = XYZParams(x_witness_a(b, l), b)
            code = build_code(p)
            pat = PauliString.from_label(("I" * (b + 2) + "X" + "I" * (b + 2)) * (2 * l + 1))
            if not (is_logical(code, pat) and weight(pat) == 2 * l + 1):
                pattern_bad.append((b, l))
            try:
                w = x_logical_witness(b, l)
            except InapplicableError:
                # the function's contract rejects k = 3 codes
                refused += 1
                if code.k == 1:
                    api_bad.append((b, l))
                continue
            if w != pat or code.k != 1:
                api_bad.append((b, l))
    dx = [distance_upper_bound(build_code(XYZParams(a, 3)), 500, seed=SEED).d_x_up for a in (10, 21, 32)]
    ok = not pattern_bad and not api_bad and dx == [3, 5, 7]
    _report(6, ok, f"20 (b,l) pairs: {len(pattern_bad)} invalid patterns, {refused} k=3 refusals, "
                   f"{len(api_bad)} API mismatches; d_x_up(T=500) for a=10,21,32: {dx}")


def test_criterion_07_y_witnesses():
    rows = {0: 5, 1: 8, 2: 13, 3: 20, 4: 34, 5: 28, 6: 54, 7: 64}
    weights, bad = [], []
    for b, a in rows.items():
        p = XYZParams(a, b)
        try:
            y = y_logical_witness(p)
        except Exception as e:  # noqa: BLE001 - any failure is a criterion failure
            bad.append((b, type(e).__name__))
            weights.append(None)
            continue
        weights.append(weight(y))
        if not is_logical(build_code(p), y) or weight(y) != y_weight_upper_bound(b):
            bad.append((b, weight(y)))
    _report(7, not bad, f"weights {weights} (expected [5, 7, 7, 11, 13, 13, 17, 19]); failures {bad}")


@lru_cache(maxsize=None)
def _pure_sweep_csv() -> tuple[str, tuple]:
    noise = NoiseModel.pure("Z", 0.0)
    at_half = threshold_sweep([XYZParams(5, 0)], noise, [0.5], 10_000, seed=SEED)
    at_03 = threshold_sweep([XYZParams(5, 0), XYZParams(8, 1)], noise, [0.3], 10_000, seed=SEED)
    ests = tuple(at_half + at_03)
    return to_csv(ests), ests


def test_criterion_08_pure_noise():
    t0 = time.time()
    _, (half, c50, c81) = _pure_sweep_csv()
    ok_i = abs(half.p_logical - 0.5) <= 0.02
    ok_ii = intervals_disjoint(c81, c50)
    # residual shape on the same trial streams
    odd = 0
    for params, p in ((XYZParams(5, 0), 0.5), (XYZParams(5, 0), 0.3), (XYZParams(8, 1), 0.3)):
        runner = TrialRunner(build_code(params), NoiseModel.pure("Z", p), params=params)
        for i in range(10_000):
            rec = runner.run(np.random.default_rng([SEED, i]))
            if weight(rec.residual) not in (0, params.n):
                odd += 1
    dt = time.time() - t0
    ok = ok_i and ok_ii and odd == 0 and dt <= 300
    _report(8, ok, f"(i) C(5,0)@0.5={half.p_logical:.4f}; (ii) @0.3 {_fmt(c81)} < {_fmt(c50)}: {ok_ii}; "
                   f"(iii) {odd} residuals outside {{trivial, weight N}}; {dt:.0f}s")


def test_criterion_09_depolarizing_crossing():
    t0 = time.time()
    low = threshold_sweep(THREE, NoiseModel.depolarizing(0.0), [0.08], 20_000, seed=SEED)
    high = threshold_sweep(THREE, NoiseModel.depolarizing(0.0), [0.18], 20_000, seed=SEED)
    dt = time.time() - t0
    ok_low = _strictly_ordered(low, decreasing=True)
    ok_high = _strictly_ordered(high, decreasing=False)
    ok = ok_low and ok_high and dt <= 1200
    _report(9, ok, f"p=0.08 decreasing {ok_low}: {' '.join(map(_fmt, low))}; "
                   f"p=0.18 increasing {ok_high}: {' '.join(map(_fmt, high))}; {dt:.0f}s")


def test_criterion_10_biased():
    t0 = time.time()
    ests = threshold_sweep(THREE, NoiseModel.z_biased(0.0, 1000), [0.30], 20_000, seed=SEED)
    dt = time.time() - t0
    ok_order = _strictly_ordered(ests, decreasing=True)
    _report(10, ok_order and dt <= 600, f"eta=1000 p=0.30 decreasing {ok_order}: {' '.join(map(_fmt, ests))}; {dt:.0f}s")


def test_criterion_11_decoder_soundness():
    rng = np.random.default_rng(SEED)
    big = [p for p in (XYZParams(a, b) for a in range(24) for b in range(24)) if p.n <= 53 and code_dimension(p) == 1]
    small_codes = [five_qubit_code(), build_code(XYZParams(0, 0))]
    full = DecoderConfig(osd_method="exhaustive", osd_order=24, force_osd=True)
    sim = DecoderConfig(max_bp_iterations=30, osd_order=10)
    decoders: dict = {}
    syn_bad = ml_checked = ml_bad = ties = 0
    total = 10_000
    for i in range(total):
        if i % 5 == 0:
            code = small_codes[(i // 5) % 2]
            key, cfg = ("small", id(code)), full
        else:
            params = big[rng.integers(len(big))]
            code = build_code(params)
            key, cfg = params, sim
        dec = decoders.get(key)
        if dec is None:
            dec = decoders[key] = Decoder(code.h_matrix, cfg)
        p = float(rng.uniform(0.01, 0.3))
        rates = (p / 3,) * 3
        err = sample_error(code.n, rates, rng)
        syn = code.syndrome(err)
        res = dec.decode(syn, ChannelPriors.iid(code.n, *rates))
        if not np.array_equal(code.syndrome(res.correction), syn):
            syn_bad += 1
        if code.n <= 7:
            ml_checked += 1
            ml, mode = ml_decode(code, syn, rates)
            assert mode == "coset"
            if not code.in_stabilizer_group(res.correction * ml):
                pa = coset_probabilities(code, res.correction, rates)
                pb = coset_probabilities(code, ml, rates)
                if math.isclose(pa, pb, rel_tol=1e-12):
                    ties += 1  # equally probable cosets: both choices are ML
                else:
                    ml_bad += 1
    ok = syn_bad == 0 and ml_bad == 0
    _report(11, ok, f"{total} instances over {len(big) + 2} codes: {syn_bad} syndrome mismatches; "
                    f"{ml_checked} n<=7 instances: {ml_bad} coset disagreements with ML ({ties} exact ties)")


def test_criterion_12_determinism():
    first, _ = _pure_sweep_csv()
    _pure_sweep_csv.cache_clear()
    second, _ = _pure_sweep_csv()
    small = [XYZParams(5, 0), XYZParams(8, 1)]
    dep_a = to_csv(threshold_sweep(small, NoiseModel.depolarizing(0.0), [0.1, 0.16], 1000, seed=SEED))
    dep_b = to_csv(threshold_sweep(small, NoiseModel.depolarizing(0.0), [0.1, 0.16], 1000, seed=SEED, workers=2))
    ok = first == second and dep_a == dep_b
    _report(12, ok, f"pure-Z acceptance CSV repeat identical: {first == second}; "
                    f"depolarizing CSV identical across 1 and 2 workers: {dep_a == dep_b}")


if __name__ == "__main__":
    fails = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                fails += 1
    sys.exit(1 if fails else 0)
