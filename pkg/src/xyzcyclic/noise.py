"""Code-capacity Monte Carlo: Pauli channels, logical error rates and sweeps.

Trial i of a run draws from ``np.random.default_rng([seed, i])``, so any
split of the trials across workers reproduces the same counts.
"""

from __future__ import annotations

import csv
import io
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Literal, Sequence

import numpy as np

from .decoder import BinaryDecoder, ChannelPriors, Decoder, DecoderConfig, InfeasibleSyndrome
from .pauli import PauliString, StabilizerCode, symplectic_product
from .xyz import XYZParams, build_code, sigma_polynomial
from .gf2 import circulant_dense

CSV_SCHEMA_VERSION = 1
CSV_COLUMNS = ("a", "b", "n", "noise_kind", "eta", "p", "trials", "failures", "p_logical", "stderr", "seed")

NoiseKind = Literal["depolarizing", "z_biased", "pure"]


def default_simulation_config() -> DecoderConfig:
    return DecoderConfig(max_bp_iterations=30, osd_order=10)


@dataclass(frozen=True)
class NoiseModel:
    kind: NoiseKind
    p: float
    eta: float | None = None
    sigma: str | None = None

    def __post_init__(self):
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"physical error rate must lie in [0, 1], got {self.p}")
        if self.kind == "z_biased":
            if self.eta is None or not self.eta > 0:
                raise ValueError("bias ratio eta must be positive")
        elif self.kind == "pure":
            if self.sigma not in ("X", "Y", "Z"):
                raise ValueError("pure noise needs sigma in X, Y, Z")
        elif self.kind != "depolarizing":
            raise ValueError(f"unknown noise kind {self.kind!r}")

    @classmethod
    def depolarizing(cls, p: float) -> NoiseModel:
        return cls("depolarizing", p)

    @classmethod
    def z_biased(cls, p: float, eta: float) -> NoiseModel:
        return cls("z_biased", p, eta=eta)

    @classmethod
    def pure(cls, sigma: str, p: float) -> NoiseModel:
        return cls("pure", p, sigma=sigma.upper())

    def with_p(self, p: float) -> NoiseModel:
        return NoiseModel(self.kind, p, self.eta, self.sigma)

    @property
    def label(self) -> str:
        if self.kind == "pure":
            return f"pure_{self.sigma}"
        return self.kind


def channel_rates(noise: NoiseModel) -> tuple[float, float, float]:
    """(p_X, p_Y, p_Z); the Z bias convention is eta = p_Z / (p_X + p_Y) with p_X = p_Y."""
    p = noise.p
    if noise.kind == "depolarizing":
        return p / 3, p / 3, p / 3
    if noise.kind == "pure":
        return tuple(p if s == noise.sigma else 0.0 for s in "XYZ")  # type: ignore[return-value]
    eta = noise.eta
    if eta is None or eta <= 0:
        raise ValueError("bias ratio eta must be positive")
    pz = p * eta / (eta + 1)
    px = p / (2 * (eta + 1))
    return px, px, pz


def sample_error(n: int, rates: Sequence[float], rng: np.random.Generator) -> PauliString:
    """i.i.d. Pauli channel: X, Y, Z on each qubit with the given rates."""
    px, py, pz = rates
    u = rng.random(n)
    is_x = u < px
    is_y = (u >= px) & (u < px + py)
    is_z = (u >= px + py) & (u < px + py + pz)
    return PauliString(is_x | is_y, is_z | is_y)


@dataclass
class TrialRecord:
    error: PauliString
    correction: PauliString | None
    outcome: Literal["success", "failure", "infeasible"]

    @property
    def residual(self) -> PauliString | None:
        if self.correction is None:
            return None
        return self.error * self.correction

    @property
    def failed(self) -> bool:
        return self.outcome == "failure"


def classify_residual(code: StabilizerCode, residual: PauliString) -> Literal["success", "failure"]:
    """Failure iff the (syndrome-free) residual anticommutes with X_L or Z_L."""
    lx, lz = code.logicals.x_rep, code.logicals.z_rep
    if symplectic_product(residual, lx) or symplectic_product(residual, lz):
        return "failure"
    return "success"


class TrialRunner:
    """Decoders and channel data for one (code, noise) pair, reused across trials."""

    def __init__(self, code: StabilizerCode, noise: NoiseModel, cfg: DecoderConfig | None = None,
                 params: XYZParams | None = None, pure_route: bool = True):
        if code.logicals is None or code.k != 1:
            raise ValueError("simulation needs a k = 1 code with logical representatives")
        self.code = code
        self.noise = noise
        self.cfg = cfg or default_simulation_config()
        self.rates = channel_rates(noise)
        self.pure_block = None
        if noise.kind == "pure" and pure_route:
            if params is None:
                raise ValueError("the single-circulant route needs the family parameters")
            block = circulant_dense(sigma_polynomial(params, noise.sigma), params.n)
            self.pure_block = BinaryDecoder(block, self.cfg)
        else:
            self.decoder = Decoder(code.h_matrix, self.cfg)
            self.priors = ChannelPriors.iid(code.n, *self.rates)

    def run(self, rng: np.random.Generator, error: PauliString | None = None) -> TrialRecord:
        code = self.code
        if error is None:
            error = sample_error(code.n, self.rates, rng)
        try:
            if self.pure_block is not None:
                sigma = self.noise.sigma
                pattern = error.z if sigma == "Z" else error.x
                syn = (self.pure_block.m.astype(np.int64) @ pattern) & 1
                fix, *_ = self.pure_block.decode(syn, self.noise.p)
                correction = _pure_string(sigma, fix)
            else:
                correction = self.decoder.decode(code.syndrome(error), self.priors).correction
        except InfeasibleSyndrome:
            return TrialRecord(error, None, "infeasible")
        return TrialRecord(error, correction, classify_residual(code, error * correction))


def _pure_string(sigma: str, bits: np.ndarray) -> PauliString:
    zero = np.zeros_like(bits)
    if sigma == "X":
        return PauliString(bits, zero)
    if sigma == "Z":
        return PauliString(zero, bits)
    return PauliString(bits, bits)


def run_trial(code: StabilizerCode, noise: NoiseModel, cfg: DecoderConfig | None, rng: np.random.Generator,
              params: XYZParams | None = None) -> TrialRecord:
    return TrialRunner(code, noise, cfg, params).run(rng)


@dataclass(frozen=True)
class RateEstimate:
    a: int
    b: int
    n: int
    noise: NoiseModel
    trials: int
    failures: int
    seed: int
    infeasible: int = 0

    @property
    def p_logical(self) -> float:
        return self.failures / self.trials

    @property
    def stderr(self) -> float:
        p = self.p_logical
        return math.sqrt(p * (1 - p) / self.trials)

    def wilson(self, z: float = 1.959963984540054) -> tuple[float, float]:
        """Wilson score interval (95% by default)."""
        n, p = self.trials, self.p_logical
        denom = 1 + z * z / n
        centre = (p + z * z / (2 * n)) / denom
        half = z * math.sqrt(p * (1 - p) / n + z * z / (4 * n * n)) / denom
        return max(0.0, centre - half), min(1.0, centre + half)

    def row(self) -> dict:
        return {
            "a": self.a, "b": self.b, "n": self.n, "noise_kind": self.noise.label,
            "eta": "" if self.noise.eta is None else repr(float(self.noise.eta)),
            "p": repr(float(self.noise.p)), "trials": self.trials, "failures": self.failures,
            "p_logical": f"{self.p_logical:.10g}", "stderr": f"{self.stderr:.10g}", "seed": self.seed,
        }


def _count(args) -> tuple[int, int]:
    params, noise, cfg, seed, start, stop = args
    runner = TrialRunner(build_code(params), noise, cfg, params)
    fails = infeasible = 0
    for i in range(start, stop):
        rec = runner.run(np.random.default_rng([seed, i]))
        fails += rec.outcome == "failure"
        infeasible += rec.outcome == "infeasible"
    return fails, infeasible


def _chunks(trials: int, workers: int) -> list[tuple[int, int]]:
    size = -(-trials // workers)
    return [(s, min(s + size, trials)) for s in range(0, trials, size)]


def logical_error_rate(params: XYZParams, noise: NoiseModel, trials: int, cfg: DecoderConfig | None = None,
                       seed: int = 0, workers: int = 1) -> RateEstimate:
    """Fraction of trials whose residual is a nontrivial logical."""
    if trials < 1:
        raise ValueError("trials must be at least 1")
    cfg = cfg or default_simulation_config()
    jobs = [(params, noise, cfg, seed, s, e) for s, e in _chunks(trials, max(1, workers))]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_count, jobs))
    else:
        parts = [_count(j) for j in jobs]
    fails = sum(f for f, _ in parts)
    infeasible = sum(i for _, i in parts)
    return RateEstimate(params.a, params.b, params.n, noise, trials, fails, seed, infeasible)


def threshold_sweep(codes: Iterable[XYZParams], noise: NoiseModel, p_grid: Sequence[float], trials: int,
                    cfg: DecoderConfig | None = None, seed: int = 0, workers: int = 1) -> list[RateEstimate]:
    """Estimates for every (code, p) pair, code-major in the given order."""
    codes = list(codes)
    if not codes or not p_grid:
        raise ValueError("sweep needs at least one code and one error rate")
    return [logical_error_rate(c, noise.with_p(p), trials, cfg, seed, workers) for c in codes for p in p_grid]


def to_csv(estimates: Iterable[RateEstimate]) -> str:
    buf = io.StringIO()
    buf.write(f"# xyzcyclic sweep schema v{CSV_SCHEMA_VERSION}\n")
    w = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    w.writeheader()
    for est in estimates:
        w.writerow(est.row())
    return buf.getvalue()


def intervals_disjoint(lo: RateEstimate, hi: RateEstimate, z: float = 1.959963984540054) -> bool:
    """True when the upper 95% Wilson bound of ``lo`` is below the lower bound of ``hi``."""
    return lo.wilson(z)[1] < hi.wilson(z)[0]
