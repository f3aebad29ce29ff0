"""Monte Carlo upper bounds on the minimum logical weights, plus the optimal-code search.

Each trial draws random coset representatives gamma_X, gamma_Z, gamma_Y and
asks the decoder for a low-weight operator that commutes with every
stabilizer and anticommutes with two of them, i.e. syndrome (0, ..., 0, 1, 1)
against H stacked with those two rows.
"""

from __future__ import annotations

import logging
from dataclasses import asdict, dataclass, field

import numpy as np

from .gf2 import GF2Matrix, gf2_rank
from .decoder import ChannelPriors, Decoder, DecoderConfig, InfeasibleSyndrome
from .pauli import PauliString, StabilizerCode, is_logical, weight
from .xyz import (
    XYZParams,
    build_code,
    code_dimension,
    has_full_repetition_structure,
    y_weight_upper_bound,
)

log = logging.getLogger(__name__)

# the decoder only needs a weight-ranking prior here
DISTANCE_PRIOR_P = 0.01

# which two coset rows fix each logical type
_PARTNERS = {"X": ("Z", "Y"), "Z": ("X", "Y"), "Y": ("X", "Z")}


def default_distance_config() -> DecoderConfig:
    return DecoderConfig(max_bp_iterations=30, osd_order=10)


@dataclass
class DistanceReport:
    d_x_up: int
    d_z_up: int
    d_y_up: int
    trials: int
    seed: int
    witnesses: dict[str, PauliString] = field(default_factory=dict, repr=False)
    trace: list[tuple[int, int, int]] = field(default_factory=list, repr=False)
    skipped: int = 0

    @property
    def distance(self) -> int:
        return min(self.d_x_up, self.d_z_up, self.d_y_up)

    def as_tuple(self) -> tuple[int, int, int]:
        return self.d_x_up, self.d_z_up, self.d_y_up

    def record(self, params: XYZParams | None = None) -> dict:
        out = {}
        if params is not None:
            out.update(a=params.a, b=params.b, n=params.n)
        out.update(d_x_up=self.d_x_up, d_z_up=self.d_z_up, d_y_up=self.d_y_up,
                   trials=self.trials, seed=self.seed)
        return out


def independent_rows(code: StabilizerCode) -> np.ndarray:
    """The stabilizer rows used in the augmented matrix: first cyclic row dropped when redundant."""
    h = code.h_matrix.to_dense()
    if code.independent_rank == h.shape[0] - 1:
        rest = h[1:]
        if gf2_rank(GF2Matrix.from_dense(rest)) == code.independent_rank:
            return rest
    return h


def random_coset_element(logical: PauliString, stabilizers: np.ndarray, rng: np.random.Generator) -> PauliString:
    """logical times a uniformly random GF(2) combination of the stabilizer rows (x|z)."""
    coeffs = rng.integers(0, 2, size=stabilizers.shape[0])
    comb = (coeffs @ stabilizers.astype(np.int64)) & 1
    n = logical.n
    return PauliString(logical.x ^ comb[:n], logical.z ^ comb[n:])


def distance_upper_bound(
    code: StabilizerCode,
    trials: int,
    cfg: DecoderConfig | None = None,
    seed: int = 0,
    keep_trace: bool = False,
    stop_at: tuple[int, int, int] | None = None,
    floor: int | None = None,
) -> DistanceReport:
    """Minimum decoded weight per logical type over ``trials`` random cosets.

    Trial i draws from a generator seeded by (seed, i).  ``stop_at`` ends the
    run early once every bound is at or below the given values; ``floor``
    ends it once any bound drops below ``floor``.
    """
    if code.logicals is None or code.k != 1:
        raise ValueError("distance estimation needs a k = 1 code with logical representatives")
    if trials < 1:
        raise ValueError("trials must be positive")
    cfg = cfg or default_distance_config()
    n = code.n
    stabs = independent_rows(code)
    priors = ChannelPriors.depolarizing(n, DISTANCE_PRIOR_P)
    logicals = code.logicals.as_dict()
    target = np.zeros(stabs.shape[0] + 2, dtype=np.uint8)
    target[-2:] = 1
    best = {s: n for s in "XZY"}
    wit: dict[str, PauliString] = dict(logicals)
    trace = []
    skipped = 0
    done = 0
    for i in range(trials):
        rng = np.random.default_rng([seed, i])
        gammas = {s: random_coset_element(logicals[s], stabs, rng) for s in "XZY"}
        for sigma in "XZY":
            g1, g2 = (gammas[t] for t in _PARTNERS[sigma])
            aug = np.vstack([stabs, g1.symplectic(), g2.symplectic()])
            try:
                res = Decoder(aug, cfg).decode(target, priors)
            except InfeasibleSyndrome:
                log.warning("trial %d (%s): decoder reported infeasible syndrome; skipped", i, sigma)
                skipped += 1
                continue
            w = weight(res.correction)
            if w < best[sigma]:
                if not is_logical(code, res.correction):
                    log.warning("trial %d (%s): decoded operator is not logical; ignored", i, sigma)
                    continue
                best[sigma] = w
                wit[sigma] = res.correction
        done = i + 1
        if keep_trace:
            trace.append((best["X"], best["Z"], best["Y"]))
        if stop_at is not None and all(best[s] <= t for s, t in zip("XZY", stop_at)):
            break
        if floor is not None and min(best.values()) < floor:
            break
    return DistanceReport(best["X"], best["Z"], best["Y"], done, seed, wit, trace, skipped)


def exhaustive_distance(code: StabilizerCode, w_max: int, max_candidates: int = 5 * 10**7) -> int | None:
    """Smallest weight <= w_max carrying a logical operator, by enumeration."""
    from .oracle import EnumerationBudget, min_logical_weight

    return min_logical_weight(code, EnumerationBudget(max_candidates=max_candidates, max_weight=w_max))


def distance_target(b: int) -> int:
    return y_weight_upper_bound(b)


def search_optimal(
    b: int,
    a_max: int,
    trials: int = 1000,
    cfg: DecoderConfig | None = None,
    seed: int = 0,
    screen_trials: int = 200,
) -> tuple[int, DistanceReport] | None:
    """Smallest a <= a_max giving an optimal code C(a, b).

    Requires k = 1, repetition structure for X, Y and Z, and an estimated
    distance equal to the target.  Candidates are screened with
    ``screen_trials`` and confirmed with ``trials``.
    """
    target = distance_target(b)
    for a in range(a_max + 1):
        params = XYZParams(a, b)
        if code_dimension(params) != 1 or not has_full_repetition_structure(params):
            continue
        if params.n < target:
            continue
        code = build_code(params)
        # any bound below the target rules the code out, so the screen may stop early
        screen = distance_upper_bound(code, min(screen_trials, trials), cfg, seed, floor=target)
        if screen.distance != target:
            log.debug("C(%d,%d) screened out with %s", a, b, screen.as_tuple())
            continue
        report = distance_upper_bound(code, trials, cfg, seed)
        if report.distance == target:
            return a, report
    return None


def report_dict(report: DistanceReport) -> dict:
    d = asdict(report)
    d.pop("witnesses", None)
    d.pop("trace", None)
    return d
