"""The XYZ cyclic code family C(a, b).

Every generator is a cyclic shift of the seed row
``X I^b Z I^a Y I Y I^a Z I^b X`` on N = 2(a+b)+7 qubits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .gf2 import GF2Poly, circulant_dense, circulant_rank, poly_gcd
from .pauli import (
    LogicalSet,
    PauliString,
    StabilizerCode,
    is_logical,
    multiply,
    weight,
)


class InapplicableError(ValueError):
    """A family predicate or construction was asked about a code it does not cover."""


class WitnessNotFound(RuntimeError):
    pass


@dataclass(frozen=True, order=True)
class XYZParams:
    a: int
    b: int

    def __post_init__(self):
        if self.a < 0 or self.b < 0:
            raise ValueError("a and b must be natural numbers")

    @property
    def n(self) -> int:
        return 2 * (self.a + self.b) + 7


@dataclass(frozen=True)
class FamilyPolys:
    A: GF2Poly  # x-part of the seed (H_x)
    B: GF2Poly  # z-part of the seed (H_z)
    C: GF2Poly  # A + B, the Y-check circulant


def family_polys(params: XYZParams) -> FamilyPolys:
    a, b, n = params.a, params.b, params.n
    A = GF2Poly.from_exponents([0, a + b + 2, a + b + 4, 2 * (a + b) + 6], n)
    B = GF2Poly.from_exponents([b + 1, a + b + 2, a + b + 4, 2 * a + b + 5], n)
    C = GF2Poly.from_exponents([0, b + 1, 2 * a + b + 5, 2 * (a + b) + 6], n)
    return FamilyPolys(A, B, C)


def seed_label(params: XYZParams) -> str:
    a, b = params.a, params.b
    return "X" + "I" * b + "Z" + "I" * a + "YIY" + "I" * a + "Z" + "I" * b + "X"


def type_logicals(n: int) -> LogicalSet:
    return LogicalSet(PauliString.uniform("X", n), PauliString.uniform("Z", n), PauliString.uniform("Y", n))


@lru_cache(maxsize=256)
def build_code(params: XYZParams) -> StabilizerCode:
    """All N cyclic shifts of the seed; row i is the seed shifted right by i.

    The all-X/all-Z/all-Y logicals are attached when the code encodes one qubit.
    """
    polys = family_polys(params)
    hx = circulant_dense(polys.A, params.n)
    hz = circulant_dense(polys.B, params.n)
    code = StabilizerCode.from_blocks(hx, hz)
    if code.k == 1:
        code.logicals = type_logicals(params.n)
    return code


def independent_generators(code: StabilizerCode) -> StabilizerCode:
    """Drop the first cyclic row (it is the product of the others when k = 1)."""
    return StabilizerCode(code.generators[1:], code.logicals)


def code_dimension(params: XYZParams) -> int:
    """Closed-form number of logical qubits (1 or 3)."""
    a, b = params.a, params.b
    if b % 3 == 0:
        return 1
    if b % 3 == 2:
        return 3 if (a + 1) % 3 == 0 else 1
    return 3 if a % 3 == 0 else 1


def dimension_from_gcd(params: XYZParams) -> int:
    """deg gcd(A, B, x^N + 1), folded as gcd(gcd(A, B), x^N + 1)."""
    p = family_polys(params)
    g = poly_gcd(poly_gcd(p.A, p.B), GF2Poly.x_pow_plus_one(params.n))
    return int(g.degree)


_REPETITION_OFFSETS = {
    "Z": lambda a, b: (a + b + 2, a + b + 4),
    "X": lambda a, b: (a + 1, a + 3),
    "Y": lambda a, b: (b + 1, 2 * a + b + 5),
}


def _check_sigma(sigma: str) -> str:
    sigma = sigma.upper()
    if sigma not in _REPETITION_OFFSETS:
        raise ValueError(f"Pauli type must be one of X, Y, Z, got {sigma!r}")
    return sigma


def has_repetition_structure(params: XYZParams, sigma: str) -> bool:
    """Coprimality test: the only pure-sigma logical is the weight-N string."""
    sigma = _check_sigma(sigma)
    if code_dimension(params) != 1:
        raise InapplicableError(f"C({params.a},{params.b}) encodes 3 qubits; repetition test needs k = 1")
    n = params.n
    return all(math.gcd(m, n) == 1 for m in _REPETITION_OFFSETS[sigma](params.a, params.b))


def sigma_polynomial(params: XYZParams, sigma: str) -> GF2Poly:
    """Circulant whose kernel holds the pure-sigma logicals: A for Z, B for X, C for Y."""
    polys = family_polys(params)
    return {"Z": polys.A, "X": polys.B, "Y": polys.C}[_check_sigma(sigma)]


def repetition_by_rank(params: XYZParams, sigma: str) -> bool:
    return circulant_rank(sigma_polynomial(params, sigma), params.n) == params.n - 1


def has_full_repetition_structure(params: XYZParams) -> bool:
    if code_dimension(params) != 1:
        return False
    return all(has_repetition_structure(params, s) for s in "XYZ")


# ---------------------------------------------------------------------------
# closed-form logical witnesses


def x_witness_a(b: int, l: int) -> int:
    return 2 * l * (b + 2) + l - 1


def x_logical_witness(b: int, l: int) -> PauliString:
    """Weight-(2l+1) logical X for C(2l(b+2)+l-1, b): (I^{b+2} X I^{b+2}) repeated."""
    if b < 0 or l < 1:
        raise ValueError("need b >= 0 and l >= 1")
    params = XYZParams(x_witness_a(b, l), b)
    if code_dimension(params) != 1:
        raise InapplicableError(f"C({params.a},{b}) encodes 3 qubits")
    block = "I" * (b + 2) + "X" + "I" * (b + 2)
    return PauliString.from_label(block * (2 * l + 1))


def y_weight_upper_bound(b: int) -> int:
    if b < 0:
        raise ValueError("b must be nonnegative")
    return 2 * b + 3 if b % 3 == 2 else 2 * b + 5


def _direct_y_witness(a: int, b: int) -> PauliString:
    # equals Y_L times the product of every other row of the independent rows
    label = "Z" * (b + 1) + "I" * (a + 1) + "YY" + "I" * (a + 1) + "Z" * (b + 1) + "Y"
    return PauliString.from_label(label)


def interval_selection_masks(rows: int, run: int = 3, gap: int = 3) -> list[np.ndarray]:
    """Masks over ``rows`` rows: runs of ``run`` selected rows every ``run + gap``, all offsets.

    Besides the plain periodic pattern, each offset is also tried mirrored about
    the centre of the row list, since H* row i and row N - i are reverses of each other.
    """
    period = run + gap
    masks = []
    idx = np.arange(rows)
    for offset in range(period):
        plain = ((idx - offset) % period) < run
        masks.append(plain.astype(np.uint8))
        half = rows // 2
        mirrored = plain.copy()
        mirrored[rows - half:] = plain[:half][::-1]
        masks.append(mirrored.astype(np.uint8))
    return masks


def y_logical_witness(params: XYZParams) -> PauliString:
    """Low-weight logical Y built from a structured product of generators.

    For b = 0 mod 3 the operator has a closed form. Otherwise the product of
    interval-3 row selections over the independent rows, times the all-Y
    logical, is searched over every offset and the lightest valid one kept.
    Raises ``WitnessNotFound`` rather than returning anything heavier than
    ``y_weight_upper_bound(b)``.
    """
    a, b, n = params.a, params.b, params.n
    if code_dimension(params) != 1:
        raise InapplicableError(f"C({a},{b}) encodes 3 qubits")
    code = build_code(params)
    target = y_weight_upper_bound(b)
    y_all = PauliString.uniform("Y", n)

    if b % 3 == 0:
        if a < 1:
            raise WitnessNotFound(f"closed form needs a >= 1, got a={a}")
        cand = _direct_y_witness(a, b)
        if is_logical(code, cand) and weight(cand) == target:
            return cand
        raise WitnessNotFound(f"closed-form witness invalid for C({a},{b})")

    if a < 3:
        raise WitnessNotFound(f"interval-3 selection needs a >= 3, got a={a}")
    hx = code.hx[1:].astype(np.int64)
    hz = code.hz[1:].astype(np.int64)
    best: PauliString | None = None
    for mask in interval_selection_masks(n - 1):
        stab = PauliString((mask @ hx) & 1, (mask @ hz) & 1)
        cand = multiply(stab, y_all)
        if best is not None and weight(cand) >= weight(best):
            continue
        if weight(cand) <= target and is_logical(code, cand):
            best = cand
    if best is None or weight(best) != target:
        raise WitnessNotFound(f"no interval-3 selection reaches weight {target} on C({a},{b})")
    return best


# ---------------------------------------------------------------------------
# block structure for N = kT


def repeated_selection_product(code: StabilizerCode, y: np.ndarray, copies: int) -> PauliString:
    """Product of the generators picked by ``y`` tiled ``copies`` times."""
    sel = np.tile(np.asarray(y, dtype=np.int64), copies)
    if sel.shape[0] != len(code.generators):
        raise ValueError("tiled selection length must equal the number of generators")
    return PauliString((sel @ code.hx) & 1, (sel @ code.hz) & 1)


def xzzx_rotated_qubits(d: int) -> int:
    return d * d


def overhead_pair(d: int, a_max: int = 200, trials: int = 1000, seed: int = 0, cfg=None) -> tuple[int, int]:
    """(N of the shortest optimal XYZ code with distance d, d^2 rotated XZZX qubits)."""
    from .distance import search_optimal

    if d < 3 or d % 2 == 0:
        raise ValueError("distance must be an odd integer >= 3")
    bs = [b for b in range(d) if y_weight_upper_bound(b) == d]
    best = None
    for b in bs:
        found = search_optimal(b, a_max, trials, cfg=cfg, seed=seed)
        if found is not None:
            n = XYZParams(found[0], b).n
            best = n if best is None else min(best, n)
    if best is None:
        raise LookupError(f"no optimal XYZ code of distance {d} with a <= {a_max}")
    return best, xzzx_rotated_qubits(d)
