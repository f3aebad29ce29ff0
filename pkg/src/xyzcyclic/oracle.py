"""Brute-force references: exhaustive ML decoding and low-weight logical enumeration.

Nothing here touches the BP/OSD decoder, so these results can certify it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product

import numpy as np
from numba import njit

from .gf2 import RowspaceTester, GF2Matrix
from .pauli import PauliString, StabilizerCode, is_logical, symplectic_product


class BudgetExceeded(RuntimeError):
    def __init__(self, cost: int, budget: int):
        super().__init__(f"enumeration needs {cost} candidates, budget is {budget}")
        self.cost = cost
        self.budget = budget


@dataclass(frozen=True)
class EnumerationBudget:
    max_candidates: int = 10**8
    max_weight: int = 8


def enumeration_cost(n: int, w_max: int) -> int:
    """Number of Pauli strings of weight 1..w_max on n qubits."""
    return sum(math.comb(n, w) * 3**w for w in range(1, w_max + 1))


def _syndrome_columns(code: StabilizerCode) -> np.ndarray:
    """cols[q, w] = packed syndrome of Pauli w (1=X, 2=Z, 3=Y) on qubit q."""
    m = len(code.generators)
    nwords = max(1, -(-m // 64))
    cols = np.zeros((code.n, 4, nwords), dtype=np.uint64)
    for q in range(code.n):
        for w, (x, z) in ((1, (1, 0)), (2, (0, 1)), (3, (1, 1))):
            # anticommutes with generator r iff x*hz[r,q] + z*hx[r,q] is odd
            bits = (x * code.hz[:, q] + z * code.hx[:, q]) & 1
            for r in np.flatnonzero(bits):
                cols[q, w, r >> 6] |= np.uint64(1) << np.uint64(r & 63)
    return cols


@njit(cache=True)
def _dfs_zero_syndrome(cols, w, max_hits):
    """All weight-w Pauli strings with zero syndrome (up to max_hits).

    Returns (count, qubits[hits, w], paulis[hits, w], exhausted).
    """
    n = cols.shape[0]
    nwords = cols.shape[2]
    acc = np.zeros((w + 1, nwords), dtype=np.uint64)
    qs = np.zeros(w, dtype=np.int64)
    ps = np.ones(w, dtype=np.int64)
    out_q = np.zeros((max_hits, w), dtype=np.int64)
    out_p = np.zeros((max_hits, w), dtype=np.int64)
    hits = 0
    # iterative DFS over strictly increasing qubit positions and Pauli labels
    depth = 0
    qs[0] = 0
    ps[0] = 1
    while depth >= 0:
        q = qs[depth]
        if q > n - (w - depth):
            depth -= 1
            if depth >= 0:
                # advance parent
                if ps[depth] < 3:
                    ps[depth] += 1
                else:
                    ps[depth] = 1
                    qs[depth] += 1
            continue
        p = ps[depth]
        for k in range(nwords):
            acc[depth + 1, k] = acc[depth, k] ^ cols[q, p, k]
        if depth == w - 1:
            zero = True
            for k in range(nwords):
                if acc[depth + 1, k] != 0:
                    zero = False
                    break
            if zero:
                if hits == max_hits:
                    return hits, out_q, out_p, False
                for j in range(w):
                    out_q[hits, j] = qs[j]
                    out_p[hits, j] = ps[j]
                hits += 1
            if ps[depth] < 3:
                ps[depth] += 1
            else:
                ps[depth] = 1
                qs[depth] += 1
        else:
            depth += 1
            qs[depth] = q + 1
            ps[depth] = 1
    return hits, out_q, out_p, True


def _to_pauli(n: int, qs, ps) -> PauliString:
    x = np.zeros(n, dtype=np.uint8)
    z = np.zeros(n, dtype=np.uint8)
    for q, p in zip(qs, ps):
        x[q] = p & 1
        z[q] = p >> 1
    return PauliString(x, z)


def _check_budget(n: int, budget: EnumerationBudget, w_max: int) -> None:
    if w_max > budget.max_weight:
        raise BudgetExceeded(enumeration_cost(n, w_max), enumeration_cost(n, budget.max_weight))
    cost = enumeration_cost(n, w_max)
    if cost > budget.max_candidates:
        raise BudgetExceeded(cost, budget.max_candidates)


def _logicals_of_weight(code: StabilizerCode, cols, w: int, first_only: bool) -> list[PauliString]:
    max_hits = 1 << 12
    while True:
        hits, oq, op, done = _dfs_zero_syndrome(cols, w, max_hits)
        if done:
            break
        max_hits *= 8
    found = []
    for i in range(hits):
        p = _to_pauli(code.n, oq[i], op[i])
        if not code.in_stabilizer_group(p):
            found.append(p)
            if first_only:
                break
    return found


def min_logical_weight(code: StabilizerCode, budget: EnumerationBudget) -> int | None:
    """Smallest weight <= budget.max_weight of any logical operator, or None."""
    _check_budget(code.n, budget, budget.max_weight)
    cols = _syndrome_columns(code)
    for w in range(1, budget.max_weight + 1):
        if _logicals_of_weight(code, cols, w, first_only=True):
            return w
    return None


def logical_class(code: StabilizerCode, p: PauliString) -> str:
    """Which of X_L, Y_L, Z_L the logical p is equivalent to (k = 1 codes)."""
    if code.logicals is None:
        raise ValueError("code has no logical representatives")
    ax = symplectic_product(p, code.logicals.x_rep)
    az = symplectic_product(p, code.logicals.z_rep)
    return {(0, 1): "X", (1, 0): "Z", (1, 1): "Y"}.get((ax, az), "I")


def enumerate_logicals(code: StabilizerCode, w_max: int, budget: EnumerationBudget | None = None) -> list[PauliString]:
    """Every logical of weight <= w_max, sorted by class (X, Y, Z) then weight then label."""
    budget = budget or EnumerationBudget(max_weight=w_max)
    _check_budget(code.n, budget, w_max)
    cols = _syndrome_columns(code)
    found = []
    for w in range(1, w_max + 1):
        found.extend(_logicals_of_weight(code, cols, w, first_only=False))
    if code.logicals is not None:
        key = lambda p: (logical_class(code, p), int(np.count_nonzero(p.x | p.z)), p.label)  # noqa: E731
    else:
        key = lambda p: (int(np.count_nonzero(p.x | p.z)), p.label)  # noqa: E731
    return sorted(found, key=key)


# ---------------------------------------------------------------------------
# maximum-likelihood decoding by enumeration

FULL_PAULI_MAX_N = 10
BINARY_MAX_N = 20
COSET_AWARE_MAX_N = 7


def _all_paulis(n: int) -> tuple[np.ndarray, np.ndarray]:
    idx = np.arange(4**n, dtype=np.int64)
    digits = (idx[:, None] // (4 ** np.arange(n))) % 4  # 0=I,1=X,2=Z,3=Y
    return (digits & 1).astype(np.uint8), (digits >> 1).astype(np.uint8)


def ml_decode(code: StabilizerCode, syndrome, rates, budget: EnumerationBudget | None = None) -> tuple[PauliString, str]:
    """Most likely correction for ``syndrome`` under i.i.d. (p_X, p_Y, p_Z).

    For n <= 7 the most probable coset is chosen (probabilities summed over
    stabilizer multiples) and its most likely member returned; above that the
    single most probable error.  Returns (correction, mode).
    """
    budget = budget or EnumerationBudget()
    n = code.n
    if n > FULL_PAULI_MAX_N or 4**n > budget.max_candidates:
        raise BudgetExceeded(4**n, min(budget.max_candidates, 4**FULL_PAULI_MAX_N))
    px, py, pz = rates
    pi = 1.0 - px - py - pz
    syn = np.asarray(syndrome, dtype=np.int64).ravel()
    x, z = _all_paulis(n)
    s = (x.astype(np.int64) @ code.hz.T.astype(np.int64) + z.astype(np.int64) @ code.hx.T.astype(np.int64)) & 1
    match = np.all(s == syn[None, :], axis=1)
    if not match.any():
        raise ValueError("syndrome is not produced by any Pauli error")
    x, z = x[match], z[match]
    table = np.array([pi, px, pz, py])  # indexed by x + 2z
    with np.errstate(divide="ignore"):
        logp = np.log(table)[x + 2 * z].sum(axis=1)
    if n <= COSET_AWARE_MAX_N:
        tester = RowspaceTester(code.h_matrix)
        mass: dict[bytes, float] = {}
        rep: dict[bytes, int] = {}
        for i in range(x.shape[0]):
            key = tester.residue(np.concatenate([x[i], z[i]])).tobytes()
            mass[key] = mass.get(key, 0.0) + math.exp(logp[i])
            j = rep.get(key)
            if j is None or logp[i] > logp[j]:
                rep[key] = i
        best = max(mass, key=lambda k: (mass[k], logp[rep[k]]))
        i = rep[best]
        return PauliString(x[i], z[i]), "coset"
    i = int(np.argmax(logp))
    return PauliString(x[i], z[i]), "error"


def coset_probabilities(code: StabilizerCode, error_class_rep: PauliString, rates) -> float:
    """Total probability of the coset error_class_rep * S (brute force over the group)."""
    px, py, pz = rates
    table = np.array([1.0 - px - py - pz, px, pz, py])
    h = code.h_matrix.to_dense()
    basis, _ = GF2Matrix.from_dense(h).echelon()
    from .gf2 import unpack_rows

    rows = unpack_rows(basis, 2 * code.n).astype(np.int64)
    total = 0.0
    n = code.n
    for coeffs in product((0, 1), repeat=rows.shape[0]):
        v = (np.asarray(coeffs) @ rows) & 1 if rows.shape[0] else np.zeros(2 * n, dtype=np.int64)
        ex = error_class_rep.x ^ v[:n].astype(np.uint8)
        ez = error_class_rep.z ^ v[n:].astype(np.uint8)
        total += float(np.prod(table[ex + 2 * ez]))
    return total


def ml_decode_binary(check, syndrome, p: float, budget: EnumerationBudget | None = None) -> np.ndarray:
    """Most probable bit pattern e with check @ e = syndrome (i.i.d. flips, rate p)."""
    budget = budget or EnumerationBudget()
    h = np.asarray(check, dtype=np.int64) & 1
    n = h.shape[1]
    if n > BINARY_MAX_N or 2**n > budget.max_candidates:
        raise BudgetExceeded(2**n, min(budget.max_candidates, 2**BINARY_MAX_N))
    syn = np.asarray(syndrome, dtype=np.int64).ravel()
    idx = np.arange(2**n, dtype=np.int64)
    pats = ((idx[:, None] >> np.arange(n)) & 1).astype(np.int64)
    ok = np.all(((pats @ h.T) & 1) == syn[None, :], axis=1)
    if not ok.any():
        raise ValueError("syndrome is not in the column space")
    pats = pats[ok]
    w = pats.sum(axis=1)
    with np.errstate(divide="ignore"):
        logp = w * np.log(p) + (n - w) * np.log1p(-p)
    # ties go to the lowest pattern index
    return pats[int(np.argmax(logp))].astype(np.uint8)


def is_oracle_logical(code: StabilizerCode, p: PauliString) -> bool:
    return is_logical(code, p)
