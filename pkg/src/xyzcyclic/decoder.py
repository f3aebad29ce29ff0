"""BP+OSD syndrome decoding for stabilizer codes and for single binary blocks.

Full Pauli decoding works on the symplectic error vector v = (e_x | e_z)
with check operator (H_z | H_x), so s = H_z e_x + H_x e_z.  Belief
propagation runs on the Tanner graph whose variable side pairs the two bits
of each qubit through a joint factor carrying (p_I, p_X, p_Y, p_Z); the
check-to-qubit messages are scalar LLRs on "commutes with the check's Pauli
on this qubit".  When BP fails to reproduce the syndrome, ordered
statistics decoding over the 2n bit columns, sorted by descending posterior
flip probability, returns a syndrome-matching solution.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Literal

import numpy as np
from numba import njit

from .gf2 import GF2Matrix, GF2Poly, RowspaceTester, circulant_dense, eliminate_packed, pack_rows
from .pauli import PauliString

# Pauli index convention inside kernels: x + 2z  ->  I=0, X=1, Z=2, Y=3
_MSG_CLIP = 40.0


class InfeasibleSyndrome(ValueError):
    """The target syndrome is not in the column space of the check matrix."""


@dataclass(frozen=True)
class ChannelPriors:
    """Per-qubit probabilities, columns ordered (p_I, p_X, p_Y, p_Z)."""

    probs: np.ndarray

    def __post_init__(self):
        p = np.array(self.probs, dtype=np.float64)
        if p.ndim != 2 or p.shape[1] != 4:
            raise ValueError("priors must have shape (n, 4)")
        if np.any(p < 0) or np.any(p > 1):
            raise ValueError("probabilities must lie in [0, 1]")
        if np.any(np.abs(p.sum(axis=1) - 1.0) > 1e-12):
            raise ValueError("per-qubit probabilities must sum to 1")
        p.setflags(write=False)
        object.__setattr__(self, "probs", p)

    @classmethod
    def iid(cls, n: int, p_x: float, p_y: float, p_z: float) -> ChannelPriors:
        row = [1.0 - (p_x + p_y + p_z), p_x, p_y, p_z]
        return cls(np.tile(row, (n, 1)))

    @classmethod
    def depolarizing(cls, n: int, p: float) -> ChannelPriors:
        return cls.iid(n, p / 3, p / 3, p / 3)

    @property
    def n(self) -> int:
        return self.probs.shape[0]


@dataclass(frozen=True)
class DecoderConfig:
    max_bp_iterations: int = 100
    bp_variant: Literal["product_sum", "min_sum"] = "product_sum"
    min_sum_scale: float = 0.625
    osd_order: int = 0
    osd_method: Literal["combination_sweep", "exhaustive"] = "combination_sweep"
    schedule: Literal["parallel", "serial"] = "parallel"
    force_osd: bool = False  # run OSD even when BP converges

    def __post_init__(self):
        if self.max_bp_iterations < 1:
            raise ValueError("max_bp_iterations must be positive")
        if self.bp_variant not in ("product_sum", "min_sum"):
            raise ValueError(f"unknown bp_variant {self.bp_variant!r}")
        if self.bp_variant == "min_sum" and not 0 < self.min_sum_scale <= 1:
            raise ValueError("min-sum scaling factor must lie in (0, 1]")
        if self.osd_order < 0:
            raise ValueError("osd_order must be nonnegative")
        if self.osd_method not in ("combination_sweep", "exhaustive"):
            raise ValueError(f"unknown osd_method {self.osd_method!r}")
        if self.osd_method == "exhaustive" and self.osd_order > 24:
            raise ValueError("exhaustive OSD is capped at order 24")
        if self.schedule not in ("parallel", "serial"):
            raise ValueError(f"unknown schedule {self.schedule!r}")

    @classmethod
    def from_mapping(cls, m) -> DecoderConfig:
        keys = {
            "bp_variant": ("bp_variant", str),
            "max_iterations": ("max_bp_iterations", int),
            "max_bp_iterations": ("max_bp_iterations", int),
            "osd_order": ("osd_order", int),
            "osd_method": ("osd_method", str),
            "schedule": ("schedule", str),
            "min_sum_scale": ("min_sum_scale", float),
            "force_osd": ("force_osd", bool),
        }
        kwargs = {}
        for k, v in m.items():
            if k in keys:
                name, conv = keys[k]
                kwargs[name] = conv(v)
        return cls(**kwargs)


@dataclass
class DecodeResult:
    correction: PauliString
    converged: bool
    used_osd: bool
    iterations: int
    posterior: np.ndarray = field(repr=False, default=None)


# ---------------------------------------------------------------------------
# numba kernels


@njit(cache=True)
def _softplus(x):
    if x > 0:
        return x + math.log1p(math.exp(-x))
    return math.log1p(math.exp(x))


@njit(cache=True)
def _logaddexp(a, b):
    if a > b:
        return a + math.log1p(math.exp(b - a))
    return b + math.log1p(math.exp(a - b))


@njit(cache=True)
def _clip(x):
    if x > _MSG_CLIP:
        return _MSG_CLIP
    if x < -_MSG_CLIP:
        return -_MSG_CLIP
    return x


@njit(cache=True)
def _var_to_check(gamma, q, s, delta_e):
    # gamma[q, w] for w = 1..3 (X, Z, Y); s is the check's Pauli on q
    g1 = gamma[q, 1] - (delta_e if s != 1 else 0.0)
    g2 = gamma[q, 2] - (delta_e if s != 2 else 0.0)
    g3 = gamma[q, 3] - (delta_e if s != 3 else 0.0)
    if s == 1:
        gc, ga, gb = g1, g2, g3
    elif s == 2:
        gc, ga, gb = g2, g1, g3
    else:
        gc, ga, gb = g3, g1, g2
    return _clip(_softplus(-gc) - _logaddexp(-ga, -gb))


@njit(cache=True)
def _check_update(lam, start, stop, sign, min_sum, scale, out):
    if min_sum:
        neg = 0
        m1 = 1e300
        m2 = 1e300
        arg = -1
        for e in range(start, stop):
            v = lam[e]
            if v < 0:
                neg ^= 1
                v = -v
            if v < m1:
                m2 = m1
                m1 = v
                arg = e
            elif v < m2:
                m2 = v
        for e in range(start, stop):
            mag = m2 if e == arg else m1
            sg = neg ^ (1 if lam[e] < 0 else 0) ^ sign
            val = scale * mag
            out[e] = _clip(-val if sg else val)
    else:
        deg = stop - start
        t = np.empty(deg)
        for i in range(deg):
            t[i] = math.tanh(0.5 * lam[start + i])
        # prefix/suffix products keep exact zeros intact
        pre = np.empty(deg + 1)
        suf = np.empty(deg + 1)
        pre[0] = 1.0
        for i in range(deg):
            pre[i + 1] = pre[i] * t[i]
        suf[deg] = 1.0
        for i in range(deg - 1, -1, -1):
            suf[i] = suf[i + 1] * t[i]
        for i in range(deg):
            prod = pre[i] * suf[i + 1]
            if prod > 1 - 1e-15:
                prod = 1 - 1e-15
            elif prod < -1 + 1e-15:
                prod = -1 + 1e-15
            v = 2.0 * math.atanh(prod)
            out[start + i] = _clip(-v if sign else v)


@njit(cache=True)
def _hard_decision_quat(gamma, n, ex, ez):
    for q in range(n):
        best = 0
        bv = 0.0
        for w in range(1, 4):
            if gamma[q, w] < bv:
                bv = gamma[q, w]
                best = w
        ex[q] = best & 1
        ez[q] = best >> 1


@njit(cache=True)
def _syndrome_matches_quat(cptr, eq, et, syn, ex, ez):
    for c in range(cptr.shape[0] - 1):
        acc = 0
        for e in range(cptr[c], cptr[c + 1]):
            q = eq[e]
            s = et[e]
            # anticommutation of error (ex, ez) with check Pauli s
            acc ^= (ex[q] & (s >> 1)) ^ (ez[q] & (s & 1))
        if acc != syn[c]:
            return False
    return True


@njit(cache=True)
def bp_quaternary(cptr, eq, et, vptr, vedge, syn, prior_llr, max_iter, min_sum, scale, serial):
    """Scalar-message BP over qubits; prior_llr[q, w] = ln(p_I / p_w).

    Returns (ex, ez, converged, iterations, gamma).
    """
    n = prior_llr.shape[0]
    m = cptr.shape[0] - 1
    ne = eq.shape[0]
    gamma = prior_llr.copy()
    delta = np.zeros(ne)
    lam = np.zeros(ne)
    ex = np.zeros(n, dtype=np.uint8)
    ez = np.zeros(n, dtype=np.uint8)
    _hard_decision_quat(gamma, n, ex, ez)
    if _syndrome_matches_quat(cptr, eq, et, syn, ex, ez):
        return ex, ez, True, 0, gamma
    for it in range(1, max_iter + 1):
        if serial:
            for c in range(m):
                for e in range(cptr[c], cptr[c + 1]):
                    lam[e] = _var_to_check(gamma, eq[e], et[e], delta[e])
                old = delta[cptr[c]:cptr[c + 1]].copy()
                _check_update(lam, cptr[c], cptr[c + 1], syn[c], min_sum, scale, delta)
                for e in range(cptr[c], cptr[c + 1]):
                    d = delta[e] - old[e - cptr[c]]
                    q = eq[e]
                    s = et[e]
                    for w in range(1, 4):
                        if w != s:
                            gamma[q, w] += d
        else:
            for e in range(ne):
                lam[e] = _var_to_check(gamma, eq[e], et[e], delta[e])
            for c in range(m):
                _check_update(lam, cptr[c], cptr[c + 1], syn[c], min_sum, scale, delta)
            for q in range(n):
                for w in range(1, 4):
                    gamma[q, w] = prior_llr[q, w]
                for k in range(vptr[q], vptr[q + 1]):
                    e = vedge[k]
                    s = et[e]
                    for w in range(1, 4):
                        if w != s:
                            gamma[q, w] += delta[e]
        _hard_decision_quat(gamma, n, ex, ez)
        if _syndrome_matches_quat(cptr, eq, et, syn, ex, ez):
            return ex, ez, True, it, gamma
    return ex, ez, False, max_iter, gamma


@njit(cache=True)
def bp_binary(cptr, ev, vptr, vedge, syn, prior_llr, max_iter, min_sum, scale, serial):
    """Standard binary BP; prior_llr[v] = ln((1 - p) / p). Returns (e, converged, iterations, llr)."""
    nv = prior_llr.shape[0]
    m = cptr.shape[0] - 1
    ne = ev.shape[0]
    post = prior_llr.copy()
    delta = np.zeros(ne)
    lam = np.zeros(ne)
    e_hat = np.zeros(nv, dtype=np.uint8)
    for it in range(0, max_iter + 1):
        if it > 0:
            if serial:
                for c in range(m):
                    for e in range(cptr[c], cptr[c + 1]):
                        lam[e] = post[ev[e]] - delta[e]
                    old = delta[cptr[c]:cptr[c + 1]].copy()
                    _check_update(lam, cptr[c], cptr[c + 1], syn[c], min_sum, scale, delta)
                    for e in range(cptr[c], cptr[c + 1]):
                        post[ev[e]] += delta[e] - old[e - cptr[c]]
            else:
                for e in range(ne):
                    lam[e] = _clip(post[ev[e]] - delta[e])
                for c in range(m):
                    _check_update(lam, cptr[c], cptr[c + 1], syn[c], min_sum, scale, delta)
                for v in range(nv):
                    acc = prior_llr[v]
                    for k in range(vptr[v], vptr[v + 1]):
                        acc += delta[vedge[k]]
                    post[v] = acc
        for v in range(nv):
            e_hat[v] = 1 if post[v] < 0 else 0
        ok = True
        for c in range(m):
            acc = 0
            for e in range(cptr[c], cptr[c + 1]):
                acc ^= e_hat[ev[e]]
            if acc != syn[c]:
                ok = False
                break
        if ok:
            return e_hat, True, it, post
    return e_hat, False, max_iter, post


@njit(cache=True)
def _getbit(row, c):
    return (row[c >> 6] >> np.uint64(c & 63)) & np.uint64(1)


@njit(cache=True)
def osd_reduce(packed, ncols, syn, col_order):
    """Eliminate (M | s) along ``col_order``.

    Returns (feasible, pivots, s_red, free_cols, r_free) where ``r_free[j, t]``
    is the reduced entry of pivot row j in free column t.
    """
    a = packed.copy()
    rows = a.shape[0]
    w = ncols >> 6
    bit = np.uint64(1) << np.uint64(ncols & 63)
    for i in range(rows):
        if syn[i]:
            a[i, w] |= bit
        else:
            a[i, w] &= ~bit
    piv = eliminate_packed(a, col_order)
    r = piv.shape[0]
    feasible = True
    for i in range(r, rows):
        if a[i, w] & bit:
            feasible = False
    s_red = np.zeros(r, dtype=np.uint8)
    for j in range(r):
        s_red[j] = np.uint8(_getbit(a[j], ncols))
    is_piv = np.zeros(ncols, dtype=np.uint8)
    for j in range(r):
        is_piv[piv[j]] = 1
    free = np.empty(ncols - r, dtype=np.int64)
    k = 0
    for c in col_order:
        if not is_piv[c]:
            free[k] = c
            k += 1
    r_free = np.zeros((r, ncols - r), dtype=np.uint8)
    for j in range(r):
        for t in range(ncols - r):
            r_free[j, t] = np.uint8(_getbit(a[j], free[t]))
    return feasible, piv, s_red, free, r_free


@njit(cache=True)
def _candidate(piv, s_red, free, r_free, flips, nflips, ncols):
    e = np.zeros(ncols, dtype=np.uint8)
    for j in range(piv.shape[0]):
        v = s_red[j]
        for f in range(nflips):
            v ^= r_free[j, flips[f]]
        e[piv[j]] = v
    for f in range(nflips):
        e[free[flips[f]]] = 1
    return e


@njit(cache=True)
def _cost(e, cost_table, symplectic):
    total = 0.0
    nq = cost_table.shape[0]
    if symplectic:
        for q in range(nq):
            total += cost_table[q, e[q] + 2 * e[q + nq]]
    else:
        for q in range(nq):
            total += cost_table[q, e[q]]
    return total


@njit(cache=True)
def osd_search(piv, s_red, free, r_free, ncols, cost_table, symplectic, order, exhaustive):
    """OSD-0 plus either a combination sweep or an exhaustive order-``order`` search."""
    flips = np.zeros(2, dtype=np.int64)
    best = _candidate(piv, s_red, free, r_free, flips, 0, ncols)
    if order == 0:
        return best
    best_cost = _cost(best, cost_table, symplectic)
    nfree = free.shape[0]
    lam = min(order, nfree)
    if exhaustive:
        sel = np.zeros(lam, dtype=np.int64)
        for mask in range(1, 1 << lam):
            k = 0
            for t in range(lam):
                if (mask >> t) & 1:
                    sel[k] = t
                    k += 1
            cand = _candidate(piv, s_red, free, r_free, sel, k, ncols)
            c = _cost(cand, cost_table, symplectic)
            if c < best_cost:
                best_cost = c
                best = cand
        return best
    for t in range(nfree):
        flips[0] = t
        cand = _candidate(piv, s_red, free, r_free, flips, 1, ncols)
        c = _cost(cand, cost_table, symplectic)
        if c < best_cost:
            best_cost = c
            best = cand
    for t1 in range(lam):
        for t2 in range(t1 + 1, lam):
            flips[0] = t1
            flips[1] = t2
            cand = _candidate(piv, s_red, free, r_free, flips, 2, ncols)
            c = _cost(cand, cost_table, symplectic)
            if c < best_cost:
                best_cost = c
                best = cand
    return best


# ---------------------------------------------------------------------------
# Python front ends


def _csr(dense: np.ndarray):
    rows, cols = np.nonzero(dense)
    cptr = np.zeros(dense.shape[0] + 1, dtype=np.int64)
    np.add.at(cptr, rows + 1, 1)
    cptr = np.cumsum(cptr)
    order = np.argsort(cols, kind="stable")
    vptr = np.zeros(dense.shape[1] + 1, dtype=np.int64)
    np.add.at(vptr, cols + 1, 1)
    vptr = np.cumsum(vptr)
    return cptr, rows, cols.astype(np.int64), vptr, order.astype(np.int64)


def _neg_log(p: np.ndarray) -> np.ndarray:
    with np.errstate(divide="ignore"):
        return np.where(p > 0, -np.log(np.where(p > 0, p, 1.0)), 1e6)


def _reliability_order(flip_prob: np.ndarray) -> np.ndarray:
    # descending flip probability, ties by lowest index
    return np.argsort(-flip_prob, kind="stable").astype(np.int64)


def as_check_matrix(check_matrix) -> np.ndarray:
    if isinstance(check_matrix, GF2Matrix):
        return check_matrix.to_dense()
    return np.asarray(check_matrix, dtype=np.uint8) & 1


def syndrome(check_matrix, error: PauliString) -> np.ndarray:
    """Row r is the symplectic product of check row r (x|z) with the error."""
    h = as_check_matrix(check_matrix)
    if h.shape[1] != 2 * error.n:
        raise ValueError(f"check matrix has {h.shape[1]} columns, error needs {2 * error.n}")
    n = error.n
    return ((h[:, :n].astype(np.int64) @ error.z + h[:, n:].astype(np.int64) @ error.x) & 1).astype(np.uint8)


def _is_self_orthogonal(h: np.ndarray) -> bool:
    n = h.shape[1] // 2
    hx = h[:, :n].astype(np.float64)
    hz = h[:, n:].astype(np.float64)
    return not np.any((hx @ hz.T + hz @ hx.T).astype(np.int64) & 1)


class Decoder:
    """BP+OSD decoder bound to one symplectic check matrix H = (H_x | H_z).

    One instance serves one caller at a time; build one per worker.
    """

    def __init__(self, check_matrix, cfg: DecoderConfig | None = None):
        self.cfg = cfg or DecoderConfig()
        h = as_check_matrix(check_matrix)
        if h.ndim != 2 or h.shape[1] % 2:
            raise ValueError("check matrix must have 2n columns")
        self.h = h
        self.n = n = h.shape[1] // 2
        self.rows = h.shape[0]
        hx, hz = h[:, :n], h[:, n:]
        pauli = (hx + 2 * hz).astype(np.int64)
        self._cptr, _, self._eq, self._vptr, self._vedge = _csr(pauli)
        r, c = np.nonzero(pauli)
        self._et = pauli[r, c].astype(np.int64)
        # binary system over v = (e_x | e_z)
        m = np.hstack([hz, hx])
        aug = np.zeros((self.rows, 2 * n + 1), dtype=np.uint8)
        aug[:, : 2 * n] = m
        self._packed = pack_rows(aug)
        self._stabilizer_like = _is_self_orthogonal(h)
        self._rowspace = RowspaceTester(GF2Matrix.from_dense(h)) if self._stabilizer_like else None

    def decode(self, target_syndrome, priors: ChannelPriors) -> DecodeResult:
        syn = np.asarray(target_syndrome, dtype=np.uint8).ravel() & 1
        if syn.shape[0] != self.rows:
            raise ValueError(f"syndrome length {syn.shape[0]} != {self.rows} checks")
        if priors.n != self.n:
            raise ValueError(f"priors cover {priors.n} qubits, code has {self.n}")
        cfg = self.cfg
        p = priors.probs
        # ln(p_I / p_W) for W in kernel order (I, X, Z, Y)
        cost = _neg_log(p[:, [0, 1, 3, 2]])
        prior_llr = cost - cost[:, :1]
        ex, ez, conv, its, gamma = bp_quaternary(
            self._cptr, self._eq, self._et, self._vptr, self._vedge, syn,
            prior_llr, cfg.max_bp_iterations, cfg.bp_variant == "min_sum",
            cfg.min_sum_scale, cfg.schedule == "serial",
        )
        post = np.exp(-np.clip(gamma, -700, 700))
        post[:, 0] = 1.0
        post /= post.sum(axis=1, keepdims=True)
        marginals = post[:, [0, 1, 3, 2]]  # back to (I, X, Y, Z)
        if conv and not cfg.force_osd:
            return DecodeResult(PauliString(ex, ez), True, False, int(its), marginals)
        flip = np.concatenate([post[:, 1] + post[:, 3], post[:, 2] + post[:, 3]])
        v = self._osd(syn, _reliability_order(flip), cost)
        n = self.n
        return DecodeResult(PauliString(v[:n], v[n:]), bool(conv), True, int(its), marginals)

    def _osd(self, syn, col_order, cost):
        ncols = 2 * self.n
        feasible, piv, s_red, free, r_free = osd_reduce(self._packed, ncols, syn, col_order)
        if not feasible:
            raise InfeasibleSyndrome("syndrome is not in the column space of the check matrix")
        cfg = self.cfg
        exhaustive = cfg.osd_method == "exhaustive"
        if exhaustive and self._stabilizer_like and cfg.osd_order >= free.shape[0]:
            return self._best_coset(piv, s_red, free, r_free, cost)
        return osd_search(piv, s_red, free, r_free, ncols, cost, True, cfg.osd_order, exhaustive)

    def _best_coset(self, piv, s_red, free, r_free, cost):
        """Enumerate every solution and keep the most probable member of the most probable coset."""
        ncols = 2 * self.n
        nfree = free.shape[0]
        base = np.zeros(ncols, dtype=np.uint8)
        base[piv] = s_red
        kernel = np.zeros((nfree, ncols), dtype=np.uint8)
        for t in range(nfree):
            kernel[t, free[t]] = 1
            kernel[t, piv] = r_free[:, t]
        masks = ((np.arange(1 << nfree)[:, None] >> np.arange(nfree)) & 1).astype(np.int64)
        sols = (base[None, :] + masks @ kernel) & 1
        n = self.n
        nll = cost[np.arange(n)[None, :], sols[:, :n] + 2 * sols[:, n:]].sum(axis=1)
        coset_mass: dict[bytes, float] = {}
        coset_best: dict[bytes, int] = {}
        for i, v in enumerate(sols):
            key = self._rowspace.residue(v).tobytes()
            coset_mass[key] = coset_mass.get(key, 0.0) + math.exp(-nll[i])
            j = coset_best.get(key)
            if j is None or nll[i] < nll[j]:
                coset_best[key] = i
        # deterministic choice: mass, then lower member cost, then first seen
        keys = list(coset_mass)
        best = max(keys, key=lambda k: (coset_mass[k], -nll[coset_best[k]]))
        return sols[coset_best[best]].astype(np.uint8)


def decode(check_matrix, target_syndrome, priors: ChannelPriors, cfg: DecoderConfig | None = None) -> DecodeResult:
    return Decoder(check_matrix, cfg).decode(target_syndrome, priors)


class BinaryDecoder:
    """BP+OSD over a plain binary parity-check matrix with i.i.d. bit priors."""

    def __init__(self, check_matrix, cfg: DecoderConfig | None = None):
        self.cfg = cfg or DecoderConfig()
        m = as_check_matrix(check_matrix)
        self.m = m
        self.rows, self.cols = m.shape
        self._cptr, _, self._ev, self._vptr, self._vedge = _csr(m)
        aug = np.zeros((self.rows, self.cols + 1), dtype=np.uint8)
        aug[:, : self.cols] = m
        self._packed = pack_rows(aug)

    def decode(self, target_syndrome, p) -> tuple[np.ndarray, bool, bool, int]:
        """Returns (pattern, converged, used_osd, iterations)."""
        syn = np.asarray(target_syndrome, dtype=np.uint8).ravel() & 1
        if syn.shape[0] != self.rows:
            raise ValueError(f"syndrome length {syn.shape[0]} != {self.rows} checks")
        p = np.broadcast_to(np.asarray(p, dtype=np.float64), (self.cols,))
        if np.any(p < 0) or np.any(p > 1):
            raise ValueError("bit error probabilities must lie in [0, 1]")
        cost = np.stack([_neg_log(1 - p), _neg_log(p)], axis=1)
        prior_llr = np.clip(cost[:, 1] - cost[:, 0], -_MSG_CLIP, _MSG_CLIP)
        cfg = self.cfg
        e, conv, its, llr = bp_binary(
            self._cptr, self._ev, self._vptr, self._vedge, syn, prior_llr,
            cfg.max_bp_iterations, cfg.bp_variant == "min_sum", cfg.min_sum_scale,
            cfg.schedule == "serial",
        )
        if conv and not cfg.force_osd:
            return e, True, False, int(its)
        flip = 1.0 / (1.0 + np.exp(np.clip(llr, -700, 700)))
        feasible, piv, s_red, free, r_free = osd_reduce(self._packed, self.cols, syn, _reliability_order(flip))
        if not feasible:
            raise InfeasibleSyndrome("syndrome is not in the column space of the check matrix")
        v = osd_search(piv, s_red, free, r_free, self.cols, cost, False, cfg.osd_order,
                       cfg.osd_method == "exhaustive")
        return v, bool(conv), True, int(its)


def decode_pure(sigma: str, circulant: GF2Poly, l: int, target_syndrome, p: float,
                cfg: DecoderConfig | None = None) -> np.ndarray:
    """Decode a pure-sigma error pattern against the single circulant check block."""
    if sigma.upper() not in ("X", "Y", "Z"):
        raise ValueError(f"Pauli type must be X, Y or Z, got {sigma!r}")
    return BinaryDecoder(circulant_dense(circulant, l), cfg).decode(target_syndrome, p)[0]
