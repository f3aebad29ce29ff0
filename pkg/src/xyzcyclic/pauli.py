"""Pauli operators in binary symplectic form and stabilizer-code bookkeeping.

Phases are dropped throughout: a Pauli string is the pair (x | z) of bit
vectors, so "in the stabilizer group" means "in the rowspace of H".
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from .gf2 import GF2Matrix, RowspaceTester, gf2_rank

_TO_BITS = {"I": (0, 0), "X": (1, 0), "Z": (0, 1), "Y": (1, 1)}
_FROM_BITS = np.array(["I", "X", "Z", "Y"])  # index = x + 2z

PAULI_TYPES = ("X", "Y", "Z")


class PauliString:
    """Length-n Pauli operator without phase."""

    __slots__ = ("x", "z")

    def __init__(self, x, z):
        x = np.array(x, dtype=np.uint8).ravel() & 1
        z = np.array(z, dtype=np.uint8).ravel() & 1
        if x.shape != z.shape:
            raise ValueError("x and z parts must have equal length")
        x.setflags(write=False)
        z.setflags(write=False)
        self.x = x
        self.z = z

    @classmethod
    def from_label(cls, label: str) -> PauliString:
        try:
            bits = [_TO_BITS[c] for c in label]
        except KeyError as err:
            raise ValueError(f"invalid Pauli label {label!r}; alphabet is I,X,Y,Z") from err
        if not bits:
            return cls(np.zeros(0), np.zeros(0))
        x, z = zip(*bits)
        return cls(x, z)

    @classmethod
    def identity(cls, n: int) -> PauliString:
        return cls(np.zeros(n), np.zeros(n))

    @classmethod
    def uniform(cls, sigma: str, n: int) -> PauliString:
        """The all-sigma string, e.g. ``uniform("Y", 7)`` is YYYYYYY."""
        return cls.from_label(sigma * n)

    @classmethod
    def single(cls, sigma: str, n: int, qubit: int) -> PauliString:
        label = ["I"] * n
        label[qubit] = sigma
        return cls.from_label("".join(label))

    @classmethod
    def from_symplectic(cls, v) -> PauliString:
        v = np.asarray(v, dtype=np.uint8).ravel()
        if v.shape[0] % 2:
            raise ValueError("symplectic vector must have even length")
        n = v.shape[0] // 2
        return cls(v[:n], v[n:])

    @property
    def n(self) -> int:
        return int(self.x.shape[0])

    def symplectic(self) -> np.ndarray:
        """The 2n-bit vector (x | z)."""
        return np.concatenate([self.x, self.z])

    @property
    def label(self) -> str:
        return "".join(_FROM_BITS[self.x + 2 * self.z])

    def support(self) -> np.ndarray:
        return np.flatnonzero(self.x | self.z)

    def __str__(self) -> str:
        return self.label

    def __repr__(self) -> str:
        return f"PauliString({self.label!r})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, PauliString):
            return NotImplemented
        return np.array_equal(self.x, other.x) and np.array_equal(self.z, other.z)

    def __hash__(self) -> int:
        return hash((self.x.tobytes(), self.z.tobytes()))

    def __mul__(self, other: PauliString) -> PauliString:
        return multiply(self, other)

    def __len__(self) -> int:
        return self.n


def _check_lengths(p: PauliString, q: PauliString) -> None:
    if p.n != q.n:
        raise ValueError(f"length mismatch: {p.n} vs {q.n}")


def symplectic_product(p: PauliString, q: PauliString) -> int:
    """0 if p and q commute, 1 if they anticommute."""
    _check_lengths(p, q)
    return int((np.dot(p.x, q.z) + np.dot(p.z, q.x)) & 1)


def multiply(p: PauliString, q: PauliString) -> PauliString:
    _check_lengths(p, q)
    return PauliString(p.x ^ q.x, p.z ^ q.z)


def weight(p: PauliString) -> int:
    return int(np.count_nonzero(p.x | p.z))


@dataclass(frozen=True)
class LogicalSet:
    """X, Z and Y representatives for a single encoded qubit."""

    x_rep: PauliString
    z_rep: PauliString
    y_rep: PauliString

    def as_dict(self) -> dict[str, PauliString]:
        return {"X": self.x_rep, "Z": self.z_rep, "Y": self.y_rep}


class StabilizerCode:
    """Stabilizer code given by a (possibly redundant) list of generators."""

    def __init__(self, generators: Sequence[PauliString], logicals: LogicalSet | None = None):
        if not generators:
            raise ValueError("at least one generator required")
        n = generators[0].n
        for g in generators:
            if g.n != n:
                raise ValueError("all generators must act on the same number of qubits")
        self.n = n
        self.generators = list(generators)
        self.hx = np.stack([g.x for g in generators])
        self.hz = np.stack([g.z for g in generators])
        self.hx.setflags(write=False)
        self.hz.setflags(write=False)
        self.logicals = logicals

    @classmethod
    def from_labels(cls, labels: Sequence[str], logicals: LogicalSet | None = None) -> StabilizerCode:
        return cls([PauliString.from_label(s) for s in labels], logicals)

    @classmethod
    def from_blocks(cls, hx, hz, logicals: LogicalSet | None = None) -> StabilizerCode:
        hx = np.asarray(hx, dtype=np.uint8)
        hz = np.asarray(hz, dtype=np.uint8)
        return cls([PauliString(hx[i], hz[i]) for i in range(hx.shape[0])], logicals)

    @cached_property
    def h_matrix(self) -> GF2Matrix:
        """H = (H_x | H_z)."""
        return GF2Matrix.from_dense(np.hstack([self.hx, self.hz]))

    @cached_property
    def independent_rank(self) -> int:
        return gf2_rank(self.h_matrix)

    @property
    def k(self) -> int:
        return self.n - self.independent_rank

    @cached_property
    def rowspace(self) -> RowspaceTester:
        return RowspaceTester(self.h_matrix)

    def syndrome(self, p: PauliString) -> np.ndarray:
        if p.n != self.n:
            raise ValueError(f"operator acts on {p.n} qubits, code has {self.n}")
        return ((self.hx.astype(np.int64) @ p.z + self.hz.astype(np.int64) @ p.x) & 1).astype(np.uint8)

    def commutes_with_all(self, p: PauliString) -> bool:
        return not self.syndrome(p).any()

    def in_stabilizer_group(self, p: PauliString) -> bool:
        return self.rowspace.contains(p.symplectic())

    def __repr__(self) -> str:
        return f"StabilizerCode(n={self.n}, generators={len(self.generators)}, k={self.k})"


def check_abelian(code: StabilizerCode) -> bool:
    """True iff H_x H_z^T + H_z H_x^T vanishes over GF(2)."""
    hx = code.hx.astype(np.float64)
    hz = code.hz.astype(np.float64)
    gram = hx @ hz.T + hz @ hx.T
    return not np.any(gram.astype(np.int64) & 1)


def num_logical_qubits(code: StabilizerCode) -> int:
    return code.k


def is_logical(code: StabilizerCode, p: PauliString) -> bool:
    """Commutes with every generator but is not itself a stabilizer."""
    if p.n != code.n:
        raise ValueError(f"operator acts on {p.n} qubits, code has {code.n}")
    return code.commutes_with_all(p) and not code.in_stabilizer_group(p)


def validate_logical_set(code: StabilizerCode, logicals: LogicalSet) -> None:
    reps = (logicals.x_rep, logicals.z_rep, logicals.y_rep)
    for rep in reps:
        if not is_logical(code, rep):
            raise ValueError(f"{rep.label} is not a logical operator")
    for i in range(3):
        for j in range(i + 1, 3):
            if symplectic_product(reps[i], reps[j]) != 1:
                raise ValueError("logical representatives must pairwise anticommute")


FIVE_QUBIT_LABELS = ("IXZZX", "XIXZZ", "ZXIXZ", "ZZXIX", "XZZXI")


def five_qubit_code() -> StabilizerCode:
    """The [[5,1,3]] cyclic code generated by shifts of IXZZX."""
    logicals = LogicalSet(
        PauliString.uniform("X", 5), PauliString.uniform("Z", 5), PauliString.uniform("Y", 5)
    )
    return StabilizerCode.from_labels(FIVE_QUBIT_LABELS, logicals)
