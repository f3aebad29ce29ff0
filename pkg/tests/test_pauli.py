import numpy as np
import pytest
from hypothesis import given, strategies as st

from xyzcyclic.pauli import (
    FIVE_QUBIT_LABELS,
    PauliString,
    StabilizerCode,
    check_abelian,
    five_qubit_code,
    is_logical,
    multiply,
    num_logical_qubits,
    symplectic_product,
    validate_logical_set,
    weight,
)
from xyzcyclic.xyz import XYZParams, build_code

labels = st.integers(1, 30).flatmap(lambda n: st.text("IXYZ", min_size=n, max_size=n))


@given(labels)
def test_label_roundtrip(lab):
    assert PauliString.from_label(lab).label == lab


def test_bad_alphabet():
    with pytest.raises(ValueError):
        PauliString.from_label("XQZ")


def test_symplectic_examples():
    x, z = PauliString.from_label("X"), PauliString.from_label("Z")
    assert symplectic_product(x, z) == 1
    assert symplectic_product(x, x) == 0
    assert symplectic_product(PauliString.from_label("IXZZX"), PauliString.from_label("XIXZZ")) == 0


def test_length_mismatch():
    with pytest.raises(ValueError):
        symplectic_product(PauliString.from_label("X"), PauliString.from_label("XX"))
    with pytest.raises(ValueError):
        multiply(PauliString.from_label("X"), PauliString.from_label("XX"))


def test_multiply_examples():
    assert multiply(PauliString.from_label("X"), PauliString.from_label("Z")).label == "Y"
    p = PauliString.from_label("XYZI")
    assert multiply(p, p) == PauliString.identity(4)
    a, b = PauliString.from_label("XZYIYZX"), PauliString.uniform("Y", 7)
    xor = PauliString(a.x ^ b.x, a.z ^ b.z)
    assert multiply(a, b) == xor
    assert multiply(a, b).label == "ZXIYIXZ"


def test_weight_examples():
    assert weight(PauliString.from_label("IXYZ")) == 3
    assert weight(PauliString.identity(9)) == 0
    assert weight(PauliString.uniform("Y", 17)) == 17


@given(labels)
def test_weight_is_support_size(lab):
    p = PauliString.from_label(lab)
    assert weight(p) == sum(c != "I" for c in lab) == len(p.support())


def test_abelian_examples():
    assert check_abelian(five_qubit_code())
    assert check_abelian(build_code(XYZParams(5, 0)))
    labs = list(FIVE_QUBIT_LABELS)
    labs[0] = "Z" + labs[0][1:]  # I -> Z on qubit 0 breaks commutation with row 1
    assert not check_abelian(StabilizerCode.from_labels(labs))


def test_logical_qubits():
    assert num_logical_qubits(five_qubit_code()) == 1
    assert num_logical_qubits(build_code(XYZParams(5, 0))) == 1
    assert num_logical_qubits(build_code(XYZParams(2, 2))) == 3


def test_is_logical_examples():
    code = build_code(XYZParams(5, 0))
    assert not is_logical(code, code.generators[3])
    assert is_logical(code, PauliString.uniform("X", 17))
    assert not is_logical(code, PauliString.single("X", 17, 0))


def test_five_qubit_logicals_valid():
    code = five_qubit_code()
    validate_logical_set(code, code.logicals)


def test_syndrome_of_generator_is_zero():
    code = build_code(XYZParams(3, 1))
    for g in code.generators[:5]:
        assert not code.syndrome(g).any()


@given(st.text("IXYZ", min_size=6, max_size=6), st.text("IXYZ", min_size=6, max_size=6))
def test_product_is_xor_and_hashable(a, b):
    p, q = PauliString.from_label(a), PauliString.from_label(b)
    r = p * q
    assert r * q == p
    assert hash(PauliString.from_label(a)) == hash(p)
    assert symplectic_product(p, q) == symplectic_product(q, p)


def test_arrays_read_only():
    p = PauliString.from_label("XZ")
    with pytest.raises(ValueError):
        p.x[0] = 0
    assert np.array_equal(p.symplectic(), [1, 0, 0, 1])
