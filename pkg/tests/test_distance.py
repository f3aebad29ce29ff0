import numpy as np
import pytest

from xyzcyclic.distance import (
    distance_upper_bound,
    exhaustive_distance,
    independent_rows,
    random_coset_element,
    report_dict,
    distance_target,
    search_optimal,
)
from xyzcyclic.pauli import PauliString, five_qubit_code, is_logical, symplectic_product, weight
from xyzcyclic.xyz import XYZParams, build_code, has_full_repetition_structure


class _Zeros:
    def integers(self, lo, hi, size):
        return np.zeros(size, dtype=np.int64)


def test_coset_element_trivial_combination():
    code = build_code(XYZParams(0, 0))
    lx = code.logicals.x_rep
    assert random_coset_element(lx, independent_rows(code), _Zeros()) == lx


def test_coset_elements_keep_commutation_class():
    code = build_code(XYZParams(0, 0))
    stabs = independent_rows(code)
    lg = code.logicals.as_dict()
    rng = np.random.default_rng(0)
    aug_ref = np.vstack([stabs, lg["Z"].symplectic(), lg["Y"].symplectic()])
    n = code.n

    def syn(h, p):
        return (h[:, :n].astype(int) @ p.z + h[:, n:].astype(int) @ p.x) % 2

    ref = syn(aug_ref, lg["X"])
    for _ in range(10_000):
        g = random_coset_element(lg["X"], stabs, rng)
        assert symplectic_product(g, lg["Z"]) == 1 and symplectic_product(g, lg["Y"]) == 1
        assert np.array_equal(syn(aug_ref, g), ref)


def test_independent_rows_drop_one():
    code = build_code(XYZParams(5, 0))
    assert independent_rows(code).shape == (16, 34)


def test_five_qubit_bounds():
    rep = distance_upper_bound(five_qubit_code(), 200)
    assert rep.as_tuple() == (3, 3, 3)


def test_c50_bounds_and_witnesses():
    code = build_code(XYZParams(5, 0))
    rep = distance_upper_bound(code, 1000, seed=0)
    assert rep.as_tuple() == (5, 5, 5)
    for s, d in zip("XZY", rep.as_tuple()):
        assert is_logical(code, rep.witnesses[s])
        assert weight(rep.witnesses[s]) == d


def test_bounds_monotone_in_trials():
    code = build_code(XYZParams(13, 2))
    rep = distance_upper_bound(code, 40, seed=3, keep_trace=True)
    for prev, cur in zip(rep.trace, rep.trace[1:]):
        assert all(c <= p for c, p in zip(cur, prev))
    short = distance_upper_bound(code, 10, seed=3)
    assert short.as_tuple() == rep.trace[9]


def test_bound_never_below_exact():
    code = build_code(XYZParams(3, 0))
    exact = exhaustive_distance(code, 6)
    rep = distance_upper_bound(code, 300, seed=1)
    assert rep.distance >= exact


def test_exhaustive_examples():
    assert exhaustive_distance(five_qubit_code(), 3) == 3
    c50 = build_code(XYZParams(5, 0))
    assert exhaustive_distance(c50, 4) is None
    assert exhaustive_distance(c50, 5) == 5


def test_requires_k1():
    with pytest.raises(ValueError):
        distance_upper_bound(build_code(XYZParams(2, 2)), 10)
    with pytest.raises(ValueError):
        distance_upper_bound(build_code(XYZParams(5, 0)), 0)


def test_search_small_rows():
    a, rep = search_optimal(0, 10, trials=300)
    assert a == 5 and rep.distance == 5
    a, rep = search_optimal(1, 12, trials=300)
    assert a == 8 and rep.distance == 7


def test_search_none_when_range_too_small():
    assert search_optimal(0, 3, trials=50) is None


def test_record_fields():
    rep = distance_upper_bound(five_qubit_code(), 5, seed=4)
    rec = rep.record(XYZParams(0, 0))
    assert list(rec) == ["a", "b", "n", "d_x_up", "d_z_up", "d_y_up", "trials", "seed"]
    assert "witnesses" not in report_dict(rep)


def test_witness_is_pauli():
    rep = distance_upper_bound(five_qubit_code(), 5)
    assert all(isinstance(p, PauliString) for p in rep.witnesses.values())


def test_c92_meets_every_optimality_condition():
    # the b=2 search stops here: k=1, N=29 prime, and no logical lighter than 7
    p = XYZParams(9, 2)
    assert has_full_repetition_structure(p)
    code = build_code(p)
    assert exhaustive_distance(code, 6, max_candidates=4 * 10**8) is None
    rep = distance_upper_bound(code, 200, seed=0)
    assert rep.distance == 7 == distance_target(2)
    assert search_optimal(2, 13, trials=200)[0] == 9
