from fractions import Fraction

import pytest

import stiefel_degree as sd


def test_worked_example():
    r = sd.degree(4, 6)
    assert r["degree"] == 704
    assert r["regime"] == "determinant"
    assert r["path_matrix"] == [[35, 10, 1], [15, 6, 1], [1, 1, 1]]
    assert r["path_count"] == 44


def test_big_table_entries_are_python_ints():
    table = sd.degree_table(10)
    assert len(table) == 55
    last = table[-1]
    assert (last["k"], last["n"]) == (10, 10)
    assert last["degree"] == 29989282816
    assert isinstance(last["degree"], int)


def test_methods_agree():
    assert sd.degree(5, 7, "paths")["degree"] == 14848
    assert sd.degree_via_integral(6, 9) == 1064960
    assert sd.degree(3, 5)["degree"] == 64


def test_paths():
    starts, ends = sd.path_config(4, 6)
    assert starts == [(-3, 0), (-2, 0), (0, 0)]
    assert ends == [(0, 4), (0, 2), (0, 0)]
    assert sd.count_nilp(starts, ends) == sd.det(sd.lgv_matrix(starts, ends)) == 44


def test_exact_determinant():
    assert sd.det([[2, 1, 0], [4, 6, 4], [6, 15, 20]]) == 64
    assert sd.det([[Fraction(1, 2), 0], [0, Fraction(2, 3)]]) == Fraction(1, 3)
    assert sd.aztec_check(10)[0] == sd.aztec_check(10)[1]


def test_volumes():
    scalar, omega = sd.vol_closed(4, 7)
    assert scalar == Fraction(1, 6)
    assert omega == [1, 1, 1]
    assert sd.volume(4, 7, [3, 2, 1]) == 2
    assert sd.vol_symbolic(2, 3) == "2*l1"


def test_representations():
    assert sd.dim_irrep(5, [1, 1]) == 10
    assert sd.count_invariants(5, [1, 0], 1) == 5
    assert sd.gt_polytope_dim(4, 7) == 6
    assert sd.omega(7, 9) == [3, 3, 2, 1]


def test_errors():
    with pytest.raises(ValueError, match="k must be"):
        sd.degree(3, 2)
    with pytest.raises(sd.DomainError):
        sd.vol_closed(2, 4)
    with pytest.raises(sd.SizeError):
        sd.count_nilp(*sd.path_config(9, 10))


def test_fast_verification():
    results = sd.verify("fast")
    assert [r["id"] for r in results] == [1, 2, 5, 7, 9]
    assert all(r["passed"] for r in results)
