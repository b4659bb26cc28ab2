import json
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from giambelli_snf.exact_arith import QQ_q, Poly, RationalFunction, poly_gcd
from giambelli_snf.giambelli_matrices import jacobi_trudi_matrix, lascoux_pragacz_matrix
from giambelli_snf.linalg import bareiss_determinant
from giambelli_snf.outside_decomp import Kind, canonical_decomposition
from giambelli_snf.shapes import Partition
from giambelli_snf.smith import (
    DIAMOND_FORMULA,
    HAT_FORMULA,
    minor_gcd_profile,
    predicted_diagonal,
    smith_normal_form,
    stabilize,
    verify_theorem,
)
from giambelli_snf.specialize import PHI_T, Q_DIAMOND, Q_HAT

P = Partition
t = Poly.gen()
ONE = t.one()
ZERO = t.zero()
y = Poly.gen(QQ_q, "y")


def mat_mul(a, b):
    return [[sum((a[i][k] * b[k][j] for k in range(len(b))), a[0][0].zero()) for j in range(len(b[0]))] for i in range(len(a))]


def test_examples():
    assert smith_normal_form([[t, ZERO], [ZERO, t + 1]]).diagonal == (ONE, t * (t + 1))
    eye = [[ONE if i == j else ZERO for j in range(3)] for i in range(3)]
    assert smith_normal_form(eye).diagonal == (ONE, ONE, ONE)
    assert smith_normal_form([[t, t], [t, t + t**2]]).diagonal == (t, t**2)


def test_zero_matrix():
    res = smith_normal_form([[ZERO, ZERO], [ZERO, ZERO]])
    assert res.diagonal == (ZERO, ZERO) and res.rank == 0


def test_minor_profile_examples():
    assert minor_gcd_profile([[t, ZERO], [ZERO, t + 1]]) == [ONE, t * (t + 1)]
    assert minor_gcd_profile([[ONE, ZERO], [ZERO, ONE]]) == [ONE, ONE]
    jt = jacobi_trudi_matrix(P((2, 2)), PHI_T).rows()
    assert minor_gcd_profile(jt) == [t, t * t * (t + 1) * (t - 1)]
    big = [[ONE if i == j else ZERO for j in range(4)] for i in range(4)]
    with pytest.raises(ValueError, match="bound"):
        minor_gcd_profile(big, bound=3)


def test_stabilize_examples():
    assert stabilize([[t]], 1) == [[ONE, ZERO], [ZERO, t]]
    a = [[t, t], [t, t + t**2]]
    assert stabilize(a, 0) == a
    assert smith_normal_form(stabilize(a, 2)).diagonal == (ONE, ONE, t, t**2)
    with pytest.raises(ValueError):
        stabilize(a, -1)


def test_predicted_examples():
    assert predicted_diagonal(P((2, 1)), 2, PHI_T) == [ONE, t**3 - t]
    assert predicted_diagonal(P((2, 2)), 2, PHI_T) == [t, t**3 - t]
    assert predicted_diagonal(P((1,)), 3, PHI_T) == [ONE, ONE, t]
    with pytest.raises(ValueError):
        predicted_diagonal(P((2, 2)), 1, PHI_T)


def test_verify_examples():
    r = verify_theorem(P((2, 1)), canonical_decomposition(P((2, 1)), Kind.HORIZONTAL), PHI_T, oracle=True)
    assert r.match and r.snf == [ONE, t**3 - t] and r.oracle_match
    r = verify_theorem(P((2, 2)), canonical_decomposition(P((2, 2)), Kind.HOOK), PHI_T)
    assert r.match and r.snf == [t, t**3 - t]
    p = P((3, 2, 1))
    r = verify_theorem(p, canonical_decomposition(p, Kind.RIM), Q_HAT, oracle=True)
    assert r.match and r.oracle_match
    # monic form of prod(1 - q^c y) is prod(y - q^-c); D_2 = {(2,2)}, D_1 has contents -2..2
    expect = y.one()
    for c in (-2, -1, 0, 1, 2):
        expect = expect * (y - RationalFunction.q_power(-c))
    assert r.snf == [y - 1, expect]
    assert json.loads(r.to_json_str())["match"] is True


def test_mismatch_is_reported_not_raised():
    p = P((2, 1))
    dec = canonical_decomposition(p, Kind.HORIZONTAL)
    wrong = lascoux_pragacz_matrix(P((2, 2)), PHI_T)  # same order, different shape
    r = verify_theorem(p, dec, PHI_T, matrix=wrong, oracle=True)
    assert r.match is False
    assert r.oracle_match is True


def test_both_candidates_reported():
    p = P((3, 1))
    r = verify_theorem(p, canonical_decomposition(p, Kind.HOOK), Q_DIAMOND, both_predictions=True)
    assert set(r.candidates) == {DIAMOND_FORMULA, HAT_FORMULA}
    assert r.candidates[DIAMOND_FORMULA] is True
    r = verify_theorem(p, canonical_decomposition(p, Kind.HOOK), PHI_T, both_predictions=True)
    assert r.candidates is None


def random_poly(rng, deg=3):
    return Poly([Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(rng.randint(0, deg + 1))])


def random_matrix(rng, n):
    return [[random_poly(rng) for _ in range(n)] for _ in range(n)]


def check_snf(a):
    res = smith_normal_form(a, witnesses=True)
    d = res.diagonal
    n = len(a)
    for k in range(n - 1):
        if d[k + 1]:
            assert d[k] and d[k].divides(d[k + 1])
        else:
            assert not any(d[k + 1 :])
    for x in d:
        assert not x or x.leading == 1
    lar = mat_mul(mat_mul([list(r) for r in res.left], a), [list(r) for r in res.right])
    assert lar == [[d[i] if i == j else ZERO for j in range(n)] for i in range(n)]
    assert bareiss_determinant(res.left).is_constant and bareiss_determinant(res.left)
    assert bareiss_determinant(res.right).is_constant and bareiss_determinant(res.right)
    return d


def test_random_witnesses_and_oracle():
    rng = random.Random(11)
    for _ in range(60):
        a = random_matrix(rng, rng.randint(1, 4))
        d = check_snf(a)
        prod = ONE
        for k, g in enumerate(minor_gcd_profile(a)):
            prod = prod * d[k]
            assert prod.monic() == g if prod else not g


def test_singular_matrix():
    a = [[t, t**2, ONE], [ONE, t, ZERO], [t + 1, t**2 + t, ONE]]  # row3 = row1 + row2
    d = check_snf(a)
    assert d[-1] == ZERO and d[:2] == (ONE, ONE)


def test_over_rational_functions():
    m = jacobi_trudi_matrix(P((2, 2)), Q_DIAMOND).rows()
    check_snf(m)


@given(st.randoms(use_true_random=False), st.integers(1, 4))
def test_permutation_invariance(rng, n):
    a = random_matrix(rng, n)
    rows = list(range(n))
    cols = list(range(n))
    rng.shuffle(rows)
    rng.shuffle(cols)
    b = [[a[i][j] for j in cols] for i in rows]
    assert smith_normal_form(a).diagonal == smith_normal_form(b).diagonal


@given(st.randoms(use_true_random=False), st.integers(1, 3), st.integers(1, 3))
def test_stabilization(rng, n, j):
    a = random_matrix(rng, n)
    if not bareiss_determinant(a):
        return
    assert smith_normal_form(stabilize(a, j)).diagonal == (ONE,) * j + smith_normal_form(a).diagonal
