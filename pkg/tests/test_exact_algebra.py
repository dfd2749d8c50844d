from fractions import Fraction
import random

import pytest
from hypothesis import given, settings, strategies as st

from structconst.exact_algebra import (
    Inconsistent,
    NonzeroRemainder,
    NotPolynomial,
    QTPoly,
    TPoly,
    XYPolynomial,
    h_poly,
    monomial_weight,
    q_poly,
    solve_exact_linear_system,
    tpoly_divexact,
    tpoly_mul,
    xpoly_mul,
    xy_determinant,
)
from structconst.hall_littlewood import hl_to_x

small_tpolys = st.lists(st.integers(-5, 5), max_size=5).map(TPoly)

x1 = XYPolynomial.variable(1)
x2 = XYPolynomial.variable(2)


def test_tpoly_mul_examples():
    assert tpoly_mul(TPoly([1, -1]), TPoly([1, 1])) == TPoly([1, 0, -1])
    assert tpoly_mul(TPoly(), TPoly([3, 4])) == TPoly()
    assert tpoly_mul(TPoly([-1, 0, 1]), TPoly([0, 1])) == TPoly([0, -1, 0, 1])


def test_canonical_form():
    assert TPoly([1, 2, 0, 0]).coeffs == (1, 2)
    assert TPoly([0, 0]).coeffs == ()
    assert not TPoly()
    assert TPoly([1, 0, -1]).to_list() == [1, 0, -1]
    assert str(TPoly([1, 0, -1])) == "1 - t^2"
    assert str(TPoly([0, -2, 1])) == "-2*t + t^2"
    assert str(TPoly()) == "0"


def test_tpoly_rejects_non_integers():
    with pytest.raises(NotPolynomial):
        TPoly([Fraction(1, 2)])
    with pytest.raises(TypeError):
        TPoly([0.5])


def test_divexact_examples():
    assert tpoly_divexact(TPoly([1, 0, -1]), TPoly([1, -1])) == TPoly([1, 1])
    p = TPoly([2, -3, 0, 5])
    assert tpoly_divexact(p, p) == TPoly([1])
    with pytest.raises(NonzeroRemainder):
        tpoly_divexact(TPoly([1, 0, -1]), TPoly([1, 0, 1]))
    with pytest.raises(ZeroDivisionError):
        tpoly_divexact(TPoly([1]), TPoly())


@given(small_tpolys, small_tpolys, small_tpolys)
def test_distributivity(a, b, c):
    assert (a + b) * c == a * c + b * c


@given(small_tpolys, small_tpolys)
def test_divexact_inverts_mul(a, b):
    if b:
        assert tpoly_divexact(a * b, b) == a


@given(small_tpolys, st.integers(-3, 3))
def test_evaluation_is_a_ring_map(a, t):
    assert (a * a)(t) == a(t) ** 2


def test_xpoly_mul_examples():
    assert xpoly_mul(x1, x1) == XYPolynomial({((1, 2),): 1})
    one = XYPolynomial.constant(1)
    p = x2 + x1 * x1 * Fraction(1, 2)
    assert xpoly_mul(one, p) == p
    assert xpoly_mul(p, one, max_weight_magnitude=1) == XYPolynomial()


def test_h_poly_examples():
    assert h_poly(0, 0) == XYPolynomial.constant(1)
    assert h_poly(-3, 0) == XYPolynomial()
    assert h_poly(2, 2) == x2 + xpoly_mul(x1, x1).scale(Fraction(1, 2))


@pytest.mark.parametrize("n", range(13))
def test_h_poly_is_homogeneous(n):
    p = h_poly(n, n)
    assert p.weights() == {n}


def test_h_poly_y_coordinates_have_negative_weight():
    assert h_poly(3, 3, "y").weights() == {-3}


def test_q_poly_examples():
    assert q_poly(0) == XYPolynomial.constant(1)
    assert q_poly(-1) == XYPolynomial()
    expected = x2.scale(TPoly([1, 0, -1])) + xpoly_mul(x1, x1).scale(
        QTPoly([Fraction(1, 2), -1, Fraction(1, 2)])
    )
    assert q_poly(2) == expected


def _random_xy(rng, n_terms):
    terms = {}
    for _ in range(n_terms):
        mono = {}
        for _ in range(rng.randint(0, 3)):
            var = rng.choice([1, 2, 3, -1, -2])
            mono[var] = mono.get(var, 0) + rng.randint(1, 2)
        terms[tuple(sorted(mono.items()))] = QTPoly([rng.randint(-3, 3), rng.randint(-2, 2)])
    return XYPolynomial(terms)


def test_xpoly_mul_grading_is_additive():
    rng = random.Random(7)
    for _ in range(200):
        a, b = _random_xy(rng, 4), _random_xy(rng, 4)
        prod = xpoly_mul(a, b)
        possible = {wa + wb for wa in a.weights() for wb in b.weights()}
        assert prod.weights() <= possible
        window = rng.randint(0, 6)
        truncated = xpoly_mul(a, b, window)
        assert all(abs(monomial_weight(m)) <= window for m in truncated.terms)
        for mono, coeff in truncated.terms.items():
            assert prod.terms[mono] == coeff


def test_determinant_small():
    one = XYPolynomial.constant(1)
    assert xy_determinant([]) == one
    det = xy_determinant([[x1, x2], [one, x1]])
    assert det == xpoly_mul(x1, x1) - x2


def test_solve_identity_system():
    cols = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert solve_exact_linear_system(cols, [0, 1, 0]) == [TPoly(), TPoly([1]), TPoly()]


def test_solve_shape_guard():
    with pytest.raises(Inconsistent):
        solve_exact_linear_system([[TPoly([1])], [TPoly([0, 1])]], [TPoly([1, 1])])
    with pytest.raises(Inconsistent):
        solve_exact_linear_system([[1, 0]], [1])


def test_solve_rejects_out_of_span_target():
    with pytest.raises(Inconsistent):
        solve_exact_linear_system([[1, 0, 0], [0, 1, 0]], [0, 0, 1])


def test_solve_flags_non_polynomial_solution():
    with pytest.raises(NotPolynomial):
        solve_exact_linear_system([[TPoly([1, -1])]], [TPoly([1])])


def test_solve_hl_weight_two_by_hand():
    # q_1^2 = Q_(1,1) + (1 - t) Q_(2), derived from Q_(1,1) = q_1^2 + (t - 1) q_2 q_0
    # and Q_(2) = q_2.
    q2, q11 = hl_to_x((2,)), hl_to_x((1, 1))
    target = xpoly_mul(hl_to_x((1,)), hl_to_x((1,)))
    monos = sorted(set(q2.terms) | set(q11.terms) | set(target.terms))
    zero = QTPoly()
    cols = [[p.terms.get(m, zero) for m in monos] for p in (q2, q11)]
    rhs = [target.terms.get(m, zero) for m in monos]
    assert solve_exact_linear_system(cols, rhs) == [TPoly([1, -1]), TPoly([1])]


def test_solve_round_trip_on_random_systems():
    rng = random.Random(11)
    for _ in range(60):
        n = rng.randint(1, 4)
        while True:
            cols = [[TPoly([rng.randint(-3, 3) for _ in range(rng.randint(0, 2))]) for _ in range(n + 1)]
                    for _ in range(n)]
            x = [TPoly([rng.randint(-4, 4) for _ in range(rng.randint(0, 3))]) for _ in range(n)]
            target = [sum((x[j] * cols[j][i] for j in range(n)), TPoly()) for i in range(n + 1)]
            try:
                got = solve_exact_linear_system(cols, target)
            except Inconsistent:
                continue  # dependent columns drawn; redraw
            break
        assert got == x
