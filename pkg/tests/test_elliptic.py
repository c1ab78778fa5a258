from fractions import Fraction

import mpmath
import pytest

from resolvents.elliptic import (
    Curve, adelmann_pipeline, adopt_t4_convention, curve_normal_form, division_poly, divide_by_2y,
    expand_discriminants, gamma_n, holq8_pipeline, mobius, octic_f, point_new, point_through, reduce_y,
    sample_points, sextic_A, torsion_field_poly,
)
from resolvents.elliptic.pipelines import octic_is_squarefree
from resolvents.errors import NotDivisible, PointNotOnCurve, SingularCurve
from resolvents.numericoracle import find_roots, precision_context
from resolvents.polyring import MultiPoly, P, WeightSystem, discriminant_nonzero, homogeneous_weight
from resolvents.suite import read_golden

D = P("4*a^3 + 27*b^2")


# ---------------------------------------------------------------------------
# curves and points

def test_valid_point():
    pt = point_new(Curve(1, 1), 0, 1)
    assert pt.bindings() == {"a": 1, "b": 1, "z": 0, "w": 1}
    assert Curve(1, 1).d == 31 and Curve(1, 1).Delta == -496


def test_singular_curve():
    with pytest.raises(SingularCurve):
        Curve(-3, 2)


def test_point_not_on_curve():
    with pytest.raises(PointNotOnCurve):
        point_new(Curve(1, 1), 1, 1)


def test_point_through_solves_for_b():
    pt = point_through(2, 1, 3)
    assert pt.curve.b == 9 - 1 - 2


def test_rational_curve_parameters():
    c = Curve(Fraction(1, 2), Fraction(-1, 3))
    assert c.d == Fraction(1, 2) + 3


def test_sample_points_are_deterministic_and_valid():
    a = sample_points(6)
    assert a == sample_points(6)
    assert a[0].bindings() == {"a": 1, "b": 1, "z": 0, "w": 1}
    for pt in a:
        assert pt.w ** 2 == pt.z ** 3 + pt.curve.a * pt.z + pt.curve.b


def test_curve_normal_form():
    assert curve_normal_form(P("w^3")) == P("w*(z^3 + a*z + b)")
    assert curve_normal_form(P("x^2")) == P("x^2")


def test_expand_discriminants():
    assert expand_discriminants(P("Delta + 16*d")).is_zero()


# ---------------------------------------------------------------------------
# canned polynomials

def test_octic_symbolic(golden_dir):
    assert octic_f() == read_golden(golden_dir, "octic_f")[0]


def test_octic_at_sample_point():
    assert octic_f(point_through(1, 0, 1)) == P("x^8 - 8*x^6 + 18*x^4 - 31")


def test_octic_is_even():
    assert all(k % 2 == 0 for k in octic_f().coeffs_in("x"))


def test_sextic_symbolic(golden_dir):
    assert sextic_A() == read_golden(golden_dir, "sextic_A")[0]


def test_sextic_at_curve():
    assert sextic_A(Curve(0, 1)) == P("Y^6 + 20*Y^3 - 8")


def test_sextic_is_half_gamma4():
    assert gamma_n(4) == sextic_A(var="x") * 2


@pytest.mark.parametrize("poly, main", [(octic_f(), {"x": 3}), (sextic_A(), {"Y": 4})])
def test_canned_polynomials_have_weight_24(poly, main):
    assert homogeneous_weight(poly, WeightSystem.octic(**main)) == 24


# ---------------------------------------------------------------------------
# division polynomials

def test_a3_a4(golden_dir):
    assert division_poly(3) == read_golden(golden_dir, "A3")[0]
    assert division_poly(4) == read_golden(golden_dir, "A4")[0]
    assert division_poly(1) == MultiPoly.const(1)
    assert division_poly(2) == P("2*y")


def _A(n):
    return {-1: P("-1"), 0: P("0")}.get(n) if n <= 0 else division_poly(n)


@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_odd_recursion(m):
    rhs = _A(m + 2) * _A(m) ** 3 - _A(m - 1) * _A(m + 1) ** 3
    assert reduce_y(rhs) == division_poly(2 * m + 1)


@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_even_recursion(m):
    lhs = P("2*y") * division_poly(2 * m)
    rhs = _A(m) * (_A(m + 2) * _A(m - 1) ** 2 - _A(m - 2) * _A(m + 1) ** 2)
    assert reduce_y(lhs) == reduce_y(rhs)


def test_a5_is_y_free():
    assert "y" not in division_poly(5).vars or division_poly(5).degree("y") == 0


@pytest.mark.parametrize("n", range(1, 11))
def test_degree_and_y_pattern(n):
    A = division_poly(n)
    y_deg = A.degree("y") if "y" in A.vars else 0
    assert y_deg == (1 if n % 2 == 0 else 0)
    x_part = A.coeffs_in("y")[y_deg] if y_deg else A
    x_deg = x_part.degree("x") if "x" in x_part.vars else 0
    assert x_deg == ((n * n - 1) // 2 if n % 2 else (n * n - 4) // 2)


def test_divide_by_2y():
    assert divide_by_2y(P("4*x*y")) == P("2*x")
    with pytest.raises(NotDivisible):
        divide_by_2y(P("y + 1"))


def test_index_below_one_rejected():
    with pytest.raises(ValueError):
        division_poly(0)


def _add(p, q, a):
    """Chord-and-tangent addition over Q; None is the point at infinity."""
    if p is None:
        return q
    if q is None:
        return p
    (x1, y1), (x2, y2) = p, q
    if x1 == x2 and y1 == -y2:
        return None
    lam = (3 * x1 * x1 + a) / (2 * y1) if p == q else (y2 - y1) / (x2 - x1)
    x3 = lam * lam - x1 - x2
    return x3, lam * (x1 - x3) - y1


@pytest.mark.parametrize("a, b, pt", [(0, -2, (3, 5)), (-1, 1, (1, 1)), (1, 1, (0, 1))])
def test_multiplication_by_n_agrees_with_group_law(a, b, pt):
    P0 = (Fraction(pt[0]), Fraction(pt[1]))
    env = {"x": P0[0], "y": P0[1], "a": a, "b": b}
    A = {n: _A(n).evaluate(env) if n > 0 else {0: 0, -1: -1}[n] for n in range(-1, 10)}
    Q = None
    for n in range(1, 9):
        Q = _add(Q, P0, Fraction(a))
        assert Q is not None
        assert A[n] != 0
        assert Q[0] == P0[0] - Fraction(A[n - 1] * A[n + 1], A[n] ** 2)


def test_a5_vanishes_on_five_torsion():
    with precision_context(128):
        for r in find_roots(division_poly(5).substitute({"a": 1, "b": 1})):
            x = r.value
            y = mpmath.sqrt(x ** 3 + x + 1)

            def double(x, y):
                lam = (3 * x * x + 1) / (2 * y)
                x2 = lam * lam - 2 * x
                return x2, lam * (x - x2) - y

            x2, y2 = double(x, y)
            lam = (y2 - y) / (x2 - x)
            x3 = lam * lam - x - x2
            # 5P = O means 2P = -3P, so 2P and 3P share an x-coordinate
            assert abs(x3 - x2) < mpmath.mpf(10) ** -30


def test_mobius():
    assert [mobius(n) for n in range(1, 11)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]


def test_gamma_small():
    assert gamma_n(2) == P("2*y")
    assert gamma_n(3) == division_poly(3)


def test_gamma4(golden_dir):
    assert gamma_n(4).rename({"x": "X"}) == read_golden(golden_dir, "Gamma4")[0]


def test_gamma6_is_exact():
    g = gamma_n(6)
    assert reduce_y(g * division_poly(2) * division_poly(3)) == reduce_y(division_poly(6) * division_poly(1))


# ---------------------------------------------------------------------------
# the torsion-field polynomial

def test_t4_matches_printed_under_curve_convention(golden_dir):
    printed = read_golden(golden_dir, "T4")[0]
    convention, T = adopt_t4_convention(printed)
    assert convention == "curve"
    assert T == torsion_field_poly(4)
    assert torsion_field_poly(4, convention="printed") != printed


def test_t4_constant_term():
    assert torsion_field_poly(4).coeffs_in("X")[0] == -(D ** 3)


def test_t4_is_even_of_degree_12():
    T = torsion_field_poly(4)
    assert T.degree("X") == 12
    assert all(k % 2 == 0 for k in T.coeffs_in("X"))


def test_t4_at_a_curve_is_integral_and_specializes():
    T = torsion_field_poly(4, Curve(1, 1))
    assert all(c.denominator == 1 for c in T.terms.values())
    assert T == torsion_field_poly(4).substitute({"a": 1, "b": 1})


def test_t4_roots_are_y_coordinates_of_primitive_4_torsion():
    a, b = 1, 1
    T = torsion_field_poly(4, Curve(a, b))
    with precision_context(128):
        ys = [r.value for r in find_roots(T)]
        for r in find_roots(sextic_A(Curve(a, b), var="x")):
            x = r.value
            y = mpmath.sqrt(x ** 3 + a * x + b)
            # doubling lands on a 2-torsion point: y(2P) = 0
            lam = (3 * x * x + a) / (2 * y)
            x2 = lam * lam - 2 * x
            assert abs(lam * (x - x2) - y) < mpmath.mpf(10) ** -30
            for s in (y, -y):
                assert min(abs(s - t) for t in ys) < mpmath.mpf(10) ** -30


# ---------------------------------------------------------------------------
# pipelines: symbolic and specialized runs agree

def test_adelmann_symbolic(golden_dir):
    rep = adelmann_pipeline()
    assert rep.extra["R_GP"] == read_golden(golden_dir, "adelmann_R")[0]
    assert rep.resolvent == P("Y^4 - 4*Delta*Y - 12*a*Delta")


def test_shift_identity():
    delta = P("-16*(4*a^3 + 27*b^2)")
    assert delta * -4 == P("256*a^3 + 1728*b^2")
    assert delta * P("-12*a") == P("768*a^4 + 5184*a*b^2")


@pytest.mark.parametrize("a, b", [(1, 1), (2, -1), (-1, 3), (Fraction(1, 2), 1)])
def test_adelmann_symbolic_and_specialized_agree(a, b):
    curve = Curve(a, b)
    generic = adelmann_pipeline()
    special = adelmann_pipeline(curve)
    assert special.resolvent == expand_discriminants(generic.resolvent).substitute(curve.bindings())
    assert special.extra["R_GP"] == generic.extra["R_GP"].substitute(curve.bindings())


def test_b_is_squarefree_at_sample_curves():
    B = expand_discriminants(adelmann_pipeline().resolvent)
    for pt in sample_points(5):
        assert discriminant_nonzero(B.substitute(pt.curve.bindings()), "Y")


def test_holq8_symbolic_and_specialized_agree(holq8_result):
    pt = point_through(1, 0, 1)
    special = holq8_pipeline(pt)
    for s, g in zip(special, holq8_result):
        assert s.resolvent == g.resolvent.substitute(pt.bindings())
        assert "v35" in s.engine or s.engine == "sign-specialize"


def test_holq8_specialized_values():
    res = holq8_pipeline(point_through(1, 0, 1))
    assert res.h3.resolvent == P("x^4 + 8*x^3 + 18*x^2 - 31")
    assert res.h1.resolvent.coeffs_in("x")[0] == MultiPoly.const(-18284544)
    assert res.h2.resolvent.coeffs_in("x")[0] == MultiPoly.const(-10158080)


def test_h1_minus_h2_is_constant_in_x(holq8_result):
    gap = holq8_result.h1.resolvent - holq8_result.h2.resolvent
    assert "x" not in gap.vars or gap.degree("x") == 0


def test_h2_matches_published(golden_dir, holq8_result):
    assert holq8_result.h2.resolvent == curve_normal_form(read_golden(golden_dir, "h2")[0])


def test_sample_points_filter():
    pts = sample_points(3, accept=octic_is_squarefree)
    assert all(octic_is_squarefree(p) for p in pts)
