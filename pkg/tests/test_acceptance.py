"""One test per acceptance criterion.  Each records a PASS/FAIL line, printed at the end of the run."""

import mpmath
import pytest

from resolvents.elliptic import (
    adelmann_pipeline, adopt_t4_convention, curve_normal_form, division_poly, gamma_n, reduce_y, sextic_A,
)
from resolvents.elliptic.pipelines import check_adelmann_table
from resolvents.numericoracle import ACCEPTANCE_TOLERANCE
from resolvents.permgroup import Coset, conjugates_of_poly, is_normal, orbit_sum, stabilizer_of_poly
from resolvents.permgroup.catalog import holq8
from resolvents.permgroup.quotient import Quotient, find_isomorphism
from resolvents.permgroup.group import symmetric_group
from resolvents.polyring import P
from resolvents.resolvent import PairingRelations, resolvent_cubic
from resolvents.suite import flip_odd_coefficient, oracle_checks, read_golden

TOLERANCE = mpmath.mpf("1e-20")
PRECISION = 256

RESULTS: dict = {}


def record(n: int, title: str, ok: bool, detail: str = ""):
    line = f"{'PASS' if ok else 'FAIL'} criterion {n}: {title}" + (f" ({detail})" if detail else "")
    RESULTS[n] = line
    print(line)
    assert ok, line


def test_tolerance_is_the_acceptance_tolerance():
    assert ACCEPTANCE_TOLERANCE == TOLERANCE


def test_criterion_1_warmup(golden_dir):
    g = resolvent_cubic().resolvent
    expected = P("x^3 - a2*x^2 + (a1*a3 - 4*a0)*x + (-a1^2 + 4*a0*a2 - a0*a3^2)")
    record(1, "resolvent cubic of the generic quartic", g == expected == read_golden(golden_dir, "warmup_g")[0])


def test_criterion_2_adelmann(golden_dir):
    rep = adelmann_pipeline()
    R = P("Y^4 - 8*a*Y^3 + 24*a^2*Y^2 + (224*a^3 + 1728*b^2)*Y + 272*a^4 + 1728*a*b^2")
    B = P("Y^4 - 4*Delta*Y - 12*a*Delta")
    ok = rep.extra["R_GP"] == R == read_golden(golden_dir, "adelmann_R")[0]
    ok = ok and rep.resolvent == B == read_golden(golden_dir, "adelmann_B")[0]
    record(2, "R_GP(Y) and B(Y) for the 4-division sextic", ok)


def test_criterion_3_table_gate():
    expected = {1: "0", 2: "5*a", 3: "-20*b", 4: "-5*a^2", 5: "4*a*b", 6: "-(a^3 + 8*b^2)"}
    result = check_adelmann_table()
    ok = all(result[k][0] == result[k][1] == P(v) for k, v in expected.items())
    record(3, "invariant table maps e1..e6 to the sextic's coefficients", ok)


def _A(n):
    return {-1: P("-1"), 0: P("0")}.get(n) if n <= 0 else division_poly(n)


def test_criterion_4_division_polynomials(golden_dir):
    gold = lambda name: read_golden(golden_dir, name)[0]
    ok = division_poly(3) == gold("A3") and division_poly(4) == gold("A4")
    for m in range(2, 6):
        odd = reduce_y(_A(m + 2) * _A(m) ** 3 - _A(m - 1) * _A(m + 1) ** 3) == division_poly(2 * m + 1)
        even = reduce_y(P("2*y") * division_poly(2 * m)) == reduce_y(
            _A(m) * (_A(m + 2) * _A(m - 1) ** 2 - _A(m - 2) * _A(m + 1) ** 2))
        ok = ok and odd and even
    ok = ok and gamma_n(4) == sextic_A(var="x") * 2 and gamma_n(4).rename({"x": "X"}) == gold("Gamma4")
    convention, _ = adopt_t4_convention(gold("T4"))
    record(4, "A3, A4, recursions for m <= 5, Gamma4, T4", ok and convention == "curve",
           f"T4 convention: {convention}")


def _is_isomorphism(Q: Quotient, phi) -> bool:
    n = Q.order
    if phi is None or len(set(phi)) != n:
        return False
    return all(phi[Q.table[i][j]] == phi[i] * phi[j] for i in range(n) for j in range(n))


def test_criterion_5_holq8_group_facts():
    S4 = symmetric_group(4)
    ok = True
    for i in (1, 2, 3):
        s = holq8(i)
        ok = ok and s.G.order == 192 and s.H.order == 8 and is_normal(s.G, s.H)
        if i in (1, 2):
            ok = ok and not s.H.is_abelian() and len(s.H.involutions()) == 1
        else:
            ok = ok and s.H.is_abelian() and all((g * g).is_identity() for g in s.H)
        Q = Quotient(s.G, s.H)
        ok = ok and _is_isomorphism(Q, find_isomorphism(Q.table, Q.identity, S4))
        ok = ok and stabilizer_of_poly(s.G, s.invariant) == s.F and s.F.order == 48 and s.G.order // s.F.order == 4
    record(5, "Hol(Q8): orders, normality, H types, G/H = S4, Stab = F", ok)


def test_criterion_6_vanishing():
    rel = PairingRelations({})
    conj = []
    for i in (1, 2):
        s = holq8(i)
        _, cubic = orbit_sum(s.F, P("x1*x2*x3"))
        conj += conjugates_of_poly(s.G, [Coset(g, s.F) for g in s.printed_transversal], cubic)
    ok = len(conj) == 8 and all(rel.apply(c).is_zero() for c in conj)
    record(6, "degree-3 conjugates vanish under the pairing", ok, f"{len(conj)} conjugates")


def test_criterion_7_holq8_resolvents(golden_dir, holq8_result):
    d = P("4*a^3 + 27*b^2")
    h2 = curve_normal_form(P("x^4 - 512*d*x^2 + 2^15*d*w^2*x + 2^16*d*(d + w^2*(12*a*z - 36*b))").substitute({"d": d}))
    h1 = h2 + P("2^18") * d * P("27*b*z^3 - 9*a^2*z^2 - a^3")
    res = holq8_result
    engines_ok = all(set(r.extra["coefficient_engines"]) <= {"sign-specialize", "ansatz"} for r in res)
    printed_h3 = read_golden(golden_dir, "h3")[0]
    ok = res.h2.resolvent == h2 and res.h1.resolvent == h1 and engines_ok
    ok = ok and res.h3.resolvent == flip_odd_coefficient(printed_h3, "x", 3)
    record(7, "h1, h2 exact; h3 up to the arbitrated x^3 sign", ok,
           "engines " + ", ".join(f"{r.name}: {'+'.join(r.extra['coefficient_engines'])}" for r in res))


@pytest.mark.slow
def test_criterion_8_oracle(holq8_result):
    result = oracle_checks(5, PRECISION, holq8_result=holq8_result)
    failed = [c.name for c in result.checks if not c.passed]
    sign = next(c for c in result.checks if c.name == "oracle.h3_sign")
    record(8, "numeric oracle at 5 sample curves, 256 bits, tolerance 1e-20", not failed,
           f"{len(result.checks)} checks; h3 sign: {sign.detail}" + (f"; failed {failed}" if failed else ""))


def test_criterion_9_properties():
    import test_permgroup
    import test_polyring

    properties = [
        test_polyring.test_distributivity, test_polyring.test_commutativity, test_polyring.test_associativity,
        test_polyring.test_symmetric_reduce_round_trip, test_polyring.test_resultant_matches_product_over_roots,
        test_permgroup.test_orbit_stabilizer, test_permgroup.test_conjugate_sets_do_not_depend_on_transversal,
    ]
    failures = []
    for prop in properties:
        if prop._hypothesis_internal_use_settings.max_examples < 100:
            failures.append(f"{prop.__name__}: fewer than 100 examples")
            continue
        try:
            prop()
        except Exception as exc:  # report every failing property, not just the first
            failures.append(f"{prop.__name__}: {type(exc).__name__}")
    record(9, "property suites, each at least 100 randomized cases", not failures,
           f"{len(properties)} properties" + (f"; {failures}" if failures else ""))

