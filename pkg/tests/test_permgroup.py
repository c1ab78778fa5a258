import pytest
from hypothesis import given, settings, strategies as st

from resolvents.errors import DegreeMismatch, NotASubgroup, NotInvariant
from resolvents.permgroup import (
    Coset, Perm, PermGroup, Quotient, act_on_poly, canonical_set, conjugates_of_poly, group_closure,
    is_invariant, is_isomorphic_to_s3, is_isomorphic_to_s4, is_left_transversal, is_normal,
    is_right_transversal, left_transversal, normalizer, orbit, orbit_sum, stabilizer_of_poly, symmetric_group,
)
from resolvents.permgroup.catalog import (
    ADELMANN_DICTIONARY, ADELMANN_F_MATRICES, ADELMANN_TABLE, HOLQ8_F_GENS, adelmann, adelmann_invariant_polys,
    group_facts, holq8, holq8_group, warmup,
)
from resolvents.polyring import P


# ---------------------------------------------------------------------------
# permutations

def test_parse_and_format():
    g = Perm.parse("(1,2,5,6,4,3)", 6)
    assert str(g) == "(1,2,5,6,4,3)"
    assert g(1) == 2 and g(3) == 1
    assert g.order() == 6


def test_composition_applies_right_factor_first():
    a = Perm.parse("(1,2)", 3)
    b = Perm.parse("(2,3)", 3)
    assert (a * b)(2) == a(b(2)) == 3


def test_inverse():
    g = Perm.parse("(1,3,4,8,7,5)(2,6)", 8)
    assert (g * g.inverse()).is_identity()


# ---------------------------------------------------------------------------
# closure

def test_s4_order():
    assert group_closure(4, ["(1,2)", "(1,2,3,4)"]).order == 24


def test_holq8_order():
    assert holq8_group().order == 192


def test_h1_is_nonabelian_of_order_8():
    H1 = holq8(1).H
    assert H1.order == 8
    assert not H1.is_abelian()
    assert len(H1.involutions()) == 1


def test_closure_cap():
    from resolvents.errors import CapExceeded
    with pytest.raises(CapExceeded):
        group_closure(8, ["(1,2)", "(1,2,3,4,5,6,7,8)"], cap=1000)


# ---------------------------------------------------------------------------
# normality, cosets, normalizers

def test_v4_is_normal_in_s4():
    S4 = symmetric_group(4)
    V4 = group_closure(4, ["(1,4)(2,3)", "(1,3)(2,4)"])
    assert V4.order == 4
    assert is_normal(S4, V4)


def test_transposition_is_not_normal():
    S4 = symmetric_group(4)
    assert not is_normal(S4, group_closure(4, ["(1,2)"]))


def test_non_subgroup_raises():
    G = group_closure(4, ["(1,2)"])
    with pytest.raises(NotASubgroup):
        is_normal(G, group_closure(4, ["(3,4)"]))


@pytest.mark.parametrize("i", [1, 2, 3])
def test_each_h_is_normal_in_holq8(i):
    assert is_normal(holq8(i).G, holq8(i).H)


def test_warmup_transversal_equivalent_to_printed():
    s = warmup()
    reps = left_transversal(s.G, s.F)
    assert len(reps) == 3
    assert set(reps) == {Coset(g, s.F) for g in s.printed_transversal}


@pytest.mark.parametrize("i", [1, 2, 3])
def test_holq8_transversals(i):
    s = holq8(i)
    reps = left_transversal(s.G, s.F)
    assert len(reps) == 4
    assert set(reps) == {Coset(g, s.F) for g in s.printed_transversal}


def test_trivial_transversal():
    S3 = symmetric_group(3)
    reps = left_transversal(S3, S3)
    assert len(reps) == 1 and reps[0].representative.is_identity()


def test_left_and_right_transversals():
    assert is_left_transversal(holq8(2).G, holq8(2).F, holq8(2).printed_transversal)
    assert is_right_transversal(holq8(2).G, holq8(2).F, holq8(2).printed_transversal)
    assert is_left_transversal(holq8(1).G, holq8(1).F, holq8(1).printed_transversal)
    assert not is_right_transversal(holq8(1).G, holq8(1).F, holq8(1).printed_transversal)


def test_transposition_is_self_normalizing_in_s3():
    S3 = symmetric_group(3)
    assert normalizer(S3, group_closure(3, ["(1,2)"])).order == 2


def test_normalizer_of_normal_subgroup_is_whole_group():
    s = holq8(1)
    assert normalizer(s.G, s.H) == s.G


def test_f1_image_has_four_conjugates_in_quotient():
    s = holq8(1)
    Q = Quotient(s.G, s.H)
    image = Q.image(s.F)
    assert len(image) == 6
    assert Q.order // len(Q.normalizer(image)) == 4


# ---------------------------------------------------------------------------
# action on polynomials

def test_transposition_on_monomial():
    assert act_on_poly(Perm.parse("(1,2)", 4), P("x1*x3")) == P("x2*x3")


def test_central_element_fixes_p3():
    g = Perm.parse("(1,8)(2,6)(3,7)(4,5)", 8)
    assert act_on_poly(g, P("x1*x8")) == P("x1*x8")


def test_identity_action():
    p = P("x1^2*x3 + a*x2")
    assert act_on_poly(Perm.identity(4), p) == p


def test_parameters_are_fixed():
    assert act_on_poly(Perm.parse("(1,2)", 2), P("a*x1")) == P("a*x2")


def test_degree_mismatch():
    with pytest.raises(DegreeMismatch):
        act_on_poly(Perm.parse("(1,2)", 2), P("x5"))


def test_warmup_stabilizer():
    s = warmup()
    stab = stabilizer_of_poly(s.G, P("x1*x2 + x3*x4"))
    assert stab.order == 8
    assert stab == group_closure(4, ["(3,4)", "(1,4)(2,3)", "(1,3)(2,4)"])


@pytest.mark.parametrize("i", [1, 2, 3])
def test_holq8_stabilizers(i):
    s = holq8(i)
    stab = stabilizer_of_poly(s.G, s.invariant)
    assert stab.order == 48
    assert stab == group_closure(8, HOLQ8_F_GENS[i - 1])


def test_weighted_versus_plain_orbit_sum():
    s = warmup()
    weighted, plain = orbit_sum(s.F, P("x1*x2"))
    assert weighted == P("4*(x1*x2 + x3*x4)")
    assert plain == P("x1*x2 + x3*x4")


def test_adelmann_orbit_of_x2x4():
    _, plain = orbit_sum(adelmann().G, P("x2*x4"))
    assert plain == P("x1*x6 + x2*x4 + x3*x5")


def test_orbit_sum_of_invariant():
    s = warmup()
    m = P("x1*x2 + x3*x4")
    weighted, plain = orbit_sum(s.F, m)
    assert weighted == m * 8 and plain == m


def test_warmup_conjugates():
    s = warmup()
    conj = conjugates_of_poly(s.G, [Coset(g, s.F) for g in s.printed_transversal], s.invariant)
    assert canonical_set(conj) == canonical_set([P("x1*x2 + x3*x4"), P("x1*x3 + x2*x4"), P("x1*x4 + x2*x3")])


def test_gamma_conjugates():
    s = holq8(3)
    conj = conjugates_of_poly(s.G, [Coset(g, s.F) for g in s.printed_transversal], s.invariant)
    assert canonical_set(conj) == canonical_set([P("x1*x8"), P("x2*x6"), P("x3*x7"), P("x4*x5")])


def test_trivial_transversal_conjugates():
    G = symmetric_group(3)
    p = P("x1 + x2 + x3")
    assert conjugates_of_poly(G, [Coset(Perm.identity(3), G)], p) == [p]


def test_conjugates_require_invariance():
    s = warmup()
    with pytest.raises(NotInvariant):
        conjugates_of_poly(s.G, [Coset(g, s.F) for g in s.printed_transversal], P("x1"))


# ---------------------------------------------------------------------------
# quotients

def test_s4_mod_v4_is_s3():
    s = warmup()
    assert Quotient(s.G, s.H).order == 6
    assert not is_isomorphic_to_s4(s.G, s.H)
    assert is_isomorphic_to_s3(s.G, s.H)


def test_adelmann_quotient_is_s4():
    s = adelmann()
    assert s.G.order == 48
    assert is_isomorphic_to_s4(s.G, s.H)


@pytest.mark.parametrize("i", [1, 2, 3])
def test_holq8_quotients_are_s4(i):
    assert is_isomorphic_to_s4(holq8(i).G, holq8(i).H)


def test_group_facts_summary():
    facts = group_facts("holq8")
    assert [facts[f"holq8-{i}"]["H_abelian"] for i in (1, 2, 3)] == [False, False, True]
    assert facts["holq8-3"]["H_involutions"] == 7
    assert all(f["stabilizer_is_F"] and f["quotient_isomorphic"] for f in facts.values())


def test_adelmann_orbit_sizes():
    sizes = {t.name: len(orbit(adelmann().G, P(t.monomial))) for t in ADELMANN_TABLE}
    assert sizes == {"u1": 6, "u2": 3, "v2": 12, "u3": 8, "u4": 3, "u6": 1, "w3": 12, "w4": 12, "w5": 6}
    polys = adelmann_invariant_polys()
    assert all(is_invariant(adelmann().G.generators, p) for p in polys.values())


# ---------------------------------------------------------------------------
# PGL2(Z/4Z): the matrices behind the permutation generators.  Test-side
# oracle only; the library never does matrix arithmetic.

POINTS = [(1, 0), (0, 1), (1, 1), (1, 3), (1, 2), (2, 1)]  # P^1(Z/4Z)
ROOT_AT_POINT = (1, 0, 4, 2, 3, 5)  # POINTS[j] carries root x_{ROOT_AT_POINT[j] + 1}


def _projective(v):
    for u in (1, 3):
        c = ((u * v[0]) % 4, (u * v[1]) % 4)
        if c in POINTS:
            return c
    raise AssertionError(f"{v} is not a point of P^1(Z/4Z)")


def matrix_to_perm(M) -> Perm:
    """Row action v -> vM on P^1(Z/4Z), read through the root labeling."""
    where = {ROOT_AT_POINT[j]: POINTS[j] for j in range(6)}
    at = {p: r for r, p in where.items()}
    images = []
    for r in range(6):
        x, y = where[r]
        images.append(at[_projective((x * M[0][0] + y * M[1][0], x * M[0][1] + y * M[1][1]))])
    return Perm(images)


def _mat_mul(A, B):
    return tuple(tuple(sum(A[i][k] * B[k][j] for k in range(2)) % 4 for j in range(2)) for i in range(2))


def _mod_sign(M):
    plus = tuple(tuple(x % 4 for x in row) for row in M)
    minus = tuple(tuple((-x) % 4 for x in row) for row in M)
    return min(plus, minus)


def test_matrix_closure_matches_printed_list():
    gens = [ADELMANN_DICTIONARY[0][0], ADELMANN_DICTIONARY[1][0]]
    identity = ((1, 0), (0, 1))
    seen = {_mod_sign(identity)}
    frontier = [identity]
    while frontier:
        nxt = []
        for A in frontier:
            for g in gens:
                B = _mat_mul(A, g)
                if _mod_sign(B) not in seen:
                    seen.add(_mod_sign(B))
                    nxt.append(B)
        frontier = nxt
    assert seen == {_mod_sign(M) for M in ADELMANN_F_MATRICES}


def test_matrix_images_form_f():
    images = {matrix_to_perm(M) for M in ADELMANN_F_MATRICES}
    assert images == set(adelmann().F)


def test_matrix_dictionary():
    mismatched = []
    for M, text in ADELMANN_DICTIONARY:
        if matrix_to_perm(M) != Perm.parse(text, 6):
            mismatched.append((M, str(matrix_to_perm(M))))
    # one printed pairing is inconsistent with the others under every labeling tried
    assert mismatched == [(((0, -1), (1, 0)), "(1,2)(3,5)(4,6)")]
    assert matrix_to_perm(((2, 1), (1, 2))) == Perm.parse("(1,4)(2,6)", 6)


# ---------------------------------------------------------------------------
# properties

small_groups = st.sampled_from(["warmup", "adelmann", "holq8"])


@st.composite
def monomials(draw, n):
    exps = [draw(st.integers(0, 3)) for _ in range(n)]
    text = "*".join(f"x{i + 1}^{e}" for i, e in enumerate(exps) if e) or "1"
    return P(text)


def _setup(name):
    return {"warmup": warmup, "adelmann": adelmann, "holq8": lambda: holq8(1)}[name]()


@settings(max_examples=120, deadline=None)
@given(st.data())
def test_orbit_stabilizer(data):
    s = _setup(data.draw(small_groups))
    m = data.draw(monomials(s.G.degree))
    assert len(orbit(s.G, m)) * stabilizer_of_poly(s.G, m).order == s.G.order


@settings(max_examples=120, deadline=None)
@given(st.data())
def test_conjugate_sets_do_not_depend_on_transversal(data):
    s = _setup(data.draw(small_groups))
    members = {Coset(g, s.F): list(Coset(g, s.F).members()) for g in s.printed_transversal}
    reps = [data.draw(st.sampled_from(ms)) for ms in members.values()]
    base = conjugates_of_poly(s.G, [Coset(g, s.F) for g in s.printed_transversal], s.invariant)
    other = conjugates_of_poly(s.G, [Coset(g, s.F) for g in reps], s.invariant)
    assert canonical_set(base) == canonical_set(other)


@settings(max_examples=100, deadline=None)
@given(st.permutations(list(range(1, 7))), st.permutations(list(range(1, 7))))
def test_action_is_a_homomorphism(a, b):
    g, h = Perm([x - 1 for x in a]), Perm([x - 1 for x in b])
    p = P("x1^2*x2 + 3*x3*x4*x5 - x6")
    assert act_on_poly(g * h, p) == act_on_poly(g, act_on_poly(h, p))
