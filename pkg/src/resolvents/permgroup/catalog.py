"""The concrete groups, subgroups and invariants the pipelines run on.

All groups are pinned by explicit permutation generators.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from ..polyring import MultiPoly, P
from .action import orbit_sum
from .group import PermGroup, group_closure
from .perm import Perm


@dataclass(frozen=True)
class ResolventSetup:
    """G acting on roots, normal H with G/H the target quotient, F with [G:F] conjugates."""

    name: str
    G: PermGroup
    H: PermGroup
    F: PermGroup
    printed_transversal: tuple
    invariant: MultiPoly
    extra: dict = field(default_factory=dict)


# ---------------------------------------------------------------------------
# quartic warm-up: S4 over V4

WARMUP_G_GENS = ("(1,2)", "(1,2,3,4)")
WARMUP_H_GENS = ("(1,4)(2,3)", "(1,3)(2,4)")
WARMUP_F_GENS = ("(3,4)", "(1,4)(2,3)", "(1,3)(2,4)")
WARMUP_TRANSVERSAL = ("()", "(2,3)", "(2,4)")


@lru_cache(maxsize=None)
def warmup() -> ResolventSetup:
    G = group_closure(4, WARMUP_G_GENS, label="S4")
    H = group_closure(4, WARMUP_H_GENS, label="V4")
    F = group_closure(4, WARMUP_F_GENS, label="F")
    _, plain = orbit_sum(F, P("x1*x2"))
    return ResolventSetup(
        "warmup", G, H, F,
        tuple(Perm.parse(s, 4) for s in WARMUP_TRANSVERSAL),
        plain,
    )


# ---------------------------------------------------------------------------
# PGL2(Z/4Z) on the six roots of the 4-division sextic

ADELMANN_F_GENS = ("(1,2,5,6,4,3)", "(1,4)(2,6)")
ADELMANN_H_GENS = ("(1,6)(2,4)(3,5)",)
ADELMANN_TRANSVERSAL = ("()", "(1,6)", "(2,4)", "(3,5)")

# matrix -> permutation pairs as printed; matrices are ((a, b), (c, d)) over Z/4Z
ADELMANN_DICTIONARY = (
    (((1, 1), (1, 0)), "(1,2,5,6,4,3)"),
    (((0, -1), (1, 0)), "(1,4)(2,6)"),
    (((1, 2), (2, -1)), "(1,6)(2,4)(3,5)"),
    (((1, 0), (2, -1)), "(1,6)"),
    (((1, 2), (0, -1)), "(2,4)"),
    (((1, 0), (0, -1)), "(3,5)"),
)

ADELMANN_F_MATRICES = (
    ((1, 0), (0, 1)), ((0, -1), (1, 0)), ((-1, 0), (1, 1)),
    ((-1, 1), (0, 1)), ((1, 1), (1, 0)), ((0, 1), (1, -1)),
    ((1, 2), (2, -1)), ((2, 1), (1, 2)), ((1, 2), (1, -1)),
    ((1, 1), (2, -1)), ((-1, 1), (1, 2)), ((2, 1), (1, 1)),
)


@dataclass(frozen=True)
class FundamentalInvariant:
    name: str
    monomial: str
    image: str

    @property
    def polynomial(self) -> MultiPoly:
        return adelmann_invariant_polys()[self.name]

    @property
    def image_poly(self) -> MultiPoly:
        return P(self.image)


# plain orbit sums R_G(monomial) and their values at the sextic's roots
ADELMANN_TABLE = (
    FundamentalInvariant("u1", "x1", "0"),
    FundamentalInvariant("u2", "x2*x4", "a"),
    FundamentalInvariant("v2", "x1*x2", "4*a"),
    FundamentalInvariant("u3", "x1*x2*x3", "-8*b"),
    FundamentalInvariant("u4", "x2*x3*x4*x5", "-a^2"),
    FundamentalInvariant("u6", "x1*x2*x3*x4*x5*x6", "-(a^3 + 8*b^2)"),
    FundamentalInvariant("w3", "x1*x2*x4", "-12*b"),
    FundamentalInvariant("w4", "x1*x2*x3*x4", "-4*a^2"),
    FundamentalInvariant("w5", "x1*x2*x3*x4*x5", "4*a*b"),
)


@lru_cache(maxsize=None)
def adelmann() -> ResolventSetup:
    F = group_closure(6, ADELMANN_F_GENS, label="F")
    H = group_closure(6, ADELMANN_H_GENS, label="H")
    G = group_closure(6, ADELMANN_F_GENS + ADELMANN_TRANSVERSAL[1:], label="PGL2(Z/4Z)")
    _, plain = orbit_sum(F, P("x1*x2"))
    return ResolventSetup(
        "adelmann", G, H, F,
        tuple(Perm.parse(s, 6) for s in ADELMANN_TRANSVERSAL),
        plain,
    )


@lru_cache(maxsize=None)
def adelmann_invariant_polys() -> dict:
    G = adelmann().G
    return {inv.name: orbit_sum(G, P(inv.monomial))[1] for inv in ADELMANN_TABLE}


# ---------------------------------------------------------------------------
# Hol(Q8) = TransitiveGroup(8, 40) on the eight roots of the octic

HOLQ8_G_GENS = (
    "(1,3,4,8,7,5)(2,6)", "(2,6)(3,7)", "(2,4,7)(3,6,5)", "(3,7)(4,5)", "(1,7,4,2,8,3,5,6)",
)
HOLQ8_H_GENS = (
    ("(1,2,8,6)(3,5,7,4)", "(1,7,8,3)(2,5,6,4)", "(1,8)(2,6)(3,7)(4,5)"),
    ("(1,4,8,5)(2,3,6,7)", "(1,2,8,6)(3,4,7,5)", "(1,8)(2,6)(3,7)(4,5)"),
    ("(2,6)(4,5)", "(2,6)(3,7)", "(1,8)(2,6)(3,7)(4,5)"),
)
HOLQ8_F_GENS = (
    ("(2,4)(3,7)(5,6)", "(2,3,5)(4,6,7)", "(1,2,8,6)(3,5,7,4)", "(1,7,8,3)(2,5,6,4)",
     "(1,8)(2,6)(3,7)(4,5)"),
    ("(2,5)(3,7)(4,6)", "(2,7,4)(3,5,6)", "(1,4,8,5)(2,3,6,7)", "(1,2,8,6)(3,4,7,5)",
     "(1,8)(2,6)(3,7)(4,5)"),
    ("(2,4,6,5)", "(2,7,4)(3,5,6)", "(2,6)(4,5)", "(2,6)(3,7)", "(1,8)(2,6)(3,7)(4,5)"),
)
HOLQ8_TRANSVERSALS = (
    ("()", "(3,7)(4,5)", "(1,2,5,3,8,6,4,7)", "(1,3,5,8,7,4)(2,6)"),
    ("()", "(1,3,4,8,7,5)(2,6)", "(2,6)(3,7)", "(1,5,7,8,4,3)(2,6)"),
    ("()", "(1,3,4,8,7,5)(2,6)", "(1,5,7,8,4,3)(2,6)", "(1,6,5,3,8,2,4,7)"),
)

# negation pairs among the octic's roots: x8 = -x1, x6 = -x2, x7 = -x3, x5 = -x4
HOLQ8_PAIRS = ((1, 8), (2, 6), (3, 7), (4, 5))

HOLQ8_P1 = (
    "x1^2*x2*x7 + x1^2*x3*x4 + x1^2*x5*x6 + x1*x2^2*x7 + x1*x2*x7^2 + x1*x3^2*x4"
    " + x1*x3*x4^2 + x1*x5^2*x6 + x1*x5*x6^2 + x2^2*x3*x5 + x2^2*x4*x8 + x2*x3^2*x5"
    " + x2*x3*x5^2 + x2*x4^2*x8 + x2*x4*x8^2 + x3^2*x6*x8 + x3*x6^2*x8 + x3*x6*x8^2"
    " + x4^2*x6*x7 + x4*x6^2*x7 + x4*x6*x7^2 + x5^2*x7*x8 + x5*x7^2*x8 + x5*x7*x8^2"
)
HOLQ8_P2 = (
    "x1^2*x2*x3 + x1^2*x4*x6 + x1^2*x5*x7 + x1*x2^2*x7 + x1*x2*x4^2 + x1*x3^2*x6"
    " + x1*x3*x5^2 + x1*x4*x7^2 + x1*x5*x6^2 + x2^2*x3*x5 + x2^2*x4*x8 + x2*x3^2*x4"
    " + x2*x5^2*x7 + x2*x5*x8^2 + x2*x7^2*x8 + x3^2*x5*x8 + x3*x4^2*x6 + x3*x4*x8^2"
    " + x3*x6^2*x8 + x4^2*x7*x8 + x4*x6^2*x7 + x5^2*x6*x8 + x5*x6*x7^2 + x6*x7*x8^2"
)
HOLQ8_P3 = "x1*x8"

# the degree-16 monomial whose G-orbit sum gives the fundamental invariant u35
U35_MONOMIAL = "x1^7*x2^5*x3^3*x5"


@lru_cache(maxsize=None)
def holq8_group() -> PermGroup:
    return group_closure(8, HOLQ8_G_GENS, label="Hol(Q8)")


@lru_cache(maxsize=None)
def holq8(i: int) -> ResolventSetup:
    """Setup for the i-th S4 quotient, i in 1..3."""
    if i not in (1, 2, 3):
        raise ValueError("Hol(Q8) has three S4 quotients, i in 1..3")
    G = holq8_group()
    H = group_closure(8, HOLQ8_H_GENS[i - 1], label=f"H{i}")
    F = group_closure(8, HOLQ8_F_GENS[i - 1], label=f"F{i}")
    inv = P({1: HOLQ8_P1, 2: HOLQ8_P2, 3: HOLQ8_P3}[i])
    return ResolventSetup(
        f"holq8-{i}", G, H, F,
        tuple(Perm.parse(s, 8) for s in HOLQ8_TRANSVERSALS[i - 1]),
        inv,
    )


# ---------------------------------------------------------------------------
# summaries for reporting

def setup_facts(setup: ResolventSetup, quotient: str) -> dict:
    """Orders, normality, quotient type, stabilizer and transversal facts for one setup."""
    from .action import stabilizer_of_poly
    from .group import is_left_transversal, is_normal, is_right_transversal
    from .quotient import Quotient, find_isomorphism

    G, H, F = setup.G, setup.H, setup.F
    target = symmetric_group_for(quotient)
    Q = Quotient(G, H)
    reps = list(setup.printed_transversal)
    return {
        "G_order": G.order,
        "H_order": H.order,
        "F_order": F.order,
        "index": G.order // F.order,
        "H_normal": is_normal(G, H),
        "H_abelian": H.is_abelian(),
        "H_involutions": len(H.involutions()),
        "quotient": quotient,
        "quotient_isomorphic": find_isomorphism(Q.table, Q.identity, target) is not None,
        "H_in_F": H.issubset(F),
        "stabilizer_is_F": stabilizer_of_poly(G, setup.invariant) == F,
        "transversal": [str(g) for g in reps],
        "left_transversal": is_left_transversal(G, F, reps),
        "right_transversal": is_right_transversal(G, F, reps),
    }


def symmetric_group_for(name: str) -> PermGroup:
    from .group import symmetric_group
    return symmetric_group({"S3": 3, "S4": 4}[name])


def group_facts(which: str) -> dict:
    if which == "warmup":
        return {"warmup": setup_facts(warmup(), "S3")}
    if which == "adelmann":
        return {"adelmann": setup_facts(adelmann(), "S4")}
    if which == "holq8":
        return {f"holq8-{i}": setup_facts(holq8(i), "S4") for i in (1, 2, 3)}
    raise ValueError(f"unknown group setup {which!r}; expected warmup, adelmann or holq8")
