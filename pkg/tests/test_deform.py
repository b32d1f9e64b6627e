import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from blowade.certify import analyze
from blowade.deform import DEFAULT_SAMPLES, DeformationFamily, check_family, mu_star
from blowade.errors import DegenerateForMuStar
from blowade.poly import parse_polynomial

P = parse_polynomial

SUPERISOLATED = "z1*z2*z3 + z1^4 + z2^4 + z3^4 + s*z2^4"
SQUARE_AT_HALF = "z1*z2*(z2 + (2*s - 1)*z3) + z1^4 + z2^4 + z3^4"


@pytest.fixture(scope="module")
def stable():
    return check_family(DeformationFamily.parse(SUPERISOLATED))


def test_family_parse_and_evaluate():
    fam = DeformationFamily.parse(SUPERISOLATED)
    assert fam.sample_points == DEFAULT_SAMPLES
    assert fam.at(Fraction(1, 2)) == P("z1*z2*z3 + z1^4 + 3/2*z2^4 + z3^4")


def test_stable_family(stable):
    assert stable.consistent
    assert all(v is True for v in stable.constant_flags.values())
    assert stable.same_type_all is True
    assert len(stable.samples) == 6


def test_base_sample_matches_standalone(stable):
    base = stable.samples[0]
    assert base.s == 0
    assert base.report.to_dict() == analyze(P("z1*z2*z3 + z1^4 + z2^4 + z3^4")).to_dict()


def test_engineered_reducedness_violation():
    v = check_family(DeformationFamily.parse(SQUARE_AT_HALF, [0, Fraction(1, 3), Fraction(1, 2), 1]))
    assert v.first_violation == (Fraction(1, 2), "reduced")
    assert v.constant_flags["reduced"] is False
    bad = next(s for s in v.samples if s.s == Fraction(1, 2))
    assert bad.error["kind"] == "non_reduced_tangent_cone"


def test_constant_family_reports_identical():
    v = check_family(DeformationFamily.parse("z1*z2*z3 + z1^4 + z2^4 + z3^4", [0, Fraction(1, 2), 1]))
    dumps = [s.to_dict() | {"s": None} for s in v.samples]
    assert dumps[0] == dumps[1] == dumps[2]


def test_sample_order_irrelevant():
    fam = DeformationFamily.parse(SQUARE_AT_HALF, [1, Fraction(1, 2), 0])
    fam2 = DeformationFamily.parse(SQUARE_AT_HALF, [0, 1, Fraction(1, 2)])
    assert check_family(fam).to_dict() == check_family(fam2).to_dict()


def test_mu_star_morse():
    assert mu_star(P("z1^2 + z2^2 + z3^2")).as_tuple() == (1, 1, 1)


def test_mu_star_superisolated():
    # value fixed by the hull oracle, not by the package
    from oracles import newton_number_oracle

    f = P("z1*z2*z3 + z1^4 + z2^4 + z3^4")
    ms = mu_star(f)
    assert ms.mu3 == newton_number_oracle(list(f.support)) == 11
    assert ms.mu1 == 2


@settings(max_examples=15, deadline=None)
@given(st.tuples(*[st.integers(2, 5)] * 3), st.integers(0, 1000))
def test_mu_star_brieskorn(exps, seed):
    a, b, c = sorted(exps)
    ms = mu_star(P(f"z1^{exps[0]} + z2^{exps[1]} + z3^{exps[2]}"), seed=seed)
    assert ms.as_tuple() == ((a - 1) * (b - 1) * (c - 1), (a - 1) * (b - 1), a - 1)


def test_mu_star_degenerate():
    with pytest.raises(DegenerateForMuStar):
        mu_star(P("z1*z2*z3"))
    with pytest.raises(DegenerateForMuStar):
        mu_star(P("(z1 + z2)^2 + z3^2"))
