import pytest
from hypothesis import given, strategies as st

from stefan_latent.errors import ValidationError
from stefan_latent.model import (
    BoundaryCondition,
    LatentHeatLaw,
    MaterialParams,
    ProblemSpec,
    dimensionless,
    parse_config_text,
    spec_from_mapping,
    validate,
)


def spec(beta=0.0, delta=0.0, bc=None, **material):
    return ProblemSpec(MaterialParams(**material), LatentHeatLaw(beta, delta),
                       bc or BoundaryCondition.dirichlet(1.0))


def test_classical_case_is_valid():
    s = validate(spec())
    assert s.alpha == 0


def test_beta_below_delta_rejected():
    with pytest.raises(ValidationError) as exc:
        validate(spec(beta=0, delta=1))
    assert any("beta >= delta" in p for p in exc.value.problems)


def test_power_zero_rejected():
    with pytest.raises(ValidationError) as exc:
        validate(spec(beta=0, delta=-1))
    assert any("beta + delta + 1 > 0" in p for p in exc.value.problems)


def test_every_problem_is_reported():
    raw = ProblemSpec(MaterialParams(a=-1, k=0, gamma=1), LatentHeatLaw(0, 1),
                      BoundaryCondition.neumann(-2.0))
    with pytest.raises(ValidationError) as exc:
        validate(raw)
    text = " ".join(exc.value.problems)
    for name in ("a must", "k must", "beta >= delta", "q0 must"):
        assert name in text


@pytest.mark.parametrize("bc", [
    BoundaryCondition.dirichlet(0.0),
    BoundaryCondition.robin(0.0, 1.0),
    BoundaryCondition.robin(1.0, -1.0),
    BoundaryCondition.general(-0.5, 1.0, 1.0),
    BoundaryCondition("robin", h0=1.0, u_inf=1.0, lam=2.0),
    BoundaryCondition("newton", u0=1.0),
    BoundaryCondition("neumann"),
])
def test_bad_boundary_data(bc):
    with pytest.raises(ValidationError):
        validate(spec(bc=bc))


def test_lambda_zero_allowed():
    validate(spec(bc=BoundaryCondition.general(0.0, 2.0, 1.0)))


@given(
    beta=st.floats(-0.99, 5),
    delta=st.floats(-0.99, 5),
    a=st.floats(0.01, 100),
)
def test_validate_idempotent(beta, delta, a):
    raw = spec(beta, delta, a=a)
    try:
        once = validate(raw)
    except ValidationError:
        return
    assert validate(once) == once


def test_neumann_as_general():
    assert BoundaryCondition.neumann(0.3).as_general() == (0.0, 1.0, 0.3)
    assert BoundaryCondition.robin(4.0, 0.5).as_general() == (1.0, 4.0, 0.5)


def test_groups_neumann():
    g = dimensionless(spec(bc=BoundaryCondition.neumann(0.5)))
    assert (g.Q, g.Ste, g.Bi) == (0.5, None, None)


def test_groups_robin():
    g = dimensionless(spec(bc=BoundaryCondition.robin(10.0, 0.5)))
    assert g.Q is None
    assert g.Ste == pytest.approx(0.5)
    assert g.Bi == pytest.approx(10.0)


def test_groups_dirichlet_empty():
    g = dimensionless(spec())
    assert (g.Q, g.Ste, g.Bi) == (None, None, None)


def test_biot_uses_a_h0_over_k():
    g = dimensionless(spec(bc=BoundaryCondition.robin(3.0, 1.0), a=2.0, k=5.0))
    assert g.Bi == pytest.approx(2.0 * 3.0 / 5.0)


@given(
    c=st.floats(0.01, 100),
    beta=st.floats(0, 3),
    delta=st.floats(-0.5, 0),
    a=st.floats(0.1, 10),
)
def test_groups_scale_invariance(c, beta, delta, a):
    q = dimensionless(spec(beta, delta, BoundaryCondition.neumann(0.3), a=a, gamma=2.0)).Q
    q_scaled = dimensionless(spec(beta, delta, BoundaryCondition.neumann(0.3 * c), a=a, gamma=2.0 * c)).Q
    assert q_scaled == pytest.approx(q, rel=1e-12)

    base = dimensionless(spec(beta, delta, BoundaryCondition.robin(2.0, 0.7), a=a, k=1.5, gamma=2.0))
    ste = dimensionless(spec(beta, delta, BoundaryCondition.robin(2.0, 0.7 * c), a=a, k=1.5, gamma=2.0 * c))
    bi = dimensionless(spec(beta, delta, BoundaryCondition.robin(2.0 * c, 0.7), a=a, k=1.5 * c, gamma=2.0))
    assert ste.Ste == pytest.approx(base.Ste, rel=1e-12)
    assert bi.Bi == pytest.approx(base.Bi, rel=1e-12)


def test_from_groups_matches_groups():
    s = ProblemSpec.from_groups(1.0, -0.5, "robin", Ste=0.5, Bi=10.0)
    g = dimensionless(s)
    assert g.Ste == pytest.approx(0.5)
    assert g.Bi == pytest.approx(10.0)


# configuration files ----------------------------------------------------------

def test_parse_config():
    text = """
    # flux problem
    beta = 1
    delta: 0
    bc = neumann
    q0 = 0.25   # trailing comment
    """
    assert parse_config_text(text) == {"beta": "1", "delta": "0", "bc": "neumann", "q0": "0.25"}


def test_unknown_key_rejected():
    with pytest.raises(ValidationError):
        parse_config_text("beta = 1\ncolour = red\n")
    with pytest.raises(ValidationError):
        spec_from_mapping({"bc": "neumann", "q0": 1, "colour": 2})


def test_malformed_line_rejected():
    with pytest.raises(ValidationError):
        parse_config_text("beta 1\n")


def test_spec_from_mapping_defaults():
    s, tol, max_iter = spec_from_mapping({"bc": "robin", "h0": "10", "u_inf": "0.5"})
    assert s.material == MaterialParams()
    assert s.bc.lam == 1.0
    assert (tol, max_iter) == (1e-10, 100)


def test_spec_from_mapping_collects_problems():
    with pytest.raises(ValidationError) as exc:
        spec_from_mapping({"bc": "dirichlet", "u0": "-1", "beta": "0", "delta": "1", "tol": "0"})
    assert len(exc.value.problems) == 3


def test_spec_from_mapping_non_numeric():
    with pytest.raises(ValidationError):
        spec_from_mapping({"bc": "dirichlet", "u0": "warm"})


def test_spec_is_immutable():
    s = validate(spec())
    with pytest.raises(AttributeError):
        s.law = LatentHeatLaw(1, 0)
