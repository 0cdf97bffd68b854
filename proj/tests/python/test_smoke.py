import math

import pytest

import casimir as c


def test_version_and_units():
    assert c.__version__.count(".") == 2
    assert "hbar=c=k_B=1" in c.UNITS


def test_london_and_retarded_limits():
    s = c.AtomSpecies(1.0, 1.0)
    assert c.u_nonresonant_integral(s, s, 0.005) * 0.005**6 == pytest.approx(-1 / 3, rel=2e-2)
    alpha = c.alpha_static(s)
    cp = -23 / (4 * math.pi) * alpha * alpha
    assert c.u_nonresonant_integral(s, s, 2000.0) * 2000.0**7 == pytest.approx(cp, rel=5e-3)


def test_errors_are_typed():
    with pytest.raises(c.DomainError):
        c.AtomSpecies(-1.0, 1.0)
    s = c.AtomSpecies(1.0, 1.0)
    with pytest.raises(c.DegeneracyError):
        c.u_resonant(s, s, 1.0, c.PairState.a_excited)
    assert issubclass(c.PoleError, c.Error)


def test_thermal_and_absorption():
    a = c.AtomSpecies(1.1, 0.3)
    b = c.AtomSpecies(1.0, 0.2, 0.05)
    ctx = c.ThermalContext(0.3)
    bare = c.u_thermal_resonant(a, b, 4.0, ctx, c.AbsorptionModel.transparent(), c.PairState.a_excited)
    damped = c.u_thermal_resonant(a, b, 4.0, ctx, c.AbsorptionModel.from_rate(0.5), c.PairState.a_excited)
    assert damped / bare == pytest.approx(math.exp(-1.0), rel=1e-14)
    assert c.matsubara_nonresonant_sum(a, b, 1.0, ctx).last_mode >= 1


def test_geometry():
    assert c.geometry_factor(1.0, 1.0) == pytest.approx(3 * math.log(1.5) - math.log(2), rel=1e-14)
    s = c.AtomSpecies(1.0, 1.0, 0.1)
    g = c.SlabPairGeometry(1.0, c.Medium(s, 1.0), c.Medium(s, 1.0), 1.0, 1.0)
    f = c.slab_force(g, c.ThermalContext(0.4), c.PairState.ground)
    assert f.lifshitz == pytest.approx(2.5293338389133479, rel=1e-13)
    assert f.resonant_correction == 0.0


def test_sweep_from_config_text():
    text = "geometry = pair\ntemperature = 0\na.d2 = 0\nsweep.min = 1\nsweep.max = 2\nsweep.points = 3\n"
    r = c.run_sweep(text)
    assert r["columns"] == ["R", "U_nonresonant", "U_resonant", "U_total", "status"]
    assert [row[1:4] for row in r["rows"]] == [[0.0, 0.0, 0.0]] * 3
    assert c.sweep_csv(text) == c.sweep_csv(text)
    assert c.eval_point(text, 1.0).startswith("pair R=1 ")
    with pytest.raises(c.ConfigError):
        c.run_sweep("bogus = 1\n")
