import math

import pytest

from helpers import fixture_spec, spec_from_words
from nchilbert.growth import GrowthClass, classify_growth, spectral_radius
from nchilbert.hilbert import series_of_cyclic
from nchilbert.ideal_states import FgRightIdealState
from nchilbert.orbit import Orbit, orbit_data
from nchilbert.ratfun import expand


def test_artin_exponential():
    g = series_of_cyclic(fixture_spec("artin_example")).growth
    assert not g.is_polynomial
    assert abs(g.rate - (1 + math.sqrt(2))) < 1e-9
    assert str(g) == "exponential rate ≈ 2.414214"


def test_hecke_polynomial():
    g = series_of_cyclic(fixture_spec("hecke_a")).growth
    assert g == GrowthClass("polynomial", k=3)
    assert str(g) == "polynomial k=3 (HF(d) ~ d^2)"


def test_hecke_prime_rate_is_root_of_denominator():
    res = series_of_cyclic(fixture_spec("hecke_a_prime"))
    rate = res.growth.rate
    # 1/rate is the smallest positive root of 1 - 2t + t^5
    x = 1 / rate
    assert abs(1 - 2 * x + x**5) < 1e-8


@pytest.mark.parametrize("n", [1, 2, 3])
def test_free_algebra(n):
    g = classify_growth(orbit_data(FgRightIdealState.from_words(n, [])))
    if n == 1:
        assert g == GrowthClass("polynomial", k=1)
    else:
        assert g.kind == "exponential"
        assert abs(g.rate - n) < 1e-9


def test_finite_dimensional():
    g = series_of_cyclic(spec_from_words(2, "right", [(0,), (1,)])).growth
    assert g == GrowthClass("polynomial", k=0)
    assert str(g) == "polynomial k=0 (finite dimension)"
    unit = series_of_cyclic(spec_from_words(2, "right", [()])).growth
    assert unit == GrowthClass("polynomial", k=0)


def test_polynomial_degree_matches_counts():
    # two-sided <yx> over {x, y}: normal words x^a y^b, HF(d) = d + 1
    res = series_of_cyclic(spec_from_words(2, "two-sided", [(1, 0)]))
    assert res.growth == GrowthClass("polynomial", k=2)
    assert expand(res.series, 6) == [1, 2, 3, 4, 5, 6, 7]


def test_chain_of_cycles():
    # 0 -> 1 -> 2 -> unit, self-loops everywhere except the unit (three cycles in a row)
    zero = FgRightIdealState.from_words(2, [])
    o = Orbit((zero,) * 4, 2, ((0, 1), (1, 2), (2, 3), (3, 3)), 3)
    assert classify_growth(o) == GrowthClass("polynomial", k=3)


def test_spectral_radius_examples():
    assert spectral_radius([{0: 2}]) == 2.0
    # golden ratio: [[1, 1], [1, 0]]
    phi = spectral_radius([{0: 1, 1: 1}, {0: 1}])
    assert abs(phi - (1 + math.sqrt(5)) / 2) < 1e-9
    # periodic block: a 2-cycle has radius 1
    assert abs(spectral_radius([{1: 1}, {0: 1}]) - 1.0) < 1e-9
    assert spectral_radius([{}]) == 0.0


def test_json():
    assert GrowthClass("polynomial", k=2).to_json() == {"kind": "polynomial", "k": 2}
    g = GrowthClass("exponential", rate=2.0, tolerance=1e-9)
    assert g.to_json()["rate"] == 2.0
