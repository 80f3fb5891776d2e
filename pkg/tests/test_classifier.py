import math

import pytest

from ergm_extremal.classifier import (
    Box,
    Complete,
    Direction,
    Empty,
    Interior,
    ParamPoint,
    Turan,
    UnclassifiedRegionError,
    classify,
    classify_clique_positive,
    densities_match,
    limit_oracle,
    phase_sweep,
)
from ergm_extremal.criticals import (
    SLOPE_DECREASING_MAX,
    SLOPE_INCREASING_MIN,
    gamma_n,
    goodman_min_slope,
    slope,
)
from ergm_extremal.curves import razborov


def neg(gamma, a, b=0.0):
    return ParamPoint(gamma=gamma, a=a, b=b)


def members(limit):
    return set(limit.members)


def test_empty_for_nonnegative_slope():
    assert members(classify(neg(1.0, 0.0))) == {Empty()}
    assert members(classify(neg(2.0, 0.5))) == {Empty()}


def test_small_gamma_regime():
    assert members(classify(neg(0.5, -1.0))) == {Turan(2)}
    assert members(classify(neg(0.5, -2.0))) == {Turan(2), Complete()}
    assert members(classify(neg(0.5, -2.0, b=-1.0))) == {Turan(2)}
    assert members(classify(neg(0.5, -2.0, b=1.0))) == {Complete()}
    assert members(classify(neg(0.5, -3.0))) == {Complete()}


def test_turan_ladder_regime():
    s3 = slope(3, 0.9)
    assert members(classify(neg(0.9, -s3, b=1.0))) == {Turan(4)}
    assert members(classify(neg(0.9, -s3, b=0.0))) == {Turan(3), Turan(4)}
    assert members(classify(neg(0.9, -s3, b=-1.0))) == {Turan(3)}
    # strictly between consecutive slopes
    s4 = slope(4, 0.9)
    assert members(classify(neg(0.9, -0.5 * (s3 + s4)))) == {Turan(4)}
    # below the first nonzero slope
    assert members(classify(neg(0.9, -0.5 * slope(2, 0.9)))) == {Turan(2)}
    # past the limit slope the complete graphon wins
    assert members(classify(neg(0.9, -3.0 * 0.9))) == {Complete()}


def test_convex_regime_endpoints():
    # below the first nonzero slope the minimum hugs the 2-class point from
    # inside the second segment: the right derivative there equals a < 0, so
    # the objective always dips past the kink (the oracle agrees)
    (m,) = classify(neg(2.0, -0.2)).members
    assert isinstance(m, Interior) and m.segment == 2
    assert 0.5 < m.e_star < 21.0 / 32.0
    oracle = limit_oracle(neg(2.0, -0.2))
    assert oracle.e_star == pytest.approx(m.e_star, abs=1e-4)
    assert members(classify(neg(2.0, -6.0))) == {Complete()}


def test_convex_regime_interior_cases():
    s2 = slope(2, 2.0)
    limit = classify(neg(2.0, -s2))
    (m,) = limit.members
    assert isinstance(m, Interior)
    assert m.segment == 2
    assert m.e_star == pytest.approx(0.5751473813728284, abs=1e-9)
    assert m.t_star == pytest.approx(razborov(2, m.e_star), abs=1e-15)

    limit = classify(neg(2.0, -1.1))
    (m,) = limit.members
    assert m.segment == 3
    assert m.e_star == pytest.approx(0.7034173058365595, abs=1e-9)


def test_convex_slope_tie_above_and_below_threshold():
    # at the third slope tie the interior only opens past the gamma threshold
    g3 = gamma_n(3)
    below, above = g3 - 0.2, g3 + 0.2
    assert members(classify(neg(below, -slope(3, below), b=-1.0))) == {Turan(3)}
    assert members(classify(neg(below, -slope(3, below), b=0.0))) == {Turan(3), Turan(4)}
    assert members(classify(neg(below, -slope(3, below), b=1.0))) == {Turan(4)}
    (m,) = classify(neg(above, -slope(3, above))).members
    assert isinstance(m, Interior) and m.segment == 3


def test_convex_between_band_turan():
    # inside [goodman slope, right-derivative zero] the Turán point holds on
    gamma = 2.0
    t_pow = 2.0 / 9.0
    lo = gamma * 5.0 / 3.0 * t_pow   # powered-Goodman slope at the second point
    hi = gamma * 2.0 * 3.0 / 3.0 * t_pow  # right-derivative zero level
    a = -0.5 * (lo + hi)
    assert members(classify(neg(gamma, a))) == {Turan(3)}


def test_convex_unclassified_band():
    with pytest.raises(UnclassifiedRegionError) as err:
        classify(neg(2.0, -0.6))
    oracle = err.value.oracle
    assert oracle is not None
    assert oracle.e_star == pytest.approx(2.0 / 3.0, abs=1e-4)


def test_unclassified_points_match_oracle_band():
    gamma = 2.0
    n = 2
    t_pow = (2.0 / 9.0) ** (gamma - 1.0)
    left_zero = 3.0 * gamma * (n - 1.0) / (n + 1.0) * t_pow
    goodman_slope = gamma * (3.0 * n - 1.0) / (n + 1.0) * t_pow
    with pytest.raises(UnclassifiedRegionError):
        classify(neg(gamma, -(left_zero + goodman_slope) / 2.0))
    # just outside the band on both sides the classifier answers
    assert classify(neg(gamma, -(left_zero - 1e-6))).members[0].segment == 2
    assert members(classify(neg(gamma, -(goodman_slope + 1e-6)))) == {Turan(3)}


def test_dip_regime_extremes_match_statements():
    for gamma in (0.60, 0.65, 0.69):
        floor = goodman_min_slope(gamma)
        assert members(classify(neg(gamma, -floor * 0.9))) == {Turan(2)}
        s2 = slope(2, gamma)
        assert members(classify(neg(gamma, -s2 - 0.1))) == {Complete()}
        # middle band: the 2-class point competes directly with the complete graphon
        if 3.0 * gamma < s2:
            a_mid = -0.5 * (3.0 * gamma + s2)
            expected = {Turan(2)} if a_mid > -2.0 else {Complete()}
            assert members(classify(neg(gamma, a_mid))) == expected


def test_dip_regime_matches_oracle():
    for gamma in (0.62, 0.68, 0.72, 0.77):
        for a in (-0.5, -1.0, -1.5, -1.9, -2.2):
            p = neg(gamma, a)
            limit = classify(p)
            oracle = limit_oracle(p)
            assert densities_match(limit, oracle), (gamma, a, limit, oracle.locations())


def test_regime_boundary_continuity():
    eps = 1e-9
    for boundary in (SLOPE_DECREASING_MAX, SLOPE_INCREASING_MIN):
        lo = classify(neg(boundary - eps, -1.0))
        hi = classify(neg(boundary + eps, -1.0))
        assert members(lo) == members(hi)


def test_b_only_matters_at_ties():
    for gamma, a in ((0.5, -1.3), (0.9, -1.7), (2.0, -0.2), (2.0, -5.99)):
        sets = {classify(neg(gamma, a, b)).members for b in (-2.0, 0.0, 2.0)}
        assert len(sets) == 1


def test_positive_direction():
    assert members(classify(ParamPoint(gamma=1.0, a=-0.5, b=0.0, direction=Direction.POSITIVE))) == {
        Complete()
    }
    tie = classify(ParamPoint(gamma=1.0, a=-1.0, b=0.0, direction=Direction.POSITIVE))
    assert members(tie) == {Empty(), Complete()}
    assert members(
        classify(ParamPoint(gamma=1.0, a=-1.0, b=0.5, direction=Direction.POSITIVE))
    ) == {Complete()}
    (box,) = classify(ParamPoint(gamma=0.5, a=-1.0, b=0.0, direction=Direction.POSITIVE)).members
    assert isinstance(box, Box)
    assert box.side == pytest.approx(9.0 / 16.0, abs=1e-12)


def test_clique_positive():
    assert members(classify_clique_positive(4, 1.0, -0.5, 0.0)) == {Complete()}
    (box,) = classify_clique_positive(4, 0.4, -1.0, 0.0).members
    assert box.side == pytest.approx(1.25 ** -2.5, abs=1e-12)
    # oracle check for the box edge density
    p = ParamPoint(gamma=0.4, a=-1.0, b=0.0, direction=Direction.POSITIVE, clique_s=4)
    oracle = limit_oracle(p)
    assert oracle.e_star == pytest.approx(box.side ** 2, abs=1e-6)
    assert members(classify_clique_positive(3, 2.0 / 3.0, -2.0, -1.0)) == {Empty()}


def test_horizontal_and_vertical():
    assert members(classify(ParamPoint(direction=Direction.HORIZONTAL_PLUS))) == {Complete()}
    assert members(classify(ParamPoint(direction=Direction.HORIZONTAL_MINUS))) == {Empty()}
    (m,) = classify(ParamPoint(direction=Direction.VERTICAL, beta1=0.0, chromatic_r=3)).members
    assert m == Turan(2, scale=0.5)
    assert m.edge_density == pytest.approx(0.25)
    (m,) = classify(ParamPoint(direction=Direction.VERTICAL, beta1=1.0, chromatic_r=4)).members
    assert m.classes == 3
    assert m.scale == pytest.approx(1.0 / (1.0 + math.exp(-2.0)))
    assert members(classify(ParamPoint(direction=Direction.VERTICAL, beta1=0.3, chromatic_r=2))) == {
        Empty()
    }
    with pytest.raises(ValueError):
        ParamPoint(direction=Direction.VERTICAL, beta1=0.1)


def test_param_validation():
    with pytest.raises(ValueError):
        ParamPoint(direction=Direction.NEGATIVE, gamma=1.0, a=-1.0)  # b missing
    with pytest.raises(ValueError):
        ParamPoint(gamma=-1.0, a=-1.0, b=0.0)
    with pytest.raises(ValueError):
        classify(ParamPoint(gamma=2.0, a=-1.0, b=0.0, clique_s=4))


def test_phase_sweep_small_gamma():
    points = phase_sweep(0.5, [-1.0, -2.0, -3.0], 0.0)
    kinds = [pt.limit.kind() for pt in points]
    assert [pt.a for pt in points] == [-3.0, -2.0, -1.0]
    assert kinds == ["complete", "tie", "turan"]


def test_phase_sweep_ladder_has_no_interior():
    s2, s3 = slope(2, 0.9), slope(3, 0.9)
    grid = [-(s2 + (s3 - s2) * i / 20.0) for i in range(1, 20)]
    points = phase_sweep(0.9, grid, 0.0)
    assert all(pt.limit is not None for pt in points)
    assert all(not isinstance(pt.limit.members[0], Interior) for pt in points)
    classes = {pt.limit.members[0].classes for pt in points}
    assert classes == {3}


def test_phase_sweep_interior_travel_is_monotone():
    gamma = 100.0
    s2, s3 = slope(2, gamma), slope(3, gamma)
    grid = [-math.exp(t) for t in _linspace(math.log(s2 * 1.05), math.log(s3 * 0.95), 24)]
    points = phase_sweep(gamma, grid, 0.0, max_workers=2)
    es = []
    for pt in points:
        if pt.limit is not None:
            es.append(pt.limit.members[0].edge_density)
        else:
            es.append(pt.oracle.e_star)
    # a ascending = -a descending: the optimal density recedes
    assert all(b <= a + 1e-9 for a, b in zip(es, es[1:]))
    interiors = [
        pt.limit.members[0]
        for pt in points
        if pt.limit is not None and isinstance(pt.limit.members[0], Interior)
    ]
    assert interiors, "expected interior entries at large exponent"
    by_segment = {}
    for m in interiors:
        by_segment.setdefault(m.segment, []).append(m.e_star)
    for seg, vals in by_segment.items():
        assert all(b < a for a, b in zip(vals, vals[1:])), seg


def _linspace(lo, hi, num):
    step = (hi - lo) / (num - 1)
    return [lo + i * step for i in range(num)]
