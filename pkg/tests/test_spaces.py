from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coxref.core import CoxeterGroup, named_matrix
from coxref.errors import NotEnclosing, UnknownReflection
from coxref.qsqrt3 import QSqrt3
from coxref.spaces import (
    CayleyModel,
    LineModel,
    Membership,
    Side,
    TriangleModel,
    chamber_membership,
    chamber_stabilizer_check,
    descend,
    gallery_distance,
    lemma4_report,
    make_model,
    minimal_wall_set,
    properness_check,
    side,
    verify_lemma4,
    verify_lemma5,
    verify_lemma6,
)

LINE = LineModel()
T244, T333, T236 = TriangleModel("244"), TriangleModel("333"), TriangleModel("236")
A2 = CayleyModel(named_matrix("A2"), name="cayley:A2")
A3 = CayleyModel(named_matrix("A3"), name="cayley:A3")
AFF = CayleyModel(named_matrix("tri236"), name="cayley:tri236")
ALL = [LINE, T244, T333, T236, A2, A3, AFF]
IDS = [m.name for m in ALL]


def line_reflection_at(k, radius=9):
    (r,) = [r for r in LINE.reflections(radius) if LINE.wall_position(r) == k]
    return r


# -- side tests ---------------------------------------------------------------

def test_line_side_examples():
    assert side(LINE, F(1, 2), 0) is Side.PLUS
    assert side(LINE, F(-1, 4), 0) is Side.MINUS
    assert side(LINE, F(0), 0) is Side.WALL


def test_unknown_reflection():
    with pytest.raises(UnknownReflection):
        side(LINE, F(1, 2), 7)
    with pytest.raises(UnknownReflection):
        side(LINE, F(1, 2), "r0")


def test_line_walls_are_the_integers():
    for r in LINE.reflections(9):
        k = LINE.wall_position(r)
        assert k.denominator == 1
        assert LINE.apply(r, k) == k
        assert side(LINE, k, r) is Side.WALL
    assert sorted(LINE.wall_position(r) for r in LINE.reflections(9)) == list(range(-4, 6))


@pytest.mark.parametrize("model", [T244, T333, T236], ids=["244", "333", "236"])
def test_metric_side_matches_halfplane_side(model):
    pts = model.sample_points(25, seed=3, off_wall=False)
    for r in model.reflections(5):
        for p in pts:
            expected = {1: Side.PLUS, 0: Side.WALL, -1: Side.MINUS}[model.halfspace_sign(p, r)]
            assert side(model, p, r) is expected


def test_cayley_walls_are_swapped_edge_midpoints():
    g = A2.group
    for r in A2.reflections(3):
        for w in g.ball(3):
            for s in range(2):
                mid = A2.midpoint(w.word, s)
                swapped = g.normal_form(r.word + w.word) == g.normal_form(w.word + (s,))
                assert (side(A2, mid, r) is Side.WALL) == swapped


# -- chamber membership ----------------------------------------------------------

def test_membership_examples():
    assert chamber_membership(LINE, F(1, 2)) is Membership.INTERIOR
    assert chamber_membership(LINE, F(1)) is Membership.BOUNDARY
    for s in range(3):
        assert chamber_membership(T244, T244.act(s, T244.x0)) is Membership.OUTSIDE


def test_triangle_generator_orders():
    for model, kind in ((T244, (2, 4, 4)), (T333, (3, 3, 3)), (T236, (2, 3, 6))):
        x = model.x0
        for s in range(3):
            assert model.act(s, model.act(s, x)) == x
        for (s, t), m in zip(((0, 1), (0, 2), (1, 2)), kind):
            g = (s, t)
            images = [model.apply(g * k, x) for k in range(1, m + 1)]
            assert images[-1] == x and x not in images[:-1]


# -- descent -------------------------------------------------------------------------

def test_line_descent_example():
    d = descend(LINE, F(23, 10))
    assert d.steps == (1, 0)
    assert d.point == F(3, 10)
    assert LINE.format_word(d.gamma) == "r1 r0"
    assert gallery_distance(LINE, F(23, 10)) == 2


def test_descent_of_base_point():
    for model in ALL:
        d = descend(model, model.x0)
        assert d.gamma.is_identity() and d.point == model.x0
        assert gallery_distance(model, model.x0) == 0


def test_cayley_descent_example():
    d = descend(A2, A2.vertex((0, 1, 0)))
    assert len(d.gamma) == 3 and d.point == A2.x0


def test_cayley_gallery_distance_is_length():
    for model in (A3, AFF):
        for g in model.group.ball(6 if model is A3 else 5):
            assert gallery_distance(model, model.vertex(g.word)) == len(g)


def line_gallery_oracle(p):
    k = p.numerator // p.denominator  # floor
    return k if k >= 0 else -k


@given(st.fractions(min_value=-30, max_value=30).filter(lambda x: x.denominator > 1))
@settings(max_examples=80, deadline=None)
def test_line_descent_against_interval_count(p):
    d = descend(LINE, p)
    assert 0 < d.point < 1
    assert LINE.apply(d.gamma, d.point) == p
    assert d.step_count == gallery_distance(LINE, p) == line_gallery_oracle(p)


def test_descent_on_a_wall_stops_at_boundary():
    d = descend(LINE, F(3))
    assert d.membership is Membership.BOUNDARY
    assert LINE.apply(d.gamma, d.point) == 3


@pytest.mark.parametrize("model", ALL, ids=IDS)
def test_descent_distances_strictly_decrease(model):
    for p in model.sample_points(15, seed=11):
        d = descend(model, p)
        assert all(a > b for a, b in zip(d.distances, d.distances[1:]))
        assert model.apply(d.gamma, d.point) == p


@pytest.mark.parametrize("model", [T244, T236], ids=["244", "236"])
def test_triangle_descent_matches_containing_tile(model):
    # independent route: find the tile of a ball that contains p by exact
    # barycentric sign tests, and compare its length with the step count
    from coxref.spaces import planar

    tiles = [(g, model.chamber(g)) for g in model.group.ball(12)]
    for p in model.sample_points(20, seed=5):
        hits = [g for g, (a, b, c) in tiles
                if len({planar.sign(planar.cross(planar.sub(v, u), planar.sub(p, u)))
                        for u, v in ((a, b), (b, c), (c, a))}) == 1]
        assert len(hits) == 1
        assert descend(model, p).step_count == len(hits[0])


# -- minimal wall sets -------------------------------------------------------------

def test_line_minimal_wall_set():
    walls = [line_reflection_at(k) for k in (0, 1, 2)]
    got = minimal_wall_set(LINE, walls)
    assert sorted(LINE.wall_position(r) for r in got) == [0, 1]


@pytest.mark.parametrize("model", ALL, ids=IDS)
def test_generators_are_minimal(model):
    gens = [model.group.generator_reflection(s) for s in range(model.rank)]
    assert minimal_wall_set(model, gens) == gens


@pytest.mark.parametrize("model", [T244, T333, T236, A3], ids=["244", "333", "236", "A3"])
def test_redundant_walls_are_dropped(model):
    assert minimal_wall_set(model, model.reflections(5)) == \
        [model.group.generator_reflection(s) for s in range(model.rank)]


def test_non_enclosing_candidates():
    with pytest.raises(NotEnclosing):
        minimal_wall_set(LINE, [line_reflection_at(0), line_reflection_at(2)])
    with pytest.raises(NotEnclosing):
        minimal_wall_set(T236, [0, 1])


# -- wall-neighbourhood witnesses ------------------------------------------------------

def test_line_witness_for_r0():
    w = verify_lemma4(LINE, 0)
    assert w.x0_witness == F(1, 8)
    assert LINE.act(0, w.x0_witness) == F(-1, 8)


def test_triangle_witness_near_hypotenuse_midpoint():
    w = verify_lemma4(T244, 2)  # the side y = x
    assert w.y0 == (F(1, 2), F(1, 2))
    x = w.x0_witness
    assert chamber_membership(T244, x) is Membership.INTERIOR
    assert T244.dist2(x, w.y0) < w.epsilon ** 2


@pytest.mark.parametrize("model", [A2, A3, AFF], ids=["A2", "A3", "aff"])
def test_cayley_witness_is_quarter_point(model):
    for s in range(model.rank):
        x0 = model.x0
        sx = [model.dist2(x0, model.act(t, x0)) for t in range(model.rank)]
        assert len(set(sx)) == 1  # the identity vertex cannot be a witness
        w = verify_lemma4(model, s)
        assert w.x0_witness == model.point((), s, F(1, 4))


@pytest.mark.parametrize("model", ALL, ids=IDS)
def test_witness_inequalities(model):
    report = lemma4_report(model, radius=5)
    assert report.ok, report.violations
    assert len(report.witnesses) == model.rank


# -- chamber images and the stabilizer ----------------------------------------------------

def test_adjacent_chamber_check_line_vacuous_case():
    r2 = line_reflection_at(2)
    assert side(LINE, LINE.act(0, LINE.x0), r2) is Side.PLUS
    report = verify_lemma5(LINE, 5)
    assert report.ok
    assert ["r0", LINE.format_word(r2), False] in report.details["pairs"]


def test_adjacent_chamber_check_cayley_a2():
    report = verify_lemma5(A2, 3)
    assert report.ok and report.checks == 2 * 3
    assert [p for p in report.details["pairs"] if p[2]] == [["s0", "s0", True], ["s1", "s1", True]]


def test_length_side_examples():
    assert side(LINE, LINE.apply((1,), LINE.x0), 1) is Side.MINUS
    report = verify_lemma6(A2, 3)
    assert report.ok and report.checks == 12


def test_properness_examples():
    assert properness_check(LINE, F(1, 2), F(1, 10), 6) == 1
    assert properness_check(LINE, F(1, 2), F(2), 8) == 3
    g = A3.group
    for k in range(1, 5):
        count = properness_check(A3, A3.x0, F(k), k + 2)
        assert len(g.ball(k - 1)) <= count <= len(g.ball(k))


def test_stabilizer_examples():
    report = chamber_stabilizer_check(A2, 3)
    assert report.ok and report.checks == 5
    assert chamber_stabilizer_check(LINE, 6).ok


# -- metric and action laws --------------------------------------------------------------

def _triangle_ok(d2_pr, d2_pq, d2_qr):
    # sqrt(a) <= sqrt(b) + sqrt(c) without square roots
    excess = d2_pr - d2_pq - d2_qr
    return excess <= 0 or excess * excess <= 4 * d2_pq * d2_qr


@pytest.mark.parametrize("model", ALL, ids=IDS)
def test_metric_axioms_on_samples(model):
    pts = model.sample_points(10, seed=7, off_wall=False)
    for p in pts:
        assert model.dist2(p, p) == 0
        for q in pts:
            assert model.dist2(p, q) == model.dist2(q, p)
            assert (model.dist2(p, q) == 0) == (p == q)
            for r in pts[:5]:
                assert _triangle_ok(model.dist2(p, r), model.dist2(p, q), model.dist2(q, r))


@pytest.mark.parametrize("model", ALL, ids=IDS)
def test_action_is_isometric_and_associative(model):
    pts = model.sample_points(6, seed=2, off_wall=False)
    elems = model.group.ball(3)
    for g in elems:
        for p in pts:
            assert model.apply((), p) == p
            for q in pts[:3]:
                assert model.dist2(model.apply(g, p), model.apply(g, q)) == model.dist2(p, q)
            for h in elems[:6]:
                gh = g.word + h.word
                assert model.apply(gh, p) == model.apply(g, model.apply(h, p))


def test_exact_sqrt3_coordinates_stay_exact():
    p = T236.apply((0, 1, 2, 1, 0, 2, 1), T236.x0)
    assert all(isinstance(c, QSqrt3) for c in p)
    assert T236.apply((1, 2, 0, 1, 2, 1, 0), p) == T236.x0


def test_make_model_specs():
    assert make_model("line").name == "line"
    assert make_model("tri244").kind == "244"
    assert make_model("cayley:B3").rank == 3
    with pytest.raises(ValueError):
        make_model("hyperbolic")


def test_point_text_round_trip():
    for model in ALL:
        for p in model.sample_points(8, seed=1, off_wall=False):
            assert model.parse_point(model.format_point(p)) == p


def test_cayley_group_matches_core_order():
    assert CoxeterGroup(named_matrix("A3")).order(100) == len(A3.group.ball(6))
