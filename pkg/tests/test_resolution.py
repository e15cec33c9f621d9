import random
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from coverideals.errors import CapacityError, NotEquigeneratedError
from coverideals.graphs import complete_graph, counterexample_graph, cover_ideal
from coverideals.monomials import Monomial, MonomialIdeal
from coverideals.resolution import (
    RATIONALS,
    FieldChoice,
    betti_table,
    downward_closure,
    first_syzygy_degrees,
    has_linear_resolution,
    is_componentwise_linear,
    koszul_betti,
    lcm_lattice,
    parse_field,
    simplicial_homology_ranks,
    taylor_strand_betti,
)

F2 = FieldChoice(2)


def M(*exps):
    return Monomial(exps)


def ideal(n, *exps):
    return MonomialIdeal(n, [Monomial(e) for e in exps])


def random_small_ideal(rng):
    n = rng.randint(1, 4)
    gens = [
        Monomial(tuple(rng.randint(0, 3) for _ in range(n)))
        for _ in range(rng.randint(1, 6))
    ]
    return MonomialIdeal(n, gens)


# ---------------------------------------------------------------------------
# fields

def test_field_choice_validation():
    assert FieldChoice(2).label == "F2"
    assert RATIONALS.label == "Q"
    with pytest.raises(ValueError):
        FieldChoice(4)
    with pytest.raises(ValueError):
        FieldChoice(1)


def test_parse_field():
    assert parse_field("Q") == RATIONALS
    assert parse_field("2") == F2
    assert parse_field("F7") == FieldChoice(7)


# ---------------------------------------------------------------------------
# homology

def test_homology_empty_complex():
    assert simplicial_homology_ranks([[]]) == [1]


def test_homology_void_complex():
    assert simplicial_homology_ranks([]) == []


def test_homology_circle():
    ranks = simplicial_homology_ranks([[1], [2], [3], [1, 2], [1, 3], [2, 3]])
    assert ranks == [0, 0, 1]


def test_homology_full_simplex_contractible():
    faces = [list(f) for r in range(1, 4) for f in combinations([1, 2, 3], r)]
    assert simplicial_homology_ranks(faces) == [0, 0, 0, 0]


def test_homology_two_points():
    assert simplicial_homology_ranks([[1], [2]]) == [0, 1]


def test_homology_rejects_open_families():
    with pytest.raises(ValueError):
        simplicial_homology_ranks([[1, 2]])  # vertices missing


def test_downward_closure():
    closed = downward_closure([[1, 2]])
    assert closed == {frozenset(), frozenset({1}), frozenset({2}), frozenset({1, 2})}
    assert downward_closure([]) == set()


def test_homology_sphere_mod2_and_rationals_agree():
    # boundary of the 3-simplex: a 2-sphere
    faces = [list(f) for r in range(1, 4) for f in combinations([1, 2, 3, 4], r)]
    assert simplicial_homology_ranks(faces) == [0, 0, 0, 1]
    assert simplicial_homology_ranks(faces, F2) == [0, 0, 0, 1]


# ---------------------------------------------------------------------------
# Betti engines: frozen values

def test_taylor_two_variables():
    table = taylor_strand_betti(ideal(2, (1, 0), (0, 1)))
    assert table.multigraded == {(0, (1, 0)): 1, (0, (0, 1)): 1, (1, (1, 1)): 1}


def test_taylor_two_generator_counterexample_component():
    table = taylor_strand_betti(ideal(4, (0, 2, 2, 0), (1, 1, 1, 1)))
    assert table.multigraded == {
        (0, (0, 2, 2, 0)): 1,
        (0, (1, 1, 1, 1)): 1,
        (1, (1, 2, 2, 1)): 1,
    }
    assert table.coarse == {(0, 4): 2, (1, 6): 1}


def test_taylor_counterexample_t1_table():
    # frozen via an independent subset-complex computation
    table = taylor_strand_betti(ideal(4, (0, 1, 1, 0), (1, 1, 0, 1), (1, 0, 1, 1)))
    assert table.multigraded == {
        (0, (0, 1, 1, 0)): 1,
        (0, (1, 1, 0, 1)): 1,
        (0, (1, 0, 1, 1)): 1,
        (1, (1, 1, 1, 1)): 2,
    }


def test_taylor_counterexample_t2_table():
    table = taylor_strand_betti(
        ideal(4, (0, 2, 2, 0), (1, 1, 1, 1), (2, 2, 0, 2), (2, 0, 2, 2))
    )
    assert table.coarse == {(0, 4): 2, (0, 6): 2, (1, 6): 1, (1, 7): 2}


def test_taylor_k32_component4_table():
    table = taylor_strand_betti(
        ideal(3, (2, 1, 1), (1, 2, 1), (1, 1, 2), (0, 2, 2), (2, 0, 2), (2, 2, 0))
    )
    assert table.coarse == {(0, 4): 6, (1, 5): 6, (2, 6): 1}


def test_taylor_i42_component5_coarse():
    comp = cover_ideal(counterexample_graph(), 2).component(5)
    table = taylor_strand_betti(comp)
    assert table.coarse == {(0, 5): 8, (1, 6): 13, (2, 7): 8, (3, 8): 2}


def test_taylor_cap():
    # degree-9 component of the order-3 cover ideal: 34 generators in 4 vars
    I = cover_ideal(complete_graph(4), 3).component(9)
    assert len(I) > 14
    with pytest.raises(CapacityError):
        taylor_strand_betti(I)
    table = koszul_betti(I)  # the scalable engine still runs
    assert table.generator_histogram() == {9: len(I)}


def test_beta_zero_counts_generators_by_degree():
    for I in (
        cover_ideal(counterexample_graph(), 2),
        cover_ideal(complete_graph(4), 3),
    ):
        hist = {}
        for g in I.generators:
            hist[g.degree] = hist.get(g.degree, 0) + 1
        for table in (taylor_strand_betti(I), koszul_betti(I)):
            assert table.generator_histogram() == hist


def test_zero_and_unit_ideal_tables():
    assert taylor_strand_betti(MonomialIdeal.zero(2)).multigraded == {}
    assert koszul_betti(MonomialIdeal.zero(2)).multigraded == {}
    unit = MonomialIdeal.unit(3)
    assert taylor_strand_betti(unit).multigraded == {(0, (0, 0, 0)): 1}
    assert koszul_betti(unit).multigraded == {(0, (0, 0, 0)): 1}


def test_lcm_lattice_small():
    I = ideal(2, (1, 0), (0, 1))
    assert lcm_lattice(I) == [(0, 1), (1, 0), (1, 1)]


# ---------------------------------------------------------------------------
# engine agreement

def test_engines_agree_on_named_ideals():
    instances = [
        cover_ideal(counterexample_graph(), 1),
        cover_ideal(counterexample_graph(), 2),
        cover_ideal(counterexample_graph(), 3),
        cover_ideal(complete_graph(3), 2),
        cover_ideal(complete_graph(4), 3),
        cover_ideal(counterexample_graph(), 2).component(4),
        cover_ideal(complete_graph(3), 2).component(4),
    ]
    for I in instances:
        assert taylor_strand_betti(I) == koszul_betti(I)


def test_engines_agree_on_seeded_random_ideals():
    rng = random.Random(6021023)
    for _ in range(50):
        I = random_small_ideal(rng)
        t = taylor_strand_betti(I)
        k = koszul_betti(I)
        assert t == k, I


def test_engines_agree_over_f2():
    rng = random.Random(401)
    for _ in range(15):
        I = random_small_ideal(rng)
        assert taylor_strand_betti(I, F2) == koszul_betti(I, F2), I


def test_betti_table_auto_engine_switches():
    I = cover_ideal(complete_graph(4), 2).component(6)  # 14 generators
    assert len(I) == 14
    assert betti_table(I, engine="auto", taylor_cap=5) == taylor_strand_betti(I)


def test_permutation_equivariance():
    rng = random.Random(77)
    for _ in range(10):
        I = random_small_ideal(rng)
        n = I.nvars
        perm = list(range(n))
        rng.shuffle(perm)
        J = MonomialIdeal(
            n,
            [
                Monomial(tuple(g.exponents[perm[i]] for i in range(n)))
                for g in I.generators
            ],
        )
        tI, tJ = taylor_strand_betti(I), taylor_strand_betti(J)
        mapped = {
            (i, tuple(a[perm[k]] for k in range(n))): r
            for (i, a), r in tI.multigraded.items()
        }
        assert mapped == tJ.multigraded
        assert tI.coarse == tJ.coarse


def test_rationals_vs_f2_on_reference_corpus():
    corpus = []
    for t in (1, 2, 3):
        corpus.append(cover_ideal(counterexample_graph(), t))
        corpus.append(cover_ideal(complete_graph(3), t))
        corpus.append(cover_ideal(complete_graph(4), t))
    for I in corpus:
        for d in range(I.min_degree(), I.max_degree() + 1):
            comp = I.component(d)
            assert betti_table(comp, RATIONALS) == betti_table(comp, F2), (I, d)


PROJECTIVE_PLANE_TRIANGLES = [
    (1, 2, 5), (1, 2, 6), (1, 3, 4), (1, 3, 5), (1, 4, 6),
    (2, 3, 4), (2, 3, 6), (2, 4, 5), (3, 5, 6), (4, 5, 6),
]


def test_projective_plane_homology_depends_on_field():
    faces = set()
    for t in PROJECTIVE_PLANE_TRIANGLES:
        for r in (1, 2, 3):
            faces.update(combinations(t, r))
    assert simplicial_homology_ranks(faces, RATIONALS) == [0, 0, 0, 0]
    assert simplicial_homology_ranks(faces, F2) == [0, 0, 1, 1]


def test_projective_plane_ideal_betti_depends_on_field():
    # the non-face ideal of the 6-vertex projective plane: linear over Q,
    # extra syzygies in characteristic 2; engines must agree within each field
    face_set = set()
    for t in PROJECTIVE_PLANE_TRIANGLES:
        for r in (1, 2, 3):
            face_set.update(frozenset(f) for f in combinations(t, r))
    gens = []
    for t in combinations(range(1, 7), 3):
        if frozenset(t) not in face_set:
            e = [0] * 6
            for v in t:
                e[v - 1] = 1
            gens.append(Monomial(e))
    I = MonomialIdeal(6, gens)
    assert len(I) == 10
    tQ = taylor_strand_betti(I, RATIONALS)
    t2 = taylor_strand_betti(I, F2)
    assert tQ == koszul_betti(I, RATIONALS)
    assert t2 == koszul_betti(I, F2)
    assert tQ.coarse == {(0, 3): 10, (1, 4): 15, (2, 5): 6}
    assert t2.coarse == {(0, 3): 10, (1, 4): 15, (2, 5): 6, (2, 6): 1, (3, 6): 1}
    assert has_linear_resolution(I, RATIONALS)[0]
    ok, offending = has_linear_resolution(I, F2)
    assert not ok and offending == (2, 6)


# ---------------------------------------------------------------------------
# linear resolutions

def test_koszul_complex_is_linear():
    ok, offending = has_linear_resolution(ideal(2, (1, 0), (0, 1)))
    assert ok and offending is None


def test_counterexample_component_2t_fails_linearity():
    comp = cover_ideal(counterexample_graph(), 2).component(4)
    ok, offending = has_linear_resolution(comp)
    assert not ok
    assert offending == (1, 6)


def test_counterexample_t1_component3_is_linear():
    comp = cover_ideal(counterexample_graph(), 1).component(3)
    ok, _ = has_linear_resolution(comp)
    assert ok


def test_linear_resolution_rejects_mixed_degrees():
    with pytest.raises(NotEquigeneratedError):
        has_linear_resolution(ideal(2, (1, 0), (0, 2)))


def test_zero_ideal_vacuously_linear():
    ok, offending = has_linear_resolution(MonomialIdeal.zero(2))
    assert ok and offending is None


def test_equigenerated_degree_bound():
    # every nonzero coarse entry of an equigenerated ideal has j >= i + d
    rng = random.Random(5150)
    for _ in range(20):
        n = rng.randint(2, 4)
        d = rng.randint(1, 4)
        pool = list(_degree_d_monomials(n, d))
        rng.shuffle(pool)
        I = MonomialIdeal(n, pool[: rng.randint(1, min(6, len(pool)))])
        table = taylor_strand_betti(I)
        for i, j, r in table.coarse_entries():
            assert j >= i + d


def _degree_d_monomials(n, d):
    if n == 1:
        yield Monomial((d,))
        return
    for first in range(d + 1):
        for rest in _degree_d_monomials(n - 1, d - first):
            yield Monomial((first,) + rest.exponents)


# ---------------------------------------------------------------------------
# componentwise linearity

def test_counterexample_t1_is_cwl():
    report = is_componentwise_linear(cover_ideal(counterexample_graph(), 1))
    assert report.overall
    assert [v.status for v in report.verdicts] == ["linear", "linear"]
    assert report.certificate is not None


def test_counterexample_t2_fails_at_degree4():
    report = is_componentwise_linear(cover_ideal(counterexample_graph(), 2))
    assert not report.overall
    assert report.failing_degree() == 4
    d4 = next(v for v in report.verdicts if v.degree == 4)
    assert d4.status == "not linear" and d4.offending == (1, 6)


def test_complete_graph_cwl_small_grid():
    for n in (3, 4):
        for t in (1, 2, 3):
            report = is_componentwise_linear(cover_ideal(complete_graph(n), t))
            assert report.overall, (n, t)


def test_zero_ideal_cwl_vacuous():
    report = is_componentwise_linear(MonomialIdeal.zero(3))
    assert report.overall and report.vacuous


def test_extra_degrees_stay_linear():
    report = is_componentwise_linear(
        cover_ideal(complete_graph(3), 2), extra_degrees=2
    )
    assert report.overall
    assert [v.degree for v in report.verdicts] == [3, 4, 5, 6]


def test_cwl_report_json_schema():
    report = is_componentwise_linear(cover_ideal(counterexample_graph(), 2))
    out = report.to_json_dict()
    assert out["overall"] is False
    assert {"degree", "verdict"} <= set(out["per_degree"][0])
    offending = [e for e in out["per_degree"] if e["verdict"] == "not linear"]
    assert offending and offending[0]["offending"] == [1, 6]


# ---------------------------------------------------------------------------
# first syzygies

def test_first_syzygy_degrees_examples():
    assert first_syzygy_degrees(ideal(2, (1, 0), (0, 1))) == [2]
    assert first_syzygy_degrees(ideal(4, (0, 2, 2, 0), (1, 1, 1, 1))) == [6]
    assert first_syzygy_degrees(ideal(2, (2, 0))) == []


def test_first_syzygy_lower_bound_with_equality_at_2t():
    for t in (2, 3):
        comp = cover_ideal(counterexample_graph(), t).component(2 * t)
        degs = first_syzygy_degrees(comp)
        assert min(degs) >= 2 * t + 2
        table = taylor_strand_betti(comp)
        beta1 = [j for (i, j) in table.coarse if i == 1]
        assert beta1 and min(beta1) == min(degs)
    # t = 4, from the frozen brute-force generator list
    comp = MonomialIdeal(
        4, [M(0, 4, 4, 0), M(1, 3, 3, 1), M(2, 2, 2, 2)]
    )
    assert min(first_syzygy_degrees(comp)) >= 10


def test_taylor_lower_bound_random():
    rng = random.Random(999)
    for _ in range(25):
        I = random_small_ideal(rng)
        if len(I.generators) < 2:
            continue
        table = taylor_strand_betti(I)
        beta1 = [j for (i, j) in table.coarse if i == 1]
        if beta1:
            assert min(beta1) >= min(first_syzygy_degrees(I))
