"""Closure order reconstruction and Hasse diagram output."""

import pytest

from orbit_atlas.order import (closure_generators, closure_leq, emit_dot,
                               hasse, poset_json)


@pytest.fixture(scope="module")
def posets(catalogs):
    return {n: hasse(n, catalogs[n]) for n in (1, 2, 3)}


def test_rank1_two_chain(posets):
    p = posets[1]
    assert p.nodes == ["0", "x11"]
    assert p.covers == [("0", "x11")]


def test_rank2_cover_set_exact(posets):
    p = posets[2]
    assert set(p.covers) == {("0", "x12"), ("x12", "x11"), ("x12", "x22"),
                             ("x11", "x11+x22"), ("x22", "x11+x22")}
    assert p.minimum() == "0"
    assert p.maximum() == "x11+x22"


def test_rank2_containment_chain(posets):
    p = posets[2]
    assert p.less("0", "x12") and p.less("x12", "x11")
    assert p.less("x12", "x22") and p.less("x11", "x11+x22")


def test_rank2_simple_roots_incomparable(posets):
    p = posets[2]
    assert not p.less("x11", "x22")
    assert not p.less("x22", "x11")
    # certified by explicit points
    assert ("x11", "x22") in p.counterexamples
    assert ("x22", "x11") in p.counterexamples


def test_rank3_prose_edge(posets):
    assert posets[3].less("x12+x23", "x11+x33")


def test_closure_leq_rank3_example(catalogs):
    cat = catalogs[3]
    gens = closure_generators(cat)
    assert closure_leq(cat.by_id("x12+x23"), cat.by_id("x11+x33"),
                       gens["x11+x33"])
    assert not closure_leq(cat.by_id("x11"), cat.by_id("x33"), gens["x33"])


def test_dimension_monotone_and_minmax(posets):
    for n, p in posets.items():
        for a in p.nodes:
            for b in p.nodes:
                if p.less(a, b):
                    assert p.dims[a] < p.dims[b]
        assert p.minimum() == "0"
        assert p.dims[p.maximum()] == max(p.dims.values())


def test_transitive_reduction_minimal(posets):
    p = posets[2]
    # removing any cover edge changes the generated order
    for drop in p.covers:
        kept = [e for e in p.covers if e != drop]
        reach = {(a, a) for a in p.nodes}
        frontier = set(kept)
        while frontier:
            reach |= frontier
            frontier = {(a, c) for (a, b) in reach for (b2, c) in kept
                        if b == b2 and (a, c) not in reach}
        assert (drop[0], drop[1]) not in reach


def test_equal_dimension_orbits_incomparable_rank4(catalogs):
    cat = catalogs[4]
    gens = closure_generators(cat)
    # the dependent quadratic separates these equal-dimension sets
    assert not closure_leq(cat.by_id("x23+x14"), cat.by_id("x22"),
                           gens["x22"])
    assert not closure_leq(cat.by_id("x13+x24"), cat.by_id("x22"),
                           gens["x22"])


def test_closure_generator_augmentation(catalogs):
    gens = closure_generators(catalogs[4])
    strs = [s for _, s in gens["x22"]]
    assert "X13*X24 - X23*X14" in strs


def test_dot_output_deterministic_and_wellformed(posets):
    a = emit_dot(posets[2])
    b = emit_dot(hasse(2, certify=False))
    assert a == b
    assert a.startswith("digraph closure_order {")
    assert a.endswith("}\n")
    assert a.count("->") == len(posets[2].covers)
    assert "\r" not in a
    for node in posets[2].nodes:
        assert f'"{node}"' in a


def test_poset_json_shape(posets):
    doc = poset_json(posets[2])
    assert [n["id"] for n in doc["nodes"]] == posets[2].nodes
    assert doc["covers"] == [list(e) for e in posets[2].covers]


def test_derived_poset_shapes_are_stable(posets):
    # regression pins on this artifact's own derivation (certified over the
    # configured finite fields); not claimed to match any external diagram
    assert len(posets[3].covers) == 28
    relations3 = sum(1 for a in posets[3].nodes for b in posets[3].nodes
                     if posets[3].less(a, b))
    assert relations3 == 16 * 15 - 153      # 153 certified non-relations
