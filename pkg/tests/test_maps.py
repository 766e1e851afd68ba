"""Rotation systems on Cayley graphs: faces, regularity, balance."""

from math import factorial

import pytest

from btcayley.maps import (
    MPRIME_N5_ORDER,
    CayleyMap,
    Dart,
    aut_order,
    build_map,
    face_lines,
    is_regular,
    map_report,
    mprime_n5_map,
    octahedron_map,
    prop72_map,
    t_balance,
)
from btcayley.perms import identity, parse_permutation


def test_dart_head_is_tail_times_generator():
    m = octahedron_map()
    d = Dart(identity(3), m.gens[0])
    assert d.head == m.gens[0]


def test_faces_partition_the_darts():
    m = prop72_map(4)
    seen = set()
    for f in m.faces():
        for d in f.darts:
            assert d not in seen
            seen.add(d)
    assert len(seen) == m.dart_count


def test_octahedron_report_frozen():
    assert map_report(octahedron_map()) == {
        "n": 3,
        "generator_count": 4,
        "dart_count": 24,
        "face_count": 8,
        "face_size_histogram": {"3": 8},
        "euler_characteristic": 2,
        "regular": True,
        "t_balanced": None,
        "skew_order": 4,
        "aut_order": 24,
    }


def test_octahedron_is_the_smallest_general_construction():
    assert octahedron_map().gens == prop72_map(3).gens


@pytest.mark.parametrize("n", (3, 4, 5, 6))
def test_general_construction_shape(n):
    m = prop72_map(n)
    assert m.valency == n + 1
    assert m.dart_count == (n + 1) * factorial(n)
    faces = m.faces()
    assert all(f.size == n for f in faces)
    assert len(faces) == m.dart_count // n


@pytest.mark.parametrize("n", (3, 4, 5))
def test_general_construction_is_regular_but_not_balanced(n):
    m = prop72_map(n)
    w = is_regular(m)
    assert w is not None
    assert w.order == n + 1
    assert t_balance(w, m.gens) is None
    assert aut_order(m, w) == factorial(n + 1)


def test_euler_characteristic_from_counts():
    m = prop72_map(4)
    V, E, F = 24, m.dart_count // 2, len(m.faces())
    assert map_report(m)["euler_characteristic"] == V - E + F == -6


def test_reordering_the_rotation_breaks_regularity():
    gens = octahedron_map().gens
    reordered = CayleyMap(3, (gens[1], gens[0], gens[2], gens[3]))
    assert is_regular(reordered) is None
    assert sorted(set(f.size for f in reordered.faces())) == [3, 9]


def test_second_critical_map_frozen():
    m = mprime_n5_map()
    assert m.valency == 6
    assert m.dart_count == 720
    faces = m.faces()
    assert len(faces) == 120
    assert all(f.size == 6 for f in faces)
    w = is_regular(m)
    assert w is not None
    assert w.order == 6
    assert t_balance(w, m.gens) is None
    assert aut_order(m, w) == 720


def test_mprime_generators_distinct_and_inverse_closed():
    gens = [parse_permutation(s) for s in MPRIME_N5_ORDER]
    assert len(set(gens)) == 6
    assert {p.inverse() for p in gens} == set(gens)


def test_build_map_dispatch():
    assert build_map("octahedron").gens == octahedron_map().gens
    assert build_map("prop72", 4).gens == prop72_map(4).gens
    assert build_map("mprime_n5").gens == mprime_n5_map().gens
    with pytest.raises(ValueError):
        build_map("prop72")
    with pytest.raises(ValueError):
        build_map("nonsense")


def test_face_lines_are_deterministic_and_cover_all_faces():
    m = octahedron_map()
    text = face_lines(m)
    assert text == face_lines(octahedron_map())
    assert len(text.strip().split("\n")) == len(m.faces())


def test_rotation_and_reversal_are_dart_involutions():
    m = prop72_map(4)
    for v in (identity(4), m.gens[0]):
        for q in m.gens:
            d = Dart(v, q)
            assert m.reverse(m.reverse(d)) == d
            seen = d
            for _ in range(m.valency):
                seen = m.rotation(seen)
            assert seen == d
