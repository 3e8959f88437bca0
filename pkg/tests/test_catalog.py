import json
from fractions import Fraction

import pytest

from looijenga.catalog import (builtin_catalog, catalog_ids, get_geometry, load_catalog, pairing,
                               use_catalog)
from looijenga.errors import BasisMismatch, UnbalancedWeb, UnknownGeometry
from looijenga.vertex import ToricWeb


def test_pairing_examples():
    p2 = get_geometry("P2:H+Q")
    assert p2.pairing((2,), p2.divisors[1]) == 4
    assert p2.pairing((1,), p2.divisors[0]) == 1
    dp3 = get_geometry("dP3:D1+D2")
    assert dp3.pairing((1, 1, 1, 1), dp3.divisors[1]) == 2


def test_pairing_basis_mismatch():
    with pytest.raises(BasisMismatch):
        pairing((1, 2), (1,), [[1]])
    with pytest.raises(BasisMismatch):
        get_geometry("P2:H+Q").apply_iota((1, 1))


def test_lookup_examples():
    p2 = get_geometry("P2:H+Q")
    assert p2.l == 2 and p2.self_intersection(0) == 1 and p2.framings == [1]
    assert get_geometry("P(1,1,3):H+Q").framings == [3]
    assert get_geometry("P1xP1:H1,H2,diag").framings == [0, -1]
    assert get_geometry("dP3:D1+D2").framings == [-1]


def test_orbifold_family_instantiation():
    entry = get_geometry("P(1,1,3):H+Q")
    assert entry.degrees((2,)) == (2, 8)
    assert entry.self_intersection(0) == Fraction(1, 3)
    assert entry.nlog_closed == {"type": "qbinomial", "top": 4}


def test_unknown_geometry():
    with pytest.raises(UnknownGeometry):
        get_geometry("P3:nothing")
    with pytest.raises(UnknownGeometry):
        get_geometry("P(1,1,0):H+Q")


def test_builtin_catalog_invariants():
    entries = builtin_catalog()
    ids = {e.id for e in entries}
    assert {"P2:H+Q", "P2:3H", "P1xP1:H1,H2,diag", "dP3:D1+D2", "P(1,1,2):H+Q"} <= ids
    for entry in entries:
        assert entry.divisor_sum() == tuple(entry.anticanonical)
        web = entry.web()
        for legs in web.vertices:
            assert all(sum(leg["dir"][i] for leg in legs) == 0 for i in (0, 1))
        rows = entry.iota_matrix()
        assert _rank(rows) == entry.rank, entry.id


def test_iota_sample_windings_nonnegative():
    for entry in builtin_catalog():
        for d in _samples(entry):
            if min(entry.degrees(d)) >= 0:
                internal, windings = entry.apply_iota(d)
                assert min(windings) >= 0 and min(internal, default=0) >= 0


def test_dp3_iota_relabelling():
    assert get_geometry("dP3:D1+D2").apply_iota((2, 1, 1, 1)) == ((2, 2, 1), (1,))


def test_external_catalog(tmp_path):
    data = {"geometries": [{
        "id": "toy", "surface": "P2", "basis": ["H"], "intersection_matrix": [[1]],
        "divisors": [{"name": "H", "class": [1]}, {"name": "Q", "class": [2]}],
        "anticanonical": [3], "framings": [1],
        "open_web": {"vertices": [[{"dir": [1, 0], "brane": 0}, {"dir": [-1, -1]}, {"dir": [0, 1]}]],
                     "edges": []},
        "iota": {"internal": [], "windings": [[1]]}}]}
    path = tmp_path / "cat.json"
    path.write_text(json.dumps(data))
    try:
        use_catalog(path)
        assert catalog_ids() == ["toy"]
        assert get_geometry("toy").degrees((3,)) == (3, 6)
    finally:
        use_catalog(None)
    assert "P2:H+Q" in catalog_ids()
    assert "toy" not in load_catalog().ids()


def test_unbalanced_web_rejected():
    with pytest.raises(UnbalancedWeb):
        ToricWeb([[{"dir": (1, 0)}, {"dir": (0, 1)}, {"dir": (-1, 0)}]], [])
    with pytest.raises(UnbalancedWeb):
        ToricWeb([[{"dir": (1, 0)}, {"dir": (-1, -1)}]], [])


def _samples(entry):
    if entry.rank == 1:
        return [(d,) for d in range(1, 5)]
    if entry.rank == 2:
        return [(a, b) for a in range(4) for b in range(4) if a + b]
    return [(d0, d1, d2, d3) for d0 in range(1, 3) for d1 in range(3) for d2 in range(3) for d3 in range(3)]


def _rank(rows):
    m = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        pivot = next((r for r in range(rank, len(m)) if m[r][c]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        for r in range(len(m)):
            if r != rank and m[r][c]:
                f = m[r][c] / m[rank][c]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank
