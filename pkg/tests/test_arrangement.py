import importlib
import json
import math
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from maxclass.arrangement import (
    KLEIN,
    Arrangement,
    arrangement_from_json,
    arrangement_to_json,
    cells,
    run_sweep,
    sweep,
    validate,
)
from maxclass.arrangement.svg import render, write_sweep_svgs
from maxclass.concepts import format_concept, is_maximum, reduction, sauer_bound, vc_dimension
from maxclass.errors import ArrangementError, GenericityError
from maxclass.fixtures import ARRANGEMENTS, SWEEP_PREFIX, TABLE_EUCLIDEAN
from maxclass.peeling import verify_corner_sequence
from strategies import simple_arrangements

sweep_mod = importlib.import_module("maxclass.arrangement.sweep")


def _lists(A):
    return [p.normal for p in A.planes], [p.offset for p in A.planes]


def test_validate_examples():
    par = Arrangement.from_lists([(1, 0), (2, 0)], [0, 1])
    res = validate(par)
    assert not res and res.witness == (1, 2)
    conc = Arrangement.from_lists([(1, 0), (0, 1), (1, 1)], [0, 0, 0])
    assert validate(conc).witness == (1, 2, 3)
    assert not validate(Arrangement.from_lists([(1, 0, 0)], [0]))
    assert not validate(Arrangement.from_lists([(0, 0), (1, 0)], [0, 0]))
    assert validate(ARRANGEMENTS["lines-4"][0])


def test_validate_klein_examples():
    # pairwise crossings all outside the disk: a rank-1 arrangement
    outside = Arrangement.from_lists([(1, 0), (0, 1), (1, 1)], ["9/10", "9/10", "-6/5"], KLEIN)
    assert outside.rank == 1 and validate(outside)
    assert len(cells(outside)[0]) == 4
    forced = Arrangement.from_lists([(1, 0), (0, 1), (1, 1)], ["9/10", "9/10", "-6/5"], KLEIN, 2)
    assert not validate(forced)
    assert not validate(Arrangement.from_lists([(1, 0)], [1], KLEIN))
    assert not validate(Arrangement.from_lists([(1, 0), (0, 1)], [1, 0], KLEIN, 1))
    with pytest.raises(ArrangementError):
        Arrangement.from_lists([(1, 0, 0)], [0], KLEIN)


def test_table_arrangement_cells():
    A, _ = ARRANGEMENTS["lines-table"]
    C, cm = cells(A)
    assert sorted(C.strings()) == sorted(TABLE_EUCLIDEAN)
    for v, x in cm.points.items():
        assert A.concept_at(x) == v


def test_sweep_reproduces_published_prefix():
    A, g = ARRANGEMENTS["lines-table"]
    seq = sweep(A, g)
    assert [format_concept(u, 4) for u in seq.vertices[:6]] == list(SWEEP_PREFIX)
    assert seq.mode == "sweep"


def test_line_sweep_in_one_dimension():
    A = Arrangement.from_lists([(1,)], [0])
    seq = sweep(A, (1,))
    assert [e.cube_dim for e in seq.events] == [1, 0]
    assert seq.vertices == [0, 1]
    three = sweep(Arrangement.from_lists([(1,), (1,), (-1,)], [0, 1, -2]), (1,))
    assert [e.cube_dim for e in three.events] == [1, 1, 1, 0]


def test_degenerate_direction_is_retried():
    A = Arrangement.from_lists([(1, 0), (0, 1)], [0, 0])
    with pytest.raises(GenericityError):
        run_sweep(A, (1, 0), max_retries=1)
    seq, g = run_sweep(A, (1, 0))
    assert g != (1, 0) and len(seq) == 4


def test_sweep_rejects_bad_input():
    with pytest.raises(ArrangementError):
        sweep(Arrangement.from_lists([(1, 0), (2, 0)], [0, 1]))
    with pytest.raises(ArrangementError):
        sweep(ARRANGEMENTS["klein-crossing"][0])


def test_json_round_trip():
    for A, _ in ARRANGEMENTS.values():
        data = json.loads(json.dumps(arrangement_to_json(A)))
        assert arrangement_from_json(data) == A
    assert "rank" not in arrangement_to_json(ARRANGEMENTS["lines-4"][0])


def test_svg_output(tmp_path):
    A, g = ARRANGEMENTS["lines-4"]
    C, cm = cells(A)
    text = render(A, cm)
    assert text.startswith("<svg") and text.count("<line") >= 4
    paths = write_sweep_svgs(A, cm, sweep(A, g), tmp_path)
    assert len(paths) == len(C) + 1
    assert all(p.read_text().rstrip().endswith("</svg>") for p in paths)
    K, _ = ARRANGEMENTS["klein-crossing"]
    assert "<circle" in render(K, cells(K)[1])


@settings(max_examples=40)
@given(simple_arrangements(dim=2, max_n=5))
def test_cells_match_lp_oracle(A):
    C, cm = cells(A)
    assert set(C.strings()) == oracles.lp_cells(*_lists(A))
    for v, x in cm.points.items():
        assert A.concept_at(x) == v


@given(st.sampled_from([1, 2, 3]).flatmap(lambda d: simple_arrangements(dim=d, max_n=d + 3)))
def test_cells_form_a_maximum_class(A):
    C, _ = cells(A)
    assert len(C) == sauer_bound(A.n, A.dim)
    assert vc_dimension(C) == A.dim
    assert is_maximum(C)


@given(st.sampled_from([2, 3]).flatmap(lambda d: simple_arrangements(dim=d, min_n=d + 1, max_n=d + 3)), st.data())
def test_reduction_is_the_arrangement_on_a_plane(A, data):
    """Edges of color i are the cells of the arrangement induced on plane i."""
    i = data.draw(st.integers(0, A.n - 1))
    p = A.planes[i]
    H = sweep_mod._restrict(A, p.normal, p.offset)
    H = Arrangement(H.dim, H.planes[:i] + H.planes[i + 1 :])
    C, _ = cells(A)
    assert cells(H)[0] == reduction(C, i + 1)


@settings(max_examples=30)
@given(simple_arrangements(dim=2, min_n=2, max_n=5), st.integers(0, 10**6))
def test_sweep_peels_bounded_cells_by_their_top(A, seed):
    seq, g = run_sweep(A, seed=seed)
    C, _ = cells(A)
    assert verify_corner_sequence(C, seq.vertices).ok
    assert seq.max_degree == A.dim
    k = comb(A.n, A.dim)
    sups = [
        oracles.lp_sup_unbounded(*_lists(A), [int(b) for b in format_concept(v, A.n)], g)
        for v in seq.vertices
    ]
    assert all(math.isfinite(s) for s in sups[:k])
    assert all(a < b + 1e-9 for a, b in zip(sups[:k], sups[1:k]))
    assert all(s == math.inf for s in sups[k:])


@settings(max_examples=20)
@given(simple_arrangements(dim=3, max_n=5), st.integers(0, 10**6))
def test_sweep_in_three_dimensions(A, seed):
    seq, _ = run_sweep(A, seed=seed)
    C, _ = cells(A)
    assert sorted(seq.vertices) == sorted(C.concepts)
    assert [e.cube_dim for e in seq.events][: comb(A.n, 3)] == [3] * comb(A.n, 3)
    assert seq.events[-1].cube_dim == 0


def test_direction_sequence_is_reproducible():
    a = sweep_mod.direction_sequence(2, 5)
    b = sweep_mod.direction_sequence(2, 5)
    assert [next(a) for _ in range(4)] == [next(b) for _ in range(4)]
    first = next(sweep_mod.direction_sequence(2, 0, (1, "1/3")))
    assert first == (Fraction(1), Fraction(1, 3))
