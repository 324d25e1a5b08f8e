import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from circdom.errors import ChordFileError, InvalidChord
from circdom.graph import (
    ChordSet,
    CirculantSpec,
    VertexSet,
    coverage,
    load_chord_file,
    symmetrize,
)

from conftest import naive_coverage


def spec_of(n, chords):
    return CirculantSpec(n, ChordSet(n, tuple(sorted(chords))))


# hypothesis strategy: a small spec plus a subset and radius
small_instances = st.integers(min_value=2, max_value=40).flatmap(
    lambda n: st.tuples(
        st.just(n),
        st.sets(st.integers(1, n - 1), min_size=1, max_size=min(6, n - 1)),
        st.sets(st.integers(0, n - 1), min_size=0, max_size=n),
        st.integers(1, 3),
    )
)


def test_symmetrize_examples():
    assert symmetrize([1], 9).chords == (1, 8)
    assert symmetrize([5], 10).chords == (5,)  # self-paired fixed point
    assert symmetrize([2, 3], 10).chords == (2, 3, 7, 8)


def test_symmetrize_rejects_zero():
    with pytest.raises(InvalidChord):
        symmetrize([9], 9)


@given(small_instances)
@settings(max_examples=100)
def test_symmetrize_is_symmetric(inst):
    n, chords, _, _ = inst
    cs = symmetrize(chords, n)
    assert cs.symmetric
    members = set(cs.chords)
    assert all((n - s) % n in members for s in members)


def test_chordset_symmetric_flag():
    assert ChordSet(9, (1, 8)).symmetric
    assert not ChordSet(9, (1, 2)).symmetric


def test_coverage_examples():
    spec = spec_of(4, [1])
    D = VertexSet.from_indices(4, [0, 2])
    assert coverage(spec, D, 1) == VertexSet.full(4)

    spec = spec_of(5, [1])
    got = coverage(spec, VertexSet.from_indices(5, [0]), 2)
    assert sorted(got.indices().tolist()) == [0, 1, 2]

    spec = spec_of(7, [2, 5])
    assert coverage(spec, VertexSet.full(7), 1) == VertexSet.full(7)


@given(small_instances)
@settings(max_examples=150)
def test_coverage_matches_naive(inst):
    n, chords, dset, r = inst
    spec = spec_of(n, chords)
    D = VertexSet.from_indices(n, dset)
    got = set(coverage(spec, D, r).indices().tolist())
    assert got == naive_coverage(n, sorted(chords), sorted(dset), r)


@given(small_instances)
@settings(max_examples=100)
def test_coverage_monotone_and_composes(inst):
    n, chords, dset, r = inst
    spec = spec_of(n, chords)
    D = VertexSet.from_indices(n, dset)
    cov_r = coverage(spec, D, r)
    cov_r1 = coverage(spec, D, r + 1)
    # monotone in r
    assert np.all(cov_r1.members >= cov_r.members)
    # composition law
    assert coverage(spec, cov_r, 1) == cov_r1
    # monotone in D
    bigger = VertexSet(n, D.members | (np.arange(n) == 0))
    assert np.all(coverage(spec, bigger, r).members >= cov_r.members)


@given(small_instances)
@settings(max_examples=80)
def test_symmetric_coverage_direction_free(inst):
    n, chords, dset, r = inst
    cs = symmetrize(chords, n)
    spec = CirculantSpec(n, cs)
    neg = ChordSet(n, tuple(sorted((n - s) % n for s in cs.chords)))
    assert neg.chords == cs.chords  # symmetric: -S == S, membership-level
    D = VertexSet.from_indices(n, dset)
    assert coverage(spec, D, r) == coverage(CirculantSpec(n, neg), D, r)


def test_chord_file_roundtrip(tmp_path):
    p = tmp_path / "chords.txt"
    p.write_text("# cycle on 9 vertices\n1\n\n8\n")
    cs = load_chord_file(p, 9)
    assert cs.chords == (1, 8)
    assert cs.symmetric


def test_chord_file_duplicate_names_line(tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("1\n2\n1\n")
    with pytest.raises(ChordFileError, match="3"):
        load_chord_file(p, 9)


def test_chord_file_bad_value(tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("1\nnope\n")
    with pytest.raises(ChordFileError, match="2"):
        load_chord_file(p, 9)
    p.write_text("0\n")
    with pytest.raises(ChordFileError, match="1"):
        load_chord_file(p, 9)


def test_vertexset_basics():
    v = VertexSet.from_indices(10, [1, 3, 3, 7])
    assert v.size == 3
    assert 3 in v and 4 not in v
    assert v.union(VertexSet.from_indices(10, [4])).size == 4
    with pytest.raises(ValueError):
        VertexSet.from_indices(10, [10])
