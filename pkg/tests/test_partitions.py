import json
from itertools import product
from math import comb

import pytest
from hypothesis import given, strategies as st

from grasscoh.partitions import (
    Box,
    Partition,
    Prop5Decomposition,
    complement_in_box,
    conjugate,
    contains,
    dominates,
    durfee,
    enumerate_in_box,
    partitions_of,
    prop5_compose,
    prop5_decompose,
)
from grasscoh.qseries import qbinomial


def brute_box(k, l):
    """Every weakly decreasing k-tuple in [0, l], zeros stripped."""
    out = set()
    for t in product(range(l + 1), repeat=k):
        if all(a >= b for a, b in zip(t, t[1:])):
            out.add(tuple(x for x in t if x))
    return out


@st.composite
def box_and_partition(draw, max_side=6):
    k = draw(st.integers(1, max_side))
    l = draw(st.integers(1, max_side))
    parts = sorted(draw(st.lists(st.integers(0, l), min_size=k, max_size=k)), reverse=True)
    return Box(k, l), Partition(parts)


def test_partition_validation():
    assert Partition([3, 1, 0, 0]) == (3, 1)
    assert Partition([]).weight == 0
    with pytest.raises(ValueError):
        Partition([1, 2])


def test_enumerate_smallest_box():
    assert enumerate_in_box(Box(1, 1)) == [(), (1,)]


def test_enumerate_2x2():
    got = enumerate_in_box((2, 2))
    assert set(got) == {(), (1,), (2,), (1, 1), (2, 1), (2, 2)}
    assert len(got) == 6


def test_enumerate_2x3_count():
    assert len(enumerate_in_box((2, 3))) == 10 == comb(5, 2)


@pytest.mark.parametrize("k,l", [(k, l) for k in range(1, 6) for l in range(1, 6)])
def test_enumerate_matches_brute_force(k, l):
    got = enumerate_in_box((k, l))
    assert set(got) == brute_box(k, l)
    assert len(got) == comb(k + l, k)
    assert all(a < b for a, b in zip(got, got[1:]))


def test_enumerate_by_weight():
    assert enumerate_in_box((2, 2), 2) == [(1, 1), (2,)]
    assert enumerate_in_box((2, 2), 5) == []
    for d in range(10):
        assert enumerate_in_box((3, 3), d) == [p for p in enumerate_in_box((3, 3)) if sum(p) == d]


def test_partitions_of():
    assert len(partitions_of(8)) == 22
    assert partitions_of(0) == [()]
    assert partitions_of(5, max_part=2) == [(1, 1, 1, 1, 1), (2, 1, 1, 1), (2, 2, 1)]


@pytest.mark.parametrize("lam,want", [((), ()), ((2, 1), (2, 1)), ((3, 1), (2, 1, 1)), ((4, 2, 2), (3, 3, 1, 1))])
def test_conjugate(lam, want):
    assert conjugate(lam) == want


@pytest.mark.parametrize(
    "lam,box,want",
    [((), (2, 2), (2, 2)), ((1,), (2, 2), (2, 1)), ((3, 3), (2, 3), ()), ((2,), (3, 3), (3, 3, 1))],
)
def test_complement(lam, box, want):
    assert complement_in_box(lam, box) == want


def test_complement_rejects_outside():
    with pytest.raises(ValueError):
        complement_in_box((3,), (2, 2))


@given(box_and_partition())
def test_conjugate_and_complement_are_involutions(bp):
    box, lam = bp
    assert conjugate(conjugate(lam)) == lam
    comp = complement_in_box(lam, box)
    assert sum(lam) + sum(comp) == box.k * box.l
    assert complement_in_box(comp, box) == lam


@given(box_and_partition(4), box_and_partition(4))
def test_complement_reverses_containment(a, b):
    box, lam = a
    _, mu = b
    if not box.contains(mu):
        return
    if contains(lam, mu):
        assert contains(complement_in_box(mu, box), complement_in_box(lam, box))


def _durfee_brute(lam):
    best = 0
    for i in range(1, len(lam) + 1):
        if all(lam[r] >= i for r in range(i)):
            best = i
    return best


@pytest.mark.parametrize("lam,want", [((), 0), ((2, 2), 2), ((3, 1), 1), ((5, 4, 3, 1), 3)])
def test_durfee(lam, want):
    assert durfee(lam) == want == _durfee_brute(lam)


def test_dominance():
    assert dominates((2,), (1, 1))
    assert not dominates((1, 1), (2,))
    assert not dominates((3, 1, 1, 1), (2, 2, 2))
    assert not dominates((2, 2, 2), (3, 1, 1, 1))


def test_prop5_single_cell():
    for box in [(1, 1), (3, 4)]:
        assert prop5_decompose((1,), box) == Prop5Decomposition(1, 0, Partition(), Partition())
        assert prop5_compose(Prop5Decomposition(1, 0, Partition(), Partition()), box) == (1,)


@pytest.mark.parametrize("k,l", [(1, 1), (2, 3), (3, 3), (4, 2)])
def test_prop5_single_row(k, l):
    dec = prop5_decompose((l,), (k, l))
    assert (dec.i, dec.j, dec.c, dec.d) == (1, 0, (), (l - 1,) if l > 1 else ())


@pytest.mark.parametrize("k,l", [(1, 1), (2, 3), (3, 3), (4, 2)])
def test_prop5_full_box(k, l):
    full = (l,) * k
    dec = prop5_decompose(full, (k, l))
    assert (dec.i, dec.j, dec.c) == (1, k - 1, ())
    assert dec.d == ((l - 1,) if l > 1 else ())
    assert dec.weight((k, l)) == 1 + (k - 1) * l + 0 + (l - 1) == k * l
    assert prop5_compose(dec, (k, l)) == full


def test_prop5_roundtrip_3x3():
    nonempty = enumerate_in_box((3, 3))[1:]
    assert len(nonempty) == 19
    for lam in nonempty:
        dec = prop5_decompose(lam, (3, 3))
        assert prop5_compose(dec, (3, 3)) == lam
        assert dec.weight((3, 3)) == sum(lam)
        assert len(dec.c) <= dec.j and all(p <= dec.i - 1 for p in dec.c)
        assert len(dec.d) <= dec.i and all(p <= 3 - dec.i for p in dec.d)


def test_prop5_rejects_empty():
    with pytest.raises(ValueError):
        prop5_decompose((), (2, 2))


def test_prop5_compose_rejects_out_of_box():
    with pytest.raises(ValueError):
        prop5_compose(Prop5Decomposition(1, 0, Partition(), Partition([3])), (2, 3))
    with pytest.raises(ValueError):
        prop5_compose(Prop5Decomposition(2, 2, Partition(), Partition()), (3, 3))
    with pytest.raises(ValueError):
        prop5_compose(Prop5Decomposition(2, 1, Partition([2]), Partition()), (3, 3))


@pytest.mark.parametrize("k,l", [(2, 2), (3, 4), (4, 3), (5, 5)])
def test_prop5_classification_counts(k, l):
    counts = {}
    for lam in enumerate_in_box((k, l))[1:]:
        dec = prop5_decompose(lam, (k, l))
        counts.setdefault((dec.i, dec.j), {})
        counts[dec.i, dec.j][sum(lam)] = counts[dec.i, dec.j].get(sum(lam), 0) + 1
    for i in range(1, k + 1):
        for j in range(k - i + 1):
            factor = (qbinomial(i + j - 1, j) * qbinomial(l, i)).shift(i + j * (l - i + 1)) if i <= l else None
            got = counts.get((i, j), {})
            want = factor.coefficients() if factor is not None else {}
            assert got == want, (i, j)


def test_json():
    assert json.dumps(Partition([3, 1]).to_json()) == "[3, 1]"
    assert Partition().to_json() == []
    dec = prop5_decompose((3, 3, 1), (3, 3))
    assert prop5_compose(
        Prop5Decomposition(dec.to_json()["i"], dec.to_json()["j"], Partition(dec.to_json()["c"]),
                           Partition(dec.to_json()["d"])),
        (3, 3),
    ) == (3, 3, 1)
