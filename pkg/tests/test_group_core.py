import pytest

from dihedral_graphs.errors import InvalidArgumentError, InvalidParameterError
from dihedral_graphs.group_core import (
    IDENTITY,
    DihedralElement,
    DihedralSub,
    Reflection,
    RotationCyclic,
    closure_subgroups_bruteforce,
    closure_subgroups_scan,
    divisors,
    enumerate_subgroups,
    find_subgroup,
    group_elements,
    intersect_nontrivially,
    inverse,
    is_closed,
    multiply,
    prime_square_root,
    sigma,
    tau,
)


def test_group_elements_n3_in_canonical_order():
    elems = group_elements(3)
    assert elems == [
        DihedralElement(0), DihedralElement(1), DihedralElement(2),
        DihedralElement(0, True), DihedralElement(1, True), DihedralElement(2, True),
    ]
    assert elems[0] == IDENTITY


@pytest.mark.parametrize("n", [4, 9, 12])
def test_group_has_2n_distinct_elements(n):
    elems = group_elements(n)
    assert len(elems) == len(set(elems)) == 2 * n


@pytest.mark.parametrize("n", [-1, 0, 1, 2])
def test_small_n_rejected(n):
    with pytest.raises(InvalidParameterError):
        group_elements(n)
    with pytest.raises(InvalidParameterError):
        enumerate_subgroups(n)


def test_multiply_relations():
    n = 7
    s, r = DihedralElement(0, True), DihedralElement(1)
    assert multiply(s, s, n) == IDENTITY
    assert multiply(r, DihedralElement(n - 1), n) == IDENTITY
    # srs = r^-1
    assert multiply(multiply(s, r, n), s, n) == DihedralElement(n - 1)


def test_every_reflection_is_an_involution_n4():
    n = 4
    sr = multiply(DihedralElement(0, True), DihedralElement(1), 4)
    assert sr == DihedralElement(1, True)
    assert multiply(sr, sr, n) == IDENTITY
    for x in group_elements(n):
        if x.is_reflection:
            assert multiply(x, x, n) == IDENTITY


@pytest.mark.parametrize("n", [3, 4, 6])
def test_multiplication_is_associative_with_inverses(n):
    elems = group_elements(n)
    for a in elems:
        assert multiply(a, inverse(a, n), n) == IDENTITY
        for b in elems:
            for c in elems:
                assert multiply(multiply(a, b, n), c, n) == multiply(a, multiply(b, c, n), n)


def test_divisor_functions():
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert (tau(9), sigma(9)) == (3, 13)
    assert (tau(6), sigma(6)) == (4, 12)
    assert prime_square_root(49) == 7
    assert prime_square_root(36) is None
    assert prime_square_root(7) is None


@pytest.mark.parametrize("n, count", [(4, 8), (9, 14), (6, 14), (3, 4)])
def test_subgroup_counts(n, count):
    assert len(enumerate_subgroups(n)) == count


def test_enumeration_order_n9():
    kinds = [s.kind for s in enumerate_subgroups(9)]
    assert kinds[:2] == [RotationCyclic(3), RotationCyclic(9)]
    assert kinds[2:11] == [Reflection(i) for i in range(1, 10)]
    assert kinds[11:] == [DihedralSub(3, 1), DihedralSub(3, 2), DihedralSub(3, 3)]


@pytest.mark.parametrize("n", range(3, 31))
def test_subgroups_closed_distinct_and_correct_order(n):
    subs = enumerate_subgroups(n)
    assert len({s.elements for s in subs}) == len(subs)
    for s in subs:
        assert is_closed(s.elements, n)
        assert s.order == len(s.elements) == s.kind.order()
        assert 1 < s.order < 2 * n


@pytest.mark.parametrize("n", range(3, 9))
def test_classification_matches_subset_bruteforce(n):
    assert {s.mask for s in enumerate_subgroups(n)} == closure_subgroups_bruteforce(n)


@pytest.mark.parametrize("n", [9, 10, 12, 15, 16, 25])
def test_classification_matches_generator_scan(n):
    assert {s.mask for s in enumerate_subgroups(n)} == closure_subgroups_scan(n)


def test_bruteforce_oracle_refuses_large_groups():
    with pytest.raises(InvalidParameterError):
        closure_subgroups_bruteforce(9)


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_prime_square_census(p):
    subs = enumerate_subgroups(p * p)
    kinds = [s.kind for s in subs]
    assert sum(isinstance(k, Reflection) for k in kinds) == p * p
    assert [k for k in kinds if isinstance(k, DihedralSub)] == [DihedralSub(p, i) for i in range(1, p + 1)]
    assert [k for k in kinds if isinstance(k, RotationCyclic)] == [RotationCyclic(p), RotationCyclic(p * p)]


def test_labels():
    assert find_subgroup(9, RotationCyclic(9)).label == "<r>"
    assert find_subgroup(9, RotationCyclic(3)).label == "<r^3>"
    assert find_subgroup(9, Reflection(9)).label == "<s>"
    assert find_subgroup(9, Reflection(1)).label == "<s r>"
    assert find_subgroup(9, DihedralSub(3, 2)).label == "<r^3, s r^2>"


def test_reflection_label_n_is_s():
    s = find_subgroup(4, Reflection(4))
    assert s.elements == {IDENTITY, DihedralElement(0, True)}


def test_noncanonical_kind_rejected():
    with pytest.raises(InvalidParameterError):
        find_subgroup(9, Reflection(0))
    with pytest.raises(InvalidParameterError):
        find_subgroup(9, DihedralSub(9, 1))
    with pytest.raises(InvalidParameterError):
        find_subgroup(9, DihedralSub(3, 4))


def test_intersections():
    p = 3
    n = p * p
    r = find_subgroup(n, RotationCyclic(n))
    rp = find_subgroup(n, RotationCyclic(p))
    s = find_subgroup(n, Reflection(n))
    sr = find_subgroup(n, Reflection(1))
    # <r^3, s> is DihedralSub(3, 3) since s r^3 generates it together with r^3
    d = find_subgroup(n, DihedralSub(3, 3))
    assert DihedralElement(0, True) in d.elements
    assert intersect_nontrivially(r, rp)
    assert not intersect_nontrivially(s, sr)
    assert intersect_nontrivially(s, d)
    with pytest.raises(InvalidArgumentError):
        intersect_nontrivially(s, s)
