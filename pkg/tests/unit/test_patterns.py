import itertools

import pytest

from poplab.patterns import (
    InvalidPopError,
    PopSyntaxError,
    avoids_all,
    count_classical,
    count_occurrences,
    flat_profile,
    is_separable,
    is_separable_naive,
    make_classical,
    make_flat_pj,
    make_flat_ptilde,
    make_pop,
    occurs,
    occurs_flat_pj,
    occurs_flat_ptilde,
    parse_pop,
    parse_pop_list,
    stankova_decompose,
)
from poplab.perm_core import (
    Permutation,
    complement,
    direct_sum,
    iter_sn,
    reverse,
    skew_sum,
)


def perm(text):
    return Permutation.from_string(text)


EMPTY = Permutation(())


def all_perms(n_max):
    for n in range(n_max + 1):
        yield from iter_sn(n)


class TestConstruction:
    def test_classical_chain(self):
        assert make_classical(perm("321")).below == {(3, 2), (2, 1), (3, 1)}
        assert make_classical(perm("1")).below == frozenset()
        assert make_classical(perm("12")).below == {(1, 2)}

    def test_flat_pops(self):
        assert make_flat_pj(3).below == {(2, 1), (3, 1)}
        assert make_flat_ptilde(3).below == {(3, 1), (3, 2)}
        assert make_flat_pj(2) == make_classical(perm("21"))
        assert make_flat_ptilde(2) == make_flat_pj(2)

    def test_flat_kind(self):
        assert make_flat_pj(4).flat_kind == ("pj", 4)
        assert make_flat_ptilde(5).flat_kind == ("ptilde", 5)
        assert make_flat_ptilde(2).flat_kind == ("pj", 2)
        assert make_classical(perm("2413")).flat_kind is None

    def test_make_pop_closes_transitively(self):
        assert make_pop(3, {(3, 1)}).below == {(3, 1)}
        assert make_pop(3, {(1, 2), (2, 3)}).below == {(1, 2), (2, 3), (1, 3)}
        assert make_pop(1).below == frozenset()

    @pytest.mark.parametrize(
        "relations", [{(1, 2), (2, 1)}, {(1, 2), (2, 3), (3, 1)}, {(1, 1)}, {(1, 4)}]
    )
    def test_make_pop_rejects(self, relations):
        with pytest.raises(InvalidPopError):
            make_pop(3, relations)

    def test_flat_sizes_below_two(self):
        with pytest.raises(InvalidPopError):
            make_flat_pj(1)
        with pytest.raises(InvalidPopError):
            make_flat_ptilde(0)

    def test_chain_pattern(self):
        assert make_classical(perm("2413")).chain_pattern == perm("2413")
        assert make_flat_pj(3).chain_pattern is None


class TestOccurrences:
    def test_counts(self):
        assert count_occurrences(make_pop(3, {(3, 1)}), perm("34152")) == 6
        assert count_occurrences(make_flat_pj(4), perm("213")) == 0
        assert count_occurrences(make_classical(perm("321")), perm("123465")) == 0

    def test_empty_pop_occurs_once(self):
        assert count_occurrences(make_pop(0), perm("312")) == 1
        assert count_occurrences(make_pop(0), EMPTY) == 1

    def test_occurs(self):
        assert occurs(make_flat_pj(3), perm("34152"))
        assert not occurs(make_flat_pj(2), EMPTY)
        assert occurs(make_classical(perm("2413")), perm("2413"))

    def test_avoids_all(self):
        assert avoids_all(perm("123465"), [make_classical(perm("321"))])
        assert avoids_all(EMPTY, [make_flat_pj(2), make_flat_ptilde(3)])
        assert not avoids_all(perm("21"), [make_flat_pj(2)])

    def test_flat_examples(self):
        assert occurs_flat_pj(3, perm("312"))
        assert not occurs_flat_ptilde(3, perm("132"))
        assert not occurs_flat_pj(5, perm("4321"))

    def test_flat_profile(self):
        assert flat_profile(perm("312").values) == (2, 1)
        assert flat_profile(()) == (0, 0)

    def test_specialized_matchers_agree_with_generic(self):
        pjs = {j: make_flat_pj(j) for j in range(2, 7)}
        pts = {l: make_flat_ptilde(l) for l in range(2, 7)}  # noqa: E741
        for p in all_perms(7):
            for j, pop in pjs.items():
                assert occurs_flat_pj(j, p) == occurs(pop, p)
            for l, pop in pts.items():  # noqa: E741
                assert occurs_flat_ptilde(l, p) == occurs(pop, p)

    def test_chain_counts_match_classical(self):
        patterns = [p for n in range(1, 5) for p in iter_sn(n)]
        for p in all_perms(6):
            for pattern in patterns:
                expected = count_classical(pattern, p)
                assert count_occurrences(make_classical(pattern), p) == expected

    def test_reverse_complement_swaps_flat_pops(self):
        for p in all_perms(7):
            rc = reverse(complement(p))
            for j, l in itertools.product(range(3, 6), repeat=2):  # noqa: E741
                here = avoids_all(p, [make_flat_pj(j), make_flat_ptilde(l)])
                there = avoids_all(rc, [make_flat_pj(l), make_flat_ptilde(j)])
                assert here == there


class TestSeparable:
    def test_examples(self):
        assert not is_separable(perm("2413"))
        assert is_separable(perm("32176854"))
        assert is_separable(EMPTY)

    def test_matches_basis_avoidance(self):
        for p in all_perms(7):
            assert is_separable(p) == is_separable_naive(p)

    def test_closure(self):
        separable = [p for p in all_perms(4) if is_separable(p)]
        for p in separable:
            assert is_separable(reverse(p))
            assert is_separable(complement(p))
        for p, q in itertools.product(separable, repeat=2):
            assert is_separable(direct_sum(p, q))
            assert is_separable(skew_sum(p, q))


class TestStankova:
    def test_paper_example(self):
        dec = stankova_decompose(perm("32176854"))
        assert dec.m == 2
        assert [b.values for b in dec.left_blocks] == [(3, 2, 1), (7, 6)]
        assert [b.values for b in dec.right_blocks] == [(), (5, 4)]

    def test_small(self):
        one = stankova_decompose(perm("1"))
        assert one.m == 1
        assert len(one.left_blocks[0]) == len(one.right_blocks[0]) == 0
        two = stankova_decompose(perm("21"))
        assert two.m == 1
        assert len(two.left_blocks[0]) == 0
        assert two.right_blocks[0].values == (1,)

    def test_reconstruction_and_intervals(self):
        for p in all_perms(7):
            if not len(p) or not is_separable(p):
                continue
            dec = stankova_decompose(p)
            assert dec.reconstruct() == p
            blocks = []
            for right, left in zip(dec.right_blocks, dec.left_blocks):
                blocks.extend([right, left])
            values = [v for block in blocks for v in sorted(block.values)]
            assert values == list(range(1, len(p)))
            for i, (right, left) in enumerate(zip(dec.right_blocks, dec.left_blocks)):
                if i > 0:
                    assert len(right)
                if i < dec.m - 1:
                    assert len(left)

    def test_rejects(self):
        with pytest.raises(ValueError):
            stankova_decompose(perm("2413"))
        with pytest.raises(ValueError):
            stankova_decompose(EMPTY)


class TestParsing:
    @pytest.mark.parametrize(
        ("text", "expected"),
        [
            ("Pj:4", make_flat_pj(4)),
            ("Pt:5", make_flat_ptilde(5)),
            ("classical:2413", make_classical(Permutation((2, 4, 1, 3)))),
            ("pop k=3 below=3<1", make_pop(3, {(3, 1)})),
            ("pop k=3 below=3<2<1", make_pop(3, {(3, 2), (2, 1)})),
        ],
    )
    def test_parse_pop(self, text, expected):
        assert parse_pop(text) == expected

    def test_str_round_trips(self):
        pops = [make_flat_pj(3), make_flat_ptilde(4), make_pop(4, {(4, 1), (2, 3)})]
        for pop in pops:
            assert parse_pop(str(pop)) == pop

    def test_parse_list(self):
        assert parse_pop_list(["Pj:4,Pt:4"]) == [make_flat_pj(4), make_flat_ptilde(4)]
        assert parse_pop_list(["pop k=3 below=3<1,2<1"]) == [
            make_pop(3, {(3, 1), (2, 1)})
        ]

    @pytest.mark.parametrize("text", ["Pq:3", "Pj:x", "pop below=1<2", "pop k=2 1<"])
    def test_syntax_errors(self, text):
        with pytest.raises(PopSyntaxError):
            parse_pop(text)
