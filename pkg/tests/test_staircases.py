import pytest

from hilbcells import (
    Comparison,
    DomainError,
    HilbertFunction,
    Monomial,
    ShapeError,
    Staircase,
    Weight,
    clefts,
    compare_staircases,
    compatible_staircases,
    construct_staircase,
    degree,
    enumerate_staircases,
    hilbert_function,
    monomial_sequence,
    s_profile,
)

W11 = Weight(1, -1)


class TestWeight:
    def test_normalization(self):
        with pytest.raises(DomainError):
            Weight(0, 0)
        with pytest.raises(DomainError):
            Weight(2, -2)
        with pytest.raises(DomainError):
            Weight(1, 1)
        with pytest.raises(DomainError):
            Weight(1, 0)
        assert Weight(0, -1).a == 0
        assert Weight(-3, -2).product == 6

    def test_degree_examples(self):
        assert degree(Monomial(0, 0), W11) == 0
        assert degree(Monomial(2, 3), W11) == 5
        assert degree(Monomial(4, 0), Weight(2, -3)) == 12


class TestConstruction:
    def test_single_box(self):
        E = construct_staircase([1])
        assert len(E) == 1 and E.cells() == (Monomial(0, 0),)

    def test_hook_staircase(self):
        E = construct_staircase([3, 1, 1, 1])
        assert len(E) == 6
        assert set(E.cells()) == {
            Monomial(0, 0), Monomial(1, 0), Monomial(2, 0), Monomial(3, 0),
            Monomial(0, 1), Monomial(0, 2),
        }
        assert clefts(E) == (Monomial(0, 3), Monomial(1, 1), Monomial(4, 0))

    def test_rejects_increasing_columns(self):
        with pytest.raises(ShapeError):
            construct_staircase([2, 3])
        with pytest.raises(ShapeError):
            construct_staircase([1, -1])

    def test_trailing_zeros_trimmed(self):
        assert construct_staircase([2, 1, 0, 0]).columns == (2, 1)

    def test_from_cells_round_trip(self):
        for l in range(1, 8):
            for E in enumerate_staircases(l):
                assert Staircase.from_cells(E.cells()) == E

    def test_from_cells_rejects_gaps(self):
        with pytest.raises(ShapeError):
            Staircase.from_cells([Monomial(0, 0), Monomial(0, 2)])

    def test_json_round_trip(self):
        E = construct_staircase([4, 2])
        assert Staircase.from_json(E.to_json()) == E
        H = hilbert_function(E, W11)
        assert HilbertFunction.from_json(H.to_json()) == H


class TestClefts:
    def test_examples(self):
        assert set(clefts(construct_staircase([1]))) == {Monomial(1, 0), Monomial(0, 1)}
        assert clefts(construct_staircase([1, 1])) == (Monomial(0, 1), Monomial(2, 0))

    def test_empty_rejected(self):
        with pytest.raises(DomainError):
            clefts(Staircase(()))

    def test_count_is_distinct_heights_plus_one(self):
        for l in range(1, 11):
            for E in enumerate_staircases(l):
                assert len(clefts(E)) == len(set(E.columns)) + 1

    def test_minimality_and_coverage(self):
        # Clefts are pairwise indivisible and every complement monomial in a
        # bounding box one past the staircase is divisible by some cleft.
        for l in range(1, 9):
            for E in enumerate_staircases(l):
                cs = clefts(E)
                for c in cs:
                    for d in cs:
                        assert c == d or not c.divides(d)
                for a in range(E.width + 2):
                    for b in range(E.height + 2):
                        m = Monomial(a, b)
                        if m not in E:
                            assert any(c.divides(m) for c in cs)


class TestHilbertFunction:
    def test_examples(self):
        assert hilbert_function(construct_staircase([1]), W11).as_dict() == {0: 1}
        assert hilbert_function(construct_staircase([3, 1, 1, 1]), W11).as_dict() == {
            0: 1, 1: 2, 2: 2, 3: 1,
        }
        assert hilbert_function(construct_staircase([1, 1]), W11).as_dict() == {0: 1, 1: 1}

    def test_total_mass(self):
        for l in range(1, 9):
            for E in enumerate_staircases(l):
                assert hilbert_function(E, W11).total() == l


class TestCompatible:
    def test_three_staircases(self):
        H = HilbertFunction.from_counts(W11, {0: 1, 1: 2, 2: 1})
        found = compatible_staircases(H)
        assert {E.columns for E in found} == {(2, 1, 1), (2, 2), (3, 1)}

    def test_point(self):
        H = HilbertFunction.from_counts(W11, {0: 1})
        assert [E.columns for E in compatible_staircases(H)] == [(1,)]

    def test_negative_diagonal_weight_separates(self):
        # For a*b > 0 any Hilbert function admits at most one staircase.
        w = Weight(-1, -1)
        for E in enumerate_staircases(3):
            H = hilbert_function(E, w)
            assert compatible_staircases(H) == (E,)

    def test_partition_of_enumeration(self):
        for w in (W11, Weight(2, -1), Weight(-1, -2)):
            for l in range(1, 13):
                groups = {}
                for E in enumerate_staircases(l):
                    groups.setdefault(hilbert_function(E, w), []).append(E)
                assert sum(len(v) for v in groups.values()) == len(enumerate_staircases(l))
                for H, members in groups.items():
                    assert list(compatible_staircases(H)) == sorted(
                        members, key=lambda E: E.columns
                    )

    def test_positive_product_classes_are_points(self):
        for w in (Weight(-1, -2), Weight(-2, -3)):
            for l in range(1, 13):
                groups = {}
                for E in enumerate_staircases(l):
                    groups.setdefault(hilbert_function(E, w), []).append(E)
                assert all(len(v) == 1 for v in groups.values())


class TestSProfile:
    def test_examples(self):
        assert s_profile(construct_staircase([1, 1]), W11).counts == (1, 2, 2)
        assert s_profile(construct_staircase([2]), W11).counts == (1, 1, 2)
        assert s_profile(construct_staircase([1]), W11).counts == (1,)

    def test_regime_rejected(self):
        with pytest.raises(DomainError):
            s_profile(construct_staircase([1]), Weight(0, -1))
        with pytest.raises(DomainError):
            s_profile(construct_staircase([1]), Weight(-1, -2))

    def test_sequence_is_sorted(self):
        w = Weight(2, -3)
        seq = []
        gen = monomial_sequence(w)
        for _ in range(40):
            seq.append(next(gen))
        keys = [(w.degree(m), m.beta) for m in seq]
        assert keys == sorted(keys)
        assert len(set(seq)) == len(seq)

    def test_monotone_under_cell_insertion(self):
        # Adding one cell changes every cumulative count by 0 or 1.
        for l in range(1, 8):
            for E in enumerate_staircases(l):
                for F in enumerate_staircases(l + 1):
                    if not set(E.cells()) <= set(F.cells()):
                        continue
                    pe, pf = s_profile(E, W11), s_profile(F, W11)
                    horizon = max(pe.stabilization_index, pf.stabilization_index)
                    assert all(
                        pf.value(k) - pe.value(k) in (0, 1) for k in range(horizon + 1)
                    )


class TestCompare:
    def test_examples(self):
        E, F = construct_staircase([1, 1]), construct_staircase([2])
        assert compare_staircases(E, F, W11) is Comparison.GREATER
        assert compare_staircases(F, E, W11) is Comparison.LESS
        assert compare_staircases(E, E, W11) is Comparison.EQUAL
        big = compare_staircases(
            construct_staircase([2, 1, 1]), construct_staircase([3, 1]), W11
        )
        assert big is Comparison.GREATER

    def test_cardinality_mismatch(self):
        with pytest.raises(DomainError):
            compare_staircases(construct_staircase([1]), construct_staircase([2]), W11)

    def test_partial_order_axioms(self):
        for l in range(2, 9):
            all_E = enumerate_staircases(l)
            table = {
                (E, F): compare_staircases(E, F, W11) for E in all_E for F in all_E
            }
            flipped = {
                Comparison.GREATER: Comparison.LESS,
                Comparison.LESS: Comparison.GREATER,
                Comparison.EQUAL: Comparison.EQUAL,
                Comparison.INCOMPARABLE: Comparison.INCOMPARABLE,
            }
            for (E, F), value in table.items():
                assert table[(F, E)] is flipped[value]
                if value is Comparison.EQUAL:
                    assert E == F
            for E in all_E:
                for F in all_E:
                    if table[(E, F)] is not Comparison.GREATER:
                        continue
                    for G in all_E:
                        if table[(F, G)] is Comparison.GREATER:
                            assert table[(E, G)] is Comparison.GREATER
