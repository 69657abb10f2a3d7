import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from keyscan.tableau import (
    DecreasingRow,
    EntryOutOfBound,
    NonDecreasingColumn,
    RaggedShape,
    ShapeMismatch,
    Tableau,
    TableauSyntaxError,
    conjugate,
    count_tableaux,
    entrywise_leq,
    enumerate_tableaux,
    format_tableau,
    is_shape,
    parse_tableau,
)
from keyscan.verify import shapes_up_to


def all_tableaux(max_boxes, n):
    for shape in shapes_up_to(max_boxes, n):
        yield from enumerate_tableaux(shape, n)


class TestValidation:
    def test_example_tableau(self, example_t):
        assert example_t.shape == (6, 4, 4, 3, 2)
        assert example_t.n == 9

    def test_single_cell(self):
        t = Tableau.from_rows([[1]])
        assert t.shape == (1,)

    def test_decreasing_row_rejected(self):
        with pytest.raises(DecreasingRow, match="row 1"):
            Tableau.from_rows([[2, 1], [3, 3]])

    def test_non_strict_column_rejected(self):
        with pytest.raises(NonDecreasingColumn):
            Tableau.from_rows([[1, 1], [1, 2]])

    def test_ragged_grid_rejected(self):
        with pytest.raises(RaggedShape):
            Tableau.from_rows([[1], [1, 2]])

    def test_entry_above_bound_rejected(self):
        with pytest.raises(EntryOutOfBound):
            Tableau.from_rows([[1, 5]], n=4)

    def test_empty_tableau_is_legal(self):
        t = Tableau((), 3)
        assert t.shape == ()
        assert t.weight() == (0, 0, 0)


class TestKeyPredicate:
    def test_example_right_key_is_key(self, example_key):
        assert example_key.is_key()

    def test_example_t_is_not_key(self, example_t):
        assert not example_t.is_key()

    def test_single_column_is_key(self):
        assert Tableau(((1, 3, 4),), 5).is_key()


class TestEntrywiseOrder:
    def test_example_t_below_its_key(self, example_t, example_key):
        assert entrywise_leq(example_t, example_key)
        assert not entrywise_leq(example_key, example_t)

    def test_reflexive(self, example_t):
        assert entrywise_leq(example_t, example_t)

    def test_shape_mismatch(self, example_t):
        with pytest.raises(ShapeMismatch):
            entrywise_leq(example_t, Tableau(((1,),), 9))

    def test_partial_order_on_small_shape(self):
        ts = list(enumerate_tableaux((2, 1), 3))
        for a in ts:
            for b in ts:
                ab = entrywise_leq(a, b)
                if ab and entrywise_leq(b, a):
                    assert a == b  # antisymmetry
                for c in ts:
                    if ab and entrywise_leq(b, c):
                        assert entrywise_leq(a, c)  # transitivity


class TestWeight:
    def test_example_weight(self, example_t):
        assert example_t.weight() == (2, 1, 2, 2, 3, 2, 3, 2, 2)

    def test_full_column(self):
        t = Tableau((tuple(range(1, 4)),), 3)
        assert t.weight() == (1, 1, 1)


class TestComplement:
    def test_self_complementary_column(self):
        t = Tableau(((1, 2),), 2)
        assert t.complement() == t

    def test_gap_column(self):
        t = Tableau(((1, 3),), 3)
        assert t.complement() == t

    def test_two_column_example(self):
        t = Tableau.from_rows([[1, 1], [2]], n=2)
        assert t.complement() == Tableau.from_rows([[1, 2], [2]], n=2)

    def test_involution_where_defined(self):
        from keyscan.tableau import TableauError

        defined = 0
        for t in all_tableaux(5, 4):
            try:
                c = t.complement()
            except TableauError:
                continue
            defined += 1
            assert c.complement() == t
            assert c.shape == t.shape
        assert defined > 0


class TestTextFormat:
    def test_round_trip_example(self, example_t):
        assert parse_tableau(format_tableau(example_t)) == example_t

    def test_round_trip_small(self):
        t = parse_tableau("1 1\n2\n")
        assert t.shape == (2, 1)
        assert parse_tableau(format_tableau(t)) == t

    def test_header_sets_bound(self):
        t = parse_tableau("n=7\n1 2\n")
        assert t.n == 7

    def test_nonpositive_entry_rejected(self):
        with pytest.raises(TableauSyntaxError, match="line 1"):
            parse_tableau("1 0\n")

    def test_junk_rejected(self):
        with pytest.raises(TableauSyntaxError, match="column 2"):
            parse_tableau("1 x\n")

    @settings(max_examples=60, deadline=None)
    @given(st.data())
    def test_round_trip_random(self, data):
        shapes = list(shapes_up_to(5, 4))
        shape = data.draw(st.sampled_from(shapes))
        ts = list(enumerate_tableaux(shape, 4))
        t = data.draw(st.sampled_from(ts))
        assert parse_tableau(format_tableau(t)) == t


class TestEnumeration:
    def test_two_boxes_one_row(self):
        ts = list(enumerate_tableaux((1, 1), 2))
        assert [t.rows() for t in ts] == [[[1, 1]], [[1, 2]], [[2, 2]]]

    def test_full_column_forced(self):
        ts = list(enumerate_tableaux((2,), 2))
        assert len(ts) == 1
        assert ts[0].columns == ((1, 2),)

    def test_single_box(self):
        assert len(list(enumerate_tableaux((1,), 3))) == 3

    def test_no_duplicates_and_lex_order(self):
        ts = list(enumerate_tableaux((2, 2, 1), 4))
        words = [sum(t.columns, ()) for t in ts]
        assert words == sorted(words)
        assert len(set(words)) == len(words)

    def test_counts_match_dp_oracle(self):
        for shape in shapes_up_to(8, 6):
            for n in range(1, 7):
                assert len(list(enumerate_tableaux(shape, n))) == count_tableaux(
                    shape, n
                ), (shape, n)


def test_conjugate():
    assert conjugate((6, 4, 4, 3, 2)) == (5, 5, 4, 3, 1, 1)
    assert conjugate(conjugate((6, 4, 4, 3, 2))) == (6, 4, 4, 3, 2)
    assert conjugate(()) == ()


def test_is_shape():
    assert is_shape((3, 3, 1))
    assert not is_shape((1, 2))
    assert not is_shape((2, 0))
