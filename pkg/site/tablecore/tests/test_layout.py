"""Tests for layout normalization."""

import dataclasses
from collections import Counter

from django.core.exceptions import ValidationError
from django.test import SimpleTestCase

from tablecore import (HORIZONTAL, VERTICAL, Cell, RawTable,
                       expand_merged_cells, normalize_orientation)


def texts(grid):
    return [[c.text for c in row] for row in grid]


class ExpandMergedCellsTest(SimpleTestCase):
    """Test merged cell substitution."""

    def test_unit_spans(self):
        """Test a grid without merged cells."""
        grid = ((Cell('a'), Cell('b')), (Cell('c'), Cell('d')))
        self.assertEqual(expand_merged_cells(grid), grid)

    def test_row_span(self):
        """A cell spanning three rows fills its column in three rows."""
        grid = ((Cell('x', row_span=3), Cell('1')), (Cell('2'),),
                (Cell('3'),))
        self.assertEqual(texts(expand_merged_cells(grid)),
                         [['x', '1'], ['x', '2'], ['x', '3']])

    def test_mixed_columns(self):
        """Test a cell spanning two rows."""
        grid = ((Cell('a', row_span=2), Cell('b')), (Cell('c'),))
        expanded = expand_merged_cells(grid)
        self.assertEqual(texts(expanded), [['a', 'b'], ['a', 'c']])
        for row in expanded:
            for cell in row:
                self.assertEqual(cell.row_span, 1)

    def test_col_span(self):
        """Column spans are duplicated horizontally."""
        grid = ((Cell('h', col_span=2),), (Cell('a'), Cell('b')))
        self.assertEqual(texts(expand_merged_cells(grid)),
                         [['h', 'h'], ['a', 'b']])

    def test_ragged_rows(self):
        """Missing trailing cells are filled to keep the grid rectangular."""
        grid = ((Cell('a'), Cell('b')), (Cell('c'),))
        self.assertEqual(texts(expand_merged_cells(grid)),
                         [['a', 'b'], ['c', '']])

    def test_span_overflow(self):
        """The error names the offending cell position."""
        grid = ((Cell('a'),), (Cell('b', row_span=3),))
        with self.assertRaises(ValidationError) as ctx:
            expand_merged_cells(grid)
        self.assertEqual(ctx.exception.code, 'span')
        self.assertEqual(ctx.exception.params['row'], 1)
        self.assertEqual(ctx.exception.params['col'], 0)

    def test_invalid_span(self):
        """Check that a zero span is rejected."""
        with self.assertRaises(ValidationError):
            Cell('a', row_span=0)

    def test_column_multisets(self):
        """Texts per column are preserved with span multiplicity."""
        grid = ((Cell('a', row_span=2), Cell('b'), Cell('c', row_span=3)),
                (Cell('d'),),
                (Cell('e'), Cell('f')))
        expanded = expand_merged_cells(grid)
        self.assertEqual(Counter(r[0].text for r in expanded),
                         Counter({'a': 2, 'e': 1}))
        self.assertEqual(Counter(r[1].text for r in expanded),
                         Counter({'b': 1, 'd': 1, 'f': 1}))
        self.assertEqual(Counter(r[2].text for r in expanded),
                         Counter({'c': 3}))


class NormalizeOrientationTest(SimpleTestCase):
    """Test rotation of vertical tables."""

    def setUp(self):
        self.grid = ((Cell('a'), Cell('b'), Cell('c')),
                     (Cell('d'), Cell('e'), Cell('f')))

    def test_horizontal_identity(self):
        """Check that horizontal tables are left unchanged."""
        table = RawTable('t1', 'cap', HORIZONTAL, self.grid)
        self.assertIs(normalize_orientation(table), table)
        self.assertEqual(normalize_orientation(normalize_orientation(table)),
                         table)

    def test_vertical(self):
        """Test the transposition of a vertical table."""
        table = RawTable('t1', 'cap', VERTICAL, self.grid)
        rotated = normalize_orientation(table)
        self.assertEqual(rotated.orientation, HORIZONTAL)
        self.assertEqual(texts(rotated.grid),
                         [['a', 'd'], ['b', 'e'], ['c', 'f']])

    def test_involution(self):
        """Check that transposing twice gives the original grid."""
        table = RawTable('t1', 'cap', VERTICAL, self.grid)
        once = dataclasses.replace(normalize_orientation(table),
                                   orientation=VERTICAL)
        twice = normalize_orientation(once)
        self.assertEqual(twice.grid, self.grid)
