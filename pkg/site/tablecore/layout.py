"""Layout normalization: merged cells and orientation."""

import dataclasses

from django.core.exceptions import ValidationError
from django.utils.translation import gettext_lazy as _

from tablecore.tables import HORIZONTAL, VERTICAL, Cell


def expand_merged_cells(grid):
    """Replace every merged cell by copies of itself with unit spans.

    Cells are placed row by row, skipping the positions that merged cells
    of previous rows already occupy. A cell spanning ``s`` rows is copied
    into ``s`` consecutive rows of its column, and likewise for columns.
    Positions left empty are filled with empty cells so that the result is
    rectangular.
    """
    n_rows = len(grid)
    placed = [dict() for _ in range(n_rows)]
    for i, row in enumerate(grid):
        j = 0
        for cell in row:
            while j in placed[i]:
                j += 1
            if i + cell.row_span > n_rows:
                raise ValidationError(
                    _('Cell at row %(row)s, column %(col)s spans %(span)s '
                      'rows but only %(left)s remain.'),
                    code='span',
                    params={'row': i, 'col': j, 'span': cell.row_span,
                            'left': n_rows - i})
            copy = Cell(cell.text)
            for di in range(cell.row_span):
                for dj in range(cell.col_span):
                    placed[i + di][j + dj] = copy
            j += cell.col_span
    width = max((max(cells) + 1 for cells in placed if cells), default=0)
    return tuple(tuple(cells.get(j, Cell('')) for j in range(width))
                 for cells in placed)


def transpose(grid):
    """Exchange rows and columns of a rectangular grid."""
    return tuple(zip(*grid)) if grid else ()


def normalize_orientation(table):
    """Return ``table`` in horizontal layout.

    Vertical tables are rotated so that their header column becomes the
    header row.
    """
    if table.orientation != VERTICAL:
        return table
    return dataclasses.replace(table, grid=transpose(table.grid),
                               orientation=HORIZONTAL)
