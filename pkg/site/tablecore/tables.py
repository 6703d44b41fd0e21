"""Table types."""

from dataclasses import dataclass, field

import numpy as np
from django.core.exceptions import ImproperlyConfigured, ValidationError
from django.utils.translation import gettext_lazy as _

HORIZONTAL = 'horizontal'
VERTICAL = 'vertical'

PAD_ID = 0
UNK_ID = 1


@dataclass(frozen=True)
class Cell(object):
    """A table cell.

    A merged cell appears once in its source grid and covers ``row_span``
    rows and ``col_span`` columns.
    """
    text: str
    row_span: int = 1
    col_span: int = 1

    def __post_init__(self):
        if self.row_span < 1 or self.col_span < 1:
            raise ValidationError(_('Cell spans must be positive.'),
                                  code='span')


@dataclass(frozen=True)
class RawTable(object):
    """A table as a grid of cells with its caption.

    ``grid`` is a tuple of rows, each a tuple of ``Cell``. Header cells
    live in row 0 of horizontal tables and column 0 of vertical ones.
    """
    id: str
    caption: str = ''
    orientation: str = HORIZONTAL
    grid: tuple = ()
    has_header_row: bool = True

    @property
    def n_rows(self):
        return len(self.grid)

    @property
    def n_cols(self):
        return max((len(row) for row in self.grid), default=0)

    def columns(self):
        """Return the cell texts column by column."""
        return [[row[j].text for row in self.grid if j < len(row)]
                for j in range(self.n_cols)]


@dataclass(frozen=True)
class ShapeConfig(object):
    """Fixed encoding sizes: rows, columns, tokens per cell and caption."""
    n_rows: int = 9
    n_cols: int = 9
    tokens_per_cell: int = 4
    tokens_per_caption: int = 12

    def __post_init__(self):
        for name in ('n_rows', 'n_cols', 'tokens_per_cell',
                     'tokens_per_caption'):
            if int(getattr(self, name)) < 1:
                raise ImproperlyConfigured(
                    'shape.{0} must be a positive integer'.format(name))

    @property
    def content_shape(self):
        return (self.n_rows, self.n_cols, self.tokens_per_cell)


@dataclass(eq=False)
class EncodedTable(object):
    """Integer ids of a table's caption and content."""
    caption_ids: np.ndarray = field(repr=False)
    content_ids: np.ndarray = field(repr=False)
    table_id: str = ''
