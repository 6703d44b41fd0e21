"""Table data model, tokenization, layout normalization and encoding."""

from tablecore.encoding import encode_table
from tablecore.layout import expand_merged_cells, normalize_orientation
from tablecore.tables import (HORIZONTAL, PAD_ID, UNK_ID, VERTICAL, Cell,
                              EncodedTable, RawTable, ShapeConfig)
from tablecore.text import PUNCTUATION, tokenize
