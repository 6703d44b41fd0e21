"""Caption and tabular content encoders."""

from neurallayers.attention import SelfAttention, self_attention
from neurallayers.base import Layer
from neurallayers.embedding import embed
from neurallayers.mlp import Mlp, mlp_reduce
from neurallayers.recurrent import BiLstm, bilstm_encode
from tensorcore import ShapeError, reshape, transpose

ATTENTION = 'attention'
SEQUENCE = 'sequence_L'
VARIANTS = (ATTENTION, SEQUENCE)


class CaptionEncoder(Layer):
    """A Bi-LSTM over the embedded caption tokens."""

    def __init__(self, embedding_dim, hidden_size, rng):
        self.bilstm = BiLstm(embedding_dim, hidden_size, rng)

    @property
    def output_size(self):
        return self.bilstm.output_size


def encode_caption(caption_ids, embedding, encoder):
    """Encode ``batch x |T_c|`` caption ids into ``batch x 2h`` vectors."""
    return bilstm_encode(embed(caption_ids, embedding), encoder.bilstm)


class TabularEncoder(Layer):
    """Cell, column and table stages shared by every cell and column.

    The ``attention`` variant reweights the cells of a column and the
    columns of a table with self-attention before concatenating them into
    an MLP. The ``sequence_L`` variant reads cells and columns as
    sequences with Bi-LSTMs instead.
    """

    def __init__(self, shape, embedding_dim, hidden_size, mlp_size, rng,
                 variant=ATTENTION):
        if variant not in VARIANTS:
            raise ValueError('Unknown tabular variant: {0}'.format(variant))
        self.variant = variant
        self.shape = shape
        self.cell_bilstm = BiLstm(embedding_dim, hidden_size, rng)
        cell_size = self.cell_bilstm.output_size
        if variant == ATTENTION:
            self.column_attention = SelfAttention(cell_size, rng)
            self.column_mlp = Mlp(shape.n_rows * cell_size, mlp_size, rng)
            self.table_attention = SelfAttention(mlp_size, rng)
            self.table_mlp = Mlp(shape.n_cols * mlp_size, mlp_size, rng)
        else:
            self.column_bilstm = BiLstm(cell_size, hidden_size, rng)
            self.table_bilstm = BiLstm(cell_size, hidden_size, rng)
            self.table_mlp = Mlp(self.table_bilstm.output_size, mlp_size,
                                 rng)

    @property
    def output_size(self):
        return self.table_mlp.weight.shape[1]


def encode_cell(cell_ids, embedding, encoder):
    """Encode ``... x |T_u|`` token ids into ``... x 2h`` cell vectors."""
    lead = cell_ids.shape[:-1]
    flat = cell_ids.reshape((-1, cell_ids.shape[-1]))
    vectors = bilstm_encode(embed(flat, embedding), encoder.cell_bilstm)
    return reshape(vectors, lead + (vectors.shape[-1],))


def encode_column(cells, encoder):
    """Encode ``... x N x 2h`` cell vectors into one vector per column."""
    if cells.shape[-2] != encoder.shape.n_rows:
        raise ShapeError('encode_column', cells.shape)
    if encoder.variant == SEQUENCE:
        lead = cells.shape[:-2]
        flat = reshape(cells, (-1,) + cells.shape[-2:])
        column = bilstm_encode(flat, encoder.column_bilstm)
        return reshape(column, lead + (column.shape[-1],))
    attended = self_attention(cells, encoder.column_attention)
    lead = cells.shape[:-2]
    joined = reshape(attended, lead + (cells.shape[-2] * cells.shape[-1],))
    return mlp_reduce(joined, encoder.column_mlp)


def encode_tabular(cells, encoder):
    """Encode a ``batch x N x M x 2h`` grid of cell vectors."""
    n, m = encoder.shape.n_rows, encoder.shape.n_cols
    if cells.value.ndim != 4 or cells.shape[1:3] != (n, m):
        raise ShapeError('encode_tabular', cells.shape, (n, m))
    batch = cells.shape[0]
    columns = encode_column(transpose(cells, (0, 2, 1, 3)), encoder)
    if encoder.variant == SEQUENCE:
        table = bilstm_encode(columns, encoder.table_bilstm)
    else:
        attended = self_attention(columns, encoder.table_attention)
        table = reshape(attended, (batch, m * columns.shape[-1]))
    return mlp_reduce(table, encoder.table_mlp)


def encode_content(content_ids, embedding, encoder):
    """Encode ``batch x N x M x |T_u|`` content ids into table vectors."""
    return encode_tabular(encode_cell(content_ids, embedding, encoder),
                          encoder)
