"""Building blocks of the table encoders."""

from neurallayers.attention import SelfAttention, self_attention
from neurallayers.base import Layer, glorot_uniform
from neurallayers.embedding import Embedding, embed
from neurallayers.encoders import (ATTENTION, SEQUENCE, VARIANTS,
                                   CaptionEncoder, TabularEncoder,
                                   encode_caption, encode_cell,
                                   encode_column, encode_content,
                                   encode_tabular)
from neurallayers.mlp import Mlp, mlp_reduce
from neurallayers.recurrent import BiLstm, Lstm, bilstm_encode
