"""Lexical and embedding baselines of table similarity."""

from baselines.bags import (bag_of_words, caption_tokens, content_tokens,
                            jaccard, table_jaccard)
from baselines.features import pair_features, text_vector
from baselines.logistic import LrConfig, LrModel, lr_loss, lr_score, lr_train
from baselines.matching import hungarian_max_matching
from baselines.scores import DISTANCE, SIMILARITY, MethodScore
from baselines.tfidf import TfIdfModel, tfidf_fit, tfidf_vector
from baselines.vectors import (avg_embedding, column_vectors, cosine,
                               google_fusion_score, sum_embedding,
                               table_cosine)
