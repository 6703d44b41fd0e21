"""The Siamese table similarity network."""

from siamese.checkpoint import (MAGIC, VERSION, dumps_checkpoint,
                                load_checkpoint, loads_checkpoint,
                                save_checkpoint)
from siamese.loss import classify, contrastive_loss
from siamese.model import (ModelConfig, TabSimModel, build_model, distance,
                           encode_batch, represent, vector_distance)
from siamese.ranking import TableVectors, rank_candidates
from siamese.training import TrainConfig, batch_loss, train
