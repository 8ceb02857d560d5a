from .embedder import class_mean_embedding, embed_clips, train_embedder
from .generator import train_generator
from .losses import (
    TokenLossSchedule,
    combined_loss,
    fake_embedding_loss,
    first_frame_loss,
    pairwise_mean_l1,
    reconstruction_loss,
    token_loss,
    triplet_loss,
)
from .prep import augmented_pool, batch_indices, clips_to_tensors, to_channels_first
from .recognizer import predict_labels, train_recognizer

__all__ = [
    "TokenLossSchedule",
    "augmented_pool",
    "batch_indices",
    "class_mean_embedding",
    "clips_to_tensors",
    "combined_loss",
    "embed_clips",
    "fake_embedding_loss",
    "first_frame_loss",
    "pairwise_mean_l1",
    "predict_labels",
    "reconstruction_loss",
    "to_channels_first",
    "token_loss",
    "train_embedder",
    "train_generator",
    "train_recognizer",
    "triplet_loss",
]
