"""Triplet-loss pretraining of the motion embedder."""

from __future__ import annotations

import numpy as np
import torch

from ..config import ModelConfig
from ..data.augment import DEFAULT_COPIES, DEFAULT_DROP_FRACTION
from ..data.clips import DatasetSplit, MotionClip
from ..models.embedder import MotionEmbedder
from .losses import triplet_loss
from .prep import augmented_pool, batch_indices, clips_to_tensors, to_channels_first


def train_embedder(
    split: DatasetSplit,
    config: ModelConfig,
    copies: int = DEFAULT_COPIES,
    drop_fraction: float = DEFAULT_DROP_FRACTION,
) -> tuple[MotionEmbedder, list[dict]]:
    """Train the embedder on the augmented train split; returns (model, log)."""
    if not split.train:
        raise ValueError("empty training split")
    if len({c.label.id for c in split.train}) < 2:
        raise ValueError("triplet training needs at least 2 classes")

    pool = augmented_pool(split.train, copies, drop_fraction, seed=config.seed)
    frames, _, _, labels = clips_to_tensors(pool, config.max_frames)
    inputs = to_channels_first(frames)

    torch.manual_seed(config.seed)
    frame_dim = inputs.shape[1]
    model = MotionEmbedder(frame_dim, config)
    opt = torch.optim.Adam(model.parameters(), lr=config.lr)

    log = []
    model.train()
    for epoch in range(config.epochs):
        losses = []
        for idx in batch_indices(len(pool), config.batch_size, config.seed, epoch):
            batch = torch.from_numpy(np.asarray(idx))
            emb = model(inputs[batch])
            loss = triplet_loss(emb, labels[batch], margin=config.margin)
            opt.zero_grad()
            loss.backward()
            opt.step()
            losses.append(float(loss))
        log.append({"epoch": epoch, "triplet_loss": float(np.mean(losses))})
    model.eval()
    return model, log


@torch.no_grad()
def embed_clips(
    model: MotionEmbedder,
    clips: list[MotionClip],
    max_frames: int,
    batch_size: int = 64,
) -> np.ndarray:
    """Eval-mode embeddings (n_clips, embed_dim); long clips are truncated."""
    model.eval()
    frames, _, _, _ = clips_to_tensors(clips, max_frames, truncate=True)
    inputs = to_channels_first(frames)
    chunks = [
        model(inputs[i : i + batch_size]) for i in range(0, len(clips), batch_size)
    ]
    return torch.cat(chunks).numpy().astype(np.float32)


def class_mean_embedding(
    model: MotionEmbedder,
    clips: list[MotionClip],
    label_id: int,
    max_frames: int,
) -> np.ndarray:
    """Arithmetic mean embedding over the clips carrying ``label_id``."""
    selected = [c for c in clips if c.label.id == label_id]
    if not selected:
        raise ValueError(f"no clip with label id {label_id}")
    return embed_clips(model, selected, max_frames).mean(axis=0)
