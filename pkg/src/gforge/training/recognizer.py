"""Cross-entropy training of the recognition network on real clips."""

from __future__ import annotations

import numpy as np
import torch
import torch.nn.functional as F

from ..config import ModelConfig
from ..data.augment import DEFAULT_COPIES, DEFAULT_DROP_FRACTION
from ..data.clips import DatasetSplit, MotionClip
from ..models.recognizer import MotionRecognizer
from .prep import augmented_pool, batch_indices, clips_to_tensors, to_channels_first


def train_recognizer(
    split: DatasetSplit,
    num_classes: int,
    config: ModelConfig,
    copies: int = DEFAULT_COPIES,
    drop_fraction: float = DEFAULT_DROP_FRACTION,
) -> tuple[MotionRecognizer, list[dict]]:
    """Train on the augmented real train split; returns (model, log)."""
    if not split.train:
        raise ValueError("empty training split")
    pool = augmented_pool(split.train, copies, drop_fraction, seed=config.seed)
    frames, _, _, labels = clips_to_tensors(pool, config.max_frames)
    inputs = to_channels_first(frames)

    torch.manual_seed(config.seed)
    model = MotionRecognizer(inputs.shape[1], num_classes, config)
    opt = torch.optim.Adam(model.parameters(), lr=config.lr)

    log = []
    model.train()
    for epoch in range(config.epochs):
        losses, hits, seen = [], 0, 0
        for idx in batch_indices(len(pool), config.batch_size, config.seed, epoch):
            batch = torch.from_numpy(np.asarray(idx))
            logits = model(inputs[batch])
            loss = F.cross_entropy(logits, labels[batch])
            opt.zero_grad()
            loss.backward()
            opt.step()
            losses.append(float(loss))
            hits += int((logits.argmax(dim=1) == labels[batch]).sum())
            seen += len(idx)
        log.append(
            {"epoch": epoch, "ce_loss": float(np.mean(losses)), "train_acc": hits / seen}
        )
    model.eval()
    model.trained = True
    return model, log


@torch.no_grad()
def predict_labels(
    model: MotionRecognizer,
    clips: list[MotionClip],
    max_frames: int,
    batch_size: int = 64,
) -> np.ndarray:
    """Predicted label ids for a clip list (eval mode, long clips truncated)."""
    if not model.trained:
        raise ValueError("recognizer has not been trained")
    model.eval()
    frames, _, _, _ = clips_to_tensors(clips, max_frames, truncate=True)
    inputs = to_channels_first(frames)
    preds = []
    for i in range(0, len(clips), batch_size):
        logits = model(inputs[i : i + batch_size])
        preds.append(logits.argmax(dim=1).numpy())
    return np.concatenate(preds)
