"""Skeleton-motion recognizer: embedder backbone plus a linear softmax head.

Stands in for an off-the-shelf recognition network when scoring generated
clips; trained on real data only.
"""

from __future__ import annotations

from torch import Tensor, nn

from ..config import ModelConfig
from .embedder import MotionEmbedder


class MotionRecognizer(nn.Module):
    def __init__(self, frame_dim: int, num_classes: int, config: ModelConfig):
        super().__init__()
        self.backbone = MotionEmbedder(frame_dim, config)
        self.head = nn.Linear(config.embed_dim, num_classes)
        self.num_classes = num_classes
        self.trained = False

    def forward(self, x: Tensor) -> Tensor:
        """(batch, frame_dim, n_frames) -> (batch, num_classes) logits."""
        return self.head(self.backbone(x))
