"""Convolutional motion-sequence encoder.

Input is a padded clip laid out time-major with joint_count*3 channels.
Five pre-activation blocks (BatchNorm -> ReLU -> temporal Conv1d) with
channel/kernel/stride triples scaled off the embedding width, then global
average pooling over time.
"""

from __future__ import annotations

import torch
from torch import Tensor, nn

from ..config import EMBEDDER_KERNELS, EMBEDDER_STRIDES, ModelConfig


class MotionEmbedder(nn.Module):
    def __init__(self, frame_dim: int, config: ModelConfig):
        super().__init__()
        self.frame_dim = frame_dim
        self.embed_dim = config.embed_dim
        channels = config.embedder_channels
        blocks = []
        in_ch = frame_dim
        for out_ch, kernel, stride in zip(channels, EMBEDDER_KERNELS, EMBEDDER_STRIDES):
            blocks.append(
                nn.Sequential(
                    nn.BatchNorm1d(in_ch),
                    nn.ReLU(),
                    nn.Conv1d(in_ch, out_ch, kernel, stride=stride, padding=kernel // 2),
                )
            )
            in_ch = out_ch
        self.blocks = nn.ModuleList(blocks)

    def forward(self, x: Tensor) -> Tensor:
        """(batch, frame_dim, n_frames) -> (batch, embed_dim)."""
        if x.shape[1] != self.frame_dim:
            raise ValueError(f"expected {self.frame_dim} input channels, got {x.shape[1]}")
        for block in self.blocks:
            x = block(x)
        return x.mean(dim=-1)


def conv_output_length(n_frames: int) -> int:
    """Temporal length after the five conv blocks, before pooling."""
    n = n_frames
    for kernel, stride in zip(EMBEDDER_KERNELS, EMBEDDER_STRIDES):
        n = (n + 2 * (kernel // 2) - kernel) // stride + 1
    return n
