"""Loss functions for the embedder and the generator.

All distances are mean absolute differences so margins and thresholds are
independent of the embedding or frame dimension.
"""

from __future__ import annotations

import warnings

import torch
from torch import Tensor

DEFAULT_MARGIN = 0.05
DEFAULT_TOKEN_THRESHOLD = 0.01
EMA_DECAY = 0.9

# Count of batches that contained no usable (anchor, positive, negative).
ZERO_TRIPLET_BATCHES = 0


def pairwise_mean_l1(embeddings: Tensor) -> Tensor:
    """(B, D) -> (B, B) matrix of mean absolute coordinate differences."""
    return (embeddings.unsqueeze(1) - embeddings.unsqueeze(0)).abs().mean(dim=-1)


def triplet_loss(embeddings: Tensor, labels: Tensor, margin: float = DEFAULT_MARGIN) -> Tensor:
    """Hinge loss over all valid in-batch triplets, zero-loss triplets included.

    A triplet is valid when anchor and positive share a label (and are
    different samples) while the negative has a different label. Batches with
    no valid triplet yield 0 and bump the module's warning counter.
    """
    global ZERO_TRIPLET_BATCHES
    if embeddings.ndim != 2:
        raise ValueError(f"embeddings must be (batch, dim), got {tuple(embeddings.shape)}")
    n = embeddings.shape[0]
    labels = labels.reshape(n)

    dist = pairwise_mean_l1(embeddings)
    same = labels.unsqueeze(0) == labels.unsqueeze(1)
    pos_mask = same & ~torch.eye(n, dtype=torch.bool, device=embeddings.device)
    neg_mask = ~same

    valid = pos_mask.unsqueeze(2) & neg_mask.unsqueeze(1)  # (anchor, pos, neg)
    n_valid = int(valid.sum())
    if n_valid == 0:
        ZERO_TRIPLET_BATCHES += 1
        warnings.warn("batch contained no valid triplet; triplet loss set to 0")
        return embeddings.sum() * 0.0

    hinge = torch.clamp(dist.unsqueeze(2) - dist.unsqueeze(1) + margin, min=0.0)
    return hinge[valid].mean()


def first_frame_loss(gen_frames: Tensor, target_frames: Tensor) -> Tensor:
    """Mean absolute error on frame 0, averaged over the batch."""
    return (gen_frames[:, 0] - target_frames[:, 0]).abs().mean()


def reconstruction_loss(gen_frames: Tensor, target_frames: Tensor, raw_lengths: Tensor) -> Tensor:
    """Masked frame reconstruction: only the raw (unpadded) frames count.

    Per clip, the per-frame mean absolute error is averaged over frames
    0..raw_length-1; the result is averaged over the batch.
    """
    if gen_frames.shape != target_frames.shape:
        raise ValueError(
            f"shape mismatch: {tuple(gen_frames.shape)} vs {tuple(target_frames.shape)}"
        )
    b, n, _ = gen_frames.shape
    per_frame = (gen_frames - target_frames).abs().mean(dim=-1)  # (B, N)
    mask = torch.arange(n, device=gen_frames.device).unsqueeze(0) < raw_lengths.unsqueeze(1)
    per_clip = (per_frame * mask).sum(dim=1) / raw_lengths.to(per_frame.dtype)
    return per_clip.mean()


def token_loss(pred_tokens: Tensor, target_tokens: Tensor) -> Tensor:
    """Mean absolute token error over indices 1..N-1 (frame 0 is unsupervised)."""
    if pred_tokens.shape != target_tokens.shape:
        raise ValueError(
            f"token length mismatch: {tuple(pred_tokens.shape)} vs {tuple(target_tokens.shape)}"
        )
    if pred_tokens.shape[-1] < 2:
        raise ValueError("token sequences must have at least 2 entries")
    return (pred_tokens[..., 1:] - target_tokens[..., 1:]).abs().mean()


def fake_embedding_loss(fake_embeddings: Tensor, v: Tensor) -> Tensor:
    """Mean absolute error between the embedder's reading of generated motion
    and the conditioning vector."""
    if fake_embeddings.shape != v.shape:
        raise ValueError(
            f"embedding shape mismatch: {tuple(fake_embeddings.shape)} vs {tuple(v.shape)}"
        )
    return (fake_embeddings - v).abs().mean()


def combined_loss(
    l_first: Tensor,
    l_recon: Tensor,
    l_token: Tensor,
    l_fake: Tensor,
    token_loss_running: float,
    threshold: float = DEFAULT_TOKEN_THRESHOLD,
) -> Tensor:
    """Two-phase total: token term while the running token loss exceeds the
    threshold, fake-embedding term once it has converged (<= threshold)."""
    if threshold <= 0:
        raise ValueError(f"threshold must be positive, got {threshold}")
    if token_loss_running > threshold:
        return l_first + l_recon + l_token
    return l_first + l_recon + l_fake


class TokenLossSchedule:
    """Tracks an EMA of the token loss and latches the loss-branch switch.

    The EMA (decay 0.9) smooths the raw per-epoch token loss; once it dips to
    the threshold the fake-embedding branch activates and stays active for the
    rest of training, so the branch cannot oscillate at the boundary.
    """

    def __init__(self, threshold: float = DEFAULT_TOKEN_THRESHOLD, decay: float = EMA_DECAY):
        if threshold <= 0:
            raise ValueError(f"threshold must be positive, got {threshold}")
        self.threshold = threshold
        self.decay = decay
        self.ema: float | None = None
        self.switched = False
        self.switch_epoch: int | None = None
        self._updates = 0

    def update(self, token_loss_value: float) -> None:
        if self.ema is None:
            self.ema = float(token_loss_value)
        else:
            self.ema = self.decay * self.ema + (1.0 - self.decay) * float(token_loss_value)
        if not self.switched and self.ema <= self.threshold:
            self.switched = True
            self.switch_epoch = self._updates
        self._updates += 1

    @property
    def running(self) -> float:
        """Value fed to combined_loss: the EMA, pinned at/below the threshold
        once the switch has latched."""
        if self.switched:
            return min(self.ema if self.ema is not None else 0.0, self.threshold)
        return self.ema if self.ema is not None else float("inf")
