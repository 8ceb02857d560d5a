"""Clip batching helpers: augmentation, centering, padding, tensor layout."""

from __future__ import annotations

import numpy as np
import torch
from torch import Tensor

from ..data.augment import augment_framedrop
from ..data.clips import MotionClip, root_center
from ..data.padding import pad_freeze
from ..errors import LengthOverflowError


def clip_matrix(clip: MotionClip) -> np.ndarray:
    """Root-centered (n_frames, joint_count*3) float32 view of a clip."""
    frames = root_center(clip.frames)
    return frames.reshape(len(frames), -1)


def clips_to_tensors(
    clips: list[MotionClip],
    max_frames: int,
    truncate: bool = False,
) -> tuple[Tensor, Tensor, Tensor, Tensor]:
    """Stack clips into (frames, tokens, lengths, labels) training tensors.

    frames: (M, N, frame_dim); tokens: (M, N); lengths/labels: (M,).
    Clips longer than ``max_frames`` are rejected unless ``truncate`` is set
    (evaluation paths truncate; training fails fast).
    """
    if not clips:
        raise ValueError("no clips given")
    frames_out, tokens_out, lengths, labels = [], [], [], []
    too_long = [c.name for c in clips if c.raw_length > max_frames]
    if too_long and not truncate:
        raise LengthOverflowError(
            f"{len(too_long)} clip(s) exceed max_frames={max_frames}: "
            + ", ".join(too_long[:5])
        )
    for clip in clips:
        if clip.raw_length > max_frames:
            clip = MotionClip(
                frames=clip.frames[:max_frames],
                label=clip.label,
                spec=clip.spec,
                raw_length=max_frames,
                name=clip.name,
            )
        padded, tokens = pad_freeze(clip.truncated(), max_frames)
        frames_out.append(clip_matrix(padded))
        tokens_out.append(tokens)
        lengths.append(clip.raw_length if clip.raw_length <= max_frames else max_frames)
        labels.append(clip.label.id)
    return (
        torch.from_numpy(np.stack(frames_out)),
        torch.from_numpy(np.stack(tokens_out)),
        torch.tensor(lengths, dtype=torch.long),
        torch.tensor(labels, dtype=torch.long),
    )


def augmented_pool(
    clips: list[MotionClip],
    copies: int,
    drop_fraction: float,
    seed: int,
) -> list[MotionClip]:
    """Originals plus ``copies`` frame-drop variants of each clip."""
    pool = list(clips)
    if copies >= 1 and drop_fraction > 0:
        for idx, clip in enumerate(clips):
            pool.extend(augment_framedrop(clip, drop_fraction, copies, seed=seed + idx))
    return pool


def batch_indices(n: int, batch_size: int, seed: int, epoch: int) -> list[np.ndarray]:
    """Seeded shuffled mini-batch index lists for one epoch."""
    order = np.random.default_rng([seed, 7919, epoch]).permutation(n)
    return [order[i : i + batch_size] for i in range(0, n, batch_size)]


def to_channels_first(frames: Tensor) -> Tensor:
    """(M, N, frame_dim) -> (M, frame_dim, N) for the conv embedder."""
    return frames.transpose(1, 2).contiguous()
