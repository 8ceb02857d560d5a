"""Freeze-padding to a fixed frame count, with stop-token targets."""

from __future__ import annotations

import numpy as np

from ..errors import LengthOverflowError
from .clips import MotionClip


def token_targets(raw_length: int, n_frames: int) -> np.ndarray:
    """Stop-token target sequence: 0 for live frames, 1 for frozen padding."""
    if not (1 <= raw_length <= n_frames):
        raise ValueError(f"raw_length {raw_length} outside [1, {n_frames}]")
    tokens = np.zeros(n_frames, dtype=np.float32)
    tokens[raw_length:] = 1.0
    return tokens


def pad_freeze(clip: MotionClip, max_frames: int) -> tuple[MotionClip, np.ndarray]:
    """Extend a clip to ``max_frames`` by repeating its last live frame.

    Returns the padded clip and its token target sequence. Frames past
    ``raw_length`` all equal frame ``raw_length - 1``; the clip keeps its
    original ``raw_length``.
    """
    length = clip.raw_length
    if length > max_frames:
        raise LengthOverflowError(
            f"clip '{clip.name}' has raw_length {length} > max_frames {max_frames}"
        )
    live = clip.frames[:length]
    if length == max_frames:
        frames = live.copy()
    else:
        tail = np.repeat(live[-1][np.newaxis], max_frames - length, axis=0)
        frames = np.concatenate([live, tail], axis=0)
    padded = MotionClip(
        frames=frames,
        label=clip.label,
        spec=clip.spec,
        raw_length=length,
        name=clip.name,
    )
    return padded, token_targets(length, max_frames)
