"""Frame-drop augmentation: random frame removal preserving order."""

from __future__ import annotations

import numpy as np

from .clips import MotionClip

DEFAULT_COPIES = 10
DEFAULT_DROP_FRACTION = 0.2


def framedrop_indices(raw_length: int, drop_fraction: float, seed: int, copy_index: int) -> np.ndarray:
    """Sorted surviving frame indices for one augmented copy.

    Each copy draws from an independent sub-stream keyed by (seed, copy_index),
    so copies are reproducible individually.
    """
    n_drop = int(round(drop_fraction * raw_length))
    if raw_length - n_drop < 1:
        raise ValueError(
            f"dropping {n_drop} of {raw_length} frames would leave an empty clip"
        )
    rng = np.random.default_rng([seed, copy_index])
    dropped = rng.choice(raw_length, size=n_drop, replace=False)
    keep = np.setdiff1d(np.arange(raw_length), dropped)
    return keep


def augment_framedrop(
    clip: MotionClip,
    drop_fraction: float = DEFAULT_DROP_FRACTION,
    copies: int = DEFAULT_COPIES,
    seed: int = 0,
) -> list[MotionClip]:
    """Make ``copies`` variants of a clip, each with a random frame subset removed.

    Survivor order is preserved; labels carry over. Deterministic given the seed.
    """
    if not (0 <= drop_fraction < 1):
        raise ValueError(f"drop_fraction must be in [0, 1), got {drop_fraction}")
    if copies < 1:
        raise ValueError(f"copies must be >= 1, got {copies}")
    if clip.raw_length < 2:
        raise ValueError(f"clip '{clip.name}' too short to augment (raw_length < 2)")

    live = clip.frames[: clip.raw_length]
    out = []
    for i in range(copies):
        keep = framedrop_indices(clip.raw_length, drop_fraction, seed, i)
        out.append(
            MotionClip(
                frames=live[keep].copy(),
                label=clip.label,
                spec=clip.spec,
                raw_length=len(keep),
                name=f"{clip.name}#aug{i}" if clip.name else f"aug{i}",
            )
        )
    return out
