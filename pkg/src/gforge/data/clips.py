"""Core motion data model: labels, clips, and dataset splits."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .skeletons import SkeletonSpec


@dataclass(frozen=True)
class GestureLabel:
    """Dense class id plus human-readable name."""

    id: int
    name: str

    def __post_init__(self):
        if self.id < 0:
            raise ValueError(f"label id must be non-negative, got {self.id}")


@dataclass
class MotionClip:
    """A (frames x joints x 3) trajectory with skeleton metadata.

    ``raw_length`` is the frame count before any freeze-padding; frames past it
    are padding copies of frame ``raw_length - 1``.
    """

    frames: np.ndarray
    label: GestureLabel
    spec: SkeletonSpec
    raw_length: int
    name: str = ""

    def __post_init__(self):
        self.frames = np.asarray(self.frames, dtype=np.float32)
        if self.frames.ndim != 3 or self.frames.shape[1:] != (self.spec.joint_count, 3):
            raise ValueError(
                f"clip '{self.name}': frames shaped {self.frames.shape}, "
                f"expected (n, {self.spec.joint_count}, 3)"
            )
        if not (1 <= self.raw_length <= len(self.frames)):
            raise ValueError(
                f"clip '{self.name}': raw_length {self.raw_length} outside "
                f"[1, {len(self.frames)}]"
            )
        if not np.isfinite(self.frames).all():
            raise ValueError(f"clip '{self.name}': non-finite coordinate")

    @property
    def n_frames(self) -> int:
        return len(self.frames)

    def truncated(self) -> "MotionClip":
        """Copy with any padding removed."""
        return MotionClip(
            frames=self.frames[: self.raw_length].copy(),
            label=self.label,
            spec=self.spec,
            raw_length=self.raw_length,
            name=self.name,
        )


@dataclass
class DatasetSplit:
    """Disjoint train/test clip lists plus the seed that produced the split."""

    train: list[MotionClip] = field(default_factory=list)
    test: list[MotionClip] = field(default_factory=list)
    seed: int = 0

    @property
    def all_clips(self) -> list[MotionClip]:
        return self.train + self.test

    def label_names(self) -> dict[int, str]:
        """Mapping label id -> name over every clip in the split."""
        out: dict[int, str] = {}
        for clip in self.all_clips:
            out[clip.label.id] = clip.label.name
        return out


def root_center(frames: np.ndarray) -> np.ndarray:
    """Translate a (n, joints, 3) trajectory so joint 0 of frame 0 is the origin.

    Applied before training and evaluation; storage keeps raw coordinates.
    """
    frames = np.asarray(frames, dtype=np.float32)
    return frames - frames[0, 0]


def root_center_clip(clip: MotionClip) -> MotionClip:
    return MotionClip(
        frames=root_center(clip.frames),
        label=clip.label,
        spec=clip.spec,
        raw_length=clip.raw_length,
        name=clip.name,
    )
