"""Skeleton layouts: joint naming, frame rates, and bone connectivity."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class SkeletonSpec:
    """Static description of a skeleton: joint count, names, and capture rate."""

    joint_count: int
    joint_names: tuple[str, ...]
    fps: int

    def __post_init__(self):
        if self.joint_count <= 0:
            raise ValueError(f"joint_count must be positive, got {self.joint_count}")
        if len(self.joint_names) != self.joint_count:
            raise ValueError(
                f"joint_count={self.joint_count} but {len(self.joint_names)} joint names given"
            )
        if self.fps <= 0:
            raise ValueError(f"fps must be positive, got {self.fps}")

    @property
    def frame_dim(self) -> int:
        """Flattened per-frame coordinate count (joints x 3)."""
        return self.joint_count * 3


_NATIVE_JOINT_NAMES = (
    "pelvis", "spine", "chest", "neck", "head",
    "l_shoulder", "l_elbow", "l_wrist", "l_hand",
    "r_shoulder", "r_elbow", "r_wrist", "r_hand",
    "l_hip", "l_knee", "l_ankle", "l_foot",
    "r_hip", "r_knee", "r_ankle", "r_foot",
)

# 21-joint mocap layout at 60 fps, used by the synthetic dataset.
NATIVE_21 = SkeletonSpec(joint_count=21, joint_names=_NATIVE_JOINT_NAMES, fps=60)

NATIVE_BONES = (
    (0, 1), (1, 2), (2, 3), (3, 4),
    (2, 5), (5, 6), (6, 7), (7, 8),
    (2, 9), (9, 10), (10, 11), (11, 12),
    (0, 13), (13, 14), (14, 15), (15, 16),
    (0, 17), (17, 18), (18, 19), (19, 20),
)

_NTU_JOINT_NAMES = (
    "spine_base", "spine_mid", "neck", "head",
    "l_shoulder", "l_elbow", "l_wrist", "l_hand",
    "r_shoulder", "r_elbow", "r_wrist", "r_hand",
    "l_hip", "l_knee", "l_ankle", "l_foot",
    "r_hip", "r_knee", "r_ankle", "r_foot",
    "spine_shoulder", "l_hand_tip", "l_thumb", "r_hand_tip", "r_thumb",
)

# Kinect v2 25-joint layout used by NTU-RGB+D .skeleton files (30 fps).
NTU_25 = SkeletonSpec(joint_count=25, joint_names=_NTU_JOINT_NAMES, fps=30)

# 1-indexed Kinect adjacency, shifted to 0-indexed.
NTU_BONES = tuple(
    (a - 1, b - 1)
    for a, b in (
        (1, 2), (2, 21), (3, 21), (4, 3),
        (5, 21), (6, 5), (7, 6), (8, 7),
        (9, 21), (10, 9), (11, 10), (12, 11),
        (13, 1), (14, 13), (15, 14), (16, 15),
        (17, 1), (18, 17), (19, 18), (20, 19),
        (22, 23), (23, 8), (24, 25), (25, 12),
    )
)

_BONES_BY_JOINT_COUNT = {21: NATIVE_BONES, 25: NTU_BONES}


def generic_spec(joint_count: int, fps: int) -> SkeletonSpec:
    """Spec with placeholder joint names, for custom joint counts."""
    if joint_count == NATIVE_21.joint_count and fps == NATIVE_21.fps:
        return NATIVE_21
    if joint_count == NTU_25.joint_count and fps == NTU_25.fps:
        return NTU_25
    names = tuple(f"joint_{i}" for i in range(joint_count))
    return SkeletonSpec(joint_count=joint_count, joint_names=names, fps=fps)


def bones_for(spec: SkeletonSpec) -> tuple[tuple[int, int], ...]:
    """Bone list for a known layout; empty tuple when connectivity is unknown."""
    return _BONES_BY_JOINT_COUNT.get(spec.joint_count, ())
