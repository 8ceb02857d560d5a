"""Deterministic synthetic gesture dataset.

Each class is a parametric motion family: a fixed rest pose plus a sinusoidal
displacement of a class-specific joint subset, with frequency scaled by
(class index + 1). Per-sample jitter keeps samples distinct while class means
stay well separated.
"""

from __future__ import annotations

import math

import numpy as np

from .clips import DatasetSplit, GestureLabel, MotionClip
from .skeletons import NATIVE_21, SkeletonSpec

COORD_NOISE_SIGMA = 0.005  # meters
BASE_FREQ_HZ = 0.8
BASE_AMPLITUDE = 0.22  # meters
AMP_JITTER = 0.2  # relative
PHASE_JITTER = 0.3  # radians; small so class-mean trajectories keep their shape

_AXES = np.eye(3, dtype=np.float32)

_NATIVE_REST = np.array(
    [
        [0.00, 0.00, 0.00],   # pelvis
        [0.00, 0.12, 0.00],   # spine
        [0.00, 0.30, 0.00],   # chest
        [0.00, 0.45, 0.00],   # neck
        [0.00, 0.58, 0.00],   # head
        [0.20, 0.42, 0.00],   # l_shoulder
        [0.46, 0.42, 0.00],   # l_elbow
        [0.72, 0.42, 0.00],   # l_wrist
        [0.82, 0.42, 0.00],   # l_hand
        [-0.20, 0.42, 0.00],  # r_shoulder
        [-0.46, 0.42, 0.00],  # r_elbow
        [-0.72, 0.42, 0.00],  # r_wrist
        [-0.82, 0.42, 0.00],  # r_hand
        [0.10, -0.06, 0.00],  # l_hip
        [0.12, -0.50, 0.00],  # l_knee
        [0.13, -0.93, 0.00],  # l_ankle
        [0.13, -1.00, 0.12],  # l_foot
        [-0.10, -0.06, 0.00], # r_hip
        [-0.12, -0.50, 0.00], # r_knee
        [-0.13, -0.93, 0.00], # r_ankle
        [-0.13, -1.00, 0.12], # r_foot
    ],
    dtype=np.float32,
)


def rest_pose(spec: SkeletonSpec) -> np.ndarray:
    """Rest pose (joints x 3) for a skeleton; a vertical chain off-layout."""
    if spec.joint_count == NATIVE_21.joint_count:
        return _NATIVE_REST.copy()
    j = np.arange(spec.joint_count, dtype=np.float32)
    pose = np.zeros((spec.joint_count, 3), dtype=np.float32)
    pose[:, 0] = 0.05 * (j % 3)
    pose[:, 1] = 0.08 * j
    return pose


def class_joint_subset(class_id: int, joint_count: int) -> np.ndarray:
    """Three moving joints per class, skipping the root pair when possible."""
    if joint_count < 4:
        return np.arange(1, joint_count)
    span = joint_count - 2
    return np.array([2 + (3 * class_id + j) % span for j in range(3)])


def make_sample(
    class_id: int,
    sample_index: int,
    spec: SkeletonSpec,
    min_len: int,
    max_len: int,
    seed: int,
    label: GestureLabel,
) -> MotionClip:
    """One synthetic clip; reproducible from (seed, class, sample) alone."""
    rng = np.random.default_rng([seed, class_id, sample_index])
    length = int(rng.integers(min_len, max_len + 1))
    rest = rest_pose(spec)

    subset = class_joint_subset(class_id, spec.joint_count)
    axis = _AXES[class_id % 3]
    freq = BASE_FREQ_HZ * (class_id + 1)
    amp = BASE_AMPLITUDE * (1.0 + rng.uniform(-AMP_JITTER, AMP_JITTER))
    phase = rng.uniform(-PHASE_JITTER, PHASE_JITTER)

    t = np.arange(length, dtype=np.float32) / spec.fps
    wave = amp * np.sin(2.0 * math.pi * freq * t + phase)  # (length,)

    frames = np.broadcast_to(rest, (length, spec.joint_count, 3)).copy()
    frames[:, subset] += wave[:, None, None] * axis[None, None, :]
    frames += rng.normal(0.0, COORD_NOISE_SIGMA, size=frames.shape)

    return MotionClip(
        frames=frames.astype(np.float32),
        label=label,
        spec=spec,
        raw_length=length,
        name=f"synth_{label.name}_{sample_index:04d}",
    )


def synth_dataset(
    num_classes: int,
    samples_per_class: int,
    spec: SkeletonSpec = NATIVE_21,
    min_len: int = 20,
    max_len: int = 40,
    seed: int = 0,
    test_fraction: float = 0.05,
    class_names: list[str] | None = None,
) -> DatasetSplit:
    """Generate a labeled synthetic dataset with a deterministic train/test split.

    The test set holds ceil(test_fraction * total) clips, dealt round-robin
    across classes from each class's seeded shuffle.
    """
    if num_classes < 2:
        raise ValueError(f"need at least 2 classes, got {num_classes}")
    if samples_per_class < 1:
        raise ValueError(f"samples_per_class must be >= 1, got {samples_per_class}")
    if not (1 <= min_len <= max_len):
        raise ValueError(f"bad length range [{min_len}, {max_len}]")
    if not (0 <= test_fraction < 1):
        raise ValueError(f"test_fraction must be in [0, 1), got {test_fraction}")
    if class_names is not None and len(class_names) < num_classes:
        raise ValueError(f"{len(class_names)} class names for {num_classes} classes")

    labels = [
        GestureLabel(k, class_names[k] if class_names else f"class_{k}")
        for k in range(num_classes)
    ]

    clips_by_class: list[list[MotionClip]] = []
    for k in range(num_classes):
        clips_by_class.append(
            [
                make_sample(k, i, spec, min_len, max_len, seed, labels[k])
                for i in range(samples_per_class)
            ]
        )

    total = num_classes * samples_per_class
    n_test = math.ceil(test_fraction * total) if test_fraction > 0 else 0

    test_picks: list[list[int]] = [[] for _ in range(num_classes)]
    orders = [
        np.random.default_rng([seed, 101, k]).permutation(samples_per_class)
        for k in range(num_classes)
    ]
    for t in range(n_test):
        k = t % num_classes
        depth = t // num_classes
        if depth < samples_per_class:
            test_picks[k].append(int(orders[k][depth]))

    train: list[MotionClip] = []
    test: list[MotionClip] = []
    for k in range(num_classes):
        picked = set(test_picks[k])
        for i, clip in enumerate(clips_by_class[k]):
            (test if i in picked else train).append(clip)
    return DatasetSplit(train=train, test=test, seed=seed)
