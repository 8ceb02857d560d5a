"""Maximum mean discrepancy between clip sets.

Uses the biased V-statistic with a Gaussian kernel so that identical sets
score exactly zero. Bandwidth defaults to the median heuristic over the
pooled pairwise Euclidean distances.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from ..data.clips import MotionClip, root_center
from ..data.padding import pad_freeze

MEDIAN = "median-heuristic"
FALLBACK_BANDWIDTH = 1.0


@dataclass(frozen=True)
class KernelConfig:
    """Gaussian RBF kernel; bandwidth is a positive sigma or the median rule."""

    bandwidth: float | str = MEDIAN

    def __post_init__(self):
        if isinstance(self.bandwidth, str):
            if self.bandwidth != MEDIAN:
                raise ValueError(f"unknown bandwidth rule {self.bandwidth!r}")
        elif self.bandwidth <= 0:
            raise ValueError(f"bandwidth must be positive, got {self.bandwidth}")


def _sq_dists(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    diff = a[:, None, :] - b[None, :, :]
    return np.einsum("ijk,ijk->ij", diff, diff)


def resolve_bandwidth(x: np.ndarray, y: np.ndarray, kernel: KernelConfig) -> float:
    """Sigma for the kernel; median of pooled pairwise distances when asked."""
    if not isinstance(kernel.bandwidth, str):
        return float(kernel.bandwidth)
    pooled = np.concatenate([x, y], axis=0)
    sq = _sq_dists(pooled, pooled)
    iu = np.triu_indices(len(pooled), k=1)
    median = float(np.median(np.sqrt(np.maximum(sq[iu], 0.0)))) if len(iu[0]) else 0.0
    if median <= 0.0:
        warnings.warn("all points identical; falling back to bandwidth 1.0")
        return FALLBACK_BANDWIDTH
    return median


def mmd_squared(x: np.ndarray, y: np.ndarray, kernel: KernelConfig = KernelConfig()) -> float:
    """Biased squared-MMD estimate between two vector sets (n, d) and (m, d)."""
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if x.ndim != 2 or y.ndim != 2:
        raise ValueError("inputs must be 2-D arrays of row vectors")
    if x.shape[0] < 1 or y.shape[0] < 1:
        raise ValueError("both sets must be non-empty")
    if x.shape[1] != y.shape[1]:
        raise ValueError(f"dimension mismatch: {x.shape[1]} vs {y.shape[1]}")

    sigma = resolve_bandwidth(x, y, kernel)
    scale = -1.0 / (2.0 * sigma * sigma)
    k_xx = np.exp(scale * _sq_dists(x, x)).mean()
    k_yy = np.exp(scale * _sq_dists(y, y)).mean()
    k_xy = np.exp(scale * _sq_dists(x, y)).mean()
    return float(k_xx + k_yy - 2.0 * k_xy)


def clip_feature_stack(clips: list[MotionClip], max_frames: int) -> np.ndarray:
    """(n_clips, max_frames, joint_count*3) root-centered, freeze-padded frames.

    Clips longer than ``max_frames`` are truncated to it.
    """
    if not clips:
        raise ValueError("empty clip set")
    rows = []
    for clip in clips:
        live = root_center(clip.frames[: min(clip.raw_length, max_frames)])
        trimmed = MotionClip(
            frames=live,
            label=clip.label,
            spec=clip.spec,
            raw_length=len(live),
            name=clip.name,
        )
        padded, _ = pad_freeze(trimmed, max_frames)
        rows.append(padded.frames.reshape(max_frames, -1))
    return np.stack(rows).astype(np.float64)


def mmd_avg(
    real: list[MotionClip],
    gen: list[MotionClip],
    kernel: KernelConfig = KernelConfig(),
    max_frames: int | None = None,
) -> float:
    """MMD over per-clip temporal-mean frame vectors."""
    n = max_frames or _common_length(real, gen)
    x = clip_feature_stack(real, n).mean(axis=1)
    y = clip_feature_stack(gen, n).mean(axis=1)
    return mmd_squared(x, y, kernel)


def mmd_seq(
    real: list[MotionClip],
    gen: list[MotionClip],
    kernel: KernelConfig = KernelConfig(),
    max_frames: int | None = None,
) -> float:
    """Mean over time indices of the per-index frame-set MMD."""
    n = max_frames or _common_length(real, gen)
    x = clip_feature_stack(real, n)
    y = clip_feature_stack(gen, n)
    per_index = [mmd_squared(x[:, t], y[:, t], kernel) for t in range(n)]
    return float(np.mean(per_index))


def _common_length(real: list[MotionClip], gen: list[MotionClip]) -> int:
    if not real or not gen:
        raise ValueError("empty clip set")
    return max(c.raw_length for c in real + gen)
