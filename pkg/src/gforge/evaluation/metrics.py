"""Recognition accuracy, frame-length error, and the evaluation report."""

from __future__ import annotations

from dataclasses import asdict, dataclass

import numpy as np

from ..data.clips import MotionClip
from ..errors import UnknownLabelError
from ..models.recognizer import MotionRecognizer
from ..training.recognizer import predict_labels
from .mmd import KernelConfig, mmd_avg, mmd_seq


@dataclass
class EvalReport:
    """Aggregate metrics for a generated clip set against a reference set."""

    mmd_avg: float
    mmd_seq: float
    recognition_accuracy: float
    mean_frame_length_error: float
    n_real: int
    n_generated: int

    def to_dict(self) -> dict:
        return asdict(self)


def recognition_accuracy(
    gen: list[MotionClip],
    classifier: MotionRecognizer,
    max_frames: int,
) -> float:
    """Fraction of generated clips classified as their conditioning label."""
    if not gen:
        raise ValueError("empty generated set")
    preds = predict_labels(classifier, gen, max_frames)
    intended = np.array([c.label.id for c in gen])
    return float((preds == intended).mean())


def class_mean_lengths(refs: list[MotionClip]) -> dict[int, float]:
    lengths: dict[int, list[int]] = {}
    for clip in refs:
        lengths.setdefault(clip.label.id, []).append(clip.raw_length)
    return {label: float(np.mean(vals)) for label, vals in lengths.items()}


def frame_length_error(gen_lengths: list[tuple[int, int]], refs: list[MotionClip]) -> float:
    """Mean |generated length - class-mean real length| in frames.

    ``gen_lengths`` pairs (label_id, generated_frame_count).
    """
    if not gen_lengths:
        raise ValueError("empty generated set")
    means = class_mean_lengths(refs)
    errors = []
    for label, length in gen_lengths:
        if label not in means:
            raise UnknownLabelError(f"label {label} absent from the reference set")
        errors.append(abs(length - means[label]))
    return float(np.mean(errors))


def evaluate_generation(
    real: list[MotionClip],
    gen: list[MotionClip],
    classifier: MotionRecognizer,
    max_frames: int,
    kernel: KernelConfig = KernelConfig(),
) -> EvalReport:
    """Full metric sweep; generated lengths are the clips' raw lengths."""
    return EvalReport(
        mmd_avg=mmd_avg(real, gen, kernel, max_frames),
        mmd_seq=mmd_seq(real, gen, kernel, max_frames),
        recognition_accuracy=recognition_accuracy(gen, classifier, max_frames),
        mean_frame_length_error=frame_length_error(
            [(c.label.id, c.raw_length) for c in gen], real
        ),
        n_real=len(real),
        n_generated=len(gen),
    )
