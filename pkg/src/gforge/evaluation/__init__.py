from .metrics import (
    EvalReport,
    class_mean_lengths,
    evaluate_generation,
    frame_length_error,
    recognition_accuracy,
)
from .mmd import KernelConfig, clip_feature_stack, mmd_avg, mmd_seq, mmd_squared

__all__ = [
    "EvalReport",
    "KernelConfig",
    "class_mean_lengths",
    "clip_feature_stack",
    "evaluate_generation",
    "frame_length_error",
    "mmd_avg",
    "mmd_seq",
    "mmd_squared",
    "recognition_accuracy",
]
