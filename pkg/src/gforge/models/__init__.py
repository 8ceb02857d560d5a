from .embedder import MotionEmbedder, conv_output_length
from .generator import (
    BatchRollout,
    GenerationOutput,
    GeneratorState,
    MotionGenerator,
    TokenNet,
    generate,
)
from .recognizer import MotionRecognizer

__all__ = [
    "BatchRollout",
    "GenerationOutput",
    "GeneratorState",
    "MotionEmbedder",
    "MotionGenerator",
    "MotionRecognizer",
    "TokenNet",
    "conv_output_length",
    "generate",
]
