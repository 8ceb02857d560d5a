"""Model/training configuration shared by the embedder and generator.

JSON config keys: max_frames, embed_dim, core_hidden, subnet_hidden, lr,
batch_size, epochs, token_threshold, margin, seed. The env var GFORGE_SEED
overrides any configured seed.
"""

from __future__ import annotations

import dataclasses
import json
import os
from dataclasses import dataclass
from pathlib import Path

SEED_ENV_VAR = "GFORGE_SEED"

# Conv stack fixed by design; channels scale off embed_dim.
EMBEDDER_KERNELS = (7, 3, 3, 3, 3)
EMBEDDER_STRIDES = (2, 2, 2, 1, 1)


@dataclass
class ModelConfig:
    """Hyperparameters for one training stage."""

    max_frames: int = 180
    embed_dim: int = 1024
    core_hidden: int = 1024
    subnet_hidden: int = 512
    lr: float = 1e-4
    batch_size: int = 32
    epochs: int = 500
    token_threshold: float = 0.01
    margin: float = 0.05
    seed: int = 0

    @property
    def embedder_channels(self) -> tuple[int, ...]:
        """Paper ratios 1/16, 1/8, 1/4, 1/2, 1 of embed_dim."""
        d = self.embed_dim
        return (d // 16, d // 8, d // 4, d // 2, d)

    def replace(self, **kwargs) -> "ModelConfig":
        return dataclasses.replace(self, **kwargs)

    def to_dict(self) -> dict:
        return dataclasses.asdict(self)

    @classmethod
    def from_dict(cls, doc: dict) -> "ModelConfig":
        known = {f.name for f in dataclasses.fields(cls)}
        unknown = set(doc) - known
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        return cls(**doc)

    @classmethod
    def from_json(cls, path: str | Path) -> "ModelConfig":
        return cls.from_dict(json.loads(Path(path).read_text(encoding="utf-8")))

    def save_json(self, path: str | Path) -> None:
        Path(path).write_text(json.dumps(self.to_dict(), indent=2), encoding="utf-8")


def full_scale_config(**overrides) -> ModelConfig:
    """The paper-sized configuration (1024-dim embedding, 180-frame clips)."""
    return ModelConfig().replace(**overrides)


def desk_config(**overrides) -> ModelConfig:
    """Small configuration for CPU-minutes training on the synthetic dataset."""
    cfg = ModelConfig(
        max_frames=40,
        embed_dim=128,
        core_hidden=256,
        subnet_hidden=128,
        lr=1e-3,
        batch_size=32,
        epochs=60,
        token_threshold=0.01,
        margin=0.05,
        seed=0,
    )
    return cfg.replace(**overrides)


def resolve_seed(seed: int) -> int:
    """Apply the GFORGE_SEED environment override, if set."""
    env = os.environ.get(SEED_ENV_VAR)
    if env is None or env == "":
        return seed
    try:
        return int(env)
    except ValueError:
        raise ValueError(f"{SEED_ENV_VAR} must be an integer, got {env!r}") from None
