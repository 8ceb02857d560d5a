"""Embedding-conditioned autoregressive motion decoder.

Layout per step: pre-net (2 FC -> GRU -> 2 FC), a 2-layer GRU core, post-net
(2 FC -> GRU -> 2 FC). The pre-net and post-net GRUs read and write a single
shared hidden-state slot, in that order. The post-net's final FC predicts a
frame delta added to the step's input frame; the token net reads the
post-net's pre-residual hidden features and emits a stop scalar through a
sigmoid. No teacher forcing: each step consumes the previous generated frame.
"""

from __future__ import annotations

from dataclasses import dataclass

import torch
from torch import Tensor, nn

from ..config import ModelConfig

LEAKY_SLOPE = 0.01


@dataclass
class GeneratorState:
    """Per-sequence recurrent state; shared slot serves both subnet GRUs."""

    shared: Tensor
    core1: Tensor
    core2: Tensor


@dataclass
class BatchRollout:
    """Full-length training rollout: (B, N, frame_dim) frames, (B, N) tokens."""

    frames: Tensor
    tokens: Tensor


def _fc_stack(sizes: list[int]) -> nn.Sequential:
    layers: list[nn.Module] = []
    for i in range(len(sizes) - 1):
        layers.append(nn.Linear(sizes[i], sizes[i + 1]))
        layers.append(nn.LeakyReLU(LEAKY_SLOPE))
    return nn.Sequential(*layers)


class TokenNet(nn.Module):
    """3 FC layers ending in a scalar; output passed through a sigmoid."""

    def __init__(self, in_dim: int, hidden: int):
        super().__init__()
        self.fc1 = nn.Linear(in_dim, hidden)
        self.fc2 = nn.Linear(hidden, hidden)
        self.fc3 = nn.Linear(hidden, 1)
        self.act = nn.LeakyReLU(LEAKY_SLOPE)

    def forward(self, x: Tensor) -> Tensor:
        x = self.act(self.fc1(x))
        x = self.act(self.fc2(x))
        return torch.sigmoid(self.fc3(x)).squeeze(-1)


class MotionGenerator(nn.Module):
    def __init__(self, frame_dim: int, config: ModelConfig):
        super().__init__()
        self.frame_dim = frame_dim
        self.embed_dim = config.embed_dim
        sub = config.subnet_hidden
        core = config.core_hidden

        # Initial motion net: 4 FC layers; the activated layer-2 output is
        # tapped and projected to seed the shared recurrent slot.
        self.init_fc1 = nn.Linear(config.embed_dim, sub)
        self.init_fc2 = nn.Linear(sub, sub)
        self.init_fc3 = nn.Linear(sub, sub)
        self.init_fc4 = nn.Linear(sub, frame_dim)
        self.init_tap = nn.Linear(sub, sub)

        self.prenet_head = _fc_stack([frame_dim, sub, sub])
        self.prenet_gru = nn.GRUCell(sub, sub)
        self.prenet_tail = _fc_stack([sub, sub, sub])

        self.core1 = nn.GRUCell(sub, core)
        self.core2 = nn.GRUCell(core, core)

        self.postnet_head = _fc_stack([core, sub, sub])
        self.postnet_gru = nn.GRUCell(sub, sub)
        self.postnet_fc1 = nn.Linear(sub, sub)
        self.postnet_fc2 = nn.Linear(sub, frame_dim)

        self.act = nn.LeakyReLU(LEAKY_SLOPE)
        self.core_hidden = core
        self.subnet_hidden = sub

    def init_state(self, v: Tensor) -> tuple[Tensor, GeneratorState]:
        """First frame and fresh state from an embedding batch (B, embed_dim)."""
        if v.ndim != 2 or v.shape[1] != self.embed_dim:
            raise ValueError(f"expected (batch, {self.embed_dim}) embedding, got {tuple(v.shape)}")
        h = self.act(self.init_fc1(v))
        h2 = self.act(self.init_fc2(h))
        shared = self.init_tap(h2)
        h3 = self.act(self.init_fc3(h2))
        frame0 = self.init_fc4(h3)
        zeros = v.new_zeros(v.shape[0], self.core_hidden)
        return frame0, GeneratorState(shared=shared, core1=zeros, core2=zeros.clone())

    def step(
        self, token_net: TokenNet, prev_frame: Tensor, state: GeneratorState
    ) -> tuple[Tensor, Tensor, GeneratorState]:
        """One autoregressive step: next frame, stop token, new state."""
        if not torch.isfinite(prev_frame).all():
            raise FloatingPointError("non-finite frame fed to generator step")
        x = self.prenet_head(prev_frame)
        shared = self.prenet_gru(x, state.shared)
        x = self.prenet_tail(shared)
        core1 = self.core1(x, state.core1)
        core2 = self.core2(core1, state.core2)
        x = self.postnet_head(core2)
        shared = self.postnet_gru(x, shared)
        hidden = self.act(self.postnet_fc1(shared))  # pre-residual features
        next_frame = prev_frame + self.postnet_fc2(hidden)
        token = token_net(hidden)
        return next_frame, token, GeneratorState(shared=shared, core1=core1, core2=core2)

    def rollout(self, token_net: TokenNet, v: Tensor, max_frames: int) -> BatchRollout:
        """Training-mode rollout: always the full max_frames frames and tokens.

        The first frame comes from the initial motion net; its token slot is a
        constant 0 (frame 0 can never be the stop frame and is unsupervised).
        """
        if max_frames < 1:
            raise ValueError(f"max_frames must be >= 1, got {max_frames}")
        frame, state = self.init_state(v)
        frames = [frame]
        tokens = [v.new_zeros(v.shape[0])]
        for _ in range(max_frames - 1):
            frame, token, state = self.step(token_net, frame, state)
            frames.append(frame)
            tokens.append(token)
        return BatchRollout(frames=torch.stack(frames, dim=1), tokens=torch.stack(tokens, dim=1))


@dataclass
class GenerationOutput:
    """Inference result before conversion to a clip."""

    frames: "torch.Tensor"  # (stopped_at, frame_dim) in infer mode, (N, .) in train mode
    tokens: "torch.Tensor"  # same leading length as frames
    stopped_at: int


STOP_LEVEL = 0.5


@torch.no_grad()
def generate(
    generator: MotionGenerator,
    token_net: TokenNet,
    v: Tensor,
    max_frames: int,
    mode: str = "infer",
) -> GenerationOutput:
    """Generate a single sequence from one embedding vector.

    Train mode always emits max_frames frames. Infer mode stops at the first
    frame whose token reaches 0.5; that frame and everything after it are the
    frozen region and are excluded. stopped_at records the stop index
    (max_frames when the token never fires).
    """
    if mode not in ("train", "infer"):
        raise ValueError(f"mode must be 'train' or 'infer', got {mode!r}")
    if v.ndim != 1:
        raise ValueError(f"generate takes a single embedding vector, got shape {tuple(v.shape)}")
    was_training = generator.training
    generator.eval()
    token_net.eval()
    try:
        batch = v.unsqueeze(0)
        frame, state = generator.init_state(batch)
        frames = [frame.squeeze(0)]
        tokens = [v.new_zeros(())]
        stopped_at = max_frames
        for i in range(1, max_frames):
            frame, token, state = generator.step(token_net, frame, state)
            if mode == "infer" and float(token) >= STOP_LEVEL:
                stopped_at = i
                break
            frames.append(frame.squeeze(0))
            tokens.append(token.squeeze(0))
        return GenerationOutput(
            frames=torch.stack(frames, dim=0),
            tokens=torch.stack(tokens, dim=0),
            stopped_at=stopped_at,
        )
    finally:
        if was_training:
            generator.train()
            token_net.train()
