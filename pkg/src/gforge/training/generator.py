"""Generator/token-net training with the two-phase loss schedule.

The embedder is frozen throughout: conditioning vectors are precomputed once,
and the fake-embedding term backpropagates through the generated motion only.
No teacher forcing: training rollouts always feed back the model's own frames.
"""

from __future__ import annotations

import numpy as np
import torch

from ..config import ModelConfig
from ..data.augment import DEFAULT_COPIES, DEFAULT_DROP_FRACTION
from ..data.clips import DatasetSplit
from ..models.embedder import MotionEmbedder
from ..models.generator import MotionGenerator, TokenNet
from .losses import (
    TokenLossSchedule,
    combined_loss,
    fake_embedding_loss,
    first_frame_loss,
    reconstruction_loss,
    token_loss,
)
from .prep import augmented_pool, batch_indices, clips_to_tensors, to_channels_first


def train_generator(
    split: DatasetSplit,
    embedder: MotionEmbedder,
    config: ModelConfig,
    copies: int = DEFAULT_COPIES,
    drop_fraction: float = DEFAULT_DROP_FRACTION,
) -> tuple[MotionGenerator, TokenNet, list[dict], TokenLossSchedule]:
    """Train the decoder against a frozen, pretrained embedder.

    Returns (generator, token_net, per-epoch log, schedule). Each log entry
    carries the four loss means, the token EMA, and the active branch.
    """
    if embedder is None:
        raise ValueError("a pretrained embedder is required")
    if not split.train:
        raise ValueError("empty training split")

    pool = augmented_pool(split.train, copies, drop_fraction, seed=config.seed)
    frames, tokens, lengths, _ = clips_to_tensors(pool, config.max_frames)

    embedder.eval()
    for p in embedder.parameters():
        p.requires_grad_(False)
    with torch.no_grad():
        v_all = embedder(to_channels_first(frames))

    torch.manual_seed(config.seed)
    frame_dim = frames.shape[-1]
    generator = MotionGenerator(frame_dim, config)
    token_net = TokenNet(config.subnet_hidden, config.subnet_hidden)
    params = list(generator.parameters()) + list(token_net.parameters())
    opt = torch.optim.Adam(params, lr=config.lr)

    schedule = TokenLossSchedule(threshold=config.token_threshold)
    log = []
    for epoch in range(config.epochs):
        sums = {"l_first": 0.0, "l_recon": 0.0, "l_token": 0.0, "l_fake": 0.0}
        n_batches = 0
        fake_logged = False
        for idx in batch_indices(len(pool), config.batch_size, config.seed, epoch):
            batch = torch.from_numpy(np.asarray(idx))
            v = v_all[batch]
            target = frames[batch]
            rollout = generator.rollout(token_net, v, config.max_frames)

            l_first = first_frame_loss(rollout.frames, target)
            l_recon = reconstruction_loss(rollout.frames, target, lengths[batch])
            l_token = token_loss(rollout.tokens, tokens[batch])
            if schedule.switched:
                l_fake = fake_embedding_loss(embedder(to_channels_first(rollout.frames)), v)
            else:
                # Not part of the objective yet; probe once per epoch for the log.
                if not fake_logged:
                    with torch.no_grad():
                        probe = fake_embedding_loss(
                            embedder(to_channels_first(rollout.frames)), v
                        )
                    sums["l_fake"] += float(probe)
                    fake_logged = True
                l_fake = torch.zeros(())

            total = combined_loss(
                l_first, l_recon, l_token, l_fake,
                token_loss_running=schedule.running,
                threshold=config.token_threshold,
            )
            opt.zero_grad()
            total.backward()
            opt.step()

            sums["l_first"] += float(l_first)
            sums["l_recon"] += float(l_recon)
            sums["l_token"] += float(l_token)
            if schedule.switched:
                sums["l_fake"] += float(l_fake)
            n_batches += 1

        epoch_token = sums["l_token"] / n_batches
        branch_before = "fake" if schedule.switched else "token"
        schedule.update(epoch_token)
        entry = {
            "epoch": epoch,
            "l_first": sums["l_first"] / n_batches,
            "l_recon": sums["l_recon"] / n_batches,
            "l_token": epoch_token,
            "l_fake": sums["l_fake"] / (n_batches if branch_before == "fake" else 1),
            "token_ema": schedule.ema,
            "branch": branch_before,
        }
        log.append(entry)

    generator.eval()
    token_net.eval()
    return generator, token_net, log, schedule
