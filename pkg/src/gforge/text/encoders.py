"""Sentence encoders behind a common interface.

Two implementations: a deterministic hash-bucket bag-of-words stub that keeps
the test suite offline, and an adapter for a pretrained transformer encoder,
loaded lazily so the dependency stays optional.
"""

from __future__ import annotations

import hashlib
import re
from typing import Protocol

import numpy as np

STUB_DIM = 768
_TOKEN_RE = re.compile(r"[a-z0-9']+")


class SentenceEncoder(Protocol):
    name: str
    output_dim: int

    def encode(self, text: str) -> np.ndarray: ...


def _check_text(text: str) -> str:
    if not text or not text.strip():
        raise ValueError("empty sentence")
    return text


class HashBucketEncoder:
    """Bag-of-words hashed into fixed buckets, L2-normalized.

    Token hashing uses md5 so vectors are stable across processes and runs.
    """

    def __init__(self, output_dim: int = STUB_DIM):
        self.name = "stub"
        self.output_dim = output_dim

    def _bucket(self, token: str) -> int:
        digest = hashlib.md5(token.encode("utf-8")).digest()
        return int.from_bytes(digest[:8], "little") % self.output_dim

    def encode(self, text: str) -> np.ndarray:
        _check_text(text)
        vec = np.zeros(self.output_dim, dtype=np.float32)
        for token in _TOKEN_RE.findall(text.lower()):
            vec[self._bucket(token)] += 1.0
        norm = float(np.linalg.norm(vec))
        if norm > 0:
            vec /= norm
        return vec


class TransformerEncoderAdapter:
    """Pooled sentence representation from a pretrained transformer.

    Mean-pools the last hidden state over non-padding tokens. Requires the
    ``transformers`` package and a locally available model.
    """

    def __init__(self, model_name: str = "bert-base-uncased"):
        import torch
        from transformers import AutoModel, AutoTokenizer

        self._torch = torch
        self.name = model_name
        self.tokenizer = AutoTokenizer.from_pretrained(model_name)
        self.model = AutoModel.from_pretrained(model_name)
        self.model.eval()
        self.output_dim = int(self.model.config.hidden_size)

    def encode(self, text: str) -> np.ndarray:
        _check_text(text)
        torch = self._torch
        with torch.no_grad():
            enc = self.tokenizer(text, return_tensors="pt", truncation=True)
            out = self.model(**enc).last_hidden_state[0]
            mask = enc["attention_mask"][0].unsqueeze(-1).to(out.dtype)
            pooled = (out * mask).sum(0) / mask.sum()
        return pooled.numpy().astype(np.float32)


def make_encoder(kind: str, model_name: str | None = None) -> SentenceEncoder:
    if kind == "stub":
        return HashBucketEncoder()
    if kind == "pretrained":
        return TransformerEncoderAdapter(model_name or "bert-base-uncased")
    raise ValueError(f"unknown encoder kind {kind!r}")
