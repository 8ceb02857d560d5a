"""Native clip JSON format and dataset directory I/O.

One clip per file:
    {"label": int, "label_name": str, "fps": int, "joint_count": int,
     "raw_length": int, "frames": [[[x, y, z] * joint_count] * n_frames]}

A dataset directory holds clip files plus ``manifest.json`` with the split.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from ..errors import SchemaError
from .clips import DatasetSplit, GestureLabel, MotionClip
from .skeletons import generic_spec

_CLIP_KEYS = {
    "label": int,
    "label_name": str,
    "fps": int,
    "joint_count": int,
    "raw_length": int,
    "frames": list,
}

MANIFEST_NAME = "manifest.json"


def save_clip(clip: MotionClip, path: str | Path) -> None:
    """Write a clip as native JSON; rejects non-finite coordinates."""
    if not np.isfinite(clip.frames).all():
        raise ValueError(f"clip '{clip.name}': refusing to save non-finite coordinates")
    doc = {
        "label": clip.label.id,
        "label_name": clip.label.name,
        "fps": clip.spec.fps,
        "joint_count": clip.spec.joint_count,
        "raw_length": clip.raw_length,
        "frames": clip.frames.astype(np.float32).tolist(),
    }
    Path(path).write_text(json.dumps(doc), encoding="utf-8")


def load_clip(path: str | Path) -> MotionClip:
    """Read a native JSON clip; schema violations name the offending key."""
    path = Path(path)
    try:
        doc = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise SchemaError(f"{path}: top-level value must be an object")
    for key, kind in _CLIP_KEYS.items():
        if key not in doc:
            raise SchemaError(f"{path}: missing key '{key}'")
        if not isinstance(doc[key], kind) or isinstance(doc[key], bool):
            raise SchemaError(f"{path}: key '{key}' must be {kind.__name__}")

    frames = np.asarray(doc["frames"], dtype=np.float32)
    if frames.ndim != 3 or frames.shape[1:] != (doc["joint_count"], 3):
        raise SchemaError(
            f"{path}: key 'frames' shaped {frames.shape}, expected "
            f"(n, {doc['joint_count']}, 3)"
        )
    spec = generic_spec(doc["joint_count"], doc["fps"])
    try:
        return MotionClip(
            frames=frames,
            label=GestureLabel(doc["label"], doc["label_name"]),
            spec=spec,
            raw_length=doc["raw_length"],
            name=path.stem,
        )
    except ValueError as exc:
        raise SchemaError(f"{path}: {exc}") from exc


def save_dataset(split: DatasetSplit, out_dir: str | Path) -> Path:
    """Write every clip plus a manifest recording split membership."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    entries = []
    counter = 0
    for part, clips in (("train", split.train), ("test", split.test)):
        for clip in clips:
            fname = f"clip_{counter:05d}.json"
            save_clip(clip, out_dir / fname)
            entries.append(
                {
                    "file": fname,
                    "split": part,
                    "label": clip.label.id,
                    "label_name": clip.label.name,
                }
            )
            counter += 1
    manifest = {"seed": split.seed, "files": entries}
    (out_dir / MANIFEST_NAME).write_text(json.dumps(manifest, indent=2), encoding="utf-8")
    return out_dir


def load_dataset(data_dir: str | Path) -> DatasetSplit:
    """Read a dataset directory written by :func:`save_dataset`."""
    data_dir = Path(data_dir)
    manifest_path = data_dir / MANIFEST_NAME
    if not manifest_path.exists():
        raise SchemaError(f"{data_dir}: missing {MANIFEST_NAME}")
    manifest = json.loads(manifest_path.read_text(encoding="utf-8"))
    if "files" not in manifest:
        raise SchemaError(f"{manifest_path}: missing key 'files'")
    split = DatasetSplit(seed=int(manifest.get("seed", 0)))
    for entry in manifest["files"]:
        clip = load_clip(data_dir / entry["file"])
        if entry.get("split") == "test":
            split.test.append(clip)
        else:
            split.train.append(clip)
    return split
