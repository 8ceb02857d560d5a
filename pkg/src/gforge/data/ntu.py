"""NTU-RGB+D .skeleton file ingestion.

The text layout per file: a frame-count line; per frame a body-count line;
per body a tracking-metadata line, a joint-count line, then one line per
joint whose first three floats are the x, y, z camera coordinates.

Each tracked body becomes its own clip (bodies matched across frames by the
tracking id in the metadata line). The action id comes from the ``A###``
token of the filename and is remapped through a 12-class subset; files
outside the subset are skipped.
"""

from __future__ import annotations

import json
import re
from pathlib import Path
from typing import Mapping

import numpy as np

from ..errors import EmptyClipError, NtuParseError
from .clips import GestureLabel, MotionClip
from .skeletons import NTU_25

_ACTION_RE = re.compile(r"A(\d{3})")

# NTU-RGB+D 120 action ids for the 12-gesture subset, dense ids by list order.
DEFAULT_NTU_SUBSET_NAMES = {
    8: "sit_down",
    10: "clapping",
    22: "cheer_up",
    23: "hand_waving",
    27: "jump_up",
    35: "head_nodding",
    36: "head_shaking",
    24: "kicking",
    31: "finger_pointing",
    55: "hugging",
    60: "walking_apart",
    69: "thumb_up",
}


def subset_from_names(names: Mapping[int, str]) -> dict[int, GestureLabel]:
    """Dense label ids assigned by mapping insertion order."""
    return {
        int(action): GestureLabel(i, name)
        for i, (action, name) in enumerate(names.items())
    }


def subset_from_ids(ids: Mapping[int, int]) -> dict[int, GestureLabel]:
    """Explicit action-id -> label-id mapping; names default to A###."""
    return {
        int(action): GestureLabel(int(label), f"A{int(action):03d}")
        for action, label in ids.items()
    }


def load_subset_json(path: str | Path) -> dict[int, GestureLabel]:
    """Subset file: JSON object mapping NTU action id to class name."""
    doc = json.loads(Path(path).read_text(encoding="utf-8"))
    return subset_from_names({int(k): str(v) for k, v in doc.items()})


DEFAULT_NTU_SUBSET = subset_from_names(DEFAULT_NTU_SUBSET_NAMES)


def action_id_from_filename(path: str | Path) -> int:
    match = _ACTION_RE.search(Path(path).name)
    if match is None:
        raise NtuParseError(f"{path}: filename has no A### action token")
    return int(match.group(1))


class _LineReader:
    def __init__(self, lines: list[str], path: Path):
        self.lines = lines
        self.path = path
        self.pos = 0

    def next_line(self, what: str) -> tuple[str, int]:
        if self.pos >= len(self.lines):
            raise NtuParseError(f"{self.path}: truncated, expected {what}", self.pos + 1)
        line = self.lines[self.pos]
        self.pos += 1
        return line.strip(), self.pos

    def next_int(self, what: str) -> int:
        line, no = self.next_line(what)
        try:
            return int(line)
        except ValueError:
            raise NtuParseError(f"{self.path}: expected {what}, got {line!r}", no) from None


def parse_ntu_skeleton(
    path: str | Path,
    subset: Mapping[int, GestureLabel] = DEFAULT_NTU_SUBSET,
) -> list[MotionClip]:
    """Parse one .skeleton file into per-body clips.

    Returns [] when the file's action id is outside the subset.
    """
    path = Path(path)
    action = action_id_from_filename(path)
    if action not in subset:
        return []
    label = subset[action]

    reader = _LineReader(path.read_text(encoding="utf-8").splitlines(), path)
    n_frames = reader.next_int("frame count")
    if n_frames < 1:
        raise NtuParseError(f"{path}: frame count must be positive, got {n_frames}", 1)

    bodies: dict[str, list[np.ndarray]] = {}
    order: list[str] = []
    for _ in range(n_frames):
        n_bodies = reader.next_int("body count")
        for _ in range(n_bodies):
            meta, _ = reader.next_line("body metadata")
            fields = meta.split()
            if not fields:
                raise NtuParseError(f"{path}: empty body metadata line", reader.pos)
            body_id = fields[0]
            n_joints = reader.next_int("joint count")
            if n_joints != NTU_25.joint_count:
                raise NtuParseError(
                    f"{path}: expected {NTU_25.joint_count} joints, got {n_joints}",
                    reader.pos,
                )
            joints = np.empty((n_joints, 3), dtype=np.float32)
            for j in range(n_joints):
                line, no = reader.next_line("joint line")
                parts = line.split()
                if len(parts) < 3:
                    raise NtuParseError(f"{path}: joint line has < 3 values", no)
                try:
                    joints[j] = [float(parts[0]), float(parts[1]), float(parts[2])]
                except ValueError:
                    raise NtuParseError(f"{path}: non-numeric joint coordinate", no) from None
            if body_id not in bodies:
                bodies[body_id] = []
                order.append(body_id)
            bodies[body_id].append(joints)

    if not bodies:
        raise EmptyClipError(f"{path}: no bodies in any frame")

    clips = []
    for body_id in order:
        frames = np.stack(bodies[body_id], axis=0)
        clips.append(
            MotionClip(
                frames=frames,
                label=label,
                spec=NTU_25,
                raw_length=len(frames),
                name=f"{path.stem}_body{body_id}",
            )
        )
    return clips


def ingest_ntu_dir(
    in_dir: str | Path,
    subset: Mapping[int, GestureLabel] = DEFAULT_NTU_SUBSET,
) -> list[MotionClip]:
    """Parse every .skeleton file under a directory, skipping out-of-subset files."""
    clips = []
    for path in sorted(Path(in_dir).glob("*.skeleton")):
        clips.extend(parse_ntu_skeleton(path, subset))
    return clips
