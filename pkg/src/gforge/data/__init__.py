from .augment import augment_framedrop, framedrop_indices
from .clips import DatasetSplit, GestureLabel, MotionClip, root_center, root_center_clip
from .io import load_clip, load_dataset, save_clip, save_dataset
from .ntu import (
    DEFAULT_NTU_SUBSET,
    ingest_ntu_dir,
    load_subset_json,
    parse_ntu_skeleton,
    subset_from_ids,
    subset_from_names,
)
from .padding import pad_freeze, token_targets
from .skeletons import NATIVE_21, NTU_25, SkeletonSpec, bones_for, generic_spec
from .synthetic import rest_pose, synth_dataset

__all__ = [
    "DatasetSplit",
    "GestureLabel",
    "MotionClip",
    "SkeletonSpec",
    "NATIVE_21",
    "NTU_25",
    "DEFAULT_NTU_SUBSET",
    "augment_framedrop",
    "framedrop_indices",
    "bones_for",
    "generic_spec",
    "ingest_ntu_dir",
    "load_clip",
    "load_dataset",
    "load_subset_json",
    "pad_freeze",
    "parse_ntu_skeleton",
    "rest_pose",
    "root_center",
    "root_center_clip",
    "save_clip",
    "save_dataset",
    "subset_from_ids",
    "subset_from_names",
    "synth_dataset",
    "token_targets",
]
