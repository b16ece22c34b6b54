"""On-disk cache of constructed modules.

One JSON file per (type, highest weight).  The payload holds the weight
spaces (weight, depth, basis tags) and the e_i / f_i matrices as sorted
``[row, col, "num/den"]`` triplets; a SHA-256 of the canonical payload
guards against truncated or edited files.
"""
from __future__ import annotations

import hashlib
import json
import logging
import os
import warnings
from pathlib import Path
from typing import Optional, Sequence

from .errors import CorruptCache
from .hwmod import DEFAULT_CAP, HWModule, WeightSpace, construct_module
from .rootsys import RootSystem, build_root_system, LieType
from .sparse import SparseOperator, from_fraction_string, to_fraction_string

log = logging.getLogger(__name__)

CACHE_VERSION = 1
CACHE_ENV = "PBW_CACHE_DIR"


class CacheWarning(UserWarning):
    pass


def default_cache_dir() -> Optional[Path]:
    value = os.environ.get(CACHE_ENV)
    return Path(value) if value else None


def cache_path(cache_dir, lie_type: LieType, weight: Sequence[int]) -> Path:
    name = f"{lie_type}__{'_'.join(str(c) for c in weight)}.json"
    return Path(cache_dir) / name


def _canonical(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def module_payload(module: HWModule) -> dict:
    spaces = [
        {"weight": list(ws.weight), "depth": ws.depth, "start": ws.start,
         "tags": [list(t) for t in ws.basis_tags]}
        for ws in module.weight_spaces.values()
    ]

    def ops(mats):
        return [[[i, j, to_fraction_string(x)] for i, j, x in m.triplets()] for m in mats]

    return {
        "type": str(module.root_system.lie_type),
        "highest_weight": list(module.highest_weight),
        "dim": module.total_dim,
        "weight_spaces": spaces,
        "raising": ops(module.raising),
        "lowering": ops(module.lowering),
    }


def module_from_payload(payload: dict) -> HWModule:
    lie_type = LieType.parse(payload["type"])
    rs = build_root_system(lie_type)
    spaces = {}
    for entry in payload["weight_spaces"]:
        w = tuple(entry["weight"])
        tags = tuple(tuple(t) for t in entry["tags"])
        spaces[w] = WeightSpace(w, entry["start"], len(tags), tags, entry["depth"])

    def ops(rows, sign):
        return [SparseOperator.from_triplets(
                    tuple(sign * c for c in rs.simple_root(k + 1)),
                    ((i, j, from_fraction_string(x)) for i, j, x in trip))
                for k, trip in enumerate(rows)]

    module = HWModule(rs, tuple(payload["highest_weight"]), spaces,
                      ops(payload["raising"], 1), ops(payload["lowering"], -1))
    if module.total_dim != payload["dim"]:
        raise CorruptCache("dimension field disagrees with the stored weight spaces")
    return module


def cache_store(module: HWModule, cache_dir) -> Path:
    cache_dir = Path(cache_dir)
    cache_dir.mkdir(parents=True, exist_ok=True)
    payload = module_payload(module)
    doc = {
        "format": "pbwdeg-module",
        "version": CACHE_VERSION,
        "checksum": hashlib.sha256(_canonical(payload).encode()).hexdigest(),
        "payload": payload,
    }
    path = cache_path(cache_dir, module.root_system.lie_type, module.highest_weight)
    tmp = path.with_suffix(".tmp")
    tmp.write_text(_canonical(doc))
    tmp.replace(path)
    return path


def read_cache_file(path) -> HWModule:
    """Load a cache file; raise CorruptCache on any integrity problem."""
    try:
        doc = json.loads(Path(path).read_text())
    except (OSError, ValueError) as exc:
        raise CorruptCache(f"{path}: unreadable ({exc})") from exc
    if not isinstance(doc, dict) or doc.get("format") != "pbwdeg-module":
        raise CorruptCache(f"{path}: not a module cache file")
    payload = doc.get("payload")
    digest = hashlib.sha256(_canonical(payload).encode()).hexdigest()
    if digest != doc.get("checksum"):
        raise CorruptCache(f"{path}: checksum mismatch")
    try:
        return module_from_payload(payload)
    except (KeyError, TypeError, ValueError) as exc:
        raise CorruptCache(f"{path}: malformed payload ({exc})") from exc


def cache_load(rs: RootSystem, weight: Sequence[int], cache_dir) -> Optional[HWModule]:
    """The cached module, or None on a miss, a stale version or a corrupt file."""
    path = cache_path(cache_dir, rs.lie_type, weight)
    if not path.exists():
        return None
    try:
        version = json.loads(path.read_text()).get("version")
    except (OSError, ValueError, AttributeError):
        version = CACHE_VERSION  # let read_cache_file report the corruption
    if version != CACHE_VERSION:
        warnings.warn(f"ignoring cache file {path} with version {version} (expected {CACHE_VERSION})",
                      CacheWarning, stacklevel=2)
        return None
    try:
        module = read_cache_file(path)
    except CorruptCache as exc:
        warnings.warn(f"corrupt cache file, recomputing: {exc}", CacheWarning, stacklevel=2)
        return None
    if module.root_system.lie_type != rs.lie_type or module.highest_weight != tuple(weight):
        warnings.warn(f"cache file {path} holds a different module, recomputing", CacheWarning, stacklevel=2)
        return None
    return module


def get_module(rs: RootSystem, weight: Sequence[int], cap: int = DEFAULT_CAP,
               cache_dir=None) -> HWModule:
    """Construct V(weight), going through the cache when a directory is given."""
    weight = tuple(weight)
    if cache_dir is not None:
        module = cache_load(rs, weight, cache_dir)
        if module is not None:
            return module
    module = construct_module(rs, weight, cap=cap)
    if cache_dir is not None:
        cache_store(module, cache_dir)
    return module
