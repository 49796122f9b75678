"""Shift types, split sizing and the named sizing profiles."""

from __future__ import annotations

import enum
import hashlib
import json
import sys
from dataclasses import asdict, dataclass, fields, replace
from pathlib import Path

from .errors import ConfigError

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

U64_MAX = 2**64 - 1


class ShiftType(str, enum.Enum):
    RANDOM = "random"
    TASK = "task"
    PROGRAMMER = "programmer"
    TIME = "time"
    TOKEN = "token"
    CST = "cst"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class SplitConfig:
    n_id_classes: int
    n_train_per_class: int
    n_id_test_per_class: int
    n_ood_test_per_class: int
    n_ood_classes: int = 0
    seed: int = 0
    dedup_per_programmer: bool = False

    def __post_init__(self):
        for name in ("n_id_classes", "n_train_per_class", "n_id_test_per_class", "n_ood_test_per_class"):
            if getattr(self, name) <= 0:
                raise ConfigError(f"{name} must be positive, got {getattr(self, name)}")
        if self.n_ood_classes < 0:
            raise ConfigError("n_ood_classes must be non-negative")
        if not 0 <= self.seed <= U64_MAX:
            raise ConfigError(f"seed must be an unsigned 64-bit integer, got {self.seed}")

    @property
    def quota(self) -> int:
        return self.n_train_per_class + self.n_id_test_per_class + self.n_ood_test_per_class

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> "SplitConfig":
        known = {f.name for f in fields(cls)}
        unknown = set(d) - known
        if unknown:
            raise ConfigError(f"unknown SplitConfig fields: {sorted(unknown)}")
        try:
            return cls(**d)
        except TypeError as exc:
            raise ConfigError(str(exc)) from exc

    def with_seed(self, seed: int) -> "SplitConfig":
        return replace(self, seed=seed)


# (non-task config, task config) per corpus, from the published dataset sizes.
PROFILES: dict[str, tuple[SplitConfig, SplitConfig]] = {
    "python75": (
        SplitConfig(n_id_classes=75, n_train_per_class=732, n_id_test_per_class=134, n_ood_test_per_class=134),
        SplitConfig(n_id_classes=65, n_ood_classes=10, n_train_per_class=846,
                    n_id_test_per_class=154, n_ood_test_per_class=1000),
    ),
    "java250s": (
        SplitConfig(n_id_classes=250, n_train_per_class=180, n_id_test_per_class=60, n_ood_test_per_class=60),
        SplitConfig(n_id_classes=200, n_ood_classes=50, n_train_per_class=225,
                    n_id_test_per_class=75, n_ood_test_per_class=300),
    ),
    "python800s": (
        SplitConfig(n_id_classes=800, n_train_per_class=180, n_id_test_per_class=60, n_ood_test_per_class=60),
        SplitConfig(n_id_classes=640, n_ood_classes=160, n_train_per_class=225,
                    n_id_test_per_class=75, n_ood_test_per_class=300),
    ),
}


def profile_config(name: str, shift: ShiftType | str, seed: int = 0) -> SplitConfig:
    try:
        regular, task = PROFILES[name]
    except KeyError:
        raise ConfigError(f"unknown profile {name!r}; choose from {sorted(PROFILES)}") from None
    cfg = task if ShiftType(shift) is ShiftType.TASK else regular
    return cfg.with_seed(seed)


def load_split_config(path: str | Path, shift: ShiftType | str) -> SplitConfig:
    """Read a TOML or JSON split config.

    The file holds SplitConfig fields at top level, optionally with a
    ``[task]`` table overriding them for the task shift, or a ``profile`` key.
    """
    path = Path(path)
    raw = path.read_bytes()
    if path.suffix == ".json":
        data = json.loads(raw)
    else:
        data = tomllib.loads(raw.decode("utf-8"))
    return split_config_from_mapping(data, shift)


def split_config_from_mapping(data: dict, shift: ShiftType | str, seed: int | None = None) -> SplitConfig:
    shift = ShiftType(shift)
    data = dict(data)
    overrides = data.pop("task", {}) if isinstance(data.get("task"), dict) else {}
    profile = data.pop("profile", None)
    if profile is not None:
        base = profile_config(profile, shift).to_dict()
        base.update(data)
        data = base
    if shift is ShiftType.TASK:
        data.update(overrides)
    if seed is not None:
        data["seed"] = seed
    return SplitConfig.from_dict(data)


def derive_seed(seed: int, *parts: str) -> int:
    """Stable 64-bit sub-seed for an independent random stream."""
    h = hashlib.sha256(str(seed).encode())
    for p in parts:
        h.update(b"\x00")
        h.update(str(p).encode("utf-8"))
    return int.from_bytes(h.digest()[:8], "big")
