"""Project configuration: one dataclass, JSON in, JSON out."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field

from .analytics import NEGATIVE_WIDE, ORIENTATIONS
from .embedding import SgnsConfig
from .errors import ConfigError
from .topics import TopicModelConfig


@dataclass
class ProjectConfig:
    K: int = 10
    W: int = 3
    review_threshold: float = 0.1
    emergence_lambda: float = 2.0
    chain_decay: float = 0.5
    prior_strength: float = 10.0
    topic_alpha: float | None = None  # None -> 50/K
    topic_beta0: float = 0.01
    topic_iterations: int = 500
    embedding_dim: int = 100
    embedding_window: int = 5
    embedding_negatives: int = 5
    embedding_epochs: int = 5
    embedding_lr0: float = 0.025
    embedding_min_count: int = 5
    seed: int = 42
    river_orientation: str = NEGATIVE_WIDE
    seed_additions: list[list[str]] = field(default_factory=list)

    def validate(self) -> None:
        checks = [
            (self.K >= 2, "K must be >= 2"),
            (self.W >= 0, "W must be >= 0"),
            (0.0 <= self.review_threshold <= 1.0, "review_threshold must be in [0, 1]"),
            (self.emergence_lambda >= 0.0, "emergence_lambda must be >= 0"),
            (0.0 < self.chain_decay <= 1.0, "chain_decay must be in (0, 1]"),
            (self.prior_strength >= 0.0, "prior_strength must be >= 0"),
            (self.topic_beta0 > 0.0, "topic_beta0 must be > 0"),
            (self.topic_iterations >= 1, "topic_iterations must be >= 1"),
            (self.embedding_dim >= 1, "embedding_dim must be >= 1"),
            (self.embedding_window >= 1, "embedding_window must be >= 1"),
            (self.embedding_negatives >= 1, "embedding_negatives must be >= 1"),
            (self.embedding_epochs >= 0, "embedding_epochs must be >= 0"),
            (self.embedding_lr0 > 0.0, "embedding_lr0 must be > 0"),
            (self.embedding_min_count >= 1, "embedding_min_count must be >= 1"),
            (self.river_orientation in ORIENTATIONS,
             f"river_orientation must be one of {ORIENTATIONS}"),
            (self.topic_alpha is None or self.topic_alpha > 0.0,
             "topic_alpha must be > 0 when set"),
        ]
        for ok, message in checks:
            if not ok:
                raise ConfigError(message)
        for entry in self.seed_additions:
            if len(entry) != 2 or entry[1] not in ("positive", "negative"):
                raise ConfigError(f"bad seed addition {entry!r}")

    def topic_config(self) -> TopicModelConfig:
        return TopicModelConfig(
            K=self.K,
            W=self.W,
            alpha=self.topic_alpha,
            beta0=self.topic_beta0,
            chain_decay=self.chain_decay,
            prior_strength=self.prior_strength,
            iterations=self.topic_iterations,
            seed=self.seed,
        )

    def sgns_config(self) -> SgnsConfig:
        return SgnsConfig(
            dim=self.embedding_dim,
            window=self.embedding_window,
            negatives=self.embedding_negatives,
            epochs=self.embedding_epochs,
            lr0=self.embedding_lr0,
            min_count=self.embedding_min_count,
            seed=self.seed,
        )

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True, indent=2)

    @classmethod
    def from_dict(cls, data: dict) -> "ProjectConfig":
        known = {f for f in cls.__dataclass_fields__}
        unknown = set(data) - known
        if unknown:
            raise ConfigError(f"unknown config fields: {sorted(unknown)}")
        config = cls(**data)
        config.validate()
        return config

    @classmethod
    def from_json(cls, text: str) -> "ProjectConfig":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"config is not valid JSON: {exc}") from None
        if not isinstance(data, dict):
            raise ConfigError("config must be a JSON object")
        return cls.from_dict(data)
