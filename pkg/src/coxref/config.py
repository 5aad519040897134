"""Default caps and run settings as frozen dataclasses."""

from __future__ import annotations

from dataclasses import dataclass, field, replace


@dataclass(frozen=True)
class Limits:
    ball_elements: int = 10**5
    braid_closure: int = 10**6
    descent_steps: int = 10**4
    recognizer_elements: int = 10**5

    def with_overrides(self, **kwargs):
        return replace(self, **{k: v for k, v in kwargs.items() if v is not None})


LIMITS = Limits()


@dataclass(frozen=True)
class VerifyConfig:
    """Which models and checks a verification sweep runs."""

    models: tuple = ("line", "244", "333", "236", "cayley:A3", "cayley:tri236")
    checks: tuple = ("1", "2", "4", "5", "6", "proper", "stabilizer")
    radius: int = 6
    line_radius: int = 8

    def radius_for(self, model_spec):
        return self.line_radius if model_spec == "line" else self.radius


@dataclass(frozen=True)
class TilingConfig:
    kinds: tuple = ("244", "333", "236")
    radius: int = 5
    out_dir: str = "out/tilings"
    size: int = 640


@dataclass(frozen=True)
class GrowthConfig:
    matrices: tuple = ("A3", "B3", "H3", "H4", "Dinf", "tri244", "tri333", "tri236")
    radius: int = 10
    limits: Limits = field(default_factory=Limits)
