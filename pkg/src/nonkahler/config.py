"""Run configuration."""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction

from .kummer import IntersectionForm

REFINE_ENV = "NK_REFINE_WIDTH"


@dataclass(frozen=True)
class Settings:
    refine_width: Fraction = Fraction(1, 1000)
    divisor_scale: int = 2
    torus_scale: int = 2
    workers: int = 1
    notes: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        w = Fraction(self.refine_width)
        if w <= 0:
            raise ValueError("refine width must be positive, got %s" % w)
        object.__setattr__(self, "refine_width", w)

    @property
    def form(self) -> IntersectionForm:
        return IntersectionForm(self.divisor_scale, self.torus_scale)

    @classmethod
    def from_env(cls, environ=None, **overrides) -> "Settings":
        """Defaults, then NK_REFINE_WIDTH (a rational such as "1/10000"), then overrides."""
        environ = os.environ if environ is None else environ
        raw = environ.get(REFINE_ENV)
        if raw is not None and "refine_width" not in overrides:
            try:
                overrides["refine_width"] = Fraction(raw.strip())
            except (ValueError, ZeroDivisionError) as exc:
                raise ValueError("%s=%r is not a rational number" % (REFINE_ENV, raw)) from exc
        return cls(**overrides)
