"""Caps on long algebraic computations."""

from __future__ import annotations

import os
import time
from dataclasses import dataclass, field

ENV_VAR = "POLYDEPTH_BUDGET_SECONDS"


class BudgetExceeded(RuntimeError):
    """A configured cap on time or size was hit before the computation finished."""


@dataclass
class Budget:
    """Caps for Groebner and resolution computations; ``None`` disables a cap."""

    seconds: float | None = None
    max_elements: int | None = None
    _start: float = field(default_factory=time.monotonic, repr=False)

    @classmethod
    def from_env(cls, seconds: float | None = None) -> "Budget":
        """Explicit ``seconds`` wins over the environment variable."""
        if seconds is None and os.environ.get(ENV_VAR):
            seconds = float(os.environ[ENV_VAR])
        return cls(seconds=seconds)

    def restart(self) -> "Budget":
        self._start = time.monotonic()
        return self

    @property
    def elapsed(self) -> float:
        return time.monotonic() - self._start

    def check(self, elements: int = 0):
        if self.seconds is not None and self.elapsed > self.seconds:
            raise BudgetExceeded(f"time budget of {self.seconds} s exceeded")
        if self.max_elements is not None and elements > self.max_elements:
            raise BudgetExceeded(f"more than {self.max_elements} generators")
