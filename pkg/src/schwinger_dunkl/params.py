"""Representation label (N, mu_x, mu_y) and its derived scalars."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class OscParams:
    """Energy level ``n`` and reflection parameters, both above -1/2."""

    n: int
    mu_x: float
    mu_y: float

    def __post_init__(self):
        if isinstance(self.n, bool) or int(self.n) != self.n or self.n < 0:
            raise ValueError(f"level n must be a nonnegative integer, got {self.n!r}")
        object.__setattr__(self, "n", int(self.n))
        for name in ("mu_x", "mu_y"):
            v = float(getattr(self, name))
            if not v > -0.5:
                raise ValueError(f"{name} must lie in (-1/2, inf), got {v}")
            object.__setattr__(self, name, v)

    @property
    def zeta(self) -> float:
        return self.mu_x + self.mu_y

    @property
    def xi(self) -> float:
        return self.mu_x - self.mu_y

    @property
    def energy(self) -> float:
        return self.n + self.mu_x + self.mu_y + 1

    @property
    def dim(self) -> int:
        return self.n + 1

    @property
    def m(self) -> int:
        """Largest sector index: N/2 for even N, (N-1)/2 for odd N."""
        return self.n // 2
