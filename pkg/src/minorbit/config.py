"""Engine configuration.

Limits are configured per call, not globally. Every operation that can grow
with the rank takes an EngineConfig (or falls back to DEFAULT).
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class EngineConfig:
    """Size limits for root-system construction and coset enumeration.

    Attributes:
        coset_cap: Maximum |X_I| a coset enumeration may reach. Default 10,000.
        max_rank_a: Largest accepted rank for type A. Default 32.
        max_rank_classical: Largest accepted rank for types B, C and D. Default 16.
        sweep_max_rank: Largest rank for types B, C and D visited by `verify --all`. Default 8.
        sweep_max_rank_a: Largest type A rank visited by `verify --all`. Default 11.
        oracle_max_rank: Largest rank for which the Weyl-side oracle runs in sweeps. Default 6.
    """

    coset_cap: int = 10_000
    max_rank_a: int = 32
    max_rank_classical: int = 16
    sweep_max_rank: int = 8
    sweep_max_rank_a: int = 11
    oracle_max_rank: int = 6

    def __post_init__(self) -> None:
        if self.coset_cap <= 0:
            raise ValueError(f"coset_cap must be positive, got {self.coset_cap}")
        if self.sweep_max_rank < 1:
            raise ValueError(f"sweep_max_rank must be at least 1, got {self.sweep_max_rank}")
        if self.sweep_max_rank_a < 1:
            raise ValueError(f"sweep_max_rank_a must be at least 1, got {self.sweep_max_rank_a}")

    def max_rank(self, family: str) -> int | None:
        """Upper rank bound for a family, or None for the exceptional families."""
        if family == "A":
            return self.max_rank_a
        if family in ("B", "C", "D"):
            return self.max_rank_classical
        return None


# Predefined configs for convenience
DEFAULT = EngineConfig()
QUICK = EngineConfig(sweep_max_rank=5, sweep_max_rank_a=6, oracle_max_rank=4)
THOROUGH = EngineConfig(
    coset_cap=50_000, sweep_max_rank=12, sweep_max_rank_a=16, oracle_max_rank=7
)
