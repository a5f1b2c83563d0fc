"""
LGHAP Configuration - Central configuration management with environment variable loading.
"""

from __future__ import annotations

import os
from functools import lru_cache

from dotenv import load_dotenv
from pydantic import BaseModel, Field

load_dotenv()


# ---------------------------------------------------------------------------
# Pydantic Settings
# ---------------------------------------------------------------------------
class KernelConfig(BaseModel):
    """Index defaults used when a special case leaves m or r unconstrained."""
    default_m: int = Field(default_factory=lambda: int(os.getenv("LGHAP_DEFAULT_M", "2")), ge=1)
    default_r: int = Field(default_factory=lambda: int(os.getenv("LGHAP_DEFAULT_R", "2")), ge=1)


class DeterminantConfig(BaseModel):
    """Cost guards for the determinant engines."""
    naive_max_dim: int = Field(
        default_factory=lambda: int(os.getenv("LGHAP_NAIVE_DET_MAX_DIM", "8")), ge=1
    )


class VerifyConfig(BaseModel):
    """Cross-verification driver settings."""
    workers: int = Field(
        default_factory=lambda: int(os.getenv("LGHAP_VERIFY_WORKERS", "1")), ge=1
    )
    default_methods: list[str] = Field(
        default_factory=lambda: os.getenv(
            "LGHAP_VERIFY_METHODS", "series,binomial,gf,det,op,ode,mono,heat"
        ).split(",")
    )


class GridConfig(BaseModel):
    """Surface-grid output settings."""
    digits: int = Field(default_factory=lambda: int(os.getenv("LGHAP_GRID_DIGITS", "12")), ge=0)


class BenchConfig(BaseModel):
    """Benchmark surface settings."""
    naive_max_n: int = Field(
        default_factory=lambda: int(os.getenv("LGHAP_BENCH_NAIVE_MAX_N", "6")), ge=0
    )
    repeats: int = Field(default_factory=lambda: int(os.getenv("LGHAP_BENCH_REPEATS", "1")), ge=1)


class LGHAPConfig(BaseModel):
    """Top-level configuration aggregating all sub-configs."""
    kernel: KernelConfig = Field(default_factory=KernelConfig)
    determinant: DeterminantConfig = Field(default_factory=DeterminantConfig)
    verify: VerifyConfig = Field(default_factory=VerifyConfig)
    grid: GridConfig = Field(default_factory=GridConfig)
    bench: BenchConfig = Field(default_factory=BenchConfig)


@lru_cache(maxsize=1)
def get_config() -> LGHAPConfig:
    """Singleton accessor for the global config."""
    return LGHAPConfig()
