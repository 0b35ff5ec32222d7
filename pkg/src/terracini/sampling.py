"""Seeded sampling of "general" parameter points.

Every random draw is addressed by a key path (a tag, the provenance of the
variety being sampled, and integer indices), hashed into a numpy
``SeedSequence`` spawn key.  Draws are therefore reproducible from
``(seed, prime)`` alone and independent across tags, varieties and indices,
whatever order they are requested in.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, replace
from typing import Sequence

import numpy as np

from .linalg import DEFAULT_PRIME, FALLBACK_PRIME, check_prime


class SamplingError(RuntimeError):
    """Sampled ranks are inconsistent: a bad point, bad prime, or bad input."""


def _key_int(part: object) -> int:
    if isinstance(part, (int, np.integer)) and part >= 0:
        return int(part)
    digest = hashlib.sha256(str(part).encode()).digest()
    return int.from_bytes(digest[:8], "little")


@dataclass(frozen=True)
class SampleConfig:
    prime: int = DEFAULT_PRIME
    samples: int = 3
    seed: int = 0
    max_retries: int = 8
    fallback_prime: int = FALLBACK_PRIME

    def __post_init__(self):
        check_prime(self.prime)
        if self.samples < 1:
            raise ValueError("samples must be at least 1")
        if self.seed < 0:
            raise ValueError("seed must be non-negative")

    def rng(self, *key: object) -> np.random.Generator:
        ss = np.random.SeedSequence(self.seed, spawn_key=tuple(_key_int(k) for k in key))
        return np.random.Generator(np.random.PCG64(ss))

    def with_prime(self, prime: int) -> SampleConfig:
        return replace(self, prime=prime)

    def fallback(self) -> SampleConfig:
        return replace(self, prime=self.fallback_prime, fallback_prime=self.prime)


def random_vector(rng: np.random.Generator, length: int, p: int) -> list[int]:
    return [int(v) for v in rng.integers(0, p, size=length, dtype=np.int64)]


def random_point(
    rng: np.random.Generator, groups: Sequence[Sequence[int]], nvars: int, p: int
) -> list[int]:
    """Uniform point of F_p^nvars with no group identically zero."""
    while True:
        pt = random_vector(rng, nvars, p)
        if all(any(pt[i] for i in g) for g in groups):
            return pt
