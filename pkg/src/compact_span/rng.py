"""Seeded random streams.

All randomness goes through numpy's Philox4x64 counter-based bit generator
seeded from a ``SeedSequence``; its output stream is specified by the
algorithm and does not depend on platform. Nothing falls back to OS entropy:
a seed is always required.
"""

from __future__ import annotations

import numpy as np


def make_rng(seed, *key: int) -> np.random.Generator:
    """Generator for ``seed`` optionally namespaced by integer ``key``s."""
    if seed is None:
        raise ValueError("an explicit seed is required")
    entropy = [int(seed), *map(int, key)]
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(entropy)))
