"""Reproducible random streams: a 64-bit seed plus a 64-bit stream id.

Every sampling routine takes an explicit generator.  Two calls with the
same (seed, stream) pair produce bit-identical draws, and distinct stream
ids give statistically independent streams, so parallel consumers can be
merged deterministically.
"""

from __future__ import annotations

import numpy as np


def make_rng(seed: int, stream: int = 0) -> np.random.Generator:
    """PCG64 generator keyed by (seed, stream)."""
    ss = np.random.SeedSequence(entropy=int(seed), spawn_key=(int(stream),))
    return np.random.Generator(np.random.PCG64(ss))
