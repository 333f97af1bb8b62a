"""Seed derivation for reproducible, schedule-independent sampling.

Every random stream is a pure function of a 64-bit master seed and a tuple of
non-negative integer keys, built with numpy's SeedSequence spawn keys. Nothing
is ever seeded from the clock.
"""

import numpy as np

from core.exceptions import InvalidParameterError

SEED_LIMIT = 2**64


def check_seed(seed: int) -> int:
    if not isinstance(seed, (int, np.integer)) or not 0 <= int(seed) < SEED_LIMIT:
        raise InvalidParameterError(f"seed must be an unsigned 64-bit integer, got {seed!r}")
    return int(seed)


def derive_seed(master_seed: int, *keys: int) -> int:
    """A 64-bit seed determined by (master_seed, keys)."""
    sequence = np.random.SeedSequence(check_seed(master_seed), spawn_key=tuple(int(k) for k in keys))
    return int(sequence.generate_state(1, dtype=np.uint64)[0])


def block_generator(master_seed: int, block: int) -> np.random.Generator:
    """Counter-based (Philox) generator for sample block `block`."""
    sequence = np.random.SeedSequence(check_seed(master_seed), spawn_key=(int(block),))
    return np.random.Generator(np.random.Philox(sequence))


def random_permutations(rng: np.random.Generator, n: int, count: int) -> list[list[int]]:
    """`count` independent uniform permutations of 1..n (row-wise Fisher-Yates)."""
    base = np.tile(np.arange(1, n + 1, dtype=np.int64), (count, 1))
    return rng.permuted(base, axis=1).tolist()
