"""Platform-independent random streams.

All randomness in the package comes from numpy's ``PCG64`` bit generator
(PCG XSL-RR 128/64) seeded through ``SeedSequence``. Only the raw 64-bit
output words are consumed; numpy's distribution methods are avoided because
their streams are not guaranteed stable across numpy releases, while the bit
generator stream is.
"""

import numpy as np


def raw_words(seed: int, count: int) -> np.ndarray:
    """Return ``count`` raw uint64 words from PCG64 seeded with ``seed``."""
    if seed < 0:
        raise ValueError("seed must be non-negative")
    return np.random.PCG64(seed).random_raw(count).astype(np.uint64)


def uniform01(words: np.ndarray) -> np.ndarray:
    """Map uint64 words to doubles in [0, 1) using the top 53 bits."""
    return (words >> np.uint64(11)).astype(np.float64) * (1.0 / 9007199254740992.0)


def random_bits(seed: int, shape) -> np.ndarray:
    """Fair coin flips (0/1, uint8) taken from the top bit of each word."""
    n = int(np.prod(shape))
    return (raw_words(seed, n) >> np.uint64(63)).astype(np.uint8).reshape(shape)
