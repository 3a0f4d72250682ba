"""
Trial Seeds
Reproducible random streams keyed by (master_seed, trial_index)
"""

import hashlib
from dataclasses import dataclass

import numpy as np

_MASK_64 = (1 << 64) - 1


def _purpose_key(purpose: str) -> int:
    digest = hashlib.blake2b(purpose.encode('utf-8'), digest_size=8).digest()
    return int.from_bytes(digest, 'little')


@dataclass(frozen=True)
class TrialSeed:
    """
    Identifies one trial of a seeded experiment.

    Every consumer of randomness inside a trial asks for a named stream
    (``"graph"``, ``"arrivals"``, ``"predictor"``, ``"algorithm"``), so adding
    a consumer never shifts the numbers another consumer sees.
    """

    master_seed: int
    trial_index: int = 0

    def seed_sequence(self, purpose: str = "") -> np.random.SeedSequence:
        """
        Hash the seed pair and an optional purpose label into a SeedSequence.

        Args:
            purpose: Name of the consumer of the stream

        Returns:
            numpy SeedSequence
        """
        entropy = [self.master_seed & _MASK_64, self.trial_index & _MASK_64]
        if purpose:
            entropy.append(_purpose_key(purpose))
        return np.random.SeedSequence(entropy)

    def rng(self, purpose: str = "") -> np.random.Generator:
        """
        Build a fresh generator for the given purpose.

        Args:
            purpose: Name of the consumer of the stream

        Returns:
            numpy Generator (PCG64)
        """
        return np.random.default_rng(self.seed_sequence(purpose))

    def child(self, index: int) -> 'TrialSeed':
        """Derive the seed of a sub-trial (e.g. one sample of a batch)."""
        mixed = _purpose_key(f"{self.master_seed}:{self.trial_index}") ^ index
        return TrialSeed(mixed & _MASK_64, index)


def as_trial_seed(seed) -> TrialSeed:
    """Accept a TrialSeed, an int master seed or None (master seed 0)."""
    if isinstance(seed, TrialSeed):
        return seed
    if seed is None:
        return TrialSeed(0, 0)
    return TrialSeed(int(seed), 0)
