"""Deterministic seed derivation.

Every randomized step in the library (parameter initialization, candidate
fits inside a selection run, replicate generation) draws from a seed folded
out of the user-facing master seed plus integer context tags. Folding goes
through ``numpy.random.SeedSequence`` so that nearby inputs produce
uncorrelated streams, and the result is a plain ``int`` that can be stored,
echoed in reports, and replayed.
"""

from __future__ import annotations

import numpy as np

_MASK64 = (1 << 64) - 1

# Context tags for the selection phases and the simulation harness. Values
# are arbitrary but frozen: changing them changes every derived stream.
PHASE_HIDDEN = 1
PHASE_INPUT = 2
PHASE_FINE_HIDDEN = 3
PHASE_FINE_INPUT = 4
PHASE_FINAL = 5
PHASE_VALIDATION_SPLIT = 6
PHASE_FULL_MODEL = 7

REP_MODEL = 101
REP_DATA = 102
REP_SELECT = 103
REP_TEST = 104

TEST_SPLIT = 105
FIXED_FIT = 106


def fold_seed(*parts: int) -> int:
    """Fold integer context parts into a single 64-bit seed.

    Deterministic in the parts and insensitive to their magnitudes; two
    part tuples differing in any position give independent streams.
    """
    entropy = [int(p) & _MASK64 for p in parts]
    return int(np.random.SeedSequence(entropy).generate_state(1, np.uint64)[0])


def start_streams(seed: int, n: int) -> list[np.random.Generator]:
    """Per-start generators with a prefix-stable spawn.

    Stream ``i`` is identical no matter how large ``n`` is, so enlarging a
    multi-start budget only appends new starts.
    """
    children = np.random.SeedSequence(int(seed) & _MASK64).spawn(n)
    return [np.random.default_rng(c) for c in children]
