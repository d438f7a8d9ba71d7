"""Deterministic random streams keyed by structured labels.

Python's built-in hash of strings is salted per process, so seeding
random.Random with hash((seed, label)) would break run-to-run determinism.
This helper derives the stream from a SHA-256 digest of the repr instead.
"""

from __future__ import annotations

import hashlib
import random


def stable_rng(*key) -> random.Random:
    digest = hashlib.sha256(repr(key).encode()).digest()
    return random.Random(int.from_bytes(digest[:8], "big"))
