"""Size caps, overridable per process through ``COEND_CAP`` or the CLI."""

import os
from contextlib import contextmanager
from dataclasses import dataclass


@dataclass
class Limits:
    max_objects: int = 64
    max_morphisms: int = 512
    max_states: int = 10**6


def _from_env():
    lim = Limits()
    raw = os.environ.get("COEND_CAP")
    if raw:
        lim.max_states = int(raw)
    return lim


LIMITS = _from_env()


@contextmanager
def caps(max_states=None, max_objects=None, max_morphisms=None):
    """Temporarily override the global caps."""
    saved = (LIMITS.max_states, LIMITS.max_objects, LIMITS.max_morphisms)
    if max_states is not None:
        LIMITS.max_states = max_states
    if max_objects is not None:
        LIMITS.max_objects = max_objects
    if max_morphisms is not None:
        LIMITS.max_morphisms = max_morphisms
    try:
        yield LIMITS
    finally:
        LIMITS.max_states, LIMITS.max_objects, LIMITS.max_morphisms = saved
