from dataclasses import dataclass, field
from typing import Any


@dataclass
class Verdict:
    """Outcome of an exhaustive check.

    ``witness`` holds the first counterexample found when scanning in stored
    order; ``detail`` is a short human-readable reason.
    """

    ok: bool
    witness: Any = None
    detail: str = ""
    extra: dict = field(default_factory=dict)

    def __bool__(self):
        return self.ok

    @classmethod
    def passed(cls, detail="", **extra):
        return cls(True, None, detail, extra)

    @classmethod
    def failed(cls, witness, detail="", **extra):
        return cls(False, witness, detail, extra)
