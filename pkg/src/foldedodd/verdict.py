"""Result values for checks that can fail with a concrete witness."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class Verdict:
    """Outcome of a yes/no check. Truthy iff ``ok``.

    ``evidence`` holds JSON-friendly data: the witness on failure, the
    computed quantities on success.
    """

    ok: bool
    reason: str = ""
    evidence: dict[str, Any] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class Refutation:
    """Returned in place of a structured result when the structure does not exist.

    Always falsy, so ``if not result:`` distinguishes it from the success value.
    """

    reason: str
    witness: dict[str, Any] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return False


class CapacityError(RuntimeError):
    """Input is larger than a configured computation limit."""
