from dataclasses import dataclass
from typing import Iterable, Optional, Tuple

Edge = Tuple[int, int]


@dataclass(frozen=True)
class VerificationResult:
    """Outcome of a verifier: a boolean plus the first failure, if any."""

    ok: bool
    diagnostic: Optional[str] = None

    def __bool__(self) -> bool:
        return self.ok

    @classmethod
    def passed(cls) -> "VerificationResult":
        return cls(True, None)

    @classmethod
    def failed(cls, diagnostic: str) -> "VerificationResult":
        return cls(False, diagnostic)


def normalize_edge(u: int, v: int) -> Edge:
    """Return the pair with the smaller id first."""
    return (u, v) if u < v else (v, u)


def sorted_bag(vertices: Iterable[int]) -> Tuple[int, ...]:
    """Canonical bag representation: a sorted tuple without duplicates."""
    return tuple(sorted(set(vertices)))
