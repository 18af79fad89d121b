"""Persistence diagrams: birth/death pair multisets per homology dimension.

Zero-persistence pairs (birth == death) carry no information for any of the
vectorizations and are discarded at construction time everywhere in this
package. Essential classes have ``death = math.inf``.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Mapping, NamedTuple, Optional, Sequence

from ..errors import ValidationError


class FiltrationKind(str, Enum):
    LOWER_STAR = "lower_star"
    UPPER_STAR = "upper_star"
    VIETORIS_RIPS = "vietoris_rips"
    SUBLEVEL_CUBICAL = "sublevel_cubical"
    SUPERLEVEL_CUBICAL = "superlevel_cubical"


class PersistencePair(NamedTuple):
    birth: float
    death: float  # math.inf for essential classes

    @property
    def persistence(self) -> float:
        return self.death - self.birth


@dataclass(frozen=True)
class PersistenceDiagram:
    """All persistence pairs of one homology dimension of one filtration."""

    dimension: int
    pairs: tuple[PersistencePair, ...]
    filtration_kind: FiltrationKind

    def __post_init__(self) -> None:
        if self.dimension < 0:
            raise ValidationError("homology dimension must be >= 0")
        cleaned = []
        for p in self.pairs:
            pair = PersistencePair(float(p[0]), float(p[1]))
            if not math.isfinite(pair.birth):
                raise ValidationError(f"birth must be finite, got {pair.birth}")
            if pair.death < pair.birth:
                raise ValidationError(f"death < birth in pair {pair}")
            if pair.death > pair.birth:  # drop zero-persistence pairs
                cleaned.append(pair)
        object.__setattr__(self, "pairs", tuple(sorted(cleaned)))

    def __len__(self) -> int:
        return len(self.pairs)

    @property
    def finite_pairs(self) -> tuple[PersistencePair, ...]:
        return tuple(p for p in self.pairs if math.isfinite(p.death))

    @property
    def essential_pairs(self) -> tuple[PersistencePair, ...]:
        return tuple(p for p in self.pairs if math.isinf(p.death))

    def count_alive(self, epsilon: float) -> int:
        """Number of pairs with birth <= epsilon < death."""
        return sum(1 for p in self.pairs if p.birth <= epsilon < p.death)


def diagrams_to_csv(diagrams: Sequence[PersistenceDiagram]) -> str:
    """Serialize diagrams to the ``dim,birth,death`` CSV form (byte-stable)."""
    lines = ["dim,birth,death"]
    for diag in sorted(diagrams, key=lambda d: d.dimension):
        for p in diag.pairs:
            death = "inf" if math.isinf(p.death) else repr(p.death)
            lines.append(f"{diag.dimension},{p.birth!r},{death}")
    return "\n".join(lines) + "\n"


def diagrams_from_csv(
    text: str, filtration_kind: FiltrationKind
) -> list[PersistenceDiagram]:
    """Parse the CSV form back into diagrams (one per dimension present)."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0].strip().lower() != "dim,birth,death":
        raise ValidationError("diagram CSV must start with header dim,birth,death")
    by_dim: dict[int, list[PersistencePair]] = {}
    for ln in lines[1:]:
        fields = ln.split(",")
        if len(fields) != 3:
            raise ValidationError(f"bad diagram row: {ln!r}")
        try:
            dim = int(fields[0])
            birth = float(fields[1])
            death = math.inf if fields[2].strip() == "inf" else float(fields[2])
        except ValueError:
            raise ValidationError(f"bad diagram row: {ln!r}") from None
        by_dim.setdefault(dim, []).append(PersistencePair(birth, death))
    return [
        PersistenceDiagram(dimension=d, pairs=tuple(ps), filtration_kind=filtration_kind)
        for d, ps in sorted(by_dim.items())
    ]


def diagrams_to_json(
    diagrams: Sequence[PersistenceDiagram],
    source: Optional[Mapping[str, object]] = None,
) -> str:
    """JSON form embedding the filtration kind and source metadata."""
    kinds = {d.filtration_kind for d in diagrams}
    if len(kinds) > 1:
        raise ValidationError("cannot mix filtration kinds in one JSON document")
    payload = {
        "filtration_kind": next(iter(kinds)).value if kinds else None,
        "source": dict(source or {}),
        "diagrams": [
            {
                "dimension": d.dimension,
                "pairs": [
                    [p.birth, "inf" if math.isinf(p.death) else p.death]
                    for p in d.pairs
                ],
            }
            for d in sorted(diagrams, key=lambda d: d.dimension)
        ],
    }
    return json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"


def make_diagram(
    dimension: int,
    pairs: Iterable[tuple[float, float]],
    filtration_kind: FiltrationKind,
) -> PersistenceDiagram:
    return PersistenceDiagram(
        dimension=dimension,
        pairs=tuple(PersistencePair(b, d) for b, d in pairs),
        filtration_kind=filtration_kind,
    )
