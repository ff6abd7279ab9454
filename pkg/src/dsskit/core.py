"""Fundamental combinatorial types: difference systems of sets over Z_v,
difference spectra, and frequency hopping sequences.

All types are frozen dataclasses; residues live in [0, v) and are reduced at
construction time, never lazily. The canonical JSON interchange document for
a DSS is::

    {"v": <int>, "sets": [[<int>, ...], ...],
     "provenance": <string>, "claimed_index": <int|null>}

with each set sorted ascending and the set order preserved.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from fractions import Fraction

from .errors import (
    ElementOutOfRange,
    EmptyFamily,
    NotRateOne,
    SetsNotDisjoint,
    ValidationError,
)

# Largest supported modulus; spectra index into length-v arrays so anything
# near this is only usable through the (much smaller) verification budget.
MAX_MODULUS = 2**63 - 1


@dataclass(frozen=True)
class Dss:
    """A family of disjoint residue sets over Z_v.

    ``claimed_index`` is advisory metadata recorded by constructions; no
    operation trusts it without re-verification (see ``verifier.check_claim``).
    """

    v: int
    sets: tuple[tuple[int, ...], ...]
    provenance: str = ""
    claimed_index: int | None = None

    @property
    def q(self) -> int:
        return len(self.sets)

    @property
    def redundancy(self) -> int:
        """Number of residues used by the family, |Q_0 ∪ ... ∪ Q_{q-1}|."""
        return sum(len(s) for s in self.sets)

    @property
    def rate(self) -> Fraction:
        """Fraction of each length-v block spent on markers, s/v."""
        return Fraction(self.redundancy, self.v)

    def support(self) -> tuple[int, ...]:
        return tuple(sorted(x for s in self.sets for x in s))

    def set_sizes(self) -> tuple[int, ...]:
        return tuple(sorted(len(s) for s in self.sets))

    def to_json_dict(self) -> dict:
        return {
            "v": self.v,
            "sets": [list(s) for s in self.sets],
            "provenance": self.provenance,
            "claimed_index": self.claimed_index,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2) + "\n"

    def with_provenance(self, provenance: str) -> "Dss":
        return replace(self, provenance=provenance)


@dataclass(frozen=True)
class DifferenceSpectrum:
    """Occurrence counts of every difference d in Z_v.

    ``counts[d]`` is the number of ordered element pairs realizing d; ``kind``
    says whether pairs were drawn across distinct sets ("outer") or within a
    set ("inner").
    """

    v: int
    counts: tuple[int, ...]
    kind: str

    def __post_init__(self) -> None:
        if self.kind not in ("outer", "inner"):
            raise ValidationError(f"unknown spectrum kind {self.kind!r}")
        if len(self.counts) != self.v:
            raise ValidationError("counts array must have length v")


@dataclass(frozen=True)
class FrequencyHoppingSequence:
    """A period-v symbol vector over the alphabet [0, q).

    Reading the support of each symbol yields a DSS whose sets partition Z_v
    (redundancy rate one); the two views are interchangeable via
    ``fhs_to_dss`` / ``dss_to_fhs``.
    """

    v: int
    q: int
    symbols: tuple[int, ...] = field(default=())

    def __post_init__(self) -> None:
        if self.v < 1 or self.q < 1:
            raise ValidationError("period and alphabet size must be positive")
        if len(self.symbols) != self.v:
            raise ValidationError(f"expected {self.v} symbols, got {len(self.symbols)}")
        if any(not (0 <= x < self.q) for x in self.symbols):
            raise ValidationError("symbols must lie in [0, q)")


def new_dss(
    v: int,
    sets,
    provenance: str = "",
    claimed_index: int | None = None,
) -> Dss:
    """Validate and canonicalize a residue-set family into a `Dss`.

    Each set is sorted ascending; the order of the sets themselves is kept.
    Raises ElementOutOfRange, SetsNotDisjoint or EmptyFamily on bad input.
    """
    if not (1 <= v <= MAX_MODULUS):
        raise ElementOutOfRange(f"modulus {v} outside [1, 2^63)")
    sets = [list(s) for s in sets]
    if not sets:
        raise EmptyFamily("a DSS needs at least one set")
    seen: set[int] = set()
    canonical = []
    for i, s in enumerate(sets):
        for x in s:
            if not (0 <= x < v):
                raise ElementOutOfRange(f"residue {x} in set {i} outside [0, {v})")
            if x in seen:
                raise SetsNotDisjoint(f"residue {x} appears more than once")
            seen.add(x)
        canonical.append(tuple(sorted(s)))
    if claimed_index is not None and claimed_index < 0:
        raise ValidationError("claimed_index must be nonnegative")
    return Dss(v=v, sets=tuple(canonical), provenance=provenance, claimed_index=claimed_index)


def dss_from_json_dict(doc: dict) -> Dss:
    try:
        v = doc["v"]
        sets = doc["sets"]
    except (TypeError, KeyError) as exc:
        raise ValidationError(f"DSS document missing field: {exc}") from exc
    return new_dss(
        v,
        sets,
        provenance=doc.get("provenance", ""),
        claimed_index=doc.get("claimed_index"),
    )


def dss_from_json(text: str) -> Dss:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"invalid JSON: {exc}") from exc
    return dss_from_json_dict(doc)


def fhs_to_dss(x: FrequencyHoppingSequence, provenance: str = "fhs-support") -> Dss:
    """Read a hopping sequence as the DSS of its symbol supports.

    Supports are taken in symbol order; symbols that never occur contribute
    no set. The result always has redundancy rate one.
    """
    supports = [[] for _ in range(x.q)]
    for pos, sym in enumerate(x.symbols):
        supports[sym].append(pos)
    return new_dss(x.v, [s for s in supports if s], provenance=provenance)


def dss_to_fhs(d: Dss) -> FrequencyHoppingSequence:
    """Invert the support map: set i becomes symbol i.

    Requires the sets to partition Z_v (redundancy rate one); raises
    NotRateOne otherwise.
    """
    if d.redundancy != d.v:
        raise NotRateOne(f"support covers {d.redundancy} of {d.v} residues")
    symbols = [0] * d.v
    for i, s in enumerate(d.sets):
        for pos in s:
            symbols[pos] = i
    return FrequencyHoppingSequence(v=d.v, q=d.q, symbols=tuple(symbols))
