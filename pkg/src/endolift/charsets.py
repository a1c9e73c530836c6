"""Characteristic sets, their types, the MW shift construction and its inverse."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, TypeVar

from .errors import DomainError, PreconditionError
from .exactnum import HalfInt

T = TypeVar("T")


@dataclass(frozen=True)
class CharType:
    kind: str  # "B", "C" or "D"
    rank: int

    def __str__(self):
        return f"{self.kind}{self.rank}"

    def to_json(self) -> dict:
        return {"kind": self.kind, "rank": self.rank}


@dataclass(frozen=True)
class CharSet:
    """A nonempty symmetric subset of ½ℤ whose elements differ by integers."""

    elements: tuple[HalfInt, ...]

    def __post_init__(self):
        elems = tuple(sorted(HalfInt.of(e) for e in self.elements))
        if not elems:
            raise DomainError("a characteristic set must be nonempty")
        if len(set(elems)) != len(elems):
            raise DomainError("a characteristic set has no repeated elements")
        members = set(elems)
        if any(-e not in members for e in elems):
            raise DomainError("a characteristic set must be symmetric under s -> -s")
        parity = elems[0].twice % 2
        if any(e.twice % 2 != parity for e in elems):
            raise DomainError("elements of a characteristic set must differ by integers")
        object.__setattr__(self, "elements", elems)

    @classmethod
    def of(cls, values: Iterable) -> CharSet:
        return cls(tuple(HalfInt.of(v) for v in values))

    @classmethod
    def parse(cls, text: str) -> CharSet:
        """Parse a comma separated list such as ``"-3/2,3/2"``."""
        parts = [p for p in text.replace(" ", "").split(",") if p]
        try:
            return cls.of(parts)
        except (ValueError, ZeroDivisionError) as exc:
            raise DomainError(f"cannot parse characteristic set {text!r}: {exc}") from None

    def __iter__(self) -> Iterator[HalfInt]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, item) -> bool:
        try:
            return HalfInt.of(item) in set(self.elements)
        except (TypeError, ValueError):
            return False

    @property
    def is_integral(self) -> bool:
        return self.elements[0].is_integral

    @property
    def positive(self) -> tuple[HalfInt, ...]:
        """The strictly positive elements in ascending order."""
        return tuple(e for e in self.elements if e.twice > 0)

    @property
    def maximum(self) -> HalfInt:
        return self.elements[-1]

    def __str__(self):
        return "{" + ",".join(str(e) for e in self.elements) + "}"

    def to_json(self) -> list:
        return [e.to_json() for e in self.elements]

    @classmethod
    def from_json(cls, data: list) -> CharSet:
        return cls(tuple(HalfInt.from_json(d) for d in data))


def classify(s: CharSet) -> CharType:
    size = len(s)
    if not s.is_integral:
        return CharType("B", size // 2)
    if HalfInt(0) in s.elements:
        return CharType("C", (size - 1) // 2)
    return CharType("D", size // 2)


def elementary(n: int) -> CharSet:
    """E_n = {-(n+1)/2 + i : 1 <= i <= n}."""
    if n < 1:
        raise DomainError("elementary set needs n >= 1")
    return CharSet(tuple(HalfInt(2 * i - n - 1) for i in range(1, n + 1)))


def is_admissible(s: CharSet, n: int) -> bool:
    """True iff distinct elements of ``s`` are at distance at least ``n``."""
    elems = s.elements
    return all(elems[i + 1].twice - elems[i].twice >= 2 * n for i in range(len(elems) - 1))


def mw(s: CharSet, n: int) -> CharSet:
    """MW(S, n) = {s + e : s in S, e in E_n}."""
    if n < 1:
        raise DomainError("mw needs n >= 1")
    if not is_admissible(s, n):
        raise PreconditionError(f"{s} is not {n}-admissible")
    shifts = elementary(n).elements
    return CharSet(tuple(x + e for x in s.elements for e in shifts))


def _divisors(m: int) -> list[int]:
    return [d for d in range(1, m + 1) if m % d == 0]


def mw_factorizations(s: CharSet) -> list[tuple[CharSet, int]]:
    """All (S0, n) with S0 n-admissible and mw(S0, n) == s, ordered by n."""
    elems = s.elements
    found = []
    for n in _divisors(len(elems)):
        runs = [elems[i:i + n] for i in range(0, len(elems), n)]
        if any(run[k + 1].twice - run[k].twice != 2 for run in runs for k in range(n - 1)):
            continue
        # center of a unit-step run of length n is its first element + (n-1)/2
        centers = [HalfInt(run[0].twice + n - 1) for run in runs]
        try:
            seed = CharSet(tuple(centers))
        except DomainError:
            continue
        if is_admissible(seed, n):
            found.append((seed, n))
    return found


def set_partitions(items: Sequence[T]) -> Iterator[list[list[T]]]:
    """All set partitions of ``items``; blocks keep the input order."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        yield [[first]] + part
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]


def canonical_blocks(blocks: Iterable[CharSet]) -> tuple[CharSet, ...]:
    """Block containing 0 first, the others by descending maximum."""
    return tuple(sorted(blocks, key=lambda b: (HalfInt(0) not in b.elements, -b.maximum.twice)))


def symmetric_partitions(s: CharSet) -> list[tuple[CharSet, ...]]:
    """Partitions of a type C set into characteristic sets, blocks in canonical order."""
    if classify(s).kind != "C":
        raise PreconditionError("symmetric_partitions needs a type C set")
    atoms = [(HalfInt(0),)] + [(-x, x) for x in s.positive]
    result = []
    for part in set_partitions(atoms):
        blocks = [CharSet(tuple(e for atom in block for e in atom)) for block in part]
        result.append(canonical_blocks(blocks))
    result.sort(key=lambda p: (len(p), [[e.twice for e in b] for b in p]))
    return result
