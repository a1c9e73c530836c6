"""Numbered partitions of 1..n, the permutation w_J, the η-action and representative systems."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from .charsets import set_partitions
from .errors import DomainError, PreconditionError, check
from .weights import DominantWeight, as_linear, is_eta_invariant

FILTERS = ("all", "stable", "fixed", "invariant")


@dataclass(frozen=True)
class Permutation:
    """A permutation of 1..n in one-line notation: ``images[i-1] == w(i)``."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise DomainError(f"{images} is not a permutation of 1..n")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, wi in enumerate(self.images, start=1):
            inv[wi - 1] = i
        return Permutation(tuple(inv))

    def compose(self, other: Permutation) -> Permutation:
        """``self ∘ other``."""
        return Permutation(tuple(self(other(i)) for i in range(1, self.n + 1)))

    @property
    def length(self) -> int:
        w = self.images
        return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])

    @property
    def sign(self) -> int:
        return -1 if self.length % 2 else 1

    def to_json(self) -> list[int]:
        return list(self.images)


def longest(n: int) -> Permutation:
    """The order reversing permutation i -> n+1-i."""
    return Permutation(tuple(range(n, 0, -1)))


def eta_permutation(w: Permutation) -> Permutation:
    """Conjugation by the longest element."""
    w0 = longest(w.n)
    return w0.compose(w).compose(w0)


@dataclass(frozen=True)
class NumberedPartition:
    """An ordered tuple of disjoint blocks covering 1..n (blocks stored sorted)."""

    blocks: tuple[tuple[int, ...], ...]
    n: int
    labels: Optional[tuple] = None

    def __post_init__(self):
        blocks = tuple(tuple(sorted(int(x) for x in b)) for b in self.blocks)
        if any(not b for b in blocks):
            raise DomainError("blocks must be nonempty")
        flat = sorted(x for b in blocks for x in b)
        if flat != list(range(1, self.n + 1)):
            raise DomainError(f"blocks {blocks} do not partition 1..{self.n}")
        if self.labels is not None and len(self.labels) != self.n:
            raise DomainError("labels must match the ground set size")
        object.__setattr__(self, "blocks", blocks)

    @classmethod
    def of(cls, blocks: Iterable[Iterable[int]], n: Optional[int] = None) -> NumberedPartition:
        blocks = tuple(tuple(b) for b in blocks)
        if n is None:
            n = sum(len(b) for b in blocks)
        return cls(blocks, n)

    @property
    def r(self) -> int:
        return len(self.blocks)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)

    def unordered(self) -> frozenset:
        return frozenset(frozenset(b) for b in self.blocks)

    def __str__(self):
        return "(" + ",".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks) + ")"

    def to_json(self) -> dict:
        out = {"blocks": [list(b) for b in self.blocks]}
        if self.labels is not None:
            out["labels"] = [str(x) for x in self.labels]
        return out


@dataclass(frozen=True)
class EtaClass:
    stable: bool
    fixed: bool
    invariant: bool
    admissible: bool
    chronological: bool

    def to_json(self) -> dict:
        return dict(self.__dict__)


def eta_block(block: Iterable[int], n: int) -> tuple[int, ...]:
    return tuple(sorted(n + 1 - x for x in block))


def eta(j: NumberedPartition) -> NumberedPartition:
    """η(J) = (η(J_r), ..., η(J_1))."""
    return NumberedPartition(tuple(eta_block(b, j.n) for b in reversed(j.blocks)), j.n, j.labels)


def _self_symmetric(block: Sequence[int], n: int) -> bool:
    return eta_block(block, n) == tuple(block)


def eta_admissible_level(j: NumberedPartition) -> Optional[int]:
    """The l witnessing η-admissibility, or None if J is not η-admissible."""
    n, blocks, r = j.n, j.blocks, j.r
    l = 0
    while l < r // 2 and not _self_symmetric(blocks[l], n):
        l += 1
    for mu in range(l):
        if eta_block(blocks[mu], n) != blocks[r - 1 - mu]:
            return None
    if all(_self_symmetric(blocks[mu], n) for mu in range(l, r - l)):
        return l
    return None


def classify_eta(j: NumberedPartition) -> EtaClass:
    e = eta(j)
    blocks = j.blocks
    return EtaClass(
        stable=e.unordered() == j.unordered(),
        fixed=e.blocks == blocks,
        invariant=all(_self_symmetric(b, j.n) for b in blocks),
        admissible=eta_admissible_level(j) is not None,
        chronological=all(blocks[i][-1] < blocks[i + 1][0] for i in range(len(blocks) - 1)),
    )


def _partial_sums(sizes: Sequence[int]) -> list[int]:
    out, acc = [0], 0
    for s in sizes:
        acc += s
        out.append(acc)
    return out


def w_of(j: NumberedPartition) -> Permutation:
    """Maps each J_μ order-preservingly onto the μ-th chronological block."""
    images = [0] * j.n
    pos = 1
    for block in j.blocks:
        for x in block:
            images[x - 1] = pos
            pos += 1
    return Permutation(tuple(images))


def kostant_subset(j: NumberedPartition) -> frozenset[int]:
    """I(J) = {1..n-1} minus the interior partial sums i_1, ..., i_{r-1}."""
    cuts = set(_partial_sums(j.sizes)[1:-1])
    return frozenset(i for i in range(1, j.n) if i not in cuts)


def chronological(sizes: Sequence[int]) -> NumberedPartition:
    sums = _partial_sums(sizes)
    return NumberedPartition(
        tuple(tuple(range(sums[k] + 1, sums[k + 1] + 1)) for k in range(len(sizes))), sums[-1]
    )


def partition_of(w: Permutation, subset: Iterable[int]) -> NumberedPartition:
    """The numbered partition J with w_J = w and I(J) = subset (needs w in W^I)."""
    subset = set(subset)
    n = w.n
    cuts = [i for i in range(1, n) if i not in subset]
    sizes = [b - a for a, b in zip([0] + cuts, cuts + [n])]
    winv = w.inverse()
    chron = chronological(sizes)
    return NumberedPartition(tuple(tuple(winv(x) for x in block) for block in chron.blocks), n)


Weightish = Union[DominantWeight, Sequence[int]]


def _coords(chi: Weightish, n: int) -> tuple[int, ...]:
    if isinstance(chi, DominantWeight):
        chi = as_linear(chi)
        coords = chi.coords
    else:
        coords = tuple(chi)
    if len(coords) != n:
        raise PreconditionError(f"weight of rank {len(coords)} does not match ground set 1..{n}")
    return coords


def means(j: NumberedPartition, chi: Weightish) -> list[Fraction]:
    """m(J_μ) = average over j in J_μ of a_j + (n+1)/2 - j."""
    a = _coords(chi, j.n)
    half = Fraction(j.n + 1, 2)
    return [sum((a[x - 1] + half - x for x in b), Fraction(0)) / len(b) for b in j.blocks]


def is_admissible_numbering(j: NumberedPartition, chi: Weightish) -> bool:
    m = means(j, chi)
    return all(m[i] <= m[i + 1] for i in range(len(m) - 1))


def reduce_pi(j: NumberedPartition) -> NumberedPartition:
    """π(J): merge the self-symmetric middle blocks of an η-admissible J."""
    l = eta_admissible_level(j)
    if l is None:
        raise PreconditionError(f"{j} is not η-admissible")
    if 2 * l == j.r:
        return j
    middle = tuple(x for b in j.blocks[l:j.r - l] for x in b)
    return NumberedPartition(j.blocks[:l] + (middle,) + j.blocks[j.r - l:], j.n, j.labels)


def reduce_k(j: NumberedPartition) -> NumberedPartition:
    """K(J): the middle blocks transported to 1..ñ by w_π(J) followed by the shift σ."""
    l = eta_admissible_level(j)
    if l is None:
        raise PreconditionError(f"{j} is not η-admissible")
    if 2 * l >= j.r:
        raise PreconditionError(f"{j} has no middle blocks")
    w_pi = w_of(reduce_pi(j))
    i_l = sum(j.sizes[:l])
    return NumberedPartition(
        tuple(tuple(w_pi(x) - i_l for x in b) for b in j.blocks[l:j.r - l]), j.n - 2 * i_l
    )


def _block_key(block: Sequence[int], mean: Fraction):
    return (mean, -block[-1], tuple(block))


def admissible_order(blocks: Iterable[Sequence[int]], chi: Weightish, n: int) -> NumberedPartition:
    """Sort blocks into an admissible numbering using the deterministic tie-break."""
    blocks = [tuple(sorted(b)) for b in blocks]
    m = means(NumberedPartition(tuple(blocks), n), chi)
    order = sorted(range(len(blocks)), key=lambda k: _block_key(blocks[k], m[k]))
    return NumberedPartition(tuple(blocks[k] for k in order), n)


def renumber_eta_admissible(j: NumberedPartition, chi: Weightish) -> NumberedPartition:
    """Renumber an η-stable partition into an η-admissible admissible numbering.

    From each pair {B, η(B)} keep the member with smaller mean, sort those by
    mean, put the self-symmetric blocks in the middle and mirror the kept ones.
    """
    n = j.n
    if eta(j).unordered() != j.unordered():
        raise PreconditionError(f"{j} is not η-stable")
    blocks = list(j.blocks)
    m = dict(zip(blocks, means(j, chi)))
    key = lambda b: _block_key(b, m[b])  # noqa: E731
    kept, middle, seen = [], [], set()
    for b in blocks:
        mirror = eta_block(b, n)
        if mirror == b:
            middle.append(b)
        elif b not in seen:
            seen.update({b, mirror})
            kept.append(min(b, mirror, key=key))
    kept.sort(key=key)
    middle.sort(key=key)
    return NumberedPartition(tuple(kept + middle + [eta_block(b, n) for b in reversed(kept)]), n, j.labels)


def representative(blocks: Iterable[Sequence[int]], chi: Weightish, n: int, eta_symmetric: bool) -> NumberedPartition:
    """The chosen admissible numbering of one unordered partition."""
    j = NumberedPartition(tuple(tuple(b) for b in blocks), n)
    if eta_symmetric and eta(j).unordered() == j.unordered():
        rep = renumber_eta_admissible(j, chi)
    else:
        rep = admissible_order(j.blocks, chi, n)
    check(is_admissible_numbering(rep, chi), f"representative {rep} is not admissibly numbered")
    return rep


def _weight_is_symmetric(chi: Weightish, n: int) -> bool:
    if isinstance(chi, DominantWeight):
        return is_eta_invariant(chi)
    a = _coords(chi, n)
    return all(a[i] == -a[n - 1 - i] for i in range(n))


def enumerate_representatives(n: int, chi: Weightish, filter: str = "all") -> list[NumberedPartition]:
    """One admissible numbering per unordered partition of 1..n, optionally filtered by η-class."""
    if filter not in FILTERS:
        raise DomainError(f"unknown filter {filter!r}")
    _coords(chi, n)
    symmetric = _weight_is_symmetric(chi, n)
    reps = [representative(p, chi, n, symmetric) for p in set_partitions(list(range(1, n + 1)))]
    reps.sort(key=lambda j: (j.r, j.blocks))
    if filter == "all":
        return reps
    out = []
    for j in reps:
        c = classify_eta(j)
        if {"stable": c.stable, "fixed": c.fixed, "invariant": c.invariant}[filter]:
            out.append(j)
    return out
