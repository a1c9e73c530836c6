"""Franke/Kostant decomposition tables and the block characters of η-invariant partitions."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .charsets import CharSet, classify
from .errors import PreconditionError, check
from .exactnum import HalfInt
from .partitions import (
    NumberedPartition,
    Permutation,
    enumerate_representatives,
    eta_permutation,
    kostant_subset,
    reduce_pi,
    w_of,
)
from .weights import DominantWeight, GroupShape, as_linear, is_eta_invariant, weight_of_charset


@dataclass(frozen=True)
class BlockCharacter:
    sigma: CharSet
    j: int
    gamma: int
    k: int
    chi: tuple[int, ...]
    kind: str

    def to_json(self) -> dict:
        return {
            "sigma": self.sigma.to_json(),
            "j": self.j,
            "gamma": self.gamma,
            "k": self.k,
            "chi": list(self.chi),
            "kind": self.kind,
        }


@dataclass(frozen=True)
class FrankeTerm:
    partition: NumberedPartition
    w: Permutation
    length: int
    sign: Optional[int]
    kostant_I: tuple[int, ...]
    levi: tuple[int, ...]
    shifted_weight: tuple[int, ...]
    block_weights: tuple[tuple[int, ...], ...]
    sp_length: Optional[int] = None
    block_characters: tuple[BlockCharacter, ...] = field(default=())
    lift_sign_exponent: Optional[int] = None

    def to_json(self) -> dict:
        out = {
            "blocks": [list(b) for b in self.partition.blocks],
            "w_one_line": self.w.to_json(),
            "length": self.length,
            "sign": self.sign,
            "I": list(self.kostant_I),
            "levi": list(self.levi),
            "shifted_weight": list(self.shifted_weight),
            "block_weights": [list(b) for b in self.block_weights],
        }
        if self.sp_length is not None:
            out["sp_length"] = self.sp_length
        if self.block_characters:
            out["block_characters"] = [c.to_json() for c in self.block_characters]
        if self.lift_sign_exponent is not None:
            out["lift_sign_exponent"] = self.lift_sign_exponent
        return out


def _linear(chi: DominantWeight) -> DominantWeight:
    chi = as_linear(chi)
    if not chi.shape.is_linear:
        raise PreconditionError(f"{chi.shape} is not a linear shape")
    return chi


def weyl_shift(chi: DominantWeight, w: Permutation) -> tuple[int, ...]:
    """w(χ+ρ)-ρ via b_i = a_{w⁻¹(i)} + i - w⁻¹(i)."""
    chi = _linear(chi)
    if w.n != chi.n:
        raise PreconditionError(f"permutation of rank {w.n} does not match weight of rank {chi.n}")
    winv = w.inverse()
    return tuple(chi.coords[winv(i) - 1] + i - winv(i) for i in range(1, chi.n + 1))


def weyl_shift_two_step(chi: DominantWeight, w: Permutation) -> tuple[int, ...]:
    """Permute the entries of χ+ρ by w, then subtract ρ."""
    chi = _linear(chi)
    winv = w.inverse()
    moved = [chi.shifted[winv(i) - 1] for i in range(1, chi.n + 1)]
    return tuple((m - r).twice // 2 for m, r in zip(moved, chi.rho))


def sp_length(w: Permutation) -> int:
    """Length of an η-fixed permutation in the folded Weyl group of type C.

    Counts pairs {α, η(α)} of distinct positive roots made negative by w.
    """
    n = w.n
    if eta_permutation(w) != w:
        raise PreconditionError(f"{w.images} is not η-fixed")
    count = 0
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            mirror = (n + 1 - j, n + 1 - i)
            if mirror == (i, j) or mirror < (i, j):
                continue
            if w(i) > w(j):
                count += 1
    return count


def _split(values: Sequence[int], sizes: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    out, pos = [], 0
    for s in sizes:
        out.append(tuple(values[pos:pos + s]))
        pos += s
    return tuple(out)


def make_term(chi: DominantWeight, j: NumberedPartition, signed: bool = True) -> FrankeTerm:
    w = w_of(j)
    shifted = weyl_shift(chi, w)
    blocks = _split(shifted, j.sizes)
    check(
        all(b[i] >= b[i + 1] for b in blocks for i in range(len(b) - 1)),
        f"Kostant condition fails for {j}",
    )
    return FrankeTerm(
        partition=j,
        w=w,
        length=w.length,
        sign=w.sign if signed else None,
        kostant_I=tuple(sorted(kostant_subset(j))),
        levi=j.sizes,
        shifted_weight=shifted,
        block_weights=blocks,
    )


def franke_terms(chi: DominantWeight) -> list[FrankeTerm]:
    """One signed term per unordered partition of 1..n."""
    chi = _linear(chi)
    return [make_term(chi, j) for j in enumerate_representatives(chi.n, chi, "all")]


def _require_invariant(chi: DominantWeight) -> DominantWeight:
    chi = _linear(chi)
    if not is_eta_invariant(chi):
        raise PreconditionError("weight is not η-invariant")
    return chi


def franke_terms_sp(chi: DominantWeight) -> list[FrankeTerm]:
    """Unsigned terms indexed by the η-fixed representatives, with their type C lengths."""
    chi = _require_invariant(chi)
    terms = []
    for j in enumerate_representatives(chi.n, chi, "fixed"):
        term = make_term(chi, j, signed=False)
        terms.append(_with(term, sp_length=sp_length(term.w)))
    return terms


def _with(term: FrankeTerm, **changes) -> FrankeTerm:
    data = dict(term.__dict__)
    data.update(changes)
    return FrankeTerm(**data)


def index_partition(s_chi: CharSet, blocks: Sequence[CharSet]) -> NumberedPartition:
    """Transport a partition of S_χ to positions 1..n, where position x carries the x-th largest element."""
    desc = list(reversed(s_chi.elements))
    position = {v: x for x, v in enumerate(desc, start=1)}
    index_blocks = []
    for b in blocks:
        try:
            index_blocks.append(tuple(position[v] for v in b.elements))
        except KeyError:
            raise PreconditionError(f"block {b} is not contained in {s_chi}") from None
    try:
        return NumberedPartition(tuple(index_blocks), len(desc), tuple(str(v) for v in desc))
    except ValueError as exc:
        raise PreconditionError(f"blocks do not partition {s_chi}: {exc}") from None


def _block_chi(sigma: CharSet, k: int) -> tuple[str, int, tuple[int, ...]]:
    pos = sigma.positive
    gamma = len(pos)
    b = [p.twice // 2 - t for t, p in enumerate(pos, start=1)]
    if HalfInt(0) in sigma.elements:
        check(k % 2 == 0, "C block needs even k")
        h = k // 2
        chi = [b[t] - h for t in reversed(range(gamma))] + [-h] + [-b[t] - h for t in range(gamma)]
        return "C", gamma, tuple(chi)
    check(k % 2 == 1, "D block needs odd k")
    up, down = (1 - k) // 2, (-1 - k) // 2
    chi = [b[t] + up for t in reversed(range(gamma))] + [-b[t] + down for t in range(gamma)]
    return "D", gamma, tuple(chi)


def block_characters(s_chi: CharSet, blocks: Sequence[CharSet]) -> list[BlockCharacter]:
    """Per-block (k_i, χ_i) for a partition of a type C set into characteristic sets."""
    if classify(s_chi).kind != "C":
        raise PreconditionError("block_characters needs a type C set")
    for b in blocks:
        if not b.is_integral:
            raise PreconditionError(f"block {b} is not integral")
    j_part = index_partition(s_chi, blocks)
    if sum(HalfInt(0) in b.elements for b in blocks) != 1:
        raise PreconditionError("exactly one block must contain 0")
    sizes = [len(b) for b in blocks]
    out = []
    for i, sigma in enumerate(blocks):
        k = -sum(sizes[:i]) + sum(sizes[i + 1:])
        kind, gamma, chi = _block_chi(sigma, k)
        check(k % 2 == (1 + len(sigma)) % 2, "parity law k_i = 1 + #Σ_i fails")
        check(tuple(-x for x in reversed(chi)) == tuple(x + k for x in chi), "η(χ_i) != χ_i + k_i")
        check(all(chi[t] >= chi[t + 1] for t in range(len(chi) - 1)), "block character not dominant")
        out.append(BlockCharacter(sigma, len(sigma), gamma, k, chi, kind))
    chi_full = weight_of_charset(s_chi, GroupShape("PGL", len(s_chi)))
    concat = tuple(x for c in out for x in c.chi)
    check(weyl_shift(chi_full, w_of(j_part)) == concat, "concatenation identity fails")
    return out


def lifting_terms(chi: DominantWeight) -> list[FrankeTerm]:
    """Terms of the η-invariant representatives together with their block characters."""
    chi = _require_invariant(chi)
    if chi.shape.kind != "PGL" or chi.n % 2 == 0:
        raise PreconditionError("lifting_terms needs a PGL(2g+1) weight")
    s_chi = CharSet(chi.shifted)
    desc = chi.shifted
    terms = []
    for j in enumerate_representatives(chi.n, chi, "invariant"):
        term = make_term(chi, j)
        sigmas = [CharSet(tuple(desc[x - 1] for x in b)) for b in j.blocks]
        chars = tuple(block_characters(s_chi, sigmas))
        base = w_of(reduce_pi(j))
        terms.append(
            _with(term, block_characters=chars, lift_sign_exponent=term.length - sp_length(base))
        )
    return terms
