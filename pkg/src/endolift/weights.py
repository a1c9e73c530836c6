"""Dominant weights, ρ, the weight/characteristic-set dictionaries and related lattice maps."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence

from .charsets import CharSet, classify
from .errors import DomainError, PreconditionError, check
from .exactnum import HalfInt

LINEAR = ("GL", "PGL", "GLxGL1")
SHAPES = LINEAR + ("Sp", "GSO", "GSpin")


@dataclass(frozen=True)
class GroupShape:
    """``kind`` with its size: n for linear shapes, g for Sp(2g), GSO(2g) and GSpin(2g)."""

    kind: str
    n: int

    def __post_init__(self):
        if self.kind not in SHAPES:
            raise DomainError(f"unknown group shape {self.kind!r}")
        if self.n < (0 if self.kind == "Sp" else 1):
            raise DomainError(f"invalid size {self.n} for {self.kind}")

    @property
    def is_linear(self) -> bool:
        return self.kind in LINEAR

    def __str__(self):
        if self.kind in ("Sp", "GSO", "GSpin"):
            return f"{self.kind}({2 * self.n})"
        return f"{self.kind}({self.n})"


@dataclass(frozen=True)
class DominantWeight:
    """Integral dominant weight in ambient coordinates.

    Linear shapes carry ``coords = (a_1, ..., a_n)`` and, for GLxGL1, ``a0``.
    Sp(2g) carries ``(a_g, ..., a_1)`` with ``a_g >= ... >= a_1 >= 0``.
    GSO(2g) carries ``(n_1, ..., n_g)`` with ``a0 = n_0``.
    """

    shape: GroupShape
    coords: tuple[int, ...]
    a0: Optional[int] = None

    def __post_init__(self):
        coords = tuple(int(c) for c in self.coords)
        object.__setattr__(self, "coords", coords)
        kind, n = self.shape.kind, self.shape.n
        if len(coords) != n:
            raise DomainError(f"{self.shape} needs {n} coordinates, got {len(coords)}")
        if kind in ("GLxGL1", "GSO") and self.a0 is None:
            raise DomainError(f"{self.shape} needs a0")
        if kind not in ("GLxGL1", "GSO", "GSpin") and self.a0 is not None:
            raise DomainError(f"{self.shape} takes no a0")
        if kind == "GSO":
            if n >= 2 and not (_weakly_decreasing(coords) and coords[-1] >= self.a0 - coords[-2]):
                raise DomainError(f"{coords} with n0={self.a0} is not GSO-dominant")
            return
        if not _weakly_decreasing(coords):
            raise DomainError(f"{coords} is not dominant")
        if kind == "PGL" and sum(coords) != 0:
            raise DomainError("PGL weights need coordinate sum 0")
        if kind == "Sp" and coords and coords[-1] < 0:
            raise DomainError("Sp weights need nonnegative coordinates")

    @classmethod
    def gl(cls, coords: Sequence[int]) -> DominantWeight:
        return cls(GroupShape("GL", len(coords)), tuple(coords))

    @classmethod
    def pgl(cls, coords: Sequence[int]) -> DominantWeight:
        return cls(GroupShape("PGL", len(coords)), tuple(coords))

    @classmethod
    def gl_gl1(cls, coords: Sequence[int], a0: int) -> DominantWeight:
        return cls(GroupShape("GLxGL1", len(coords)), tuple(coords), a0)

    @classmethod
    def sp(cls, coords: Sequence[int]) -> DominantWeight:
        return cls(GroupShape("Sp", len(coords)), tuple(coords))

    @classmethod
    def gso(cls, n0: int, coords: Sequence[int]) -> DominantWeight:
        return cls(GroupShape("GSO", len(coords)), tuple(coords), n0)

    @property
    def n(self) -> int:
        return self.shape.n

    @property
    def rho(self) -> tuple[HalfInt, ...]:
        """ρ = ((n-1)/2, ..., (1-n)/2) for linear shapes."""
        _require_linear(self)
        n = self.n
        return tuple(HalfInt(n + 1 - 2 * i) for i in range(1, n + 1))

    @property
    def shifted(self) -> tuple[HalfInt, ...]:
        """Entries of χ + ρ."""
        return tuple(HalfInt(2 * a) + r for a, r in zip(self.coords, self.rho))

    @property
    def weight(self) -> Optional[int]:
        """w(χ) = a0 for GLxGL1, otherwise None."""
        return self.a0 if self.shape.kind == "GLxGL1" else None

    def to_json(self) -> dict:
        out = {"shape": str(self.shape), "coords": list(self.coords)}
        if self.a0 is not None:
            out["a0"] = self.a0
        return out


def _weakly_decreasing(values: Sequence) -> bool:
    return all(values[i] >= values[i + 1] for i in range(len(values) - 1))


def _require_linear(chi: DominantWeight) -> None:
    if not chi.shape.is_linear:
        raise PreconditionError(f"operation needs a linear shape, got {chi.shape}")


def embed_sp(chi: DominantWeight) -> DominantWeight:
    """Sp(2g) weight (a_g, ..., a_1) as the η-invariant PGL(2g+1) weight (a_g..a_1, 0, -a_1..-a_g)."""
    if chi.shape.kind != "Sp":
        raise PreconditionError("embed_sp needs an Sp weight")
    c = chi.coords
    return DominantWeight.pgl(c + (0,) + tuple(-x for x in reversed(c)))


def as_linear(chi: DominantWeight) -> DominantWeight:
    return embed_sp(chi) if chi.shape.kind == "Sp" else chi


def eta_weight(chi: DominantWeight) -> DominantWeight:
    """η(χ): (a) -> (-a_n, ..., -a_1), or (a0 - a_n, ..., a0 - a_1; a0) for GLxGL1."""
    chi = as_linear(chi)
    _require_linear(chi)
    shift = chi.a0 if chi.shape.kind == "GLxGL1" else 0
    return DominantWeight(chi.shape, tuple(shift - a for a in reversed(chi.coords)), chi.a0)


def is_eta_invariant(chi: DominantWeight) -> bool:
    lin = as_linear(chi)
    return eta_weight(lin) == lin


def describing_set(chi: DominantWeight) -> tuple[HalfInt, ...]:
    """Entries of χ+ρ (minus b0/2 for GLxGL1) in position order, i.e. descending."""
    chi = as_linear(chi)
    entries = chi.shifted
    if chi.shape.kind == "GLxGL1":
        entries = tuple(HalfInt(b.twice - chi.a0) for b in entries)
    return entries


def charset_of(chi: DominantWeight) -> tuple[CharSet, Optional[int]]:
    """The describing set S_χ as a CharSet together with w(χ) (GLxGL1 only)."""
    lin = as_linear(chi)
    entries = describing_set(lin)
    try:
        s = CharSet(entries)
    except DomainError as exc:
        raise PreconditionError(f"describing set of {lin.coords} is not a characteristic set: {exc}") from None
    return s, lin.weight


def weight_of_charset(s: CharSet, shape: GroupShape, w: Optional[int] = None) -> DominantWeight:
    """Inverse dictionary: the η-invariant dominant weight with S_χ = s (and w(χ) = w)."""
    t = classify(s)
    desc = tuple(reversed(s.elements))
    if shape.kind == "PGL":
        if t.kind != "C" or shape.n != 2 * t.rank + 1:
            raise PreconditionError(f"{s} of type {t} does not match {shape}")
        rho = DominantWeight.pgl((0,) * shape.n).rho
        return DominantWeight(shape, tuple((b - r).twice // 2 for b, r in zip(desc, rho)))
    if shape.kind == "GLxGL1":
        if w is None:
            raise PreconditionError("GLxGL1 needs the weight w")
        if t.kind not in ("B", "D") or shape.n != 2 * t.rank:
            raise PreconditionError(f"{s} of type {t} does not match {shape}")
        if (t.kind == "B") != (w % 2 == 0):
            raise PreconditionError(f"type {t.kind} needs {'even' if t.kind == 'B' else 'odd'} w, got {w}")
        rho = DominantWeight.gl((0,) * shape.n).rho
        # χ_i = s_i + w/2 - ρ_i, computed on doubled values
        twice = [b.twice + w - r.twice for b, r in zip(desc, rho)]
        check(all(t % 2 == 0 for t in twice), "non-integral weight from characteristic set")
        return DominantWeight(shape, tuple(t // 2 for t in twice), w)
    raise PreconditionError(f"no characteristic set dictionary for {shape}")


def sigma_star(chi: DominantWeight) -> DominantWeight:
    """σ*χ for GSO(2g): n_g -> n_0 - n_g."""
    if chi.shape.kind != "GSO":
        raise PreconditionError("sigma_star needs a GSO weight")
    c = chi.coords
    return DominantWeight(chi.shape, c[:-1] + (chi.a0 - c[-1],), chi.a0)


def sigma_status(chi: DominantWeight) -> str:
    """'fixed', 'positive' or 'flipped' according to the sign of n_g - n_0/2."""
    if chi.shape.kind != "GSO":
        raise PreconditionError("sigma_status needs a GSO weight")
    diff = 2 * chi.coords[-1] - chi.a0
    if diff == 0:
        return "fixed"
    if diff > 0:
        return "positive"
    flipped = sigma_star(chi)
    check(2 * flipped.coords[-1] - flipped.a0 > 0, "σ* did not produce a positive weight")
    return "flipped"


def _gspin_args(chi: DominantWeight) -> tuple[int, tuple[int, ...]]:
    if chi.shape.kind != "GLxGL1" or chi.n % 2:
        raise PreconditionError("gspin_iota needs a GLxGL1(2g) weight")
    if not is_eta_invariant(chi):
        raise PreconditionError("gspin_iota needs an η-invariant weight")
    return chi.a0, chi.coords[: chi.n // 2]


def gspin_iota(chi: DominantWeight) -> tuple[HalfInt, ...]:
    """ι(χ) = (m_0; m_1 - (m_0-1)/2, ..., m_g - (m_0-1)/2)."""
    m0, m = _gspin_args(chi)
    return (HalfInt(2 * m0),) + tuple(HalfInt(2 * mi - m0 + 1) for mi in m)


def delta_gspin(g: int) -> tuple[int, ...]:
    """δ_GSpin = (0; g-1, ..., 1, 0)."""
    return (0,) + tuple(range(g - 1, -1, -1))


def delta_g(g: int) -> tuple[HalfInt, ...]:
    """δ_G = (g-1/2, ..., 1/2-g; 0) on GL(2g) x GL(1)."""
    return tuple(HalfInt(2 * g + 1 - 2 * i) for i in range(1, 2 * g + 1)) + (HalfInt(0),)


def i_map(m: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """i(m_0, ..., m_g) = (m_1, ..., m_g, m_0 - m_g, ..., m_0 - m_1; m_0)."""
    m0, rest = m[0], tuple(m[1:])
    return rest + tuple(m0 - x for x in reversed(rest)) + (m0,)


def i_inverse(v: Sequence[Fraction]) -> tuple[Fraction, ...]:
    g = (len(v) - 1) // 2
    m = (v[-1],) + tuple(v[:g])
    check(tuple(i_map(m)) == tuple(v), "vector is not in the image of i")
    return m


def pi_star(m: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """π*(m_0; m_1, ..., m_g) = (m_0; m_i - m_0/2)."""
    return (m[0],) + tuple(x - Fraction(m[0], 2) for x in m[1:])


def gspin_iota_via_lattice(chi: DominantWeight) -> tuple[HalfInt, ...]:
    """ι(χ) computed as π*(i⁻¹(χ + δ_G) - δ_GSpin)."""
    _gspin_args(chi)
    g = chi.n // 2
    vec = [Fraction(a) for a in chi.coords] + [Fraction(chi.a0)]
    shifted = [v + d.to_fraction() for v, d in zip(vec, delta_g(g))]
    pre = i_inverse(shifted)
    moved = [x - d for x, d in zip(pre, delta_gspin(g))]
    return tuple(HalfInt.of(x) for x in pi_star(moved))


@dataclass(frozen=True)
class ArchParam:
    entries: tuple[HalfInt, ...]
    weight_b0: HalfInt
    epsilon: int

    @property
    def pairs(self) -> tuple[tuple[HalfInt, HalfInt], ...]:
        """(b_i, b_{n+1-i}) for i <= n/2."""
        n = len(self.entries)
        return tuple((self.entries[i], self.entries[n - 1 - i]) for i in range(n // 2))

    def to_json(self) -> dict:
        return {
            "entries": [e.to_json() for e in self.entries],
            "weight_b0": self.weight_b0.to_json(),
            "epsilon": self.epsilon,
            "pairing": "a_i * a_{n+1-i} = epsilon",
        }


def arch_param(chi: DominantWeight) -> ArchParam:
    """The data (b_i; b_0; ε) of the archimedean parameter of an η-invariant weight."""
    chi = as_linear(chi)
    _require_linear(chi)
    if not is_eta_invariant(chi):
        raise PreconditionError("arch_param needs an η-invariant weight")
    entries = chi.shifted
    b0 = HalfInt(2 * chi.a0) if chi.shape.kind == "GLxGL1" else HalfInt(0)
    eps = 1 if all(e.is_integral for e in describing_set(chi)) else -1
    param = ArchParam(entries, b0, eps)
    check(all(x + y == b0 for x, y in param.pairs), "b_i + b_{n+1-i} != b_0")
    return param


def langlands_target(s: CharSet) -> str:
    """'GSp' for type B, 'GSO' for type D."""
    kind = classify(s).kind
    if kind == "C":
        raise PreconditionError("type C sets have no even-dimensional target")
    return "GSp" if kind == "B" else "GSO"


def _eta_root(n: int, root: tuple[int, int]) -> tuple[int, int]:
    # η(e_i - e_j) = e_{n+1-j} - e_{n+1-i}
    i, j = root
    return (n + 1 - j, n + 1 - i)


def _root_vector(n: int, root: tuple[int, int]) -> list[int]:
    v = [0] * n
    v[root[0] - 1] += 1
    v[root[1] - 1] -= 1
    return v


def rho_compat_check(g: int) -> bool:
    """Fold A_{2g} along η and compare half the sum of folded positive roots with ρ of PGL(2g+1)."""
    if g < 1:
        raise DomainError("rho_compat_check needs g >= 1")
    n = 2 * g + 1
    rho = DominantWeight.pgl((0,) * n).rho
    if tuple(-r for r in reversed(rho)) != rho:
        return False
    positive = set(combinations(range(1, n + 1), 2))
    total = [Fraction(0)] * n
    seen = set()
    for alpha in sorted(positive):
        if alpha in seen:
            continue
        beta = _eta_root(n, alpha)
        seen.update({alpha, beta})
        if beta == alpha:
            continue  # long root α0 = α1 + η(α1); its direction is covered by the short orbit
        orbit_sum = [x + y for x, y in zip(_root_vector(n, alpha), _root_vector(n, beta))]
        is_root = sorted(orbit_sum) == [-1] + [0] * (n - 2) + [1]
        c = 2 if is_root else 1
        total = [t + c * x for t, x in zip(total, orbit_sum)]
    return [t / 2 for t in total] == [r.to_fraction() for r in rho]
