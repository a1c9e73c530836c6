"""Octuple-skeleton families, Lefschetz numbers, multiplicities and endoscopic grouping."""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from typing import Iterable, Optional, Sequence

from .charsets import CharSet, CharType, classify, is_admissible, mw, mw_factorizations, symmetric_partitions
from .errors import DomainError, InvariantViolation, PreconditionError, check
from .exactnum import HalfInt

MUST_BE_ONE = "must_be_one"
SIGN_CONSTRAINED = "sign_constrained"
FREE = "free"


@dataclass(frozen=True)
class OctupleSkeleton:
    kind: CharType
    gamma: int
    n: int
    seed_set: CharSet
    image_set: CharSet
    d_constraint: str
    d_sign: Optional[int]
    group_labels: tuple[str, str]

    @property
    def image_rank(self) -> int:
        """Rank of MW(S, n): n·γ, plus (n-1)/2 for type C."""
        if self.kind.kind == "C":
            return (len(self.image_set) - 1) // 2
        return len(self.image_set) // 2

    def to_json(self) -> dict:
        return {
            "kind": self.kind.to_json(),
            "gamma": self.gamma,
            "n": self.n,
            "seed_set": self.seed_set.to_json(),
            "image_set": self.image_set.to_json(),
            "d_constraint": self.d_constraint,
            "d_sign": self.d_sign,
            "groups": list(self.group_labels),
        }


def make_octuple(seed: CharSet, n: int) -> OctupleSkeleton:
    """The octuple for MW(seed, n); raises if (kind, parity of n) is not allowed."""
    t = classify(seed)
    g = t.rank
    if t.kind == "C":
        if n % 2 == 0:
            raise PreconditionError("type C seeds need odd n")
        constraint, sign, groups = FREE, None, (f"PGL_{{{2 * g + 1}}}", f"Sp_{{{2 * g}}}")
    elif t.kind == "B":
        if n % 2:
            raise PreconditionError("type B seeds need even n")
        constraint, sign, groups = MUST_BE_ONE, 1, (f"GL_{{{2 * g}}}", f"SO_{{{2 * g + 1}}}")
    else:
        if n % 2 == 0:
            raise PreconditionError("type D seeds need odd n")
        constraint, sign, groups = SIGN_CONSTRAINED, (-1) ** g, (f"GL_{{{2 * g}}}", f"SO^d_{{{2 * g}}}")
    return OctupleSkeleton(t, g, n, seed, mw(seed, n), constraint, sign, groups)


def legal(seed: CharSet, n: int) -> bool:
    kind = classify(seed).kind
    return (n % 2 == 0) if kind == "B" else (n % 2 == 1)


@dataclass(frozen=True)
class LiftFamily:
    octuples: tuple[OctupleSkeleton, ...]
    g: int
    tags: tuple[str, ...] = field(default=())

    @property
    def r(self) -> int:
        return len(self.octuples)

    @property
    def sign_obstructed(self) -> bool:
        return not product_constraint_satisfiable(self.octuples)

    @property
    def multiplicity(self) -> int:
        return multiplicity(self.g, self.r)

    def to_json(self) -> dict:
        return {
            "g": self.g,
            "r": self.r,
            "octuples": [o.to_json() for o in self.octuples],
            "multiplicity": self.multiplicity,
            "multiplicity_status": "conjectural",
            "sign_obstructed": self.sign_obstructed,
            "tags": list(self.tags),
        }


def product_constraint_satisfiable(octuples: Iterable[OctupleSkeleton]) -> bool:
    """Whether Π d_i = 1 has a solution: an unconstrained octuple absorbs any sign,
    otherwise the forced signs must multiply to +1 (odd-prime parts chosen trivially)."""
    octuples = list(octuples)
    if any(o.d_constraint == FREE for o in octuples):
        return True
    sign = 1
    for o in octuples:
        sign *= o.d_sign
    return sign == 1


def validate_family(family: LiftFamily, s_chi: CharSet) -> list[str]:
    """Independent re-derivation of every structural constraint; returns the list of failures."""
    problems = []
    octs = family.octuples
    images = [x for o in octs for x in o.image_set.elements]
    if sorted(images) != list(s_chi.elements):
        problems.append("image sets do not partition S_chi")
    if sum(1 for o in octs if o.kind.kind == "C") != 1:
        problems.append("need exactly one type C octuple")
    for o in octs:
        problems.extend(_octuple_problems(o))
    size = sum(o.n * (2 * o.gamma + (1 if o.kind.kind == "C" else 0)) for o in octs)
    if size != 2 * family.g + 1:
        problems.append("size identity fails")
    if sum(o.image_rank for o in octs) != family.g:
        problems.append("rank identity fails")
    return problems


@lru_cache(maxsize=None)
def _octuple_problems(o: OctupleSkeleton) -> tuple[str, ...]:
    problems = []
    k = o.kind.kind
    if classify(o.seed_set) != o.kind or o.gamma != o.kind.rank:
        problems.append(f"kind/rank mismatch for {o.seed_set}")
    if not is_admissible(o.seed_set, o.n) or mw(o.seed_set, o.n) != o.image_set:
        problems.append(f"image of {o.seed_set} is not MW(S, {o.n})")
    if k == "B" and (o.n % 2 or o.d_constraint != MUST_BE_ONE):
        problems.append("type B needs even n and d = 1")
    if k == "C" and o.n % 2 == 0:
        problems.append("type C needs odd n")
    if k == "D" and (o.n % 2 == 0 or o.d_constraint != SIGN_CONSTRAINED or o.d_sign != (-1) ** o.gamma):
        problems.append("type D needs odd n and sign (-1)^gamma")
    return tuple(problems)


@lru_cache(maxsize=None)
def _block_options(block: CharSet) -> tuple[OctupleSkeleton, ...]:
    return tuple(make_octuple(seed, n) for seed, n in mw_factorizations(block) if legal(seed, n))


def _families_for(partition: Sequence[CharSet], g: int) -> list[LiftFamily]:
    options = [_block_options(b) for b in partition]
    return [LiftFamily(tuple(choice), g) for choice in product(*options)]


def thread_count() -> int:
    raw = os.environ.get("ENDOLIFT_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise DomainError(f"ENDOLIFT_THREADS must be an integer, got {raw!r}") from None


def enumerate_families(s_chi: CharSet, threads: Optional[int] = None) -> list[LiftFamily]:
    """Every family of octuples whose MW images partition S_χ."""
    t = classify(s_chi)
    if t.kind != "C":
        raise PreconditionError("enumerate_families needs a type C set")
    partitions = symmetric_partitions(s_chi)
    threads = thread_count() if threads is None else threads
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            chunks = list(pool.map(lambda p: _families_for(p, t.rank), partitions))
    else:
        chunks = [_families_for(p, t.rank) for p in partitions]
    families = [f for chunk in chunks for f in chunk]
    for f in families:
        problems = validate_family(f, s_chi)
        if problems:
            raise InvariantViolation(f"family fails validation: {problems}")
    return families


# closed forms


def lefschetz_c(g: int) -> int:
    """|Lefschetz number| for PGL(2g+1): 2^g."""
    if g < 0:
        raise DomainError("lefschetz_c needs g >= 0")
    return 2**g


def lefschetz_c_factor(g: int, n: int) -> Fraction:
    """½·(2^n)^m·2^(ν+1) for 2g+1 = n(2m+1) and n = 2ν+1."""
    if n < 1 or n % 2 == 0 or (2 * g + 1) % n:
        raise DomainError(f"n={n} must be an odd divisor of 2g+1={2 * g + 1}")
    m = ((2 * g + 1) // n - 1) // 2
    nu = (n - 1) // 2
    check(g == m * n + nu, "g != mn + ν")
    return Fraction(1, 2) * (2**n) ** m * 2 ** (nu + 1)


def lefschetz_bd(g: int) -> int:
    """|Lefschetz number| per eigenspace for GL(2g): 2^(g-1)."""
    if g < 1:
        raise DomainError("lefschetz_bd needs g >= 1")
    return 2 ** (g - 1)


def lefschetz_bd_factor(g: int, n: int) -> Fraction:
    """(2^n)^m / 2 for g = n·m."""
    if g < 1 or n < 1 or g % n:
        raise DomainError(f"n={n} must divide g={g}")
    return Fraction((2**n) ** (g // n), 2)


def multiplicity(g: int, r: int) -> int:
    """Expected multiplicity 2^(g-(r-1)); conjectural."""
    if not 1 <= r <= g + 1:
        raise DomainError(f"r={r} must lie in 1..{g + 1}")
    return 2 ** (g - r + 1)


@dataclass(frozen=True)
class SquareClass:
    """An element of ℚ*/(ℚ*)² as (sign, odd primes with odd exponent, exponent of 2 mod 2)."""

    sign: int = 1
    odd_prime_support: frozenset = frozenset()
    two_component: int = 0

    def __post_init__(self):
        if self.sign not in (1, -1) or self.two_component not in (0, 1):
            raise DomainError("invalid square class")
        support = frozenset(int(p) for p in self.odd_prime_support)
        if any(p < 3 or p % 2 == 0 for p in support):
            raise DomainError("odd_prime_support holds odd primes only")
        object.__setattr__(self, "odd_prime_support", support)

    @classmethod
    def of(cls, value) -> SquareClass:
        from sympy import factorint

        q = Fraction(value)
        if q == 0:
            raise DomainError("0 has no square class")
        exps: dict[int, int] = {}
        for part in (abs(q.numerator), q.denominator):
            for p, e in factorint(part).items():
                exps[p] = exps.get(p, 0) + e
        odd = frozenset(p for p, e in exps.items() if p != 2 and e % 2)
        return cls(1 if q > 0 else -1, odd, exps.get(2, 0) % 2)

    def __mul__(self, other: SquareClass) -> SquareClass:
        return SquareClass(
            self.sign * other.sign,
            self.odd_prime_support ^ other.odd_prime_support,
            self.two_component ^ other.two_component,
        )

    @property
    def is_trivial(self) -> bool:
        return self == SquareClass()

    def __str__(self):
        value = self.sign * 2**self.two_component
        for p in sorted(self.odd_prime_support):
            value *= p
        return str(value)


@dataclass(frozen=True)
class EndoscopicGrouping:
    sigma: tuple[frozenset, ...]
    sigma_q: tuple[frozenset, ...]
    dim: int
    cosets: int

    def to_json(self) -> dict:
        return {
            "sigma_q": [sorted(s) for s in self.sigma_q],
            "dim": self.dim,
            "cosets": self.cosets,
        }


def _subsets(items: Sequence[int]) -> list[frozenset]:
    return [frozenset(c) for k in range(len(items) + 1) for c in combinations(items, k)]


def endoscopic_grouping(d: Sequence[SquareClass], g: int) -> EndoscopicGrouping:
    """Σ = subsets of {2..r}, Σ_Q = kernel of I -> Π_{i∈I} d_i, dim V_I = 2^g / #Σ_Q."""
    r = len(d)
    if r == 0:
        raise DomainError("need at least one square class")
    if r - 1 > g:
        raise DomainError(f"r={r} exceeds g+1={g + 1}")
    sigma = _subsets(range(2, r + 1))

    def image(subset):
        acc = SquareClass()
        for i in subset:
            acc = acc * d[i - 1]
        return acc

    sigma_q = [s for s in sigma if image(s).is_trivial]
    dim = Fraction(2**g, len(sigma_q))
    check(dim.denominator == 1, "dim V_I is not integral")
    # the image of the Galois group in Σ is the annihilator of Σ_Q under |I ∩ J| mod 2
    annihilator = [s for s in sigma if all(len(s & t) % 2 == 0 for t in sigma_q)]
    check(len(annihilator) * len(sigma_q) == len(sigma), "pairing is degenerate")
    cosets = {min((s ^ a for a in annihilator), key=lambda x: (len(x), sorted(x))) for s in sigma}
    check(len(cosets) * int(dim) == 2**g, "dimensions do not add up to 2^g")
    return EndoscopicGrouping(tuple(sigma), tuple(sigma_q), int(dim), len(cosets))


# classical weights for small blocks


def b1_classical_weight(seed: CharSet) -> int:
    """{±(k+½)} belongs to a classical form of weight 2k+2."""
    t = classify(seed)
    if t.kind != "B" or t.rank != 1:
        raise PreconditionError("need a type B1 set")
    p = seed.maximum
    return p.twice + 1


def c1_classical_weight(block: CharSet) -> int:
    """{0, ±x} belongs to a classical form of weight x+1."""
    t = classify(block)
    if t.kind != "C" or t.rank != 1:
        raise PreconditionError("need a type C1 set")
    return block.maximum.twice // 2 + 1


def d2_classical_weights(block: CharSet) -> tuple[int, int]:
    """{±(B+1), ±(A+2)} belongs to a pair of forms of weights (A+B+4, A-B+2)."""
    t = classify(block)
    if t.kind != "D" or t.rank != 2:
        raise PreconditionError("need a type D2 set")
    q1, q2 = (p.twice // 2 for p in block.positive)
    a, b = q2 - 2, q1 - 1
    return a + b + 4, a - b + 2


@dataclass(frozen=True)
class WeightRow:
    scalar: int
    pair: tuple[int, int]
    c1_block: CharSet
    d2_block: CharSet

    def to_json(self) -> dict:
        return {
            "scalar": self.scalar,
            "pair": list(self.pair),
            "c1_block": self.c1_block.to_json(),
            "d2_block": self.d2_block.to_json(),
        }


def g3_charset(a: int, b: int, c: int) -> CharSet:
    return CharSet.of([0, c + 1, -(c + 1), b + 2, -(b + 2), a + 3, -(a + 3)])


def g3_weight_table(a: int, b: int, c: int) -> list[WeightRow]:
    """The splittings of {0, ±(c+1), ±(b+2), ±(a+3)} into a C1 and a D2 block, with classical weights."""
    if not a >= b >= c >= 0:
        raise DomainError("need a >= b >= c >= 0")
    rows = []
    for part in symmetric_partitions(g3_charset(a, b, c)):
        kinds = [classify(x) for x in part]
        if [str(k) for k in kinds] == ["C1", "D2"]:
            rows.append(WeightRow(c1_classical_weight(part[0]), d2_classical_weights(part[1]), part[0], part[1]))
    rows.sort(key=lambda row: -row.c1_block.maximum.twice)
    check(len(rows) == 3, "expected three C1 ∪ D2 splittings")
    return rows


def ikeda_charset(gamma: int, k: int) -> CharSet:
    g = 2 * gamma
    return CharSet.of([0] + [s * (k + i) for i in range(1, g + 1) for s in (1, -1)])


def ikeda_seed(gamma: int, k: int) -> CharSet:
    return CharSet((HalfInt(-(2 * (k + gamma) + 1)), HalfInt(2 * (k + gamma) + 1)))


def is_ikeda_family(family: LiftFamily) -> bool:
    """{0} with n=1 together with MW of a two-element type B set."""
    octs = family.octuples
    if len(octs) != 2:
        return False
    c, other = octs
    return (
        c.kind.kind == "C"
        and c.seed_set == CharSet.of([0])
        and c.n == 1
        and other.kind == CharType("B", 1)
    )
