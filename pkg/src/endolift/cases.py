"""Worked families for g=2, the g=3 weight table and Ikeda families, with their case labels."""

from __future__ import annotations

from dataclasses import dataclass

from .charsets import CharSet, classify
from .errors import DomainError, check
from .exactnum import HalfInt
from .lifts import (
    LiftFamily,
    b1_classical_weight,
    enumerate_families,
    ikeda_charset,
    ikeda_seed,
    is_ikeda_family,
)


def g2_charset(a: int, b: int) -> CharSet:
    return CharSet.of([-a - 2, -b - 1, 0, b + 1, a + 2])


def _g2_base_label(family: LiftFamily, a: int) -> str:
    images = [o.image_set for o in family.octuples]
    if len(images) == 1:
        return "a"
    if len(images) == 3:
        return "e"
    c_block, other = images
    if c_block == CharSet.of([0]):
        return "b"
    return "c" if c_block.maximum == HalfInt(2 * (a + 2)) else "d"


def g2_label(family: LiftFamily, a: int, b: int) -> tuple[str, ...]:
    base = _g2_base_label(family, a)
    labels = [base]
    octs = family.octuples
    zero = CharSet.of([0])
    if base == "a" and octs[0].seed_set == zero and octs[0].n == 5:
        labels = ["a'"]
    elif base == "b" and octs[1].n == 2:
        labels = ["b'"]
    elif base == "d" and octs[0].seed_set == zero and octs[0].n == 3:
        labels = ["d'"]
    if is_ikeda_family(family):
        labels.append("saito-kurokawa")
    return tuple(labels)


def g2_families(a: int, b: int) -> list[LiftFamily]:
    if not a >= b >= 0:
        raise DomainError("need a >= b >= 0")
    out = []
    for fam in enumerate_families(g2_charset(a, b)):
        out.append(LiftFamily(fam.octuples, fam.g, g2_label(fam, a, b)))
    return out


@dataclass(frozen=True)
class IkedaReport:
    gamma: int
    k: int
    charset: CharSet
    family: LiftFamily
    weight: int
    label: str

    def to_json(self) -> dict:
        return {
            "gamma": self.gamma,
            "k": self.k,
            "charset": self.charset.to_json(),
            "family": self.family.to_json(),
            "weight": self.weight,
            "label": self.label,
        }


def ikeda(gamma: int, k: int) -> IkedaReport:
    """Locate {0} ∪ MW({±(k+γ+½)}, 2γ) among the families of {0, ±(k+1), ..., ±(k+2γ)}."""
    if gamma < 1 or k < 0:
        raise DomainError("need gamma >= 1 and k >= 0")
    s = ikeda_charset(gamma, k)
    seed = ikeda_seed(gamma, k)
    matches = [
        f for f in enumerate_families(s)
        if is_ikeda_family(f) and f.octuples[1].seed_set == seed and f.octuples[1].n == 2 * gamma
    ]
    check(len(matches) == 1, f"expected exactly one Ikeda family, found {len(matches)}")
    fam = matches[0]
    check(classify(seed).kind == "B", "Ikeda seed is not of type B")
    label = "saito-kurokawa" if gamma == 1 else "ikeda"
    return IkedaReport(gamma, k, s, LiftFamily(fam.octuples, fam.g, (label,)), b1_classical_weight(seed), label)
