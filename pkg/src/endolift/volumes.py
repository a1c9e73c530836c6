"""Exact standard and Chevalley volumes of the compact forms of Sp(2g), SO(2g+1) and Spin(2g+1)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError, check
from .exactnum import PiPower, gamma_half, sphere_volume

GROUPS = ("Sp", "SO", "Spin")


@lru_cache(maxsize=None)
def vol_st_sp(g: int) -> PiPower:
    """vol_St(Sp(2g)) = vol(S^(4g-1)) · vol_St(Sp(2g-2)), starting from 1."""
    if g < 0:
        raise DomainError("vol_st_sp needs g >= 0")
    if g == 0:
        return PiPower(1)
    return sphere_volume(4 * g) * vol_st_sp(g - 1)


@lru_cache(maxsize=None)
def vol_st_so(n: int) -> PiPower:
    """vol_St(SO(n)) = vol(S^(n-1)) · vol_St(SO(n-1)), starting from vol_St(SO(1)) = 1."""
    if n < 1:
        raise DomainError("vol_st_so needs n >= 1")
    if n == 1:
        return PiPower(1)
    return sphere_volume(n) * vol_st_so(n - 1)


def conversion_exponent(group: str, rank: int) -> int:
    """e with vol_Ch = 2^e · vol_St."""
    if group == "Sp":
        return rank * rank
    if group in ("SO", "Spin"):
        return -(rank + 1)
    raise DomainError(f"unknown group {group!r}")


def _check_rank(group: str, rank: int) -> None:
    if group not in GROUPS:
        raise DomainError(f"unknown group {group!r}")
    if rank < (0 if group == "Sp" else 1):
        raise DomainError(f"invalid rank {rank} for {group}")


def vol_st(group: str, rank: int) -> PiPower:
    _check_rank(group, rank)
    if group == "Sp":
        return vol_st_sp(rank)
    base = vol_st_so(2 * rank + 1)
    return base * 2 if group == "Spin" else base


def vol_ch_converted(group: str, rank: int) -> PiPower:
    """Chevalley volume from the standard volume and the conversion exponent."""
    return vol_st(group, rank) * Fraction(2) ** conversion_exponent(group, rank)


@lru_cache(maxsize=None)
def vol_ch_recursive(group: str, rank: int) -> PiPower:
    """vol_Ch(X_g) = 2^(2g) π^(2g) / Γ(2g) · vol_Ch(X_(g-1))."""
    if group not in GROUPS or rank < 0:
        raise DomainError(f"invalid group/rank {group!r} {rank}")
    if group == "Spin":
        return vol_ch_recursive("SO", rank) * 2
    if rank == 0:
        # Sp(0) is trivial; SO(1) has standard volume 1 and conversion factor 1/2
        return PiPower(1) if group == "Sp" else PiPower(Fraction(1, 2))
    step = PiPower(4**rank, 4 * rank) / gamma_half(4 * rank)
    return step * vol_ch_recursive(group, rank - 1)


def vol_ch(group: str, rank: int) -> PiPower:
    """Chevalley volume; both computation routes must agree."""
    _check_rank(group, rank)
    value = vol_ch_converted(group, rank)
    check(value == vol_ch_recursive(group, rank), f"volume routes disagree for {group} rank {rank}")
    check(value.pi_exp_twice % 2 == 0, "volume has a half-integral π exponent")
    return value


@dataclass(frozen=True)
class VolumeRecord:
    group: str
    rank: int
    vol_st: PiPower
    vol_ch: PiPower
    conversion_exponent: int

    def to_json(self) -> dict:
        return {
            "group": self.group,
            "rank": self.rank,
            "vol_st": self.vol_st.to_json(),
            "vol_ch": self.vol_ch.to_json(),
            "conversion_exponent": self.conversion_exponent,
        }


def volume_record(group: str, rank: int) -> VolumeRecord:
    return VolumeRecord(group, rank, vol_st(group, rank), vol_ch(group, rank), conversion_exponent(group, rank))
