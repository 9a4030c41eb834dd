"""Surface types, algebraic genus and Riemann-Hurwitz bookkeeping for quotient orbifolds."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple


class InadmissibleSignature(ValueError):
    pass


@dataclass(frozen=True, order=True)
class SurfaceType:
    """Compact surface: orientable genus g or non-orientable genus g >= 1, with b boundary circles."""

    orientable: bool
    genus: int
    boundary: int

    def __post_init__(self):
        if self.genus < 0 or self.boundary < 0:
            raise ValueError("genus and boundary must be nonnegative")
        if not self.orientable and self.genus < 1:
            raise ValueError("non-orientable surfaces have genus >= 1")

    @property
    def algebraic_genus(self) -> int:
        return algebraic_genus(self)

    @property
    def euler_characteristic(self) -> int:
        g, b = self.genus, self.boundary
        return 2 - 2 * g - b if self.orientable else 2 - g - b

    @property
    def embeddable(self) -> bool:
        """Closed non-orientable surfaces do not embed in R^3."""
        return self.orientable or self.boundary > 0

    @property
    def sigma_notation(self) -> str:
        return f"Σ{'' if self.orientable else '⁻'}_{{{self.genus},{self.boundary}}}"

    def __str__(self) -> str:
        return f"{'S' if self.orientable else 'N'}({self.genus},{self.boundary})"

    def to_json(self) -> dict:
        return {"orientable": self.orientable, "genus": self.genus, "boundary": self.boundary}

    @classmethod
    def from_json(cls, d: dict) -> "SurfaceType":
        return cls(bool(d["orientable"]), int(d["genus"]), int(d["boundary"]))

    @classmethod
    def parse(cls, text: str) -> "SurfaceType":
        t = text.strip().replace(" ", "")
        for prefix, ori in (("S(", True), ("N(", False)):
            if t.startswith(prefix) and t.endswith(")"):
                g, b = t[2:-1].split(",")
                return cls(ori, int(g), int(b))
        raise ValueError(f"cannot parse surface {text!r}")


def algebraic_genus(s: SurfaceType) -> int:
    """Rank of pi_1."""
    if not s.orientable:
        return s.genus - 1 + s.boundary
    return 2 * s.genus if s.boundary == 0 else 2 * s.genus - 1 + s.boundary


def surface_from_alpha(alpha: int, boundary: int, orientable: bool) -> SurfaceType:
    """The bordered surface with the given algebraic genus, boundary count and orientability.

    Raises ``ValueError`` when no such surface exists (parity or sign).
    """
    if boundary < 1:
        raise ValueError("bordered surfaces need boundary >= 1")
    rest = alpha + 1 - boundary
    if orientable:
        if rest < 0 or rest % 2:
            raise ValueError(f"no orientable surface with alpha={alpha}, b={boundary}")
        return SurfaceType(True, rest // 2, boundary)
    if rest < 1:
        raise ValueError(f"no non-orientable surface with alpha={alpha}, b={boundary}")
    return SurfaceType(False, rest, boundary)


# ----------------------------------------------------------------- quotient signatures

SPHERE4 = "sphere4"      # closed sphere with cone points r, r, s, s
CASE_A = "a"             # disk with two interior cone points r, s
CASE_B = "b"             # disk with an index-2 reflector arc and one interior cone point s
CASE_TAGS = (SPHERE4, CASE_A, CASE_B)


@dataclass(frozen=True)
class QuotientSignature:
    group_label: str
    underlying_genus: int
    cone_indices: tuple[int, ...]
    case_tag: str
    arc_indices: tuple[int, int] | None = None

    def __post_init__(self):
        object.__setattr__(self, "cone_indices", tuple(sorted(self.cone_indices)))
        if any(q < 2 for q in self.cone_indices):
            raise InadmissibleSignature("cone indices must be >= 2")
        if self.case_tag not in CASE_TAGS:
            raise ValueError(f"unknown case tag {self.case_tag!r}")
        if self.arc_indices is None:
            return
        r, s = self.arc_indices
        expect = {SPHERE4: (r, r, s, s), CASE_A: (r, s), CASE_B: (s,)}[self.case_tag]
        if self.cone_indices != tuple(sorted(expect)):
            raise InadmissibleSignature(f"cones {self.cone_indices} do not fit case {self.case_tag} {r, s}")
        if self.case_tag == CASE_B and r != 2:
            raise InadmissibleSignature("a reflector arc has index 2")

    @classmethod
    def for_case(cls, group_label: str, r: int, s: int, case_tag: str) -> "QuotientSignature":
        cones = {SPHERE4: (r, r, s, s), CASE_A: (r, s), CASE_B: (s,)}[case_tag]
        return cls(group_label, 0, cones, case_tag, (r, s))


@dataclass(frozen=True)
class RHSolution:
    group_order: int
    signature: QuotientSignature
    covering_genus: int

    def check(self) -> bool:
        lhs = 2 - 2 * self.covering_genus
        return lhs == _rh_rhs(self.group_order, self.signature.underlying_genus, self.signature.cone_indices)


def _rh_rhs(group_order: int, base_genus: int, cones: Iterable[int]) -> Fraction:
    return group_order * (2 - 2 * base_genus - sum((1 - Fraction(1, q) for q in cones), Fraction(0)))


def rh_cover_genus(group_order: int, base_genus: int, cone_indices: Iterable[int]) -> int:
    """Genus of the closed orientable regular branched cover over (base_genus; cone_indices)."""
    cones = list(cone_indices)
    if group_order < 1 or base_genus < 0:
        raise InadmissibleSignature("group order must be >= 1 and base genus >= 0")
    if any(q < 2 for q in cones):
        raise InadmissibleSignature("cone indices must be >= 2")
    chi = _rh_rhs(group_order, base_genus, cones)
    if chi.denominator != 1 or chi.numerator % 2:
        raise InadmissibleSignature(f"inadmissible signature: 2-2g = {chi}")
    g = (2 - chi.numerator) // 2
    if g < 0:
        raise InadmissibleSignature(f"inadmissible signature: negative genus {g}")
    return g


def solve(group_order: int, signature: QuotientSignature) -> RHSolution:
    g = rh_cover_genus(group_order, signature.underlying_genus, signature.cone_indices)
    return RHSolution(group_order, signature, g)


def sphere_4cone_genus(group_order: int, r: int, s: int) -> int:
    """g with g - 1 = |G| (1 - 1/r - 1/s): the cover of a sphere with cones r, r, s, s."""
    if not 1 < r <= s:
        raise ValueError("need 1 < r <= s")
    return rh_cover_genus(group_order, 0, (r, r, s, s))


class CyclicCase(NamedTuple):
    n: int
    description: str
    quotient_genus: int | None
    cones: tuple[int, ...] | None


def cyclic_quotient_cases(g: int) -> list[CyclicCase]:
    """Possible rotation orders n of an orientation-preserving Z_n on (R^3, Sigma_g).

    The quotient is separating in R^3/Z_n, so it meets the axis an even number
    2k of times.  Three exact alternatives plus the residual bound
    ``n <= floor(g/2) + 1``; every exact n is checked against Riemann-Hurwitz.
    """
    if g <= 1:
        raise ValueError("need g > 1")
    out = []
    for n, gq, k, text in ((g + 1, 0, 2, "sphere with 4 cone points of index n"),
                           (g, 1, 1, "torus with 2 cone points of index n"),
                           (g - 1, 2, 0, "closed surface of genus 2, no cone points")):
        if n < 2:
            continue
        cones = (n,) * (2 * k)
        if rh_cover_genus(n, gq, cones) != g:
            raise AssertionError(f"cyclic case n={n} fails Riemann-Hurwitz")
        out.append(CyclicCase(n, text, gq, cones))
    out.append(CyclicCase(g // 2 + 1, "bound: n <= g/2 + 1", None, None))
    return out
