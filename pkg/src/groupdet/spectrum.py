"""Membership in the determinant spectra of the order-18 groups, with witnesses.

For SmallGroup(18,4) (e = 9) and Z_3 x D_6 (e = 6) the integer group
determinants are exactly

* D coprime to 6 with D ≡ ±1 (mod 18),
* 4(9m ± 2),
* 3^e (2m + 1),
* 2^2 3^e m.

Every member is reached by one of the parametric families in ``FAMILIES``,
each a pair (f, g) linear in m through the block h = (1+x+x²)(1+y+y²).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .determinant import GroupRingElement, det_via_reduction


class NotInSpectrum(ValueError):
    pass


class UnknownFamily(KeyError):
    pass


COPRIME_SIX = "CoprimeSix"
TWO_NOT_THREE = "TwoNotThree"
THREE_NOT_TWO = "ThreeNotTwo"
DIV_SIX = "DivSix"
NOT_MEMBER = "NotMember"
CLASSES = (COPRIME_SIX, TWO_NOT_THREE, THREE_NOT_TWO, DIV_SIX)

# exponent of 3 forced on multiples of 3
THREE_EXPONENT = {"g18-4": 9, "z3xd6": 6, "d18": 5}
SPECTRUM_GROUPS = ("g18-4", "z3xd6")


def valuation(n: int, p: int) -> int:
    if n == 0:
        raise ValueError("valuation of 0 is infinite")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def in_d2p_spectrum(D: int, p: int, min_p_exponent: int) -> bool:
    """D = 2^a p^b m with gcd(m, 2p) = 1, a ∈ {0} ∪ [2, ∞), b ∈ {0} ∪ [k, ∞)."""
    if D == 0:
        return True
    a = valuation(D, 2)
    b = valuation(D, p)
    return a != 1 and (b == 0 or b >= min_p_exponent)


def in_d18_spectrum(D: int) -> bool:
    return in_d2p_spectrum(D, 3, 5)


def in_d6_spectrum(D: int) -> bool:
    return in_d2p_spectrum(D, 3, 3)


def in_z3xz3_spectrum(D: int) -> bool:
    """{9m ± 1} ∪ {3^6 m}."""
    return D % 9 in (1, 8) or D % 729 == 0


def classify_subgroup_spectra(D: int) -> dict[str, bool]:
    return {
        "d18": in_d18_spectrum(D),
        "z3xz3": in_z3xz3_spectrum(D),
        "d6": in_d6_spectrum(D),
    }


@dataclass(frozen=True)
class MembershipForm:
    """Where D sits in the spectrum of ``group``.

    ``m`` and ``sign`` are the parameters of the class description:
    18m ± 1, 4(9m ± 2), 3^e(2m + 1), 2^2 3^e m.  ``family`` and ``family_m``
    name the achieving family and the value of its parameter that yields D.
    """

    group: str
    value: int
    cls: str
    sign: str | None = None
    m: int | None = None
    family: str | None = None
    family_m: int | None = None

    @property
    def member(self) -> bool:
        return self.cls != NOT_MEMBER

    def as_record(self) -> dict:
        return {
            "member": self.member,
            "class": self.cls,
            "sign": self.sign,
            "m": self.m,
            "family": self.family,
            "family_m": self.family_m,
        }


def _classify_d18(D: int) -> MembershipForm:
    if not in_d18_spectrum(D):
        return MembershipForm("d18", D, NOT_MEMBER)
    if D == 0:
        return MembershipForm("d18", D, DIV_SIX, m=0)
    a, b = valuation(D, 2), valuation(D, 3)
    cls = {
        (False, False): COPRIME_SIX,
        (True, False): TWO_NOT_THREE,
        (False, True): THREE_NOT_TWO,
        (True, True): DIV_SIX,
    }[(a > 0, b > 0)]
    return MembershipForm("d18", D, cls, m=D // (2**a * 3**b))


def classify(D: int, group: str) -> MembershipForm:
    if group == "d18":
        return _classify_d18(D)
    if group not in SPECTRUM_GROUPS:
        raise ValueError(f"no spectrum description for {group!r}")
    e = THREE_EXPONENT[group]
    p3 = 3**e
    nope = MembershipForm(group, D, NOT_MEMBER)
    even, triple = D % 2 == 0, D % 3 == 0

    if not even and not triple:
        r = D % 18
        if r == 1:
            return MembershipForm(group, D, COPRIME_SIX, "+", (D - 1) // 18, "coprime+", (D - 1) // 18)
        if r == 17:
            return MembershipForm(group, D, COPRIME_SIX, "-", (D + 1) // 18, "coprime-", (-D - 1) // 18)
        return nope

    if even and not triple:
        if D % 4:
            return nope
        k = D // 4
        if k % 9 == 2:
            return MembershipForm(group, D, TWO_NOT_THREE, "+", (k - 2) // 9, "2not3+", (k - 2) // 9)
        if k % 9 == 7:
            return MembershipForm(group, D, TWO_NOT_THREE, "-", (k + 2) // 9, "2not3-", (-k - 2) // 9)
        return nope

    if triple and not even:
        if D % p3:
            return nope
        t = D // p3
        m = (t - 1) // 2
        if t % 3 == 0:
            return MembershipForm(group, D, THREE_NOT_TWO, None, m, "3not2-odd3", (t // 3 - 1) // 2)
        if t % 6 == 1:
            return MembershipForm(group, D, THREE_NOT_TWO, None, m, "3not2+", (t - 1) // 6)
        return MembershipForm(group, D, THREE_NOT_TWO, None, m, "3not2-", (-t - 1) // 6)

    if D % (4 * p3):
        return nope
    t = D // (4 * p3)
    if t % 3 == 0:
        return MembershipForm(group, D, DIV_SIX, None, t, "div6-3", t // 3)
    if t % 3 == 1:
        return MembershipForm(group, D, DIV_SIX, None, t, "div6+", (t - 1) // 3)
    return MembershipForm(group, D, DIV_SIX, None, t, "div6-", (-t - 1) // 3)


# -- achieving families ------------------------------------------------------


class TorusPoly:
    """Integer polynomial in x, y reduced modulo x³ = y³ = 1; x^i y^j at i + 3j."""

    __slots__ = ("c",)

    def __init__(self, c):
        self.c = tuple(c)

    @classmethod
    def const(cls, n: int) -> TorusPoly:
        return cls((n,) + (0,) * 8)

    @staticmethod
    def _lift(other):
        return TorusPoly.const(other) if isinstance(other, int) else other

    def __add__(self, other):
        other = self._lift(other)
        return TorusPoly(a + b for a, b in zip(self.c, other.c))

    __radd__ = __add__

    def __neg__(self):
        return TorusPoly(-a for a in self.c)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return TorusPoly(a * other for a in self.c)
        out = [0] * 9
        for p, a in enumerate(self.c):
            if not a:
                continue
            i, j = p % 3, p // 3
            for q, b in enumerate(other.c):
                if b:
                    k, l = q % 3, q // 3
                    out[(i + k) % 3 + 3 * ((j + l) % 3)] += a * b
        return TorusPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = TorusPoly.const(1)
        for _ in range(n):
            out = out * self
        return out


x = TorusPoly((0, 1, 0, 0, 0, 0, 0, 0, 0))
y = TorusPoly((0, 0, 0, 1, 0, 0, 0, 0, 0))
h = (1 + x + x**2) * (1 + y + y**2)


@dataclass(frozen=True)
class Family:
    """Parametric witness F(m) = f(m) + Z g(m) with determinant offset + slope·m."""

    group: str
    id: str
    cls: str
    f: Callable[[int], TorusPoly]
    g: Callable[[int], TorusPoly]
    offset: int
    slope: int
    swapped: bool = False

    def value(self, m: int) -> int:
        return self.offset + self.slope * m

    def element(self, m: int) -> GroupRingElement:
        f, g = self.f(m), self.g(m)
        if self.swapped:
            f, g = g, f
        return GroupRingElement.from_fg(self.group, f.c, g.c)


def _with_swaps(group, rows):
    out = []
    for fid, cls, f, g, offset, slope, has_swap in rows:
        out.append(Family(group, fid + ("+" if has_swap else ""), cls, f, g, offset, slope))
        if has_swap:
            out.append(Family(group, fid + "-", cls, f, g, -offset, -slope, swapped=True))
    return out


# Signs of the m-terms were fixed by evaluating m = -1, 0, 1 through
# det_via_reduction; see tests/test_spectrum.py for the frozen values.
_G184 = _with_swaps("g18-4", [
    ("coprime", COPRIME_SIX,
     lambda m: 1 + m * h,
     lambda m: m * h,
     1, 18, True),
    ("2not3", TWO_NOT_THREE,
     lambda m: 1 + x + x**2 + y - y**2 * x**2 + m * h,
     lambda m: 1 + x + y * x - y**2 * (x + x**2) + m * h,
     8, 36, True),
    ("div6-3", DIV_SIX,
     lambda m: 1 + x - y * x**2 - y**2 * (1 + x) - m * h,
     lambda m: 1 + y - y**2 * (1 + x + x**2) + m * h,
     0, 4 * 3**10, False),
    ("div6", DIV_SIX,
     lambda m: 1 + x + x**2 + y * (1 + x) - y**2 * x**2 + m * h,
     lambda m: (1 + x**2) * (1 + y - y**2) + m * h,
     4 * 3**9, 4 * 3**10, True),
    ("3not2-odd3", THREE_NOT_TWO,
     lambda m: 1 + x + x**2 + y * (1 + x + x**2) + y**2 * (1 - x - x**2) + m * h,
     lambda m: 1 + x + x**2 + y * (1 + x) + y**2 * (1 - x - x**2) + m * h,
     3**10, 2 * 3**10, False),
    ("3not2", THREE_NOT_TWO,
     lambda m: 1 + x + x**2 + y * (1 + x) - y**2 * (1 + x + x**2) + m * h,
     lambda m: 1 + x + x**2 + y * (1 + x - x**2) - y**2 * (1 + x + x**2) + m * h,
     3**9, 6 * 3**9, True),
])

_Z3XD6 = _with_swaps("z3xd6", [
    ("coprime", COPRIME_SIX,
     lambda m: 1 + m * h,
     lambda m: m * h,
     1, 18, True),
    ("2not3", TWO_NOT_THREE,
     lambda m: (1 + x - x**2) + y * x**2 + y**2 * x**2 + m * h,
     lambda m: (1 + x - x**2) + y * (-x + x**2) + y**2 * (-1 + x**2) + m * h,
     8, 36, True),
    ("div6-3", DIV_SIX,
     lambda m: (1 + x - x**2) + y * (1 - x**2) + y**2 * (1 - x**2) + m * h,
     lambda m: (1 - x**2) + y * (1 + x - x**2) + y**2 * (x - x**2) - m * h,
     0, 4 * 3**7, False),
    ("div6", DIV_SIX,
     lambda m: (1 + x) + y + y**2 + m * h,
     lambda m: 1 + y + m * h,
     4 * 3**6, 4 * 3**7, True),
    ("3not2-odd3", THREE_NOT_TWO,
     lambda m: (1 + x) + y * (1 + x) + y**2 * (1 + x - x**2) + m * h,
     lambda m: (1 + x) + y * (1 + x - x**2) + y**2 + m * h,
     3**7, 2 * 3**7, False),
    ("3not2", THREE_NOT_TWO,
     lambda m: 1 + y + m * h,
     lambda m: 1 + m * h,
     3**6, 6 * 3**6, True),
])

FAMILIES: dict[str, dict[str, Family]] = {
    "g18-4": {fam.id: fam for fam in _G184},
    "z3xd6": {fam.id: fam for fam in _Z3XD6},
}


def family_element(group: str, family_id: str, m: int) -> GroupRingElement:
    try:
        fam = FAMILIES[group][family_id]
    except KeyError:
        raise UnknownFamily(f"no family {family_id!r} for {group!r}") from None
    return fam.element(m)


def achieve(D: int, group: str, verify: bool = True) -> GroupRingElement:
    """A group-ring element of ``group`` whose determinant is D."""
    if group not in SPECTRUM_GROUPS:
        raise ValueError(f"no witness construction for {group!r}")
    form = classify(D, group)
    if not form.member:
        raise NotInSpectrum(f"{D} is not a {group} group determinant")
    fam = FAMILIES[group][form.family]
    assert fam.value(form.family_m) == D
    F = fam.element(form.family_m)
    if verify and det_via_reduction(F) != D:
        raise AssertionError(f"witness for {D} on {group} does not verify")
    return F
