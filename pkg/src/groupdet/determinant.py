"""Integer group determinants, computed three independent ways.

* ``regular_matrix`` + ``det_exact``: the defining matrix (a_{gh^{-1}}) and a
  fraction-free elimination over the integers.
* ``factor_profile``: the character-grouped factorisation into integers
  A·B1²·B2²·B3²·B4² (Dih(Z_3 x Z_3)) or A1·A2²·A3·A4² (Z_3 x D_6), evaluated
  exactly in Z[ω].
* ``det_via_reduction``: for F = f + Z g in Z[H ⋊ Z_2],
  D_G(F) = D_H(f·σ(f) - g·σ(g)), an |H| x |H| determinant.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .eisenstein import OMEGA_POWERS, Eisenstein, as_rational_integer
from .groups import GroupTable, get_group


class UnsupportedGroup(ValueError):
    pass


@dataclass(frozen=True)
class GroupRingElement:
    """Integer combination of group elements, indexed by flat element index.

    For the order-18 groups the first 9 coefficients are f(X, Y) and the last
    9 are g(X, Y) in F = f(X, Y) + Z g(X, Y), with x^i y^j at i + 3j.
    """

    group: GroupTable
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.group.order:
            raise ValueError(
                f"{self.group.spec.name} needs {self.group.order} coefficients, "
                f"got {len(self.coeffs)}"
            )
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    @classmethod
    def from_fg(cls, group: GroupTable | str, f: Sequence[int], g: Sequence[int]):
        if isinstance(group, str):
            group = get_group(group)
        return cls(group, tuple(f) + tuple(g))

    @classmethod
    def parse(cls, group: GroupTable | str, text: str) -> GroupRingElement:
        """Read the canonical comma-separated form."""
        if isinstance(group, str):
            group = get_group(group)
        parts = [p.strip() for p in text.split(",")]
        try:
            values = tuple(int(p) for p in parts)
        except ValueError:
            raise ValueError(f"coefficients must be integers: {text!r}") from None
        return cls(group, values)

    @classmethod
    def identity(cls, group: GroupTable | str) -> GroupRingElement:
        if isinstance(group, str):
            group = get_group(group)
        return cls(group, (1,) + (0,) * (group.order - 1))

    def format(self) -> str:
        return ",".join(str(c) for c in self.coeffs)

    @property
    def f(self) -> tuple[int, ...]:
        return self.coeffs[: self.group.h_order]

    @property
    def g(self) -> tuple[int, ...]:
        return self.coeffs[self.group.h_order :]

    def swap(self) -> GroupRingElement:
        """Exchange f and g."""
        return GroupRingElement(self.group, self.g + self.f)

    def antipode(self) -> GroupRingElement:
        """The element with coefficients a_{g^{-1}}."""
        inv = self.group.inv
        out = [0] * len(self.coeffs)
        for i, c in enumerate(self.coeffs):
            out[inv[i]] = c
        return GroupRingElement(self.group, tuple(out))

    def __mul__(self, other: GroupRingElement) -> GroupRingElement:
        if other.group is not self.group:
            raise ValueError("elements belong to different groups")
        return GroupRingElement(
            self.group, tuple(_convolve(self.group.mult, self.coeffs, other.coeffs))
        )

    def __add__(self, other: GroupRingElement) -> GroupRingElement:
        if other.group is not self.group:
            raise ValueError("elements belong to different groups")
        return GroupRingElement(
            self.group, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )


def _convolve(mult, p: Sequence[int], q: Sequence[int]) -> list[int]:
    """(p·q)[k] = Σ p[i] q[j] over mult[i][j] = k; p and q may be shorter than mult."""
    out = [0] * len(p)
    for i, a in enumerate(p):
        if not a:
            continue
        row = mult[i]
        for j, b in enumerate(q):
            if b:
                out[row[j]] += a * b
    return out


def regular_matrix(F: GroupRingElement) -> list[list[int]]:
    """Row g, column h holds the coefficient of g·h^{-1}."""
    mult, inv, c = F.group.mult, F.group.inv, F.coeffs
    n = F.group.order
    return [[c[mult[g][inv[h]]] for h in range(n)] for g in range(n)]


def det_exact(M: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix by Bareiss fraction-free elimination.

    Every division is checked to be exact; a remainder raises ArithmeticError.
    """
    n = len(M)
    if any(len(row) != n for row in M):
        raise ValueError("matrix is not square")
    if n == 0:
        return 1
    A = [list(row) for row in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k] != 0:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        rowk = A[k]
        pivot = rowk[k]
        tail = rowk[k + 1 :]
        for i in range(k + 1, n):
            rowi = A[i]
            a = rowi[k]
            new = [pivot * x - a * y for x, y in zip(rowi[k + 1 :], tail)]
            if prev != 1:
                divided = []
                for v in new:
                    q, r = divmod(v, prev)
                    if r:
                        raise ArithmeticError("inexact division in Bareiss elimination")
                    divided.append(q)
                new = divided
            rowi[k + 1 :] = new
        prev = pivot
    return sign * A[n - 1][n - 1]


def group_determinant(F: GroupRingElement) -> int:
    """D_G(F) straight from the defining matrix."""
    return det_exact(regular_matrix(F))


def eval_bivariate(p: Sequence[int], s: int, t: int) -> Eisenstein:
    """Value of p(x, y) = Σ p[i + 3j] x^i y^j at (ω^s, ω^t)."""
    buckets = [0, 0, 0]
    for j in range(3):
        for i in range(3):
            c = p[i + 3 * j]
            if c:
                buckets[(i * s + j * t) % 3] += c
    c0, c1, c2 = buckets
    # c0 + c1 ω + c2 ω² with ω² = -1 - ω
    return Eisenstein(c0 - c2, c1 - c2)


@dataclass(frozen=True)
class FactorProfile:
    """Integers whose signed-square product is the determinant.

    ``variant`` is ``"g18-4"`` with factors (A, B1, B2, B3, B4) and product
    A·B1²·B2²·B3²·B4², or ``"z3xd6"`` with factors (A1, A2, A3, A4) and product
    A1·A2²·A3·A4².
    """

    variant: str
    factors: tuple[int, ...]

    @property
    def product(self) -> int:
        fs = self.factors
        if self.variant == "g18-4":
            A, B1, B2, B3, B4 = fs
            return A * (B1 * B2 * B3 * B4) ** 2
        A1, A2, A3, A4 = fs
        return A1 * A3 * (A2 * A4) ** 2

    @property
    def names(self) -> tuple[str, ...]:
        if self.variant == "g18-4":
            return ("A", "B1", "B2", "B3", "B4")
        return ("A1", "A2", "A3", "A4")

    def as_dict(self) -> dict[str, int]:
        return dict(zip(self.names, self.factors))


def _pair(f, g, p: tuple[int, int], q: tuple[int, int]) -> Eisenstein:
    """f(p) f(q) - g(p) g(q), points given as exponents of ω."""
    return eval_bivariate(f, *p) * eval_bivariate(f, *q) - eval_bivariate(
        g, *p
    ) * eval_bivariate(g, *q)


def factor_profile(F: GroupRingElement) -> FactorProfile:
    name = F.group.spec.name
    f, g = F.f, F.g
    if name == "g18-4":
        # each B pairs a point with its inverse (x^{-1}, y^{-1})
        A = _pair(f, g, (0, 0), (0, 0))
        B1 = _pair(f, g, (0, 1), (0, 2))
        B2 = _pair(f, g, (1, 0), (2, 0))
        B3 = _pair(f, g, (1, 1), (2, 2))
        B4 = _pair(f, g, (1, 2), (2, 1))
        values = (A, B1, B2, B3, B4)
    elif name == "z3xd6":
        # pairs (x, y) with (x^{-1}, y); y is not inverted
        A1 = _pair(f, g, (0, 0), (0, 0))
        A2 = _pair(f, g, (1, 0), (2, 0))
        A3 = _pair(f, g, (0, 1), (0, 1)) * _pair(f, g, (0, 2), (0, 2))
        A4 = _pair(f, g, (1, 1), (2, 1)) * _pair(f, g, (2, 2), (1, 2))
        values = (A1, A2, A3, A4)
    else:
        raise UnsupportedGroup(f"no factor profile for {name}")
    return FactorProfile(name, tuple(as_rational_integer(v) for v in values))


def h_reduce(F: GroupRingElement) -> list[int]:
    """Coefficients of u = f·σ(f) - g·σ(g) in Z[H]."""
    group = F.group
    nh = group.h_order
    # Z h Z = σ(h), and Z is index nh
    z = nh
    sig = [group.mult[group.mult[z][h]][z] for h in range(nh)]
    f, g = F.f, F.g
    sf = [0] * nh
    sg = [0] * nh
    for h in range(nh):
        sf[sig[h]] = f[h]
        sg[sig[h]] = g[h]
    ff = _convolve(group.mult, f, sf)
    gg = _convolve(group.mult, g, sg)
    return [a - b for a, b in zip(ff, gg)]


def h_regular_matrix(group: GroupTable, u: Sequence[int]) -> list[list[int]]:
    """Regular matrix of u in Z[H], H being the first |H| indices of ``group``."""
    mult, inv = group.mult, group.inv
    nh = group.h_order
    return [[u[mult[a][inv[b]]] for b in range(nh)] for a in range(nh)]


def det_via_reduction(F: GroupRingElement) -> int:
    return det_exact(h_regular_matrix(F.group, h_reduce(F)))


def all_paths(F: GroupRingElement) -> dict[str, int]:
    """Determinant from every route available for F's group."""
    out = {
        "oracle": group_determinant(F),
        "reduction": det_via_reduction(F),
    }
    if F.group.spec.name in ("g18-4", "z3xd6"):
        out["profile"] = factor_profile(F).product
    return out


def random_elements(group: GroupTable, lo: int, hi: int, count: int, rng) -> Iterable:
    """``count`` elements with coefficients uniform in [lo, hi], from a numpy Generator."""
    rows = rng.integers(lo, hi + 1, size=(count, group.order)).tolist()
    for row in rows:
        yield GroupRingElement(group, tuple(row))
