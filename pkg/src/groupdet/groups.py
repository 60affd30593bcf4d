"""Semidirect products H ⋊ Z_2 with abelian H, as explicit multiplication tables.

Elements are written h·Z^k with h in H = Z_{m_1} x ... x Z_{m_r} and k in {0, 1}.
The flat index of an element is the mixed-radix value of its H-exponents
(first coordinate is the lowest digit) plus |H|·k, so for the order-18 groups
X^i Y^j Z^k sits at i + 3j + 9k and the identity is always index 0.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from math import prod


class InvalidInvolution(ValueError):
    pass


@dataclass(frozen=True)
class GroupSpec:
    """H ⋊ Z_2 where Z acts on H through the integer matrix ``sigma``.

    ``sigma[s][t]`` is the exponent of generator s in the image of generator t,
    so sigma maps the exponent vector h to ``sigma @ h`` (reduced per coordinate).
    """

    name: str
    moduli: tuple[int, ...]
    sigma: tuple[tuple[int, ...], ...]

    @property
    def h_order(self) -> int:
        return prod(self.moduli)

    @property
    def order(self) -> int:
        return 2 * self.h_order

    def apply_sigma(self, h: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(
            sum(row[t] * h[t] for t in range(len(h))) % m
            for row, m in zip(self.sigma, self.moduli)
        )

    def validate(self) -> None:
        r = len(self.moduli)
        if r == 0 or any(m < 1 for m in self.moduli):
            raise InvalidInvolution(f"bad cycle structure {self.moduli}")
        if len(self.sigma) != r or any(len(row) != r for row in self.sigma):
            raise InvalidInvolution("sigma must be an r x r matrix")
        # the image of generator t must have order dividing m_t
        for s in range(r):
            for t in range(r):
                if (self.sigma[s][t] * self.moduli[t]) % self.moduli[s]:
                    raise InvalidInvolution(
                        f"sigma is not well defined on Z_{self.moduli[t]}"
                    )
        for h in itertools.product(*(range(m) for m in self.moduli)):
            if self.apply_sigma(self.apply_sigma(h)) != h:
                raise InvalidInvolution(f"sigma∘sigma moves {h}")


def _diag(*entries: int) -> tuple[tuple[int, ...], ...]:
    n = len(entries)
    return tuple(tuple(entries[s] if s == t else 0 for t in range(n)) for s in range(n))


NAMED_SPECS: dict[str, GroupSpec] = {
    # SmallGroup(18,4) = Dih(Z_3 x Z_3): Z inverts X and Y
    "g18-4": GroupSpec("g18-4", (3, 3), _diag(-1, -1)),
    # SmallGroup(18,3) = Z_3 x D_6: Z inverts X, commutes with Y
    "z3xd6": GroupSpec("z3xd6", (3, 3), _diag(-1, 1)),
    # SmallGroup(18,1) = D_18 = Dih(Z_9)
    "d18": GroupSpec("d18", (9,), _diag(-1)),
}

GROUP_NAMES = tuple(NAMED_SPECS)


@dataclass(frozen=True)
class GroupTable:
    spec: GroupSpec
    mult: tuple[tuple[int, ...], ...] = field(repr=False)
    inv: tuple[int, ...] = field(repr=False)

    @property
    def order(self) -> int:
        return self.spec.order

    @property
    def h_order(self) -> int:
        return self.spec.h_order

    def index_of(self, h: tuple[int, ...], k: int = 0) -> int:
        return index_of(self.spec, h, k)

    def element_of(self, index: int) -> tuple[tuple[int, ...], int]:
        return element_of(self.spec, index)

    def power(self, g: int, n: int) -> int:
        out = 0
        for _ in range(n):
            out = self.mult[out][g]
        return out

    def element_order(self, g: int) -> int:
        n, x = 1, g
        while x != 0:
            x = self.mult[x][g]
            n += 1
        return n


def index_of(spec: GroupSpec, h: tuple[int, ...], k: int = 0) -> int:
    if len(h) != len(spec.moduli):
        raise ValueError(f"expected {len(spec.moduli)} H-exponents, got {len(h)}")
    if k not in (0, 1):
        raise ValueError(f"Z-exponent must be 0 or 1, got {k}")
    flat, radix = 0, 1
    for e, m in zip(h, spec.moduli):
        if not 0 <= e < m:
            raise ValueError(f"exponent {e} out of range for Z_{m}")
        flat += e * radix
        radix *= m
    return flat + radix * k


def element_of(spec: GroupSpec, index: int) -> tuple[tuple[int, ...], int]:
    if not 0 <= index < spec.order:
        raise ValueError(f"index {index} out of range for order {spec.order}")
    k, rest = divmod(index, spec.h_order)
    h = []
    for m in spec.moduli:
        rest, e = divmod(rest, m)
        h.append(e)
    return tuple(h), k


def build_group(spec: GroupSpec) -> GroupTable:
    """Multiplication table for spec, using (h1, k1)(h2, k2) = (h1 + σ^k1(h2), k1 ⊕ k2)."""
    spec.validate()
    n = spec.order
    elems = [element_of(spec, i) for i in range(n)]

    def times(a, b):
        (h1, k1), (h2, k2) = a, b
        if k1:
            h2 = spec.apply_sigma(h2)
        h = tuple((x + y) % m for x, y, m in zip(h1, h2, spec.moduli))
        return index_of(spec, h, k1 ^ k2)

    mult = tuple(tuple(times(a, b) for b in elems) for a in elems)
    inv = tuple(row.index(0) for row in mult)
    return GroupTable(spec, mult, inv)


@lru_cache(maxsize=None)
def get_group(name: str) -> GroupTable:
    try:
        spec = NAMED_SPECS[name]
    except KeyError:
        raise ValueError(
            f"unknown group {name!r}; expected one of {', '.join(GROUP_NAMES)}"
        ) from None
    return build_group(spec)
