"""Closed forms for the minimal number of generators of a tower group.

Everything here is symbolic: the abelianization of a tower is a finite
abelian group recorded by its p-ranks, and d(W) for k >= 2 follows from
the top level's type together with those ranks.  The permutation-group
machinery never enters; agreement with it is what the test suite and the
oracle module certify.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .wreath import GroupSpec, TowerSpec


class CyclicTopError(ValueError):
    """The counting form requires a non-cyclic top level."""


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


@dataclass(frozen=True)
class AbelianProfile:
    """A finite abelian group summarized by its nonzero p-ranks."""

    ranks: dict[int, int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(
            self, "ranks", {p: r for p, r in sorted(self.ranks.items()) if r})

    @property
    def d(self) -> int:
        """Minimal generator count: the largest p-rank."""
        return max(self.ranks.values(), default=0)

    def rank(self, p: int) -> int:
        return self.ranks.get(p, 0)

    def is_trivial(self) -> bool:
        return not self.ranks

    def to_json(self) -> dict[str, int]:
        return {str(p): r for p, r in self.ranks.items()}


def abelianization(t: TowerSpec, from_level: int = 1) -> AbelianProfile:
    """p-ranks of the abelianization of the sub-tower from the given level.

    Each level contributes independently: Alt n (n >= 5) nothing, Alt 4
    one Z_3, Sym n (n >= 3) one Z_2, Cyc n one Z_p per prime p | n.
    from_level = k+1 names the trivial group.
    """
    if not 1 <= from_level <= t.k + 1:
        raise ValueError("from_level out of range")
    ranks: dict[int, int] = {}
    for g in t.levels[from_level - 1:]:
        if g.kind == "A" and g.n >= 5:
            continue
        if g.kind == "A":  # Alt 4 (A3 was normalized away)
            ranks[3] = ranks.get(3, 0) + 1
        elif g.kind == "S":
            ranks[2] = ranks.get(2, 0) + 1
        else:
            for p in _prime_factors(g.n):
                ranks[p] = ranks.get(p, 0) + 1
    return AbelianProfile(ranks)


def d_abelian_wreath(a: AbelianProfile, g1: GroupSpec) -> int:
    """d of A wr G_1 for a finite abelian A, by the top level's type."""
    g1 = g1.normalized()
    if g1.kind == "A" and g1.n == 4:
        return max(2, a.d, a.rank(3) + 1)
    if g1.kind == "A":
        return max(2, a.d)
    if g1.kind == "S":
        return max(2, a.d, a.rank(2) + 1)
    return a.d + 1


@dataclass(frozen=True)
class FormulaResult:
    d: int
    case: str  # "A4" | "An" | "Sn" | "Cyclic" | "SingleLevel"
    abelianization: AbelianProfile

    def to_json(self) -> dict:
        return {"d": self.d, "case": self.case,
                "abelianization": self.abelianization.to_json()}


def d_tower(t: TowerSpec) -> FormulaResult:
    """Minimal generator count of the tower group, by closed form.

    For k >= 2 the answer is determined by the top level and the
    abelianization A of levels 2..k; internally it is cross-checked
    against max(2, d(A wr G_1)).
    """
    g1 = t.levels[0]
    if t.k == 1:
        d = 1 if g1.is_cyclic() else 2
        return FormulaResult(d, "SingleLevel", AbelianProfile({}))
    a = abelianization(t, 2)
    if g1.kind == "A" and g1.n == 4:
        d, case = max(2, a.d, a.rank(3) + 1), "A4"
    elif g1.kind == "A":
        d, case = max(2, a.d), "An"
    elif g1.kind == "S":
        d, case = max(2, a.d, a.rank(2) + 1), "Sn"
    else:
        d, case = max(2, a.d + 1), "Cyclic"
    if d != max(2, d_abelian_wreath(a, g1)):
        raise AssertionError("case split disagrees with the reduction identity")
    return FormulaResult(d, case, a)


@dataclass(frozen=True)
class CountingProfile:
    """Level counts entering the counting form (all levels included)."""

    a4: int  # Alt 4 levels
    s: int  # non-abelian symmetric levels
    c: dict[int, int]  # cyclic levels whose order p divides, per prime

    def c_p(self, p: int) -> int:
        return self.c.get(p, 0)


def counting_profile(t: TowerSpec) -> CountingProfile:
    a4 = s = 0
    c: dict[int, int] = {}
    for g in t.levels:
        if g.kind == "A" and g.n == 4:
            a4 += 1
        elif g.kind == "S":
            s += 1
        elif g.kind == "C":
            for p in _prime_factors(g.n):
                c[p] = c.get(p, 0) + 1
    return CountingProfile(a4, s, c)


def d_corollary(t: TowerSpec) -> int:
    """Counting form of d for towers with non-cyclic top, k >= 2:

        max over primes of (2, c_2 + s, c_3 + a_4, c_p).
    """
    if t.k < 2:
        raise ValueError("the counting form needs k >= 2")
    if t.levels[0].is_cyclic():
        raise CyclicTopError("the counting form requires a non-cyclic top level")
    prof = counting_profile(t)
    return max(2, prof.c_p(2) + prof.s, prof.c_p(3) + prof.a4,
               max(prof.c.values(), default=0))
