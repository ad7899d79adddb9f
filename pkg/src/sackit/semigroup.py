"""Numerical semigroups with exact integer arithmetic.

A numerical semigroup is a subset of the nonnegative integers containing 0,
closed under addition, whose complement is finite.  It is described here by
its minimal generating set.  All queries are answered from a boolean sieve
that is extended until it provably covers every gap: once the table ends
with multiplicity-many consecutive members, everything beyond the table is a
member as well, so the largest non-member found is the Frobenius number.

Instances are immutable; every operation returns plain values or fresh
instances.
"""

from __future__ import annotations

from math import gcd

from .errors import (
    EmptyInput,
    GcdNotOne,
    IsMinimalGenerator,
    NotAMember,
    NotCoprime,
)


class NumericalSemigroup:
    """The submonoid of the nonnegative integers generated by ``generators``.

    Use :meth:`from_generators` (or :meth:`from_text`) rather than the raw
    constructor; they normalize the generating set to the minimal one and
    build the membership sieve.
    """

    __slots__ = ("generators", "frobenius", "genus", "_table")

    def __init__(self, generators, frobenius, genus, table):
        object.__setattr__(self, "generators", generators)
        object.__setattr__(self, "frobenius", frobenius)
        object.__setattr__(self, "genus", genus)
        object.__setattr__(self, "_table", table)

    def __setattr__(self, name, value):
        raise AttributeError("NumericalSemigroup is immutable")

    @classmethod
    def from_generators(cls, generators) -> "NumericalSemigroup":
        """Build the semigroup, minimalizing the generating set.

        Raises EmptyInput for an empty list or non-positive entries, and
        GcdNotOne when the generators do not have gcd 1 (the complement
        would be infinite).
        """
        gens = sorted(set(int(g) for g in generators))
        if not gens:
            raise EmptyInput("need at least one generator")
        if gens[0] <= 0:
            raise EmptyInput(f"generators must be positive, got {gens[0]}")
        g = 0
        for a in gens:
            g = gcd(g, a)
        if g != 1:
            raise GcdNotOne(f"gcd of generators is {g}, not 1")

        bound = max(gens[0] * gens[-1], gens[-1] + gens[0])
        table = _sieve(gens, bound)
        # A trailing run of multiplicity-many members certifies the bound;
        # otherwise the sieve was too short and is doubled.
        while not all(table[bound - gens[0] + 1 : bound + 1]):
            bound *= 2
            table = _sieve(gens, bound)

        frobenius = -1
        genus = 0
        for x in range(bound, -1, -1):
            if not table[x]:
                frobenius = x
                break
        genus = sum(1 for x in range(frobenius + 1) if not table[x])

        minimal = []
        for cand in gens:
            redundant = any(
                table[a] and table[cand - a] for a in range(1, cand)
            )
            if not redundant:
                minimal.append(cand)
        return cls(tuple(minimal), frobenius, genus, bytes(table))

    @classmethod
    def from_text(cls, text: str) -> "NumericalSemigroup":
        """Parse the comma-separated generator form, e.g. ``"8,11,12,14,18"``."""
        parts = [p.strip() for p in text.split(",") if p.strip()]
        if not parts:
            raise EmptyInput("empty generator list")
        try:
            gens = [int(p) for p in parts]
        except ValueError as exc:
            raise EmptyInput(f"bad generator list {text!r}") from exc
        return cls.from_generators(gens)

    # -- membership -----------------------------------------------------

    def contains(self, x: int) -> bool:
        """Whether ``x`` lies in the semigroup."""
        if x < 0:
            return False
        if x >= len(self._table):
            return True
        return bool(self._table[x])

    def __contains__(self, x: int) -> bool:
        return self.contains(x)

    def members(self, count: int) -> tuple[int, ...]:
        """The first ``count`` members in increasing order, starting at 0."""
        out = []
        x = 0
        while len(out) < count:
            if self.contains(x):
                out.append(x)
            x += 1
        return tuple(out)

    def gaps(self) -> tuple[int, ...]:
        """All nonnegative integers outside the semigroup."""
        return tuple(
            x for x in range(self.frobenius + 1) if not self.contains(x)
        )

    # -- invariants ------------------------------------------------------

    @property
    def multiplicity(self) -> int:
        """Smallest nonzero member."""
        return self.generators[0]

    @property
    def embedding_dim(self) -> int:
        """Number of minimal generators."""
        return len(self.generators)

    def apery_set(self, q: int) -> tuple[int, ...]:
        """Smallest member in each residue class mod ``q``, sorted.

        ``q`` must be a nonzero member; the result always has ``q``
        elements and contains 0.
        """
        if q <= 0 or not self.contains(q):
            raise NotAMember(f"{q} is not a nonzero member of <{self}>")
        found: dict[int, int] = {}
        for x in range(self.frobenius + q + 1):
            if len(found) == q:
                break
            if self.contains(x):
                found.setdefault(x % q, x)
        assert len(found) == q
        return tuple(sorted(found.values()))

    def is_gap_symmetric(self) -> bool:
        """Mirror test on [0, frobenius]: x is a member exactly when
        frobenius - x is a gap.  This is the standard symmetry criterion
        for the value semigroup."""
        f = self.frobenius
        return all(self.contains(x) != self.contains(f - x) for x in range(f + 1))

    def has_minimal_multiplicity(self) -> bool:
        """Whether the embedding dimension equals the multiplicity."""
        return self.embedding_dim == self.multiplicity

    def has_almost_minimal_multiplicity(self) -> bool:
        """Whether the embedding dimension falls short of the multiplicity
        by exactly one.

        Computed combinatorially and cross-checked against the length
        criterion: the set 2M \\ (e + M) with M the nonzero members and e
        the multiplicity must have exactly one element.  The two tests are
        equivalent and both are evaluated.
        """
        combinatorial = self.embedding_dim + 1 == self.multiplicity
        e = self.multiplicity
        length = len(self._double_ideal_difference(e))
        assert combinatorial == (length == 1), (
            f"almost-minimal-multiplicity criteria disagree on <{self}>"
        )
        return combinatorial

    def _double_ideal_difference(self, shift: int) -> tuple[int, ...]:
        """Elements of 2M \\ (shift + M), M the nonzero members."""
        out = []
        for y in range(2, shift + self.frobenius + 2):
            in_2m = any(
                self.contains(a) and self.contains(y - a)
                for a in range(1, y)
            )
            in_shifted = y - shift > 0 and self.contains(y - shift)
            if in_2m and not in_shifted:
                out.append(y)
        return tuple(out)

    # -- constructions ---------------------------------------------------

    def glue(self, n: int, m: int) -> "NumericalSemigroup":
        """The gluing n*H + <m>.

        Requires n, m positive, gcd(n, m) = 1, m a member of H but not a
        minimal generator.  The result is the semigroup generated by the
        scaled generators together with m.
        """
        if n <= 0 or m <= 0:
            raise EmptyInput(f"gluing needs positive n, m; got n={n}, m={m}")
        if not self.contains(m):
            raise NotAMember(f"{m} is not a member of <{self}>")
        if m in self.generators:
            raise IsMinimalGenerator(
                f"{m} is a minimal generator of <{self}>"
            )
        if gcd(n, m) != 1:
            raise NotCoprime(f"gcd({n}, {m}) != 1")
        return NumericalSemigroup.from_generators(
            [n * g for g in self.generators] + [m]
        )

    # -- plumbing ---------------------------------------------------------

    def __str__(self) -> str:
        return ",".join(str(g) for g in self.generators)

    def __repr__(self) -> str:
        return f"NumericalSemigroup({self})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, NumericalSemigroup):
            return NotImplemented
        return self.generators == other.generators

    def __hash__(self) -> int:
        return hash(self.generators)


def _sieve(gens: list[int], bound: int) -> bytearray:
    table = bytearray(bound + 1)
    table[0] = 1
    for x in range(gens[0], bound + 1):
        for g in gens:
            if g > x:
                break
            if table[x - g]:
                table[x] = 1
                break
    return table
