"""Permutations of ``{1..n}``.

Stored 0-based.  Products compose left to right: ``(p * q)(i) = q(p(i))``,
so a word ``g1 g2 ...`` acts by ``g1`` first.
"""
from __future__ import annotations

from functools import total_ordering
from itertools import permutations


@total_ordering
class Permutation:
    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation: {images}")
        object.__setattr__(self, "images", images)

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(n))

    @classmethod
    def from_one_based(cls, images) -> "Permutation":
        return cls(i - 1 for i in images)

    @classmethod
    def from_cycles(cls, n: int, cycles) -> "Permutation":
        """``from_cycles(3, [(1, 2)])`` is the transposition of 1 and 2."""
        img = list(range(n))
        seen = set()
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                if not (1 <= a <= n) or a in seen:
                    raise ValueError(f"bad cycle {cyc} for degree {n}")
                seen.add(a)
                img[a - 1] = b - 1
        return cls(img)

    @property
    def degree(self) -> int:
        return len(self.images)

    def one_based(self) -> list:
        return [i + 1 for i in self.images]

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: "Permutation") -> "Permutation":
        q = other.images
        return Permutation(q[i] for i in self.images)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(inv)

    def conjugate(self, s: "Permutation") -> "Permutation":
        """``s^-1 * self * s``: relabel points by ``s``."""
        return s.inverse() * self * s

    def cycles(self) -> list:
        """Nontrivial cycles, 1-based, each starting at its least point."""
        seen = [False] * len(self.images)
        out = []
        for i in range(len(self.images)):
            if seen[i]:
                continue
            cyc = []
            j = i
            while not seen[j]:
                seen[j] = True
                cyc.append(j + 1)
                j = self.images[j]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple:
        return cyclical_type(self)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other: "Permutation") -> bool:
        return self.images < other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __str__(self) -> str:
        cyc = self.cycles()
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc) or "()"

    def __repr__(self) -> str:
        return f"Permutation({self.one_based()})"


def cyclical_type(p: Permutation) -> tuple:
    """Lengths of the nontrivial cycles, in decreasing order."""
    return tuple(sorted((len(c) for c in p.cycles()), reverse=True))


def normalize_type(lengths) -> tuple:
    t = tuple(sorted((int(x) for x in lengths), reverse=True))
    if any(x < 2 for x in t):
        raise ValueError(f"cycle lengths must be at least 2: {t}")
    return t


def all_permutations(n: int) -> list:
    return [Permutation(p) for p in permutations(range(n))]


def permutations_of_type(n: int, ctype) -> list:
    """All permutations of degree ``n`` with the given cyclical type, in
    lexicographic order of their image tuples."""
    ctype = normalize_type(ctype)
    if sum(ctype) > n:
        return []
    return [p for p in all_permutations(n) if cyclical_type(p) == ctype]
