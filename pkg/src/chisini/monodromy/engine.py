"""Homomorphisms from finitely presented groups to symmetric groups."""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

from chisini.monodromy.perm import Permutation, cyclical_type, normalize_type
from chisini.monodromy.presentation import FinitePresentation

DEFAULT_MAX_DEGREE = 8


class DegreeCapExceeded(ValueError):
    pass


@dataclass(frozen=True)
class PermRepresentation:
    presentation: FinitePresentation
    degree: int
    images: tuple  # of Permutation, one per generator

    def key(self) -> tuple:
        return tuple(p.images for p in self.images)

    def image_of(self, word) -> Permutation:
        return evaluate_word(word, [p.images for p in self.images], self.degree)

    def as_dict(self) -> dict:
        return {
            "images": {name: str(p) for name, p in zip(self.presentation.generators, self.images)},
        }


# -- raw tuple arithmetic (hot path) ------------------------------------------

def _compose(p: tuple, q: tuple) -> tuple:
    return tuple(q[i] for i in p)


def _inverse(p: tuple) -> tuple:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def _word_fixes_all(word, imgs, invs, n) -> bool:
    # trace each point through the word instead of composing permutations
    for start in range(n):
        x = start
        for s in word:
            x = imgs[s - 1][x] if s > 0 else invs[-s - 1][x]
        if x != start:
            return False
    return True


def evaluate_word(word, imgs, n: int) -> Permutation:
    out = list(range(n))
    invs = [_inverse(p) for p in imgs]
    for start in range(n):
        x = start
        for s in word:
            x = imgs[s - 1][x] if s > 0 else invs[-s - 1][x]
        out[start] = x
    return Permutation(out)


@lru_cache(maxsize=None)
def _candidates(n: int, ctype) -> tuple:
    perms = permutations(range(n))
    if ctype is None:
        return tuple(perms)
    return tuple(p for p in perms if cyclical_type(Permutation(p)) == ctype)


def _check_degree(n: int, max_degree: int | None):
    cap = DEFAULT_MAX_DEGREE if max_degree is None else max_degree
    if n < 1:
        raise ValueError("degree must be positive")
    if n > cap:
        raise DegreeCapExceeded(f"degree {n} exceeds the configured cap {cap}; raise the cap explicitly")


def _plan(pres: FinitePresentation):
    """For each generator position, the relators that become checkable once
    that generator (and all earlier ones) are assigned."""
    g = pres.rank
    ready = [[] for _ in range(g)]
    for w in pres.relators:
        if not w:
            continue
        last = max(abs(x) for x in w) - 1
        ready[last].append(w)
    return ready


def _search(pres, n, ctype, prefix: tuple) -> list:
    geo = set(pres.geometric)
    cands = [_candidates(n, ctype if (i + 1) in geo else None) for i in range(pres.rank)]
    ready = _plan(pres)
    out = []
    imgs: list = [None] * pres.rank
    invs: list = [None] * pres.rank

    def rec(i):
        if i == pres.rank:
            out.append(tuple(imgs))
            return
        pool = (prefix[i],) if i < len(prefix) else cands[i]
        for p in pool:
            imgs[i] = p
            invs[i] = _inverse(p)
            if all(_word_fixes_all(w, imgs, invs, n) for w in ready[i]):
                rec(i + 1)
        imgs[i] = invs[i] = None

    # prefix entries must themselves be admissible candidates
    for i, p in enumerate(prefix):
        if p not in set(cands[i]):
            return []
    rec(0)
    return out


def _search_job(args):
    return _search(*args)


def enumerate_homs(pres: FinitePresentation, n: int, constraint=(2,), jobs: int = 1,
                   max_degree: int | None = None) -> list[PermRepresentation]:
    """All homomorphisms sending every geometric generator to a permutation
    of cyclical type ``constraint``, in lexicographic order of images."""
    _check_degree(n, max_degree)
    ctype = normalize_type(constraint) if constraint is not None else None
    if ctype is not None and sum(ctype) > n:
        return []
    if jobs > 1:
        first = _candidates(n, ctype if 1 in pres.geometric else None)
        tasks = [(pres, n, ctype, (p,)) for p in first]
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            raw = [t for chunk in ex.map(_search_job, tasks) for t in chunk]
    else:
        raw = _search(pres, n, ctype, ())
    raw.sort()
    return [PermRepresentation(pres, n, tuple(Permutation(p) for p in t)) for t in raw]


def brute_force_homs(pres: FinitePresentation, n: int, constraint=(2,)) -> list[tuple]:
    """Exhaustive oracle over all ``|S_n|^g`` image tuples."""
    from itertools import product

    ctype = normalize_type(constraint) if constraint is not None else None
    allp = list(permutations(range(n)))
    out = []
    for t in product(allp, repeat=pres.rank):
        if ctype is not None and any(cyclical_type(Permutation(t[i - 1])) != ctype for i in pres.geometric):
            continue
        invs = [_inverse(p) for p in t]
        if all(_word_fixes_all(w, t, invs, n) for w in pres.relators):
            out.append(t)
    out.sort()
    return out


# -- structure of a representation -----------------------------------------------

def orbits(perms, n: int) -> list[tuple]:
    """Orbits (0-based, sorted) of the group generated by ``perms``."""
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p in perms:
        imgs = p.images if isinstance(p, Permutation) else p
        for i, j in enumerate(imgs):
            a, b = find(i), find(j)
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups: dict = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return sorted(tuple(g) for g in groups.values())


def is_transitive(rep: PermRepresentation) -> bool:
    return len(orbits(rep.images, rep.degree)) <= 1


@dataclass(frozen=True)
class ComponentDecomposition:
    orbits: tuple  # 1-based
    degrees: tuple
    nondegenerate: tuple | None = None

    def as_dict(self) -> dict:
        out = {"orbits": [list(o) for o in self.orbits], "degrees": list(self.degrees)}
        if self.nondegenerate is not None:
            out["nondegenerate"] = list(self.nondegenerate)
        return out


def components(rep: PermRepresentation, local_gens, reference_multiplicity: int | None = None) -> ComponentDecomposition:
    local_gens = list(local_gens)
    if not local_gens:
        raise ValueError("local generator set is empty")
    perms = [rep.images[i - 1] for i in local_gens]
    orbs = tuple(tuple(x + 1 for x in o) for o in orbits(perms, rep.degree))
    degs = tuple(len(o) for o in orbs)
    flags = None
    if reference_multiplicity is not None:
        flags = tuple(d == reference_multiplicity + 1 for d in degs)
    return ComponentDecomposition(orbs, degs, flags)


# -- equivalence under simultaneous conjugation ---------------------------------

def _conj_tuple(t: tuple, s: tuple, s_inv: tuple) -> tuple:
    # s^-1 * p * s: point s(i) goes to s(p(i))
    return tuple(tuple(s[p[s_inv[j]]] for j in range(len(p))) for p in t)


def conjugation_orbit(t: tuple, n: int) -> set:
    if n == 1:
        return {t}
    gens = [tuple([1, 0] + list(range(2, n))), tuple(list(range(1, n)) + [0])]
    gens = [(s, _inverse(s)) for s in gens]
    seen = {t}
    frontier = [t]
    while frontier:
        nxt = []
        for u in frontier:
            for s, si in gens:
                w = _conj_tuple(u, s, si)
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return seen


@dataclass(frozen=True)
class EquivalenceClass:
    representative: PermRepresentation
    members: tuple

    @property
    def size(self) -> int:
        return len(self.members)


def equivalence_classes(reps) -> list[EquivalenceClass]:
    reps = list(reps)
    if not reps:
        return []
    n = reps[0].degree
    if any(r.degree != n for r in reps):
        raise ValueError("representations of mixed degrees")
    if any(r.presentation != reps[0].presentation for r in reps):
        raise ValueError("representations of different presentations")
    by_key = {r.key(): r for r in reps}
    assigned: set = set()
    classes = []
    for key in sorted(by_key):
        if key in assigned:
            continue
        orb = conjugation_orbit(key, n)
        members = sorted(k for k in orb if k in by_key)
        assigned.update(members)
        classes.append(EquivalenceClass(by_key[members[0]], tuple(by_key[k] for k in members)))
    return classes
