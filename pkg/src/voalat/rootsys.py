"""Root systems of even lattices: enumeration, classification, Weyl data.

A root is a primitive vector whose reflection preserves the lattice.  For
an even lattice of level ell every root norm divides 2*ell, which bounds
the enumeration.  Components are classified from exact count statistics
(rank, short/long counts, norm ratio), not from floating point angles.
"""

from fractions import Fraction
from math import gcd

import numpy as np

from . import exactmat as em
from . import lattice as lat
from . import permgrp as pg
from . import shortvec as sv


class Component:
    """One irreducible piece of a root system."""

    __slots__ = ("family", "rank", "scale", "vectors", "gram")

    def __init__(self, family, rank, scale, vectors, gram=None):
        self.family = family
        self.rank = rank
        self.scale = scale
        self.vectors = vectors
        self.gram = gram

    def inner(self, a, b):
        g = self.gram
        return sum(a[i] * g[i][j] * b[j]
                   for i in range(len(a)) for j in range(len(b)) if g[i][j])

    @property
    def symbol(self):
        base = "%s%d" % (self.family, self.rank)
        if self.scale == 1:
            return base
        return "sqrt%s%s" % (self.scale, base)

    def __repr__(self):
        return "Component(%s)" % self.symbol


def roots(l, cap=10 ** 6):
    """All reflective primitive vectors of an even lattice, one per +-pair."""
    ell = lat.level(l)
    g = em.mat_int(l.gram)
    out = []
    for nrm, v in sv.short_vectors(l, 2 * ell, cap):
        if _gcd_vec(v) != 1:
            continue
        vg = [sum(v[i] * g[i][j] for i in range(len(v))) for j in range(len(v))]
        if all((2 * x) % nrm == 0 for x in vg):
            out.append((nrm, v))
    return out


def roots_prime_level(l, cap=10 ** 6):
    """Roots via the prime-level shortcut: norm 2 plus norm 2p inside p*dual."""
    p = lat.level(l)
    g = em.mat_int(l.gram)
    out = []
    for nrm, v in sv.short_vectors(l, 2 * p, cap):
        if nrm == 2:
            out.append((nrm, v))
        elif nrm == 2 * p:
            vg = [sum(v[i] * g[i][j] for i in range(len(v))) for j in range(len(v))]
            if all(x % p == 0 for x in vg):
                out.append((nrm, v))
    return out


def _gcd_vec(v):
    d = 0
    for x in v:
        d = gcd(d, x)
    return d


def components(l, root_list):
    """Split roots into connected components under nonzero inner product."""
    n = len(root_list)
    g = l.gram
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    vecs = [v for _, v in root_list]
    for i in range(n):
        for j in range(i + 1, n):
            if find(i) != find(j) and l.inner(vecs[i], vecs[j]) != 0:
                parent[find(i)] = find(j)
    groups = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    out = []
    for idxs in sorted(groups.values()):
        comp_roots = [root_list[i] for i in idxs]
        out.append(_classify_component(l, comp_roots))
    out.sort(key=lambda c: (Fraction(c.scale), -c.rank, c.family))
    return out


def _classify_component(l, comp_roots):
    norms = sorted({nrm for nrm, _ in comp_roots})
    if len(norms) > 2:
        raise ValueError("component with norms %s is not a root system" % norms)
    vecs = [v for _, v in comp_roots]
    r = em.hnf([list(v) for v in vecs])[0]
    rank = sum(1 for row in r if any(row))
    total = 2 * len(comp_roots)
    short = 2 * sum(1 for nrm, _ in comp_roots if nrm == norms[0])
    if len(norms) == 1:
        family = _simply_laced_family(rank, total)
    else:
        ratio = Fraction(norms[1], norms[0])
        long_ = total - short
        if ratio == 2:
            if rank == 4 and short == 24 and long_ == 24:
                family = "F"
            elif long_ == 2 * rank:
                family = "C"
            elif short == 2 * rank:
                family = "B"
            else:
                raise ValueError("bad doubled component: rank %d, %d short %d long"
                                 % (rank, short, long_))
        elif ratio == 3:
            if rank != 2 or short != 6 or long_ != 6:
                raise ValueError("bad tripled component")
            family = "G"
        else:
            raise ValueError("impossible norm ratio %s" % ratio)
    _check_count(family, rank, total)
    scale = Fraction(norms[0], 2)
    if scale.denominator == 1:
        scale = int(scale)
    return Component(family, rank, scale, vecs, gram=l.gram)


def _simply_laced_family(rank, total):
    if total == rank * (rank + 1):
        return "A"
    if rank >= 4 and total == 2 * rank * (rank - 1):
        return "D"
    if (rank, total) in ((6, 72), (7, 126), (8, 240)):
        return "E"
    raise ValueError("no simply laced system of rank %d with %d roots"
                     % (rank, total))


def _check_count(family, rank, total):
    if total != root_count(family, rank):
        raise ValueError("component %s%d has %d roots, expected %d"
                         % (family, rank, total, root_count(family, rank)))


def root_count(family, rank):
    if family == "A":
        return rank * (rank + 1)
    if family in ("B", "C"):
        return 2 * rank * rank
    if family == "D":
        return 2 * rank * (rank - 1)
    if family == "E":
        return {6: 72, 7: 126, 8: 240}[rank]
    if family == "F":
        return 48
    if family == "G":
        return 12
    raise ValueError(family)


def root_system(l, cap=10 ** 6):
    return components(l, roots(l, cap))


def root_string(comps):
    """Canonical string, components sorted and grouped with exponents."""
    syms = [c.symbol for c in comps]
    out = []
    i = 0
    while i < len(syms):
        j = i
        while j < len(syms) and syms[j] == syms[i]:
            j += 1
        out.append(syms[i] if j - i == 1 else "%s^%d" % (syms[i], j - i))
        i = j
    return "+".join(out) if out else "empty"


def parse_root_string(s):
    """Multiset {(family, rank, scale): multiplicity} from a root string."""
    out = {}
    if s in ("", "empty"):
        return out
    for tok in s.split("+"):
        mult = 1
        if "^" in tok:
            tok, m = tok.split("^")
            mult = int(m)
        scale = 1
        if tok.startswith("sqrt"):
            body = tok[4:]
            k = 0
            while body[k].isdigit() or body[k] == "/":
                k += 1
            scale = Fraction(body[:k])
            if scale.denominator == 1:
                scale = int(scale)
            tok = body[k:]
        family = tok[0]
        rank = int(tok[1:])
        key = (family, rank, scale)
        out[key] = out.get(key, 0) + mult
    return out


def root_multiset(comps):
    out = {}
    for c in comps:
        key = (c.family, c.rank, c.scale)
        out[key] = out.get(key, 0) + 1
    return out


def weyl_order(family, rank):
    f = 1
    for k in range(2, rank + 1):
        f *= k
    if family == "A":
        return f * (rank + 1)
    if family in ("B", "C"):
        return 2 ** rank * f
    if family == "D":
        return 2 ** (rank - 1) * f
    if family == "E":
        return {6: 51840, 7: 2903040, 8: 696729600}[rank]
    if family == "F":
        return 1152
    if family == "G":
        return 12
    raise ValueError(family)


def rootsys_aut_order(family, rank):
    """Order of the full automorphism group: Weyl times diagram symmetries."""
    w = weyl_order(family, rank)
    if family == "A" and rank >= 2:
        return 2 * w
    if family == "D":
        return 6 * w if rank == 4 else 2 * w
    if family == "E" and rank == 6:
        return 2 * w
    return w


_MINUS_ONE = {}


def reflection_perms(comp):
    """Permutations of the signed root set induced by the root reflections."""
    signed = sorted({tuple(v) for v in comp.vectors} |
                    {tuple(-x for x in v) for v in comp.vectors})
    index = {v: i for i, v in enumerate(signed)}
    perms = []
    for alpha in comp.vectors:
        nn = comp.inner(alpha, alpha)
        imgs = np.empty(len(signed), dtype=np.int32)
        for i, beta in enumerate(signed):
            c = Fraction(2 * comp.inner(alpha, beta), nn)
            if c.denominator != 1:
                raise ValueError("non-integral reflection coefficient")
            refl = tuple(b - int(c) * a for b, a in zip(beta, alpha))
            imgs[i] = index[refl]
        perms.append(imgs)
    return signed, perms


def minus_one_in_weyl(comp):
    """Whether -1 lies in the Weyl group, decided by permutation membership."""
    key = (comp.family, comp.rank)
    if key in _MINUS_ONE:
        return _MINUS_ONE[key]
    signed, perms = reflection_perms(comp)
    index = {v: i for i, v in enumerate(signed)}
    neg = np.array([index[tuple(-x for x in v)] for v in signed], dtype=np.int32)
    grp = pg.PermGroup(perms, len(signed))
    ans = grp.contains(neg)
    _MINUS_ONE[key] = ans
    return ans


def weyl_group_on_roots(comp):
    """The Weyl group as a permutation group on the signed roots."""
    signed, perms = reflection_perms(comp)
    return pg.PermGroup(perms, len(signed))
