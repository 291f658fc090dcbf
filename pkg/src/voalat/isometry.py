"""Lattice automorphism groups and isometry testing by backtracking.

The search follows the classical strategy: enumerate all vectors up to the
largest reduced basis norm, then extend basis-image prefixes with exact
inner-product filtering (numpy int64 matvecs).  A full prefix automatically
gives an isometry, since images are lattice vectors realizing the Gram
matrix.  For automorphisms the per-level image counts multiply to the group
order, and the found maps form a strong generating set.

Results are cached on disk keyed by the canonical Gram text; cached
generators are re-verified before use, never trusted blindly.
"""

import hashlib
import json
import os

import numpy as np

from fractions import Fraction

from . import exactmat as em
from . import lattice as lat
from . import shortvec as sv


def _int_scaled_gram(l, extra=1):
    d = em.denominator_lcm(l.gram) * extra
    g = [[int(Fraction(x) * d) for x in row] for row in l.gram]
    return g, d


class _Prep:
    """Reduced coordinates plus the full signed vector set."""

    def __init__(self, l, scale_extra=1, cap=10 ** 6, fp_map=None):
        self.orig = l
        gi, self.scale = _int_scaled_gram(l, scale_extra)
        g2, u = sv.lll_reduce(gi)
        n = len(g2)
        order = sorted(range(n), key=lambda i: (g2[i][i], i))
        p = [[1 if j == order[i] else 0 for j in range(n)] for i in range(n)]
        self.g = em.mat_int(em.mat_mul(em.mat_mul(p, g2), em.transpose(p)))
        self.u = em.mat_mul(p, u)
        self.n = n
        maxdiag = max(self.g[i][i] for i in range(n))
        pairs = sv.short_vectors(lat.Lattice(self.g), maxdiag, cap)
        vecs = [v for _, v in pairs] + [tuple(-x for x in v) for _, v in pairs]
        self.v = np.array(sorted(vecs), dtype=np.int64)
        self.gnp = np.array(self.g, dtype=np.int64)
        self.vg = self.v @ self.gnp
        self.norms = (self.vg * self.v).sum(axis=1)
        self.index = {tuple(int(x) for x in row): i
                      for i, row in enumerate(self.v)}
        self._fingerprint(fp_map if fp_map is not None else {})

    def _fingerprint(self, fp_map):
        """Class each vector by its inner products against the minimal shell.

        Automorphisms permute the shell, so the histogram is invariant; any
        candidate image of a basis vector must share its class.  Only an
        optimization: false merges admit candidates the exact filters later
        reject.  Crucially this severs unrelated orthogonal blocks at once.
        """
        minshell = self.v[self.norms == self.norms.min()].T
        self.fp = np.empty(len(self.v), dtype=np.int64)
        for lo in range(0, len(self.v), 256):
            ips = self.vg[lo:lo + 256] @ minshell
            for i in range(len(ips)):
                vals, counts = np.unique(ips[i], return_counts=True)
                key = (int(self.norms[lo + i]),
                       tuple(zip((int(x) for x in vals),
                                 (int(c) for c in counts))))
                self.fp[lo + i] = fp_map.setdefault(key, len(fp_map))

    def theta(self):
        vals, counts = np.unique(self.norms, return_counts=True)
        return {int(a): int(b) for a, b in zip(vals, counts)}


def _complete(prep, targets, chosen, start_level, cand0):
    """Depth-first completion; returns index list or None.

    chosen: vector indices for rows < start_level.  cand0: per-level initial
    candidate index arrays (already norm-filtered), which this refines by
    inner products against every chosen row.
    """
    n = len(targets)
    v, vg = prep.v, prep.vg
    cands = list(cand0)
    for j, c in enumerate(chosen):
        vc = v[c]
        for k in range(start_level, n):
            ips = vg[cands[k]] @ vc
            cands[k] = cands[k][ips == targets[k][j]]
            if cands[k].size == 0:
                return None

    def rec(level, cands):
        if level == n:
            return []
        for c in cands[level]:
            vc = v[c]
            ok = True
            nxt = cands[:]
            for k in range(level + 1, n):
                ips = vg[nxt[k]] @ vc
                nxt[k] = nxt[k][ips == targets[k][level]]
                if nxt[k].size == 0:
                    ok = False
                    break
            if not ok:
                continue
            rest = rec(level + 1, nxt)
            if rest is not None:
                return [int(c)] + rest
        return None

    return rec(start_level, cands)


def _initial_cands(prep, targets, fp_required):
    out = []
    for j in range(len(targets)):
        mask = (prep.norms == targets[j][j]) & (prep.fp == fp_required[j])
        out.append(np.nonzero(mask)[0])
    return out


def automorphism_gens(l, cache=True, cap=10 ** 6):
    """Generators of O(l) as integer row matrices, plus the exact order.

    The order is the product of per-level image counts from the stabilizer
    chain; callers cross-check it through a permutation representation.
    """
    key = None
    if cache:
        key = _cache_key(l)
        hit = _cache_load(key, l)
        if hit is not None:
            return hit
    prep = _Prep(l, cap=cap)
    n = prep.n
    targets = prep.g
    base_idx = [prep.index[tuple(1 if t == i else 0 for t in range(n))]
                for i in range(n)]
    gens_red = []
    order = 1
    cand0 = _initial_cands(prep, targets, [prep.fp[b] for b in base_idx])
    for i in range(n):
        cands = cand0[i]
        for j in range(i):
            ips = prep.vg[cands] @ prep.v[base_idx[j]]
            cands = cands[ips == targets[i][j]]
        orbit = {tuple(int(x) for x in prep.v[base_idx[i]])}
        level_gens = []
        count = 0
        for c in cands:
            tc = tuple(int(x) for x in prep.v[c])
            if tc in orbit:
                count += 1
                continue
            sol = _complete(prep, targets, base_idx[:i] + [int(c)], i + 1, cand0)
            if sol is None:
                continue
            count += 1
            m = prep.v[base_idx[:i] + [int(c)] + sol]
            level_gens.append(m)
            gens_red.append(m)
            # close the known orbit under everything found at this level
            frontier = sorted(orbit)
            while frontier:
                nxt = []
                for t in frontier:
                    for g in level_gens:
                        img = tuple(int(x) for x in np.array(t) @ g)
                        if img not in orbit:
                            orbit.add(img)
                            nxt.append(img)
                frontier = nxt
        order *= count
    uinv = em.mat_inv(prep.u)
    gens = []
    for m in gens_red:
        mo = em.mat_mul(em.mat_mul(uinv, [[int(x) for x in row] for row in m]),
                        prep.u)
        mo = em.mat_int(mo)
        _check_aut(l, mo)
        gens.append(mo)
    if cache:
        _cache_store(key, gens, order)
    return gens, order


def _check_aut(l, m):
    g = l.gram
    if not em.mat_eq(em.mat_mul(em.mat_mul(m, g), em.transpose(m)), g):
        raise ArithmeticError("claimed automorphism does not preserve the form")
    if em.det(m) not in (1, -1):
        raise ArithmeticError("claimed automorphism is not unimodular")


def isometry(l1, l2, cap=10 ** 6):
    """An isometry l1 -> l2 as rows over l2's basis, or None.

    Exhaustive: a None answer certifies the lattices are not isometric.
    """
    if l1.rank != l2.rank:
        return None
    d1 = em.denominator_lcm(l1.gram)
    d2 = em.denominator_lcm(l2.gram)
    d = d1 * d2 // _gcd(d1, d2)
    # both grams get the same integer scale so that rows can match exactly,
    # and a shared fingerprint table keeps class ids comparable across them
    shared = {}
    p1 = _Prep(l1, scale_extra=d // d1, cap=cap, fp_map=shared)
    p2 = _Prep(l2, scale_extra=d // d2, cap=cap, fp_map=shared)
    if em.det(p1.g) != em.det(p2.g):
        return None
    if p1.theta() != p2.theta():
        return None
    targets = p1.g
    n = p1.n
    base_fp = [p1.fp[p1.index[tuple(1 if t == i else 0 for t in range(n))]]
               for i in range(n)]
    cand0 = _initial_cands(p2, targets, base_fp)
    if any(c.size == 0 for c in cand0):
        return None
    sol = _complete(p2, targets, [], 0, cand0)
    if sol is None:
        return None
    m = [[int(x) for x in p2.v[c]] for c in sol]
    mo = em.mat_mul(em.mat_mul(em.mat_inv(p1.u), m), p2.u)
    got = em.mat_mul(em.mat_mul(mo, l2.gram), em.transpose(mo))
    if not em.mat_eq(got, l1.gram):
        raise ArithmeticError("isometry verification failed")
    return mo


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def perm_group_on_shells(l, gens):
    """Faithful permutation action of matrix gens on spanning short shells."""
    from . import permgrp as pg
    prep = _Prep(l)
    shells = sorted(set(int(x) for x in prep.norms))
    pick = []
    have_rank = 0
    for s in shells:
        pick.append(s)
        idx = np.nonzero(np.isin(prep.norms, pick))[0]
        vs = [list(int(x) for x in prep.v[i]) for i in idx]
        h, _ = em.hnf(vs)
        have_rank = sum(1 for row in h if any(row))
        if have_rank == prep.n:
            break
    if have_rank < prep.n:
        raise ArithmeticError("short vectors do not span")
    idx = np.nonzero(np.isin(prep.norms, pick))[0]
    dom = [tuple(int(x) for x in prep.v[i]) for i in idx]
    dom_index = {t: i for i, t in enumerate(dom)}
    uinv = em.mat_inv(prep.u)
    perms = []
    for g in gens:
        # push to reduced coordinates: u g u^-1
        gr = em.mat_int(em.mat_mul(em.mat_mul(prep.u, g), uinv))
        grn = np.array(gr, dtype=np.int64)
        img = np.empty(len(dom), dtype=np.int32)
        for i, t in enumerate(dom):
            w = tuple(int(x) for x in np.array(t, dtype=np.int64) @ grn)
            img[i] = dom_index[w]
        perms.append(img)
    return pg.PermGroup(perms, len(dom))


def aut_order(l, cache=True):
    """|O(l)| with the permutation order cross-checked against the chain."""
    gens, chain_order = automorphism_gens(l, cache=cache)
    grp = perm_group_on_shells(l, gens)
    n = grp.order()
    if n != chain_order:
        raise ArithmeticError("permutation order %d disagrees with chain %d"
                              % (n, chain_order))
    return n


# disk cache


def cache_dir():
    d = os.environ.get("VOALAT_CACHE")
    if not d:
        d = os.path.join(os.path.expanduser("~"), ".cache", "voalat")
    return d


def _cache_key(l):
    gi, _ = _int_scaled_gram(l)
    text = lat.to_text(lat.Lattice(gi))
    return hashlib.sha256(text.encode()).hexdigest()[:24]


def _cache_load(key, l):
    path = os.path.join(cache_dir(), "aut_%s.json" % key)
    try:
        with open(path) as f:
            data = json.load(f)
    except (OSError, ValueError):
        return None
    try:
        gens = [em.mat_int(g) for g in data["gens"]]
        for g in gens:
            _check_aut(l, g)
        return gens, int(data["order"])
    except (ArithmeticError, ValueError, KeyError):
        return None


def _cache_store(key, gens, order):
    d = cache_dir()
    try:
        os.makedirs(d, exist_ok=True)
        path = os.path.join(d, "aut_%s.json" % key)
        tmp = path + ".tmp"
        with open(tmp, "w") as f:
            json.dump({"order": order, "gens": gens}, f)
        os.replace(tmp, path)
    except OSError:
        pass


def cache_stat():
    d = cache_dir()
    if not os.path.isdir(d):
        return {"dir": d, "entries": 0, "bytes": 0}
    names = [n for n in os.listdir(d) if n.startswith("aut_")]
    total = sum(os.path.getsize(os.path.join(d, n)) for n in names)
    return {"dir": d, "entries": len(names), "bytes": total}


def cache_clear():
    d = cache_dir()
    removed = 0
    if os.path.isdir(d):
        for n in os.listdir(d):
            if n.startswith("aut_") and n.endswith(".json"):
                os.remove(os.path.join(d, n))
                removed += 1
    return removed
