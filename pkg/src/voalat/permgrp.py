"""Permutation groups via a deterministic Schreier-Sims chain.

Permutations are numpy int32 arrays mapping position -> image; composition
is fancy indexing, so group ops stay cheap even at degree ~10^5.  Base
points are always the smallest moved point available and orbits are grown
in FIFO order with generators in listed order, making every run identical.
"""

import numpy as np


class NotClosed(Exception):
    """A claimed group action led outside its stated domain."""


def identity_perm(n):
    return np.arange(n, dtype=np.int32)


def compose(p, q):
    """Apply p first, then q."""
    return q[p]


def inverse(p):
    out = np.empty_like(p)
    out[p] = np.arange(len(p), dtype=p.dtype)
    return out


def is_identity(p):
    return bool((p == np.arange(len(p), dtype=p.dtype)).all())


class PermGroup:

    def __init__(self, gens, degree):
        self.degree = int(degree)
        self.gens = []
        for g in gens:
            a = np.asarray(g, dtype=np.int32)
            if a.shape != (self.degree,) or not is_identity(a[inverse(a)]):
                raise ValueError("not a permutation of the stated degree")
            if not is_identity(a):
                self.gens.append(a)
        self._base = None
        self._strong = None
        self._trans = None

    # chain data: base[i], strong[i] = gens fixing base[:i], trans[i] =
    # schreier vector {point: (prev_point, gen_index)} over strong[i]

    def _rebuild_orbit(self, i):
        b = self._base[i]
        t = {b: None}
        queue = [b]
        for p in queue:
            for gi, g in enumerate(self._strong[i]):
                q = int(g[p])
                if q not in t:
                    t[q] = (p, gi)
                    queue.append(q)
        self._trans[i] = t

    def _coset_rep(self, i, point):
        """Permutation u with u[base[i]] = point."""
        path = []
        p = point
        while self._trans[i][p] is not None:
            prev, gi = self._trans[i][p]
            path.append(gi)
            p = prev
        u = identity_perm(self.degree)
        for gi in reversed(path):
            u = compose(u, self._strong[i][gi])
        return u

    def _strip(self, g):
        for i in range(len(self._base)):
            x = int(g[self._base[i]])
            if x not in self._trans[i]:
                return g, i
            u = self._coset_rep(i, x)
            g = compose(g, inverse(u))
        return g, len(self._base)

    def _new_base_point(self, g):
        moved = np.nonzero(g != np.arange(self.degree, dtype=np.int32))[0]
        return int(moved[0])

    def _build(self):
        if self._base is not None:
            return
        self._base, self._strong, self._trans = [], [], []
        if not self.gens:
            return
        self._base.append(self._new_base_point(self.gens[0]))
        self._strong.append(list(self.gens))
        self._trans.append(None)
        self._rebuild_orbit(0)
        i = 0
        while i >= 0:
            restart = False
            for p in sorted(self._trans[i]):
                up = self._coset_rep(i, p)
                for g in self._strong[i]:
                    x = int(g[p])
                    ux = self._coset_rep(i, x)
                    schreier = compose(compose(up, g), inverse(ux))
                    h, j = self._strip(schreier)
                    if not is_identity(h):
                        if j == len(self._base):
                            self._base.append(self._new_base_point(h))
                            self._strong.append([])
                            self._trans.append(None)
                        for k in range(i + 1, j + 1):
                            self._strong[k].append(h)
                            self._rebuild_orbit(k)
                        i = j
                        restart = True
                        break
                if restart:
                    break
            if not restart:
                i -= 1

    def order(self):
        self._build()
        n = 1
        for t in self._trans or []:
            n *= len(t)
        return n

    def contains(self, p):
        p = np.asarray(p, dtype=np.int32)
        if is_identity(p):
            return True
        self._build()
        if self._base is None or not self._trans:
            return False
        h, _ = self._strip(p)
        return is_identity(h)

    def orbit(self, point):
        seen = {int(point)}
        queue = [int(point)]
        for p in queue:
            for g in self.gens:
                q = int(g[p])
                if q not in seen:
                    seen.add(q)
                    queue.append(q)
        return sorted(seen)

    def orbits(self):
        left = set(range(self.degree))
        out = []
        while left:
            o = self.orbit(min(left))
            out.append(o)
            left -= set(o)
        return out

    def stabilizer_order(self, point):
        """|G| / |orbit|, exact by orbit-stabilizer."""
        o = self.orbit(point)
        n = self.order()
        if n % len(o):
            raise ArithmeticError("orbit does not divide group order")
        return n // len(o)

    def stabilizer_gens(self, point):
        """Schreier generators of the point stabilizer (not reduced)."""
        o = self.orbit(point)
        idx = {p: i for i, p in enumerate(o)}
        reps = {int(point): identity_perm(self.degree)}
        queue = [int(point)]
        for p in queue:
            for g in self.gens:
                q = int(g[p])
                if q not in reps:
                    reps[q] = compose(reps[p], g)
                    queue.append(q)
        out = []
        for p in o:
            for g in self.gens:
                s = compose(compose(reps[p], g), inverse(reps[int(g[p])]))
                if not is_identity(s):
                    out.append(s)
        return out


def action_closure(mats, seeds, apply_fn):
    """Close seed points under matrix actions; return (points, perms).

    apply_fn(mat, point) -> point.  Points are hashable canonical tuples.
    The returned points list is sorted; perms act on its indices.  Raises
    NotClosed if an action ever maps a closed set outside itself (cannot
    happen during closure, but guards the final permutation build).
    """
    pts = set(seeds)
    queue = sorted(pts)
    for p in queue:
        for m in mats:
            q = apply_fn(m, p)
            if q not in pts:
                pts.add(q)
                queue.append(q)
    points = sorted(pts)
    index = {p: i for i, p in enumerate(points)}
    perms = []
    for m in mats:
        img = np.empty(len(points), dtype=np.int32)
        for i, p in enumerate(points):
            q = apply_fn(m, p)
            if q not in index:
                raise NotClosed("action leaves the closed point set")
            img[i] = index[q]
        perms.append(img)
    return points, perms


def symmetric_group_gens(n):
    """Transposition (0 1) and the n-cycle, as perms of 0..n-1."""
    if n < 2:
        return []
    t = np.arange(n, dtype=np.int32)
    t[0], t[1] = 1, 0
    c = np.roll(np.arange(n, dtype=np.int32), -1)
    return [t, c]
