"""Automorphisms of glue codes over products of simple current groups.

A glue code is a subgroup of the direct product of the simple current
groups attached to the simple factor copies (slots) of a weight-one Lie
algebra.  A word is stored as a tuple holding one generator-coordinate
tuple per slot.  Two symmetry layers act on codes:

  * coordinatewise outer symmetries, one gamma matrix per slot, drawn
    from the slot's simple current group data;
  * permutations of identical slots (same family, rank and level).

aut1 counts the gamma tuples that preserve the code setwise.  aut2 is
the group of slot permutations sigma for which some gamma tuple maps
sigma(code) back onto the code.  Small permutation domains are searched
directly; large symmetric blocks go through an orbit-stabilizer run on
the system of minimal supports, and every stabilizer generator found
that way is then re-verified against the code, so the reported orders
are never heuristic.
"""

from fractions import Fraction
from itertools import permutations
from math import factorial

from . import catalog as cat
from . import permgrp


class GlueAutError(Exception):
    """The automorphism computation cannot certify an exact answer."""


def zero_word(slots):
    return tuple(tuple(0 for _ in s.scg.divisors) for s in slots)


def word_add(slots, a, b):
    out = []
    for s, ca, cb in zip(slots, a, b):
        d = s.scg.divisors
        out.append(tuple((x + y) % dv for x, y, dv in zip(ca, cb, d)))
    return tuple(out)


def apply_gamma(mat, coords, divisors):
    if not divisors:
        return ()
    n = len(divisors)
    return tuple(
        sum(mat[r][k] * coords[k] for k in range(n)) % divisors[r]
        for r in range(n))


def close_words(slots, gens):
    """Subgroup of the product generated by the given words."""
    words = {zero_word(slots)}
    stack = list(words)
    while stack:
        cur = stack.pop()
        for g in gens:
            nxt = word_add(slots, cur, g)
            if nxt not in words:
                words.add(nxt)
                stack.append(nxt)
    return frozenset(words)


def generating_set(slots, words):
    """A short generating list for a code given as a full word set."""
    closure = {zero_word(slots)}
    gens = []
    for w in sorted(words):
        if w not in closure:
            gens.append(w)
            closure = set(close_words(slots, gens))
    return gens


def _prefix_sets(words, nslots):
    projs = []
    for k in range(1, nslots + 1):
        projs.append({w[:k] for w in words})
    return projs


def _gamma_dfs(slots, gen_words, projs, count_all):
    """Count (or just detect) gamma tuples mapping each generator word
    into the code whose prefixes are listed in projs."""
    m = len(slots)
    if not gen_words:
        if not count_all:
            return True
        n = 1
        for s in slots:
            n *= len(s.scg.gammas)
        return n
    state = {"count": 0}

    def rec(j, prefixes):
        if j == m:
            state["count"] += 1
            return not count_all
        divs = slots[j].scg.divisors
        proj = projs[j]
        for mat in slots[j].scg.gammas:
            nxt = []
            for pref, w in zip(prefixes, gen_words):
                c = apply_gamma(mat, w[j], divs)
                t = pref + (c,)
                if t not in proj:
                    break
                nxt.append(t)
            else:
                if rec(j + 1, nxt):
                    return True
        return False

    hit = rec(0, [()] * len(gen_words))
    if count_all:
        return state["count"]
    return hit


def aut1_count(slots, words):
    gens = generating_set(slots, words)
    projs = _prefix_sets(words, len(slots))
    return _gamma_dfs(slots, gens, projs, True)


def slot_blocks(slots):
    """Indices of interchangeable slots, grouped in slot order."""
    blocks = {}
    for i, s in enumerate(slots):
        key = (s.scg.family, s.scg.rank, s.scg.level)
        blocks.setdefault(key, []).append(i)
    return list(blocks.values())


def _permute_word(w, inv):
    return tuple(w[i] for i in inv)


def _perm_inverse(p):
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def _block_perm_iter(blocks, m):
    """All permutations of 0..m-1 moving slots only within their block."""
    per_block = [list(permutations(b)) for b in blocks]

    def rec(k, sigma):
        if k == len(blocks):
            yield tuple(sigma)
            return
        base = blocks[k]
        for img in per_block[k]:
            for i, j in zip(base, img):
                sigma[i] = j
            yield from rec(k + 1, sigma)

    yield from rec(0, list(range(m)))


def _sigma_admits_gamma(slots, code_gens, projs, sigma):
    inv = _perm_inverse(sigma)
    moved = [_permute_word(w, inv) for w in code_gens]
    return _gamma_dfs(slots, moved, projs, False)


def _aut2_direct(slots, words, blocks):
    m = len(slots)
    code_gens = generating_set(slots, words)
    projs = _prefix_sets(words, m)
    passing = [sigma for sigma in _block_perm_iter(blocks, m)
               if _sigma_admits_gamma(slots, code_gens, projs, sigma)]
    group = permgrp.PermGroup(passing, m)
    if group.order() != len(passing):
        raise GlueAutError("permutation stabilizer failed to close")
    return len(passing), group


def _support_system(slots, words):
    """Slot-support bitmasks of the nonzero words of minimal support."""
    zero = zero_word(slots)
    best = None
    masks = set()
    for w in words:
        if w == zero:
            continue
        mask = 0
        for i, c in enumerate(w):
            if any(x for x in c):
                mask |= 1 << i
        wt = bin(mask).count("1")
        if best is None or wt < best:
            best = wt
            masks = {mask}
        elif wt == best:
            masks.add(mask)
    return frozenset(masks)


def _apply_perm_masks(sigma, masks, m):
    out = set()
    for mask in masks:
        nm = 0
        for i in range(m):
            if mask >> i & 1:
                nm |= 1 << sigma[i]
        out.add(nm)
    return frozenset(out)


def _aut2_support(slots, words, blocks, orbit_limit, verify_limit):
    """Orbit-stabilizer on the support system, then honest verification.

    Any slot permutation mapping the code to itself up to gammas must
    preserve the set of minimal supports (gammas fix supports), so the
    support stabilizer H contains aut2.  Every Schreier generator of H
    is checked against the code; if all pass, aut2 equals H.
    """
    m = len(slots)
    gens = []
    for b in blocks:
        for i in range(len(b) - 1):
            sigma = list(range(m))
            sigma[b[i]], sigma[b[i + 1]] = sigma[b[i + 1]], sigma[b[i]]
            gens.append(tuple(sigma))
    total = 1
    for b in blocks:
        total *= factorial(len(b))
    base = _support_system(slots, words)
    ident = tuple(range(m))
    reps = {base: ident}
    queue = [base]
    schreier = set()
    while queue:
        state = queue.pop()
        r = reps[state]
        for t in gens:
            nxt = _apply_perm_masks(t, state, m)
            tr = tuple(t[r[i]] for i in range(m))
            if nxt not in reps:
                if len(reps) >= orbit_limit:
                    raise GlueAutError("support orbit exceeds the limit")
                reps[nxt] = tr
                queue.append(nxt)
            else:
                r2i = _perm_inverse(reps[nxt])
                s = tuple(r2i[tr[i]] for i in range(m))
                if s != ident:
                    schreier.add(s)
    orbit = len(reps)
    if total % orbit:
        raise GlueAutError("orbit size does not divide the group order")
    h_order = total // orbit
    if len(schreier) > verify_limit:
        raise GlueAutError("too many stabilizer generators to verify")
    code_gens = generating_set(slots, words)
    projs = _prefix_sets(words, m)
    for sigma in schreier:
        if not _sigma_admits_gamma(slots, code_gens, projs, sigma):
            raise GlueAutError(
                "support stabilizer is strictly larger than aut2")
    group = permgrp.PermGroup(sorted(schreier), m)
    if group.order() != h_order:
        raise GlueAutError("stabilizer generators do not close")
    return h_order, group


def glue_code_auts(slots, generators, perm_limit=50000, orbit_limit=300000,
                   verify_limit=120000):
    """Orders of the two automorphism layers of a glue code.

    generators is an iterable of words (per-slot coordinate tuples).
    Returns (aut1 order, aut2 order, aut2 as a permutation group on the
    slots).  Raises GlueAutError when an exact answer cannot be
    certified within the stated limits.
    """
    slots = tuple(slots)
    m = len(slots)
    words = close_words(slots, [tuple(tuple(c) for c in g)
                                for g in generators])
    a1 = aut1_count(slots, words)
    blocks = slot_blocks(slots)
    total = 1
    for b in blocks:
        total *= factorial(len(b))
    if total <= perm_limit:
        a2, group = _aut2_direct(slots, words, blocks)
    elif len(words) == 1:
        gens = []
        for b in blocks:
            for i in range(len(b) - 1):
                sigma = list(range(m))
                sigma[b[i]], sigma[b[i + 1]] = sigma[b[i + 1]], sigma[b[i]]
                gens.append(tuple(sigma))
        a2, group = total, permgrp.PermGroup(gens, m)
        if group.order() != total:
            raise GlueAutError("block transpositions do not close")
    else:
        a2, group = _aut2_support(slots, words, blocks, orbit_limit,
                                  verify_limit)
    return a1, a2, group


def entry_code_words(entry):
    """Image of a catalog entry's stored glue group inside the product
    of its simple current groups.

    Returns (slots, words, glue group order).  Classes of the stored
    glue group that do not lie in the product are dropped; the third
    value lets callers see how much was outside.
    """
    slots, width = cat.sc_slots(entry)
    slot_lats = [cat.summand_model(s) for s in entry.sums]
    rows = cat.assemble_glue_rows(entry, slot_lats)
    gens = [tuple(Fraction(x) % 1 for x in r) for r in rows]
    zero = tuple([Fraction(0)] * width)
    classes = {zero}
    stack = [zero]
    while stack:
        cur = stack.pop()
        for g in gens:
            nxt = tuple((a + b) % 1 for a, b in zip(cur, g))
            if nxt not in classes:
                classes.add(nxt)
                stack.append(nxt)
    words = set()
    for c in classes:
        coords = []
        for s in slots:
            lo, hi = s.summand_range
            cc = cat.slot_class_coords(s, c[lo:hi])
            if cc is None:
                break
            coords.append(cc)
        else:
            words.add(tuple(coords))
    return slots, frozenset(words), len(classes)
