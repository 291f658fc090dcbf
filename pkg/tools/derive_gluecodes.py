"""Derive glue codes for catalog entries from their stored glue groups.

For every entry whose summand decomposition lines up with its Lie
structure, the stored glue group is intersected with the product of
simple current groups, giving the glue code.  The two automorphism
orders of each code are computed and compared against the stored
expected table; matching entries are emitted in the external glue-code
file format.

Usage: python3 tools/derive_gluecodes.py [--emit FILE]
"""

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from voalat import catalog as cat
from voalat import gluecode as gc

# (aut1 order, aut2 order) per row of the stored symmetry table
EXPECTED = {
    15: (1, 244823040), 24: (2, 95040), 30: (2, 1344), 37: (2, 120),
    42: (3, 720), 43: (2, 24), 46: (2, 12), 49: (2, 4), 51: (2, 6),
    54: (1, 24), 55: (2, 2), 58: (2, 24), 59: (2, 1), 60: (2, 2),
    61: (1, 6), 63: (2, 1), 64: (1, 2), 65: (1, 1), 66: (1, 2),
    67: (2, 1), 68: (1, 6), 69: (1, 1), 70: (1, 1),
    5: (1, 322560), 16: (2, 96), 25: (1, 48), 26: (2, 4), 31: (2, 4),
    33: (2, 2), 38: (1, 24), 39: (1, 2), 40: (2, 1), 44: (2, 1),
    47: (1, 2), 48: (1, 2), 50: (2, 1), 52: (1, 2), 53: (1, 1),
    56: (1, 1), 62: (1, 1),
    6: (2, 720), 17: (2, 6), 27: (2, 2), 32: (2, 6), 34: (2, 1),
    45: (2, 1),
    2: (1, 479001600), 12: (1, 720), 23: (1, 24), 29: (1, 6),
    41: (1, 2), 57: (1, 1), 13: (12, 24), 22: (2, 2), 36: (2, 1),
    7: (8, 6), 18: (2, 2), 19: (2, 2), 28: (2, 1), 35: (2, 1),
    9: (4, 2), 20: (1, 2),
    8: (2, 1), 21: (1, 1),
    11: (2, 1), 10: (2, 1),
    3: (12, 1), 14: (2, 1),
    4: (1, 1),
}

# aut2 known intractable by orbit size; aut1 is still checked
SKIP_AUT2 = {5}


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--emit", help="write matching rows to this file")
    args = ap.parse_args()

    rows = []
    bad = 0
    for no, entry in sorted(cat.load_entries().items()):
        try:
            slots, width = cat.sc_slots(entry)
        except ArithmeticError as ex:
            print("%2d  unmapped (%s)" % (no, ex))
            continue
        t0 = time.time()
        slots, words, nclasses = gc.entry_code_words(entry)
        gens = gc.generating_set(slots, words)
        a1 = gc.aut1_count(slots, words)
        note = ""
        if len(words) != nclasses:
            note = "  [%d of %d classes outside the product]" % (
                nclasses - len(words), nclasses)
        if no in SKIP_AUT2:
            a2 = None
        else:
            try:
                _, a2, _ = gc.glue_code_auts(slots, gens)
            except gc.GlueAutError as ex:
                a2 = None
                note += "  [aut2: %s]" % ex
        exp = EXPECTED[no]
        got = (a1, a2)
        okind = (a1 == exp[0]) and (a2 == exp[1] or a2 is None)
        flag = "ok " if okind else "BAD"
        if not okind:
            bad += 1
        print("%2d  %s  |code|=%-5d aut=(%s,%s) expect=%s  %.1fs%s"
              % (no, flag, len(words), a1, a2, exp, time.time() - t0, note))
        if okind and a2 is not None:
            if gens:
                body = ";".join(
                    ",".join(cat.format_sc_token(s, c)
                             for s, c in zip(slots, g))
                    for g in gens)
            else:
                body = "-"
            rows.append("%d|%s" % (no, body))
    if args.emit:
        Path(args.emit).write_text("\n".join(rows) + "\n")
        print("wrote %d rows to %s" % (len(rows), args.emit))
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
