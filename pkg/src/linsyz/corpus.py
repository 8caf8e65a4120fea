"""Built-in workbench of quadric-generated ideals.

Rational normal curves, Segre varieties of two projective lines,
Pluecker quadrics, the generic syzygy ideals themselves, and one
deliberately reducible example.  User-supplied ideal files can be added
alongside; files that fail to parse are skipped with a diagnostic.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .linalg import GF
from .rings import GradedIdeal, Ring, parse_ideal_file
from .gensyz import generic_syzygy_ideal, pluecker_ideal, segre_ideal


@dataclass
class CorpusEntry:
    name: str
    ideal: GradedIdeal
    note: str = ""


def rnc_ideal(d: int, field) -> GradedIdeal:
    """2x2 minors of the 2 x d Hankel matrix in x_0..x_d."""
    if d < 2:
        raise ValueError("need d >= 2")
    ring = Ring(tuple("x%d" % i for i in range(d + 1)), field)
    gens = []
    for i in range(d):
        for j in range(i + 1, d):
            xi, xj1 = ring.variable(i), ring.variable(j + 1)
            xi1, xj = ring.variable(i + 1), ring.variable(j)
            gens.append(xi * xj1 - xi1 * xj)
    return GradedIdeal(ring, gens)


def reducible_ideal(field) -> GradedIdeal:
    """(x0*y, x1*y): a plane plus a line, with a rank-2 first syzygy."""
    ring = Ring(("x0", "x1", "y"), field)
    x0, x1, y = (ring.variable(i) for i in range(3))
    return GradedIdeal(ring, [x0 * y, x1 * y])


def corpus(field=None) -> list:
    """The built-in examples, in a fixed deterministic order."""
    field = field or GF()
    entries = [
        CorpusEntry("rnc3", rnc_ideal(3, field), "twisted cubic"),
        CorpusEntry("rnc4", rnc_ideal(4, field), "rational normal quartic"),
        CorpusEntry("rnc5", rnc_ideal(5, field), "rational normal quintic"),
        CorpusEntry("reducible", reducible_ideal(field), "plane plus line"),
        CorpusEntry("pluecker5", pluecker_ideal(5, field),
                    "Grassmannian of 2-quotients of a 5-space"),
    ]
    for g in range(2, 6):
        entries.append(CorpusEntry("segre%d" % g, segre_ideal(g, field),
                                   "Segre of P^1 x P^%d" % (g - 1)))
    for g in range(2, 6):
        for k in range(0, min(3, g)):
            model = generic_syzygy_ideal(g, k, field)
            entries.append(CorpusEntry("gensyz_%d_%d" % (g, k), model.ideal,
                                       "generic syzygy ideal, g=%d k=%d" % (g, k)))
    return entries


def corpus_names(field=None):
    return [e.name for e in corpus(field)]


def find_ideal(name: str, field=None) -> GradedIdeal:
    """Look up a corpus entry by name, or load an ideal file by path."""
    field = field or GF()
    for e in corpus(field):
        if e.name == name:
            return e.ideal
    if os.path.exists(name):
        with open(name) as fh:
            return parse_ideal_file(fh.read(), field)
    raise KeyError("unknown ideal %r (not a corpus name or readable file)" % name)


def load_user_dir(path: str, field=None):
    """Parse every *.ideal file under path; skip bad files with a note."""
    field = field or GF()
    entries, skipped = [], []
    if not os.path.isdir(path):
        return entries, skipped
    for fn in sorted(os.listdir(path)):
        if not fn.endswith(".ideal"):
            continue
        full = os.path.join(path, fn)
        try:
            with open(full) as fh:
                ideal = parse_ideal_file(fh.read(), field)
            entries.append(CorpusEntry(fn[:-len(".ideal")], ideal, "user file"))
        except ValueError as exc:
            skipped.append((fn, str(exc)))
    return entries, skipped
