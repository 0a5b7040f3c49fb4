"""Homogeneous weights, computed two independent ways.

The character route evaluates w(x) = gamma * (1 - S_x / |R^x|) with S_x the
exact cyclotomic sum of chi over the unit multiples of x.  The axiomatic
route solves the triangular system over the poset of cyclic submodules:
summing w over a cyclic submodule N must give gamma*|N|, so the weight of
the generator class of N is determined once all smaller cyclic submodules
are solved.  The two tables must agree entry-wise; the test suite asserts
this on every supported ring rather than trusting either construction.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from .errors import InvalidParameter, NotLocal, ParseError, SingularSystem
from .rings import Ring
from .traces import Character, canonical_character


class WeightTable:
    """Per-element weight values over a ring, with the gamma they satisfy."""

    def __init__(self, ring: Ring, gamma, values, kind: str = "homogeneous"):
        self.ring = ring
        self.gamma = Fraction(gamma)
        self.values = tuple(Fraction(v) for v in values)
        if len(self.values) != ring.order:
            raise InvalidParameter("weight table must cover the ring")
        self.kind = kind
        self._scaled = None

    def __call__(self, a: int) -> Fraction:
        return self.values[a]

    def __iter__(self):
        return iter(self.values)

    def scaled(self):
        """(D, table of D*w as ints): one common denominator for fast
        exact codeword sums."""
        if self._scaled is None:
            d = 1
            for v in self.values:
                d = lcm(d, v.denominator)
            self._scaled = (d, tuple(int(v * d) for v in self.values))
        return self._scaled

    def __eq__(self, other):
        return (
            isinstance(other, WeightTable)
            and self.ring is other.ring
            and self.values == other.values
        )

    def __hash__(self):
        return hash((id(self.ring), self.values))

    def __repr__(self):
        return (f"WeightTable({self.ring.name}, gamma={self.gamma}, "
                f"kind={self.kind})")


def hom_weight_from_character(char: Character, gamma) -> WeightTable:
    """w(x) = gamma * (1 - S_x/|R^x|), S_x the unit-averaged character sum."""
    gamma = Fraction(gamma)
    ring = char.ring
    nunits = len(ring.units())
    values = [gamma * (1 - char.unit_sum(a) / nunits) for a in range(ring.order)]
    return WeightTable(ring, gamma, values)


def hom_weight(ring: Ring, gamma=1) -> WeightTable:
    """The homogeneous weight via the canonical generating character;
    cached per (ring, gamma)."""
    gamma = Fraction(gamma)
    key = ("hom_weight", gamma)
    if key not in ring._cache:
        ring._cache[key] = hom_weight_from_character(
            canonical_character(ring), gamma
        )
    return ring._cache[key]


def _cyclic_submodules(ring: Ring):
    """Map frozenset(Rx) -> list of generators, plus per-element class."""
    mot = ring.mul_table()
    classes = {}
    cls_of = [None] * ring.order
    for x in range(ring.order):
        n = frozenset(mot[r][x] for r in range(ring.order))
        classes.setdefault(n, []).append(x)
        cls_of[x] = n
    return classes, cls_of


def hom_weight_axiomatic(ring: Ring, gamma=1) -> WeightTable:
    """Solve the orbit-sum equations bottom-up over cyclic submodules."""
    gamma = Fraction(gamma)
    classes, cls_of = _cyclic_submodules(ring)
    order = sorted(classes, key=lambda n: (len(n), sorted(n)))
    w = {}
    for n in order:
        if len(n) == 1:
            w[n] = Fraction(0)
            continue
        gens = classes[n]
        if not gens:
            raise SingularSystem(f"cyclic submodule {sorted(n)} has no generator")
        rest = gamma * len(n)
        for sub in order:
            if sub != n and sub <= n:
                rest -= w[sub] * len(classes[sub])
        w[n] = rest / len(gens)
    return WeightTable(ring, gamma, [w[cls_of[x]] for x in range(ring.order)])


def validate_weight(wt: WeightTable) -> dict:
    """Check w(0)=0, constancy on generator classes, and orbit sums;
    report every violation."""
    ring = wt.ring
    classes, cls_of = _cyclic_submodules(ring)
    violations = []
    if wt.values[0] != 0:
        violations.append({"axiom": "zero", "x": 0, "value": str(wt.values[0])})
    for n, gens in sorted(classes.items(), key=lambda kv: sorted(kv[0])):
        base = wt.values[gens[0]]
        for y in gens[1:]:
            if wt.values[y] != base:
                violations.append({
                    "axiom": "orbit-constant", "x": gens[0], "y": y,
                    "wx": str(base), "wy": str(wt.values[y]),
                })
    for x in range(1, ring.order):
        n = cls_of[x]
        total = sum((wt.values[y] for y in n), Fraction(0))
        expected = wt.gamma * len(n)
        if total != expected:
            violations.append({
                "axiom": "orbit-sum", "x": x,
                "sum": str(total), "expected": str(expected),
            })
    return {"valid": not violations, "violations": violations}


def hamming_table(ring: Ring, gamma=1) -> WeightTable:
    """w(0)=0 and w(x)=1 otherwise; homogeneous only over fields."""
    values = [0] + [1] * (ring.order - 1)
    return WeightTable(ring, Fraction(gamma), values, kind="hamming")


def parse_gamma(spec: str, ring: Ring) -> Fraction:
    """gamma grammar: `<num>/<den>` | integer | `hamming-normalized`
    (= (q-1)/q for the residue field size q of a local ring)."""
    spec = spec.strip()
    if spec == "hamming-normalized":
        if not ring.is_local():
            raise NotLocal(
                f"hamming-normalized gamma needs a local ring, got {ring.name}"
            )
        q = ring.residue_size()
        return Fraction(q - 1, q)
    try:
        return Fraction(spec)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad gamma spec {spec!r}")
