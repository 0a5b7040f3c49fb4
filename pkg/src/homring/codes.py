"""Trace codes built from a function f on R and a trace T onto a subring S.

A code here is the set of value tables ``x -> T(alpha*x + beta*f(x))`` over
all pairs (alpha, beta), deduplicated.  Everything downstream — transform
values, spectra, weight enumerators — is computed exactly with Fractions and
cyclotomic integers, and the transform is always evaluated through two
independent routes that must agree.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import gcd

from .cyclotomic import Cyclotomic, rational_str
from .errors import (
    BudgetExceeded,
    InternalInvariantViolation,
    InvalidParameter,
    NotLocal,
    OutOfRange,
    ParseError,
    UnknownPreset,
    ValidationFailed,
    WrongRingFamily,
)
from .rings import (
    GaloisRing,
    Ring,
    _is_prime,
    named_automorphism,
    permutation_of_teichmuller,
)
from .traces import (
    DEFAULT_CODE_BUDGET,
    TraceMap,
    canonical_character,
    char_fixed_by,
    effective_budget,
    generating_character,
    read_two_column_table,
)
from .weights import WeightTable, hom_weight


class CodeFunction:
    """A total map f : R -> R stored as a value table on canonical indices."""

    def __init__(self, ring: Ring, kind: str, table, tag: str, *, sigma=None,
                 perm=None, d=None, seed=None):
        table = tuple(int(v) for v in table)
        if len(table) != ring.order:
            raise InvalidParameter(
                f"function table has {len(table)} entries for a ring of order {ring.order}")
        for v in table:
            if not 0 <= v < ring.order:
                raise InvalidParameter(f"function value {v} out of range for {ring.name}")
        self.ring = ring
        self.kind = kind
        self.table = table
        self.tag = tag
        self.sigma = sigma
        self.perm = perm
        self.d = d
        self.seed = seed

    def __call__(self, x: int) -> int:
        return self.table[x]

    def __repr__(self):  # pragma: no cover - debugging aid
        return f"CodeFunction({self.tag!r} on {self.ring.name})"


def power_map(ring: Ring, d: int) -> CodeFunction:
    """f(x) = x**d for d >= 1."""
    if d < 1:
        raise OutOfRange(f"power exponent must be >= 1, got {d}")
    table = [ring.pow(x, d) for x in range(ring.order)]
    return CodeFunction(ring, "power", table, f"pow:{d}", d=d)


def random_teich_permutation(ring: Ring, seed: int) -> tuple:
    """A seeded random permutation of Teichmueller indices fixing index 0."""
    t = ring.teichmuller()
    idx = list(range(1, len(t.elements)))
    random.Random(seed).shuffle(idx)
    return (0, *idx)


def frank_map(ring: Ring, perm=None, tag: str | None = None) -> CodeFunction:
    """f(x) = p * pi(x0) * x1 on GR(p^2, r), with pi permuting Teichmueller
    representatives (fixing 0) and x = x0 + p*x1 the digit expansion."""
    if not isinstance(ring, GaloisRing) or ring.n != 2:
        raise WrongRingFamily(
            f"frank functions need a Galois ring GR(p^2, r); got {ring.name}")
    t = ring.teichmuller()
    if perm is None:
        perm = tuple(range(len(t.elements)))
        if tag is None:
            tag = "frank:id"
    perm = permutation_of_teichmuller(ring, perm)
    if tag is None:
        tag = "frank:" + ",".join(str(i) for i in perm)
    p_elt = ring.element_from_int(ring.p)
    table = []
    for x in range(ring.order):
        x0, x1 = ring.padic_digits(x)
        x0p = t.elements[perm[t.index_of[x0]]]
        table.append(ring.mul(p_elt, ring.mul(x0p, x1)))
    return CodeFunction(ring, "frank", table, tag, perm=perm)


def sigma_quadratic_map(ring: Ring, sigma, tag: str | None = None) -> CodeFunction:
    """f(a) = sigma(a)*a - sigma(a_m)*a_m on a local ring, where a_m = a - nu(a)
    subtracts the Teichmueller part of a."""
    if not ring.is_local():
        raise NotLocal(f"sigma-quadratic functions need a local ring; {ring.name} is not")
    if sigma.ring is not ring:
        raise InvalidParameter("automorphism acts on a different ring")
    nu = ring.teichmuller().nu
    table = []
    for a in range(ring.order):
        am = ring.sub(a, nu[a])
        table.append(ring.sub(ring.mul(sigma(a), a), ring.mul(sigma(am), am)))
    return CodeFunction(ring, "sigma-quadratic", table,
                        tag or f"sigmaquad:{sigma.tag}", sigma=sigma)


def table_map(ring: Ring, values, tag: str = "table") -> CodeFunction:
    return CodeFunction(ring, "table", values, tag)


def function_from_spec(ring: Ring, spec: str, seed: int | None = None) -> CodeFunction:
    """Parse a function spec string.

    Grammar: ``pow:<d>`` | ``frank:id`` | ``frank:rand[:<seed>]`` |
    ``frank:<i0,i1,...>`` | ``sigmaquad:frobenius`` | ``sigmaquad:swapxy`` |
    ``table:<path>``.
    """
    spec = spec.strip()
    if spec.startswith("pow:"):
        body = spec[4:]
        try:
            d = int(body)
        except ValueError:
            raise ParseError(f"bad power exponent {body!r}") from None
        return power_map(ring, d)
    if spec == "frank:id":
        return frank_map(ring)
    if spec == "frank:rand" or spec.startswith("frank:rand:"):
        if spec == "frank:rand":
            eff = 0 if seed is None else int(seed)
        else:
            body = spec[len("frank:rand:"):]
            try:
                eff = int(body)
            except ValueError:
                raise ParseError(f"bad frank seed {body!r}") from None
        perm = random_teich_permutation(ring, eff)
        fn = frank_map(ring, perm, tag=f"frank:rand:{eff}")
        fn.seed = eff
        return fn
    if spec.startswith("frank:"):
        body = spec[6:]
        try:
            perm = tuple(int(tok) for tok in body.split(","))
        except ValueError:
            raise ParseError(f"bad frank permutation {body!r}") from None
        return frank_map(ring, perm, tag=spec)
    if spec == "sigmaquad:frobenius":
        return sigma_quadratic_map(ring, named_automorphism(ring, "frobenius"),
                                   tag=spec)
    if spec == "sigmaquad:swapxy":
        return sigma_quadratic_map(ring, named_automorphism(ring, "swap-xy"),
                                   tag=spec)
    if spec.startswith("sigmaquad:"):
        raise UnknownPreset(f"unknown automorphism preset {spec[10:]!r}")
    if spec.startswith("table:"):
        values = read_two_column_table(spec[6:], ring.order)
        return table_map(ring, values, tag=spec)
    raise UnknownPreset(f"unknown function spec {spec!r}")


class Code:
    """A deduplicated trace code with provenance for each codeword."""

    def __init__(self, ring: Ring, sub: Ring, trace: TraceMap, func: CodeFunction,
                 codewords, provenance):
        self.ring = ring
        self.sub = sub
        self.trace = trace
        self.func = func
        self.codewords = tuple(codewords)
        self.provenance = dict(provenance)
        self.size = len(self.codewords)

    def __len__(self):
        return self.size

    def __iter__(self):
        return iter(self.codewords)

    def __contains__(self, cw):
        return tuple(cw) in self.provenance

    def __repr__(self):  # pragma: no cover - debugging aid
        return (f"Code(|C|={self.size}, f={self.func.tag!r}, "
                f"R={self.ring.name}, S={self.sub.name})")


def _codeword(ring: Ring, trace_values, f_table, alpha: int, beta: int,
              mul_table, add_table) -> tuple:
    brow = mul_table[beta]
    bf = [brow[v] for v in f_table]
    arow = mul_table[alpha]
    return tuple(trace_values[add_table[arow[x]][bf[x]]]
                 for x in range(ring.order))


def build_code(ring: Ring, sub: Ring, trace: TraceMap, f: CodeFunction,
               budget: int | None = None) -> Code:
    """Enumerate {x -> T(alpha*x + beta*f(x))} over all (alpha, beta) pairs,
    deduplicate, and record the lexicographically least pair per codeword."""
    if f.ring is not ring:
        raise InvalidParameter("function is defined on a different ring")
    if trace.ring is not ring or trace.sub is not sub:
        raise InvalidParameter("trace does not map this ring onto this subring")
    cap = effective_budget(DEFAULT_CODE_BUDGET) if budget is None else budget
    if ring.order > cap:
        raise BudgetExceeded(
            f"|R| = {ring.order} exceeds the code enumeration budget {cap}")
    if f.kind == "sigma-quadratic":
        chi = generating_character(trace)
        if not char_fixed_by(chi, f.sigma):
            raise ValidationFailed(
                "CharacterNotSigmaInvariant",
                message=("the generating character of this trace is not fixed "
                         f"by {f.sigma.tag}"))
    mot = ring.mul_table()
    aot = ring.add_table()
    tr = trace.values
    ft = f.table
    n = ring.order
    best: dict = {}
    for beta in range(n):
        brow = mot[beta]
        bf = [brow[v] for v in ft]
        for alpha in range(n):
            arow = mot[alpha]
            cw = tuple(tr[aot[arow[x]][bf[x]]] for x in range(n))
            prev = best.get(cw)
            if prev is None or (alpha, beta) < prev:
                best[cw] = (alpha, beta)
    return Code(ring, sub, trace, f, sorted(best), best)


def _transform_of_codeword(ring: Ring, sub: Ring, cw) -> Fraction:
    """W value of one codeword, via the unit-averaged character sum, checked
    against the route through homogeneous weights at gamma = 1."""
    char = canonical_character(sub)
    m = char.conductor
    histos = char.unit_exponent_histograms()
    counts = [0] * sub.order
    for s in cw:
        counts[s] += 1
    total = [0] * m
    for s, cnt in enumerate(counts):
        if cnt:
            hs = histos[s]
            for t in range(m):
                if hs[t]:
                    total[t] += cnt * hs[t]
    nunits = len(sub.units())
    value = Cyclotomic.from_exponent_counts(m, total).to_rational() / nunits
    den, scaled = hom_weight(sub, 1).scaled()
    alt = ring.order - Fraction(sum(scaled[s] for s in cw), den)
    if value != alt:
        raise InternalInvariantViolation(
            f"transform mismatch: character route {value}, weight route {alt}")
    return value


def transform_W(ring: Ring, sub: Ring, trace: TraceMap, f: CodeFunction,
                alpha: int, beta: int) -> Fraction:
    """W(alpha, beta) for a single pair, without enumerating the whole code."""
    if trace.ring is not ring or trace.sub is not sub:
        raise InvalidParameter("trace does not map this ring onto this subring")
    if not (0 <= alpha < ring.order and 0 <= beta < ring.order):
        raise InvalidParameter(
            f"(alpha, beta) = ({alpha}, {beta}) outside {ring.name}")
    cw = _codeword(ring, trace.values, f.table, alpha, beta,
                   ring.mul_table(), ring.add_table())
    return _transform_of_codeword(ring, sub, cw)


class SpectrumSet:
    """The set of transform values of a code, sorted descending."""

    def __init__(self, values):
        self.values = tuple(sorted({Fraction(v) for v in values}, reverse=True))

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)

    def __contains__(self, v):
        return Fraction(v) in set(self.values)

    def __eq__(self, other):
        if isinstance(other, SpectrumSet):
            return self.values == other.values
        try:
            return set(self.values) == {Fraction(v) for v in other}
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash(self.values)

    def __repr__(self):
        return "{" + ", ".join(rational_str(v) for v in self.values) + "}"


def code_spectrum(code: Code) -> SpectrumSet:
    return SpectrumSet(_transform_of_codeword(code.ring, code.sub, cw)
                       for cw in code.codewords)


def spectrum(ring: Ring, sub: Ring, trace: TraceMap, f: CodeFunction,
             budget: int | None = None) -> SpectrumSet:
    return code_spectrum(build_code(ring, sub, trace, f, budget=budget))


class WeightEnumerator:
    """Weight -> count map over the codewords of a code, with exact weights."""

    def __init__(self, counts, gamma=Fraction(1), kind: str = "homogeneous"):
        items = {}
        for w, c in (counts.items() if hasattr(counts, "items") else counts):
            w = Fraction(w)
            items[w] = items.get(w, 0) + int(c)
        self.items = tuple(sorted((w, c) for w, c in items.items() if c))
        self.counts = dict(self.items)
        self.total = sum(c for _, c in self.items)
        self.gamma = Fraction(gamma)
        self.kind = kind

    def __getitem__(self, w) -> int:
        return self.counts.get(Fraction(w), 0)

    def __iter__(self):
        return iter(self.items)

    def __eq__(self, other):
        if isinstance(other, WeightEnumerator):
            return self.items == other.items
        return NotImplemented

    def __hash__(self):
        return hash(self.items)

    def poly_str(self) -> str:
        """Render as 1 + c1 X^w1 + ... with ascending weights; fractional
        exponents are braced, e.g. X^{128/3}."""
        terms = []
        for w, c in self.items:
            if w == 0:
                terms.append(str(c))
                continue
            if w.denominator == 1:
                e = str(w.numerator)
            else:
                e = "{" + f"{w.numerator}/{w.denominator}" + "}"
            terms.append(f"X^{e}" if c == 1 else f"{c}X^{e}")
        return "+".join(terms) if terms else "0"

    def to_records(self) -> list:
        return [{"weight": rational_str(w), "count": c} for w, c in self.items]

    def __repr__(self):  # pragma: no cover - debugging aid
        return f"WeightEnumerator({self.poly_str()})"


def weight_enumerator(code: Code, table: WeightTable) -> WeightEnumerator:
    if table.ring is not code.sub:
        raise InvalidParameter("weight table is for a different ring than S")
    den, scaled = table.scaled()
    counts: dict = {}
    for cw in code.codewords:
        w = Fraction(sum(scaled[s] for s in cw), den)
        counts[w] = counts.get(w, 0) + 1
    return WeightEnumerator(counts, gamma=table.gamma, kind=table.kind)


def distinct_weights(code: Code, table: WeightTable) -> tuple:
    """Distinct codeword weights, ascending."""
    return tuple(w for w, _ in weight_enumerator(code, table).items)


# ---------------------------------------------------------------------------
# Closed-form predictions for the named families.


def _require(cond: bool, msg: str):
    if not cond:
        raise OutOfRange(msg)


def frank_subring_enumerator(q: int, k: int) -> WeightEnumerator:
    """Frank code on GR(q^2, k) traced onto the prime field GF(q), q prime,
    k >= 2, at gamma = 1."""
    _require(_is_prime(q), f"q = {q} must be prime")
    _require(k >= 2, f"k = {k} must be >= 2")
    qk = q ** k
    counts = {
        Fraction(0): 1,
        Fraction(q ** (2 * k) - qk): (qk - 1) * (q ** (2 * k - 2) - q ** (k - 1) + qk),
        Fraction(q ** (2 * k)): (qk - 1) * (q ** (2 * k) - q ** (2 * k - 1) + qk + 1),
        Fraction(q ** (2 * k)) + Fraction(qk, q - 1):
            (qk - 1) * (q ** (2 * k - 1) - qk - q ** (2 * k - 2) + q ** (k - 1)),
    }
    enum = WeightEnumerator(counts)
    if enum.total != q ** (3 * k):
        raise InternalInvariantViolation("frank-subring counts do not sum to q^(3k)")
    return enum


def frank_subring_spectrum(q: int, k: int) -> SpectrumSet:
    _require(_is_prime(q), f"q = {q} must be prime")
    _require(k >= 2, f"k = {k} must be >= 2")
    qk = q ** k
    return SpectrumSet([q ** (2 * k), qk, -Fraction(qk, q - 1), 0])


def frank_self_enumerator(p: int, r: int) -> WeightEnumerator:
    """Frank code on R = GR(p^2, r) traced onto itself, r >= 2, gamma = 1."""
    _require(_is_prime(p), f"p = {p} must be prime")
    _require(r >= 2, f"r = {r} must be >= 2")
    counts = {
        Fraction(0): 1,
        Fraction(p ** (2 * r) - p ** r): p ** (2 * r) - p ** r,
        Fraction(p ** (2 * r)): p ** (3 * r) - p ** (2 * r) + p ** r - 1,
    }
    return WeightEnumerator(counts)


def frank_self_spectrum(p: int, r: int) -> SpectrumSet:
    _require(_is_prime(p), f"p = {p} must be prime")
    _require(r >= 2, f"r = {r} must be >= 2")
    return SpectrumSet([p ** (2 * r), p ** r, 0])


def zp_power_enumerator(p: int, d: int) -> WeightEnumerator:
    """Hamming enumerator of the power-map code on Z_p, 2 <= d <= p - 1."""
    _require(_is_prime(p), f"p = {p} must be prime")
    _require(2 <= d <= p - 1, f"d = {d} outside 2..{p - 1}")
    ell = gcd(d - 1, p - 1)
    c1 = (p - 1) ** 2 // ell
    counts = {
        Fraction(0): 1,
        Fraction(p - ell - 1): c1,
        Fraction(p - 1): p * p - 1 - c1,
    }
    return WeightEnumerator(counts, kind="hamming")


def z2p_power_enumerator(p: int, d: int) -> WeightEnumerator:
    """Homogeneous enumerator (gamma = 1) of the power-map code on Z_2p."""
    _require(_is_prime(p) and p % 2 == 1, f"p = {p} must be an odd prime")
    _require(2 <= d <= p - 1, f"d = {d} outside 2..{p - 1}")
    ell = gcd(d - 1, p - 1)
    c1 = (p - 1) ** 2 // ell
    counts = {
        Fraction(0): 1,
        Fraction(2 * p * (p - 1 - ell), p - 1): c1,
        Fraction(2 * p): 2 * p * p - c1 - 1,
    }
    return WeightEnumerator(counts)


def z2p_power_spectrum(p: int, d: int) -> SpectrumSet:
    _require(_is_prime(p) and p % 2 == 1, f"p = {p} must be an odd prime")
    _require(2 <= d <= p - 1, f"d = {d} outside 2..{p - 1}")
    ell = gcd(d - 1, p - 1)
    return SpectrumSet([2 * p, Fraction(2 * p * ell, p - 1), 0])


def sigma_quadratic_enumerator(ring: Ring) -> WeightEnumerator:
    """Enumerator (gamma = 1, R = S) of a sigma-quadratic code on a local ring
    whose sigma fixes the generating character."""
    if not ring.is_local():
        raise NotLocal(f"{ring.name} is not local")
    n = ring.order
    m = len(ring.nonunits())
    k = ring.residue_size()
    u = n - m
    if k > 2:
        counts = {
            Fraction(0): 1,
            Fraction(n - m): k * n - k * k + k - 1,
            n - Fraction(n * m, u): (k - 1) ** 2,
            Fraction(n): n * n - k * n + k - 1,
        }
    else:
        counts = {
            Fraction(0): 1,
            Fraction(n, 2): n - 2,
            Fraction(n): n * n // 2 - n + 1,
        }
    return WeightEnumerator(counts)


def sigma_quadratic_spectrum(ring: Ring) -> SpectrumSet:
    if not ring.is_local():
        raise NotLocal(f"{ring.name} is not local")
    n = ring.order
    m = len(ring.nonunits())
    u = n - m
    return SpectrumSet([n, m, Fraction(n * m, u), 0])


_ENUM_FAMILIES = {
    "frank-subring": frank_subring_enumerator,
    "frank-self": frank_self_enumerator,
    "zp-power": zp_power_enumerator,
    "z2p-power": z2p_power_enumerator,
}

_SPECTRUM_FAMILIES = {
    "frank-subring": frank_subring_spectrum,
    "frank-self": frank_self_spectrum,
    "z2p-power": z2p_power_spectrum,
}


def closed_form_enumerator(family: str, params) -> WeightEnumerator:
    if family == "sigma-quadratic":
        ring = params if isinstance(params, Ring) else params[0]
        return sigma_quadratic_enumerator(ring)
    fn = _ENUM_FAMILIES.get(family)
    if fn is None:
        raise UnknownPreset(f"unknown closed-form family {family!r}")
    return fn(*params)


def closed_form_spectrum(family: str, params) -> SpectrumSet:
    if family == "sigma-quadratic":
        ring = params if isinstance(params, Ring) else params[0]
        return sigma_quadratic_spectrum(ring)
    if family == "zp-power":
        raise InvalidParameter("zp-power has no closed-form spectrum here")
    fn = _SPECTRUM_FAMILIES.get(family)
    if fn is None:
        raise UnknownPreset(f"unknown closed-form family {family!r}")
    return fn(*params)
