"""Finite commutative rings with canonical integer element encodings.

Three families are provided:

* ``Zm:<m>`` -- integer residue rings Z_m, element i encodes the residue i;
* ``GR:<p>,<n>,<r>`` -- Galois rings GR(p^n, r) = Z_{p^n}[x]/(h) with h a
  monic basic irreducible of degree r.  Elements are coefficient vectors
  (c_0, ..., c_{r-1}) over Z_{p^n}, encoded in base p^n as
  i = sum c_j * (p^n)^j.  The modulus h is chosen deterministically: the
  lexicographically smallest monic polynomial over F_p whose root generates
  the multiplicative group of F_{p^r} is lifted so that the class xi of x
  satisfies xi^(p^r - 1) = 1.  The unit xi then generates the Teichmueller
  group and the Frobenius map acts digit-wise on p-adic coordinates.
* explicit operation tables (``TableRing``), with two presets:
  ``FXY:<p>`` = F_p[x,y]/(x^2, y^2) on the basis (1, x, y, xy), encoded in
  base p, and ``Z4X`` = Z_4[x]/(x^2 + 2) on the basis (1, t), encoded in
  base 4 (t denotes the class of x, with t^2 = 2).

Every ring exposes integer-encoded arithmetic plus cached structural data:
units, radical (the nilpotents), socle (annihilator of the radical), locality,
and for local rings the Teichmueller coordinate system.  Rings are immutable
after construction; construction by spec string is memoized.
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd

from .errors import (
    BadPermutation,
    InternalInvariantViolation,
    InvalidParameter,
    InvalidRing,
    NotLocal,
    ParseError,
    UnknownPreset,
)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# supporting value types
# ---------------------------------------------------------------------------


class Ideal:
    """An ideal given by its member set; closure is checked at construction."""

    def __init__(self, ring: "Ring", members):
        members = sorted(set(members))
        if 0 not in members:
            raise InvalidParameter("an ideal must contain 0")
        mset = set(members)
        for a in members:
            if ring.neg(a) not in mset:
                raise InvalidParameter(f"ideal not closed under negation at {a}")
            for b in members:
                if ring.add(a, b) not in mset:
                    raise InvalidParameter(f"ideal not closed under + at ({a},{b})")
            for r in range(ring.order):
                if ring.mul(r, a) not in mset:
                    raise InvalidParameter(f"ideal not absorbing at ({r},{a})")
        self.ring = ring
        self.members = tuple(members)

    def __contains__(self, a):
        return a in set(self.members)

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    def __eq__(self, other):
        if isinstance(other, Ideal):
            return self.ring is other.ring and self.members == other.members
        return set(self.members) == set(other)

    def __hash__(self):
        return hash(self.members)

    def __repr__(self):
        return f"Ideal({self.ring.name}, {list(self.members)})"


class Automorphism:
    """A ring automorphism stored as a permutation of canonical indices."""

    def __init__(self, ring: "Ring", perm, tag: str = "custom", _verified=False):
        perm = tuple(perm)
        if not _verified:
            _verify_automorphism(ring, perm)
        self.ring = ring
        self.perm = perm
        self.tag = tag

    def __call__(self, a: int) -> int:
        return self.perm[a]

    def order(self) -> int:
        k = 1
        cur = self
        ident = tuple(range(self.ring.order))
        while cur.perm != ident:
            cur = cur.compose(self)
            k += 1
            if k > self.ring.order:
                raise InternalInvariantViolation("automorphism order runaway")
        return k

    def compose(self, other: "Automorphism") -> "Automorphism":
        """self after other: a -> self(other(a))."""
        if self.ring is not other.ring:
            raise InvalidParameter("cannot compose automorphisms of different rings")
        perm = tuple(self.perm[other.perm[a]] for a in range(self.ring.order))
        return Automorphism(self.ring, perm, tag=f"{self.tag}*{other.tag}", _verified=True)

    def __eq__(self, other):
        return (
            isinstance(other, Automorphism)
            and self.ring is other.ring
            and self.perm == other.perm
        )

    def __hash__(self):
        return hash(self.perm)

    def __repr__(self):
        return f"Automorphism({self.ring.name}, tag={self.tag!r})"


def _verify_automorphism(ring: "Ring", perm: tuple) -> None:
    n = ring.order
    if len(perm) != n or sorted(perm) != list(range(n)):
        raise InternalInvariantViolation("automorphism table is not a bijection")
    if perm[0] != 0 or perm[ring.one] != ring.one:
        raise InternalInvariantViolation("automorphism must fix 0 and 1")
    for a in range(n):
        pa = perm[a]
        for b in range(n):
            if perm[ring.add(a, b)] != ring.add(pa, perm[b]):
                raise InternalInvariantViolation(
                    f"automorphism does not preserve + at ({a},{b})"
                )
            if perm[ring.mul(a, b)] != ring.mul(pa, perm[b]):
                raise InternalInvariantViolation(
                    f"automorphism does not preserve * at ({a},{b})"
                )


class TeichmullerData:
    """Teichmueller coordinate system of a local ring.

    ``elements`` lists the Teichmueller set ordered with 0 first, then the
    powers g^0, g^1, ... of a fixed generator g of its cyclic unit part.
    ``nu`` maps each ring element a to the unique Teichmueller t with
    a - t in the maximal ideal.
    """

    def __init__(self, ring, elements, generator, nu):
        self.ring = ring
        self.elements = tuple(elements)
        self.generator = generator
        self.nu = tuple(nu)
        self.q = len(self.elements)
        self.index_of = {t: i for i, t in enumerate(self.elements)}

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)


# ---------------------------------------------------------------------------
# ring base class
# ---------------------------------------------------------------------------


class Ring:
    """Common structure for all ring families (never instantiated directly)."""

    family = "abstract"

    def __init__(self, order: int, one: int, name: str):
        if order < 2:
            raise InvalidParameter("ring order must be >= 2")
        self.order = order
        self.one = one
        self.zero = 0
        self.name = name
        self._cache: dict = {}

    # arithmetic: subclasses implement add / neg / mul on canonical indices.

    def add(self, a: int, b: int) -> int:
        raise NotImplementedError

    def neg(self, a: int) -> int:
        raise NotImplementedError

    def mul(self, a: int, b: int) -> int:
        raise NotImplementedError

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def pow(self, a: int, k: int) -> int:
        if k < 0:
            raise InvalidParameter("negative exponents need an explicit inverse")
        out = self.one
        base = a
        while k:
            if k & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            k >>= 1
        return out

    def element_from_int(self, c: int) -> int:
        """The image of the integer c under Z -> R, i.e. c * 1."""
        c %= self.characteristic()
        out = 0
        step = self.one
        # double-and-add on the additive group
        while c:
            if c & 1:
                out = self.add(out, step)
            step = self.add(step, step)
            c >>= 1
        return out

    def elements(self) -> range:
        return range(self.order)

    # ----- cached structural data ----------------------------------------

    def characteristic(self) -> int:
        if "char" not in self._cache:
            c, acc = 1, self.one
            while acc != 0:
                acc = self.add(acc, self.one)
                c += 1
                if c > self.order:
                    raise InternalInvariantViolation("additive order of 1 runaway")
            self._cache["char"] = c
        return self._cache["char"]

    def units(self) -> tuple:
        if "units" not in self._cache:
            inv = {}
            for a in range(self.order):
                for b in range(a, self.order):
                    if self.mul(a, b) == self.one:
                        inv[a] = b
                        inv[b] = a
                        break
            self._cache["units"] = tuple(sorted(inv))
            self._cache["inv"] = inv
        return self._cache["units"]

    def is_unit(self, a: int) -> bool:
        self.units()
        return a in self._cache["inv"]

    def inverse(self, a: int) -> int:
        self.units()
        try:
            return self._cache["inv"][a]
        except KeyError:
            raise InvalidParameter(f"{self.render(a)} is not a unit in {self.name}")

    def nonunits(self) -> tuple:
        if "nonunits" not in self._cache:
            us = set(self.units())
            self._cache["nonunits"] = tuple(a for a in range(self.order) if a not in us)
        return self._cache["nonunits"]

    def radical(self) -> Ideal:
        """The set of nilpotent elements (= Jacobson radical here)."""
        if "radical" not in self._cache:
            nil = [a for a in range(self.order) if self.pow(a, self.order) == 0]
            self._cache["radical"] = Ideal(self, nil)
        return self._cache["radical"]

    def socle(self) -> Ideal:
        """Annihilator of the radical."""
        if "socle" not in self._cache:
            rad = self.radical().members
            soc = [
                a
                for a in range(self.order)
                if all(self.mul(a, ms) == 0 for ms in rad)
            ]
            self._cache["socle"] = Ideal(self, soc)
        return self._cache["socle"]

    def is_local(self) -> bool:
        """Local iff the non-units are closed under addition."""
        if "local" not in self._cache:
            non = self.nonunits()
            ns = set(non)
            self._cache["local"] = all(
                self.add(a, b) in ns for a in non for b in non
            )
        return self._cache["local"]

    def residue_size(self) -> int:
        """|R| / |M| for local rings (size of the residue field)."""
        if not self.is_local():
            raise NotLocal(f"{self.name} is not local")
        return self.order // len(self.nonunits())

    def teichmuller(self) -> TeichmullerData:
        if "teich" not in self._cache:
            if not self.is_local():
                raise NotLocal(f"{self.name} is not local")
            q = self.residue_size()
            group = [u for u in self.units() if self.pow(u, q - 1) == self.one]
            if len(group) != q - 1:
                raise InternalInvariantViolation(
                    f"Teichmueller group of {self.name} has size {len(group)}"
                )
            gen = self._teichmuller_generator(group, q - 1)
            elements = [0]
            cur = self.one
            for _ in range(q - 1):
                elements.append(cur)
                cur = self.mul(cur, gen)
            if cur != self.one or len(set(elements)) != q:
                raise InternalInvariantViolation("Teichmueller generator order wrong")
            mset = set(self.nonunits())
            nu = []
            for a in range(self.order):
                hits = [t for t in elements if self.sub(a, t) in mset]
                if len(hits) != 1:
                    raise InternalInvariantViolation(
                        f"element {a} has {len(hits)} Teichmueller digits"
                    )
                nu.append(hits[0])
            self._cache["teich"] = TeichmullerData(self, elements, gen, nu)
        return self._cache["teich"]

    def _teichmuller_generator(self, group, order):
        """Smallest-index element of multiplicative order exactly `order`."""
        primes = _prime_factors(order) if order > 1 else []
        for u in sorted(group):
            if all(self.pow(u, order // p) != self.one for p in primes):
                return u
        raise InternalInvariantViolation("no Teichmueller generator found")

    # ----- dense tables for hot loops ------------------------------------

    def add_table(self) -> list:
        if "add_table" not in self._cache:
            n = self.order
            self._cache["add_table"] = [
                [self.add(a, b) for b in range(n)] for a in range(n)
            ]
        return self._cache["add_table"]

    def mul_table(self) -> list:
        if "mul_table" not in self._cache:
            n = self.order
            self._cache["mul_table"] = [
                [self.mul(a, b) for b in range(n)] for a in range(n)
            ]
        return self._cache["mul_table"]

    def sub_table(self) -> list:
        if "sub_table" not in self._cache:
            n = self.order
            self._cache["sub_table"] = [
                [self.sub(a, b) for b in range(n)] for a in range(n)
            ]
        return self._cache["sub_table"]

    # ----- presentation ---------------------------------------------------

    def render(self, a: int) -> str:
        return str(a)

    def __repr__(self):
        return f"<{type(self).__name__} {self.name} (order {self.order})>"


# ---------------------------------------------------------------------------
# integer residue rings
# ---------------------------------------------------------------------------


class IntegerModRing(Ring):
    family = "integer-modular"

    def __init__(self, m: int):
        if m < 2:
            raise InvalidParameter(f"Zm needs modulus >= 2, got {m}")
        super().__init__(m, 1, f"Zm:{m}")
        self.m = m

    def add(self, a, b):
        return (a + b) % self.m

    def neg(self, a):
        return (-a) % self.m

    def mul(self, a, b):
        return (a * b) % self.m

    def units(self):
        if "units" not in self._cache:
            us = tuple(a for a in range(self.m) if gcd(a, self.m) == 1)
            self._cache["units"] = us
            self._cache["inv"] = {a: pow(a, -1, self.m) for a in us}
        return self._cache["units"]


def make_integer_ring(m: int) -> IntegerModRing:
    return IntegerModRing(m)


# ---------------------------------------------------------------------------
# Galois rings
# ---------------------------------------------------------------------------


class GaloisRing(Ring):
    """GR(p^n, r) as Z_{p^n}[x] / (h), elements encoded base p^n.

    ``reduction`` gives x^r = sum reduction[i] * x^i with coefficients in
    Z_{p^n}; it encodes the monic modulus h.
    """

    family = "galois"

    def __init__(self, p: int, n: int, r: int, reduction):
        self.p, self.n, self.r = p, n, r
        self.pn = p**n
        self.q = p**r
        self.reduction = tuple(c % self.pn for c in reduction)
        if len(self.reduction) != r:
            raise InvalidParameter("reduction vector must have length r")
        super().__init__(self.pn**r, 1, f"GR:{p},{n},{r}")
        # x^(r+j) reduced, for j = 0 .. r-2
        xpow = [list(self.reduction)]
        for _ in range(r - 2):
            prev = xpow[-1]
            overflow = prev[-1]
            nxt = [0] + prev[:-1]
            if overflow:
                nxt = [
                    (c + overflow * t) % self.pn
                    for c, t in zip(nxt, self.reduction)
                ]
            xpow.append(nxt)
        self._xpow = [tuple(v) for v in xpow]
        self.xbar = self.reduction[0] if r == 1 else self.pn  # class of x

    # -- encoding ----------------------------------------------------------

    def encode(self, coeffs) -> int:
        out = 0
        for c in reversed(list(coeffs)):
            out = out * self.pn + (c % self.pn)
        return out

    def decode(self, a: int) -> tuple:
        cs = []
        for _ in range(self.r):
            a, c = divmod(a, self.pn)
            cs.append(c)
        return tuple(cs)

    # -- arithmetic --------------------------------------------------------

    def add(self, a, b):
        pn = self.pn
        out = 0
        shift = 1
        for _ in range(self.r):
            a, ca = divmod(a, pn)
            b, cb = divmod(b, pn)
            out += ((ca + cb) % pn) * shift
            shift *= pn
        return out

    def neg(self, a):
        pn = self.pn
        out = 0
        shift = 1
        for _ in range(self.r):
            a, ca = divmod(a, pn)
            out += ((-ca) % pn) * shift
            shift *= pn
        return out

    def mul(self, a, b):
        r, pn = self.r, self.pn
        ca = self.decode(a)
        cb = self.decode(b)
        prod = [0] * (2 * r - 1)
        for i, x in enumerate(ca):
            if x:
                for j, y in enumerate(cb):
                    if y:
                        prod[i + j] += x * y
        for k in range(2 * r - 2, r - 1, -1):
            c = prod[k]
            if c:
                row = self._xpow[k - r]
                for i in range(r):
                    prod[i] += c * row[i]
                prod[k] = 0
        return self.encode(c % pn for c in prod[:r])

    def units(self):
        # local with maximal ideal pR: a unit iff some coefficient is
        # not divisible by p
        if "units" not in self._cache:
            us = []
            inv = {}
            for a in range(self.order):
                if any(c % self.p for c in self.decode(a)):
                    us.append(a)
            # invert by raising to (a multiple of the group exponent) - 1
            for a in us:
                inv[a] = self.pow(a, self._unit_group_exponent() - 1)
                if self.mul(a, inv[a]) != self.one:
                    raise InternalInvariantViolation("unit inversion failed")
            self._cache["units"] = tuple(us)
            self._cache["inv"] = inv
        return self._cache["units"]

    def _unit_group_exponent(self) -> int:
        # exponent divides (q - 1) * p^(n * r); any multiple of the group
        # exponent works for inversion
        return (self.q - 1) * self.p ** (self.n * self.r)

    # -- p-adic digits -----------------------------------------------------

    def _div_by_p(self, a: int) -> int:
        cs = self.decode(a)
        if any(c % self.p for c in cs):
            raise InternalInvariantViolation("element not divisible by p")
        return self.encode(c // self.p for c in cs)

    def padic_digits(self, a: int) -> tuple:
        """Digits (a_0, ..., a_{n-1}) in the Teichmueller set with
        a = sum p^i a_i."""
        t = self.teichmuller()
        digits = []
        cur = a
        for i in range(self.n):
            d = t.nu[cur]
            digits.append(d)
            if i + 1 < self.n:
                cur = self._div_by_p(self.sub(cur, d))
        return tuple(digits)

    def from_padic_digits(self, digits) -> int:
        out = 0
        for i, d in enumerate(digits):
            out = self.add(out, self.mul(self.element_from_int(self.p**i), d))
        return out

    def _teichmuller_generator(self, group, order):
        # the class of x is Teichmueller by construction; pin it as the
        # canonical generator so 𝒯-indices follow powers of x
        xb = self.xbar
        if xb not in group:
            raise InternalInvariantViolation("class of x missing from unit subgroup")
        primes = _prime_factors(order) if order > 1 else []
        if any(self.pow(xb, order // ell) == self.one for ell in primes):
            raise InternalInvariantViolation("class of x has premature order")
        return xb

    def render(self, a: int) -> str:
        return "(" + ",".join(str(c) for c in self.decode(a)) + ")"


def _smallest_generator_poly(p: int, r: int) -> tuple:
    """Coefficients (c_0..c_{r-1}) of the lexicographically smallest monic
    degree-r polynomial over F_p whose root generates F_{p^r}^*.

    Candidates are ordered by the base-p value of their coefficient string
    (most significant coefficient first).  A candidate passes iff the class
    of x in F_p[x]/(h) has multiplicative order exactly p^r - 1, which also
    certifies irreducibility.
    """
    q1 = p**r - 1
    primes = _prime_factors(q1) if q1 > 1 else []
    for v in range(p**r):
        cs = []
        t = v
        for _ in range(r):
            t, c = divmod(t, p)
            cs.append(c)
        if cs[0] == 0:
            continue  # x divides h, class of x is not a unit
        trial = GaloisRing(p, 1, r, tuple((-c) % p for c in cs))
        xb = trial.xbar
        if trial.pow(xb, q1) != trial.one:
            continue
        if any(trial.pow(xb, q1 // ell) == trial.one for ell in primes):
            continue
        return tuple(cs)
    raise InternalInvariantViolation(f"no generator polynomial for p={p}, r={r}")


def _solve_linear_mod(cols, target, mod: int, p: int) -> list[int]:
    """Solve M c = target over Z_mod where M has the given columns and is
    invertible modulo p."""
    r = len(target)
    m = [[cols[j][i] % mod for j in range(r)] + [target[i] % mod] for i in range(r)]
    for col in range(r):
        piv = next(
            (row for row in range(col, r) if m[row][col] % p != 0), None
        )
        if piv is None:
            raise InternalInvariantViolation("basis matrix singular mod p")
        m[col], m[piv] = m[piv], m[col]
        inv = pow(m[col][col], -1, mod)
        m[col] = [(v * inv) % mod for v in m[col]]
        for row in range(r):
            if row != col and m[row][col]:
                f = m[row][col]
                m[row] = [(a - f * b) % mod for a, b in zip(m[row], m[col])]
    return [m[i][r] % mod for i in range(r)]


@lru_cache(maxsize=None)
def make_galois_ring(p: int, n: int, r: int) -> GaloisRing:
    """Construct GR(p^n, r) with the canonical basic irreducible modulus."""
    if not _is_prime(p):
        raise InvalidParameter(f"GR needs a prime p, got {p}")
    if n < 1 or r < 1:
        raise InvalidParameter(f"GR needs n >= 1 and r >= 1, got n={n}, r={r}")
    base = _smallest_generator_poly(p, r)
    reduction_p = tuple((-c) % p for c in base)
    if n == 1:
        ring = GaloisRing(p, 1, r, reduction_p)
    else:
        pn = p**n
        rough = GaloisRing(p, n, r, tuple((-c) % pn for c in base))
        # Teichmueller lift of the class of x inside the rough quotient
        xi = rough.pow(rough.xbar, (p**r) ** (n - 1))
        cols = []
        power = rough.one
        for _ in range(r):
            cols.append(rough.decode(power))
            power = rough.mul(power, xi)
        reduction = _solve_linear_mod(cols, rough.decode(power), pn, p)
        ring = GaloisRing(p, n, r, tuple(reduction))
    if ring.pow(ring.xbar, p**r - 1) != ring.one:
        raise InternalInvariantViolation("class of x is not a Teichmueller unit")
    if tuple(c % p for c in ring.reduction) != reduction_p:
        raise InternalInvariantViolation("lifted modulus does not reduce to h mod p")
    return ring


def padic_digits(ring: GaloisRing, a: int) -> tuple:
    if not isinstance(ring, GaloisRing):
        raise InvalidParameter("p-adic digits are defined for Galois rings")
    return ring.padic_digits(a)


def frobenius(ring: GaloisRing) -> Automorphism:
    """The Frobenius automorphism: sum p^i a_i -> sum p^i a_i^p."""
    if not isinstance(ring, GaloisRing):
        raise UnknownPreset(f"frobenius automorphism needs a Galois ring, got {ring.name}")
    key = "frobenius"
    if key not in ring._cache:
        p = ring.p
        perm = [
            ring.from_padic_digits([ring.pow(d, p) for d in ring.padic_digits(a)])
            for a in range(ring.order)
        ]
        ring._cache[key] = Automorphism(ring, perm, tag="frobenius-1")
    return ring._cache[key]


def automorphism_power(auto: Automorphism, k: int) -> Automorphism:
    if k < 0:
        raise InvalidParameter("automorphism power must be >= 0")
    out = Automorphism(auto.ring, range(auto.ring.order), tag="identity", _verified=True)
    for _ in range(k):
        out = auto.compose(out)
    if auto.tag == "frobenius-1":
        out.tag = f"frobenius-{k}"
    return out


def swap_xy(ring: "TableRing") -> Automorphism:
    """The coefficient-swap automorphism of FXY:p (x <-> y)."""
    if getattr(ring, "preset", None) != "fxy":
        raise UnknownPreset(f"swap-xy automorphism needs an FXY ring, got {ring.name}")
    p = ring.char_expected
    perm = []
    for a in range(ring.order):
        c1 = a % p
        cx = (a // p) % p
        cy = (a // p**2) % p
        cxy = a // p**3
        perm.append(c1 + cy * p + cx * p**2 + cxy * p**3)
    key = "swapxy"
    if key not in ring._cache:
        ring._cache[key] = Automorphism(ring, perm, tag="swap-xy")
    return ring._cache[key]


def named_automorphism(ring: Ring, tag: str) -> Automorphism:
    tag = tag.replace("_", "-")
    if tag in ("frobenius", "frobenius-1"):
        return frobenius(ring)
    if tag in ("swap-xy", "swapxy"):
        return swap_xy(ring)
    raise UnknownPreset(f"unknown automorphism preset {tag!r}")


# ---------------------------------------------------------------------------
# table rings
# ---------------------------------------------------------------------------


class TableRing(Ring):
    """A ring given by explicit addition and multiplication tables.

    The full commutative-unital-ring axiom list is checked exhaustively at
    construction; a violation raises InvalidRing with a witness.
    """

    family = "table"

    def __init__(self, add_table, mul_table, name: str, char_expected=None,
                 render_fn=None, preset=None):
        n = len(add_table)
        add_t = [list(row) for row in add_table]
        mul_t = [list(row) for row in mul_table]
        _verify_tables(add_t, mul_t, n, name)
        one = _find_identity(mul_t, n, name)
        self._add = add_t
        self._mul = mul_t
        super().__init__(n, one, name)
        self._cache["add_table"] = add_t
        self._cache["mul_table"] = mul_t
        self._render_fn = render_fn
        self.preset = preset
        self.char_expected = char_expected
        if char_expected is not None and self.characteristic() != char_expected:
            raise InvalidRing(
                f"{name}: characteristic {self.characteristic()} != {char_expected}"
            )

    def add(self, a, b):
        return self._add[a][b]

    def neg(self, a):
        if "neg" not in self._cache:
            neg = [None] * self.order
            for x in range(self.order):
                for y in range(self.order):
                    if self._add[x][y] == 0:
                        neg[x] = y
                        break
            self._cache["neg"] = neg
        return self._cache["neg"][a]

    def mul(self, a, b):
        return self._mul[a][b]

    def render(self, a):
        if self._render_fn is not None:
            return self._render_fn(a)
        return f"e{a}"


def _verify_tables(add_t, mul_t, n: int, name: str) -> None:
    rng = range(n)
    for tab, label in ((add_t, "+"), (mul_t, "*")):
        if len(tab) != n or any(len(row) != n for row in tab):
            raise InvalidRing(f"{name}: {label} table is not {n}x{n}")
        for row in tab:
            for v in row:
                if not (0 <= v < n):
                    raise InvalidRing(f"{name}: {label} entry {v} out of range")
    for a in rng:
        if add_t[0][a] != a:
            raise InvalidRing(f"{name}: 0 is not an additive identity at {a}")
    for a in rng:
        for b in rng:
            if add_t[a][b] != add_t[b][a]:
                raise InvalidRing(f"{name}: + not commutative at ({a},{b})")
            if mul_t[a][b] != mul_t[b][a]:
                raise InvalidRing(f"{name}: * not commutative at ({a},{b})")
    for a in rng:
        if all(add_t[a][b] != 0 for b in rng):
            raise InvalidRing(f"{name}: {a} has no additive inverse")
    for a in rng:
        arow = add_t[a]
        mrow = mul_t[a]
        for b in rng:
            ab_add = arow[b]
            ab_mul = mrow[b]
            brow_add = add_t[b]
            for c in rng:
                if add_t[ab_add][c] != arow[brow_add[c]]:
                    raise InvalidRing(f"{name}: + not associative at ({a},{b},{c})")
                if mul_t[ab_mul][c] != mrow[mul_t[b][c]]:
                    raise InvalidRing(f"{name}: * not associative at ({a},{b},{c})")
                if mul_t[a][brow_add[c]] != add_t[ab_mul][mrow[c]]:
                    raise InvalidRing(f"{name}: * not distributive at ({a},{b},{c})")


def _find_identity(mul_t, n: int, name: str) -> int:
    ones = [e for e in range(n) if all(mul_t[e][a] == a for a in range(n))]
    if len(ones) != 1:
        raise InvalidRing(f"{name}: found {len(ones)} multiplicative identities")
    return ones[0]


def make_table_ring(add_table, mul_table, name: str = "table",
                    char_expected=None, render_fn=None) -> TableRing:
    return TableRing(add_table, mul_table, name, char_expected=char_expected,
                     render_fn=render_fn)


_FXY_SYMS = ("1", "x", "y", "x*y")


@lru_cache(maxsize=None)
def fxy_ring(p: int) -> TableRing:
    """F_p[x,y]/(x^2, y^2): order p^4 on the basis (1, x, y, xy)."""
    if not _is_prime(p):
        raise InvalidParameter(f"FXY needs a prime p, got {p}")
    n = p**4

    def dec(a):
        return (a % p, (a // p) % p, (a // p**2) % p, a // p**3)

    def enc(c):
        return c[0] + c[1] * p + c[2] * p**2 + c[3] * p**3

    add_t = []
    mul_t = []
    for a in range(n):
        a1, ax, ay, axy = dec(a)
        add_row = []
        mul_row = []
        for b in range(n):
            b1, bx, by, bxy = dec(b)
            add_row.append(enc(((a1 + b1) % p, (ax + bx) % p,
                               (ay + by) % p, (axy + bxy) % p)))
            mul_row.append(enc((
                (a1 * b1) % p,
                (a1 * bx + ax * b1) % p,
                (a1 * by + ay * b1) % p,
                (a1 * bxy + axy * b1 + ax * by + ay * bx) % p,
            )))
        add_t.append(add_row)
        mul_t.append(mul_row)

    def render(a):
        terms = []
        for c, sym in zip(dec(a), _FXY_SYMS):
            if c:
                if sym == "1":
                    terms.append(str(c))
                elif c == 1:
                    terms.append(sym)
                else:
                    terms.append(f"{c}*{sym}")
        return "+".join(terms) if terms else "0"

    return TableRing(add_t, mul_t, f"FXY:{p}", char_expected=p,
                     render_fn=render, preset="fxy")


@lru_cache(maxsize=None)
def z4x_ring() -> TableRing:
    """Z_4[x]/(x^2 + 2): order 16 on the basis (1, t) with t^2 = 2."""
    n = 16

    def dec(a):
        return (a % 4, a // 4)

    def enc(c):
        return c[0] + 4 * c[1]

    add_t = []
    mul_t = []
    for a in range(n):
        a0, a1 = dec(a)
        add_row = []
        mul_row = []
        for b in range(n):
            b0, b1 = dec(b)
            add_row.append(enc(((a0 + b0) % 4, (a1 + b1) % 4)))
            mul_row.append(enc(((a0 * b0 + 2 * a1 * b1) % 4,
                               (a0 * b1 + a1 * b0) % 4)))
        add_t.append(add_row)
        mul_t.append(mul_row)

    def render(a):
        r0, r1 = dec(a)
        terms = []
        if r0:
            terms.append(str(r0))
        if r1 == 1:
            terms.append("t")
        elif r1:
            terms.append(f"{r1}*t")
        return "+".join(terms) if terms else "0"

    return TableRing(add_t, mul_t, "Z4X", char_expected=4,
                     render_fn=render, preset="z4x")


def z4x_conjugation(ring: TableRing) -> Automorphism:
    """The automorphism t -> -t of Z4X."""
    if getattr(ring, "preset", None) != "z4x":
        raise UnknownPreset("conjugation automorphism needs the Z4X ring")
    perm = [(a % 4) + 4 * ((-(a // 4)) % 4) for a in range(ring.order)]
    return Automorphism(ring, perm, tag="custom")


# ---------------------------------------------------------------------------
# module-level wrappers and the ring-spec grammar
# ---------------------------------------------------------------------------


def radical(ring: Ring) -> Ideal:
    return ring.radical()


def socle(ring: Ring) -> Ideal:
    return ring.socle()


def units(ring: Ring) -> tuple:
    return ring.units()


def teichmuller(ring: Ring) -> TeichmullerData:
    return ring.teichmuller()


def parse_ring_spec_parts(spec: str):
    """Split a ring spec string into (family, params) without building it."""
    spec = spec.strip()
    if spec == "Z4X":
        return ("z4x", ())
    head, sep, tail = spec.partition(":")
    if not sep:
        raise UnknownPreset(f"unknown ring spec {spec!r}")
    if head == "Zm":
        try:
            return ("zm", (int(tail),))
        except ValueError:
            raise ParseError(f"bad modulus in ring spec {spec!r}")
    if head == "GR":
        parts = tail.split(",")
        if len(parts) != 3:
            raise ParseError(f"GR spec needs p,n,r: {spec!r}")
        try:
            return ("galois", tuple(int(x) for x in parts))
        except ValueError:
            raise ParseError(f"bad integer in ring spec {spec!r}")
    if head == "FXY":
        try:
            return ("fxy", (int(tail),))
        except ValueError:
            raise ParseError(f"bad prime in ring spec {spec!r}")
    raise UnknownPreset(f"unknown ring family {head!r} in spec {spec!r}")


@lru_cache(maxsize=None)
def ring_from_spec(spec: str) -> Ring:
    """Build (and memoize) a ring from its spec string."""
    family, params = parse_ring_spec_parts(spec)
    if family == "zm":
        return make_integer_ring(*params)
    if family == "galois":
        return make_galois_ring(*params)
    if family == "fxy":
        return fxy_ring(*params)
    return z4x_ring()


def permutation_of_teichmuller(ring: Ring, perm) -> tuple:
    """Validate a one-line permutation of Teichmueller indices fixing 0."""
    t = ring.teichmuller()
    perm = tuple(perm)
    if sorted(perm) != list(range(len(t.elements))):
        raise BadPermutation(
            f"expected a permutation of 0..{len(t.elements) - 1}, got {perm}"
        )
    if perm[0] != 0:
        raise BadPermutation("permutation must fix index 0 (the element 0)")
    return perm
