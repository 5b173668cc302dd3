"""Sparse multivariate polynomials over an exact field, with pluggable orders.

Monomials are packed into single Python ints so that the active monomial
order coincides with integer comparison:

* a grevlex block packs ``[deg | M-e(last) | ... | M-e(first)]`` (complemented
  exponents make "smaller trailing exponent" sort higher),
* a lex block packs plain exponents, most significant variable first,
* an elimination order is a sequence of such blocks, first block dominant.

With this encoding monomial multiplication is ``a + b - OFFSET`` and
divisibility is one subtraction plus a guard-bit mask, which is what makes a
pure-Python Buchberger loop viable.  Exponents must stay below 2**(WIDTH-1);
overflow raises instead of corrupting.
"""

from fractions import Fraction
from functools import lru_cache
import math
import re

from .fields import Field, QQ, FieldError

WIDTH = 16  # bits per packed field
_M = (1 << (WIDTH - 1)) - 1  # max exponent per variable


class UsageError(ValueError):
    """Mismatched rings/fields/orders or malformed input."""


class TermOrder:
    """A block order. blocks: list of (variable index tuple, "grevlex"|"lex").

    Blocks are compared first-to-last; within a grevlex block total degree
    rules first.  Every variable of the ring must occur in exactly one block.
    """

    def __init__(self, blocks):
        self.blocks = tuple((tuple(ix), kind) for ix, kind in blocks)
        for _, kind in self.blocks:
            if kind not in ("grevlex", "lex"):
                raise UsageError(f"unknown order kind {kind!r}")

    @staticmethod
    def grevlex(n):
        return TermOrder([(range(n), "grevlex")])

    @staticmethod
    def lex(n):
        return TermOrder([(range(n), "lex")])

    @staticmethod
    def elim(first_block, n, kind="grevlex"):
        """Elimination order: any monomial touching `first_block` beats any
        monomial free of it."""
        first = tuple(first_block)
        rest = tuple(i for i in range(n) if i not in set(first))
        return TermOrder([(first, kind), (rest, kind)])

    @staticmethod
    def grevlex_last(v, n):
        """grevlex with variable v least significant (used for saturation)."""
        seq = tuple(i for i in range(n) if i != v) + (v,)
        return TermOrder([(seq, "grevlex")])

    def key(self):
        return self.blocks

    def __eq__(self, other):
        return isinstance(other, TermOrder) and self.blocks == other.blocks

    def __hash__(self):
        return hash(self.blocks)

    def __repr__(self):
        if len(self.blocks) == 1:
            ix, kind = self.blocks[0]
            if ix == tuple(range(len(ix))):
                return kind
        return f"TermOrder({list(self.blocks)})"


class PolyRing:
    """Variable universe + coefficient field + monomial order (packing codec)."""

    def __init__(self, field: Field, names, order: TermOrder | str = "grevlex"):
        self.field = field
        self.names = tuple(names)
        n = len(self.names)
        if len(set(self.names)) != n:
            raise UsageError("duplicate variable names")
        if isinstance(order, str):
            order = TermOrder.grevlex(n) if order == "grevlex" else TermOrder.lex(n)
        covered = [i for ix, _ in order.blocks for i in ix]
        if sorted(covered) != list(range(n)):
            raise UsageError("order blocks must partition the variables")
        self.order = order
        self.nvars = n
        self.index = {nm: i for i, nm in enumerate(self.names)}
        self._build_codec()

    def _build_codec(self):
        # fields are laid out most significant first; record, per variable,
        # the bit shift of its exponent field and whether it is complemented.
        shift = {}
        comp = {}
        degshifts = []  # (shift, var index tuple) per grevlex block
        pos = 0  # counted from the most significant end, in field units
        fields = 0
        for ix, kind in self.order.blocks:
            fields += len(ix) + (1 if kind == "grevlex" else 0)
        top = fields  # number of fields
        cursor = top
        for ix, kind in self.order.blocks:
            if kind == "grevlex":
                cursor -= 1
                degshifts.append((cursor * WIDTH, ix))
                for v in reversed(ix):
                    cursor -= 1
                    shift[v] = cursor * WIDTH
                    comp[v] = True
            else:
                for v in ix:
                    cursor -= 1
                    shift[v] = cursor * WIDTH
                    comp[v] = False
        assert cursor == 0
        self._shift = [shift[v] for v in range(self.nvars)]
        self._comp = [comp[v] for v in range(self.nvars)]
        self._degshifts = degshifts
        self.mono_offset = sum(_M << s for v, s in enumerate(self._shift) if self._comp[v])
        self.guard_mask = sum(1 << (f * WIDTH + WIDTH - 1) for f in range(top))
        self._deg_fast = bool(degshifts) and all(self._comp)
        # per-block SWAR tables for packed lcm (fieldwise min on complemented
        # regions, max on plain regions, degree fields re-summed by folding)
        self._lcm_blocks = []
        cursor2 = top
        for ix, kind in self.order.blocks:
            if kind == "grevlex":
                cursor2 -= 1
                deg_shift = cursor2 * WIDTH
                cursor2 -= len(ix)
                low = cursor2 * WIDTH
                nf = len(ix)
                region = sum(((1 << WIDTH) - 1) << (low + k * WIDTH) for k in range(nf))
                guard = sum(1 << (low + k * WIDTH + WIDTH - 1) for k in range(nf))
                folds = []
                w = WIDTH
                full_bits = nf * WIDTH
                while w < full_bits:
                    mask = 0
                    pos = 0
                    while pos < full_bits + w:
                        mask |= ((1 << w) - 1) << pos
                        pos += 2 * w
                    folds.append((w, mask))
                    w *= 2
                self._lcm_blocks.append(("min", region, guard, low, nf, deg_shift, folds))
            else:
                cursor2 -= len(ix)
                low = cursor2 * WIDTH
                nf = len(ix)
                region = sum(((1 << WIDTH) - 1) << (low + k * WIDTH) for k in range(nf))
                guard = sum(1 << (low + k * WIDTH + WIDTH - 1) for k in range(nf))
                self._lcm_blocks.append(("max", region, guard, low, nf, None, None))
        # the packed constant monomial (exponent 0 everywhere)
        self.mono_one = self.pack((0,) * self.nvars)

    # -- monomial codec ----------------------------------------------------

    def pack(self, exps) -> int:
        v = 0
        total_per_block = {}
        for (s, ix) in self._degshifts:
            total_per_block[s] = sum(exps[i] for i in ix)
        for i, e in enumerate(exps):
            if not (0 <= e <= _M):
                raise OverflowError(f"exponent {e} out of packable range")
            v |= ((_M - e) if self._comp[i] else e) << self._shift[i]
        for s, d in total_per_block.items():
            v |= d << s
        return v

    def unpack(self, m: int):
        mask = (1 << WIDTH) - 1
        out = []
        for i in range(self.nvars):
            f = (m >> self._shift[i]) & mask
            out.append((_M - f) if self._comp[i] else f)
        return tuple(out)

    def mono_deg(self, m: int) -> int:
        if self._deg_fast:
            mask = (1 << WIDTH) - 1
            return sum((m >> s) & mask for s, _ in self._degshifts)
        return sum(self.unpack(m))

    def mono_mul(self, a: int, b: int) -> int:
        c = a + b - self.mono_offset
        if c & self.guard_mask:
            raise OverflowError("monomial exponent overflow")
        return c

    def mono_divides(self, a: int, b: int) -> bool:
        q = b - a + self.mono_offset
        return q >= 0 and not (q & self.guard_mask)

    def mono_div(self, b: int, a: int) -> int:
        q = b - a + self.mono_offset
        if q < 0 or (q & self.guard_mask):
            raise UsageError("monomial division is not exact")
        return q

    def mono_lcm(self, a: int, b: int) -> int:
        # SWAR: per-field min on complemented regions (min complement = max
        # exponent), per-field max on plain regions, degree fields re-summed
        out = 0
        half = WIDTH - 1
        for kind, region, guard, low, nf, deg_shift, folds in self._lcm_blocks:
            aa = a & region
            bb = b & region
            t = ((aa | guard) - bb) & guard      # guard set where a_i >= b_i
            full = (t - (t >> half)) | t         # whole-field mask of that
            inv = full ^ region
            if kind == "min":
                r = (bb & full) | (aa & inv)
                out |= r
                y = r >> low
                for w, mask in folds:
                    y = (y & mask) + ((y >> w) & mask)
                out |= (nf * _M - y) << deg_shift
            else:
                out |= (aa & full) | (bb & inv)
        return out

    def mono_coprime(self, a: int, b: int) -> bool:
        ea, eb = self.unpack(a), self.unpack(b)
        return all(x == 0 or y == 0 for x, y in zip(ea, eb))

    # -- constructors -------------------------------------------------------

    def zero(self):
        return Poly(self, ())

    def one(self):
        return Poly(self, ((self.mono_one, self.field.one),))

    def const(self, c):
        c = self.field.coerce(c)
        return Poly(self, ()) if c == 0 else Poly(self, ((self.mono_one, c),))

    def var(self, v):
        if isinstance(v, str):
            v = self.index[v]
        exps = [0] * self.nvars
        exps[v] = 1
        return Poly(self, ((self.pack(exps), self.field.one),))

    def gens(self):
        return [self.var(i) for i in range(self.nvars)]

    def from_dict(self, d):
        """Build from {exponent tuple (or var->exp dict): coefficient}."""
        acc = {}
        for k, c in d.items():
            if isinstance(k, dict):
                exps = [0] * self.nvars
                for v, e in k.items():
                    exps[self.index[v] if isinstance(v, str) else v] = e
                k = tuple(exps)
            m = self.pack(k)
            acc[m] = self.field.add(acc.get(m, self.field.zero), self.field.coerce(c))
        terms = sorted(((m, c) for m, c in acc.items() if c != 0), reverse=True)
        return Poly(self, tuple(terms))

    # -- ring surgery --------------------------------------------------------

    def with_order(self, order: TermOrder):
        if order == self.order:
            return self
        return PolyRing(self.field, self.names, order)

    def with_field(self, field: Field):
        return PolyRing(field, self.names, self.order)

    def extend(self, extra_names, order: TermOrder | str | None = None):
        names = self.names + tuple(extra_names)
        return PolyRing(self.field, names, order if order is not None else "grevlex")

    def convert(self, poly: "Poly") -> "Poly":
        """Re-encode a polynomial from another ring into this one (by name)."""
        src = poly.ring
        if src is self:
            return poly
        lut = [self.index.get(nm) for nm in src.names]
        acc = {}
        for m, c in poly.terms:
            exps = [0] * self.nvars
            for i, e in enumerate(src.unpack(m)):
                if e:
                    if lut[i] is None:
                        raise UsageError(
                            f"variable {src.names[i]!r} missing in target ring")
                    exps[lut[i]] = e
            acc[self.pack(exps)] = self.field.coerce(c)
        terms = sorted(((m, c) for m, c in acc.items() if c != 0), reverse=True)
        return Poly(self, tuple(terms))

    # -- text ----------------------------------------------------------------

    def format_mono(self, m: int) -> str:
        parts = []
        for i, e in enumerate(self.unpack(m)):
            if e == 1:
                parts.append(self.names[i])
            elif e > 1:
                parts.append(f"{self.names[i]}^{e}")
        return "*".join(parts) if parts else "1"

    _token = re.compile(r"\s*([+-]|\^|\*|[0-9]+(?:/[0-9]+)?|[A-Za-z_][A-Za-z0-9_{},()]*)")

    def parse(self, text: str) -> "Poly":
        """Parse the canonical text form, e.g. ``x_{3,6}*x_{6,5} + x_{3,5}*x_{6,6}``."""
        pos, n = 0, len(text)
        tokens = []
        while pos < n:
            mt = self._token.match(text, pos)
            if not mt:
                if text[pos:].strip() == "":
                    break
                raise UsageError(f"cannot tokenize {text[pos:]!r}")
            tokens.append(mt.group(1))
            pos = mt.end()
        result = self.zero()
        i = 0
        while i < len(tokens):
            sign = 1
            while i < len(tokens) and tokens[i] in "+-":
                if tokens[i] == "-":
                    sign = -sign
                i += 1
            if i >= len(tokens):
                if sign != 1:
                    raise UsageError("dangling sign")
                break
            coeff = self.field.coerce(sign)
            exps = [0] * self.nvars
            expect_factor = True
            while i < len(tokens):
                t = tokens[i]
                if t in "+-":
                    break
                if t == "*":
                    i += 1
                    expect_factor = True
                    continue
                if not expect_factor:
                    raise UsageError(f"unexpected token {t!r}")
                if re.fullmatch(r"[0-9]+(/[0-9]+)?", t):
                    coeff = self.field.mul(coeff, self.field.coerce(Fraction(t)))
                    i += 1
                else:
                    if t not in self.index:
                        raise UsageError(f"unknown variable {t!r}")
                    v = self.index[t]
                    e = 1
                    i += 1
                    if i + 1 < len(tokens) and tokens[i] == "^":
                        e = int(tokens[i + 1])
                        i += 2
                    exps[v] += e
                expect_factor = False
            result = result + Poly(self, ((self.pack(exps), coeff),)) if coeff != 0 else result
        return result

    def __repr__(self):
        return f"PolyRing({self.field}, {len(self.names)} vars, {self.order!r})"

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.field == other.field
            and self.names == other.names
            and self.order == other.order
        )

    def __hash__(self):
        h = getattr(self, "_hash", None)
        if h is None:
            h = self._hash = hash((self.field, self.names, self.order))
        return h


class Poly:
    """Immutable sparse polynomial: terms sorted strictly descending."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms):
        self.ring = ring
        self.terms = tuple(terms)

    # -- inspection -----------------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def lm(self):
        if not self.terms:
            raise UsageError("zero polynomial has no leading monomial")
        return self.terms[0][0]

    def lc(self):
        if not self.terms:
            return self.ring.field.zero
        return self.terms[0][1]

    def lt(self):
        return Poly(self.ring, (self.terms[0],))

    def degree(self):
        if not self.terms:
            return -1
        return max(self.ring.mono_deg(m) for m, _ in self.terms)

    def is_homogeneous(self):
        if not self.terms:
            return True
        degs = {self.ring.mono_deg(m) for m, _ in self.terms}
        return len(degs) == 1

    def constant_value(self):
        if not self.terms:
            return self.ring.field.zero
        if len(self.terms) == 1 and self.terms[0][0] == self.ring.mono_one:
            return self.terms[0][1]
        raise UsageError("polynomial is not constant")

    def variables(self):
        """Indices of variables actually appearing."""
        seen = set()
        for m, _ in self.terms:
            for i, e in enumerate(self.ring.unpack(m)):
                if e:
                    seen.add(i)
        return sorted(seen)

    def assert_canonical(self):
        field = self.ring.field
        last = None
        for m, c in self.terms:
            assert c != 0, "zero coefficient present"
            assert field.coerce(c) == c, "coefficient not in field-normal form"
            if last is not None:
                assert m < last, "terms not strictly decreasing"
            last = m
        return True

    # -- arithmetic -------------------------------------------------------------

    def _check(self, other):
        if self.ring is not other.ring and self.ring != other.ring:
            raise UsageError("polynomials from different rings")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        self._check(other)
        return Poly(self.ring, _merge(self.ring.field, self.terms, other.terms, 1))

    def __radd__(self, other):
        return self.__add__(other)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        self._check(other)
        return Poly(self.ring, _merge(self.ring.field, self.terms, other.terms, -1))

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __neg__(self):
        neg = self.ring.field.neg
        return Poly(self.ring, tuple((m, neg(c)) for m, c in self.terms))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = self.ring.field.coerce(other)
            if c == 0:
                return self.ring.zero()
            mulc = self.ring.field.mul
            return Poly(self.ring, tuple((m, mulc(k, c)) for m, k in self.terms))
        self._check(other)
        ring = self.ring
        f, g = self.terms, other.terms
        if len(f) > len(g):
            f, g = g, f
        if not f:
            return ring.zero()
        acc: dict[int, object] = {}
        fadd, fmul = ring.field.add, ring.field.mul
        off = ring.mono_offset
        guard = ring.guard_mask
        for mf, cf in f:
            base = mf - off
            for mg, cg in g:
                m = base + mg
                if m & guard:
                    raise OverflowError("monomial exponent overflow")
                if m in acc:
                    acc[m] = fadd(acc[m], fmul(cf, cg))
                else:
                    acc[m] = fmul(cf, cg)
        terms = sorted(((m, c) for m, c in acc.items() if c != 0), reverse=True)
        return Poly(ring, tuple(terms))

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, k: int):
        if k < 0:
            raise UsageError("negative power")
        out = self.ring.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def mul_term(self, mono: int, coeff):
        ring = self.ring
        coeff = ring.field.coerce(coeff)
        if coeff == 0:
            return ring.zero()
        mul = ring.field.mul
        off = ring.mono_offset
        guard = ring.guard_mask
        base = mono - off
        out = []
        for m, c in self.terms:
            mm = base + m
            if mm & guard:
                raise OverflowError("monomial exponent overflow")
            out.append((mm, mul(c, coeff)))
        return Poly(ring, tuple(out))

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ring == other.ring and _terms_equal(self.terms, other.terms)

    def __hash__(self):
        return hash((self.ring, self.terms))

    # -- evaluation ---------------------------------------------------------------

    def evaluate(self, assignment, partial=False):
        """Substitute field values for variables.

        `assignment` maps variable names or indices to field values.  With
        ``partial=True`` unassigned variables survive; otherwise every
        variable that occurs must be assigned.
        """
        ring = self.ring
        field = ring.field
        vals = {}
        for k, v in assignment.items():
            vals[ring.index[k] if isinstance(k, str) else k] = field.coerce(v)
        acc: dict[int, object] = {}
        for m, c in self.terms:
            exps = list(ring.unpack(m))
            coeff = c
            for i, e in enumerate(exps):
                if e and i in vals:
                    power = field.coerce(vals[i] ** e)
                    coeff = field.mul(coeff, power)
                    exps[i] = 0
            if not partial and any(e and i not in vals for i, e in enumerate(exps)):
                missing = [ring.names[i] for i, e in enumerate(exps) if e and i not in vals]
                raise UsageError(f"unassigned variables {missing} (pass partial=True)")
            mm = ring.pack(exps)
            acc[mm] = field.add(acc.get(mm, field.zero), field.coerce(coeff))
        terms = sorted(((m, c) for m, c in acc.items() if c != 0), reverse=True)
        return Poly(ring, tuple(terms))

    # -- normalization --------------------------------------------------------------

    def monic(self):
        if not self.terms:
            return self
        inv = self.ring.field.inv(self.lc())
        if inv == self.ring.field.one:
            return self
        mul = self.ring.field.mul
        return Poly(self.ring, tuple((m, mul(c, inv)) for m, c in self.terms))

    def primitive(self):
        """Over Q: scale to coprime integer coefficients with positive lead.
        Over GF(p): monic.  This is the inter-reduction normal form."""
        if not self.terms:
            return self
        if self.ring.field is not QQ and self.ring.field != QQ:
            return self.monic()
        den = 1
        for _, c in self.terms:
            if isinstance(c, Fraction):
                den = den * c.denominator // math.gcd(den, c.denominator)
        ints = [int(c * den) if isinstance(c, Fraction) else c * den for _, c in self.terms]
        g = 0
        for x in ints:
            g = math.gcd(g, x)
        if g == 0:
            return self
        if ints[0] < 0:
            g = -g
        return Poly(self.ring, tuple((m, x // g) for (m, _), x in zip(self.terms, ints)))

    def __str__(self):
        if not self.terms:
            return "0"
        ring = self.ring
        out = []
        for i, (m, c) in enumerate(self.terms):
            cs = str(c)
            neg = cs.startswith("-")
            if neg:
                cs = cs[1:]
            ms = ring.format_mono(m)
            if ms == "1":
                body = cs
            elif cs == "1":
                body = ms
            else:
                body = f"{cs}*{ms}"
            if i == 0:
                out.append(("-" if neg else "") + body)
            else:
                out.append(("- " if neg else "+ ") + body)
        return " ".join(out)

    def __repr__(self):
        return f"<{self}>"


def _terms_equal(a, b):
    if len(a) != len(b):
        return False
    for (ma, ca), (mb, cb) in zip(a, b):
        if ma != mb or ca != cb:
            return False
    return True


def _merge(field, a, b, sign):
    """Merge two descending term tuples; b scaled by sign (+1/-1)."""
    out = []
    i = j = 0
    na, nb = len(a), len(b)
    add, neg = field.add, field.neg
    while i < na and j < nb:
        ma, ca = a[i]
        mb, cb = b[j]
        if ma > mb:
            out.append((ma, ca))
            i += 1
        elif ma < mb:
            out.append((mb, cb if sign > 0 else neg(cb)))
            j += 1
        else:
            c = add(ca, cb) if sign > 0 else add(ca, neg(cb))
            if c != 0:
                out.append((ma, c))
            i += 1
            j += 1
    while i < na:
        out.append(a[i])
        i += 1
    while j < nb:
        mb, cb = b[j]
        out.append((mb, cb if sign > 0 else neg(cb)))
        j += 1
    return tuple(out)
