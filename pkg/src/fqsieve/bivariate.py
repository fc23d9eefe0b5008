"""Polynomials in F_q[t][x]: evaluation at ring elements, derivatives,
content, discriminant, and the admissibility test required before any
local counting is attempted.

The discriminant is the resultant of f and df/dx with the classical sign
normalization (-1)^(d(d-1)/2) where d = deg_x f, computed fraction-free by
Bareiss elimination of the Sylvester matrix.  A subresultant remainder
sequence is kept alongside as a cross-check.  Only the degree of the
discriminant and divisibility by individual primes matter downstream, so
no division by the leading coefficient is performed.
"""

from __future__ import annotations

from typing import Sequence, Union

from .errors import InadmissibleError, InseparableError
from .finitefield import FieldElement, FiniteField
from .polyring import Poly, is_squarefree, poly_gcd

Scalar = Union[Poly, FieldElement, int]


class BiPoly:
    """An element of F_q[t][x]: dense vector of t-polynomials by x-power."""

    __slots__ = ("field", "xcoeffs")

    def __init__(self, field: FiniteField, xcoeffs: Sequence[Poly]):
        cs = list(xcoeffs)
        for c in cs:
            if c.field != field:
                raise ValueError("coefficient over the wrong field")
        while cs and cs[-1].is_zero():
            cs.pop()
        self.field = field
        self.xcoeffs = tuple(cs)

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, field) -> "BiPoly":
        return cls(field, ())

    @classmethod
    def constant(cls, field, value: Scalar) -> "BiPoly":
        return cls(field, (_as_poly(field, value),))

    @classmethod
    def variable_x(cls, field) -> "BiPoly":
        return cls(field, (Poly.zero(field), Poly.one(field)))

    @classmethod
    def variable_t(cls, field) -> "BiPoly":
        return cls(field, (Poly.variable(field),))

    @classmethod
    def from_string(cls, field, text: str) -> "BiPoly":
        from .parsing import parse_bipoly

        return parse_bipoly(text, field)

    # -- structure -----------------------------------------------------------

    @property
    def deg_x(self):
        return len(self.xcoeffs) - 1 if self.xcoeffs else float("-inf")

    def is_zero(self) -> bool:
        return not self.xcoeffs

    def leading(self) -> Poly:
        """Leading coefficient as a polynomial in x (an element of F_q[t])."""
        if not self.xcoeffs:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self.xcoeffs[-1]

    def coefficient(self, k: int) -> Poly:
        if 0 <= k < len(self.xcoeffs):
            return self.xcoeffs[k]
        return Poly.zero(self.field)

    # -- arithmetic ------------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, BiPoly):
            if other.field != self.field:
                raise ValueError("operands over different fields")
            return other
        if isinstance(other, (Poly, FieldElement, int)):
            return BiPoly.constant(self.field, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.xcoeffs, other.xcoeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return BiPoly(self.field, out)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __neg__(self):
        return BiPoly(self.field, [-c for c in self.xcoeffs])

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.xcoeffs, other.xcoeffs
        if not a or not b:
            return BiPoly.zero(self.field)
        out = [Poly.zero(self.field) for _ in range(len(a) + len(b) - 1)]
        for i, ca in enumerate(a):
            if not ca.is_zero():
                for j, cb in enumerate(b):
                    if not cb.is_zero():
                        out[i + j] = out[i + j] + ca * cb
        return BiPoly(self.field, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        out = BiPoly.constant(self.field, 1)
        acc = self
        while e:
            if e & 1:
                out = out * acc
            acc = acc * acc
            e >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (Poly, FieldElement, int)):
            other = BiPoly.constant(self.field, other)
        return (
            isinstance(other, BiPoly)
            and self.field == other.field
            and self.xcoeffs == other.xcoeffs
        )

    def __hash__(self):
        return hash((self.field, self.xcoeffs))

    # -- calculus and evaluation ----------------------------------------------

    def derivative(self, var: str) -> "BiPoly":
        """Formal partial derivative in x or t."""
        if var == "x":
            F = self.field
            p = F.p
            out = []
            for k in range(1, len(self.xcoeffs)):
                r = k % p
                if r == 0:
                    out.append(Poly.zero(F))
                else:
                    c = self.xcoeffs[k]
                    acc = c
                    for _ in range(r - 1):
                        acc = acc + c
                    out.append(acc)
            return BiPoly(F, out)
        if var == "t":
            return BiPoly(self.field, [c.derivative() for c in self.xcoeffs])
        raise ValueError(f"unknown variable {var!r}")

    def evaluate(self, a: Poly) -> Poly:
        """Substitute x := a, Horner in F_q[t]."""
        out = Poly.zero(self.field)
        for c in reversed(self.xcoeffs):
            out = out * a + c
        return out

    def evaluate_mod(self, a: Poly, modulus: Poly) -> Poly:
        """Substitute x := a and reduce mod ``modulus`` at every step."""
        out = Poly.zero(self.field)
        a = a % modulus
        for c in reversed(self.xcoeffs):
            out = (out * a + c) % modulus
        return out

    def reduce_coeffs_mod(self, modulus: Poly) -> "BiPoly":
        return BiPoly(self.field, [c % modulus for c in self.xcoeffs])

    def content(self) -> Poly:
        """Monic gcd of the coefficients."""
        if self.is_zero():
            raise ValueError("content of 0 is undefined")
        acc = Poly.zero(self.field)
        for c in self.xcoeffs:
            if not c.is_zero():
                acc = c if acc.is_zero() else poly_gcd(acc, c)
                if acc.degree == 0:
                    break
        return acc.monic()

    # -- text -------------------------------------------------------------------

    def __str__(self):
        if not self.xcoeffs:
            return "0"
        terms = []
        for k in range(len(self.xcoeffs) - 1, -1, -1):
            c = self.xcoeffs[k]
            if c.is_zero():
                continue
            cs = str(c)
            if k == 0:
                terms.append(cs)
                continue
            power = "x" if k == 1 else f"x^{k}"
            if c.is_one():
                terms.append(power)
            elif "+" in cs:
                terms.append(f"({cs})*{power}")
            else:
                terms.append(f"{cs}*{power}")
        return " + ".join(terms)

    def __repr__(self):
        return f"BiPoly(F_{self.field.q}, {self})"


def _as_poly(field, value: Scalar) -> Poly:
    if isinstance(value, Poly):
        if value.field != field:
            raise ValueError("field mismatch")
        return value
    return Poly.constant(field, value)


# ---------------------------------------------------------------------------
# resultants


def _sylvester_matrix(f: BiPoly, g: BiPoly) -> list[list[Poly]]:
    F = f.field
    m, n = f.deg_x, g.deg_x
    size = m + n
    zero = Poly.zero(F)
    rows = []
    fc = [f.coefficient(m - i) for i in range(m + 1)]  # descending
    gc = [g.coefficient(n - i) for i in range(n + 1)]
    for i in range(n):
        rows.append([zero] * i + fc + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + gc + [zero] * (size - n - 1 - i))
    return rows


def _bareiss_determinant(rows: list[list[Poly]], field) -> Poly:
    """Fraction-free determinant; each elimination step divides exactly by
    the previous pivot."""
    n = len(rows)
    if n == 0:
        return Poly.one(field)
    m = [list(r) for r in rows]
    sign = 1
    prev = Poly.one(field)
    for k in range(n - 1):
        if m[k][k].is_zero():
            pivot_row = next(
                (i for i in range(k + 1, n) if not m[i][k].is_zero()), None
            )
            if pivot_row is None:
                return Poly.zero(field)
            m[k], m[pivot_row] = m[pivot_row], m[k]
            sign = -sign
        pk = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * pk - m[i][k] * m[k][j]
                quo, rem = divmod(num, prev)
                assert rem.is_zero(), "fraction-free division left a remainder"
                m[i][j] = quo
            m[i][k] = Poly.zero(field)
        prev = pk
    det = m[n - 1][n - 1]
    return -det if sign < 0 else det


def resultant(f: BiPoly, g: BiPoly) -> Poly:
    """Resultant with respect to x, an element of F_q[t]."""
    F = f.field
    if f.is_zero() or g.is_zero():
        return Poly.zero(F)
    m, n = f.deg_x, g.deg_x
    if m == 0 and n == 0:
        return Poly.one(F)
    if n == 0:
        return g.xcoeffs[0] ** m
    if m == 0:
        return f.xcoeffs[0] ** n
    return _bareiss_determinant(_sylvester_matrix(f, g), F)


def resultant_prs(f: BiPoly, g: BiPoly) -> Poly:
    """Resultant via the classical root-product recursion over the fraction
    field, cleared of denominators exactly.  Kept as an independent route to
    cross-check the Bareiss path."""
    F = f.field
    if f.is_zero() or g.is_zero():
        return Poly.zero(F)
    m, n = f.deg_x, g.deg_x
    if n == 0:
        return g.xcoeffs[0] ** m
    if m == 0:
        return f.xcoeffs[0] ** n
    if m < n:
        flip = -1 if (m * n) % 2 else 1
        r = resultant_prs(g, f)
        return -r if flip < 0 else r
    # pseudo-divide f by g: lc(g)^(m-n+1) * f = q*g + r
    lc = g.xcoeffs[-1]
    scaled = f * (lc ** (m - n + 1))
    rem = scaled
    while not rem.is_zero() and rem.deg_x >= n:
        d = rem.deg_x - n
        c = rem.xcoeffs[-1]
        sub = BiPoly(
            F, [Poly.zero(F)] * d + [c * gi for gi in g.xcoeffs]
        )
        rem = rem - sub
    # res(f, g) = lc^(deg f - deg r) ... with the pseudo-division correction
    if rem.is_zero():
        return Poly.zero(F)
    k = rem.deg_x
    # res(f,g) = (-1)^(m n) res(g,f); res(g, r)*lc^(m-k) over the fraction
    # field with lc^(m-n+1) cleared:
    sign = -1 if (m * n) % 2 else 1
    sub_res = resultant_prs(g, rem)
    numerator = sub_res * (lc ** (m - k))
    denom = lc ** ((m - n + 1) * n)
    quo, r2 = divmod(numerator, denom)
    assert r2.is_zero()
    return -quo if sign < 0 else quo


def discriminant(f: BiPoly) -> Poly:
    """Discriminant in x, sign-normalized resultant of f and df/dx.

    Degree-1 inputs give 1 by convention (keeps downstream degree bounds
    well defined); a vanishing x-derivative gives 0.
    """
    d = f.deg_x
    if f.is_zero() or d < 1:
        raise ValueError("discriminant requires positive degree in x")
    if d == 1:
        return Poly.one(f.field)
    fx = f.derivative("x")
    if fx.is_zero():
        return Poly.zero(f.field)
    res = resultant(f, fx)
    if (d * (d - 1) // 2) % 2:
        return -res
    return res


# ---------------------------------------------------------------------------
# admissibility


def hensel_threshold(f: BiPoly) -> int:
    """max(deg discriminant, deg leading coefficient): primes of strictly
    larger degree admit unique root lifting mod squares."""
    d = f.deg_x
    if d < 1:
        # constant in x: no lifting ever needed beyond the value itself
        return len(f.coefficient(0).coeffs) - 1 if not f.is_zero() else 0
    disc = discriminant(f)
    ddisc = disc.degree if not disc.is_zero() else 0
    dlead = f.leading().degree
    return max(int(ddisc), int(dlead))


def uniform_root_bound(f: BiPoly) -> int:
    """Uniform bound on the number of roots mod any prime square: the
    x-degree beyond the lifting threshold, the full residue count below."""
    d0 = hensel_threshold(f)
    dx = f.deg_x if f.deg_x >= 1 else 0
    return max(int(dx), f.field.q ** (2 * d0))


def _deflate(f: BiPoly) -> BiPoly:
    """Write f = h(x^p) and return h; requires df/dx = 0."""
    F = f.field
    p = F.p
    out = []
    for k, c in enumerate(f.xcoeffs):
        if k % p == 0:
            out.append(c)
        elif not c.is_zero():
            raise AssertionError("deflation with a live mixed term")
    return BiPoly(F, out)


def _is_pth_power(f: BiPoly) -> bool:
    """True iff f = g^p for some g in F_q[t][x]; valid when df/dx = 0."""
    from .polyring import frobenius_decompose

    h = _deflate(f)
    for c in h.xcoeffs:
        parts = frobenius_decompose(c)
        if any(not parts[j].is_zero() for j in range(1, len(parts))):
            return False
    return True


def is_admissible(f: BiPoly) -> bool:
    """Whether f can be fed to the local-count and density machinery.

    True requires: square-free content, a nonvanishing x-derivative and a
    nonzero discriminant (so the primitive part is square-free and separable
    over F_q(t)).  A vanishing x-derivative yields False when the input is a
    perfect p-th power (a certain repeated factor), and is otherwise refused
    with InseparableError: deciding square-freeness there would need
    bivariate factorization over a non-perfect field, and the refusal may
    therefore also cover some inputs that do hide a repeated factor.
    """
    if f.is_zero():
        raise InadmissibleError("the zero polynomial is not admissible")
    if not is_squarefree(f.content()):
        return False
    if f.deg_x < 1:
        return True
    fx = f.derivative("x")
    if fx.is_zero():
        if _is_pth_power(f):
            return False
        raise InseparableError(
            "x-derivative vanishes and the input is not a perfect p-th"
            " power; refusing an inseparable polynomial"
        )
    return not discriminant(f).is_zero()


def require_admissible(f: BiPoly) -> None:
    if not is_admissible(f):
        raise InadmissibleError(f"{f} is not admissible")
