"""Explicit odd hyperelliptic models y^2 = f(x) and their ramification data.

A model is y^2 = f(x) with f monic, squarefree, of odd degree 2g+1, so
there is a single place at infinity and it is a branch place.  The
differentials dx/y, x dx/y, ... give an explicit monomial basis of the
sections of the (i+1)-fold twist of the canonical bundle at infinity,
and local expansions in canonical parameters turn vanishing orders into
exact integer data:

* ordinary place (x0, y0), y0 != 0:   t = x - x0
* branch place  (x0, 0):              t = y, with x - x0 recovered by
                                      Newton inversion of y^2 = f(x)
* infinity:                           x = t^-2, y = t^-(2g+1) s(t) with
                                      s = sqrt(t^(2(2g+1)) f(t^-2))

Weights at located places come from order sequences (valuation-staircase
elimination on expansion coefficients); the weight carried by places the
engine cannot expand exactly (ordinary points with irrational
coordinates, branch points over irrational roots of f) is recovered
without any root-finding from the valuations of the affine wronskian,
whose divisor has degree zero.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    CurveValidationError,
    DegenerateSystemError,
    EvenDegreeError,
    InconclusiveError,
    InternalCheckError,
    NotMonicError,
    NotOnCurveError,
    NotSquarefreeError,
    UnsupportedModelError,
)
from .numeric import (
    Series,
    UniPoly,
    bareiss_det,
    poly_on_series,
    series_invert,
    series_sqrt,
)

PRECISION_CAP = 2**14

ORDINARY = "ordinary"
BRANCH = "branch"
INFINITY = "infinity"


class _DxOverY:
    """Sentinel for the distinguished differential dx/y in expand_at."""

    def __repr__(self):
        return "dx/y"


DX_OVER_Y = _DxOverY()


def start_precision(g: int, i: int) -> int:
    """Initial expansion precision: generous against the weight bound."""
    return 4 * (g * (g + i) ** 2 + 2 * g + 2)


# ---------------------------------------------------------------------------
# Places and models


@dataclass(frozen=True)
class Place:
    kind: str
    x: Fraction | None = None
    y: Fraction | None = None

    @classmethod
    def ordinary(cls, x, y) -> "Place":
        return cls(ORDINARY, Fraction(x), Fraction(y))

    @classmethod
    def branch(cls, x) -> "Place":
        return cls(BRANCH, Fraction(x), Fraction(0))

    @classmethod
    def infinity(cls) -> "Place":
        return cls(INFINITY)

    def __str__(self):
        if self.kind == INFINITY:
            return "infinity"
        return f"({self.x}, {self.y})"


@dataclass(frozen=True)
class HyperellipticModel:
    """Validated odd hyperelliptic model y^2 = f(x)."""

    f: UniPoly
    genus: int
    branch_x: tuple[Fraction, ...]
    splits: bool

    @classmethod
    def from_poly(cls, f: UniPoly) -> "HyperellipticModel":
        if f.is_zero() or f.degree < 3:
            raise CurveValidationError(f"degree must be at least 3, got {f.degree}")
        if f.degree % 2 == 0:
            raise EvenDegreeError(f"degree {f.degree} is even; an odd model is required")
        if f.lead != 1:
            raise NotMonicError(f"leading coefficient {f.lead} is not 1")
        if not f.is_squarefree():
            raise NotSquarefreeError("f has a repeated root; the curve would be singular")
        roots = f.rational_roots()
        branch = tuple(sorted(x for x, _ in roots))
        genus = (f.degree - 1) // 2
        return cls(f=f, genus=genus, branch_x=branch, splits=len(branch) == f.degree)

    def one(self) -> "CurveFunction":
        return CurveFunction(self, UniPoly.const(1), UniPoly(), UniPoly.const(1))

    def x_fn(self) -> "CurveFunction":
        return CurveFunction(self, UniPoly.x(), UniPoly(), UniPoly.const(1))

    def y_fn(self) -> "CurveFunction":
        return CurveFunction(self, UniPoly(), UniPoly.const(1), UniPoly.const(1))

    def monomial(self, a: int, b: int) -> "CurveFunction":
        xa = UniPoly.x() ** a
        if b == 0:
            return CurveFunction(self, xa, UniPoly(), UniPoly.const(1))
        return CurveFunction(self, UniPoly(), xa, UniPoly.const(1))

    def check_place(self, place: Place) -> None:
        if place.kind == INFINITY:
            return
        if place.kind == BRANCH:
            if self.f.evaluate(place.x) != 0:
                raise NotOnCurveError(f"{place} is not a branch place: f(x0) != 0")
            return
        fx = self.f.evaluate(place.x)
        if place.y == 0:
            raise NotOnCurveError(f"{place} has y = 0; use a branch place")
        if place.y * place.y != fx:
            raise NotOnCurveError(f"{place} does not satisfy y^2 = f(x)")


# ---------------------------------------------------------------------------
# Function field arithmetic: (a(x) + b(x) y) / den(x) with y^2 = f


class CurveFunction:
    """Element of the function field of a model, in canonical form.

    Canonical form: gcd(a, b, den) = 1 and den monic.  Inversion goes
    through the conjugate, using the norm a^2 - b^2 f.
    """

    __slots__ = ("model", "a", "b", "den")

    def __init__(self, model, a: UniPoly, b: UniPoly, den: UniPoly):
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        common = a.gcd(b).gcd(den)
        if common.degree > 0:
            a = a.exact_div(common)
            b = b.exact_div(common)
            den = den.exact_div(common)
        scale = 1 / den.lead
        object.__setattr__(self, "model", model)
        object.__setattr__(self, "a", a * scale if scale != 1 else a)
        object.__setattr__(self, "b", b * scale if scale != 1 else b)
        object.__setattr__(self, "den", den.monic())

    def __setattr__(self, *args):
        raise AttributeError("CurveFunction is immutable")

    def _coerce(self, other):
        if isinstance(other, CurveFunction):
            if other.model is not self.model and other.model != self.model:
                raise ValueError("functions on different models")
            return other
        if isinstance(other, (int, Fraction, UniPoly)):
            p = other if isinstance(other, UniPoly) else UniPoly.const(other)
            return CurveFunction(self.model, p, UniPoly(), UniPoly.const(1))
        return NotImplemented

    def is_zero(self) -> bool:
        return self.a.is_zero() and self.b.is_zero()

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self.a, self.b, self.den) == (other.a, other.b, other.den)

    def __hash__(self):
        return hash((self.a, self.b, self.den))

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return CurveFunction(
            self.model,
            self.a * other.den + other.a * self.den,
            self.b * other.den + other.b * self.den,
            self.den * other.den,
        )

    __radd__ = __add__

    def __neg__(self):
        return CurveFunction(self.model, -self.a, -self.b, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        f = self.model.f
        a = self.a * other.a + self.b * other.b * f
        b = self.a * other.b + self.b * other.a
        return CurveFunction(self.model, a, b, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "CurveFunction":
        if self.is_zero():
            raise ZeroDivisionError("inverting the zero function")
        if self.b.is_zero():
            return CurveFunction(self.model, self.den, UniPoly(), self.a)
        n = self.norm_numerator()
        if n.is_zero():
            raise ZeroDivisionError("inverting the zero function")
        return CurveFunction(self.model, self.a * self.den, -self.b * self.den, n)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        out = self.model.one()
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def norm_numerator(self) -> UniPoly:
        """The polynomial a^2 - b^2 f (norm of the numerator a + b y)."""
        return self.a * self.a - self.b * self.b * self.model.f

    def derivative(self) -> "CurveFunction":
        """Derivative with respect to x, using y' = f'(x) / (2y)."""
        a, b, den = self.a, self.b, self.den
        dp = den.derivative()
        if b.is_zero():
            return CurveFunction(
                self.model, a.derivative() * den - a * dp, UniPoly(), den * den
            )
        f = self.model.f
        fp = f.derivative()
        two_f = 2 * f
        new_a = two_f * (a.derivative() * den - a * dp)
        new_b = (two_f * b.derivative() + b * fp) * den - two_f * b * dp
        return CurveFunction(self.model, new_a, new_b, two_f * den * den)

    def __repr__(self):
        num = []
        if self.b:
            num.append(f"({self.b})*y")
        if self.a or not num:
            num.insert(0, f"{self.a}")
        body = " + ".join(num)
        if self.den == UniPoly.const(1):
            return body
        return f"({body})/({self.den})"


# ---------------------------------------------------------------------------
# Monomial bases of the twisted canonical systems


@dataclass(frozen=True)
class MonomialBasis:
    """Monomials x^a y^b with 2a + (2g+1)b <= 2g+i-1, by pole order.

    Multiplying by dx/y (whose divisor is (2g-2) times the place at
    infinity) identifies them with a basis of the sections of the
    (i+1)-fold twist of the canonical bundle at infinity; there are
    exactly g+i of them and their pole orders are pairwise distinct.
    """

    model: HyperellipticModel
    i: int
    exponents: tuple[tuple[int, int], ...]

    def __len__(self):
        return len(self.exponents)

    @property
    def pole_orders(self) -> tuple[int, ...]:
        w = 2 * self.model.genus + 1
        return tuple(2 * a + w * b for a, b in self.exponents)

    @property
    def functions(self) -> tuple[CurveFunction, ...]:
        return tuple(self.model.monomial(a, b) for a, b in self.exponents)

    def monomial_names(self) -> tuple[str, ...]:
        names = []
        for a, b in self.exponents:
            xs = "" if a == 0 else ("x" if a == 1 else f"x^{a}")
            ys = "" if b == 0 else "y"
            names.append((xs + ("*" if xs and ys else "") + ys) or "1")
        return tuple(names)


def build_basis(model: HyperellipticModel, i: int) -> MonomialBasis:
    if i < 0:
        raise ValueError("i must be nonnegative")
    g = model.genus
    w = 2 * g + 1
    limit = 2 * g + i - 1
    exps = []
    for b in (0, 1):
        a = 0
        while 2 * a + w * b <= limit:
            exps.append((a, b))
            a += 1
    exps.sort(key=lambda ab: 2 * ab[0] + w * ab[1])
    if len(exps) != g + i:
        raise InternalCheckError(
            f"basis staircase produced {len(exps)} monomials, expected {g + i}"
        )
    return MonomialBasis(model=model, i=i, exponents=tuple(exps))


# ---------------------------------------------------------------------------
# Local expansions


def _window_view(s: Series, up_to: int) -> Series:
    """A polynomial (exact) series reinterpreted as known only below up_to."""
    n = up_to - s.lead
    if n <= 0:
        return Series(up_to, ())
    cs = list(s.coeffs[:n])
    cs += [Fraction(0)] * (n - len(cs))
    return Series(s.lead, cs)


def _solve_branch_parameter(fshift: UniPoly, prec: int) -> Series:
    """Solve f(x0 + u) = t^2 for u(t) by Newton iteration on polynomial
    candidates, doubling the trusted window each step."""
    c1 = fshift[1]
    cand = Series(2, [Fraction(1) / c1], exact=True)
    fsd = fshift.derivative()
    target = Series.monomial(2, 1)
    m = 4
    while True:
        m = min(2 * m, max(prec, 8))
        window = _window_view(cand, m)
        err = poly_on_series(fshift, window) - target
        if err.coeffs and err.lead < m:
            dfu = poly_on_series(fsd, window)
            corr = err * series_invert(dfu, prec=m)
            improved = window - corr
            cand = Series(improved.lead, improved.coeffs, exact=True)
        if m >= prec:
            break
    final = _window_view(cand, prec)
    check = poly_on_series(fshift, final) - target
    if check.coeffs and check.lead < prec:
        raise InternalCheckError("branch-place Newton inversion failed to converge")
    return final


@functools.lru_cache(maxsize=256)
def _local_frame(model: HyperellipticModel, place: Place, prec: int):
    """Series for (x, y, dx/dt, 1/y) in the canonical parameter at a place."""
    g = model.genus
    f = model.f
    if place.kind == ORDINARY:
        x0, y0 = place.x, place.y
        fs = f.shift(x0)
        unit = Series(0, [c / (y0 * y0) for c in fs.coeffs], exact=True)
        y = series_sqrt(unit, prec=prec).scale(y0)
        x = Series(0, [x0, 1], exact=True)
        dxdt = Series.constant(1)
    elif place.kind == BRANCH:
        fs = f.shift(place.x)
        u = _solve_branch_parameter(fs, prec)
        x = Series.constant(place.x) + u
        y = Series.monomial(1, 1)
        dxdt = u.derivative()
    else:
        w = 2 * g + 1
        rev = [Fraction(0)] * (2 * w + 1)
        for k, c in enumerate(f.coeffs):
            rev[2 * w - 2 * k] = c
        s = series_sqrt(Series(0, rev, exact=True), prec=prec)
        y = s.shift(-w)
        x = Series.monomial(-2, 1)
        dxdt = Series.monomial(-3, -2)
    y_inv = series_invert(y, prec=prec)
    return x, y, dxdt, y_inv


def expand_at(model: HyperellipticModel, fn, place: Place, precision: int) -> Series:
    """Laurent expansion in the canonical local parameter of the place.

    ``fn`` is a CurveFunction, or the sentinel ``DX_OVER_Y`` (also the
    string "dx/y") for the distinguished differential expanded against
    dt.
    """
    if precision < 1:
        raise ValueError("precision must be positive")
    model.check_place(place)
    x, y, dxdt, y_inv = _local_frame(model, place, precision)
    if fn is DX_OVER_Y or (isinstance(fn, str) and fn == "dx/y"):
        return dxdt * y_inv
    if not isinstance(fn, CurveFunction):
        raise TypeError(f"cannot expand {fn!r}")
    if fn.is_zero():
        return Series.zero()
    num = poly_on_series(fn.a, x)
    if fn.b:
        num = num + poly_on_series(fn.b, x) * y
    if fn.den.degree == 0:
        return num
    den = poly_on_series(fn.den, x)
    return num * series_invert(den, prec=precision)


# ---------------------------------------------------------------------------
# Order sequences via valuation-staircase elimination


@dataclass(frozen=True)
class OrderSequence:
    """Strictly increasing vanishing orders and their weight sum."""

    orders: tuple[int, ...]
    weight: int

    @classmethod
    def from_orders(cls, orders) -> "OrderSequence":
        orders = tuple(int(o) for o in orders)
        if list(orders) != sorted(set(orders)):
            raise ValueError("orders must be strictly increasing")
        weight = sum(o - k for k, o in enumerate(orders))
        return cls(orders=orders, weight=weight)


def staircase_valuations(series_list) -> list[int]:
    """Distinct valuations attainable by nonzero linear combinations.

    Gaussian elimination on the valuation staircase: while two series
    share a valuation, cancel the leading coefficient of one against the
    other, which strictly raises its valuation.  Raises
    ``InconclusiveError`` when a combination becomes zero within its
    known window, since its true valuation is then undetermined.
    """
    work = list(series_list)
    while True:
        by_val: dict[int, int] = {}
        clash = None
        for idx, s in enumerate(work):
            if not s.coeffs:
                raise InconclusiveError(
                    "a combination vanished to the full known precision"
                )
            v = s.lead
            if v in by_val:
                clash = (by_val[v], idx)
                break
            by_val[v] = idx
        if clash is None:
            return sorted(by_val)
        pivot = work[clash[0]]
        other = work[clash[1]]
        ratio = other.coeffs[0] / pivot.coeffs[0]
        work[clash[1]] = other - pivot.scale(ratio)


def order_sequence_at(
    model: HyperellipticModel,
    basis: MonomialBasis,
    place: Place,
    precision_cap: int = PRECISION_CAP,
) -> OrderSequence:
    """Vanishing orders of the twisted canonical system at the place.

    Starts at the documented precision and doubles on an inconclusive
    elimination; reaching the cap is an explicit error, never a wrong
    answer.
    """
    g, i = model.genus, basis.i
    twist = i + 1 if place.kind == INFINITY else 0
    prec = start_precision(g, i)
    while True:
        try:
            dxy = expand_at(model, DX_OVER_Y, place, prec)
            sers = []
            for fn in basis.functions:
                s = expand_at(model, fn, place, prec) * dxy
                if twist:
                    s = s.shift(twist)
                sers.append(s)
            orders = staircase_valuations(sers)
            break
        except InconclusiveError:
            prec *= 2
            if prec > precision_cap:
                raise InconclusiveError(
                    f"order sequence at {place} inconclusive at the "
                    f"precision cap {precision_cap}"
                ) from None
    if len(orders) != g + i or orders[0] < 0 or orders[-1] > 2 * g - 1 + i:
        raise InternalCheckError(
            f"order sequence {orders} at {place} is out of range for a "
            f"system of rank {g + i - 1} and degree {2 * g - 1 + i}"
        )
    return OrderSequence.from_orders(orders)


# ---------------------------------------------------------------------------
# Wronskians and weight bookkeeping


def affine_wronskian(model: HyperellipticModel, basis: MonomialBasis) -> CurveFunction:
    """Determinant of the derivative matrix (d/dx)^m applied to the basis
    monomials; at places where x is a local parameter its valuation is
    the local ramification weight.

    Derivatives of x^a stay in Q(x) and derivatives of x^a y stay in
    Q(x) y, so each y is pulled out of its column by multilinearity and
    the Bareiss elimination runs over plain rational functions of x.
    """
    n = len(basis)
    f = model.f
    half_dlog = CurveFunction(model, f.derivative(), UniPoly(), 2 * f)
    columns = []
    y_columns = 0
    for a_exp, b_exp in basis.exponents:
        entry = model.monomial(a_exp, 0)
        col = [entry]
        if b_exp:
            y_columns += 1
            for _ in range(n - 1):
                entry = entry.derivative() + entry * half_dlog
                col.append(entry)
        else:
            for _ in range(n - 1):
                entry = entry.derivative()
                col.append(entry)
        columns.append(col)
    det = bareiss_det([[columns[k][m] for k in range(n)] for m in range(n)])
    if det.is_zero():
        raise DegenerateSystemError("wronskian of a monomial basis vanished")
    if y_columns:
        det = det * model.y_fn() ** y_columns
    return det


def ord_at_infinity(model: HyperellipticModel, fn: CurveFunction) -> int:
    """Valuation at the place at infinity, from pole orders 2 and 2g+1 of
    x and y.  The parts a and b*y always have valuations of opposite
    parity, so no cancellation can occur."""
    if fn.is_zero():
        raise ValueError("the zero function has no valuation")
    w = 2 * model.genus + 1
    vals = []
    if fn.a:
        vals.append(-2 * fn.a.degree)
    if fn.b:
        vals.append(-(2 * fn.b.degree + w))
    return min(vals) + 2 * fn.den.degree


def ord_at_branch(model: HyperellipticModel, fn: CurveFunction, x0) -> int:
    """Valuation at the branch place over a rational root x0 of f."""
    if fn.is_zero():
        raise ValueError("the zero function has no valuation")
    x0 = Fraction(x0)
    vals = []
    if fn.a:
        vals.append(2 * fn.a.root_multiplicity(x0))
    if fn.b:
        vals.append(2 * fn.b.root_multiplicity(x0) + 1)
    return min(vals) - 2 * fn.den.root_multiplicity(x0)


def _multiplicity_sum_on_branch(p: UniPoly, f: UniPoly) -> int:
    """Sum over all roots of f (f squarefree) of the multiplicity of the
    root in p, computed by repeated gcd extraction."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    total = 0
    q = p
    while True:
        shared = q.gcd(f)
        if shared.degree <= 0:
            return total
        total += shared.degree
        q = q.exact_div(shared)


def branch_ord_total(model: HyperellipticModel, fn: CurveFunction) -> int:
    """Sum of the valuations of fn over all 2g+1 branch places, rational
    or not, using only gcd arithmetic over Q."""
    if fn.is_zero():
        raise ValueError("the zero function has no valuation")
    f = model.f
    a, b, den = fn.a, fn.b, fn.den
    if a.is_zero():
        num = 2 * _multiplicity_sum_on_branch(b, f) + f.degree
    elif b.is_zero():
        num = 2 * _multiplicity_sum_on_branch(a, f)
    else:
        shared = a.gcd(b)
        num = 2 * _multiplicity_sum_on_branch(shared, f) if shared.degree > 0 else 0
        a_rest = a.exact_div(shared) if shared.degree > 0 else a
        num += a_rest.gcd(f).degree
    if den.degree > 0:
        num -= 2 * _multiplicity_sum_on_branch(den, f)
    return num


@dataclass(frozen=True)
class WeightReport:
    """Ramification bookkeeping for one twisted canonical system.

    ``entries`` lists the places with exact expansions (rational branch
    places in ascending x order, then infinity).  ``remainder`` is the
    weight at all other places, recovered from the degree-zero divisor
    of the affine wronskian; it splits into the part at ordinary affine
    points and the part at branch places over irrational roots of f.
    """

    i: int
    entries: tuple[tuple[Place, OrderSequence], ...]
    remainder: int
    remainder_ordinary: int
    remainder_branch: int
    total: int

    @property
    def located_total(self) -> int:
        return sum(os.weight for _, os in self.entries)


def total_weight(model: HyperellipticModel, i: int) -> WeightReport:
    """Total ramification weight of the system of sections of the
    (i+1)-fold twist of the canonical bundle at infinity.

    Located weights come from order sequences; everything else comes
    from the wronskian valuation bookkeeping, with the two methods
    cross-checked wherever both apply.
    """
    if i < 0:
        raise ValueError("i must be nonnegative")
    g = model.genus
    r = g + i - 1
    shift = r * (r + 1) // 2
    basis = build_basis(model, i)
    wron = affine_wronskian(model, basis)

    entries = []
    located_branch = 0
    for x0 in model.branch_x:
        place = Place.branch(x0)
        seq = order_sequence_at(model, basis, place)
        expected = ord_at_branch(model, wron, x0) + shift
        if seq.weight != expected:
            raise InternalCheckError(
                f"branch weight at {place}: series gave {seq.weight}, "
                f"wronskian bookkeeping gave {expected}"
            )
        entries.append((place, seq))
        located_branch += seq.weight

    inf = Place.infinity()
    seq_inf = order_sequence_at(model, basis, inf)
    ord_inf = ord_at_infinity(model, wron)
    expected_inf = (g + i) * (2 * g + i - 1) - 3 * shift + ord_inf
    if seq_inf.weight != expected_inf:
        raise InternalCheckError(
            f"weight at infinity: series gave {seq_inf.weight}, "
            f"wronskian bookkeeping gave {expected_inf}"
        )
    entries.append((inf, seq_inf))

    branch_ords = branch_ord_total(model, wron)
    branch_weight_all = branch_ords + (2 * g + 1) * shift
    remainder_branch = branch_weight_all - located_branch
    remainder_ordinary = -ord_inf - branch_ords
    if remainder_branch < 0 or remainder_ordinary < 0:
        raise InternalCheckError(
            f"negative unlocated weight: branch {remainder_branch}, "
            f"ordinary {remainder_ordinary}"
        )
    remainder = remainder_branch + remainder_ordinary
    total = located_branch + seq_inf.weight + remainder
    return WeightReport(
        i=i,
        entries=tuple(entries),
        remainder=remainder,
        remainder_ordinary=remainder_ordinary,
        remainder_branch=remainder_branch,
        total=total,
    )


# ---------------------------------------------------------------------------
# Elliptic torsion oracle


@functools.lru_cache(maxsize=512)
def division_polynomial(model: HyperellipticModel, n: int) -> CurveFunction:
    """n-th division polynomial of a genus-1 model, as a curve function.

    Vanishes exactly at the nontrivial affine n-torsion points.  Odd n
    gives a pure polynomial in x; even n gives a polynomial times y.
    """
    if model.genus != 1:
        raise UnsupportedModelError("division polynomials need a genus-1 model")
    if n < 1:
        raise ValueError("n must be at least 1")
    f = model.f
    a2, a4, a6 = f[2], f[1], f[0]
    b2 = 4 * a2
    b4 = 2 * a4
    b6 = 4 * a6
    b8 = 4 * a2 * a6 - a4 * a4
    x = UniPoly.x()

    def poly(p: UniPoly) -> CurveFunction:
        return CurveFunction(model, p, UniPoly(), UniPoly.const(1))

    if n == 1:
        return model.one()
    if n == 2:
        return 2 * model.y_fn()
    if n == 3:
        return poly(3 * x**4 + b2 * x**3 + 3 * b4 * x**2 + 3 * b6 * x + b8)
    if n == 4:
        inner = (
            2 * x**6
            + b2 * x**5
            + 5 * b4 * x**4
            + 10 * b6 * x**3
            + 10 * b8 * x**2
            + (b2 * b8 - b4 * b6) * x
            + (b4 * b8 - b6 * b6)
        )
        return division_polynomial(model, 2) * poly(inner)
    m, odd = divmod(n, 2)
    psi = functools.partial(division_polynomial, model)
    if odd:
        return psi(m + 2) * psi(m) ** 3 - psi(m - 1) * psi(m + 1) ** 3
    result = psi(m) * (psi(m + 2) * psi(m - 1) ** 2 - psi(m - 2) * psi(m + 1) ** 2)
    result = result / psi(2)
    if result.den.degree != 0:
        raise InternalCheckError("even division polynomial was not polynomial")
    return result


def _strip_branch_factors(p: UniPoly, f: UniPoly) -> UniPoly:
    """Remove every irreducible factor shared with f."""
    q = p
    while True:
        shared = q.gcd(f)
        if shared.degree <= 0:
            return q
        q = q.exact_div(shared)


def torsion_check(model: HyperellipticModel, j: int) -> bool:
    """Genus-1 oracle: the affine ramification points of the j-twisted
    system at infinity are exactly the affine (j+1)-torsion points.

    Both sides are compared as monic squarefree polynomials in x.  The
    ordinary part of the ramification locus is the squarefree part of
    the wronskian norm with branch-supported factors removed; branch
    places (the 2-torsion) are ramified iff their common weight is
    positive, which the wronskian valuation bookkeeping decides without
    root-finding.
    """
    if model.genus != 1:
        raise UnsupportedModelError("torsion check needs a genus-1 model")
    if j < 1:
        raise ValueError("j must be at least 1")
    n = j + 1
    f = model.f
    basis = build_basis(model, j)
    wron = affine_wronskian(model, basis)

    ordinary = _strip_branch_factors(wron.norm_numerator(), f).squarefree_part()

    r = j
    shift = r * (r + 1) // 2
    branch_weight_all = branch_ord_total(model, wron) + 3 * shift
    # each branch place is a 2-torsion point, so the three weights agree
    if branch_weight_all % 3:
        raise InternalCheckError("branch weights of a genus-1 system must agree")
    ram = ordinary if branch_weight_all == 0 else ordinary * f.squarefree_part()

    psi = division_polynomial(model, n)
    if psi.den.degree != 0:
        raise InternalCheckError("division polynomial must be polynomial")
    torsion = psi.norm_numerator().squarefree_part()
    return ram.monic() == torsion.monic()
