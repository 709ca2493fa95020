"""Root data, the invariant form, rho, dominance and atypicality.

Weights of osp(2|2n) are written ``(a|b1,...,bn)`` meaning
``a*eps1 + b1*delta1 + ... + bn*deltan``.  The exceptional families reuse the
same container: ``eps`` holds the first coordinate and ``coeffs`` the rest.
All arithmetic is exact (``fractions.Fraction`` and ``int``).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Optional, Sequence, Tuple, Union

from .errors import ParameterError, ParseError, UsageError

Vector = Tuple[Fraction, ...]

FAMILY_TAGS = ("osp2", "osp32", "d21a", "g3", "f4")

# number of coordinates after the first one
_TAIL_LENGTH = {"osp32": 1, "d21a": 2, "g3": 2, "f4": 3}

# dim of the odd part
_ODD_DIM = {"osp32": 6, "d21a": 8, "g3": 14, "f4": 16}

_EVEN_FACTORS = {
    "osp32": ("A1", "A1"),
    "d21a": ("A1", "A1", "A1"),
    "g3": ("A1", "G2"),
    "f4": ("A1", "B3"),
}


@dataclass(frozen=True)
class Family:
    tag: str
    n: int = 0
    p: int = 0
    q: int = 0
    irrational: bool = False

    def __post_init__(self):
        if self.tag not in FAMILY_TAGS:
            raise ParameterError(f"unknown family {self.tag!r}")
        if self.tag == "osp2" and (not isinstance(self.n, int) or self.n < 1):
            raise ParameterError(f"osp(2|2n) needs n >= 1, got {self.n!r}")
        if self.tag == "d21a" and not self.irrational:
            if self.p <= 0 or self.q <= 0:
                raise ParameterError(f"D(2,1;p/q) needs p, q > 0, got p={self.p}, q={self.q}")
            if gcd(self.p, self.q) != 1:
                raise ParameterError(f"D(2,1;p/q) needs gcd(p, q) = 1, got p={self.p}, q={self.q}")

    @classmethod
    def osp2(cls, n: int) -> "Family":
        return cls("osp2", n=n)

    @classmethod
    def osp32(cls) -> "Family":
        return cls("osp32")

    @classmethod
    def d21a(cls, p: int = 0, q: int = 0, irrational: bool = False) -> "Family":
        if irrational:
            return cls("d21a", irrational=True)
        return cls("d21a", p=p, q=q)

    @classmethod
    def g3(cls) -> "Family":
        return cls("g3")

    @classmethod
    def f4(cls) -> "Family":
        return cls("f4")

    @property
    def alpha(self) -> Optional[Fraction]:
        if self.tag != "d21a" or self.irrational:
            return None
        return Fraction(self.p, self.q)

    @property
    def tail_length(self) -> int:
        return self.n if self.tag == "osp2" else _TAIL_LENGTH[self.tag]

    @property
    def odd_dim(self) -> int:
        return 4 * self.n if self.tag == "osp2" else _ODD_DIM[self.tag]

    def __str__(self):
        if self.tag == "osp2":
            return f"osp(2|{2 * self.n})"
        if self.tag == "d21a":
            return "D(2,1;irrational)" if self.irrational else f"D(2,1;{self.p}/{self.q})"
        return {"osp32": "osp(3|2)", "g3": "G(3)", "f4": "F(4)"}[self.tag]


@dataclass(frozen=True)
class SuperWeight:
    family: Family
    eps: Fraction
    coeffs: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "eps", Fraction(self.eps))
        coeffs = tuple(self.coeffs)
        for c in coeffs:
            if isinstance(c, bool) or int(c) != c:
                raise UsageError(f"weight coefficients must be integers, got {c!r}")
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) != self.family.tail_length:
            raise UsageError(
                f"{self.family} weights need {self.family.tail_length} trailing "
                f"coordinates, got {len(coeffs)}")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def parse(cls, family: Family, text: str) -> "SuperWeight":
        """Parse ``"a|b1,...,bn"``; ``a`` may be an integer or ``p/q``."""
        head, sep, tail = text.strip().partition("|")
        if not sep:
            raise ParseError(f"weight {text!r} lacks the '|' separator")
        try:
            eps = Fraction(head.strip())
            coeffs = tuple(int(t) for t in tail.split(",")) if tail.strip() else ()
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"cannot parse weight {text!r}: {exc}") from None
        return cls(family, eps, coeffs)

    def __str__(self):
        return f"{self.eps}|" + ",".join(str(c) for c in self.coeffs)

    @property
    def coords(self) -> tuple:
        return (self.eps,) + self.coeffs

    @property
    def vector(self) -> Vector:
        return (self.eps,) + tuple(Fraction(c) for c in self.coeffs)

    def __add__(self, other: "SuperWeight") -> "SuperWeight":
        _same_family(self.family, other.family)
        return SuperWeight(self.family, self.eps + other.eps,
                           tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "SuperWeight") -> "SuperWeight":
        _same_family(self.family, other.family)
        return SuperWeight(self.family, self.eps - other.eps,
                           tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))


def _same_family(f: Family, g: Family):
    if f != g:
        raise UsageError(f"family mismatch: {f} vs {g}")


@dataclass(frozen=True)
class RootDatum:
    family: Family
    labels: Tuple[str, ...]
    even_roots: Tuple[Vector, ...] = ()
    odd_roots: Tuple[Vector, ...] = ()
    positive_roots: Tuple[Vector, ...] = ()
    simple_roots: Tuple[Vector, ...] = ()
    form: Tuple[Tuple[Fraction, ...], ...] = ()
    rho_vector: Vector = ()
    even_factors: Tuple[str, ...] = ()
    odd_dim: int = 0
    _odd_set: frozenset = field(default=frozenset(), repr=False, compare=False)

    @property
    def rho(self) -> Optional[SuperWeight]:
        """rho as a weight, when its trailing coordinates are integral."""
        if not self.rho_vector or any(c.denominator != 1 for c in self.rho_vector[1:]):
            return None
        return SuperWeight(self.family, self.rho_vector[0],
                           tuple(int(c) for c in self.rho_vector[1:]))

    @property
    def has_roots(self) -> bool:
        return bool(self.form)

    @property
    def positive_odd(self) -> Tuple[Vector, ...]:
        return tuple(r for r in self.positive_roots if r in self._odd_set)

    @property
    def positive_even(self) -> Tuple[Vector, ...]:
        return tuple(r for r in self.positive_roots if r not in self._odd_set)

    def root_name(self, v: Vector) -> str:
        parts = []
        for c, lab in zip(v, self.labels):
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = "" if abs(c) == 1 else f"{abs(c)}"
            parts.append(f"{sign}{mag}{lab}")
        text = "".join(parts) or "0"
        return text[1:] if text.startswith("+") else text


def _vec(*xs) -> Vector:
    return tuple(Fraction(x) for x in xs)


def _unit(size: int, i: int, c=1) -> list:
    v = [Fraction(0)] * size
    v[i] = Fraction(c)
    return v


def _half_sum_rho(positive_even, positive_odd, size) -> Vector:
    rho = [Fraction(0)] * size
    for r in positive_even:
        for i, c in enumerate(r):
            rho[i] += c / 2
    for r in positive_odd:
        for i, c in enumerate(r):
            rho[i] -= c / 2
    return tuple(rho)


@lru_cache(maxsize=None)
def build_datum(family: Family) -> RootDatum:
    """Root datum for ``family``.

    Full roots and form exist for osp(2|2n) and osp(3|2) only.  The other
    families carry their even-part factor labels and odd dimension; their
    atypicality is answered from block tables.
    """
    if family.tag == "osp2":
        return _osp2_datum(family)
    if family.tag == "osp32":
        return _osp32_datum(family)
    return RootDatum(family=family, labels=("a",) + tuple(f"x{i}" for i in range(1, family.tail_length + 1)),
                     even_factors=_EVEN_FACTORS[family.tag], odd_dim=family.odd_dim)


def _osp2_datum(family: Family) -> RootDatum:
    n = family.n
    size = n + 1

    def eps(c=1):
        return _unit(size, 0, c)

    def delta(i, c=1):  # i is 1-based
        return _unit(size, i, c)

    def add(*vs):
        return tuple(sum(col, Fraction(0)) for col in zip(*vs))

    even_pos = []
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            even_pos.append(add(delta(i), delta(j)))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            even_pos.append(add(delta(i), delta(j, -1)))
    odd_pos = []
    for i in range(1, n + 1):
        odd_pos.append(add(eps(), delta(i, -1)))
        odd_pos.append(add(eps(), delta(i)))
    neg = lambda v: tuple(-c for c in v)
    even_roots = tuple(even_pos) + tuple(neg(v) for v in even_pos)
    odd_roots = tuple(odd_pos) + tuple(neg(v) for v in odd_pos)

    simple = [add(delta(i), delta(i + 1, -1)) for i in range(1, n)]
    simple.append(tuple(delta(n, 2)))
    simple.append(add(eps(), delta(1, -1)))

    form = tuple(
        tuple(Fraction(0) if i != j else (Fraction(1) if i == 0 else Fraction(-1)) for j in range(size))
        for i in range(size))
    labels = ("eps1",) + tuple(f"delta{i}" for i in range(1, n + 1))
    return RootDatum(
        family=family, labels=labels, even_roots=even_roots, odd_roots=odd_roots,
        positive_roots=tuple(even_pos) + tuple(odd_pos), simple_roots=tuple(simple),
        form=form, rho_vector=_half_sum_rho(even_pos, odd_pos, size),
        even_factors=("T1", f"C{n}"), odd_dim=family.odd_dim,
        _odd_set=frozenset(odd_roots))


def _osp32_datum(family: Family) -> RootDatum:
    # distinguished Borel: simple roots delta-eps (odd) and eps (even)
    eps, delta = _vec(1, 0), _vec(0, 1)
    neg = lambda v: tuple(-c for c in v)
    plus = lambda u, v: tuple(a + b for a, b in zip(u, v))
    minus = lambda u, v: tuple(a - b for a, b in zip(u, v))
    even_pos = (eps, plus(delta, delta))
    odd_pos = (minus(delta, eps), delta, plus(delta, eps))
    odd_roots = odd_pos + tuple(neg(v) for v in odd_pos)
    form = ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(-1)))
    # rho = (1/2, -1/2) has a half-integral delta part: kept as a vector only
    return RootDatum(
        family=family, labels=("eps1", "delta"),
        even_roots=even_pos + tuple(neg(v) for v in even_pos), odd_roots=odd_roots,
        positive_roots=even_pos + odd_pos, simple_roots=(minus(delta, eps), eps),
        form=form, rho_vector=_half_sum_rho(even_pos, odd_pos, 2),
        even_factors=_EVEN_FACTORS["osp32"], odd_dim=6, _odd_set=frozenset(odd_roots))


def _as_vector(datum: RootDatum, v: Union[SuperWeight, Sequence]) -> Vector:
    if isinstance(v, SuperWeight):
        _same_family(datum.family, v.family)
        return v.vector
    vec = tuple(Fraction(c) for c in v)
    if len(vec) != len(datum.labels):
        raise UsageError(f"vector of length {len(vec)} does not match {datum.family}")
    return vec


def bilinear(datum: RootDatum, v, w) -> Fraction:
    """Exact value of the invariant form on two weights (or raw coordinate vectors)."""
    if not datum.has_roots:
        raise UsageError(f"no bilinear form stored for {datum.family}")
    a, b = _as_vector(datum, v), _as_vector(datum, w)
    return sum((a[i] * datum.form[i][j] * b[j]
                for i in range(len(a)) for j in range(len(b)) if datum.form[i][j]),
               Fraction(0))


def is_dominant(datum: RootDatum, lam: SuperWeight) -> bool:
    """Membership in the parametrizing set of dominant weights for the family."""
    _same_family(datum.family, lam.family)
    tag = lam.family.tag
    c = lam.coeffs
    if tag == "osp2":
        return all(x >= y for x, y in zip(c, c[1:])) and (not c or c[-1] >= 0)
    a = lam.eps
    if tag == "osp32":
        (b,) = c
        return (a >= 0 and (2 * a).denominator == 1 and b >= 0
                and (b != 0 or a == 0))
    if a.denominator != 1 or a < 0 or any(x < 0 for x in c):
        return False
    if tag == "d21a":
        b, cc = c
        if a == 0:
            return b == 0 and cc == 0
        if a == 1:
            alpha = lam.family.alpha
            return alpha is not None and Fraction(b + 1) == alpha * (cc + 1)
        return True
    if tag == "g3":
        b, cc = c
        if a == 0:
            return b == 0 and cc == 0
        if a == 1:
            return False
        if a == 2:
            return b == 0
        return True
    return True  # f4: only nonnegativity is available without external tables


@dataclass(frozen=True)
class Atypicality:
    degree: int
    witnesses: Tuple[Vector, ...] = ()
    block: Optional[Tuple[int, int]] = None  # (k, l) for table lookups


def atypicality(datum: RootDatum, lam: SuperWeight, table=None) -> Atypicality:
    """Atypicality degree with the odd positive isotropic roots orthogonal to lam+rho.

    For the exceptional families the answer is table membership (module
    ``blockdata``); ``table`` is required for F(4).
    """
    if not is_dominant(datum, lam):
        raise UsageError(f"weight {lam} is not dominant for {datum.family}")
    if lam.family.tag != "osp2":
        from .blockdata import locate
        where = locate(lam, table=table)
        return Atypicality(degree=1 if where is not None else 0, block=where)
    if lam.eps.denominator != 1:
        return Atypicality(degree=0)
    # (lam+rho, eps1 -+ delta_i) = f_-1 -+ f_i with integer f-coordinates
    n = lam.family.n
    fm1 = int(lam.eps) - n
    witnesses = []
    for i, c in enumerate(lam.coeffs):
        fi = -(c + n - i)
        for sign in (-1, 1):
            if fm1 + sign * fi == 0:
                v = [Fraction(0)] * (n + 1)
                v[0], v[i + 1] = Fraction(1), Fraction(sign)
                witnesses.append(tuple(v))
    return Atypicality(degree=1 if witnesses else 0, witnesses=tuple(witnesses))


def atypicality_by_form(datum: RootDatum, lam: SuperWeight) -> Tuple[Vector, ...]:
    """Odd positive isotropic roots orthogonal to lam+rho, by direct evaluation of the form."""
    shifted = tuple(a + b for a, b in zip(lam.vector, datum.rho_vector))
    return tuple(g for g in datum.positive_odd
                 if bilinear(datum, g, g) == 0 and bilinear(datum, shifted, g) == 0)
