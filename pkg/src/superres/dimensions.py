"""Exact dimensions: a general Weyl dimension engine plus the closed forms built on it.

The engine works from explicit simple roots with rational coordinates.
Positive roots are generated by root strings, and

    dim L(lam) = prod_{alpha > 0} (lam + delta, alpha) / (delta, alpha)

is evaluated with ``Fraction``; results are checked to be integral.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence, Tuple

from .errors import InternalError, UsageError
from .rootdata import Family, SuperWeight, build_datum, is_dominant


def _dot(u, v) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def _positive_roots(simple) -> Tuple[Tuple[int, ...], ...]:
    """Positive roots in simple-root coordinates, by height, via root strings."""
    r = len(simple)
    norms = [_dot(a, a) for a in simple]
    # pairing[i][j] = <alpha_i, alpha_j^vee>
    pairing = [[2 * _dot(simple[i], simple[j]) / norms[j] for j in range(r)] for i in range(r)]
    units = [tuple(int(i == j) for j in range(r)) for i in range(r)]
    found = set(units)
    layer = list(units)
    ordered = list(units)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(r):
                if beta == units[i]:
                    continue
                q = 0
                probe = list(beta)
                while True:
                    probe[i] -= 1
                    if tuple(probe) in found:
                        q += 1
                    else:
                        break
                p = q - sum(beta[j] * pairing[j][i] for j in range(r))
                if p > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in found:
                        found.add(up)
                        nxt.append(up)
        ordered.extend(sorted(nxt))
        layer = nxt
    return tuple(ordered)


@dataclass(frozen=True)
class EvenRootSystem:
    """A reductive even part: simple roots, or a product of factors.

    ``coords`` says how highest weights are given: ``"fundamental"``
    (Dynkin labels) or ``"orthogonal"`` (coefficients in the basis the
    simple roots are written in, e.g. (r, 0, ..., 0) for sp(2n)).
    """

    tag: str
    simple: Tuple[Tuple[Fraction, ...], ...] = ()
    coords: str = "fundamental"
    factors: Tuple["EvenRootSystem", ...] = ()
    positive: Tuple[Tuple[int, ...], ...] = field(default=(), repr=False, compare=False)

    def __post_init__(self):
        if self.simple and not self.positive:
            object.__setattr__(self, "positive", _positive_roots(self.simple))

    @property
    def rank(self) -> int:
        if self.factors:
            return sum(f.rank for f in self.factors)
        return len(self.simple)

    @property
    def half_sum(self) -> Tuple[Fraction, ...]:
        """delta, half the sum of the positive roots, in the ambient coordinates."""
        dim = len(self.simple[0])
        out = [Fraction(0)] * dim
        for coeffs in self.positive:
            for c, a in zip(coeffs, self.simple):
                for t in range(dim):
                    out[t] += c * a[t] / 2
        return tuple(out)


def _frac(*xs):
    return tuple(Fraction(x) for x in xs)


def A1() -> EvenRootSystem:
    return EvenRootSystem("A1", (_frac(2),), "fundamental")


@lru_cache(maxsize=None)
def C(n: int) -> EvenRootSystem:
    """sp(2n) with simple roots e_i - e_{i+1} and 2e_n; weights in e-coordinates."""
    if n < 1:
        raise UsageError("C(n) needs n >= 1")
    simple = []
    for i in range(n - 1):
        v = [0] * n
        v[i], v[i + 1] = 1, -1
        simple.append(_frac(*v))
    v = [0] * n
    v[-1] = 2
    simple.append(_frac(*v))
    return EvenRootSystem(f"C{n}", tuple(simple), "orthogonal")


@lru_cache(maxsize=None)
def G2() -> EvenRootSystem:
    # alpha1 short, alpha2 long; highest weights are Dynkin labels (m1, m2)
    return EvenRootSystem("G2", (_frac(1, -1, 0), _frac(-2, 1, 1)), "fundamental")


@lru_cache(maxsize=None)
def B3() -> EvenRootSystem:
    # alpha3 = e3 short (spin node); labels (m1, m2, m3)
    return EvenRootSystem("B3", (_frac(1, -1, 0), _frac(0, 1, -1), _frac(0, 0, 1)), "fundamental")


def product(*factors: EvenRootSystem) -> EvenRootSystem:
    return EvenRootSystem("x".join(f.tag for f in factors), factors=tuple(factors))


def system_from_name(name: str) -> EvenRootSystem:
    """``a1``, ``c:N``, ``g2`` or ``b3``."""
    key = name.strip().lower()
    if key == "a1":
        return A1()
    if key == "g2":
        return G2()
    if key == "b3":
        return B3()
    if key.startswith("c:"):
        try:
            return C(int(key[2:]))
        except ValueError:
            pass
    raise UsageError(f"unknown even root system {name!r}")


def dynkin_labels(sys: EvenRootSystem, hw: Sequence) -> Tuple[int, ...]:
    if sys.coords == "fundamental":
        labels = [Fraction(x) for x in hw]
    else:
        labels = [2 * _dot(hw, a) / _dot(a, a) for a in sys.simple]
    if len(labels) != len(sys.simple):
        raise UsageError(f"{sys.tag} needs {len(sys.simple)} coordinates, got {len(hw)}")
    if any(m.denominator != 1 or m < 0 for m in labels):
        raise UsageError(f"highest weight {tuple(hw)} is not dominant integral for {sys.tag}")
    return tuple(int(m) for m in labels)


def weyl_dim(sys: EvenRootSystem, hw: Sequence) -> int:
    """Dimension of the simple module of highest weight ``hw``."""
    hw = tuple(hw)
    if sys.factors:
        out, pos = 1, 0
        for f in sys.factors:
            out *= weyl_dim(f, hw[pos:pos + f.rank])
            pos += f.rank
        if pos != len(hw):
            raise UsageError(f"{sys.tag} needs {pos} coordinates, got {len(hw)}")
        return out
    return _weyl_dim_cached(sys, dynkin_labels(sys, hw))


@lru_cache(maxsize=65536)
def _weyl_dim_cached(sys: EvenRootSystem, labels: Tuple[int, ...]) -> int:
    # (lam + delta, alpha_j) = (m_j + 1) * (alpha_j, alpha_j) / 2
    halves = [_dot(a, a) / 2 for a in sys.simple]
    num = Fraction(1)
    for coeffs in sys.positive:
        top = sum((c * (m + 1) * h for c, m, h in zip(coeffs, labels, halves)), Fraction(0))
        bottom = sum((c * h for c, h in zip(coeffs, halves)), Fraction(0))
        num *= top / bottom
    if num.denominator != 1:
        raise InternalError(f"Weyl product for {sys.tag} at {labels} is not integral: {num}")
    return int(num)


@lru_cache(maxsize=None)
def sp_row_dim(n: int, r: int) -> int:
    """dim of the sp(2n)-module with highest weight (r, 0, ..., 0)."""
    if r < 0:
        raise UsageError("sp_row_dim needs r >= 0")
    return weyl_dim(C(n), (r,) + (0,) * (n - 1))


def printed_sp_row_dim(n: int, r: int) -> Fraction:
    """The closed form as printed alongside the degree bound (kept for comparison only).

    It does not equal the true dimension; e.g. n = 1 gives (r+2)/2.
    """
    num = Fraction(2 * n + r)
    den = Fraction(2 * n)
    for j in range(2, n + 1):
        num *= (r + j - 1) * (2 * n + r - j + 1)
        den *= (j - 1) * (2 * n - j + 2)
    return num / den


def g2_dim(m1: int, m2: int) -> int:
    """dim of the G2-module with Dynkin labels (m1 short, m2 long)."""
    if m1 < 0 or m2 < 0:
        raise UsageError("g2_dim needs nonnegative labels")
    num = ((m1 + 1) * (m2 + 1) * (m1 + m2 + 2) * (m1 + 2 * m2 + 3)
           * (m1 + 3 * m2 + 4) * (2 * m1 + 3 * m2 + 5))
    q, rem = divmod(num, 120)
    if rem:
        raise InternalError(f"g2_dim({m1}, {m2}) not integral")
    return q


def printed_g2_dim(m1: int, m2: int) -> Fraction:
    """The printed G2 formula, including its repeated (m1+3m2+4) factor."""
    return Fraction((m1 + 1) * (m2 + 1) * (m1 + m2 + 2) * (m1 + 2 * m2 + 3)
                    * (m1 + 3 * m2 + 4) * (m1 + 3 * m2 + 4) * (2 * m1 + 3 * m2 + 5), 120)


def so7_dim(m1: int, m2: int, m3: int) -> int:
    """dim of the so(7)-module with Dynkin labels (m1, m2, m3); m3 is the spin node."""
    if min(m1, m2, m3) < 0:
        raise UsageError("so7_dim needs nonnegative labels")
    num = ((m1 + 1) * (m2 + 1) * (m3 + 1) * (m1 + m2 + 2) * (m2 + m3 + 2)
           * (2 * m2 + m3 + 3) * (m1 + m2 + m3 + 3) * (m1 + 2 * m2 + m3 + 4)
           * (2 * m1 + 2 * m2 + m3 + 5))
    q, rem = divmod(num, 720)
    if rem:
        raise InternalError(f"so7_dim({m1}, {m2}, {m3}) not integral")
    return q


def _int_coord(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise UsageError(f"{what} must be an integer, got {x}")
    return int(x)


def g0_dim(lam: SuperWeight) -> int:
    """Dimension of the simple even-part module with the same highest weight."""
    fam = lam.family
    tag = fam.tag
    if tag == "osp2":
        return weyl_dim(C(fam.n), lam.coeffs)
    a = _int_coord(lam.eps, f"first coordinate of {fam} weight {lam}")
    if min((a,) + lam.coeffs) < 0:
        raise UsageError(f"{fam} weight {lam} has a negative coordinate")
    if tag == "osp32":
        (b,) = lam.coeffs
        return (a + 1) * (b + 1)
    if tag == "d21a":
        b, c = lam.coeffs
        return (a + 1) * (b + 1) * (c + 1)
    if tag == "g3":
        return (a + 1) * g2_dim(*lam.coeffs)
    if tag == "f4":
        return (a + 1) * so7_dim(*lam.coeffs)
    raise UsageError(f"no even-part dimension for {fam}")


def kac_dim(lam: SuperWeight) -> int:
    """dim K(lam) = 2^(2n) * dim L_0(lam) for osp(2|2n)."""
    fam = lam.family
    if fam.tag != "osp2":
        raise UsageError("Kac modules are available for osp(2|2n) only")
    if not is_dominant(build_datum(fam), lam):
        raise UsageError(f"weight {lam} is not dominant")
    return 2 ** (2 * fam.n) * g0_dim(lam)


def _principal_row(i: int) -> int:
    # 0^(i) has delta-part (i, 0, ...) for i >= 0 and (-i-1, 0, ...) for i < 0
    return i if i >= 0 else -i - 1


@lru_cache(maxsize=None)
def kac_dim_principal(n: int, i: int) -> int:
    return 2 ** (2 * n) * sp_row_dim(n, _principal_row(i))


@lru_cache(maxsize=None)
def proj_dim_principal(n: int, i: int) -> int:
    """dim P(0^(i)) = dim K(0^(i)) + dim K(0^(i-1)), from the two-step Kac flag."""
    return kac_dim_principal(n, i) + kac_dim_principal(n, i - 1)


def proj_dim_bounds(lam: SuperWeight) -> Tuple[int, int]:
    """(dim S_0(lam), 2^(dim g_1) * dim S_0(lam)) bracketing dim P(lam)."""
    fam = lam.family
    if fam.tag == "osp2":
        raise UsageError("osp(2|2n) projective covers have exact dimensions; use proj_dim_principal")
    low = g0_dim(lam)
    return low, 2 ** fam.odd_dim * low
