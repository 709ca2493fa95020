"""Rate of growth by exact finite differences, complexity, z-complexity and
the geometric identities c = dim X + dim V and z = dim V_f.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

from .errors import InconsistencyError, UnsupportedCase, UsageError
from .resolutions import ModuleDescriptor, term
from .rootdata import Family

DEFAULT_WINDOW = (16, 256)
MIN_TAIL = 8

Degree = Union[int, str]
NOT_POLYNOMIAL = "not-polynomial"


@dataclass(frozen=True)
class GrowthReport:
    c: int
    degrees: Dict[str, Degree]
    window: Tuple[int, int]
    period: int
    class_degrees: Tuple[Degree, ...]
    const_min: Optional[Fraction] = None
    const_max: Optional[Fraction] = None
    flags: Tuple[str, ...] = ()

    def to_json(self) -> dict:
        out = {"c": self.c, "degrees": dict(self.degrees), "window": list(self.window),
               "flags": list(self.flags)}
        if self.const_min is not None:
            out["constants"] = [str(self.const_min), str(self.const_max)]
        return out


def _diff(seq: Sequence[int]) -> List[int]:
    return [b - a for a, b in zip(seq, seq[1:])]


def sequence_degree(seq: Sequence[int]) -> Degree:
    """Degree of the polynomial the tail of ``seq`` follows; -1 for an eventually zero tail.

    The degree is the least k such that the (k+1)-st difference vanishes on a
    tail of length max(8, len/2).
    """
    tail = max(MIN_TAIL, len(seq) // 2)
    if len(seq) < tail + 1:
        raise UsageError(f"need at least {tail + 1} samples, got {len(seq)}")
    if all(x == 0 for x in seq[-tail:]):
        return -1
    cur = list(seq)
    k = 0
    while len(cur) > tail:
        cur = _diff(cur)
        if len(cur) >= tail and all(x == 0 for x in cur[-tail:]):
            return k
        k += 1
    return NOT_POLYNOMIAL


def rate_of_growth(sampler: Callable[[int], int], window: Tuple[int, int] = DEFAULT_WINDOW,
                   period: int = 2, expected_degree: int = 0) -> GrowthReport:
    """Rate of growth c of d -> sampler(d) over ``window``, split by d mod ``period``.

    Each residue class must be exactly polynomial on its tail.  ``degrees``
    reports the even and odd classes (the maximum over their sub-classes).
    """
    dmin, dmax = window
    if dmin < 0 or dmin > dmax:
        raise UsageError(f"bad window {window}")
    if period < 1 or period % 2:
        raise UsageError("period must be a positive even number")
    need = 2 * (expected_degree + 10)
    values = {d: sampler(d) for d in range(dmin, dmax + 1)}
    class_degrees: List[Degree] = []
    flags = []
    for r in range(period):
        seq = [values[d] for d in range(dmin, dmax + 1) if d % period == r]
        if len(seq) < need:
            raise UsageError(f"window {window} gives {len(seq)} samples for d = {r} mod {period}; "
                             f"need {need}")
        class_degrees.append(sequence_degree(seq))
    numeric = [k if k != NOT_POLYNOMIAL else len(range(dmin, dmax + 1, period)) // 2
               for k in class_degrees]
    if NOT_POLYNOMIAL in class_degrees:
        flags.append("not-polynomial: c is a lower bound")
    top = max(numeric)
    c = top + 1 if top >= 0 else 0

    def parity(p: int) -> Degree:
        ks = [class_degrees[r] for r in range(p, period, 2)]
        if NOT_POLYNOMIAL in ks:
            return NOT_POLYNOMIAL
        return max(ks)

    const_min = const_max = None
    if c > 0 and NOT_POLYNOMIAL not in class_degrees:
        ratios = [Fraction(values[d], d ** top) for d in range(max(dmin, 1), dmax + 1)]
        const_min, const_max = min(ratios), max(ratios)
    return GrowthReport(c, {"even": parity(0), "odd": parity(1)}, (dmin, dmax), period,
                        tuple(class_degrees), const_min, const_max, tuple(flags))


# the fork quiver's even-d terms alternate between lambda_0 and lambda_1
# with d mod 4, so its dimension sequences are quasi-polynomial of period 4
PERIOD = 4


def _expected(desc: ModuleDescriptor) -> int:
    if desc.family.tag == "osp2":
        return 2 * desc.family.n
    return {"osp32": 3, "d21a": 4, "g3": 7, "f4": 8}[desc.family.tag]


def _bound_reports(desc: ModuleDescriptor, window) -> Tuple[GrowthReport, GrowthReport]:
    exp = _expected(desc)
    cache = {}

    def t(d):
        if d not in cache:
            cache[d] = term(desc, d)
        return cache[d]

    low = rate_of_growth(lambda d: t(d).dim_lower, window, PERIOD, exp)
    if desc.family.tag == "osp2":
        return low, low
    high = rate_of_growth(lambda d: t(d).dim_upper, window, PERIOD, exp)
    return low, high


def complexity_report(desc: ModuleDescriptor, window=DEFAULT_WINDOW) -> GrowthReport:
    low, high = _bound_reports(desc, window)
    if low.c != high.c or low.degrees != high.degrees:
        raise InconsistencyError(
            f"lower and upper dimension bounds grow differently for {desc.family}: "
            f"c={low.c} {low.degrees} vs c={high.c} {high.degrees}")
    return low


def complexity(desc: ModuleDescriptor, window=DEFAULT_WINDOW) -> int:
    return complexity_report(desc, window).c


def z_complexity_report(desc: ModuleDescriptor, window=DEFAULT_WINDOW) -> GrowthReport:
    return rate_of_growth(lambda d: term(desc, d).count, window, PERIOD, _expected(desc))


def z_complexity(desc: ModuleDescriptor, window=DEFAULT_WINDOW) -> int:
    return z_complexity_report(desc, window).c


# ------------------------------------------------------------ varieties

@dataclass(frozen=True)
class VarietyDims:
    dim_X: int
    dim_V: int
    dim_Vf: int
    root: Optional[str] = None


DETECTING_ROOT = {
    "osp2": "eps1-delta1",
    "osp32": "eps1+delta",
    "d21a": "eps1+eps2+eps3",
    "g3": "eps3+delta",
    "f4": "(eps1+eps2+eps3+delta)/2",
}

_EXCEPTIONAL_X = {"osp32": 3, "d21a": 4, "g3": 7, "f4": 8}


def variety_dims(family: Family, kind: str, atypical: int) -> VarietyDims:
    """Dimensions of the associated variety, support variety and detecting-subalgebra variety."""
    if atypical not in (0, 1):
        raise UsageError(f"atypicality must be 0 or 1, got {atypical}")
    if kind not in ("simple", "kac"):
        raise UsageError(f"unknown module kind {kind!r}")
    if atypical == 0:
        return VarietyDims(0, 0, 0)
    if family.tag == "osp2":
        n = family.n
        if kind == "simple":
            return VarietyDims(2 * n, 1, 2, DETECTING_ROOT["osp2"])
        return VarietyDims(2 * n, 0, 1, DETECTING_ROOT["osp2"])
    if kind == "kac":
        raise UsageError(f"no variety data for Kac modules over {family}")
    return VarietyDims(_EXCEPTIONAL_X[family.tag], 1, 2, DETECTING_ROOT[family.tag])


def representative(family: Family, kind: str, atypical: int, table=None) -> ModuleDescriptor:
    """A module of the given shape: the trivial-block simple or Kac module, or a typical one."""
    from .rootdata import SuperWeight

    if atypical == 0:
        if family.tag == "osp2":
            # a non-integral first coordinate is typical for every n
            w = SuperWeight(family, Fraction(1, 2), (0,) * family.n)
        else:
            w = _typical_exceptional(family, table)
        return ModuleDescriptor(family, "typical", weight=w, table=table)
    if family.tag == "osp2":
        return ModuleDescriptor(family, kind, 0)
    if kind != "simple":
        raise UsageError(f"no Kac module resolutions for {family}")
    if family.tag == "f4" and table is None:
        raise UnsupportedCase("F(4) needs an external block table")
    return ModuleDescriptor(family, "simple", 0, 0, table)


def _typical_exceptional(family: Family, table):
    from .blockdata import locate
    from .rootdata import SuperWeight, build_datum, is_dominant

    if family.tag == "f4" and table is None:
        raise UnsupportedCase("F(4) needs an external block table")
    datum = build_datum(family)
    for a in range(3, 40):
        for b in range(a):
            w = SuperWeight(family, a, (b,) * family.tail_length)
            if is_dominant(datum, w) and locate(w, table) is None:
                return w
    raise UnsupportedCase(f"no typical weight found for {family}")


@dataclass(frozen=True)
class GeometricReport:
    family: str
    kind: str
    atypical: int
    c: int
    z: int
    dim_X: int
    dim_V: int
    dim_Vf: int
    root: Optional[str]
    identity_c: bool
    identity_z: bool
    flags: Tuple[str, ...] = ()

    def to_json(self) -> dict:
        out = {"family": self.family, "kind": self.kind, "atypical": self.atypical,
               "c": self.c, "z": self.z, "dim_X": self.dim_X, "dim_V": self.dim_V,
               "dim_Vf": self.dim_Vf, "identity_c": self.identity_c,
               "identity_z": self.identity_z}
        if self.root:
            out["root"] = self.root
        if self.flags:
            out["flags"] = list(self.flags)
        return out


def geometric_report(family: Family, kind: str, atypical: int, table=None,
                     window=DEFAULT_WINDOW) -> GeometricReport:
    dims = variety_dims(family, kind, atypical)
    desc = representative(family, kind, atypical, table)
    c = complexity(desc, window)
    z = z_complexity(desc, window)
    flags = tuple(table.flags) + ("external",) if table is not None and table.external else ()
    return GeometricReport(str(family), kind, atypical, c, z, dims.dim_X, dims.dim_V, dims.dim_Vf,
                           dims.root, c == dims.dim_X + dims.dim_V, z == dims.dim_Vf, flags)
