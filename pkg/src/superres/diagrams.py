"""f-coordinates, weight diagrams, cores and block membership for osp(2|2n)."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from .errors import ParseError, UsageError
from .rootdata import Family, RootDatum, SuperWeight, atypicality, build_datum, is_dominant

GT, LT, TIMES = ">", "<", "x"
_SYMBOLS = (GT, LT, TIMES)


@dataclass(frozen=True)
class FCoords:
    f_minus1: Fraction
    f: Tuple[int, ...]


def _require_osp2(datum: RootDatum, lam: SuperWeight):
    if datum.family.tag != "osp2":
        raise UsageError(f"weight diagrams are defined for osp(2|2n) only, got {datum.family}")
    if not is_dominant(datum, lam):
        raise UsageError(f"weight {lam} is not dominant for {datum.family}")


def f_coords(datum: RootDatum, lam: SuperWeight) -> FCoords:
    """Pairings of lam+rho with eps1 and each delta_i (so f_1 < ... < f_n < 0)."""
    _require_osp2(datum, lam)
    n = datum.family.n
    # (delta_i, delta_i) = -1 and rho has delta_i-coefficient n-i+1
    f = tuple(-(c + n - i) for i, c in enumerate(lam.coeffs))
    return FCoords(lam.eps - n, f)


@dataclass(frozen=True)
class WeightDiagram:
    """Sparse diagram: ``marks`` holds the non-zero positions, sorted."""

    marks: Tuple[Tuple[int, str], ...] = ()

    def __post_init__(self):
        marks = tuple(sorted(self.marks))
        seen = set()
        for pos, sym in marks:
            if pos < 0 or sym not in _SYMBOLS:
                raise UsageError(f"bad diagram mark {pos}:{sym}")
            if pos in seen:
                raise UsageError(f"position {pos} marked twice")
            seen.add(pos)
        object.__setattr__(self, "marks", marks)

    def at(self, pos: int) -> str:
        return dict(self.marks).get(pos, "0")

    def count(self, sym: str) -> int:
        return sum(1 for _, s in self.marks if s == sym)

    def positions(self, sym: str) -> List[int]:
        return [p for p, s in self.marks if s == sym]

    @property
    def key(self) -> str:
        """Canonical sparse serialization, ``pos:sym`` pairs sorted by position."""
        return ",".join(f"{p}:{s}" for p, s in self.marks)

    @property
    def text(self) -> str:
        """Dense form from position 0 to the last mark, e.g. ``0,<,<,x``; ``0`` when empty."""
        if not self.marks:
            return "0"
        table = dict(self.marks)
        return ",".join(table.get(p, "0") for p in range(self.marks[-1][0] + 1))

    @classmethod
    def parse(cls, text: str) -> "WeightDiagram":
        text = text.strip()
        if not text:
            return cls()
        marks = []
        for pos, sym in enumerate(t.strip() for t in text.split(",")):
            if sym == "0":
                continue
            if sym not in _SYMBOLS:
                raise ParseError(f"unknown diagram symbol {sym!r} at position {pos}")
            marks.append((pos, sym))
        return cls(tuple(marks))

    def __str__(self):
        return self.text


def weight_diagram(fc: FCoords) -> WeightDiagram:
    """Place ``>`` at |f_-1| (integral f_-1 only), ``<`` at each -f_i, merge into ``x``."""
    table = {-fi: LT for fi in fc.f}
    if fc.f_minus1.denominator == 1:
        pos = abs(int(fc.f_minus1))
        table[pos] = TIMES if table.get(pos) == LT else GT
    return WeightDiagram(tuple(table.items()))


def diagram_of(datum: RootDatum, lam: SuperWeight) -> WeightDiagram:
    return weight_diagram(f_coords(datum, lam))


def core(d: WeightDiagram) -> WeightDiagram:
    """Erase every ``x``."""
    return WeightDiagram(tuple((p, s) for p, s in d.marks if s != TIMES))


def same_block(datum: RootDatum, lam: SuperWeight, mu: SuperWeight) -> bool:
    """Atypical weights: equal atypicality and equal cores.

    A typical weight is alone in its block, so two typical weights share a
    block only when they are equal.
    """
    a, b = atypicality(datum, lam).degree, atypicality(datum, mu).degree
    if a != b:
        return False
    if a == 0:
        return lam == mu
    return core(diagram_of(datum, lam)) == core(diagram_of(datum, mu))


def preimages(datum: RootDatum, d: WeightDiagram) -> List[SuperWeight]:
    """Dominant weights whose diagram is ``d`` (at most two: the sign of f_-1)."""
    n = datum.family.n
    lts = d.positions(LT) + d.positions(TIMES)
    gts = d.positions(GT) + d.positions(TIMES)
    if len(lts) != n or len(gts) != 1:
        return []
    f = tuple(sorted(-t for t in lts))
    out = []
    for fm1 in sorted({gts[0], -gts[0]}):
        coeffs = tuple(-fi - (n - i) for i, fi in enumerate(f))
        lam = SuperWeight(datum.family, fm1 + n, coeffs)
        if is_dominant(datum, lam) and diagram_of(datum, lam) == d:
            out.append(lam)
    return out


def principal_weight(n: int, l: int) -> SuperWeight:
    """0^(l): (-l|l,0,...,0) for l >= 0 and (2n+d|d,0,...,0) for l = -d-1."""
    fam = Family.osp2(n)
    if l >= 0:
        return SuperWeight(fam, -l, (l,) + (0,) * (n - 1))
    d = -l - 1
    return SuperWeight(fam, 2 * n + d, (d,) + (0,) * (n - 1))


def principal_index(lam: SuperWeight) -> Optional[int]:
    """The l with lam = 0^(l), or None outside the principal block."""
    if lam.family.tag != "osp2":
        raise UsageError("principal_index is defined for osp(2|2n)")
    n = lam.family.n
    d = lam.coeffs[0]
    if d < 0 or any(lam.coeffs[1:]):
        return None
    if lam.eps == -d:
        return d
    if lam.eps == 2 * n + d:
        return -d - 1
    return None


def principal_core(n: int) -> WeightDiagram:
    datum = build_datum(Family.osp2(n))
    return core(diagram_of(datum, principal_weight(n, 0)))
