"""Atypical block weight tables for osp(3|2), D(2,1;alpha), G(3) and F(4).

Each block is a sequence l -> lambda_l of dominant weights.  The blocks of
osp(3|2), G(3), F(4) and the principal block of D(2,1;alpha) are indexed by
l >= 0; the blocks Gamma_k (k >= 1) of D(2,1;p/q) are indexed by l in Z.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Callable, Dict, Iterable, Optional, Tuple, Union

from .errors import ParameterError, ParseError, UnsupportedCase, UsageError
from .rootdata import Family, SuperWeight, build_datum, is_dominant

Triple = Tuple[int, ...]


def _check_pq(p: int, q: int):
    if p < 1 or q < 1 or gcd(p, q) != 1:
        raise ParameterError(f"need coprime p, q >= 1, got p={p}, q={q}")


def osp32_lambda(l: int) -> Tuple[int, int]:
    """lambda_0 = (0,0) and lambda_l = (l-1, l) for l >= 1."""
    if l < 0:
        raise UsageError(f"osp(3|2) block index must be >= 0, got {l}")
    return (0, 0) if l == 0 else (l - 1, l)


def d21a_lambda(p: int, q: int, k: int, l: int) -> Triple:
    """lambda_{k,l} for D(2,1;p/q); the first matching branch wins."""
    _check_pq(p, q)
    if k < 0:
        raise ParameterError(f"block index k must be >= 0, got {k}")
    kp, kq = k * p, k * q
    if l <= -kp:
        return (-l + 2, -l - kp, -l + kq)
    if -kp + 1 <= l <= 0:
        return (-l + 1, l + kp - 1, -l + kq - 1)
    if 0 <= l <= kq - 1:
        return (l + 1, l + kp - 1, -l + kq - 1)
    return (l + 2, l + kp, l - kq)


def d21a_principal(l: int) -> Triple:
    """Principal block of D(2,1;alpha): (0,0,0), then (l+1, l-1, l-1) for l >= 1.

    For l >= 1 this is the k = 0 table entry lambda_{0,l-1}.
    """
    if l < 0:
        raise UsageError(f"principal block index must be >= 0, got {l}")
    return (0, 0, 0) if l == 0 else (l + 1, l - 1, l - 1)


def g3_lambda(k: int, l: int) -> Triple:
    if k < 0 or l < 0:
        raise UsageError(f"G(3) block indices must be >= 0, got k={k}, l={l}")
    if k == 0 and l == 0:
        return (0, 0, 0)
    if k == 0 and l == 1:
        return (5, 0, 0)
    if l == 0:
        return (2, 0, k - 1)
    if l == 1:
        return (3, 0, k - 1)
    if 2 <= l <= k:
        return (l + 2, 2 * l - 2, k - l)
    if k + 1 <= l <= 3 * k:
        return (l + 3, 3 * k - l, l - k - 1)
    return (l + 4, l - 3 * k - 1, 2 * k)


@dataclass(frozen=True)
class BlockTable:
    """One atypical block: l -> weight on ``l_range`` (``None`` ends are unbounded)."""

    family: Family
    k: int
    weight_at_fn: Callable[[int], Triple] = field(repr=False, compare=False)
    l_range: Tuple[Optional[int], Optional[int]] = (0, None)
    casimir: Optional[Fraction] = None
    provenance: str = "closed-form"
    flags: Tuple[str, ...] = ()
    rows: Optional[Tuple[Tuple[int, Triple], ...]] = field(default=None, repr=False)

    def contains(self, l: int) -> bool:
        lo, hi = self.l_range
        return (lo is None or l >= lo) and (hi is None or l <= hi)

    def weight_at(self, l: int) -> SuperWeight:
        if not self.contains(l):
            raise UnsupportedCase(f"index {l} outside the block's range {self.l_range}")
        a, *rest = self.weight_at_fn(l)
        return SuperWeight(self.family, a, tuple(rest))

    @property
    def two_sided(self) -> bool:
        return self.l_range[0] is None

    @property
    def external(self) -> bool:
        return self.provenance == "external"


def osp32_table() -> BlockTable:
    return BlockTable(Family.osp32(), 0, osp32_lambda, casimir=Fraction(0))


def d21a_table(family: Family, k: int) -> BlockTable:
    if family.tag != "d21a":
        raise UsageError(f"expected a D(2,1;alpha) family, got {family}")
    if k < 0:
        raise ParameterError(f"block index k must be >= 0, got {k}")
    if family.irrational:
        if k != 0:
            raise UnsupportedCase("irrational alpha has only the principal atypical block")
        return BlockTable(family, 0, d21a_principal, flags=("irrational",))
    p, q = family.p, family.q
    casimir = Fraction(p * (p + q) * k * k, 2)
    if k == 0:
        return BlockTable(family, 0, d21a_principal, casimir=casimir)
    return BlockTable(family, k, lambda l: d21a_lambda(p, q, k, l), (None, None), casimir=casimir)


def g3_table(k: int) -> BlockTable:
    if k < 0:
        raise ParameterError(f"block index k must be >= 0, got {k}")
    return BlockTable(Family.g3(), k, lambda l: g3_lambda(k, l), casimir=Fraction(6 * k * (k + 1)))


def f4_table_load(rows: Iterable[Tuple[int, Triple]], flags: Tuple[str, ...] = ()) -> BlockTable:
    """Build an F(4) block from (l, (a, m1, m2, m3)) rows on a contiguous range."""
    family = Family.f4()
    table: Dict[int, Triple] = {}
    for l, w in rows:
        if l in table:
            raise ParseError(f"duplicate index l={l} in F(4) table")
        w = tuple(int(x) for x in w)
        if len(w) != 4:
            raise ParseError(f"F(4) row for l={l} needs 4 coordinates, got {len(w)}")
        lam = SuperWeight(family, w[0], w[1:])
        if not is_dominant(build_datum(family), lam):
            raise ParseError(f"F(4) row for l={l} is not dominant: {lam}")
        table[l] = w
    if not table:
        raise ParseError("F(4) table is empty")
    lo, hi = min(table), max(table)
    if len(table) != hi - lo + 1:
        raise ParseError(f"F(4) table indices are not contiguous on [{lo}, {hi}]")
    # the fork structure wants index 0 at the first row
    shifted = tuple((l - lo, table[l]) for l in range(lo, hi + 1))
    lookup = dict(shifted)
    return BlockTable(family, 0, lookup.__getitem__, (0, hi - lo), provenance="external",
                      flags=tuple(flags), rows=shifted)


def parse_f4_text(text: str):
    """Rows and flags from ``l a m1 m2 m3`` lines; a comment mentioning "extrapolated" sets that flag."""
    rows = []
    flags = []
    for num, raw in enumerate(text.splitlines(), 1):
        line, _, comment = raw.partition("#")
        if "extrapolated" in comment.lower() and "extrapolated" not in flags:
            flags.append("extrapolated")
        if not line.strip():
            continue
        parts = line.split()
        if len(parts) != 5:
            raise ParseError(f"line {num}: expected 'l a m1 m2 m3', got {raw.strip()!r}")
        try:
            vals = [int(t) for t in parts]
        except ValueError:
            raise ParseError(f"line {num}: non-integer entry in {raw.strip()!r}") from None
        rows.append((vals[0], tuple(vals[1:])))
    return tuple(rows), tuple(flags)


def f4_table_from_file(path: Union[str, os.PathLike]) -> BlockTable:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read F(4) table {path}: {exc.strerror}") from None
    rows, flags = parse_f4_text(text)
    return f4_table_load(rows, flags)


def _d21a_locate(family: Family, w: Triple) -> Optional[Tuple[int, int]]:
    a, b, c = w
    if family.irrational:
        if w == (0, 0, 0):
            return (0, 0)
        l = a - 1
        return (0, l) if l >= 1 and w == d21a_principal(l) else None
    if w == (0, 0, 0):
        return (0, 0)
    p, q = family.p, family.q
    # l from the first coordinate, then k from the second, per branch
    candidates = ((2 - a, lambda l: -l - b), (1 - a, lambda l: b - l + 1),
                  (a - 1, lambda l: b - l + 1), (a - 2, lambda l: b - l))
    for l, kp_of in candidates:
        kp = kp_of(l)
        if kp < 0 or kp % p:
            continue
        k = kp // p
        if d21a_lambda(p, q, k, l) != w:
            continue
        if k == 0:
            return (0, abs(l) + 1)
        return (k, l)
    return None


def _g3_locate(w: Triple) -> Optional[Tuple[int, int]]:
    a, b, c = w
    cands = [(0, 0), (0, 1), (c + 1, 0), (c + 1, 1), (c + a - 2, a - 2), (c // 2, a - 4)]
    if (b + a - 3) % 3 == 0:
        cands.append(((b + a - 3) // 3, a - 3))
    for k, l in cands:
        if k >= 0 and l >= 0 and g3_lambda(k, l) == w:
            return (k, l)
    return None


def locate(lam: SuperWeight, table: Optional[BlockTable] = None) -> Optional[Tuple[int, int]]:
    """(k, l) with lam = lambda_{k,l}, or None when lam is typical."""
    tag = lam.family.tag
    if lam.eps.denominator != 1:
        return None
    w = (int(lam.eps),) + lam.coeffs
    if tag == "osp32":
        if w == (0, 0):
            return (0, 0)
        return (0, w[1]) if w[1] >= 1 and w[0] == w[1] - 1 else None
    if tag == "d21a":
        return _d21a_locate(lam.family, w)
    if tag == "g3":
        return _g3_locate(w)
    if tag == "f4":
        if table is None:
            raise UnsupportedCase("F(4) atypicality needs an external block table")
        for l, row in table.rows:
            if row == w:
                return (table.k, l)
        return None
    raise UsageError(f"no block table for {lam.family}")


def block_table(family: Family, k: int = 0, table: Optional[BlockTable] = None) -> BlockTable:
    """The block Gamma_k of an exceptional family."""
    if family.tag == "osp32":
        if k != 0:
            raise UnsupportedCase("osp(3|2) has only the principal atypical block here")
        return osp32_table()
    if family.tag == "d21a":
        return d21a_table(family, k)
    if family.tag == "g3":
        return g3_table(k)
    if family.tag == "f4":
        if table is None:
            raise UnsupportedCase("F(4) blocks need an external table")
        return table
    raise UsageError(f"no block tables for {family}")
