"""Minimal projective resolution terms: closed forms and a kernel-layer oracle.

Every block handled here has projective covers of Loewy length three,

    P(v) = v / N(v) / v,

where N(v) is the multiset of neighbours of v in the block's Ext-quiver.
Two quivers occur: the chain (Z, i -> i +- 1) of the osp(2|2n) principal
block and of the D(2,1;p/q) blocks with k >= 1, and the fork

    0 - 2,  1 - 2,  2 - 3,  3 - 4, ...

of the osp(3|2) principal block and of every block equivalent to it.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Tuple

from .blockdata import BlockTable, block_table
from .diagrams import principal_weight
from .dimensions import kac_dim, proj_dim_bounds, proj_dim_principal
from .errors import InternalError, UnsupportedCase, UsageError
from .rootdata import Family, SuperWeight, atypicality, build_datum, is_dominant

KINDS = ("simple", "kac", "typical")


@dataclass(frozen=True)
class ModuleDescriptor:
    """Which module to resolve.

    ``label`` is the index l within block ``block`` (the k of Gamma_k).
    For osp(2|2n) it is the l of 0^(l).  ``weight`` is only used by the
    ``typical`` kind.
    """

    family: Family
    kind: str = "simple"
    label: int = 0
    block: int = 0
    table: Optional[BlockTable] = field(default=None, compare=False)
    weight: Optional[SuperWeight] = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise UsageError(f"unknown module kind {self.kind!r}")
        if self.kind == "typical":
            if self.weight is None or self.weight.family != self.family:
                raise UsageError("a typical descriptor needs a weight of the same family")
            datum = build_datum(self.family)
            if not is_dominant(datum, self.weight):
                raise UsageError(f"weight {self.weight} is not dominant")
            if atypicality(datum, self.weight, table=self.table).degree != 0:
                raise UsageError(f"weight {self.weight} is atypical")

    @classmethod
    def simple_principal(cls, n: int, l: int = 0) -> "ModuleDescriptor":
        return cls(Family.osp2(n), "simple", l)

    @classmethod
    def kac_principal(cls, n: int, l: int = 0) -> "ModuleDescriptor":
        return cls(Family.osp2(n), "kac", l)

    @classmethod
    def osp32_simple(cls, l: int) -> "ModuleDescriptor":
        return cls(Family.osp32(), "simple", l)

    @classmethod
    def d21a_simple(cls, p: int, q: int, k: int, l: int) -> "ModuleDescriptor":
        return cls(Family.d21a(p, q), "simple", l, k)

    @classmethod
    def g3_simple(cls, k: int, l: int) -> "ModuleDescriptor":
        return cls(Family.g3(), "simple", l, k)

    @classmethod
    def f4_simple(cls, table: BlockTable, l: int) -> "ModuleDescriptor":
        return cls(Family.f4(), "simple", l, table.k, table)

    @property
    def is_osp2(self) -> bool:
        return self.family.tag == "osp2"

    def block_table(self) -> BlockTable:
        return block_table(self.family, self.block, self.table)


@dataclass(frozen=True)
class Summand:
    index: int
    label: str
    mult: int


@dataclass(frozen=True)
class ResolutionTerm:
    d: int
    summands: Tuple[Summand, ...]
    dim_lower: int
    dim_upper: int
    flags: Tuple[str, ...] = ()
    provenance: Optional[str] = None

    @property
    def count(self) -> int:
        return sum(s.mult for s in self.summands)

    @property
    def multiset(self) -> Counter:
        return Counter({s.index: s.mult for s in self.summands})

    def to_json(self) -> dict:
        out = {
            "d": self.d,
            "summands": [{"index": s.index, "label": s.label, "mult": s.mult} for s in self.summands],
            "dim_lower": str(self.dim_lower),
            "dim_upper": str(self.dim_upper),
            "count": self.count,
        }
        if self.flags:
            out["flags"] = list(self.flags)
        if self.provenance:
            out["provenance"] = self.provenance
        return out


# ---------------------------------------------------------------- quivers

def chain_neighbors(v: int) -> Tuple[int, ...]:
    return (v - 1, v + 1)


def fork_neighbors(v: int) -> Tuple[int, ...]:
    if v < 0:
        raise InternalError(f"fork quiver has no vertex {v}")
    if v in (0, 1):
        return (2,)
    if v == 2:
        return (0, 1, 3)
    return (v - 1, v + 1)


class KernelOracle:
    """Resolution terms by tracking the top and bottom layers of each kernel.

    The kernel Omega_d has top T and socle B.  Its cover is the sum of P(t),
    t in T; the next kernel has top N(T) - B and socle T.
    """

    def __init__(self, neighbors: Callable[[int], Tuple[int, ...]], start: int):
        self.neighbors = neighbors
        self.tops: List[Counter] = [Counter({start: 1})]
        self._bottom = Counter()

    def _advance(self):
        top = self.tops[-1]
        middle = Counter()
        for v, m in top.items():
            for w in self.neighbors(v):
                middle[w] += m
        if middle & self._bottom != self._bottom:
            raise InternalError(f"socle {dict(self._bottom)} not inside radical layer {dict(middle)}")
        new_top = middle - self._bottom
        self._bottom = top
        self.tops.append(new_top)

    def top(self, d: int) -> Counter:
        while len(self.tops) <= d:
            self._advance()
        return self.tops[d]


_ORACLES: Dict[Tuple[str, int], KernelOracle] = {}


def _oracle(graph: str, start: int) -> KernelOracle:
    key = (graph, start)
    if key not in _ORACLES:
        nb = chain_neighbors if graph == "chain" else fork_neighbors
        _ORACLES[key] = KernelOracle(nb, start)
    return _ORACLES[key]


def oracle_multiset(graph: str, start: int, d: int) -> Counter:
    if d < 0:
        raise UsageError("d must be >= 0")
    return Counter(_oracle(graph, start).top(d))


# ---------------------------------------------------------- closed forms

def principal_trivial_multiset(d: int) -> Counter:
    """P_d = P^(-d) + P^(-d+2) + ... + P^(d) for the trivial osp(2|2n)-module."""
    return Counter(range(-d, d + 1, 2))


def chain_multiset(l: int, d: int) -> Counter:
    """P(l+-d) + P(l+-(d-2)) + ..., with P(l) once when d is even."""
    out = Counter()
    for i in range(d % 2, d + 1, 2):
        out[l + i] += 1
        if i:
            out[l - i] += 1
    return out


def _down(top: int, bottom: int, mult: int = 1) -> Counter:
    return Counter({i: mult for i in range(top, bottom - 1, -2)})


def fork_multiset(l: int, d: int) -> Counter:
    """Closed forms for S(lambda_0) .. S(lambda_3) over the fork quiver."""
    if l in (0, 1):
        if d == 0:
            return Counter({l: 1})
        if d % 2:
            return _down(d + 1, 2)
        tail = 0 if d % 4 == 0 else 1
        if l == 1:
            tail = 1 - tail
        out = _down(d + 1, 3)
        out[tail] += 1
        return out
    if l == 2:
        if d == 0:
            return Counter({2: 1})
        out = Counter({d + 2: 1})
        if d % 2 == 0:
            return out + _down(d, 2, 2)
        return out + _down(d, 3, 2) + Counter({1: 1, 0: 1})
    if l == 3:
        if d == 0:
            return Counter({3: 1})
        if d == 1:
            return Counter({4: 1, 2: 1})
        if d == 2:
            return Counter({5: 1, 3: 1, 1: 1, 0: 1})
        out = Counter({d + 3: 1, d + 1: 1})
        if d % 2:
            return out + _down(d - 1, 2, 2)
        return out + _down(d - 1, 3, 2) + Counter({1: 1, 0: 1})
    raise UnsupportedCase(f"no closed form for lambda_{l}; use the oracle")


# ------------------------------------------------------------- dispatch

def _osp2_label(n: int, i: int) -> str:
    return str(principal_weight(n, i))


def _multiset_for(desc: ModuleDescriptor, d: int) -> Tuple[Counter, Tuple[str, ...]]:
    fam = desc.family
    if desc.kind == "typical":
        return (Counter({0: 1}) if d == 0 else Counter()), ()
    if fam.tag == "osp2":
        if desc.kind == "kac":
            return Counter({desc.label - d: 1}), ()
        if desc.label == 0:
            return principal_trivial_multiset(d), ()
        return oracle_multiset("chain", desc.label, d), ("oracle",)
    if desc.kind != "simple":
        raise UnsupportedCase(f"only simple modules are resolved for {fam}")
    table = desc.block_table()
    if table.two_sided:
        return chain_multiset(desc.label, d), ()
    if desc.label < 0:
        raise UnsupportedCase(f"block index must be >= 0 for {fam}, got {desc.label}")
    if desc.label <= 3:
        return fork_multiset(desc.label, d), ()
    return oracle_multiset("fork", desc.label, d), ("oracle",)


def _bounds_for(desc: ModuleDescriptor, index: int) -> Tuple[int, int, str]:
    fam = desc.family
    if desc.kind == "typical":
        lam = desc.weight
        if fam.tag == "osp2":
            dim = kac_dim(lam)
            return dim, dim, str(lam)
        lo, hi = proj_dim_bounds(lam)
        return lo, hi, str(lam)
    if fam.tag == "osp2":
        dim = proj_dim_principal(fam.n, index)
        return dim, dim, _osp2_label(fam.n, index)
    return _table_bounds(desc.block_table(), index)


@lru_cache(maxsize=None)
def _table_bounds(table: BlockTable, index: int) -> Tuple[int, int, str]:
    lam = table.weight_at(index)
    lo, hi = proj_dim_bounds(lam)
    return lo, hi, str(lam)


def term(desc: ModuleDescriptor, d: int) -> ResolutionTerm:
    """The d-th term of the minimal projective resolution of ``desc``."""
    if d < 0:
        raise UsageError(f"d must be >= 0, got {d}")
    ms, flags = _multiset_for(desc, d)
    summands = []
    low = high = 0
    for index in sorted(ms, reverse=True):
        mult = ms[index]
        lo, hi, label = _bounds_for(desc, index)
        low += mult * lo
        high += mult * hi
        summands.append(Summand(index, label, mult))
    if desc.kind != "typical" and not summands:
        raise InternalError(f"empty resolution term at d={d} for {desc}")
    table = desc.table
    if table is not None and table.external:
        flags = flags + tuple(table.flags)
    provenance = "external" if table is not None and table.external else None
    return ResolutionTerm(d, tuple(summands), low, high, flags, provenance)


def iter_terms(desc: ModuleDescriptor, dmin: int, dmax: int):
    for d in range(dmin, dmax + 1):
        yield term(desc, d)


def zigzag_term(n: int, l: int, d: int) -> ResolutionTerm:
    """Oracle term for S(0^(l)) over osp(2|2n), independent of the closed forms."""
    if n < 1:
        raise UsageError("n must be >= 1")
    ms = oracle_multiset("chain", l, d)
    summands = tuple(Summand(i, _osp2_label(n, i), ms[i]) for i in sorted(ms, reverse=True))
    dim = sum(s.mult * proj_dim_principal(n, s.index) for s in summands)
    return ResolutionTerm(d, summands, dim, dim, ("oracle",))


def term_dim_bounds(desc: ModuleDescriptor, d: int) -> Tuple[int, int]:
    t = term(desc, d)
    return t.dim_lower, t.dim_upper
