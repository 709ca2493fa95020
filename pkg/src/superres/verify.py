"""Bundled verification suites, run by ``superres verify``.

Each suite returns a list of checks ``{"name", "pass", ...}``; output holds
no timings so repeated runs are byte-identical.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Callable, Dict, List, Optional

from .blockdata import BlockTable, d21a_lambda, g3_lambda, locate, osp32_table, g3_table, d21a_table
from .diagrams import core, diagram_of, principal_core, principal_index, principal_weight
from .dimensions import (A1, B3, C, G2, g2_dim, printed_g2_dim, printed_sp_row_dim, so7_dim,
                         sp_row_dim, weyl_dim)
from .growth import (complexity, complexity_report, geometric_report, sequence_degree,
                     z_complexity)
from .loperator import l_inv, l_op, l_power
from .resolutions import (ModuleDescriptor as M, fork_multiset, oracle_multiset,
                          principal_trivial_multiset, term, zigzag_term)
from .rootdata import Family, SuperWeight, atypicality, build_datum, is_dominant

SUITES = ("lemma31", "lemma32", "blocks", "oracle", "counts", "geometry")


def _check(name: str, ok: bool, **detail) -> dict:
    out = {"name": name, "pass": bool(ok)}
    out.update(detail)
    return out


def suite_lemma31(table=None) -> List[dict]:
    checks = []
    for n in range(1, 5):
        datum = build_datum(Family.osp2(n))
        fam = datum.family
        z = (0,) * (n - 1)
        bad = 0
        for d in range(0, 101):
            a = SuperWeight(fam, -d, (d,) + z)
            if l_op(datum, a) != SuperWeight(fam, -d - 1, (d + 1,) + z):
                bad += 1
            if d >= 1:
                b = SuperWeight(fam, 2 * n + d, (d,) + z)
                if l_op(datum, b) != SuperWeight(fam, 2 * n + d - 1, (d - 1,) + z):
                    bad += 1
                if l_inv(datum, l_op(datum, b)) != b:
                    bad += 1
            if l_inv(datum, l_op(datum, a)) != a:
                bad += 1
        if l_op(datum, SuperWeight(fam, 2 * n, (0,) * n)) != SuperWeight(fam, 0, (0,) * n):
            bad += 1
        checks.append(_check(f"closed forms n={n}", bad == 0, mismatches=bad))
        cur, bad = principal_weight(n, 0), 0
        for l in range(1, 41):
            cur = l_op(datum, cur)
            bad += cur != principal_weight(n, l)
        cur = principal_weight(n, 0)
        for l in range(-1, -41, -1):
            cur = l_inv(datum, cur)
            bad += cur != principal_weight(n, l)
        checks.append(_check(f"orbit of 0 n={n}", bad == 0, mismatches=bad))
    return checks


def _exact_degree(seq) -> int:
    return sequence_degree(seq)


def suite_lemma32(table=None) -> List[dict]:
    checks = []
    systems = [A1()] + [C(n) for n in range(1, 6)] + [G2(), B3()]
    triv = {s.tag: weyl_dim(s, (0,) * s.rank) for s in systems}
    checks.append(_check("trivial weight has dimension 1", all(v == 1 for v in triv.values()),
                         dims=triv))
    bad = sum(g2_dim(a, b) != weyl_dim(G2(), (a, b)) for a in range(7) for b in range(7))
    checks.append(_check("g2_dim agrees with the engine", bad == 0, mismatches=bad))
    bad = sum(so7_dim(a, b, c) != weyl_dim(B3(), (a, b, c))
              for a in range(7) for b in range(7) for c in range(7))
    checks.append(_check("so7_dim agrees with the engine", bad == 0, mismatches=bad))
    div = sum(printed_g2_dim(a, b) != g2_dim(a, b) for a in range(7) for b in range(7))
    checks.append(_check("printed G2 product diverges (repeated factor)", div > 0,
                         divergent_points=div, expected="divergence"))
    div = sum(printed_sp_row_dim(n, r) != sp_row_dim(n, r) for n in range(1, 6) for r in range(7))
    checks.append(_check("printed sp row formula diverges", div > 0,
                         divergent_points=div, expected="divergence"))
    for n in range(1, 6):
        deg = _exact_degree([sp_row_dim(n, r) for r in range(0, 60)])
        checks.append(_check(f"sp_row_dim degree n={n}", deg == 2 * n - 1, degree=deg))
    for n in range(1, 5):
        rep = complexity_report(M.simple_principal(n))
        lo, hi = rep.const_min, rep.const_max
        ok = rep.degrees == {"even": 2 * n, "odd": 2 * n} and lo > 0 and hi < Fraction(10 ** 12)
        checks.append(_check(f"dim P_d / d^{2 * n} bounded n={n}", ok,
                             min=str(lo), max=str(hi)))
    return checks


def _atypical_osp2(n: int, bound: int):
    fam = Family.osp2(n)
    for tail in combinations_with_replacement(range(bound, -1, -1), n):
        f = [-(c + n - i) for i, c in enumerate(tail)]
        for fi in f:
            for fm1 in {fi, -fi}:
                eps = fm1 + n
                if abs(eps) <= bound:
                    yield SuperWeight(fam, eps, tail)


def suite_blocks(table=None) -> List[dict]:
    checks = []
    for n in range(1, 4):
        datum = build_datum(Family.osp2(n))
        pc = principal_core(n)
        bad = total = 0
        for lam in _atypical_osp2(n, 30):
            total += 1
            if atypicality(datum, lam).degree != 1:
                bad += 1
                continue
            if (core(diagram_of(datum, lam)) == pc) != (principal_index(lam) is not None):
                bad += 1
        checks.append(_check(f"principal block by core n={n}", bad == 0,
                             weights=total, mismatches=bad))
    g3 = build_datum(Family.g3())
    bad = sum(not is_dominant(g3, g3_table(k).weight_at(l)) for k in range(4) for l in range(61))
    checks.append(_check("G(3) table is dominant (k<=3, l<=60)", bad == 0, mismatches=bad))
    bad = 0
    for p, q in ((1, 1), (2, 3), (3, 2)):
        for k in range(1, 4):
            kp, kq = k * p, k * q
            bad += d21a_lambda(p, q, k, 0) != (1, kp - 1, kq - 1)
            bad += d21a_lambda(p, q, k, -kp) != (kp + 2, 0, kp + kq)
            bad += d21a_lambda(p, q, k, kq) != (kq + 2, kp + kq, 0)
    checks.append(_check("D(2,1;p/q) branch boundaries", bad == 0, mismatches=bad))
    bad = 0
    for fam, tables in ((Family.osp32(), [osp32_table()]),
                        (Family.g3(), [g3_table(k) for k in range(4)]),
                        (Family.d21a(2, 3), [d21a_table(Family.d21a(2, 3), k) for k in range(4)])):
        for t in tables:
            rng = range(-30, 31) if t.two_sided else range(0, 61)
            bad += sum(locate(t.weight_at(l)) != (t.k, l) for l in rng)
    checks.append(_check("block tables invert", bad == 0, mismatches=bad))
    return checks


def suite_oracle(table=None) -> List[dict]:
    checks = []
    for n in range(1, 4):
        bad = sum(zigzag_term(n, 0, d).multiset != principal_trivial_multiset(d) for d in range(65))
        checks.append(_check(f"zigzag matches closed form n={n}", bad == 0, mismatches=bad))
    for l in range(4):
        bad = sum(fork_multiset(l, d) != oracle_multiset("fork", l, d) for d in range(65))
        checks.append(_check(f"fork closed form lambda_{l}", bad == 0, mismatches=bad))
    return checks


def suite_counts(table=None) -> List[dict]:
    checks = []
    bad = 0
    for n in range(1, 4):
        for d in range(40):
            bad += term(M.simple_principal(n), d).count != d + 1
            bad += term(M.kac_principal(n), d).count != 1
    for d in range(40):
        c0 = term(M.osp32_simple(0), d).count
        bad += c0 != (d // 2 + 1 if d % 2 == 0 else (d + 1) // 2)
        if d:
            bad += term(M.osp32_simple(2), d).count != (d + 1 if d % 2 == 0 else d + 2)
        bad += term(M.d21a_simple(1, 1, 1, 0), d).count != d + 1
    checks.append(_check("summand counts", bad == 0, mismatches=bad))
    z_two = ([M.simple_principal(n) for n in range(1, 5)]
             + [M.osp32_simple(l) for l in range(4)]
             + [M.d21a_simple(p, q, k, 0) for p, q in ((1, 1), (2, 3)) for k in range(1, 3)]
             + [M(Family.d21a(p, q), "simple", 0, 0) for p, q in ((1, 1), (2, 3))]
             + [M.g3_simple(k, 0) for k in range(2)])
    for desc in z_two:
        z = z_complexity(desc)
        checks.append(_check(f"z {_name(desc)}", z == 2, z=z))
    for n in range(1, 5):
        z = z_complexity(M.kac_principal(n))
        checks.append(_check(f"z {_name(M.kac_principal(n))}", z == 1, z=z))
    for n in range(1, 5):
        c = complexity(M.simple_principal(n))
        checks.append(_check(f"c {_name(M.simple_principal(n))}", c == 2 * n + 1, c=c))
        c = complexity(M.kac_principal(n))
        checks.append(_check(f"c {_name(M.kac_principal(n))}", c == 2 * n, c=c))
    exc = ([(M.osp32_simple(l), 4) for l in range(4)]
           + [(M.d21a_simple(p, q, k, 0), 5) for p, q in ((1, 1), (2, 3)) for k in range(1, 3)]
           + [(M(Family.d21a(p, q), "simple", 0, 0), 5) for p, q in ((1, 1), (2, 3))]
           + [(M.g3_simple(k, 0), 8) for k in range(2)])
    for desc, want in exc:
        c = complexity(desc)
        checks.append(_check(f"c {_name(desc)}", c == want, c=c))
    if table is None:
        checks.append({"name": "c F(4)", "skipped": "no table"})
    else:
        c = complexity(M.f4_simple(table, 0))
        checks.append(_check("c F(4)", c == 9, c=c, conditional=True, flags=list(table.flags)))
    return checks


def _name(desc: M) -> str:
    if desc.family.tag == "osp2":
        return f"{desc.family} {desc.kind} 0^({desc.label})"
    return f"{desc.family} {desc.kind} lambda_({desc.block},{desc.label})"


def suite_geometry(table=None) -> List[dict]:
    rows = []
    for n in range(1, 5):
        for kind in ("simple", "kac"):
            for a in (0, 1):
                rows.append((Family.osp2(n), kind, a, None))
    for fam in (Family.osp32(), Family.d21a(1, 1), Family.d21a(2, 3),
                Family.d21a(irrational=True), Family.g3()):
        for a in (0, 1):
            rows.append((fam, "simple", a, None))
    checks = []
    for fam, kind, a, t in rows:
        rep = geometric_report(fam, kind, a, t)
        checks.append(_check(f"{fam} {kind} atypical={a}", rep.identity_c and rep.identity_z,
                             report=rep.to_json()))
    if table is None:
        checks.append({"name": "F(4) simple", "skipped": "no table"})
    else:
        for a in (0, 1):
            rep = geometric_report(Family.f4(), "simple", a, table)
            checks.append(_check(f"F(4) simple atypical={a}", rep.identity_c and rep.identity_z,
                                 report=rep.to_json(), conditional=True))
    return checks


_RUNNERS: Dict[str, Callable] = {
    "lemma31": suite_lemma31,
    "lemma32": suite_lemma32,
    "blocks": suite_blocks,
    "oracle": suite_oracle,
    "counts": suite_counts,
    "geometry": suite_geometry,
}


def run_suite(name: str, table: Optional[BlockTable] = None) -> dict:
    """Run one suite, or all of them for ``"all"``."""
    names = SUITES if name == "all" else (name,)
    out = []
    for s in names:
        if s not in _RUNNERS:
            from .errors import UsageError
            raise UsageError(f"unknown suite {s!r}")
        checks = _RUNNERS[s](table)
        ok = all(c.get("pass", True) for c in checks)
        out.append({"suite": s, "pass": ok, "checks": checks})
    return {"pass": all(s["pass"] for s in out), "suites": out}
