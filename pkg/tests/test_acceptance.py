"""Acceptance criteria 1-11, one test each.  Every test prints a PASS/FAIL line."""
import subprocess
import sys
import time
from fractions import Fraction
from itertools import combinations_with_replacement
from pathlib import Path

from superres.blockdata import f4_table_from_file
from superres.diagrams import core, diagram_of, principal_core, principal_index
from superres.dimensions import (A1, B3, C, G2, g2_dim, printed_g2_dim, printed_sp_row_dim,
                                 so7_dim, sp_row_dim, weyl_dim)
from superres.growth import (complexity, complexity_report, geometric_report, sequence_degree,
                             z_complexity)
from superres.loperator import l_inv, l_op
from superres.resolutions import ModuleDescriptor as M, principal_trivial_multiset, term, zigzag_term
from superres.rootdata import Family, SuperWeight, atypicality, build_datum, is_dominant

FIXTURE = Path(__file__).parent / "fixtures" / "f4_extrapolated.txt"
WINDOW = (16, 256)
D21A_ALPHAS = [(1, 1), (2, 3)]


def report(n, ok, detail=""):
    print(f"{'PASS' if ok else 'FAIL'} criterion {n}: {detail}")
    assert ok, detail


def test_criterion_01_l_orbit():
    t0 = time.perf_counter()
    bad = []
    for n in range(1, 5):
        D = build_datum(Family.osp2(n))
        z = (0,) * (n - 1)

        def W(eps, *tail):
            return SuperWeight(Family.osp2(n), eps, tail)

        cases = [(W(2 * n, *(0,) * n), W(0, *(0,) * n))]
        for d in range(101):
            cases.append((W(-d, d, *z), W(-d - 1, d + 1, *z)))
            if d:
                cases.append((W(2 * n + d, d, *z), W(2 * n + d - 1, d - 1, *z)))
        for lam, want in cases:
            got = l_op(D, lam)
            if got != want or l_inv(D, got) != lam:
                bad.append((n, str(lam)))
    dt = time.perf_counter() - t0
    report(1, not bad and dt < 5, f"{len(bad)} mismatches, {dt:.2f}s (limit 5s)")


def test_criterion_02_principal_block():
    bad = checked = 0
    for n in range(1, 4):
        fam = Family.osp2(n)
        D = build_datum(fam)
        zero = principal_core(n)
        for tail in combinations_with_replacement(range(30, -1, -1), n):
            for eps in range(-30, 31):
                lam = SuperWeight(fam, eps, tail)
                if not is_dominant(D, lam) or atypicality(D, lam).degree == 0:
                    continue
                checked += 1
                if (core(diagram_of(D, lam)) == zero) != (principal_index(lam) is not None):
                    bad += 1
    report(2, bad == 0 and checked > 0, f"{checked} atypical dominant weights, {bad} mismatches")


def test_criterion_03_simple_complexity():
    t0 = time.perf_counter()
    rows = []
    for n in range(1, 5):
        rep = complexity_report(M.simple_principal(n, 0), WINDOW)
        rows.append(rep.c == 2 * n + 1 and rep.degrees == {"even": 2 * n, "odd": 2 * n})
    dt = time.perf_counter() - t0
    report(3, all(rows) and dt < 30, f"c = 2n+1 for n=1..4: {rows}, {dt:.2f}s (limit 30s)")


def test_criterion_04_kac_complexity():
    got = [complexity(M.kac_principal(n, 0), WINDOW) for n in range(1, 5)]
    report(4, got == [2, 4, 6, 8], f"c(K) for n=1..4 = {got}")


def test_criterion_05_dimension_sandwich():
    lines, ok = [], True
    for n in range(1, 5):
        ratios = [Fraction(term(M.simple_principal(n, 0), d).dim_lower, d ** (2 * n))
                  for d in range(WINDOW[0], WINDOW[1] + 1)]
        lo, hi = min(ratios), max(ratios)
        ok &= 0 < lo <= hi
        lines.append(f"n={n} min={float(lo):.6g} max={float(hi):.6g}")
    degrees = [sequence_degree([sp_row_dim(n, r) for r in range(60)]) for n in range(1, 6)]
    ok &= degrees == [2 * n - 1 for n in range(1, 6)]
    report(5, ok, "; ".join(lines) + f"; sp_row degrees {degrees}")


def test_criterion_06_z_complexity():
    twos = [M.simple_principal(n, 0) for n in range(1, 5)]
    twos += [M.osp32_simple(l) for l in range(4)]
    twos += [M.d21a_simple(p, q, k, 0) for p, q in D21A_ALPHAS for k in range(3)]
    twos += [M.g3_simple(k, 0) for k in range(2)]
    got2 = [z_complexity(desc, WINDOW) for desc in twos]
    got1 = [z_complexity(M.kac_principal(n, 0), WINDOW) for n in range(1, 5)]
    report(6, set(got2) == {2} and set(got1) == {1}, f"simples {got2}; Kac {got1}")


def test_criterion_07_oracle_equivalence():
    bad = sum(zigzag_term(n, 0, d).multiset != principal_trivial_multiset(d)
              for n in range(1, 4) for d in range(65))
    report(7, bad == 0, f"{bad} mismatches over n<=3, d<=64")


def test_criterion_08_exceptional_complexities():
    osp32 = [complexity(M.osp32_simple(l), WINDOW) for l in range(4)]
    d21a = [complexity(M.d21a_simple(p, q, k, 0), WINDOW) for p, q in D21A_ALPHAS for k in range(3)]
    g3 = [complexity(M.g3_simple(k, 0), WINDOW) for k in range(2)]
    ok = set(osp32) == {4} and set(d21a) == {5} and set(g3) == {8}
    table = f4_table_from_file(FIXTURE)
    f4 = complexity(M.f4_simple(table, 0), (16, 280))
    report(8, ok and f4 == 9, f"osp(3|2) {osp32}; D(2,1;a) {d21a}; G(3) {g3}; "
           f"F(4) {f4} (conditional: extrapolated fixture table)")


def test_criterion_09_weyl_engine():
    systems = [A1()] + [C(n) for n in range(1, 6)] + [G2(), B3()]
    trivial = all(weyl_dim(s, (0,) * s.rank) == 1 for s in systems)
    r = range(7)
    agree = all(g2_dim(a, b) == weyl_dim(G2(), (a, b)) for a in r for b in r)
    agree &= all(so7_dim(a, b, c) == weyl_dim(B3(), (a, b, c)) for a in r for b in r for c in r)
    # the printed closed forms are expected to diverge from the engine
    diverge = printed_g2_dim(0, 0) != 1 and printed_sp_row_dim(1, 1) != sp_row_dim(1, 1)
    report(9, trivial and agree and diverge,
           f"trivial={trivial} closed forms agree={agree} printed forms diverge={diverge}")


def test_criterion_10_geometric_identities():
    rows = [(Family.osp2(n), kind, a) for n in range(1, 5) for kind in ("simple", "kac")
            for a in (0, 1)]
    rows += [(fam, "simple", a) for fam in (Family.osp32(), Family.d21a(1, 1), Family.d21a(2, 3),
                                            Family.g3()) for a in (0, 1)]
    bad = []
    for fam, kind, a in rows:
        rep = geometric_report(fam, kind, a)
        if not (rep.identity_c and rep.identity_z):
            bad.append((str(fam), kind, a))
    table = f4_table_from_file(FIXTURE)
    f4 = [geometric_report(Family.f4(), "simple", a, table) for a in (0, 1)]
    f4_ok = all(r.identity_c and r.identity_z for r in f4)
    report(10, not bad and f4_ok, f"{len(rows)} rows, failures {bad}; "
           f"F(4) rows {'hold' if f4_ok else 'fail'} (conditional)")


def test_criterion_11_determinism():
    cmd = [sys.executable, "-m", "superres", "verify", "--suite", "all"]
    runs = [subprocess.run(cmd, capture_output=True, timeout=300) for _ in range(2)]
    same = runs[0].stdout == runs[1].stdout and runs[0].stdout
    codes = [r.returncode for r in runs]
    report(11, bool(same) and codes == [0, 0],
           f"byte-identical={bool(same)} exit codes={codes} ({len(runs[0].stdout)} bytes)")
