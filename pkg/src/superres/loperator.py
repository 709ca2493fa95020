"""The L-operator on atypical dominant weights of osp(2|2n), its inverse and powers.

    lam^L = w(lam + rho - k*gamma) - rho

gamma is the odd positive root orthogonal to lam+rho, k the least positive
integer making lam+rho-k*gamma regular for the even Weyl group, and w the
signed permutation of the delta-coordinates that makes the result dominant.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from .errors import DomainError, InternalError, UsageError
from .rootdata import RootDatum, SuperWeight, atypicality, is_dominant


@dataclass(frozen=True)
class LStep:
    gamma: Tuple[Fraction, ...]
    k: int
    # omega[j] = (i, s): output slot j takes s * (input delta-coordinate i)
    omega: Tuple[Tuple[int, int], ...]


def _check(datum: RootDatum, lam: SuperWeight):
    if datum.family.tag != "osp2":
        raise UsageError(f"the L-operator is defined for osp(2|2n) only, got {datum.family}")
    if not is_dominant(datum, lam):
        raise UsageError(f"weight {lam} is not dominant")
    at = atypicality(datum, lam)
    if at.degree == 0:
        raise DomainError(f"weight {lam} is typical; the L-operator needs an atypical weight")
    if len(at.witnesses) != 1:
        raise InternalError(f"weight {lam} has {len(at.witnesses)} witnesses; expected exactly one")
    return at.witnesses[0]


def _regular(b) -> bool:
    mags = [abs(x) for x in b]
    return 0 not in mags and len(set(mags)) == len(mags)


def l_step(datum: RootDatum, lam: SuperWeight) -> Tuple[SuperWeight, LStep]:
    gamma = _check(datum, lam)
    rho = datum.rho_vector
    n = datum.family.n
    a = lam.eps + rho[0]
    b = [c + int(r) for c, r in zip(lam.coeffs, rho[1:])]
    (i,) = [j for j in range(n) if gamma[j + 1] != 0]
    s = int(gamma[i + 1])
    cap = 4 * n + sum(abs(c) for c in lam.coeffs) + abs(lam.eps) + 4
    k = 0
    while True:
        k += 1
        if k > cap:
            raise InternalError(f"no admissible k <= {cap} for {lam}")
        shifted = list(b)
        shifted[i] -= s * k
        if _regular(shifted):
            break
    order = sorted(range(n), key=lambda j: -abs(shifted[j]))
    omega = tuple((j, 1 if shifted[j] > 0 else -1) for j in order)
    new_b = [abs(shifted[j]) for j in order]
    result = SuperWeight(datum.family, a - k - rho[0],
                         tuple(x - int(r) for x, r in zip(new_b, rho[1:])))
    return result, LStep(gamma=gamma, k=k, omega=omega)


def l_op(datum: RootDatum, lam: SuperWeight) -> SuperWeight:
    return l_step(datum, lam)[0]


def l_inv(datum: RootDatum, mu: SuperWeight) -> SuperWeight:
    """Preimage of ``mu`` under L via lam = w0^-1(beta - (beta - w0 mu)^L).

    beta = 2n*eps1 and w0 negates every delta-coordinate.  The result is
    checked against ``l_op`` before it is returned.
    """
    _check(datum, mu)
    n = datum.family.n
    beta_eps = 2 * n
    reflected = SuperWeight(datum.family, beta_eps - mu.eps, mu.coeffs)
    try:
        image = l_op(datum, reflected)
    except (UsageError, DomainError) as exc:
        raise InternalError(f"l_inv({mu}): beta - w0*mu = {reflected} left the domain: {exc}") from None
    lam = SuperWeight(datum.family, beta_eps - image.eps, image.coeffs)
    check = l_op(datum, lam)
    if check != mu:
        raise InternalError(f"l_inv({mu}) produced {lam}, but L({lam}) = {check}")
    return lam


def l_power(datum: RootDatum, lam: SuperWeight, l: int) -> SuperWeight:
    """lam^(l): l applications of L (or of its inverse when l < 0)."""
    step = l_op if l >= 0 else l_inv
    for _ in range(abs(l)):
        lam = step(datum, lam)
    return lam


def orbit(datum: RootDatum, lam: SuperWeight, start: int, stop: int):
    """Pairs (l, lam^(l)) for start <= l <= stop, walking outward from l = 0."""
    if start > stop:
        raise UsageError("orbit needs start <= stop")
    out = {}
    cur = lam
    for l in range(0, stop + 1):
        if l >= start:
            out[l] = cur
        if l < stop:
            cur = l_op(datum, cur)
    cur = lam
    for l in range(-1, start - 1, -1):
        cur = l_inv(datum, cur)
        if l <= stop:
            out[l] = cur
    return [(l, out[l]) for l in range(start, stop + 1)]
