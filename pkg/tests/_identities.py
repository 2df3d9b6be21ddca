"""Shared symbolic check: the integrated double-cover volume equals the
closed form identically, modulo the threshold's defining quadratic relation."""

from fractions import Fraction as F


def _poly(**mono):
    return {tuple(mono.get(k, 0) for k in ("d2", "dl", "l2", "m")): F(1)}


def _scale(p, c):
    return {e: c * v for e, v in p.items()}


def _add(*ps):
    out = {}
    for p in ps:
        for e, v in p.items():
            out[e] = out.get(e, F(0)) + v
    return {e: v for e, v in out.items() if v}


def _mul(p, q):
    out = {}
    for e1, v1 in p.items():
        for e2, v2 in q.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            out[e] = out.get(e, F(0)) + v1 * v2
    return {e: v for e, v in out.items() if v}


def abelian_closed_form_identity_holds() -> bool:
    """3 * int_0^m 2(d2 - 2t dl + t^2 l2) dt == (4 d2 l2 - 4 dl^2)/l2 * m
    + 2 dl d2 / l2, as polynomials in (d2, dl, l2, m) modulo
    l2 m^2 - 2 dl m + d2 (pseudo-division in m)."""
    lhs = _add(_scale(_poly(d2=1, m=1), F(6)), _scale(_poly(dl=1, m=2), F(-6)),
               _scale(_poly(l2=1, m=3), F(2)))
    rhs_times_l2 = _add(
        _scale(_poly(d2=1, l2=1, m=1), F(4)), _scale(_poly(dl=2, m=1), F(-4)),
        _scale(_poly(dl=1, d2=1), F(2)),
    )
    diff = _add(_mul(lhs, _poly(l2=1)), _scale(rhs_times_l2, F(-1)))
    relation = _add(_poly(l2=1, m=2), _scale(_poly(dl=1, m=1), F(-2)), _poly(d2=1))
    while diff:
        k = max(e[3] for e in diff)
        if k < 2:
            break
        lead = {e[:3] + (0,): v for e, v in diff.items() if e[3] == k}
        shifted = _mul(lead, {(0, 0, 0, k - 2): F(1)})
        diff = _add(_mul(diff, _poly(l2=1)), _scale(_mul(shifted, relation), F(-1)))
    return not diff
