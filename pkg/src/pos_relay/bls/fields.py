"""Field tower for the 381-bit pairing curve: Fp, Fp2, Fp6, Fp12.

Representation is plain tuples of ints to keep per-operation overhead low:
Fp2 = (c0, c1) with u^2 = -1, Fp6 = (a0, a1, a2) over Fp2 with v^3 = xi,
xi = 1 + u, and Fp12 = (c0, c1) over Fp6 with w^2 = v.

Frobenius coefficients are derived at import time from xi rather than
hardcoded tables.
"""

from __future__ import annotations

P = 0x1A0111EA397FE69A4B1BA7B6434BACD764774B84F38512BF6730D2A0F6B0F6241EABFFFEB153FFFFB9FEFFFFFFFFAAAB
CURVE_ORDER = 0x73EDA753299D7D483339D80809A1D80553BDA402FFFE5BFEFFFFFFFF00000001
# |x| for the curve family parameter; the actual parameter is negative.
BLS_X = 0xD201000000010000

FP2_ONE = (1, 0)
FP2_ZERO = (0, 0)
FP6_ZERO = (FP2_ZERO, FP2_ZERO, FP2_ZERO)
FP6_ONE = (FP2_ONE, FP2_ZERO, FP2_ZERO)
FP12_ONE = (FP6_ONE, FP6_ZERO)

# ---------------------------------------------------------------------------
# Fp2
# ---------------------------------------------------------------------------


def fp2_add(a, b):
    return ((a[0] + b[0]) % P, (a[1] + b[1]) % P)


def fp2_sub(a, b):
    return ((a[0] - b[0]) % P, (a[1] - b[1]) % P)


def fp2_neg(a):
    return (-a[0] % P, -a[1] % P)


def fp2_conj(a):
    return (a[0], -a[1] % P)


def fp2_mul(a, b):
    a0, a1 = a
    b0, b1 = b
    t0 = a0 * b0 % P
    t1 = a1 * b1 % P
    return ((t0 - t1) % P, ((a0 + a1) * (b0 + b1) - t0 - t1) % P)


def fp2_sqr(a):
    a0, a1 = a
    return ((a0 + a1) * (a0 - a1) % P, 2 * a0 * a1 % P)


def fp2_scale(a, k):
    """Multiply by an Fp scalar."""
    return (a[0] * k % P, a[1] * k % P)


def fp2_mul_xi(a):
    """Multiply by xi = 1 + u."""
    return ((a[0] - a[1]) % P, (a[0] + a[1]) % P)


def fp2_inv(a):
    a0, a1 = a
    norm = (a0 * a0 + a1 * a1) % P
    inv = pow(norm, -1, P)
    return (a0 * inv % P, -a1 * inv % P)


def fp2_pow(a, e):
    result = FP2_ONE
    base = a
    while e:
        if e & 1:
            result = fp2_mul(result, base)
        base = fp2_sqr(base)
        e >>= 1
    return result


def fp2_is_zero(a):
    return a[0] == 0 and a[1] == 0


def fp2_sgn0(a):
    """Sign of an Fp2 element per the hash-to-curve convention."""
    if a[0] != 0:
        return a[0] & 1
    return a[1] & 1


def fp2_sign_lex(a):
    """1 if the element is lexicographically larger than its negation.

    Comparison runs imaginary part first, matching the compressed-point
    sign convention.
    """
    if a[1] != 0:
        return 1 if a[1] > P - a[1] else 0
    if a[0] == 0:
        return 0
    return 1 if a[0] > P - a[0] else 0


_EULER_EXP = (P * P - 1) // 2


def fp2_is_square(a):
    if fp2_is_zero(a):
        return True
    return fp2_pow(a, _EULER_EXP) == FP2_ONE


def _find_fp2_nonresidue():
    for c0, c1 in ((1, 1), (2, 1), (1, 2), (0, 1), (3, 1), (2, 2)):
        if not fp2_is_square((c0, c1)):
            return (c0, c1)
    raise RuntimeError("no small quadratic non-residue found in Fp2")


_Q_MINUS_1 = P * P - 1
_TS_S = 0
_TS_T = _Q_MINUS_1
while _TS_T % 2 == 0:
    _TS_T //= 2
    _TS_S += 1
_TS_Z = fp2_pow(_find_fp2_nonresidue(), _TS_T)


def fp2_sqrt(a):
    """Square root via Tonelli-Shanks; None when no root exists."""
    if fp2_is_zero(a):
        return FP2_ZERO
    if not fp2_is_square(a):
        return None
    m = _TS_S
    c = _TS_Z
    t = fp2_pow(a, _TS_T)
    r = fp2_pow(a, (_TS_T + 1) // 2)
    while t != FP2_ONE:
        t2 = t
        i = 0
        while t2 != FP2_ONE:
            t2 = fp2_sqr(t2)
            i += 1
        b = c
        for _ in range(m - i - 1):
            b = fp2_sqr(b)
        m = i
        c = fp2_sqr(b)
        t = fp2_mul(t, c)
        r = fp2_mul(r, b)
    return r


# ---------------------------------------------------------------------------
# Fp6
# ---------------------------------------------------------------------------


def fp6_add(a, b):
    return (fp2_add(a[0], b[0]), fp2_add(a[1], b[1]), fp2_add(a[2], b[2]))


def fp6_sub(a, b):
    return (fp2_sub(a[0], b[0]), fp2_sub(a[1], b[1]), fp2_sub(a[2], b[2]))


def fp6_neg(a):
    return (fp2_neg(a[0]), fp2_neg(a[1]), fp2_neg(a[2]))


def fp6_mul(a, b):
    a0, a1, a2 = a
    b0, b1, b2 = b
    m0 = fp2_mul(a0, b0)
    m1 = fp2_mul(a1, b1)
    m2 = fp2_mul(a2, b2)
    c0 = fp2_add(m0, fp2_mul_xi(fp2_sub(fp2_mul(fp2_add(a1, a2), fp2_add(b1, b2)), fp2_add(m1, m2))))
    c1 = fp2_add(fp2_sub(fp2_mul(fp2_add(a0, a1), fp2_add(b0, b1)), fp2_add(m0, m1)), fp2_mul_xi(m2))
    c2 = fp2_add(fp2_sub(fp2_mul(fp2_add(a0, a2), fp2_add(b0, b2)), fp2_add(m0, m2)), m1)
    return (c0, c1, c2)


def fp6_sqr(a):
    return fp6_mul(a, a)


def fp6_mul_v(a):
    """Multiply by v: (a0, a1, a2) -> (xi*a2, a0, a1)."""
    return (fp2_mul_xi(a[2]), a[0], a[1])


def fp6_scale(a, k):
    return (fp2_mul(a[0], k), fp2_mul(a[1], k), fp2_mul(a[2], k))


def fp6_inv(a):
    a0, a1, a2 = a
    t0 = fp2_sub(fp2_sqr(a0), fp2_mul_xi(fp2_mul(a1, a2)))
    t1 = fp2_sub(fp2_mul_xi(fp2_sqr(a2)), fp2_mul(a0, a1))
    t2 = fp2_sub(fp2_sqr(a1), fp2_mul(a0, a2))
    denom = fp2_add(
        fp2_mul(a0, t0),
        fp2_mul_xi(fp2_add(fp2_mul(a2, t1), fp2_mul(a1, t2))),
    )
    inv = fp2_inv(denom)
    return (fp2_mul(t0, inv), fp2_mul(t1, inv), fp2_mul(t2, inv))


# ---------------------------------------------------------------------------
# Fp12
# ---------------------------------------------------------------------------


def fp12_mul(a, b):
    a0, a1 = a
    b0, b1 = b
    t0 = fp6_mul(a0, b0)
    t1 = fp6_mul(a1, b1)
    c1 = fp6_sub(fp6_mul(fp6_add(a0, a1), fp6_add(b0, b1)), fp6_add(t0, t1))
    c0 = fp6_add(t0, fp6_mul_v(t1))
    return (c0, c1)


def fp12_sqr(a):
    a0, a1 = a
    t = fp6_mul(a0, a1)
    c0 = fp6_sub(
        fp6_sub(fp6_mul(fp6_add(a0, a1), fp6_add(a0, fp6_mul_v(a1))), t),
        fp6_mul_v(t),
    )
    return (c0, fp6_add(t, t))


def fp12_conj(a):
    """Conjugation over Fp6; equals the p^6-power Frobenius."""
    return (a[0], fp6_neg(a[1]))


def fp12_inv(a):
    a0, a1 = a
    denom = fp6_sub(fp6_sqr(a0), fp6_mul_v(fp6_sqr(a1)))
    inv = fp6_inv(denom)
    return (fp6_mul(a0, inv), fp6_neg(fp6_mul(a1, inv)))


def fp12_pow(a, e):
    result = FP12_ONE
    base = a
    while e:
        if e & 1:
            result = fp12_mul(result, base)
        base = fp12_sqr(base)
        e >>= 1
    return result


# Line evaluations are sparse in the w-power basis: only the w^0, w^3 and
# w^5 coefficients are nonzero. In the (Fp6, Fp6) tower those positions are
# c0[0], c1[1] and c1[2].
def fp12_from_line(a0, b1, b2):
    return ((a0, FP2_ZERO, FP2_ZERO), (FP2_ZERO, b1, b2))


# ---------------------------------------------------------------------------
# Frobenius
# ---------------------------------------------------------------------------

assert (P - 1) % 6 == 0
_XI = (1, 1)
_GAMMA1 = tuple(fp2_pow(_XI, i * (P - 1) // 6) for i in range(6))
_GAMMA2 = tuple(fp2_mul(g, fp2_conj(g)) for g in _GAMMA1)
_GAMMA3 = tuple(fp2_mul(g2, g1) for g1, g2 in zip(_GAMMA1, _GAMMA2))


def _to_w_basis(a):
    (a0, a1, a2), (b0, b1, b2) = a
    return (a0, b0, a1, b1, a2, b2)


def _from_w_basis(g):
    return ((g[0], g[2], g[4]), (g[1], g[3], g[5]))


def fp12_frobenius(a, power):
    """Raise to p^power for power in {1, 2, 3}."""
    g = _to_w_basis(a)
    if power == 1:
        g = tuple(fp2_mul(fp2_conj(g[i]), _GAMMA1[i]) for i in range(6))
    elif power == 2:
        g = tuple(fp2_mul(g[i], _GAMMA2[i]) for i in range(6))
    elif power == 3:
        g = tuple(fp2_mul(fp2_conj(g[i]), _GAMMA3[i]) for i in range(6))
    else:
        raise ValueError(f"unsupported Frobenius power {power}")
    return _from_w_basis(g)
