"""Optimal ate pairing over the 381-bit curve.

The Miller loop runs on the sextic twist with Jacobian point arithmetic and
denominator-cleared line evaluations, so no field inversions occur inside
the loop. Line values are sparse Fp12 elements with nonzero coefficients at
w^0, w^3 and w^5 only; scaling lines by Fp2 factors is harmless because the
final exponentiation kills subfield contributions.

The final exponentiation uses the decomposition
    3 * (p^4 - p^2 + 1) / r = (x - 1)^2 * (x + p) * (x^2 + p^2 - 1) + 3
so the returned value is the cube of the classic reduced pairing. The cube
is a fixed exponent coprime to the group order, which preserves
bilinearity, non-degeneracy, and every product-equals-one check.
"""

from __future__ import annotations

from .fields import (
    BLS_X,
    FP12_ONE,
    P,
    fp2_add,
    fp2_mul,
    fp2_mul_xi,
    fp2_neg,
    fp2_scale,
    fp2_sqr,
    fp2_sub,
    fp12_conj,
    fp12_from_line,
    fp12_frobenius,
    fp12_inv,
    fp12_mul,
    fp12_sqr,
)

_X_BITS = bin(BLS_X)[3:]  # loop runs from the second-most-significant bit


def _dbl_step(t, xp, yp):
    """Double Jacobian twist point ``t`` and evaluate the tangent at P.

    Line coefficients are scaled by 2*y'*Z^6 of the pre-doubling point,
    which clears every denominator.
    """
    x, y, z = t
    a = fp2_sqr(x)
    b = fp2_sqr(y)
    c = fp2_sqr(b)
    d = fp2_sub(fp2_sub(fp2_sqr(fp2_add(x, b)), a), c)
    d = fp2_add(d, d)
    e = fp2_scale(a, 3)
    f = fp2_sqr(e)
    x3 = fp2_sub(f, fp2_add(d, d))
    y3 = fp2_sub(fp2_mul(e, fp2_sub(d, x3)), fp2_scale(c, 8))
    z3 = fp2_scale(fp2_mul(y, z), 2)

    # l = 2YZ^3 * xi * yP  +  (3X^3 - 2Y^2) w^3  -  3X^2 Z^2 * xP w^5
    zsq = fp2_sqr(z)
    l0 = fp2_scale(fp2_mul_xi(fp2_mul(fp2_scale(y, 2), fp2_mul(zsq, z))), yp)
    l3 = fp2_sub(fp2_mul(e, x), fp2_scale(b, 2))
    l5 = fp2_neg(fp2_scale(fp2_mul(e, zsq), xp))
    return (x3, y3, z3), fp12_from_line(l0, l3, l5)


def _add_step(t, q, xp, yp):
    """Mixed-add affine twist point ``q`` into Jacobian ``t``; line through both.

    The line is anchored at q and scaled by its slope denominator Z*H.
    """
    x1, y1, z1 = t
    xq, yq = q
    z1z1 = fp2_sqr(z1)
    u2 = fp2_mul(xq, z1z1)
    s2 = fp2_mul(fp2_mul(yq, z1), z1z1)
    h = fp2_sub(u2, x1)
    n = fp2_sub(s2, y1)
    hh = fp2_sqr(h)
    i = fp2_scale(hh, 4)
    j = fp2_mul(h, i)
    rr = fp2_scale(n, 2)
    v = fp2_mul(x1, i)
    x3 = fp2_sub(fp2_sub(fp2_sqr(rr), j), fp2_add(v, v))
    y3 = fp2_sub(fp2_mul(rr, fp2_sub(v, x3)), fp2_scale(fp2_mul(y1, j), 2))
    z3 = fp2_sub(fp2_sub(fp2_sqr(fp2_add(z1, h)), z1z1), hh)

    # slope numerator N = yQ Z^3 - Y, denominator D = Z * (xQ Z^2 - X) = Z*H
    zh = fp2_mul(z1, h)
    l0 = fp2_scale(fp2_mul_xi(zh), yp)
    l3 = fp2_sub(fp2_mul(n, xq), fp2_mul(zh, yq))
    l5 = fp2_neg(fp2_scale(n, xp))
    return (x3, y3, z3), fp12_from_line(l0, l3, l5)


def miller_loop(p_affine, q_affine):
    """f_{x,Q}(P) with the negative-parameter conjugation folded in."""
    if p_affine is None or q_affine is None:
        return FP12_ONE
    xp, yp = p_affine
    xp %= P
    yp %= P
    t = (q_affine[0], q_affine[1], (1, 0))
    f = FP12_ONE
    for bit in _X_BITS:
        f = fp12_sqr(f)
        t, line = _dbl_step(t, xp, yp)
        f = fp12_mul(f, line)
        if bit == "1":
            t, line = _add_step(t, q_affine, xp, yp)
            f = fp12_mul(f, line)
    return fp12_conj(f)


def _pow_x_abs(m):
    """m^|x| by square-and-multiply; |x| has just six set bits."""
    result = m
    for bit in _X_BITS:
        result = fp12_sqr(result)
        if bit == "1":
            result = fp12_mul(result, m)
    return result


def final_exponentiation(f):
    """f^((p^12 - 1) / r * 3); inputs of zero norm are rejected upstream."""
    # easy part: f^((p^6 - 1)(p^2 + 1))
    m = fp12_mul(fp12_conj(f), fp12_inv(f))
    m = fp12_mul(fp12_frobenius(m, 2), m)
    # hard part on the now-cyclotomic m, where inversion is conjugation:
    # m^((x-1)^2 (x+p) (x^2+p^2-1)) * m^3
    a = fp12_conj(fp12_mul(_pow_x_abs(m), m))  # m^(x-1)
    b = fp12_conj(fp12_mul(_pow_x_abs(a), a))  # a^(x-1)
    c = fp12_mul(fp12_conj(_pow_x_abs(b)), fp12_frobenius(b, 1))  # b^(x+p)
    d = fp12_mul(
        _pow_x_abs(_pow_x_abs(c)),
        fp12_mul(fp12_frobenius(c, 2), fp12_conj(c)),
    )  # c^(x^2+p^2-1)
    m3 = fp12_mul(fp12_mul(m, m), m)
    return fp12_mul(d, m3)


def pairing(p_affine, q_affine):
    """Reduced pairing value (cubed, see module docstring)."""
    return final_exponentiation(miller_loop(p_affine, q_affine))


def pairing_check(pairs) -> bool:
    """True iff the product of pairings over (G1, G2) pairs equals one.

    Miller loops are multiplied before a single shared final
    exponentiation, so the whole check costs one pairing equation.
    """
    f = FP12_ONE
    for p_affine, q_affine in pairs:
        f = fp12_mul(f, miller_loop(p_affine, q_affine))
    return final_exponentiation(f) == FP12_ONE
