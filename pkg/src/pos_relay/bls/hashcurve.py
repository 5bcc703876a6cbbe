"""Hashing arbitrary bytes to the G2 group per RFC 9380.

Pipeline: expand_message_xmd with SHA-256, two Fp2 field elements, the
simplified SWU map onto a 3-isogenous curve, the isogeny back to the twist,
and cofactor clearing with the standard effective multiplier. This is the
BLS12381G2_XMD:SHA-256_SSWU_RO_ construction.
"""

from __future__ import annotations

import hashlib

from .curve import g2_add, g2_from_affine, g2_mul, g2_to_affine
from .fields import (
    P,
    fp2_add,
    fp2_inv,
    fp2_is_square,
    fp2_is_zero,
    fp2_mul,
    fp2_neg,
    fp2_sgn0,
    fp2_sqr,
    fp2_sqrt,
    fp2_sub,
)

# y^2 = x^3 + A*x + B, the curve 3-isogenous to the twist
ISO_A = (0, 240)
ISO_B = (1012, 1012)
SSWU_Z = (P - 2, P - 1)  # -(2 + u)

# Effective cofactor for clearing G2, per the hash-to-curve suite.
H_EFF = 0xBC69F08F2EE75B3584C6A0EA91B352888E2A8E9145AD7689986FF031508FFE1329C2F178731DB956D82BF015D1212B02EC0EC69D7477C1AE954CBC06689F6A359894C0ADEBBF6B4E8020005AAA95551

# 3-isogeny coefficients, x-numerator through y-denominator. Denominators
# are monic; their leading coefficient is implicit.
_ISO_X_NUM = (
    (
        0x5C759507E8E333EBB5B7A9A47D7ED8532C52D39FD3A042A88B58423C50AE15D5C2638E343D9C71C6238AAAAAAAA97D6,
        0x5C759507E8E333EBB5B7A9A47D7ED8532C52D39FD3A042A88B58423C50AE15D5C2638E343D9C71C6238AAAAAAAA97D6,
    ),
    (0, 0x11560BF17BAA99BC32126FCED787C88F984F87ADF7AE0C7F9A208C6B4F20A4181472AAA9CB8D555526A9FFFFFFFFC71A),
    (
        0x11560BF17BAA99BC32126FCED787C88F984F87ADF7AE0C7F9A208C6B4F20A4181472AAA9CB8D555526A9FFFFFFFFC71E,
        0x8AB05F8BDD54CDE190937E76BC3E447CC27C3D6FBD7063FCD104635A790520C0A395554E5C6AAAA9354FFFFFFFFE38D,
    ),
    (0x171D6541FA38CCFAED6DEA691F5FB614CB14B4E7F4E810AA22D6108F142B85757098E38D0F671C7188E2AAAAAAAA5ED1, 0),
)
_ISO_X_DEN = (
    (0, 0x1A0111EA397FE69A4B1BA7B6434BACD764774B84F38512BF6730D2A0F6B0F6241EABFFFEB153FFFFB9FEFFFFFFFFAA63),
    (0xC, 0x1A0111EA397FE69A4B1BA7B6434BACD764774B84F38512BF6730D2A0F6B0F6241EABFFFEB153FFFFB9FEFFFFFFFFAA9F),
)
_ISO_Y_NUM = (
    (
        0x1530477C7AB4113B59A4C18B076D11930F7DA5D4A07F649BF54439D87D27E500FC8C25EBF8C92F6812CFC71C71C6D706,
        0x1530477C7AB4113B59A4C18B076D11930F7DA5D4A07F649BF54439D87D27E500FC8C25EBF8C92F6812CFC71C71C6D706,
    ),
    (0, 0x5C759507E8E333EBB5B7A9A47D7ED8532C52D39FD3A042A88B58423C50AE15D5C2638E343D9C71C6238AAAAAAAA97BE),
    (
        0x11560BF17BAA99BC32126FCED787C88F984F87ADF7AE0C7F9A208C6B4F20A4181472AAA9CB8D555526A9FFFFFFFFC71C,
        0x8AB05F8BDD54CDE190937E76BC3E447CC27C3D6FBD7063FCD104635A790520C0A395554E5C6AAAA9354FFFFFFFFE38F,
    ),
    (0x124C9AD43B6CF79BFBF7043DE3811AD0761B0F37A1E26286B0E977C69AA274524E79097A56DC4BD9E1B371C71C718B10, 0),
)
_ISO_Y_DEN = (
    (
        0x1A0111EA397FE69A4B1BA7B6434BACD764774B84F38512BF6730D2A0F6B0F6241EABFFFEB153FFFFB9FEFFFFFFFFA8FB,
        0x1A0111EA397FE69A4B1BA7B6434BACD764774B84F38512BF6730D2A0F6B0F6241EABFFFEB153FFFFB9FEFFFFFFFFA8FB,
    ),
    (0, 0x1A0111EA397FE69A4B1BA7B6434BACD764774B84F38512BF6730D2A0F6B0F6241EABFFFEB153FFFFB9FEFFFFFFFFA9D3),
    (0x12, 0x1A0111EA397FE69A4B1BA7B6434BACD764774B84F38512BF6730D2A0F6B0F6241EABFFFEB153FFFFB9FEFFFFFFFFAA99),
)


def expand_message_xmd(msg: bytes, dst: bytes, length: int) -> bytes:
    """Expandable hash per RFC 9380 section 5.3.1, SHA-256 variant."""
    if len(dst) > 255:
        raise ValueError("domain separation tag longer than 255 bytes")
    ell = (length + 31) // 32
    if ell > 255:
        raise ValueError("requested output too long")
    dst_prime = dst + bytes([len(dst)])
    msg_prime = b"\x00" * 64 + msg + length.to_bytes(2, "big") + b"\x00" + dst_prime
    b0 = hashlib.sha256(msg_prime).digest()
    blocks = [hashlib.sha256(b0 + b"\x01" + dst_prime).digest()]
    for i in range(2, ell + 1):
        prev = bytes(x ^ y for x, y in zip(b0, blocks[-1]))
        blocks.append(hashlib.sha256(prev + bytes([i]) + dst_prime).digest())
    return b"".join(blocks)[:length]


def xmd_hash_count(length: int) -> int:
    """SHA-256 invocations expand_message_xmd performs for an output size."""
    return 1 + (length + 31) // 32


def hash_to_field_fp2(msg: bytes, dst: bytes, count: int):
    """``count`` uniform Fp2 elements derived from ``msg``; L = 64."""
    uniform = expand_message_xmd(msg, dst, count * 2 * 64)
    out = []
    for i in range(count):
        e = []
        for j in range(2):
            offset = 64 * (j + i * 2)
            e.append(int.from_bytes(uniform[offset : offset + 64], "big") % P)
        out.append(tuple(e))
    return out


def map_to_curve_sswu(u):
    """Simplified SWU map from Fp2 onto the isogenous curve."""
    zu2 = fp2_mul(SSWU_Z, fp2_sqr(u))
    tv = fp2_add(fp2_sqr(zu2), zu2)
    if fp2_is_zero(tv):
        x1 = fp2_mul(ISO_B, fp2_inv(fp2_mul(SSWU_Z, ISO_A)))
    else:
        neg_b_over_a = fp2_mul(fp2_neg(ISO_B), fp2_inv(ISO_A))
        x1 = fp2_mul(neg_b_over_a, fp2_add((1, 0), fp2_inv(tv)))
    gx1 = fp2_add(fp2_mul(fp2_add(fp2_sqr(x1), ISO_A), x1), ISO_B)
    if fp2_is_square(gx1):
        x, y = x1, fp2_sqrt(gx1)
    else:
        x = fp2_mul(zu2, x1)
        gx2 = fp2_add(fp2_mul(fp2_add(fp2_sqr(x), ISO_A), x), ISO_B)
        y = fp2_sqrt(gx2)
    if fp2_sgn0(u) != fp2_sgn0(y):
        y = fp2_neg(y)
    return (x, y)


def _iso_add(p, q):
    """Affine addition on the isogenous curve (A is nonzero there)."""
    if p is None:
        return q
    if q is None:
        return p
    (x1, y1), (x2, y2) = p, q
    if x1 == x2:
        if fp2_is_zero(fp2_add(y1, y2)):
            return None
        slope = fp2_mul(
            fp2_add(fp2_mul((3, 0), fp2_sqr(x1)), ISO_A),
            fp2_inv(fp2_add(y1, y1)),
        )
    else:
        slope = fp2_mul(fp2_sub(y2, y1), fp2_inv(fp2_sub(x2, x1)))
    x3 = fp2_sub(fp2_sub(fp2_sqr(slope), x1), x2)
    y3 = fp2_sub(fp2_mul(slope, fp2_sub(x1, x3)), y1)
    return (x3, y3)


def _eval_poly(coeffs, x):
    acc = coeffs[-1]
    for c in reversed(coeffs[:-1]):
        acc = fp2_add(fp2_mul(acc, x), c)
    return acc


def iso_map(point):
    """Degree-3 isogeny from the SSWU curve back to the twist."""
    if point is None:
        return None
    x, y = point
    x_num = _eval_poly(_ISO_X_NUM, x)
    x_den = fp2_add(_eval_poly(_ISO_X_DEN, x), fp2_sqr(x))  # monic degree 2
    y_num = _eval_poly(_ISO_Y_NUM, x)
    y_den = fp2_add(_eval_poly(_ISO_Y_DEN, x), fp2_mul(fp2_sqr(x), x))  # monic degree 3
    if fp2_is_zero(x_den) or fp2_is_zero(y_den):
        return None
    return (
        fp2_mul(x_num, fp2_inv(x_den)),
        fp2_mul(y, fp2_mul(y_num, fp2_inv(y_den))),
    )


def clear_cofactor(point):
    """Multiply by the effective cofactor, landing in the prime subgroup."""
    return g2_to_affine(g2_mul(g2_from_affine(point), H_EFF))


def hash_to_curve_g2(msg: bytes, dst: bytes):
    """Affine G2 point; the full random-oracle suite."""
    u0, u1 = hash_to_field_fp2(msg, dst, 2)
    q = _iso_add(map_to_curve_sswu(u0), map_to_curve_sswu(u1))
    return clear_cofactor(iso_map(q))
