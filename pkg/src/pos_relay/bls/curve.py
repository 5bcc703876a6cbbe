"""Point arithmetic and compressed encodings for the two pairing groups.

G1 lives on y^2 = x^3 + 4 over Fp, G2 on y^2 = x^3 + 4(1 + u) over Fp2.
Internal arithmetic uses Jacobian coordinates to avoid field inversions;
``None`` is the point at infinity. Affine points are (x, y) pairs, Jacobian
points (X, Y, Z) triples.

Compressed encodings follow the common 48/96-byte convention: big-endian x
with three flag bits on the leading byte (compression, infinity, y sign).
"""

from __future__ import annotations

from .fields import (
    CURVE_ORDER,
    P,
    fp2_add,
    fp2_inv,
    fp2_is_zero,
    fp2_mul,
    fp2_neg,
    fp2_scale,
    fp2_sign_lex,
    fp2_sqr,
    fp2_sqrt,
    fp2_sub,
)

B_G1 = 4
B_G2 = (4, 4)

G1_GEN = (
    0x17F1D3A73197D7942695638C4FA9AC0FC3688C4F9774B905A14E3A3F171BAC586C55E83FF97A1AEFFB3AF00ADB22C6BB,
    0x08B3F481E3AAA0F1A09E30ED741D8AE4FCF5E095D5D00AF600DB18CB2C04B3EDD03CC744A2888AE40CAA232946C5E7E1,
)
G2_GEN = (
    (
        0x024AA2B2F08F0A91260805272DC51051C6E47AD4FA403B02B4510B647AE3D1770BAC0326A805BBEFD48056C8C121BDB8,
        0x13E02B6052719F607DACD3A088274F65596BD0D09920B61AB5DA61BBDC7F5049334CF11213945D57E5AC7D055D042B7E,
    ),
    (
        0x0CE5D527727D6E118CC9CDC6DA2E351AADFD9BAA8CBDD3A76D429A695160D12C923AC9CC3BACA289E193548608B82801,
        0x0606C4A02EA734CC32ACD2B02BC28B99CB3E287E85A763AF267492AB572E99AB3F370D275CEC1DA1AAA9075FF05F79BE,
    ),
)


class PointError(ValueError):
    """Invalid point encoding or off-curve coordinates."""


# ---------------------------------------------------------------------------
# G1
# ---------------------------------------------------------------------------


def g1_is_on_curve(point):
    if point is None:
        return True
    x, y = point
    return (y * y - x * x * x - B_G1) % P == 0


def g1_from_affine(point):
    if point is None:
        return None
    return (point[0], point[1], 1)


def g1_to_affine(point):
    if point is None:
        return None
    x, y, z = point
    if z == 0:
        return None
    zinv = pow(z, -1, P)
    zinv2 = zinv * zinv % P
    return (x * zinv2 % P, y * zinv2 * zinv % P)


def g1_neg(point):
    if point is None:
        return None
    x, y, z = point
    return (x, -y % P, z)


def g1_double(point):
    if point is None:
        return None
    x, y, z = point
    a = x * x % P
    b = y * y % P
    c = b * b % P
    d = 2 * ((x + b) * (x + b) - a - c) % P
    e = 3 * a % P
    f = e * e % P
    x3 = (f - 2 * d) % P
    y3 = (e * (d - x3) - 8 * c) % P
    z3 = 2 * y * z % P
    return (x3, y3, z3)


def g1_add(p, q):
    if p is None:
        return q
    if q is None:
        return p
    x1, y1, z1 = p
    x2, y2, z2 = q
    z1z1 = z1 * z1 % P
    z2z2 = z2 * z2 % P
    u1 = x1 * z2z2 % P
    u2 = x2 * z1z1 % P
    s1 = y1 * z2 * z2z2 % P
    s2 = y2 * z1 * z1z1 % P
    if u1 == u2:
        if s1 != s2:
            return None
        return g1_double(p)
    h = (u2 - u1) % P
    i = 4 * h * h % P
    j = h * i % P
    rr = 2 * (s2 - s1) % P
    v = u1 * i % P
    x3 = (rr * rr - j - 2 * v) % P
    y3 = (rr * (v - x3) - 2 * s1 * j) % P
    z3 = ((z1 + z2) * (z1 + z2) - z1z1 - z2z2) * h % P
    return (x3, y3, z3)


def g1_mul(point, k):
    if point is None or k % CURVE_ORDER == 0:
        return None
    if k < 0:
        return g1_neg(g1_mul(point, -k))
    result = None
    for bit in bin(k)[2:]:
        result = g1_double(result)
        if bit == "1":
            result = g1_add(result, point)
    return result


def g1_in_subgroup(point_affine):
    if point_affine is None:
        return True
    return g1_mul(g1_from_affine(point_affine), CURVE_ORDER) is None


# ---------------------------------------------------------------------------
# G2
# ---------------------------------------------------------------------------


def g2_is_on_curve(point):
    if point is None:
        return True
    x, y = point
    return fp2_sub(fp2_sqr(y), fp2_add(fp2_mul(fp2_sqr(x), x), B_G2)) == (0, 0)


def g2_from_affine(point):
    if point is None:
        return None
    return (point[0], point[1], (1, 0))


def g2_to_affine(point):
    if point is None:
        return None
    x, y, z = point
    if fp2_is_zero(z):
        return None
    zinv = fp2_inv(z)
    zinv2 = fp2_sqr(zinv)
    return (fp2_mul(x, zinv2), fp2_mul(y, fp2_mul(zinv2, zinv)))


def g2_neg(point):
    if point is None:
        return None
    x, y, z = point
    return (x, fp2_neg(y), z)


def g2_double(point):
    if point is None:
        return None
    x, y, z = point
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
    return (x3, y3, z3)


def g2_add(p, q):
    if p is None:
        return q
    if q is None:
        return p
    x1, y1, z1 = p
    x2, y2, z2 = q
    z1z1 = fp2_sqr(z1)
    z2z2 = fp2_sqr(z2)
    u1 = fp2_mul(x1, z2z2)
    u2 = fp2_mul(x2, z1z1)
    s1 = fp2_mul(fp2_mul(y1, z2), z2z2)
    s2 = fp2_mul(fp2_mul(y2, z1), z1z1)
    if u1 == u2:
        if s1 != s2:
            return None
        return g2_double(p)
    h = fp2_sub(u2, u1)
    i = fp2_scale(fp2_sqr(h), 4)
    j = fp2_mul(h, i)
    rr = fp2_scale(fp2_sub(s2, s1), 2)
    v = fp2_mul(u1, i)
    x3 = fp2_sub(fp2_sub(fp2_sqr(rr), j), fp2_add(v, v))
    y3 = fp2_sub(fp2_mul(rr, fp2_sub(v, x3)), fp2_scale(fp2_mul(s1, j), 2))
    z3 = fp2_mul(fp2_sub(fp2_sub(fp2_sqr(fp2_add(z1, z2)), z1z1), z2z2), h)
    return (x3, y3, z3)


def g2_mul(point, k):
    if point is None or k % CURVE_ORDER == 0:
        return None
    if k < 0:
        return g2_neg(g2_mul(point, -k))
    result = None
    for bit in bin(k)[2:]:
        result = g2_double(result)
        if bit == "1":
            result = g2_add(result, point)
    return result


def g2_in_subgroup(point_affine):
    if point_affine is None:
        return True
    return g2_mul(g2_from_affine(point_affine), CURVE_ORDER) is None


# ---------------------------------------------------------------------------
# Compressed encodings
# ---------------------------------------------------------------------------

_FLAG_COMPRESSED = 0x80
_FLAG_INFINITY = 0x40
_FLAG_SIGN = 0x20
_HALF_P = P // 2


def _fp_sign_lex(y):
    return 1 if y > _HALF_P else 0


def _fp_sqrt(a):
    # p = 3 mod 4, so a candidate root is a^((p+1)/4)
    root = pow(a, (P + 1) // 4, P)
    if root * root % P != a % P:
        return None
    return root


def g1_compress(point_affine) -> bytes:
    if point_affine is None:
        return bytes([_FLAG_COMPRESSED | _FLAG_INFINITY]) + b"\x00" * 47
    x, y = point_affine
    flags = _FLAG_COMPRESSED | (_FLAG_SIGN if _fp_sign_lex(y) else 0)
    data = bytearray(x.to_bytes(48, "big"))
    data[0] |= flags
    return bytes(data)


def g1_decompress(data: bytes):
    if len(data) != 48:
        raise PointError(f"G1 encodings are 48 bytes, got {len(data)}")
    flags = data[0]
    if not flags & _FLAG_COMPRESSED:
        raise PointError("uncompressed G1 encodings are not supported")
    body = bytes([flags & 0x1F]) + data[1:]
    x = int.from_bytes(body, "big")
    if flags & _FLAG_INFINITY:
        if flags & _FLAG_SIGN or x != 0:
            raise PointError("malformed infinity encoding")
        return None
    if x >= P:
        raise PointError("x coordinate out of field range")
    y = _fp_sqrt((x * x * x + B_G1) % P)
    if y is None:
        raise PointError("x coordinate is not on the curve")
    if _fp_sign_lex(y) != (1 if flags & _FLAG_SIGN else 0):
        y = -y % P
    return (x, y)


def g2_compress(point_affine) -> bytes:
    if point_affine is None:
        return bytes([_FLAG_COMPRESSED | _FLAG_INFINITY]) + b"\x00" * 95
    (x0, x1), y = point_affine
    flags = _FLAG_COMPRESSED | (_FLAG_SIGN if fp2_sign_lex(y) else 0)
    data = bytearray(x1.to_bytes(48, "big") + x0.to_bytes(48, "big"))
    data[0] |= flags
    return bytes(data)


def g2_decompress(data: bytes):
    if len(data) != 96:
        raise PointError(f"G2 encodings are 96 bytes, got {len(data)}")
    flags = data[0]
    if not flags & _FLAG_COMPRESSED:
        raise PointError("uncompressed G2 encodings are not supported")
    x1 = int.from_bytes(bytes([flags & 0x1F]) + data[1:48], "big")
    x0 = int.from_bytes(data[48:], "big")
    if flags & _FLAG_INFINITY:
        if flags & _FLAG_SIGN or x0 != 0 or x1 != 0:
            raise PointError("malformed infinity encoding")
        return None
    if x0 >= P or x1 >= P:
        raise PointError("x coordinate out of field range")
    x = (x0, x1)
    y = fp2_sqrt(fp2_add(fp2_mul(fp2_sqr(x), x), B_G2))
    if y is None:
        raise PointError("x coordinate is not on the curve")
    if fp2_sign_lex(y) != (1 if flags & _FLAG_SIGN else 0):
        y = fp2_neg(y)
    return (x, y)


assert g1_is_on_curve(G1_GEN), "G1 generator is off-curve"
assert g2_is_on_curve(G2_GEN), "G2 generator is off-curve"
