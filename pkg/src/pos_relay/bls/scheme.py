"""Aggregate signatures: minimal-pubkey-size variant.

Public keys are 48-byte G1 encodings, signatures 96-byte G2 encodings. The
signed input is the 64-byte concatenation ``message || domain`` hashed to
G2 under the standard basic-scheme ciphersuite tag, so any conforming
implementation fed that concatenation produces identical signatures.

Verification of an aggregate costs exactly one pairing equation (two Miller
loops sharing one final exponentiation).
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from functools import lru_cache

from .curve import (
    G1_GEN,
    PointError,
    g1_add,
    g1_compress,
    g1_decompress,
    g1_from_affine,
    g1_in_subgroup,
    g1_mul,
    g1_neg,
    g1_to_affine,
    g2_add,
    g2_compress,
    g2_decompress,
    g2_from_affine,
    g2_in_subgroup,
    g2_mul,
    g2_to_affine,
)
from .fields import CURVE_ORDER
from .hashcurve import hash_to_curve_g2, xmd_hash_count
from .pairing import pairing_check

DST = b"BLS_SIG_BLS12381G2_XMD:SHA-256_SSWU_RO_NUL_"

PUBKEY_BYTES = 48
SIGNATURE_BYTES = 96

# SHA-256 calls issued by one hash-to-curve invocation (expand to 256 bytes)
HASH_TO_CURVE_SHA256_CALLS = xmd_hash_count(256)


class BlsError(Exception):
    """Base class for signature-scheme errors."""


class EmptyInput(BlsError):
    """Aggregation over an empty sequence."""


class InvalidKey(BlsError):
    """Public key fails decoding, subgroup, or identity checks."""


class MalformedSignature(BlsError):
    """Signature bytes do not decode to a subgroup point."""


@lru_cache(maxsize=1 << 16)
def _decode_pubkey(data: bytes):
    try:
        point = g1_decompress(data)
    except PointError as exc:
        raise InvalidKey(str(exc)) from exc
    if point is None:
        raise InvalidKey("public key is the identity element")
    if not g1_in_subgroup(point):
        raise InvalidKey("public key is outside the prime-order subgroup")
    return point


@lru_cache(maxsize=1 << 16)
def _decode_signature(data: bytes):
    try:
        point = g2_decompress(data)
    except PointError as exc:
        raise MalformedSignature(str(exc)) from exc
    if not g2_in_subgroup(point):
        raise MalformedSignature("signature is outside the prime-order subgroup")
    return point


@lru_cache(maxsize=4096)
def _signing_point(payload: bytes):
    return hash_to_curve_g2(payload, DST)


def signing_payload(message: bytes, domain: bytes) -> bytes:
    if len(message) != 32:
        raise ValueError("message must be a 32-byte digest")
    if len(domain) != 32:
        raise ValueError("domain must be a 32-byte tag")
    return message + domain


@dataclass(frozen=True)
class SecretKey:
    scalar: int

    def __post_init__(self) -> None:
        if not 0 < self.scalar < CURVE_ORDER:
            raise ValueError("secret scalar out of range")


@dataclass(frozen=True)
class PublicKey:
    data: bytes

    def __post_init__(self) -> None:
        if len(self.data) != PUBKEY_BYTES:
            raise InvalidKey(f"public keys are {PUBKEY_BYTES} bytes, got {len(self.data)}")
        _decode_pubkey(self.data)

    def point(self):
        return _decode_pubkey(self.data)


@dataclass(frozen=True)
class Signature:
    data: bytes

    def __post_init__(self) -> None:
        if len(self.data) != SIGNATURE_BYTES:
            raise MalformedSignature(
                f"signatures are {SIGNATURE_BYTES} bytes, got {len(self.data)}"
            )


def keygen(seed: bytes) -> tuple[SecretKey, PublicKey]:
    """Deterministic key pair from a 32-byte seed.

    The scalar is SHA-256(seed) reduced into [1, order), so identical seeds
    always give identical pairs and the scalar can never be zero.
    """
    if len(seed) != 32:
        raise ValueError("seed must be 32 bytes")
    scalar = int.from_bytes(hashlib.sha256(seed).digest(), "big") % (CURVE_ORDER - 1) + 1
    sk = SecretKey(scalar)
    pk_point = g1_to_affine(g1_mul(g1_from_affine(G1_GEN), scalar))
    return sk, PublicKey(g1_compress(pk_point))


def sign(sk: SecretKey, message: bytes, domain: bytes) -> Signature:
    """Signature over hash-to-curve of ``message || domain``."""
    h = _signing_point(signing_payload(message, domain))
    point = g2_to_affine(g2_mul(g2_from_affine(h), sk.scalar))
    return Signature(g2_compress(point))


def aggregate_signatures(sigs) -> Signature:
    """Group sum of signature points; a singleton aggregates to itself."""
    sigs = list(sigs)
    if not sigs:
        raise EmptyInput("cannot aggregate zero signatures")
    acc = None
    for sig in sigs:
        acc = g2_add(acc, g2_from_affine(_decode_signature(sig.data)))
    return Signature(g2_compress(g2_to_affine(acc)))


def aggregate_pubkeys(pks) -> PublicKey:
    """Group sum of public-key points."""
    pks = list(pks)
    if not pks:
        raise EmptyInput("cannot aggregate zero public keys")
    acc = None
    for pk in pks:
        acc = g1_add(acc, g1_from_affine(_decode_pubkey(pk.data)))
    return PublicKey(g1_compress(g1_to_affine(acc)))


def fast_aggregate_verify(pks, message: bytes, domain: bytes, sig: Signature, meter=None) -> bool:
    """True iff ``sig`` signs ``message || domain`` under the summed keys.

    Decoding failures raise rather than return False; only an honest
    pairing mismatch yields a False result.
    """
    pks = list(pks)
    if not pks:
        raise EmptyInput("cannot verify against zero public keys")
    sig_point = _decode_signature(sig.data)
    acc = None
    for pk in pks:
        acc = g1_add(acc, g1_from_affine(_decode_pubkey(pk.data)))
    h = _signing_point(signing_payload(message, domain))
    if meter is not None:
        meter.pairing_checks += 1
        meter.point_additions += len(pks) - 1
        meter.sha256_calls += HASH_TO_CURVE_SHA256_CALLS
    return pairing_check(
        [
            (g1_to_affine(g1_neg(g1_from_affine(G1_GEN))), sig_point),
            (g1_to_affine(acc), h),
        ]
    )
