"""Aggregate signature scheme over the BLS12-381 pairing curve."""

from .scheme import (
    DST,
    BlsError,
    EmptyInput,
    InvalidKey,
    MalformedSignature,
    PublicKey,
    SecretKey,
    Signature,
    aggregate_pubkeys,
    aggregate_signatures,
    fast_aggregate_verify,
    keygen,
    sign,
)

__all__ = [
    "DST",
    "BlsError",
    "EmptyInput",
    "InvalidKey",
    "MalformedSignature",
    "PublicKey",
    "SecretKey",
    "Signature",
    "aggregate_pubkeys",
    "aggregate_signatures",
    "fast_aggregate_verify",
    "keygen",
    "sign",
]
