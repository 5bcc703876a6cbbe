"""Binary Merkle trees with zero padding and generalized-index proofs.

Mirrors the hash-tree-root semantics of fixed-shape SSZ containers: leaves
are 32-byte chunks, trees are padded with zero chunks up to a power-of-two
limit, and positions are addressed by generalized index (root = 1, children
of node i at 2i and 2i + 1).

All functions are pure; nothing here keeps state between calls.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from typing import Sequence

DIGEST_SIZE = 32
ZERO_DIGEST = b"\x00" * DIGEST_SIZE

PUBKEY_SIZE = 48


class SszError(Exception):
    """Base class for merkleization and proof errors."""


class LimitExceeded(SszError):
    """More chunks supplied than the tree limit admits."""


class BadLimit(SszError):
    """Tree limit is not a power of two >= 1."""


class IndexOutOfRange(SszError):
    """Requested leaf index lies outside the tree limit."""


class MalformedBranch(SszError):
    """Branch node count does not match the generalized index depth."""


@dataclass(frozen=True)
class MerkleBranch:
    """Sibling path for one leaf, ordered leaf to root.

    ``gindex`` is the generalized index of the proven leaf; the number of
    sibling nodes must equal its depth, floor(log2(gindex)).
    """

    nodes: tuple[bytes, ...]
    gindex: int

    def __post_init__(self) -> None:
        if self.gindex < 1:
            raise MalformedBranch(f"gindex must be >= 1, got {self.gindex}")
        depth = self.gindex.bit_length() - 1
        if len(self.nodes) != depth:
            raise MalformedBranch(
                f"branch for gindex {self.gindex} needs {depth} nodes, got {len(self.nodes)}"
            )
        for node in self.nodes:
            if len(node) != DIGEST_SIZE:
                raise MalformedBranch("branch nodes must be 32-byte digests")

    @property
    def depth(self) -> int:
        return self.gindex.bit_length() - 1


def hash_node(left: bytes, right: bytes) -> bytes:
    """SHA-256 of the 64-byte concatenation ``left || right``."""
    return hashlib.sha256(left + right).digest()


def _check_limit(limit: int) -> None:
    if limit < 1 or limit & (limit - 1):
        raise BadLimit(f"limit must be a power of two >= 1, got {limit}")


def merkleize(chunks: Sequence[bytes], limit: int) -> bytes:
    """Root of the complete binary tree over ``chunks`` zero-padded to ``limit``."""
    _check_limit(limit)
    if len(chunks) > limit:
        raise LimitExceeded(f"{len(chunks)} chunks exceed limit {limit}")
    level = list(chunks) + [ZERO_DIGEST] * (limit - len(chunks))
    while len(level) > 1:
        level = [hash_node(level[i], level[i + 1]) for i in range(0, len(level), 2)]
    return level[0]


def merkleize_hash_count(limit: int) -> int:
    """Number of hash_node calls merkleize performs for a given limit."""
    _check_limit(limit)
    return limit - 1


def branch_for(chunks: Sequence[bytes], limit: int, index: int) -> MerkleBranch:
    """Sibling path proving leaf ``index`` of the padded tree.

    The returned branch has ``gindex = limit + index``.
    """
    _check_limit(limit)
    if len(chunks) > limit:
        raise LimitExceeded(f"{len(chunks)} chunks exceed limit {limit}")
    if not 0 <= index < limit:
        raise IndexOutOfRange(f"index {index} not in [0, {limit})")
    level = list(chunks) + [ZERO_DIGEST] * (limit - len(chunks))
    nodes = []
    pos = index
    while len(level) > 1:
        nodes.append(level[pos ^ 1])
        level = [hash_node(level[i], level[i + 1]) for i in range(0, len(level), 2)]
        pos //= 2
    return MerkleBranch(nodes=tuple(nodes), gindex=limit + index)


def verify_branch(leaf: bytes, branch: MerkleBranch, root: bytes) -> bool:
    """Fold ``leaf`` up the branch and compare against ``root``.

    At depth d, bit d of the generalized index (counted from the least
    significant end) selects the side: 1 means the sibling sits on the left.
    """
    depth = branch.gindex.bit_length() - 1
    if len(branch.nodes) != depth:
        raise MalformedBranch(
            f"branch for gindex {branch.gindex} needs {depth} nodes, got {len(branch.nodes)}"
        )
    node = leaf
    for d, sibling in enumerate(branch.nodes):
        if (branch.gindex >> d) & 1:
            node = hash_node(sibling, node)
        else:
            node = hash_node(node, sibling)
    return node == root


def gindex_concat(outer: int, inner: int) -> int:
    """Generalized index reached by navigating ``outer`` and then ``inner``.

    The outer index is shifted by the inner path's depth; the low bits come
    from the inner path.
    """
    if outer < 1 or inner < 1:
        raise IndexOutOfRange("generalized indices start at 1")
    depth = inner.bit_length() - 1
    return (outer << depth) | (inner - (1 << depth))


def uint64_chunk(value: int) -> bytes:
    """Little-endian uint64 padded to a 32-byte chunk."""
    if not 0 <= value < 1 << 64:
        raise ValueError(f"value {value} out of uint64 range")
    return value.to_bytes(8, "little") + b"\x00" * 24


def pubkey_chunks(pubkey: bytes) -> tuple[bytes, bytes]:
    """Split a 48-byte public key into two 32-byte chunks.

    First chunk is the leading 32 key bytes; second is the remaining 16
    bytes zero-padded, matching how fixed 48-byte vectors chunk.
    """
    if len(pubkey) != PUBKEY_SIZE:
        raise ValueError(f"public keys are {PUBKEY_SIZE} bytes, got {len(pubkey)}")
    return pubkey[:32], pubkey[32:] + b"\x00" * 16


def to_hex(data: bytes) -> str:
    """0x-prefixed lowercase hex."""
    return "0x" + data.hex()


def from_hex(text: str, length: int | None = None) -> bytes:
    """Decode 0x-prefixed hex, optionally enforcing a byte length."""
    if not isinstance(text, str) or not text.startswith("0x"):
        raise ValueError(f"expected 0x-prefixed hex string, got {text!r}")
    data = bytes.fromhex(text[2:])
    if length is not None and len(data) != length:
        raise ValueError(f"expected {length} bytes, got {len(data)}")
    return data
