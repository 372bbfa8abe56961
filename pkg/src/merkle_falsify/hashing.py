"""Truncated hashing primitives.

Two hash backends share one interface:

- ``sha256``: SHA-256 truncated to the *most significant* ``bits`` bits
  (1..256).
- ``ideal``: a seeded, memoized random oracle returning uniform ``bits``-bit
  values (1..64).  Repeated queries for the same input return the same
  digest; the whole table is reproducible from the seed.

Truncated digests are carried as :class:`Digest` values: ``ceil(bits / 8)``
bytes, left-aligned, with the unused low-order bits of the final byte forced
to zero.  Core operations:

- ``hash_bytes(data, spec, oracle=None)``   -- hash an arbitrary byte string
- ``hash_concat(left, right, spec, oracle=None)`` -- hash two digests of
  equal width (the node rule for trees)
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

SHA256 = "sha256"
IDEAL = "ideal"

_ALGORITHMS = (SHA256, IDEAL)

# The random oracle derives values from a 64-bit intermediate, so it cannot
# produce more than 64 independent bits per input.
_MAX_BITS = {SHA256: 256, IDEAL: 64}


@dataclass(frozen=True)
class HashSpec:
    """Hash configuration: which backend, and how many output bits to keep."""

    algorithm: str = SHA256
    bits: int = 256

    def __post_init__(self) -> None:
        if self.algorithm not in _ALGORITHMS:
            raise ValueError(
                f"unknown algorithm {self.algorithm!r}; expected one of {_ALGORITHMS}"
            )
        limit = _MAX_BITS[self.algorithm]
        if not isinstance(self.bits, int) or not 1 <= self.bits <= limit:
            raise ValueError(
                f"bits must be an integer in [1, {limit}] for {self.algorithm}, got {self.bits!r}"
            )

    @property
    def nbytes(self) -> int:
        return (self.bits + 7) // 8

    @property
    def last_byte_mask(self) -> int:
        """Bitmask for the final digest byte (high bits kept, pad bits zero)."""
        rem = self.bits % 8
        return 0xFF if rem == 0 else (0xFF << (8 - rem)) & 0xFF


@dataclass(frozen=True)
class Digest:
    """A truncated digest: left-aligned bytes plus the true bit length.

    Two digests are equal iff both the bit length and the bytes agree, so a
    4-bit ``0xb0`` never compares equal to an 8-bit ``0xb0``.
    """

    data: bytes
    bits: int

    def __post_init__(self) -> None:
        if not isinstance(self.data, bytes):
            raise ValueError(f"digest data must be bytes, got {type(self.data).__name__}")
        if not isinstance(self.bits, int) or self.bits < 1:
            raise ValueError(f"digest bits must be a positive integer, got {self.bits!r}")
        if len(self.data) != (self.bits + 7) // 8:
            raise ValueError(
                f"digest of {self.bits} bits needs {(self.bits + 7) // 8} bytes, "
                f"got {len(self.data)}"
            )
        rem = self.bits % 8
        if rem and self.data[-1] & (0xFF >> rem):
            raise ValueError("pad bits below the kept width must be zero")

    def hex(self) -> str:
        return self.data.hex()

    def to_int(self) -> int:
        """Digest value as an integer (pad bits dropped)."""
        return int.from_bytes(self.data, "big") >> ((8 - self.bits % 8) % 8)

    @classmethod
    def from_int(cls, value: int, bits: int) -> "Digest":
        if not 0 <= value < (1 << bits):
            raise ValueError(f"value {value} does not fit in {bits} bits")
        shifted = value << ((8 - bits % 8) % 8)
        return cls(shifted.to_bytes((bits + 7) // 8, "big"), bits)

    @classmethod
    def from_hex(cls, text: str, bits: int) -> "Digest":
        try:
            raw = bytes.fromhex(text)
        except ValueError as exc:
            raise ValueError(f"invalid hex digest {text!r}") from exc
        return cls(raw, bits)


def truncate_digest(full: bytes, bits: int) -> bytes:
    """Keep the most significant ``bits`` bits of ``full``, left-aligned."""
    nbytes = (bits + 7) // 8
    if len(full) < nbytes:
        raise ValueError(f"cannot keep {bits} bits of a {len(full)}-byte digest")
    kept = full[:nbytes]
    rem = bits % 8
    if rem:
        kept = kept[:-1] + bytes([kept[-1] & ((0xFF << (8 - rem)) & 0xFF)])
    return kept


class OracleState:
    """Memoized random oracle, reproducible from a 64-bit seed.

    The first query for an input draws a fresh 64-bit value by hashing
    ``seed || input`` with full-width SHA-256 and keeping the low 64 bits;
    subsequent queries return the memoized value.  ``hash_bytes`` then keeps
    the low ``bits`` bits of that value, so the same state can serve any
    width up to 64 consistently.

    Not safe for concurrent mutation -- give each worker its own instance.
    """

    def __init__(self, seed: int = 0) -> None:
        if not isinstance(seed, int) or not 0 <= seed < (1 << 64):
            raise ValueError(f"oracle seed must be a 64-bit unsigned integer, got {seed!r}")
        self.seed = seed
        self._prefix = seed.to_bytes(8, "big")
        self._table: dict[bytes, int] = {}

    def __len__(self) -> int:
        return len(self._table)

    def value64(self, data: bytes) -> int:
        """The memoized 64-bit value backing every truncated width."""
        got = self._table.get(data)
        if got is None:
            got = int.from_bytes(
                hashlib.sha256(self._prefix + data).digest()[-8:], "big"
            )
            self._table[data] = got
        return got


def hash_bytes(data: bytes, spec: HashSpec, oracle: OracleState | None = None) -> Digest:
    """Hash ``data`` under ``spec``.

    An ``oracle`` must be supplied exactly when ``spec.algorithm`` is
    ``ideal``; passing one alongside ``sha256`` (or omitting it for
    ``ideal``) is an error rather than a silent fallback.
    """
    if spec.algorithm == IDEAL:
        if oracle is None:
            raise ValueError("ideal algorithm requires an OracleState")
        value = oracle.value64(data) & ((1 << spec.bits) - 1)
        return Digest.from_int(value, spec.bits)
    if oracle is not None:
        raise ValueError("oracle supplied but algorithm is sha256")
    return Digest(truncate_digest(hashlib.sha256(data).digest(), spec.bits), spec.bits)


def hash_concat(
    left: Digest, right: Digest, spec: HashSpec, oracle: OracleState | None = None
) -> Digest:
    """Digest of ``left.data || right.data`` -- both operands at spec width."""
    if left.bits != spec.bits or right.bits != spec.bits:
        raise ValueError(
            f"operand widths ({left.bits}, {right.bits}) do not match spec.bits={spec.bits}"
        )
    return hash_bytes(left.data + right.data, spec, oracle)
