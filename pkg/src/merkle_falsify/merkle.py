"""Merkle trees over truncated digests, with authentication paths.

Construction pairs digests left to right.  A level with an odd number of
digests is first extended by duplicating its final digest, so every level
pairs cleanly; a single-leaf tree is just the leaf digest.  Parent nodes are
``hash_concat(left_child, right_child)`` under the tree's :class:`HashSpec`.

An authentication path (:class:`MerkleProof`) lists, bottom-up, the sibling
digest consumed at each level together with the side that sibling occupies
in the concatenation.  Verification rehashes the block, folds the siblings
in order, and compares against the expected root.

``fold_path`` exposes the bare fold: starting from a leaf digest, each step
hashes ``current || sibling`` and truncates.  That is exactly the
reconstruction done by a proof whose siblings all sit on the right, and it
is also the path model used by the simulator -- which is why ``fold_path``
accepts siblings wider than the node width (see ``simulate``).

Known caveat: leaves are hashed payload bytes directly, with no
domain-separation prefix distinguishing leaf hashing from internal-node
hashing.  A payload equal to the concatenation of two sibling digests
therefore hashes to their parent's digest -- the classic second-preimage
weakness of unprefixed Merkle constructions.  This library keeps the
unprefixed scheme because that is the scheme whose falsification
probabilities are being studied; do not reuse it where the attack
matters.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from .hashing import Digest, HashSpec, OracleState, hash_bytes, hash_concat

LEFT = "left"
RIGHT = "right"

PROOF_VERSION = 1


@dataclass(frozen=True)
class ProofStep:
    """One level of an authentication path.

    ``side`` names where the sibling goes in the concatenation: ``"right"``
    means the running digest is the left operand (``H(current || sibling)``),
    ``"left"`` the reverse.
    """

    sibling: Digest
    side: str

    def __post_init__(self) -> None:
        if self.side not in (LEFT, RIGHT):
            raise ValueError(f"side must be {LEFT!r} or {RIGHT!r}, got {self.side!r}")


@dataclass(frozen=True)
class MerkleProof:
    """Authentication path for one leaf, bottom-up."""

    bits: int
    leaf_index: int
    steps: tuple[ProofStep, ...]

    @property
    def path_len(self) -> int:
        return len(self.steps)


class MerkleTree:
    """A built tree: all levels retained, leaves first, root level last.

    ``levels[0]`` holds the leaf digests *after* any duplication padding;
    ``leaf_count`` is the number of original blocks.  Treat instances as
    immutable snapshots -- mutating ``levels`` invalidates proofs.
    """

    def __init__(self, spec: HashSpec, leaf_count: int, levels: list[list[Digest]]):
        self.spec = spec
        self.leaf_count = leaf_count
        self.levels = levels

    @property
    def root(self) -> Digest:
        return self.levels[-1][0]

    @property
    def height(self) -> int:
        """Number of pairing levels above the leaves."""
        return len(self.levels) - 1


def build_tree(
    leaves: Sequence[bytes], spec: HashSpec, oracle: OracleState | None = None
) -> MerkleTree:
    """Hash ``leaves`` and pair upward until a single root remains."""
    if len(leaves) == 0:
        raise ValueError("cannot build a tree from zero leaves")
    level = [hash_bytes(block, spec, oracle) for block in leaves]
    levels = [level]
    while len(levels[-1]) > 1:
        current = levels[-1]
        if len(current) % 2:
            current = current + [current[-1]]
            levels[-1] = current
        parent = [
            hash_concat(current[i], current[i + 1], spec, oracle)
            for i in range(0, len(current), 2)
        ]
        levels.append(parent)
    return MerkleTree(spec, len(leaves), levels)


def generate_proof(tree: MerkleTree, leaf_index: int) -> MerkleProof:
    """Authentication path for ``leaf_index`` against the tree's root."""
    if not isinstance(leaf_index, int) or not 0 <= leaf_index < tree.leaf_count:
        raise IndexError(
            f"leaf index {leaf_index!r} out of range for {tree.leaf_count} leaves"
        )
    steps = []
    index = leaf_index
    for level in tree.levels[:-1]:
        sibling_index = index ^ 1
        side = RIGHT if index % 2 == 0 else LEFT
        steps.append(ProofStep(level[sibling_index], side))
        index //= 2
    return MerkleProof(bits=tree.spec.bits, leaf_index=leaf_index, steps=tuple(steps))


def verify_proof(
    data: bytes,
    proof: MerkleProof,
    expected_root: Digest,
    spec: HashSpec,
    oracle: OracleState | None = None,
) -> bool:
    """Three-step check: hash the block, fold the path, compare to the root.

    Width mismatches (proof or root digests not at ``spec.bits``) raise
    ``ValueError`` -- they are caller mistakes, not failed verifications.
    """
    if proof.bits != spec.bits:
        raise ValueError(f"proof bits {proof.bits} do not match spec.bits {spec.bits}")
    if expected_root.bits != spec.bits:
        raise ValueError(
            f"expected root has {expected_root.bits} bits, spec.bits is {spec.bits}"
        )
    for step in proof.steps:
        if step.sibling.bits != spec.bits:
            raise ValueError(
                f"proof sibling has {step.sibling.bits} bits, spec.bits is {spec.bits}"
            )
    current = hash_bytes(data, spec, oracle)
    for step in proof.steps:
        if step.side == RIGHT:
            current = hash_concat(current, step.sibling, spec, oracle)
        else:
            current = hash_concat(step.sibling, current, spec, oracle)
    return current == expected_root


def fold_path(
    leaf: Digest,
    siblings: Sequence[Digest],
    spec: HashSpec,
    oracle: OracleState | None = None,
) -> Digest:
    """Fold ``leaf`` through ``siblings``, hashing ``current || sibling``.

    The running digest must be at ``spec.bits``.  Siblings may be any width:
    tree paths supply node-width digests, while simulated paths supply
    full-width random elements so that every level contributes an
    independent collision opportunity.
    """
    if leaf.bits != spec.bits:
        raise ValueError(f"leaf has {leaf.bits} bits, spec.bits is {spec.bits}")
    current = leaf
    for sibling in siblings:
        current = hash_bytes(current.data + sibling.data, spec, oracle)
    return current


def proof_to_json(proof: MerkleProof) -> str:
    """Serialize a proof to its canonical JSON form."""
    return json.dumps(
        {
            "version": PROOF_VERSION,
            "bits": proof.bits,
            "leaf_index": proof.leaf_index,
            "steps": [
                {"sibling": step.sibling.hex(), "side": step.side}
                for step in proof.steps
            ],
        }
    )


def proof_from_json(text: str) -> MerkleProof:
    """Parse and validate a serialized proof; malformed input raises ValueError."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"proof is not valid JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise ValueError("proof JSON must be an object")
    if obj.get("version") != PROOF_VERSION:
        raise ValueError(f"unsupported proof version {obj.get('version')!r}")
    bits = obj.get("bits")
    if not isinstance(bits, int) or bits < 1:
        raise ValueError(f"proof bits must be a positive integer, got {bits!r}")
    leaf_index = obj.get("leaf_index")
    if not isinstance(leaf_index, int) or leaf_index < 0:
        raise ValueError(f"leaf_index must be a non-negative integer, got {leaf_index!r}")
    raw_steps = obj.get("steps")
    if not isinstance(raw_steps, list):
        raise ValueError("proof steps must be a list")
    steps = []
    for k, raw in enumerate(raw_steps):
        if not isinstance(raw, dict):
            raise ValueError(f"step {k} must be an object")
        side = raw.get("side")
        if side not in (LEFT, RIGHT):
            raise ValueError(f"step {k} side must be 'left' or 'right', got {side!r}")
        sibling = raw.get("sibling")
        if not isinstance(sibling, str):
            raise ValueError(f"step {k} sibling must be a hex string")
        steps.append(ProofStep(Digest.from_hex(sibling, bits), side))
    return MerkleProof(bits=bits, leaf_index=leaf_index, steps=tuple(steps))
