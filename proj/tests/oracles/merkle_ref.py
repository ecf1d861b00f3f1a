#!/usr/bin/env python3
"""Reference merkle tree over a sorted key-value store.

Hand-unrolled tree construction used to freeze golden roots and proofs.
Leaf = SHA-256(0x00 | varbytes(k) | varbytes(v)), keys ascending;
internal = SHA-256(0x01 | left | right); an odd trailing node is
promoted unchanged; empty root = SHA-256(0x02).
"""

import hashlib

from claim_encoding_ref import varbytes


def _h(data):
    return hashlib.sha256(data).digest()


def leaf_hash(key, value):
    return _h(b"\x00" + varbytes(key) + varbytes(value))


def merkle_root(store):
    if not store:
        return _h(b"\x02")
    level = [leaf_hash(k, store[k]) for k in sorted(store)]
    while len(level) > 1:
        nxt = []
        for i in range(0, len(level) - 1, 2):
            nxt.append(_h(b"\x01" + level[i] + level[i + 1]))
        if len(level) % 2 == 1:
            nxt.append(level[-1])
        level = nxt
    return level[0]


def generate_proof(store, key):
    """Returns (leaf_index, leaf_count, siblings) with siblings as
    (digest, side) where side is where the sibling sits."""
    assert key in store
    keys = sorted(store)
    idx = keys.index(key)
    level = [leaf_hash(k, store[k]) for k in keys]
    leaf_count = len(level)
    siblings = []
    pos = idx
    while len(level) > 1:
        promoted = len(level) % 2 == 1 and pos == len(level) - 1
        if not promoted:
            sib = pos ^ 1
            side = "LEFT" if sib < pos else "RIGHT"
            siblings.append((level[sib], side))
        nxt = []
        for i in range(0, len(level) - 1, 2):
            nxt.append(_h(b"\x01" + level[i] + level[i + 1]))
        if len(level) % 2 == 1:
            nxt.append(level[-1])
        level = nxt
        pos //= 2
    return idx, leaf_count, siblings


def verify_proof(key, value, siblings, expected_root):
    h = leaf_hash(key, value)
    for digest, side in siblings:
        if side == "LEFT":
            h = _h(b"\x01" + digest + h)
        else:
            h = _h(b"\x01" + h + digest)
    return h == expected_root
