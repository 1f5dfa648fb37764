"""Finite permutations and the block permutations induced by substitution.

Permutations are written in one-line image form on {1..n}: ``images[i-1]``
is the image of ``i``.  All group operations are exact; composition follows
the function convention ``(a * b)(i) = a(b(i))``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import DegreeMismatchError


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {self.images}")

    @staticmethod
    def identity(n: int) -> "Permutation":
        return Permutation(tuple(range(1, n + 1)))

    @staticmethod
    def from_images(images) -> "Permutation":
        return Permutation(tuple(int(i) for i in images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.degree != other.degree:
            raise DegreeMismatchError(self.degree, other.degree)
        return Permutation(tuple(self(other(i)) for i in range(1, self.degree + 1)))

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, img in enumerate(self.images, start=1):
            inv[img - 1] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return self.images == tuple(range(1, self.degree + 1))

    def permute_list(self, items):
        """Left action on labeled lists: the item at slot i moves to slot σ(i)."""
        if len(items) != self.degree:
            raise DegreeMismatchError(self.degree, len(items))
        out = [None] * self.degree
        for i, item in enumerate(items):
            out[self.images[i] - 1] = item
        return out


def all_permutations(n: int):
    """All elements of the symmetric group on {1..n} in lexicographic order."""
    for images in itertools.permutations(range(1, n + 1)):
        yield Permutation(images)


def direct_sum(perms) -> Permutation:
    """σ₁ ⊕ … ⊕ σ_k acting blockwise on the concatenation of their domains."""
    images = []
    offset = 0
    for p in perms:
        images.extend(img + offset for img in p.images)
        offset += p.degree
    return Permutation(tuple(images))


def block_permutation(perm: Permutation, sizes) -> Permutation:
    """The permutation of Σ_{n₁+…+n_k} moving whole blocks as ``perm`` moves {1..k}.

    Source block i occupies positions N_{i-1}+1..N_i (N = partial sums of
    ``sizes``) and is sent, order-preserved, to the slot that block index
    perm(i) occupies after reordering the block sizes accordingly.
    """
    sizes = list(sizes)
    if perm.degree != len(sizes):
        raise DegreeMismatchError(perm.degree, len(sizes))
    inv = perm.inverse()
    # start of target slot j is the total size of the blocks landing before it
    target_sizes = [sizes[inv(j) - 1] for j in range(1, len(sizes) + 1)]
    target_starts = [0]
    for s in target_sizes[:-1]:
        target_starts.append(target_starts[-1] + s)
    images = [0] * sum(sizes)
    pos = 0
    for i, size in enumerate(sizes, start=1):
        start = target_starts[perm(i) - 1]
        for t in range(size):
            images[pos + t] = start + t + 1
        pos += size
    return Permutation(tuple(images))
