"""Graded linear algebra over exact rationals and the axiom checkers built on it.

Everything is finite-dimensional and given by structure constants, so each
identity (graded commutativity, Leibniz, Stasheff, ...) is multilinear and can
be verified exhaustively on basis tuples; the checkers report the identity and
the witness tuple on failure instead of raising.

Sign conventions: transposing two symbols of degrees p and q costs (-1)^{pq};
an operator of internal degree d moving past an argument of degree p costs
(-1)^{dp}.  The bracket of a G-algebra has internal degree -1, an A-infinity
operation m_k has internal degree 2-k.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ArityMismatchError, DegreeMismatchError
from .permutations import Permutation
from .rationals import format_rational


def koszul_sign(perm: Permutation, degrees) -> int:
    """Sign for permuting graded symbols: the symbol at slot i moves to slot
    perm(i); each inversion of a pair of odd-degree symbols contributes -1."""
    degrees = list(degrees)
    if perm.degree != len(degrees):
        raise DegreeMismatchError(len(degrees), perm.degree)
    exponent = 0
    n = perm.degree
    for i in range(n):
        for j in range(i + 1, n):
            if perm.images[i] > perm.images[j]:
                exponent += degrees[i] * degrees[j]
    return -1 if exponent % 2 else 1


@dataclass(frozen=True)
class GradedSpace:
    """Finite basis with integer degrees; names must be distinct."""

    basis: tuple[tuple[str, int], ...]

    def __post_init__(self):
        names = [name for name, _ in self.basis]
        if len(set(names)) != len(names):
            raise ValueError("duplicate basis names")

    @staticmethod
    def from_pairs(pairs) -> "GradedSpace":
        return GradedSpace(tuple((str(n), int(d)) for n, d in pairs))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def degree(self, index: int) -> int:
        return self.basis[index][1]

    def name(self, index: int) -> str:
        return self.basis[index][0]

    def index(self, name: str) -> int:
        for i, (n, _) in enumerate(self.basis):
            if n == name:
                return i
        raise KeyError(name)

    def describe_vector(self, vector) -> str:
        if not vector:
            return "0"
        terms = []
        for i in sorted(vector):
            c = vector[i]
            terms.append(f"{format_rational(c)}*{self.name(i)}")
        return " + ".join(terms)


def vec_add(a, b):
    out = dict(a)
    for i, c in b.items():
        s = out.get(i, Fraction(0)) + c
        if s:
            out[i] = s
        else:
            out.pop(i, None)
    return out


def vec_scale(c, v):
    if not c:
        return {}
    return {i: c * x for i, x in v.items()}


class MultilinearMap:
    """Structure-constant multilinear map.

    Plain maps take ``m`` inputs from one space and land in it; relative maps
    take ``m`` inputs from ``space1`` and ``n >= 1`` from ``space2`` (in that
    order) and land in ``space2``.  The table maps input basis tuples to sparse
    output vectors; omitted tuples are zero.  Maps must be degree-homogeneous:
    every output degree equals the input degrees' sum plus ``degree``.
    """

    def __init__(self, space1: GradedSpace, space2, m: int, n: int,
                 degree: int, table):
        self.space1 = space1
        self.space2 = space2
        self.m = m
        self.n = n
        self.degree = degree
        cleaned = {}
        for inputs, vector in table.items():
            inputs = tuple(inputs)
            vector = {i: Fraction(c) for i, c in vector.items() if c}
            if vector:
                cleaned[inputs] = vector
        self.table = cleaned
        self._validate()

    # -- constructors -------------------------------------------------------

    @staticmethod
    def plain(space: GradedSpace, arity: int, degree: int, table) -> "MultilinearMap":
        return MultilinearMap(space, None, arity, 0, degree, table)

    @staticmethod
    def relative(space1: GradedSpace, space2: GradedSpace, m: int, n: int,
                 degree: int, table) -> "MultilinearMap":
        if n < 1:
            raise ValueError("a relative map needs at least one input from space2")
        return MultilinearMap(space1, space2, m, n, degree, table)

    @staticmethod
    def identity(space: GradedSpace) -> "MultilinearMap":
        return MultilinearMap.plain(
            space, 1, 0, {(i,): {i: Fraction(1)} for i in range(space.dim)})

    @staticmethod
    def zero(space: GradedSpace, arity: int, degree: int = 0) -> "MultilinearMap":
        return MultilinearMap.plain(space, arity, degree, {})

    # -- bookkeeping --------------------------------------------------------

    @property
    def is_relative(self) -> bool:
        return self.space2 is not None

    @property
    def output_space(self) -> GradedSpace:
        return self.space2 if self.is_relative else self.space1

    def _input_degrees(self, inputs):
        degs = [self.space1.degree(i) for i in inputs[:self.m]]
        degs += [self.space2.degree(i) for i in inputs[self.m:]]
        return degs

    def _validate(self):
        if self.is_relative and self.n < 1:
            raise ValueError("relative map with no space2 inputs")
        if not self.is_relative and self.n != 0:
            raise ValueError("plain map with space2 inputs")
        for inputs, vector in self.table.items():
            if len(inputs) != self.m + self.n:
                raise ValueError(f"input tuple {inputs} has wrong length")
            want = sum(self._input_degrees(inputs)) + self.degree
            for out_index in vector:
                got = self.output_space.degree(out_index)
                if got != want:
                    raise ValueError(
                        f"map is not degree-homogeneous: inputs {inputs} "
                        f"output degree {got}, expected {want}")

    def __eq__(self, other):
        if not isinstance(other, MultilinearMap):
            return NotImplemented
        if (self.m, self.n) != (other.m, other.n):
            return False
        if self.table != other.table:
            return False
        # the zero map compares equal regardless of its formal degree
        if self.table and self.degree != other.degree:
            return False
        return True

    def __repr__(self):
        kind = "relative" if self.is_relative else "plain"
        return (f"MultilinearMap({kind}, m={self.m}, n={self.n}, "
                f"degree={self.degree}, entries={len(self.table)})")

    def describe(self):
        out = {}
        for inputs, vector in sorted(self.table.items()):
            key = ",".join(str(i) for i in inputs)
            out[key] = {str(i): format_rational(c) for i, c in sorted(vector.items())}
        return {"m": self.m, "n": self.n, "degree": self.degree, "table": out}

    # -- evaluation ---------------------------------------------------------

    def evaluate(self, inputs) -> dict:
        """Value on a basis tuple, as a sparse vector."""
        return dict(self.table.get(tuple(inputs), {}))

    def apply(self, vectors) -> dict:
        """Multilinear extension to sparse vectors (one per input slot)."""
        vectors = list(vectors)
        if len(vectors) != self.m + self.n:
            raise ArityMismatchError(self.m + self.n, len(vectors))
        out = {}
        stack = [((), Fraction(1))]
        for v in vectors:
            stack = [(idx + (i,), coef * c)
                     for idx, coef in stack for i, c in v.items() if c]
            if not stack:
                return {}
        for idx, coef in stack:
            out = vec_add(out, vec_scale(coef, self.evaluate(idx)))
        return out

    # -- operadic structure -------------------------------------------------

    def compose(self, inners) -> "MultilinearMap":
        """Plain substitution: feed inner maps' outputs into this map's inputs.

        Inner i of arity n_i consumes the i-th block of the new inputs; the
        Koszul cost of moving inner i past the earlier blocks is included.
        """
        inners = list(inners)
        if self.is_relative:
            raise ValueError("use relative_gamma/relative_Gamma on relative maps")
        if len(inners) != self.m:
            raise ArityMismatchError(self.m, len(inners))
        for g in inners:
            if g.is_relative or g.space1 is not self.space1:
                raise ValueError("inner maps must be plain maps on the same space")
        space = self.space1
        total = sum(g.m for g in inners)
        degree = self.degree + sum(g.degree for g in inners)
        table = {}
        for inputs in _basis_tuples(space, total):
            blocks = _split_blocks(inputs, [g.m for g in inners])
            sign = 1
            seen = 0
            values = []
            for g, block in zip(inners, blocks):
                if g.degree % 2 and seen % 2:
                    sign = -sign
                values.append(g.evaluate(block))
                seen += sum(space.degree(i) for i in block)
            vector = vec_scale(Fraction(sign), self.apply(values))
            if vector:
                table[inputs] = vector
        return MultilinearMap.plain(space, total, degree, table)

    def relative_gamma(self, inners) -> "MultilinearMap":
        """Substitute relative maps into the space2 inputs.

        The composite's space1 inputs are this map's first, then the inners'
        in block order; its space2 inputs are the inners' in block order.
        """
        inners = list(inners)
        if not self.is_relative:
            raise ValueError("relative_gamma needs a relative outer map")
        if len(inners) != self.n:
            raise ArityMismatchError(self.n, len(inners))
        for g in inners:
            if not g.is_relative or g.space1 is not self.space1 \
                    or g.space2 is not self.space2:
                raise ValueError("inners must be relative maps on the same spaces")
        v1, v2 = self.space1, self.space2
        new_m = self.m + sum(g.m for g in inners)
        new_n = sum(g.n for g in inners)
        degree = self.degree + sum(g.degree for g in inners)
        table = {}
        for inputs in _mixed_basis_tuples(v1, v2, new_m, new_n):
            head = inputs[:self.m]
            u_blocks = _split_blocks(inputs[self.m:new_m], [g.m for g in inners])
            w_blocks = _split_blocks(inputs[new_m:], [g.n for g in inners])
            deg_u = [sum(v1.degree(i) for i in blk) for blk in u_blocks]
            deg_w = [sum(v2.degree(i) for i in blk) for blk in w_blocks]
            # unshuffle (u_1..u_l, w_1..w_l) -> ((u_1,w_1)..(u_l,w_l))
            exponent = 0
            for i in range(len(inners)):
                exponent += deg_w[i] * sum(deg_u[i + 1:])
            # operators move past everything left of their block
            seen = sum(v1.degree(i) for i in head)
            for g, du, dw in zip(inners, deg_u, deg_w):
                exponent += g.degree * seen
                seen += du + dw
            values = [{i: Fraction(1)} for i in head]
            values += [g.evaluate(ub + wb)
                       for g, ub, wb in zip(inners, u_blocks, w_blocks)]
            vector = vec_scale(Fraction(-1 if exponent % 2 else 1),
                               self.apply(values))
            if vector:
                table[inputs] = vector
        return MultilinearMap.relative(v1, v2, new_m, new_n, degree, table)

    def relative_Gamma(self, inners) -> "MultilinearMap":
        """Substitute plain space1 maps into the space1 inputs."""
        inners = list(inners)
        if not self.is_relative:
            raise ValueError("relative_Gamma needs a relative outer map")
        if len(inners) != self.m:
            raise ArityMismatchError(self.m, len(inners))
        for h in inners:
            if h.is_relative or h.space1 is not self.space1:
                raise ValueError("inners must be plain maps on space1")
        v1, v2 = self.space1, self.space2
        new_m = sum(h.m for h in inners)
        degree = self.degree + sum(h.degree for h in inners)
        table = {}
        for inputs in _mixed_basis_tuples(v1, v2, new_m, self.n):
            u_blocks = _split_blocks(inputs[:new_m], [h.m for h in inners])
            tail = inputs[new_m:]
            exponent = 0
            seen = 0
            values = []
            for h, blk in zip(inners, u_blocks):
                exponent += h.degree * seen
                seen += sum(v1.degree(i) for i in blk)
                values.append(h.evaluate(blk))
            values += [{i: Fraction(1)} for i in tail]
            vector = vec_scale(Fraction(-1 if exponent % 2 else 1),
                               self.apply(values))
            if vector:
                table[inputs] = vector
        return MultilinearMap.relative(v1, v2, new_m, self.n, degree, table)

    def act(self, perm: Permutation) -> "MultilinearMap":
        """Left symmetric-group action on a plain map: permute the inputs,
        with the Koszul sign of the inverse rearrangement."""
        if self.is_relative:
            raise ValueError("use act_relative on relative maps")
        if perm.degree != self.m:
            raise DegreeMismatchError(self.m, perm.degree)
        space = self.space1
        table = {}
        for inputs in _basis_tuples(space, self.m):
            permuted = tuple(inputs[perm(j) - 1] for j in range(1, self.m + 1))
            value = self.evaluate(permuted)
            if not value:
                continue
            sign = koszul_sign(perm.inverse(), [space.degree(i) for i in inputs])
            table[inputs] = vec_scale(Fraction(sign), value)
        return MultilinearMap.plain(space, self.m, self.degree, table)

    def act_relative(self, perm1: Permutation, perm2: Permutation) -> "MultilinearMap":
        if not self.is_relative:
            raise ValueError("act_relative needs a relative map")
        if perm1.degree != self.m:
            raise DegreeMismatchError(self.m, perm1.degree)
        if perm2.degree != self.n:
            raise DegreeMismatchError(self.n, perm2.degree)
        v1, v2 = self.space1, self.space2
        table = {}
        for inputs in _mixed_basis_tuples(v1, v2, self.m, self.n):
            us, ws = inputs[:self.m], inputs[self.m:]
            permuted = tuple(us[perm1(j) - 1] for j in range(1, self.m + 1)) \
                + tuple(ws[perm2(j) - 1] for j in range(1, self.n + 1))
            value = self.evaluate(permuted)
            if not value:
                continue
            sign = koszul_sign(perm1.inverse(), [v1.degree(i) for i in us]) \
                * koszul_sign(perm2.inverse(), [v2.degree(i) for i in ws])
            table[inputs] = vec_scale(Fraction(sign), value)
        return MultilinearMap.relative(v1, v2, self.m, self.n, self.degree, table)


def _basis_tuples(space: GradedSpace, arity: int):
    if arity == 0:
        yield ()
        return
    indices = range(space.dim)
    def rec(prefix, left):
        if left == 0:
            yield prefix
            return
        for i in indices:
            yield from rec(prefix + (i,), left - 1)
    yield from rec((), arity)


def _mixed_basis_tuples(space1: GradedSpace, space2: GradedSpace, m: int, n: int):
    for head in _basis_tuples(space1, m):
        for tail in _basis_tuples(space2, n):
            yield head + tail


def _split_blocks(seq, sizes):
    blocks = []
    pos = 0
    for s in sizes:
        blocks.append(tuple(seq[pos:pos + s]))
        pos += s
    return blocks
