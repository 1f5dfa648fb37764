"""Boundary strata of compactified configuration spaces as stable trees.

A stratum is encoded by a rooted tree with two vertex colors.  A ``line``
vertex carries a real line: an ordered list of boundary children (line leaves
or line vertices) plus an unordered collection of interior children (closed
leaves or closed vertices).  A ``closed`` vertex has unordered closed
children only; the root is always a line vertex, and no closed vertex ever
has a line descendant.  Internal edges are the double points, so codimension
is the number of internal edges and the filtration by double points is read
off directly.

Stability counts the parent edge (or the point at infinity, for the root):
a closed vertex needs at least two children, a line vertex needs
2*(interior) + (boundary) >= 2.  Dimension sums the per-vertex moduli:
2a + b - 2 for a line vertex with a interior and b boundary children,
2c - 3 for a closed vertex with c children.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import (ArityMismatchError, ColorViolationError,
                     MalformedTreeError, UnstableTreeError)


@dataclass(frozen=True)
class LineLeaf:
    label: int


@dataclass(frozen=True)
class ClosedLeaf:
    label: int


@dataclass(frozen=True)
class ClosedVertex:
    children: tuple

    def __post_init__(self):
        for c in self.children:
            if not isinstance(c, (ClosedLeaf, ClosedVertex)):
                raise MalformedTreeError(
                    f"closed vertex has a non-closed child: {c!r}")
        object.__setattr__(self, "children",
                           tuple(sorted(self.children, key=canonical_key)))


@dataclass(frozen=True)
class LineVertex:
    boundary: tuple
    interior: tuple

    def __post_init__(self):
        for c in self.boundary:
            if not isinstance(c, (LineLeaf, LineVertex)):
                raise MalformedTreeError(
                    f"boundary child must live on the line: {c!r}")
        for c in self.interior:
            if not isinstance(c, (ClosedLeaf, ClosedVertex)):
                raise MalformedTreeError(
                    f"interior child must be closed: {c!r}")
        object.__setattr__(self, "interior",
                           tuple(sorted(self.interior, key=canonical_key)))


def canonical_key(node) -> str:
    """Deterministic serialization; interior collections sort by it."""
    if isinstance(node, LineLeaf):
        return f"b{node.label}"
    if isinstance(node, ClosedLeaf):
        return f"c{node.label}"
    if isinstance(node, ClosedVertex):
        return "{" + " ".join(canonical_key(c) for c in node.children) + "}"
    if isinstance(node, LineVertex):
        return "(" + " ".join(canonical_key(c) for c in node.boundary) + ";" \
            + " ".join(canonical_key(c) for c in node.interior) + ")"
    raise MalformedTreeError(f"not a tree node: {node!r}")


def _walk_labels(node, closed, line):
    if isinstance(node, LineLeaf):
        line.append(node.label)
    elif isinstance(node, ClosedLeaf):
        closed.append(node.label)
    elif isinstance(node, ClosedVertex):
        for c in node.children:
            _walk_labels(c, closed, line)
    else:
        for c in node.boundary:
            _walk_labels(c, closed, line)
        for c in node.interior:
            _walk_labels(c, closed, line)


def stability_check(root):
    """First unstable vertex (as a dict) or None if every vertex is stable.

    Closed vertices count their parent edge among the off-line special
    points; line vertices count the parent edge, or the point at infinity
    for the root, among the on-line ones.
    """

    def visit(node):
        if isinstance(node, (LineLeaf, ClosedLeaf)):
            return None
        if isinstance(node, ClosedVertex):
            m_alpha = len(node.children) + 1
            if m_alpha - 1 < 2:
                return {"vertex": canonical_key(node), "kind": "closed",
                        "m_alpha": m_alpha}
            for c in node.children:
                bad = visit(c)
                if bad:
                    return bad
            return None
        m_alpha = len(node.interior)
        n_alpha = len(node.boundary) + 1
        if 2 * m_alpha + n_alpha - 1 < 2:
            return {"vertex": canonical_key(node), "kind": "line",
                    "m_alpha": m_alpha, "n_alpha": n_alpha}
        for c in node.boundary:
            bad = visit(c)
            if bad:
                return bad
        for c in node.interior:
            bad = visit(c)
            if bad:
                return bad
        return None

    if not isinstance(root, LineVertex):
        raise MalformedTreeError("the root must be a line vertex")
    return visit(root)


@dataclass(frozen=True)
class StableTree:
    """Validated stratum tree: stable everywhere, leaf labels 1..m and 1..n."""

    root: LineVertex

    def __post_init__(self):
        bad = stability_check(self.root)
        if bad is not None:
            raise UnstableTreeError(f"unstable vertex {bad}")
        closed, line = [], []
        _walk_labels(self.root, closed, line)
        if sorted(closed) != list(range(1, len(closed) + 1)):
            raise MalformedTreeError(f"closed labels are not 1..m: {sorted(closed)}")
        if sorted(line) != list(range(1, len(line) + 1)):
            raise MalformedTreeError(f"line labels are not 1..n: {sorted(line)}")

    @property
    def closed_arity(self) -> int:
        closed, line = [], []
        _walk_labels(self.root, closed, line)
        return len(closed)

    @property
    def line_arity(self) -> int:
        closed, line = [], []
        _walk_labels(self.root, closed, line)
        return len(line)

    def key(self) -> str:
        return canonical_key(self.root)

    def __repr__(self):
        return f"StableTree({self.key()})"


def stratum_dimension(tree) -> int:
    """Sum of per-vertex moduli dimensions."""
    root = tree.root if isinstance(tree, StableTree) else tree
    if stability_check(root) is not None:
        raise UnstableTreeError("tree is not stable")

    def visit(node):
        if isinstance(node, (LineLeaf, ClosedLeaf)):
            return 0
        if isinstance(node, ClosedVertex):
            return 2 * len(node.children) - 3 + sum(visit(c) for c in node.children)
        total = 2 * len(node.interior) + len(node.boundary) - 2
        total += sum(visit(c) for c in node.boundary)
        total += sum(visit(c) for c in node.interior)
        return total

    return visit(root)


def stratum_codimension(tree) -> int:
    """Number of internal edges: every non-root vertex has a parent edge."""
    root = tree.root if isinstance(tree, StableTree) else tree

    def count(node):
        if isinstance(node, (LineLeaf, ClosedLeaf)):
            return 0
        if isinstance(node, ClosedVertex):
            return 1 + sum(count(c) for c in node.children)
        here = sum(count(c) for c in node.boundary) \
            + sum(count(c) for c in node.interior)
        return 1 + here

    return count(root) - 1


@dataclass(frozen=True)
class StratumRecord:
    tree: StableTree
    dimension: int
    codimension: int


# ---------------------------------------------------------------------------
# Enumeration


def set_partitions(items, min_blocks=1):
    """All partitions of ``items`` into at least ``min_blocks`` blocks."""
    items = list(items)
    if not items:
        if min_blocks == 0:
            yield []
        return

    def rec(rest):
        if not rest:
            yield []
            return
        first, tail = rest[0], rest[1:]
        for sub in rec(tail):
            yield [[first]] + sub
            for i in range(len(sub)):
                yield sub[:i] + [[first] + sub[i]] + sub[i + 1:]

    for partition in rec(items):
        if len(partition) >= min_blocks:
            yield partition


def closed_trees(labels):
    """All stable closed trees on the given leaf labels: a single leaf, or a
    vertex whose children (at least two) partition the labels."""
    labels = sorted(labels)
    if not labels:
        return []
    if len(labels) == 1:
        return [ClosedLeaf(labels[0])]
    out = []
    for partition in set_partitions(labels, min_blocks=2):
        for combo in itertools.product(*[closed_trees(b) for b in partition]):
            out.append(ClosedVertex(tuple(combo)))
    return out


def _interior_collections(labels):
    """All unordered collections of closed trees jointly covering ``labels``."""
    labels = list(labels)
    if not labels:
        return [()]
    out = []
    for partition in set_partitions(labels, min_blocks=1):
        for combo in itertools.product(*[closed_trees(b) for b in partition]):
            out.append(tuple(combo))
    return out


def _boundary_templates(seq, max_bare):
    """Ordered boundary item lists consuming the label sequence ``seq``.

    Items are ("leaf", label) or ("vertex", subseq); a vertex may consume an
    empty block, but at most ``max_bare`` such items appear since each needs
    closed content to be stable.
    """
    seq = tuple(seq)
    out = []

    def rec(pos, items, bare_used):
        if pos == len(seq):
            out.append(tuple(items))
            if bare_used < max_bare:
                rec(pos, items + [("vertex", ())], bare_used + 1)
            return
        rec(pos + 1, items + [("leaf", seq[pos])], bare_used)
        for end in range(pos + 1, len(seq) + 1):
            rec(end, items + [("vertex", seq[pos:end])], bare_used)
        if bare_used < max_bare:
            rec(pos, items + [("vertex", ())], bare_used + 1)
    # note: bare vertices may be appended before any consuming item as well,
    # handled by the recursive branch above at each position
    rec(0, [], 0)
    return out


def _distributions(labels, bins):
    """All ways to scatter ``labels`` over ``bins`` targets (ordered)."""
    labels = list(labels)
    if bins == 0:
        return [()] if not labels else []
    out = []
    for assignment in itertools.product(range(bins), repeat=len(labels)):
        groups = [[] for _ in range(bins)]
        for lab, target in zip(labels, assignment):
            groups[target].append(lab)
        out.append(tuple(tuple(g) for g in groups))
    return out


def _line_trees(closed_labels, boundary_labels):
    """All stable line vertices covering the given closed label set and the
    boundary label sequence (left-to-right order fixed)."""
    closed_labels = tuple(closed_labels)
    out = []
    for template in _boundary_templates(boundary_labels, max_bare=len(closed_labels)):
        vertex_slots = [i for i, item in enumerate(template) if item[0] == "vertex"]
        b = len(template)
        # distribute closed labels over: root interior (bin 0) + vertex items
        for dist in _distributions(closed_labels, 1 + len(vertex_slots)):
            root_closed = dist[0] if dist else ()
            slot_closed = dist[1:] if dist else ()
            # bare vertex items need closed content somewhere inside
            if any(not template[slot][1] and not got
                   for slot, got in zip(vertex_slots, slot_closed)):
                continue
            # root stability: interior children count is at most |root_closed|
            if 2 * len(root_closed) + b < 2:
                continue
            sub_lists = []
            viable = True
            for slot, got in zip(vertex_slots, slot_closed):
                subs = _line_trees(got, template[slot][1])
                if not subs:
                    viable = False
                    break
                sub_lists.append(subs)
            if not viable:
                continue
            for interior in _interior_collections(root_closed):
                if 2 * len(interior) + b < 2:
                    continue
                for combo in itertools.product(*sub_lists):
                    boundary = []
                    v = 0
                    for item in template:
                        if item[0] == "leaf":
                            boundary.append(LineLeaf(item[1]))
                        else:
                            boundary.append(combo[v])
                            v += 1
                    out.append(LineVertex(tuple(boundary), interior))
    return out


def enumerate_strata(m, n, max_codim=None, boundary_order="fixed"):
    """All isomorphism classes of stable trees with closed leaves 1..m and
    line leaves 1..n, with dimension and codimension, in canonical order.

    With ``boundary_order="fixed"`` the line labels read 1..n left to right;
    with ``"all"`` every labeling of the line leaves is produced.
    """
    if 2 * m + n < 2:
        raise UnstableTreeError(f"2m+n = {2 * m + n} < 2: no stable configurations")
    if boundary_order not in ("fixed", "all"):
        raise ValueError("boundary_order must be 'fixed' or 'all'")
    roots = _line_trees(range(1, m + 1), range(1, n + 1))
    trees = [StableTree(r) for r in roots]
    if boundary_order == "all":
        relabeled = []
        for perm in itertools.permutations(range(1, n + 1)):
            mapping = {i + 1: perm[i] for i in range(n)}
            for t in trees:
                relabeled.append(StableTree(_relabel_line(t.root, mapping)))
        trees = relabeled
    records = []
    for t in trees:
        dim = stratum_dimension(t)
        codim = stratum_codimension(t)
        if max_codim is not None and codim > max_codim:
            continue
        records.append(StratumRecord(t, dim, codim))
    records.sort(key=lambda r: (r.codimension, r.tree.key()))
    return records


def _relabel_line(node, mapping):
    if isinstance(node, LineLeaf):
        return LineLeaf(mapping[node.label])
    if isinstance(node, (ClosedLeaf, ClosedVertex)):
        return node
    return LineVertex(tuple(_relabel_line(c, mapping) for c in node.boundary),
                      node.interior)


@dataclass
class FiltrationTable:
    m: int
    n: int
    top_dimension: int
    counts: dict          # dimension -> number of strata
    cumulative: dict      # dimension -> number of strata of dimension <= p
    by_codimension: dict  # codimension -> number of strata

    def rows(self):
        """One row per dimension p: count, cumulative, codimension, and the
        shifted index used by the double-point filtration convention that
        tops out one lower (see README)."""
        for p in range(self.top_dimension + 1):
            yield {"dim": p,
                   "codim": self.top_dimension - p,
                   "count": self.counts.get(p, 0),
                   "cumulative": self.cumulative.get(p, 0),
                   "shifted_index": p - 1}


def filtration_table(m, n, boundary_order="fixed") -> FiltrationTable:
    """Counts of strata by dimension with cumulative totals (the filtration
    by number of double points, read through dim + codim = 2m + n - 2)."""
    records = enumerate_strata(m, n, boundary_order=boundary_order)
    top = 2 * m + n - 2
    counts = {}
    by_codim = {}
    for r in records:
        counts[r.dimension] = counts.get(r.dimension, 0) + 1
        by_codim[r.codimension] = by_codim.get(r.codimension, 0) + 1
    cumulative = {}
    running = 0
    for p in range(top + 1):
        running += counts.get(p, 0)
        cumulative[p] = running
    return FiltrationTable(m, n, top, counts, cumulative, by_codim)


# ---------------------------------------------------------------------------
# Grafting


def _shift_labels(node, closed_offset, line_offset):
    if isinstance(node, LineLeaf):
        return LineLeaf(node.label + line_offset)
    if isinstance(node, ClosedLeaf):
        return ClosedLeaf(node.label + closed_offset)
    if isinstance(node, ClosedVertex):
        return ClosedVertex(tuple(_shift_labels(c, closed_offset, line_offset)
                                  for c in node.children))
    return LineVertex(
        tuple(_shift_labels(c, closed_offset, line_offset) for c in node.boundary),
        tuple(_shift_labels(c, closed_offset, line_offset) for c in node.interior))


def graft_gamma(outer: StableTree, inners) -> StableTree:
    """Replace line leaf i of ``outer`` by the root of ``inners[i-1]``.

    Each graft creates one internal edge (the inner root's parent edge takes
    over the role its point at infinity played, so stability is preserved).
    Labels re-block as in the geometric composition: outer closed labels stay
    low, inner closed and line labels follow in block order.
    """
    inners = list(inners)
    if len(inners) != outer.line_arity:
        raise ArityMismatchError(outer.line_arity, len(inners))
    k = outer.closed_arity
    closed_offsets = []
    line_offsets = []
    c_off, l_off = k, 0
    for t in inners:
        closed_offsets.append(c_off)
        line_offsets.append(l_off)
        c_off += t.closed_arity
        l_off += t.line_arity

    def rebuild(node):
        if isinstance(node, LineLeaf):
            i = node.label
            return _shift_labels(inners[i - 1].root,
                                 closed_offsets[i - 1], line_offsets[i - 1])
        if isinstance(node, (ClosedLeaf, ClosedVertex)):
            return node
        return LineVertex(tuple(rebuild(c) for c in node.boundary), node.interior)

    return StableTree(rebuild(outer.root))


def graft_Gamma(outer: StableTree, inners) -> StableTree:
    """Replace closed leaf j of ``outer`` by the closed tree ``inners[j-1]``.

    Inners are closed nodes (a bare leaf is the identity graft and creates no
    edge; a closed vertex creates one).  Line content inside an inner is a
    color violation.
    """
    inners = list(inners)
    if len(inners) != outer.closed_arity:
        raise ArityMismatchError(outer.closed_arity, len(inners))
    for t in inners:
        if not isinstance(t, (ClosedLeaf, ClosedVertex)):
            raise ColorViolationError(
                f"inner grafts for closed slots must be closed trees, got {t!r}")
    sizes = []
    for t in inners:
        closed, line = [], []
        _walk_labels(t, closed, line)
        if sorted(closed) != list(range(1, len(closed) + 1)):
            raise MalformedTreeError(
                f"closed graft labels are not 1..m: {sorted(closed)}")
        sizes.append(len(closed))
    offsets = [sum(sizes[:j]) for j in range(len(sizes))]

    def rebuild(node):
        if isinstance(node, ClosedLeaf):
            j = node.label
            return _shift_labels(inners[j - 1], offsets[j - 1], 0)
        if isinstance(node, LineLeaf):
            return node
        if isinstance(node, ClosedVertex):
            return ClosedVertex(tuple(rebuild(c) for c in node.children))
        return LineVertex(tuple(rebuild(c) for c in node.boundary),
                          tuple(rebuild(c) for c in node.interior))

    return StableTree(rebuild(outer.root))


# ---------------------------------------------------------------------------
# The chain complex of the pure-boundary strata


def _nested(node):
    """(0,n) trees as nested tuples: leaf labels or ("v", children)."""
    if isinstance(node, LineLeaf):
        return node.label
    if isinstance(node, LineVertex):
        if node.interior:
            raise ValueError("pure boundary trees only")
        return ("v", tuple(_nested(c) for c in node.boundary))
    raise ValueError("pure boundary trees only")


def _nested_to_vertex(t):
    if isinstance(t, int):
        return LineLeaf(t)
    return LineVertex(tuple(_nested_to_vertex(c) for c in t[1]), ())


def _nested_dim(t):
    if isinstance(t, int):
        return 0
    return len(t[1]) - 2 + sum(_nested_dim(c) for c in t[1])


def _nested_boundary(t):
    """Signed facets of a planar tree: split a run of children off one vertex.

    Splitting s consecutive children starting after position r off an arity-b
    root carries (-1)^{r+s(b-r-s)} times the Koszul cost of the new vertex
    grafting past the subtrees to its left; a split below the root picks up
    the parity of the root and of everything to its left (Leibniz).  The
    square of the resulting operator vanishes, which the chain-complex tests
    pin down.
    """
    if isinstance(t, int):
        return {}
    children = t[1]
    b = len(children)
    out = {}

    def add(tree, coeff):
        out[tree] = out.get(tree, 0) + coeff
        if out[tree] == 0:
            del out[tree]

    for s in range(2, b):
        for r in range(0, b - s + 1):
            tt = b - r - s
            split = ("v", children[r:r + s])
            new = ("v", children[:r] + (split,) + children[r + s:])
            passed = sum(_nested_dim(c) for c in children[:r])
            add(new, (-1) ** ((r + s * tt + s * passed) % 2))
    for i, child in enumerate(children):
        prefix = (b - 2) + sum(_nested_dim(c) for c in children[:i])
        for sub, coeff in _nested_boundary(child).items():
            new = ("v", children[:i] + (sub,) + children[i + 1:])
            add(new, coeff * ((-1) ** (prefix % 2)))
    return out


@dataclass
class ChainComplex:
    """Exact integer chain complex of the fixed-order pure-boundary strata."""

    n: int
    basis: list          # basis[d] = list of nested trees of dimension d
    index: dict          # nested tree -> (dim, position)

    @staticmethod
    def boundary_of(tree):
        return _nested_boundary(tree)

    @property
    def dimensions(self) -> list:
        return [len(layer) for layer in self.basis]

    def boundary_matrix(self, d):
        """Rows: dimension d-1 basis; columns: dimension d basis."""
        rows = len(self.basis[d - 1]) if d - 1 >= 0 else 0
        cols = len(self.basis[d]) if d < len(self.basis) else 0
        matrix = [[0] * cols for _ in range(rows)]
        if d <= 0 or d >= len(self.basis):
            return matrix
        for j, tree in enumerate(self.basis[d]):
            for facet, coeff in _nested_boundary(tree).items():
                i = self.index[facet][1]
                matrix[i][j] = coeff
        return matrix

    def d_squared_is_zero(self) -> bool:
        for d in range(2, len(self.basis)):
            for tree in self.basis[d]:
                acc = {}
                for facet, c in _nested_boundary(tree).items():
                    for facet2, c2 in _nested_boundary(facet).items():
                        acc[facet2] = acc.get(facet2, 0) + c * c2
                if any(v != 0 for v in acc.values()):
                    return False
        return True

    def homology_ranks(self) -> list:
        ranks = [_integer_rank(self.boundary_matrix(d))
                 for d in range(len(self.basis) + 1)]
        betti = []
        for d in range(len(self.basis)):
            r_in = ranks[d + 1] if d + 1 < len(ranks) else 0
            betti.append(len(self.basis[d]) - ranks[d] - r_in)
        return betti

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * len(layer) for d, layer in enumerate(self.basis))


def _integer_rank(matrix) -> int:
    """Exact rank over the rationals via fraction-free elimination."""
    rows = [[Fraction(x) for x in row] for row in matrix if any(row)]
    if not rows:
        return 0
    cols = len(rows[0])
    rank = 0
    col = 0
    while rank < len(rows) and col < cols:
        pivot = None
        for r in range(rank, len(rows)):
            if rows[r][col]:
                pivot = r
                break
        if pivot is None:
            col += 1
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pr = rows[rank]
        inv = 1 / pr[col]
        for r in range(rank + 1, len(rows)):
            if rows[r][col]:
                factor = rows[r][col] * inv
                rows[r] = [a - factor * b for a, b in zip(rows[r], pr)]
        rank += 1
        col += 1
    return rank


def associahedron_complex(n: int) -> ChainComplex:
    """Chain complex on the fixed-order strata with no closed content,
    graded by dimension, boundary by single-vertex splittings."""
    if n < 2:
        raise ValueError("need at least two boundary labels")
    records = enumerate_strata(0, n, boundary_order="fixed")
    top = n - 2
    basis = [[] for _ in range(top + 1)]
    for rec in records:
        basis[rec.dimension].append(_nested(rec.tree.root))
    for layer in basis:
        layer.sort(key=str)
    index = {}
    for d, layer in enumerate(basis):
        for i, tree in enumerate(layer):
            index[tree] = (d, i)
    return ChainComplex(n, basis, index)


# ---------------------------------------------------------------------------
# JSON serialization


def tree_to_dict(node):
    if isinstance(node, StableTree):
        return tree_to_dict(node.root)
    if isinstance(node, LineLeaf):
        return {"kind": "line", "leaf": node.label}
    if isinstance(node, ClosedLeaf):
        return {"kind": "closed", "leaf": node.label}
    if isinstance(node, ClosedVertex):
        return {"kind": "closed", "interior": [tree_to_dict(c) for c in node.children]}
    return {"kind": "line",
            "boundary": [tree_to_dict(c) for c in node.boundary],
            "interior": [tree_to_dict(c) for c in node.interior]}


def tree_from_dict(doc):
    try:
        kind = doc["kind"]
    except (TypeError, KeyError):
        raise MalformedTreeError("tree node needs a 'kind' field") from None
    if kind not in ("line", "closed"):
        raise MalformedTreeError(f"unknown node kind {kind!r}")
    if "leaf" in doc:
        label = int(doc["leaf"])
        return LineLeaf(label) if kind == "line" else ClosedLeaf(label)
    if kind == "closed":
        if doc.get("boundary"):
            raise MalformedTreeError("closed vertices cannot carry boundary children")
        return ClosedVertex(tuple(tree_from_dict(c) for c in doc.get("interior", [])))
    return LineVertex(tuple(tree_from_dict(c) for c in doc.get("boundary", [])),
                      tuple(tree_from_dict(c) for c in doc.get("interior", [])))
