"""Independent reference computations the tests compare against.

Each oracle deliberately takes a different route from the library code:
polygon dissections instead of tree enumeration, arithmetic recurrences
instead of object counting, inverse-side constructions instead of
forward substitution.
"""

import itertools
import math


def word_substitution_inverse(outer, inners):
    """Word-operad composition built from the inverse side: place each
    global label by locating its block letter inside the outer word."""
    sizes = [len(w) for w in inners]
    offsets = [sum(sizes[:i]) for i in range(len(sizes))]
    result = [None] * sum(sizes)
    filled = 0
    for letter in outer:
        inner = inners[letter - 1]
        for local in inner:
            result[filled] = offsets[letter - 1] + local
            filled += 1
    return tuple(result)


def polygon_dissection_counts(n):
    """Faces of the order-n Stasheff polytope via noncrossing diagonal sets
    of an (n+1)-gon: j diagonals <-> faces of dimension n-2-j.

    Returns a dict dimension -> count.
    """
    vertices = n + 1
    diagonals = [(i, j) for i in range(1, vertices + 1)
                 for j in range(i + 2, vertices + 1)
                 if not (i == 1 and j == vertices)]

    def crosses(d1, d2):
        (a, b), (c, d) = d1, d2
        return (a < c < b < d) or (c < a < d < b)

    counts = {n - 2: 1}  # the empty dissection is the top cell
    level = [frozenset([d]) for d in diagonals]
    j = 1
    while level:
        counts[n - 2 - j] = len(level)
        nxt = set()
        for ds in level:
            for d in diagonals:
                if d not in ds and all(not crosses(d, e) for e in ds):
                    nxt.add(ds | {d})
        level = list(nxt)
        j += 1
    return counts


def labeled_multifurcating_tree_count(n):
    """Number of rooted trees with n labeled leaves, every internal vertex
    of arity >= 2, children unordered; computed by the multinomial
    recurrence over integer partitions, no tree objects involved."""
    if n == 1:
        return 1

    def partitions(total, max_part):
        if total == 0:
            yield []
            return
        for part in range(min(total, max_part), 0, -1):
            for rest in partitions(total - part, part):
                yield [part] + rest

    total = 0
    for parts in partitions(n, n - 1):
        if len(parts) < 2:
            continue
        ways = math.factorial(n)
        for p in parts:
            ways //= math.factorial(p)
        for mult in (parts.count(v) for v in set(parts)):
            ways //= math.factorial(mult)
        for p in parts:
            ways *= labeled_multifurcating_tree_count(p)
        total += ways
    return total


def facet_count(m, n):
    """Codimension-one strata counted directly as single degenerations.

    Either a subset of at least two interior punctures collides into a
    bubble off the line, or a bubble on the line absorbs a contiguous run
    of b boundary punctures (inserted at one of the n-b+1 slots, n+1 when
    b = 0) together with some a interior ones; both the new component and
    the remaining root component must stay stable.
    """
    total = sum(math.comb(m, s) for s in range(2, m + 1))
    for a in range(0, m + 1):
        for b in range(0, n + 1):
            if 2 * a + b < 2:
                continue  # the bubble itself must be stable
            if 2 * (m - a) + (n - b) + 1 < 2:
                continue  # root keeps n-b leaves plus the new double point
            positions = n + 1 if b == 0 else n - b + 1
            total += math.comb(m, a) * positions
    return total


def equivariant_map_count(k, l, size1, size2):
    """Count equivariant maps from the arity-(k+l) symmetric group to a
    product of sets of the given sizes by filtering all functions.

    The block subgroup acts on the target coordinatewise through nothing
    (trivial actions), so equivariance means constancy on left cosets.
    Feasible only for tiny inputs.
    """
    m = k + l
    group = list(itertools.permutations(range(1, m + 1)))
    target = [(x, y) for x in range(size1) for y in range(size2)]

    def act_block(sigma, tau, g):
        # left translation by the block-diagonal permutation
        block = list(sigma) + [k + t for t in tau]
        return tuple(block[g[i] - 1] for i in range(m))

    subgroup = [(sigma, tau)
                for sigma in itertools.permutations(range(1, k + 1))
                for tau in itertools.permutations(range(1, l + 1))]
    count = 0
    for func in itertools.product(target, repeat=len(group)):
        table = dict(zip(group, func))
        if all(table[act_block(s, t, g)] == table[g]
               for g in group for (s, t) in subgroup):
            count += 1
    return count


def dot2(a, b):
    return a[0] * b[0] + a[1] * b[1]


def affine_image_disk(center, radius, cx, cy, r):
    """Independent evaluation of z -> c + r z on a disk, as plain tuples."""
    return (cx + r * center[0], cy + r * center[1], r * radius)
