"""Generic axiom checking for operad and relative-operad instances.

Discrete instances are checked exhaustively over every tuple whose result
stays within the arity budget, so the first witness found is minimal in total
size.  Sampled instances (geometry, endomorphisms) draw ``sample_budget``
seeded random cases per law.  Reports list each law with pass/fail, the number
of cases, and a witness on failure.
"""

from __future__ import annotations

import itertools
import random

from .graded import koszul_sign
from .permutations import (Permutation, all_permutations, block_permutation,
                           direct_sum)
from .reporting import CheckReport, CheckResult


def _tuples_with_sum_le(allowed, length, cap):
    """All tuples over ``allowed`` of the given length with sum <= cap."""
    allowed = sorted(set(allowed))
    out = []

    def rec(prefix, total):
        if len(prefix) == length:
            out.append(tuple(prefix))
            return
        for a in allowed:
            if total + a <= cap:
                rec(prefix + [a], total + a)

    rec([], 0)
    return out


def _pair_tuples(pairs, length, cap):
    """All tuples of (m, n) pairs of the given length with total m+n <= cap."""
    out = []

    def rec(prefix, total):
        if len(prefix) == length:
            out.append(tuple(prefix))
            return
        for (m, n) in pairs:
            if total + m + n <= cap:
                rec(prefix + [(m, n)], total + m + n)

    rec([], 0)
    return out


class _LawRunner:
    """Accumulates pass/fail per law; keeps the first witness."""

    def __init__(self, report: CheckReport):
        self.report = report

    def run(self, name, cases, checker):
        count = 0
        witness = None
        for case in cases:
            count += 1
            failure = checker(case)
            if failure is not None and witness is None:
                witness = failure
        self.report.add(CheckResult(name, witness is None, count, witness))


# ---------------------------------------------------------------------------
# Plain operads


def _operad_shapes(law, arities, budget):
    """Arity shapes per law, bounded so every intermediate stays in budget."""
    positive = [n for n in arities if n >= 1]
    shapes = []
    if law == "associativity":
        for k in positive:
            for ns in _tuples_with_sum_le(arities, k, budget):
                for ms in _tuples_with_sum_le(arities, sum(ns), budget):
                    shapes.append((k, ns, ms))
    elif law == "unit":
        shapes = [(k,) for k in arities]
    elif law in ("equivariance_outer", "equivariance_inner"):
        for k in positive:
            for ns in _tuples_with_sum_le(arities, k, budget):
                shapes.append((k, ns))
    elif law == "action":
        shapes = [(n,) for n in positive]
    return shapes


def _operad_cases(instance, law, arity_budget, sample_budget, rng):
    """Yield case tuples for one law: every element combination per shape for
    exhaustive instances, ``sample_budget`` random draws otherwise."""
    arities = instance.arities(arity_budget)
    shapes = _operad_shapes(law, arities, arity_budget)
    if not shapes:
        return
    if instance.exhaustive:
        for shape in shapes:
            if law == "associativity":
                k, ns, ms = shape
                pools = [instance.elements(k)]
                pools += [instance.elements(n) for n in ns]
                pools += [instance.elements(m) for m in ms]
                for combo in itertools.product(*pools):
                    yield combo[0], list(combo[1:1 + k]), list(combo[1 + k:]), ns
            elif law == "unit":
                for a in instance.elements(shape[0]):
                    yield (a,)
            elif law == "equivariance_outer":
                k, ns = shape
                pools = [instance.elements(k)]
                pools += [instance.elements(n) for n in ns]
                for combo in itertools.product(*pools):
                    for sigma in all_permutations(k):
                        yield combo[0], list(combo[1:]), sigma
            elif law == "equivariance_inner":
                k, ns = shape
                pools = [instance.elements(k)]
                pools += [instance.elements(n) for n in ns]
                for combo in itertools.product(*pools):
                    for taus in itertools.product(
                            *[list(all_permutations(n)) for n in ns]):
                        yield combo[0], list(combo[1:]), list(taus)
            elif law == "action":
                n = shape[0]
                for x in instance.elements(n):
                    for sigma in all_permutations(n):
                        for tau in all_permutations(n):
                            yield x, sigma, tau
    else:
        for _ in range(sample_budget):
            shape = rng.choice(shapes)
            if law == "associativity":
                k, ns, ms = shape
                yield (instance.random_element(rng, k),
                       [instance.random_element(rng, n) for n in ns],
                       [instance.random_element(rng, m) for m in ms], ns)
            elif law == "unit":
                yield (instance.random_element(rng, shape[0]),)
            elif law == "equivariance_outer":
                k, ns = shape
                yield (instance.random_element(rng, k),
                       [instance.random_element(rng, n) for n in ns],
                       _random_permutation(rng, k))
            elif law == "equivariance_inner":
                k, ns = shape
                yield (instance.random_element(rng, k),
                       [instance.random_element(rng, n) for n in ns],
                       [_random_permutation(rng, n) for n in ns])
            elif law == "action":
                n = shape[0]
                yield (instance.random_element(rng, n),
                       _random_permutation(rng, n), _random_permutation(rng, n))


def _random_permutation(rng, n):
    return Permutation(tuple(rng.sample(range(1, n + 1), n)))


def _blocks(items, sizes):
    out = []
    pos = 0
    for s in sizes:
        out.append(items[pos:pos + s])
        pos += s
    return out


def _unshuffle_sign(outer_degrees, block_degrees):
    """Koszul sign for regrouping (b_1..b_k, C_1..C_k) as (b_1,C_1,b_2,C_2,...):
    block C_i moves left past b_{i+1}..b_k."""
    exponent = 0
    for i, c_deg in enumerate(block_degrees):
        exponent += c_deg * sum(outer_degrees[i + 1:])
    return -1 if exponent % 2 else 1


def relative_gamma_label_shuffle(k, m_sizes, n_sizes, p_sizes) -> Permutation:
    """Relabeling that aligns the two evaluation orders of the internal
    composition of a relative operad.

    Composing twice accumulates base-type content (full disks, first-space
    inputs) level by level: outer's k, then the inners' blocks (m_sizes),
    then the second level's blocks (p_sizes, in global slot order).
    Composing inside-out groups each inner with the second-level blocks of
    its own n_i slots.  The returned permutation sends the inside-out
    position of each item to its level-by-level position, so acting with it
    on the inside-out result reproduces the level-by-level labels.
    """
    level_order = [("outer", i) for i in range(k)]
    level_order += [("inner", i, t) for i, m in enumerate(m_sizes) for t in range(m)]
    level_order += [("second", j, t) for j, p in enumerate(p_sizes) for t in range(p)]
    nested_order = [("outer", i) for i in range(k)]
    slot = 0
    for i, m in enumerate(m_sizes):
        nested_order += [("inner", i, t) for t in range(m)]
        for j in range(slot, slot + n_sizes[i]):
            nested_order += [("second", j, t) for t in range(p_sizes[j])]
        slot += n_sizes[i]
    position = {item: idx + 1 for idx, item in enumerate(level_order)}
    return Permutation(tuple(position[item] for item in nested_order))


def check_operad_axioms(instance, arity_budget=3, sample_budget=50,
                        seed=0) -> CheckReport:
    """Check associativity, units, equivariance, and the action laws.

    Relative instances (anything with a ``Gamma``) are routed to
    check_relative_axioms with the full law set.
    """
    if getattr(instance, "kind", "operad") == "relative":
        return check_relative_axioms(instance, arity_budget, sample_budget, seed)
    rng = random.Random(seed)
    report = CheckReport(f"operad axioms: {instance.name}", metadata={
        "instance": instance.name,
        "mode": "exhaustive" if instance.exhaustive else "sampled",
        "arity_budget": arity_budget,
        "sample_budget": None if instance.exhaustive else sample_budget,
        "seed": None if instance.exhaustive else seed,
    })
    runner = _LawRunner(report)

    def describe_many(els):
        return [instance.describe(e) for e in els]

    def assoc(case):
        a, bs, cs, ns = case
        lhs = instance.gamma(instance.gamma(a, bs), cs)
        c_blocks = _blocks(cs, ns)
        sign = _unshuffle_sign(
            [instance.element_degree(b) for b in bs],
            [sum(instance.element_degree(c) for c in blk) for blk in c_blocks])
        rhs = instance.scale(sign, instance.gamma(
            a, [instance.gamma(b, blk) for b, blk in zip(bs, c_blocks)]))
        if instance.eq(lhs, rhs):
            return None
        return {"outer": instance.describe(a), "inners": describe_many(bs),
                "second_level": describe_many(cs),
                "lhs": instance.describe(lhs), "rhs": instance.describe(rhs)}

    def unit(case):
        (a,) = case
        left = instance.gamma(instance.unit(), [a])
        arity = _element_arity(instance, a)
        right = instance.gamma(a, [instance.unit()] * arity)
        if instance.eq(left, a) and instance.eq(right, a):
            return None
        return {"element": instance.describe(a),
                "left": instance.describe(left),
                "right": instance.describe(right)}

    def equi_outer(case):
        a, bs, sigma = case
        inv = sigma.inverse()
        lhs = instance.gamma(instance.act(sigma, a),
                             [bs[inv(j) - 1] for j in range(1, sigma.degree + 1)])
        sizes = [_element_arity(instance, b) for b in bs]
        sign = koszul_sign(sigma, [instance.element_degree(b) for b in bs])
        rhs = instance.scale(sign, instance.act(block_permutation(sigma, sizes),
                                                instance.gamma(a, bs)))
        if instance.eq(lhs, rhs):
            return None
        return {"outer": instance.describe(a), "inners": describe_many(bs),
                "sigma": list(sigma.images),
                "lhs": instance.describe(lhs), "rhs": instance.describe(rhs)}

    def equi_inner(case):
        a, bs, taus = case
        lhs = instance.gamma(a, [instance.act(t, b) for t, b in zip(taus, bs)])
        rhs = instance.act(direct_sum(taus), instance.gamma(a, bs))
        if instance.eq(lhs, rhs):
            return None
        return {"outer": instance.describe(a), "inners": describe_many(bs),
                "taus": [list(t.images) for t in taus],
                "lhs": instance.describe(lhs), "rhs": instance.describe(rhs)}

    def action_laws(case):
        x, sigma, tau = case
        ident = Permutation.identity(sigma.degree)
        if not instance.eq(instance.act(ident, x), x):
            return {"element": instance.describe(x), "law": "identity"}
        lhs = instance.act(sigma * tau, x)
        rhs = instance.act(sigma, instance.act(tau, x))
        if instance.eq(lhs, rhs):
            return None
        return {"element": instance.describe(x), "sigma": list(sigma.images),
                "tau": list(tau.images), "law": "composition"}

    for law, checker in [("associativity", assoc), ("unit", unit),
                         ("equivariance_outer", equi_outer),
                         ("equivariance_inner", equi_inner),
                         ("action", action_laws)]:
        runner.run(law, _operad_cases(instance, law, arity_budget,
                                      sample_budget, rng), checker)
    return report


def _element_arity(instance, element) -> int:
    if hasattr(instance, "arity"):
        return instance.arity(element)
    if hasattr(element, "arity"):
        return element.arity
    if hasattr(element, "m"):
        return element.m
    raise TypeError(f"cannot determine arity of {element!r}")


# ---------------------------------------------------------------------------
# Relative operads / modules


def _relative_shapes(instance, law, budget):
    """Shape tuples per relative law, all intermediates within budget."""
    pairs = instance.pairs(budget)
    base_arities = instance.base.arities(budget)
    shapes = []
    if law == "gamma_associativity":
        for (k, l) in pairs:
            for inner_pairs in _pair_tuples(pairs, l, budget - k):
                mid_n = sum(n for _, n in inner_pairs)
                remaining = budget - k - sum(m for m, _ in inner_pairs)
                for second in _pair_tuples(pairs, mid_n, max(remaining, 0)):
                    shapes.append((k, l, inner_pairs, second))
    elif law in ("gamma_unit", "Gamma_unit"):
        shapes = [(k, l) for (k, l) in pairs]
    elif law == "gamma_equivariance":
        for (k, l) in pairs:
            for inner_pairs in _pair_tuples(pairs, l, budget - k):
                shapes.append((k, l, inner_pairs))
    elif law == "Gamma_associativity":
        for (k, l) in pairs:
            for ds in _tuples_with_sum_le(base_arities, k, budget):
                for es in _tuples_with_sum_le(base_arities, sum(ds), budget):
                    shapes.append((k, l, ds, es))
    elif law == "Gamma_equivariance":
        for (k, l) in pairs:
            for ds in _tuples_with_sum_le(base_arities, k, budget):
                shapes.append((k, l, ds))
    elif law == "interchange":
        for (k, l) in pairs:
            for inner_pairs in _pair_tuples(pairs, l, budget - k):
                total_m = k + sum(m for m, _ in inner_pairs)
                for ds in _tuples_with_sum_le(base_arities, total_m, budget):
                    shapes.append((k, l, inner_pairs, ds))
    return shapes


def _relative_cases(instance, law, budget, sample_budget, rng):
    shapes = _relative_shapes(instance, law, budget)
    if not shapes:
        return
    if instance.exhaustive:
        for shape in shapes:
            if law == "gamma_associativity":
                k, l, inner_pairs, second = shape
                pools = [instance.elements(k, l)]
                pools += [instance.elements(m, n) for m, n in inner_pairs]
                pools += [instance.elements(m, n) for m, n in second]
                for combo in itertools.product(*pools):
                    yield (combo[0], list(combo[1:1 + l]), list(combo[1 + l:]),
                           [n for _, n in inner_pairs])
            elif law in ("gamma_unit", "Gamma_unit"):
                for s in instance.elements(*shape):
                    yield (s,)
            elif law == "gamma_equivariance":
                k, l, inner_pairs = shape
                pools = [instance.elements(k, l)]
                pools += [instance.elements(m, n) for m, n in inner_pairs]
                for combo in itertools.product(*pools):
                    for sigma in all_permutations(l):
                        yield combo[0], list(combo[1:]), sigma
            elif law == "Gamma_associativity":
                k, l, ds_ar, es_ar = shape
                pools = [instance.elements(k, l)]
                pools += [instance.base.elements(d) for d in ds_ar]
                pools += [instance.base.elements(e) for e in es_ar]
                for combo in itertools.product(*pools):
                    yield (combo[0], list(combo[1:1 + k]),
                           list(combo[1 + k:]), ds_ar)
            elif law == "Gamma_equivariance":
                k, l, ds_ar = shape
                pools = [instance.elements(k, l)]
                pools += [instance.base.elements(d) for d in ds_ar]
                for combo in itertools.product(*pools):
                    for sigma in all_permutations(k):
                        yield combo[0], list(combo[1:]), sigma
            elif law == "interchange":
                k, l, inner_pairs, ds_ar = shape
                pools = [instance.elements(k, l)]
                pools += [instance.elements(m, n) for m, n in inner_pairs]
                pools += [instance.base.elements(d) for d in ds_ar]
                for combo in itertools.product(*pools):
                    yield (combo[0], list(combo[1:1 + l]), list(combo[1 + l:]),
                           [m for m, _ in inner_pairs])
    else:
        for _ in range(sample_budget):
            shape = rng.choice(shapes)
            if law == "gamma_associativity":
                k, l, inner_pairs, second = shape
                yield (instance.random_element(rng, k, l),
                       [instance.random_element(rng, m, n) for m, n in inner_pairs],
                       [instance.random_element(rng, m, n) for m, n in second],
                       [n for _, n in inner_pairs])
            elif law in ("gamma_unit", "Gamma_unit"):
                yield (instance.random_element(rng, *shape),)
            elif law == "gamma_equivariance":
                k, l, inner_pairs = shape
                yield (instance.random_element(rng, k, l),
                       [instance.random_element(rng, m, n) for m, n in inner_pairs],
                       _random_permutation(rng, l))
            elif law == "Gamma_associativity":
                k, l, ds_ar, es_ar = shape
                yield (instance.random_element(rng, k, l),
                       [instance.base.random_element(rng, d) for d in ds_ar],
                       [instance.base.random_element(rng, e) for e in es_ar],
                       ds_ar)
            elif law == "Gamma_equivariance":
                k, l, ds_ar = shape
                yield (instance.random_element(rng, k, l),
                       [instance.base.random_element(rng, d) for d in ds_ar],
                       _random_permutation(rng, k))
            elif law == "interchange":
                k, l, inner_pairs, ds_ar = shape
                yield (instance.random_element(rng, k, l),
                       [instance.random_element(rng, m, n) for m, n in inner_pairs],
                       [instance.base.random_element(rng, d) for d in ds_ar],
                       [m for m, _ in inner_pairs])


def check_relative_axioms(instance, arity_budget=2, sample_budget=50, seed=0,
                          module_only=False) -> CheckReport:
    """Check the module laws (structure map over the base) and, unless
    ``module_only``, the internal composition laws and the interchange."""
    rng = random.Random(seed)
    report = CheckReport(f"relative operad axioms: {instance.name}", metadata={
        "instance": instance.name,
        "mode": "exhaustive" if instance.exhaustive else "sampled",
        "arity_budget": arity_budget,
        "sample_budget": None if instance.exhaustive else sample_budget,
        "seed": None if instance.exhaustive else seed,
        "laws": "module" if module_only else "relative",
    })
    runner = _LawRunner(report)

    def pair_of(element):
        return instance.arity_pair(element)

    def gamma_assoc(case):
        s, ts, cs, n_sizes = case
        k, _ = pair_of(s)
        lhs = instance.gamma(instance.gamma(s, ts), cs)
        c_blocks = _blocks(cs, n_sizes)
        sign = _unshuffle_sign(
            [instance.element_degree(t) for t in ts],
            [sum(instance.element_degree(c) for c in blk) for blk in c_blocks])
        nested = instance.gamma(
            s, [instance.gamma(t, blk) for t, blk in zip(ts, c_blocks)])
        # the two evaluation orders list the accumulated base-type content in
        # different block orders; the canonical relabeling aligns them
        chi = relative_gamma_label_shuffle(
            k, [pair_of(t)[0] for t in ts], n_sizes,
            [pair_of(c)[0] for c in cs])
        final_n = sum(pair_of(c)[1] for c in cs)
        rhs = instance.scale(sign, instance.act(
            chi, Permutation.identity(final_n), nested))
        if instance.eq(lhs, rhs):
            return None
        return {"outer": instance.describe(s),
                "inners": [instance.describe(t) for t in ts],
                "second_level": [instance.describe(c) for c in cs],
                "lhs": instance.describe(lhs), "rhs": instance.describe(rhs)}

    def gamma_unit(case):
        (s,) = case
        u = instance.gamma_unit()
        if u is None:
            return None
        _, l = pair_of(s)
        right = instance.gamma(s, [u] * l)
        left = instance.gamma(u, [s])
        if instance.eq(right, s) and instance.eq(left, s):
            return None
        return {"element": instance.describe(s),
                "left": instance.describe(left),
                "right": instance.describe(right)}

    def gamma_equi(case):
        s, ts, sigma = case
        k, l = pair_of(s)
        inv = sigma.inverse()
        lhs = instance.gamma(
            instance.act(Permutation.identity(k), sigma, s),
            [ts[inv(j) - 1] for j in range(1, l + 1)])
        m_sizes = [pair_of(t)[0] for t in ts]
        n_sizes = [pair_of(t)[1] for t in ts]
        disk_perm = direct_sum([Permutation.identity(k),
                                block_permutation(sigma, m_sizes)])
        semi_perm = block_permutation(sigma, n_sizes)
        sign = koszul_sign(sigma, [instance.element_degree(t) for t in ts])
        rhs = instance.scale(sign, instance.act(disk_perm, semi_perm,
                                                instance.gamma(s, ts)))
        if instance.eq(lhs, rhs):
            return None
        return {"outer": instance.describe(s),
                "inners": [instance.describe(t) for t in ts],
                "sigma": list(sigma.images),
                "lhs": instance.describe(lhs), "rhs": instance.describe(rhs)}

    def Gamma_assoc(case):
        s, ds, es, d_sizes = case
        lhs = instance.Gamma(instance.Gamma(s, ds), es)
        e_blocks = _blocks(es, d_sizes)
        sign = _unshuffle_sign(
            [instance.base.element_degree(d) for d in ds],
            [sum(instance.base.element_degree(e) for e in blk) for blk in e_blocks])
        rhs = instance.scale(sign, instance.Gamma(
            s, [instance.base.gamma(d, blk) for d, blk in zip(ds, e_blocks)]))
        if instance.eq(lhs, rhs):
            return None
        return {"outer": instance.describe(s),
                "base_inners": [instance.base.describe(d) for d in ds],
                "second_level": [instance.base.describe(e) for e in es],
                "lhs": instance.describe(lhs), "rhs": instance.describe(rhs)}

    def Gamma_unit(case):
        (s,) = case
        k, _ = pair_of(s)
        result = instance.Gamma(s, [instance.base.unit()] * k)
        if instance.eq(result, s):
            return None
        return {"element": instance.describe(s),
                "result": instance.describe(result)}

    def Gamma_equi(case):
        s, ds, sigma = case
        k, l = pair_of(s)
        inv = sigma.inverse()
        lhs = instance.Gamma(
            instance.act(sigma, Permutation.identity(l), s),
            [ds[inv(j) - 1] for j in range(1, k + 1)])
        sizes = [_element_arity(instance.base, d) for d in ds]
        sign = koszul_sign(sigma, [instance.base.element_degree(d) for d in ds])
        rhs = instance.scale(sign, instance.act(
            block_permutation(sigma, sizes), Permutation.identity(l),
            instance.Gamma(s, ds)))
        if instance.eq(lhs, rhs):
            return None
        return {"outer": instance.describe(s),
                "base_inners": [instance.base.describe(d) for d in ds],
                "sigma": list(sigma.images),
                "lhs": instance.describe(lhs), "rhs": instance.describe(rhs)}

    def interchange(case):
        s, ts, ds, m_sizes = case
        k, _ = pair_of(s)
        lhs = instance.Gamma(instance.gamma(s, ts), ds)
        head, rest = ds[:k], ds[k:]
        d_blocks = _blocks(rest, m_sizes)
        t_degrees = [instance.element_degree(t) for t in ts]
        # regroup (t_1..t_l, d_head, D_1..D_l) as (d_head, t_1, D_1, ...)
        exponent = sum(instance.base.element_degree(d) for d in head) \
            * sum(t_degrees)
        for i, blk in enumerate(d_blocks):
            exponent += sum(instance.base.element_degree(d) for d in blk) \
                * sum(t_degrees[i + 1:])
        sign = -1 if exponent % 2 else 1
        rhs = instance.scale(sign, instance.gamma(
            instance.Gamma(s, head),
            [instance.Gamma(t, blk) for t, blk in zip(ts, d_blocks)]))
        if instance.eq(lhs, rhs):
            return None
        return {"outer": instance.describe(s),
                "inners": [instance.describe(t) for t in ts],
                "base_inners": [instance.base.describe(d) for d in ds],
                "lhs": instance.describe(lhs), "rhs": instance.describe(rhs)}

    laws = [("Gamma_associativity", Gamma_assoc),
            ("Gamma_unit", Gamma_unit),
            ("Gamma_equivariance", Gamma_equi)]
    if not module_only:
        laws += [("gamma_associativity", gamma_assoc),
                 ("gamma_unit", gamma_unit),
                 ("gamma_equivariance", gamma_equi),
                 ("interchange", interchange)]
    for law, checker in laws:
        runner.run(law, _relative_cases(instance, law, arity_budget,
                                        sample_budget, rng), checker)
    return report
