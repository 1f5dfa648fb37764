"""Operad and operad-module instances plus the generic axiom checker.

The same checker drives every instance shipped here: discrete ones (the
symmetric-group word operad, the one-point-per-arity operad, table-driven
fixtures, their product relative operad, tensor products of modules) are
checked exhaustively within an arity budget; geometric and endomorphism
instances are checked on seeded pseudo-random samples.  Failures are reported
with a witness, never raised.

Conventions: all symmetric-group actions are left actions; composition labels
its output in block order (slot 1's content first).  Equivariance in a graded
instance carries the Koszul sign for permuting the inner operations, which is
+1 whenever all operation degrees vanish.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from . import geometry
from .errors import (ArityMismatchError, ArityOverflowError, BaseMismatchError,
                     InvalidFixtureError, MissingUnitError)
from .graded import (GradedSpace, MultilinearMap, _basis_tuples,
                     _mixed_basis_tuples)
from .permutations import Permutation, all_permutations


# ---------------------------------------------------------------------------
# Discrete operads


class DiscreteOperad:
    """Finite set-level operad: components per arity, composition, unit, action."""

    exhaustive = True
    kind = "operad"

    def __init__(self, name, components, unit, gamma_fn, act_fn, arity_fn):
        self.name = name
        self._components = {n: tuple(els) for n, els in components.items()}
        self._unit = unit
        self._gamma = gamma_fn
        self._act = act_fn
        self._arity = arity_fn

    def arities(self, budget=None):
        ns = sorted(self._components)
        return [n for n in ns if budget is None or n <= budget]

    def elements(self, arity):
        return list(self._components.get(arity, ()))

    def arity(self, element) -> int:
        return self._arity(element)

    def unit(self):
        return self._unit

    def gamma(self, outer, inners):
        inners = list(inners)
        if len(inners) != self.arity(outer):
            raise ArityMismatchError(self.arity(outer), len(inners))
        return self._gamma(outer, inners)

    def act(self, perm: Permutation, element):
        return self._act(perm, element)

    def eq(self, a, b):
        return a == b

    def describe(self, element):
        return list(element) if isinstance(element, tuple) else element

    def element_degree(self, element) -> int:
        return 0

    def scale(self, sign, element):
        if sign != 1:
            raise ValueError("set-level elements cannot be negated")
        return element


def make_associative_operad(max_arity: int) -> DiscreteOperad:
    """Arity n holds the words on {1..n} (permutations in image form);
    composition is block substitution of words; the action relabels letters."""
    if max_arity < 1:
        raise ValueError("max_arity must be >= 1")
    components = {n: [tuple(w) for w in itertools.permutations(range(1, n + 1))]
                  for n in range(1, max_arity + 1)}

    def gamma(outer, inners):
        offsets = [0]
        for g in inners[:-1]:
            offsets.append(offsets[-1] + len(g))
        word = []
        for letter in outer:
            g = inners[letter - 1]
            base = offsets[letter - 1]
            word.extend(base + c for c in g)
        return tuple(word)

    def act(perm, element):
        return tuple(perm(c) for c in element)

    return DiscreteOperad("as", components, (1,), gamma, act, len)


def make_commutative_operad(max_arity: int) -> DiscreteOperad:
    """One element per arity, including arity 0; all compositions forced."""
    components = {n: [n] for n in range(0, max_arity + 1)}
    return DiscreteOperad(
        "comm", components, 1,
        lambda outer, inners: sum(inners),
        lambda perm, element: element,
        lambda element: element)


def discrete_operad_from_json(doc) -> DiscreteOperad:
    """Table-driven operad from the JSON fixture format."""
    try:
        components = {int(n): tuple(els) for n, els in doc["components"].items()}
        unit = doc["unit"]
        gamma_table = {}
        for entry in doc.get("gamma", []):
            gamma_table[(entry["outer"], tuple(entry["inners"]))] = entry["result"]
        act_table = {}
        for entry in doc.get("action", []):
            act_table[(tuple(entry["perm"]), entry["element"])] = entry["result"]
    except (KeyError, TypeError, AttributeError) as exc:
        raise InvalidFixtureError(f"bad operad fixture: {exc}") from exc
    arity_of = {}
    for n, els in components.items():
        for el in els:
            if el in arity_of:
                raise InvalidFixtureError(f"element {el!r} appears in two arities")
            arity_of[el] = n

    def gamma(outer, inners):
        key = (outer, tuple(inners))
        if key not in gamma_table:
            raise InvalidFixtureError(f"missing composition entry for {key!r}")
        return gamma_table[key]

    def act(perm, element):
        if perm.is_identity():
            return element
        key = (perm.images, element)
        if key not in act_table:
            raise InvalidFixtureError(f"missing action entry for {key!r}")
        return act_table[key]

    return DiscreteOperad(doc.get("name", "fixture"), components, unit,
                          gamma, act, lambda el: arity_of[el])


def _fixture_name(element) -> str:
    if isinstance(element, str):
        return element
    if isinstance(element, tuple):
        return "w" + "".join(str(c) for c in element)
    return f"e{element}"


def discrete_operad_to_json(operad: DiscreteOperad, budget: int) -> dict:
    """Dump composition and action tables with results of arity <= budget.

    Elements are stringified so the fixture is self-contained; the table
    covers every composition whose result stays within the budget.
    """
    from .axiomcheck import _tuples_with_sum_le
    components = {str(n): [_fixture_name(el) for el in operad.elements(n)]
                  for n in operad.arities(budget)}
    gamma_entries = []
    for k in operad.arities(budget):
        for ns in _tuples_with_sum_le(operad.arities(budget), k, budget):
            for outer in operad.elements(k):
                for inners in itertools.product(*[operad.elements(n) for n in ns]):
                    gamma_entries.append({
                        "outer": _fixture_name(outer),
                        "inners": [_fixture_name(g) for g in inners],
                        "result": _fixture_name(operad.gamma(outer, list(inners))),
                    })
    act_entries = []
    for n in operad.arities(budget):
        for perm in all_permutations(n):
            if perm.is_identity():
                continue
            for el in operad.elements(n):
                act_entries.append({
                    "perm": list(perm.images),
                    "element": _fixture_name(el),
                    "result": _fixture_name(operad.act(perm, el)),
                })
    return {"name": operad.name, "components": components,
            "unit": _fixture_name(operad.unit()),
            "gamma": gamma_entries, "action": act_entries}


# ---------------------------------------------------------------------------
# Symmetric collections, modules, and their tensor product


class SymmetricCollection:
    """Components indexed by arity with a left symmetric-group action."""

    def __init__(self, name, components, act_fn, base=None):
        self.name = name
        self._components = {m: tuple(els) for m, els in components.items()}
        self._act = act_fn
        self.base = base

    def arities(self):
        return sorted(self._components)

    def elements(self, arity):
        return list(self._components.get(arity, ()))

    def act(self, perm: Permutation, element):
        return self._act(perm, element)


class OperadModule(SymmetricCollection):
    """Symmetric collection with a structure map over a base operad."""

    def __init__(self, name, components, act_fn, base, gamma_fn):
        super().__init__(name, components, act_fn, base=base)
        self._gamma = gamma_fn

    def compose(self, element, arity, inners):
        inners = list(inners)
        if len(inners) != arity:
            raise ArityMismatchError(arity, len(inners))
        return self._gamma(element, inners)


def named_collection(name, sizes, base=None) -> SymmetricCollection:
    """Test collection with ``sizes[m]`` interchangeable elements per arity
    and the trivial action."""
    components = {m: [(name, m, i) for i in range(count)]
                  for m, count in sizes.items()}
    return SymmetricCollection(name, components, lambda p, x: x, base=base)


def operad_as_module(operad: DiscreteOperad, budget=None) -> OperadModule:
    """Every operad is a module over itself: the structure map is its own
    composition.  Components can be truncated to an arity budget."""
    components = {n: operad.elements(n) for n in operad.arities(budget)}
    return OperadModule(f"{operad.name}-as-module", components, operad._act,
                        operad, lambda el, inners: operad.gamma(el, inners))


@dataclass(frozen=True)
class TensorElement:
    """Equivariant map on a splitting (k,l): a value of M1(k) x M2(l) per
    coset representative, stored as a sorted tuple of (rep images, pair)."""

    k: int
    l: int
    values: tuple

    def value_at(self, rep_images):
        for images, pair in self.values:
            if images == rep_images:
                return pair
        raise KeyError(rep_images)


def shuffle_representatives(k: int, l: int):
    """Canonical minimal representatives of the left-translation orbits of
    the block subgroup on the full symmetric group: one per k-subset of
    positions, values increasing within each class."""
    m = k + l
    reps = []
    for subset in itertools.combinations(range(1, m + 1), k):
        inside = {p: r + 1 for r, p in enumerate(subset)}
        rest = [p for p in range(1, m + 1) if p not in inside]
        outside = {p: k + r + 1 for r, p in enumerate(rest)}
        images = tuple(inside.get(p) or outside[p] for p in range(1, m + 1))
        reps.append(Permutation(images))
    return reps


def _decompose_by_blocks(g: Permutation, k: int, l: int):
    """Write g = (sigma + tau) o rep with rep the canonical representative."""
    subset = tuple(p for p in range(1, k + l + 1) if g(p) <= k)
    inside = {p: r + 1 for r, p in enumerate(subset)}
    rest = [p for p in range(1, k + l + 1) if p not in inside]
    outside = {p: k + r + 1 for r, p in enumerate(rest)}
    rep = Permutation(tuple(inside.get(p) or outside[p]
                            for p in range(1, k + l + 1)))
    rep_inv = rep.inverse()
    sigma = Permutation(tuple(g(rep_inv(i)) for i in range(1, k + 1)))
    tau = Permutation(tuple(g(rep_inv(k + j)) - k for j in range(1, l + 1)))
    return rep, sigma, tau


def module_tensor_product(m1, m2, name=None) -> SymmetricCollection:
    """Arity-m component: equivariant maps from the arity-m symmetric group
    to M1(k) x M2(l), one splitting k+l=m at a time; the action precomposes
    with right translation.

    Components can be large (size grows as a power of the binomial), so they
    are materialized lazily per arity.
    """
    if m1.base is not None and m2.base is not None and m1.base is not m2.base:
        raise BaseMismatchError(
            f"{m1.name} and {m2.name} are modules over different operads")
    name = name or f"{m1.name}(x){m2.name}"

    def component(m):
        out = []
        for k in range(0, m + 1):
            l = m - k
            xs = m1.elements(k)
            ys = m2.elements(l)
            if not xs or not ys:
                continue
            reps = [r.images for r in shuffle_representatives(k, l)]
            pairs = [(x, y) for x in xs for y in ys]
            for assignment in itertools.product(pairs, repeat=len(reps)):
                out.append(TensorElement(
                    k, l, tuple(zip(reps, assignment))))
        return out

    def act(perm, element):
        k, l = element.k, element.l
        new_values = []
        for rep in shuffle_representatives(k, l):
            g = rep * perm
            base_rep, sigma, tau = _decompose_by_blocks(g, k, l)
            x, y = element.value_at(base_rep.images)
            new_values.append((rep.images, (m1.act(sigma, x), m2.act(tau, y))))
        return TensorElement(k, l, tuple(new_values))

    class _LazyCollection(SymmetricCollection):
        def __init__(self):
            self.name = name
            self._act = act
            self.base = m1.base if m1.base is not None else m2.base
            self._cache = {}

        def arities(self):
            raise NotImplementedError("tensor product components are built per arity")

        def elements(self, arity):
            if arity not in self._cache:
                self._cache[arity] = component(arity)
            return list(self._cache[arity])

    return _LazyCollection()


# ---------------------------------------------------------------------------
# Commutative multiplications and the product relative operad


@dataclass(frozen=True)
class CommutativeMultiplication:
    """An arity-2 element fixed by the transposition, associative against
    itself, with two-sided unit an arity-0 element."""

    operad: DiscreteOperad
    element: object
    unit: object

    def __post_init__(self):
        op = self.operad
        if self.element not in op.elements(2):
            raise ValueError("multiplication must live in arity 2")
        if op.act(Permutation((2, 1)), self.element) != self.element:
            raise ValueError("multiplication must be fixed by the transposition")
        ident = op.unit()
        left = op.gamma(self.element, [self.element, ident])
        right = op.gamma(self.element, [ident, self.element])
        if left != right:
            raise ValueError("multiplication must be associative")
        if self.unit not in op.elements(0):
            raise MissingUnitError("the operad has no arity-0 unit element")
        if op.gamma(self.element, [self.unit, ident]) != ident \
                or op.gamma(self.element, [ident, self.unit]) != ident:
            raise ValueError("arity-0 element is not a unit for the multiplication")

    def iterated(self, arity: int):
        """Left-nested iterated multiplication of the given arity (>= 1)."""
        if arity < 1:
            raise ValueError("iterated multiplication needs arity >= 1")
        mu = self.operad.unit()
        for _ in range(arity - 1):
            mu = self.operad.gamma(self.element, [mu, self.operad.unit()])
        return mu


class ProductRelativeOperad:
    """Pairs (x, y) with x from a multiplicative operad and y from another;
    the module composition acts on x, the operad composition merges the
    x-parts through the iterated multiplication (outer block first) and
    composes the y-parts."""

    exhaustive = True
    kind = "relative"

    def __init__(self, o1: DiscreteOperad, mult: CommutativeMultiplication,
                 o2: DiscreteOperad, name=None):
        if mult.operad is not o1:
            raise ValueError("multiplication must live in the first operad")
        if not o1.elements(0):
            raise MissingUnitError("first operad has no arity-0 component")
        self.o1 = o1
        self.o2 = o2
        self.mult = mult
        self.base = o1
        self.name = name or f"{o1.name}x{o2.name}"

    def pairs(self, budget):
        return [(m, n) for m in self.o1.arities(budget)
                for n in self.o2.arities(budget)
                if n >= 1 and m + n <= budget]

    def elements(self, m, n):
        return [(x, y) for x in self.o1.elements(m) for y in self.o2.elements(n)]

    def arity_pair(self, element):
        x, y = element
        return (self.o1.arity(x), self.o2.arity(y))

    def gamma(self, outer, inners):
        x, y = outer
        inners = list(inners)
        l = self.o2.arity(y)
        if len(inners) != l:
            raise ArityMismatchError(l, len(inners))
        mu = self.mult.iterated(l + 1)
        new_x = self.o1.gamma(mu, [x] + [p[0] for p in inners])
        new_y = self.o2.gamma(y, [p[1] for p in inners])
        return (new_x, new_y)

    def Gamma(self, outer, base_inners):
        x, y = outer
        base_inners = list(base_inners)
        if len(base_inners) != self.o1.arity(x):
            raise ArityMismatchError(self.o1.arity(x), len(base_inners))
        return (self.o1.gamma(x, base_inners), y)

    def gamma_unit(self):
        return (self.mult.unit, self.o2.unit())

    def act(self, perm_m, perm_n, element):
        x, y = element
        return (self.o1.act(perm_m, x), self.o2.act(perm_n, y))

    def eq(self, a, b):
        return a == b

    def describe(self, element):
        x, y = element
        return [self.o1.describe(x), self.o2.describe(y)]

    def element_degree(self, element):
        return 0

    def scale(self, sign, element):
        if sign != 1:
            raise ValueError("set-level elements cannot be negated")
        return element


def product_relative_operad(o1, mult, o2) -> ProductRelativeOperad:
    return ProductRelativeOperad(o1, mult, o2)


# ---------------------------------------------------------------------------
# Endomorphism instances (sampled)


class EndomorphismOperad:
    """Multilinear maps on a graded space under substitution; sampled."""

    exhaustive = False
    kind = "operad"

    def __init__(self, space: GradedSpace, max_arity: int, degree_range=(-1, 1)):
        self.space = space
        self.max_arity = max_arity
        self.degree_range = degree_range
        self.name = "end"

    def arities(self, budget=None):
        top = self.max_arity if budget is None else min(budget, self.max_arity)
        return list(range(1, top + 1))

    def _check_arity(self, arity):
        if arity > self.max_arity:
            raise ArityOverflowError(arity, self.max_arity)

    def random_element(self, rng: random.Random, arity: int) -> MultilinearMap:
        self._check_arity(arity)
        degree = rng.randint(*self.degree_range)
        table = {}
        for inputs in _basis_tuples(self.space, arity):
            want = sum(self.space.degree(i) for i in inputs) + degree
            vec = {}
            for j in range(self.space.dim):
                if self.space.degree(j) == want:
                    c = rng.randint(-3, 3)
                    if c:
                        vec[j] = Fraction(c, rng.randint(1, 2))
            if vec:
                table[inputs] = vec
        return MultilinearMap.plain(self.space, arity, degree, table)

    def unit(self):
        return MultilinearMap.identity(self.space)

    def gamma(self, outer, inners):
        self._check_arity(sum(g.m for g in inners))
        return outer.compose(inners)

    def act(self, perm, element):
        return element.act(perm)

    def eq(self, a, b):
        return a == b

    def describe(self, element):
        return element.describe()

    def element_degree(self, element):
        return element.degree

    def scale(self, sign, element):
        if sign == 1:
            return element
        table = {k: {i: sign * c for i, c in v.items()}
                 for k, v in element.table.items()}
        return MultilinearMap.plain(element.space1, element.m, element.degree, table)


class RelativeEndomorphismOperad:
    """Maps from tensor powers of two spaces into the second; relative, sampled."""

    exhaustive = False
    kind = "relative"

    def __init__(self, space1: GradedSpace, space2: GradedSpace, max_arity: int,
                 degree_range=(-1, 1)):
        self.space1 = space1
        self.space2 = space2
        self.max_arity = max_arity
        self.degree_range = degree_range
        self.base = EndomorphismOperad(space1, max_arity, degree_range)
        self.name = "rel-end"

    def pairs(self, budget):
        return [(m, n) for m in range(0, budget + 1)
                for n in range(1, budget + 1) if m + n <= budget]

    def _check_arity(self, m, n):
        if m + n > self.max_arity:
            raise ArityOverflowError(m + n, self.max_arity)

    def random_element(self, rng: random.Random, m: int, n: int) -> MultilinearMap:
        self._check_arity(m, n)
        degree = rng.randint(*self.degree_range)
        table = {}
        for inputs in _mixed_basis_tuples(self.space1, self.space2, m, n):
            want = sum(self.space1.degree(i) for i in inputs[:m]) \
                + sum(self.space2.degree(i) for i in inputs[m:]) + degree
            vec = {}
            for j in range(self.space2.dim):
                if self.space2.degree(j) == want:
                    c = rng.randint(-3, 3)
                    if c:
                        vec[j] = Fraction(c, rng.randint(1, 2))
            if vec:
                table[inputs] = vec
        return MultilinearMap.relative(self.space1, self.space2, m, n, degree, table)

    def arity_pair(self, element):
        return (element.m, element.n)

    def gamma(self, outer, inners):
        return outer.relative_gamma(inners)

    def Gamma(self, outer, base_inners):
        return outer.relative_Gamma(base_inners)

    def gamma_unit(self):
        return MultilinearMap.relative(
            self.space1, self.space2, 0, 1, 0,
            {(i,): {i: Fraction(1)} for i in range(self.space2.dim)})

    def act(self, perm_m, perm_n, element):
        return element.act_relative(perm_m, perm_n)

    def eq(self, a, b):
        return a == b

    def describe(self, element):
        return element.describe()

    def element_degree(self, element):
        return element.degree

    def scale(self, sign, element):
        if sign == 1:
            return element
        table = {k: {i: sign * c for i, c in v.items()}
                 for k, v in element.table.items()}
        return MultilinearMap.relative(element.space1, element.space2,
                                       element.m, element.n, element.degree, table)


def endomorphism_operad(space: GradedSpace, max_arity: int) -> EndomorphismOperad:
    return EndomorphismOperad(space, max_arity)


def relative_endomorphism_operad(space1: GradedSpace, space2: GradedSpace,
                                 max_arity: int) -> RelativeEndomorphismOperad:
    return RelativeEndomorphismOperad(space1, space2, max_arity)


# ---------------------------------------------------------------------------
# Geometric instances (sampled)


class DiskOperadInstance:
    """The little-disks operad driven by seeded random exact configurations."""

    exhaustive = False
    kind = "operad"
    name = "disks"

    def arities(self, budget=None):
        return list(range(1, (budget or 3) + 1))

    def random_element(self, rng, arity):
        return geometry.random_disk_config(rng, arity)

    def unit(self):
        return geometry.unit_disk_config()

    def gamma(self, outer, inners):
        return geometry.compose_disks(outer, inners)

    def act(self, perm, element):
        return geometry.act_disks(perm, element)

    def eq(self, a, b):
        return a == b

    def describe(self, element):
        return geometry.config_to_dict(element)

    def element_degree(self, element):
        return 0

    def scale(self, sign, element):
        if sign != 1:
            raise ValueError("configurations cannot be negated")
        return element


class SwissOperadInstance:
    """The disk/semidisk relative operad driven by seeded random configurations."""

    exhaustive = False
    kind = "relative"
    name = "swiss"

    def __init__(self):
        self.base = DiskOperadInstance()

    def pairs(self, budget):
        return [(m, n) for m in range(0, budget + 1)
                for n in range(1, budget + 1) if m + n <= budget]

    def random_element(self, rng, m, n):
        return geometry.random_swiss_config(rng, m, n)

    def arity_pair(self, element):
        return (element.disk_arity, element.semidisk_arity)

    def gamma(self, outer, inners):
        return geometry.compose_swiss_gamma(outer, inners)

    def Gamma(self, outer, base_inners):
        return geometry.compose_swiss_Gamma(outer, base_inners)

    def gamma_unit(self):
        return geometry.unit_swiss_config()

    def act(self, perm_m, perm_n, element):
        return geometry.act_swiss(perm_m, perm_n, element)

    def eq(self, a, b):
        return a == b

    def describe(self, element):
        return geometry.config_to_dict(element)

    def element_degree(self, element):
        return 0

    def scale(self, sign, element):
        if sign != 1:
            raise ValueError("configurations cannot be negated")
        return element
