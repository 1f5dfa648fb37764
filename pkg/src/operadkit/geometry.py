"""Exact-rational configurations of little disks and of the disk/semidisk mix.

Configurations of labeled disks in the closed unit disk form an operad under
rescale-and-glue; configurations of disks in the upper half plus semidisks
centered on the diameter form an operad of modules over it, with a second
composition that glues disk configurations into the full-disk slots.  All
coordinates are ``fractions.Fraction``, so every containment and disjointness
predicate is decided exactly and the operad identities hold on the nose.

By default validation accepts tangencies (closed conditions); pass
``strict=True`` to demand the open conditions.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    ArityMismatchError,
    BelowAxisError,
    DegreeMismatchError,
    EmptyConfigurationError,
    NoSemidiskError,
    OutOfBoundsError,
    OverlapError,
)
from .permutations import Permutation
from .rationals import format_rational, parse_rational


@dataclass(frozen=True)
class Disk:
    center_x: Fraction
    center_y: Fraction
    radius: Fraction

    def __post_init__(self):
        if self.radius <= 0:
            raise ValueError(f"disk radius must be positive, got {self.radius}")


@dataclass(frozen=True)
class Semidisk:
    """Upper half-disk centered on the real axis."""

    center_x: Fraction
    radius: Fraction

    def __post_init__(self):
        if self.radius <= 0:
            raise ValueError(f"semidisk radius must be positive, got {self.radius}")


def disk(x, y, r) -> Disk:
    return Disk(parse_rational(x), parse_rational(y), parse_rational(r))


def semidisk(x, r) -> Semidisk:
    return Semidisk(parse_rational(x), parse_rational(r))


def _sq(x: Fraction) -> Fraction:
    return x * x


def _inside_unit_disk(cx, cy, r, strict) -> bool:
    # |center| + r <= 1, squared to stay rational
    slack = 1 - r
    if slack < 0 or (strict and slack <= 0):
        return False
    lhs = _sq(cx) + _sq(cy)
    return lhs < _sq(slack) if strict else lhs <= _sq(slack)


def _disjoint(ax, ay, ar, bx, by, br, strict) -> bool:
    # distance(centers) >= r_a + r_b, squared
    lhs = _sq(ax - bx) + _sq(ay - by)
    rhs = _sq(ar + br)
    return lhs > rhs if strict else lhs >= rhs


@dataclass(frozen=True)
class DiskConfiguration:
    """Labeled disjoint disks in the closed unit disk; slot i holds label i+1."""

    disks: tuple[Disk, ...]

    @property
    def arity(self) -> int:
        return len(self.disks)


@dataclass(frozen=True)
class SwissConfiguration:
    """m disks in the closed upper half-disk plus n >= 1 semidisks on the diameter."""

    disks: tuple[Disk, ...]
    semidisks: tuple[Semidisk, ...]

    @property
    def disk_arity(self) -> int:
        return len(self.disks)

    @property
    def semidisk_arity(self) -> int:
        return len(self.semidisks)


def validate_disk_config(disks, strict: bool = False) -> DiskConfiguration:
    """Check containment and pairwise interior-disjointness, exactly.

    Raises EmptyConfigurationError, OutOfBoundsError or OverlapError (labels
    are 1-based) when an invariant fails.
    """
    disks = tuple(disks)
    if not disks:
        raise EmptyConfigurationError("a disk configuration needs at least one disk")
    for i, d in enumerate(disks, start=1):
        if not _inside_unit_disk(d.center_x, d.center_y, d.radius, strict):
            raise OutOfBoundsError(i)
    for i in range(len(disks)):
        for j in range(i + 1, len(disks)):
            a, b = disks[i], disks[j]
            if not _disjoint(a.center_x, a.center_y, a.radius,
                             b.center_x, b.center_y, b.radius, strict):
                raise OverlapError(i + 1, j + 1)
    return DiskConfiguration(disks)


def validate_swiss_config(disks, semidisks, strict: bool = False) -> SwissConfiguration:
    """Check the mixed invariants: disks above the axis and inside the unit
    disk, semidisks inside the unit semidisk, everything interior-disjoint."""
    disks = tuple(disks)
    semidisks = tuple(semidisks)
    if not semidisks:
        raise NoSemidiskError("a mixed configuration needs at least one semidisk")
    for i, d in enumerate(disks, start=1):
        below = d.center_y < d.radius if not strict else d.center_y <= d.radius
        if below:
            raise BelowAxisError(i)
        if not _inside_unit_disk(d.center_x, d.center_y, d.radius, strict):
            raise OutOfBoundsError(i)
    for i, s in enumerate(semidisks, start=1):
        slack = 1 - s.radius
        bad = abs(s.center_x) > slack if not strict else abs(s.center_x) >= slack
        if bad:
            raise OutOfBoundsError(i, f"semidisk {i} is not inside the unit semidisk")
    # a disk above the axis and a semidisk have disjoint interiors iff the
    # full disks do, so every pairwise test is a squared-distance inequality
    pieces = [(d.center_x, d.center_y, d.radius, ("disk", i + 1))
              for i, d in enumerate(disks)]
    pieces += [(s.center_x, Fraction(0), s.radius, ("semidisk", i + 1))
               for i, s in enumerate(semidisks)]
    for i in range(len(pieces)):
        for j in range(i + 1, len(pieces)):
            ax, ay, ar, la = pieces[i]
            bx, by, br, lb = pieces[j]
            if not _disjoint(ax, ay, ar, bx, by, br, strict):
                raise OverlapError(la, lb, f"{la[0]} {la[1]} and {lb[0]} {lb[1]} overlap")
    return SwissConfiguration(disks, semidisks)


def unit_disk_config() -> DiskConfiguration:
    """The single disk (0,0,1): two-sided identity for compose_disks."""
    one = Fraction(1)
    zero = Fraction(0)
    return DiskConfiguration((Disk(zero, zero, one),))


def unit_swiss_config() -> SwissConfiguration:
    """The single semidisk (0,1): identity for the semidisk-slot composition."""
    return SwissConfiguration((), (Semidisk(Fraction(0), Fraction(1)),))


def _map_disk(d: Disk, cx, cy, r) -> Disk:
    """Image of d under z -> c + r*z (r > 0, no rotation)."""
    return Disk(cx + r * d.center_x, cy + r * d.center_y, r * d.radius)


def _map_semidisk(s: Semidisk, cx, r) -> Semidisk:
    return Semidisk(cx + r * s.center_x, r * s.radius)


def compose_disks(outer: DiskConfiguration, inners) -> DiskConfiguration:
    """Operadic composition: scale inner configuration j into outer disk j.

    Labels come out in block order: inner 1's disks first, then inner 2's,
    and so on.  The result is validated; gluing by orientation-preserving
    similarities cannot break containment or disjointness.
    """
    inners = list(inners)
    if len(inners) != outer.arity:
        raise ArityMismatchError(outer.arity, len(inners))
    glued = []
    for slot, inner in zip(outer.disks, inners):
        for d in inner.disks:
            glued.append(_map_disk(d, slot.center_x, slot.center_y, slot.radius))
    return validate_disk_config(glued)


def compose_swiss_gamma(outer: SwissConfiguration, inners) -> SwissConfiguration:
    """Glue mixed configurations into the semidisk slots of ``outer``.

    Inner i is mapped by z -> c_i + r_i*z for semidisk slot i.  The outer
    full disks keep the low labels; glued full disks follow in block order;
    semidisk labels concatenate in block order.
    """
    inners = list(inners)
    if len(inners) != outer.semidisk_arity:
        raise ArityMismatchError(outer.semidisk_arity, len(inners))
    disks = list(outer.disks)
    semis = []
    for slot, inner in zip(outer.semidisks, inners):
        disks.extend(_map_disk(d, slot.center_x, Fraction(0), slot.radius)
                     for d in inner.disks)
        semis.extend(_map_semidisk(s, slot.center_x, slot.radius)
                     for s in inner.semidisks)
    return validate_swiss_config(disks, semis)


def compose_swiss_Gamma(outer: SwissConfiguration, inners) -> SwissConfiguration:
    """Glue disk configurations into the full-disk slots of ``outer``.

    Inner j is mapped by z -> c_j + r_j*z for full-disk slot j; semidisks
    are untouched.  Result has the glued disks in block order.
    """
    inners = list(inners)
    if len(inners) != outer.disk_arity:
        raise ArityMismatchError(outer.disk_arity, len(inners))
    disks = []
    for slot, inner in zip(outer.disks, inners):
        disks.extend(_map_disk(d, slot.center_x, slot.center_y, slot.radius)
                     for d in inner.disks)
    return validate_swiss_config(disks, outer.semidisks)


def act_disks(perm: Permutation, config: DiskConfiguration) -> DiskConfiguration:
    """Relabel: the disk labeled i becomes labeled perm(i)."""
    if perm.degree != config.arity:
        raise DegreeMismatchError(config.arity, perm.degree)
    return DiskConfiguration(tuple(perm.permute_list(list(config.disks))))


def act_swiss(disk_perm: Permutation, semi_perm: Permutation,
              config: SwissConfiguration) -> SwissConfiguration:
    """Relabel disks by disk_perm and semidisks by semi_perm, independently."""
    if disk_perm.degree != config.disk_arity:
        raise DegreeMismatchError(config.disk_arity, disk_perm.degree)
    if semi_perm.degree != config.semidisk_arity:
        raise DegreeMismatchError(config.semidisk_arity, semi_perm.degree)
    return SwissConfiguration(
        tuple(disk_perm.permute_list(list(config.disks))),
        tuple(semi_perm.permute_list(list(config.semidisks))),
    )


# ---------------------------------------------------------------------------
# JSON configuration files


def config_to_dict(config):
    if isinstance(config, DiskConfiguration):
        return {
            "kind": "disks",
            "disks": [{"x": format_rational(d.center_x),
                       "y": format_rational(d.center_y),
                       "r": format_rational(d.radius)} for d in config.disks],
        }
    if isinstance(config, SwissConfiguration):
        return {
            "kind": "swiss",
            "disks": [{"x": format_rational(d.center_x),
                       "y": format_rational(d.center_y),
                       "r": format_rational(d.radius)} for d in config.disks],
            "semidisks": [{"x": format_rational(s.center_x),
                           "r": format_rational(s.radius)} for s in config.semidisks],
        }
    raise TypeError(f"not a configuration: {config!r}")


def config_from_dict(data, strict: bool = False):
    """Build and validate a configuration from its JSON dictionary form."""
    try:
        kind = data["kind"]
    except (TypeError, KeyError):
        raise ValueError("configuration object needs a 'kind' field") from None
    if kind == "disks":
        disks = [disk(entry["x"], entry.get("y", 0), entry["r"])
                 for entry in data.get("disks", [])]
        return validate_disk_config(disks, strict=strict)
    if kind == "swiss":
        disks = [disk(entry["x"], entry.get("y", 0), entry["r"])
                 for entry in data.get("disks", [])]
        semis = [semidisk(entry["x"], entry["r"])
                 for entry in data.get("semidisks", [])]
        return validate_swiss_config(disks, semis, strict=strict)
    raise ValueError(f"unknown configuration kind {kind!r}")


# ---------------------------------------------------------------------------
# SVG rendering


def _fmt(x: Fraction) -> str:
    # decimal with 12 significant digits; SVG y-axis points down, so callers
    # pass already-negated y coordinates
    return format(float(x), ".12g")


def render_svg(config) -> str:
    """Deterministic SVG picture of a configuration, labels at the centers."""
    lines = [
        '<svg xmlns="http://www.w3.org/2000/svg" viewBox="-1.1 -1.1 2.2 2.2" '
        'width="440" height="440">',
        '<g fill="none" stroke="black" stroke-width="0.01">',
    ]
    if isinstance(config, DiskConfiguration):
        lines.append('<circle cx="0" cy="0" r="1"/>')
        pieces = [(d.center_x, d.center_y, d.radius, False) for d in config.disks]
    elif isinstance(config, SwissConfiguration):
        lines.append('<path d="M -1 0 A 1 1 0 0 1 1 0 Z"/>')
        pieces = [(d.center_x, d.center_y, d.radius, False) for d in config.disks]
        pieces += [(s.center_x, Fraction(0), s.radius, True) for s in config.semidisks]
    else:
        raise TypeError(f"not a configuration: {config!r}")
    for x, y, r, half in pieces:
        if half:
            lines.append(f'<path d="M {_fmt(x - r)} 0 A {_fmt(r)} {_fmt(r)} 0 0 1 '
                         f'{_fmt(x + r)} 0 Z"/>')
        else:
            lines.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(-y)}" r="{_fmt(r)}"/>')
    lines.append("</g>")
    lines.append('<g font-family="sans-serif" font-size="0.12" text-anchor="middle" '
                 'fill="black">')
    disk_label = semi_label = 0
    for x, y, r, half in pieces:
        if half:
            semi_label += 1
            lines.append(f'<text x="{_fmt(x)}" y="{_fmt(-r / 3)}">s{semi_label}</text>')
        else:
            disk_label += 1
            lines.append(f'<text x="{_fmt(x)}" y="{_fmt(-y)}">{disk_label}</text>')
    lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Seeded random configurations (used by the sampled axiom checks)


def random_disk_config(rng: random.Random, arity: int,
                       max_attempts: int = 10000) -> DiskConfiguration:
    """Random exact-rational configuration: rejection sampling on a lattice."""
    denom = 32
    for _ in range(max_attempts):
        disks = []
        ok = True
        for _ in range(arity):
            placed = False
            for _ in range(60):
                r = Fraction(rng.randint(2, 6), denom)
                cx = Fraction(rng.randint(-denom + 1, denom - 1), denom)
                cy = Fraction(rng.randint(-denom + 1, denom - 1), denom)
                if not _inside_unit_disk(cx, cy, r, strict=False):
                    continue
                if all(_disjoint(cx, cy, r, d.center_x, d.center_y, d.radius, False)
                       for d in disks):
                    disks.append(Disk(cx, cy, r))
                    placed = True
                    break
            if not placed:
                ok = False
                break
        if ok:
            return validate_disk_config(disks)
    raise RuntimeError(f"could not sample a disk configuration of arity {arity}")


def random_swiss_config(rng: random.Random, disk_arity: int, semidisk_arity: int,
                        max_attempts: int = 10000) -> SwissConfiguration:
    denom = 32
    for _ in range(max_attempts):
        disks = []
        semis = []
        ok = True
        for _ in range(disk_arity):
            placed = False
            for _ in range(60):
                r = Fraction(rng.randint(2, 5), denom)
                cx = Fraction(rng.randint(-denom + 1, denom - 1), denom)
                cy = Fraction(rng.randint(int(r * denom), denom - 1), denom)
                if not _inside_unit_disk(cx, cy, r, strict=False) or cy < r:
                    continue
                if all(_disjoint(cx, cy, r, d.center_x, d.center_y, d.radius, False)
                       for d in disks):
                    disks.append(Disk(cx, cy, r))
                    placed = True
                    break
            if not placed:
                ok = False
                break
        if ok:
            for _ in range(semidisk_arity):
                placed = False
                for _ in range(60):
                    r = Fraction(rng.randint(2, 5), denom)
                    cx = Fraction(rng.randint(-denom + 1, denom - 1), denom)
                    if abs(cx) > 1 - r:
                        continue
                    if all(_disjoint(cx, Fraction(0), r,
                                     d.center_x, d.center_y, d.radius, False)
                           for d in disks) and \
                       all(abs(cx - s.center_x) >= r + s.radius for s in semis):
                        semis.append(Semidisk(cx, r))
                        placed = True
                        break
                if not placed:
                    ok = False
                    break
        if ok:
            return validate_swiss_config(disks, semis)
    raise RuntimeError(
        f"could not sample a mixed configuration of arities ({disk_arity},{semidisk_arity})")
