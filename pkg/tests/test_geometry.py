import json
import random
from fractions import Fraction

import pytest

from operadkit.errors import (ArityMismatchError, BelowAxisError,
                              EmptyConfigurationError, NoSemidiskError,
                              OutOfBoundsError, OverlapError)
from operadkit.geometry import (act_disks, act_swiss, compose_disks,
                                compose_swiss_Gamma, compose_swiss_gamma,
                                config_from_dict, config_to_dict, disk,
                                random_disk_config, random_swiss_config,
                                render_svg, semidisk, unit_disk_config,
                                unit_swiss_config, validate_disk_config,
                                validate_swiss_config)
from operadkit.permutations import Permutation, block_permutation

from oracles import affine_image_disk


class TestDiskValidation:
    def test_unit_configuration(self):
        cfg = validate_disk_config([disk(0, 0, 1)])
        assert cfg.arity == 1

    def test_symmetric_pair(self):
        cfg = validate_disk_config([disk("-1/2", 0, "1/4"), disk("1/2", 0, "1/4")])
        assert cfg.arity == 2

    def test_overlap_reports_the_pair(self):
        with pytest.raises(OverlapError) as exc:
            validate_disk_config([disk(0, 0, "1/2"), disk("1/4", 0, "1/2")])
        assert exc.value.labels == (1, 2)

    def test_out_of_bounds(self):
        with pytest.raises(OutOfBoundsError):
            validate_disk_config([disk("3/4", 0, "1/2")])

    def test_empty(self):
        with pytest.raises(EmptyConfigurationError):
            validate_disk_config([])

    def test_tangency_allowed_unless_strict(self):
        touching = [disk("-1/4", 0, "1/4"), disk("1/4", 0, "1/4")]
        assert validate_disk_config(touching).arity == 2
        with pytest.raises(OverlapError):
            validate_disk_config(touching, strict=True)


class TestSwissValidation:
    def test_unit_semidisk(self):
        cfg = validate_swiss_config([], [semidisk(0, 1)])
        assert cfg.disk_arity == 0 and cfg.semidisk_arity == 1

    def test_mixed(self):
        cfg = validate_swiss_config([disk(0, "1/2", "1/4")], [semidisk(0, "1/4")])
        assert (cfg.disk_arity, cfg.semidisk_arity) == (1, 1)

    def test_below_axis(self):
        with pytest.raises(BelowAxisError) as exc:
            validate_swiss_config([disk(0, "1/8", "1/4")], [semidisk("3/4", "1/8")])
        assert exc.value.label == 1

    def test_no_semidisk(self):
        with pytest.raises(NoSemidiskError):
            validate_swiss_config([disk(0, "1/2", "1/4")], [])

    def test_disk_semidisk_overlap(self):
        with pytest.raises(OverlapError):
            validate_swiss_config([disk(0, "1/4", "1/4")], [semidisk(0, "1/4")])


class TestComposeDisks:
    def test_documented_example(self):
        outer = validate_disk_config([disk("-1/2", 0, "1/4"), disk("1/2", 0, "1/4")])
        inner1 = validate_disk_config([disk(0, 0, "1/2")])
        result = compose_disks(outer, [inner1, unit_disk_config()])
        expected = validate_disk_config([disk("-1/2", 0, "1/8"), disk("1/2", 0, "1/4")])
        assert result == expected

    def test_against_affine_oracle(self):
        rng = random.Random(31)
        for _ in range(25):
            outer = random_disk_config(rng, rng.randint(1, 3))
            inners = [random_disk_config(rng, rng.randint(1, 3))
                      for _ in range(outer.arity)]
            result = compose_disks(outer, inners)
            images = []
            for slot, inner in zip(outer.disks, inners):
                for d in inner.disks:
                    images.append(affine_image_disk(
                        (d.center_x, d.center_y), d.radius,
                        slot.center_x, slot.center_y, slot.radius))
            assert [(d.center_x, d.center_y, d.radius) for d in result.disks] == images

    def test_unit_axioms(self):
        rng = random.Random(5)
        for _ in range(10):
            x = random_disk_config(rng, rng.randint(1, 3))
            assert compose_disks(unit_disk_config(), [x]) == x
            assert compose_disks(x, [unit_disk_config()] * x.arity) == x

    def test_arity_mismatch(self):
        outer = validate_disk_config([disk(0, 0, "1/2")])
        with pytest.raises(ArityMismatchError):
            compose_disks(outer, [])

    def test_associativity_exact(self):
        rng = random.Random(77)
        for _ in range(20):
            a = random_disk_config(rng, 2)
            bs = [random_disk_config(rng, 2), random_disk_config(rng, 1)]
            cs = [random_disk_config(rng, 1), random_disk_config(rng, 1),
                  random_disk_config(rng, 1)]
            lhs = compose_disks(compose_disks(a, bs), cs)
            rhs = compose_disks(a, [compose_disks(bs[0], cs[:2]),
                                    compose_disks(bs[1], cs[2:])])
            assert lhs == rhs


class TestDiskAction:
    def test_identity(self):
        x = validate_disk_config([disk("-1/2", 0, "1/4"), disk("1/2", 0, "1/4")])
        assert act_disks(Permutation.identity(2), x) == x

    def test_transposition_swaps(self):
        x = validate_disk_config([disk("-1/2", 0, "1/4"), disk("1/2", 0, "1/4")])
        y = act_disks(Permutation((2, 1)), x)
        assert y.disks == (x.disks[1], x.disks[0])

    def test_equivariance(self):
        rng = random.Random(13)
        for _ in range(10):
            k = rng.randint(1, 3)
            a = random_disk_config(rng, k)
            bs = [random_disk_config(rng, rng.randint(1, 2)) for _ in range(k)]
            sigma = Permutation(tuple(rng.sample(range(1, k + 1), k)))
            inv = sigma.inverse()
            lhs = compose_disks(act_disks(sigma, a),
                                [bs[inv(j) - 1] for j in range(1, k + 1)])
            tau = block_permutation(sigma, [b.arity for b in bs])
            assert lhs == act_disks(tau, compose_disks(a, bs))


class TestSwissCompositions:
    def test_documented_gamma_example(self):
        outer = validate_swiss_config(
            [], [semidisk("-1/2", "1/4"), semidisk("1/2", "1/4")])
        inner1 = validate_swiss_config([disk(0, "1/2", "1/4")], [semidisk(0, "1/4")])
        result = compose_swiss_gamma(outer, [inner1, unit_swiss_config()])
        expected = validate_swiss_config(
            [disk("-1/2", "1/8", "1/16")],
            [semidisk("-1/2", "1/16"), semidisk("1/2", "1/4")])
        assert result == expected

    def test_documented_Gamma_example(self):
        outer = validate_swiss_config([disk(0, "1/2", "1/4")], [semidisk(0, "1/4")])
        inner = validate_disk_config([disk("-1/2", 0, "1/4"), disk("1/2", 0, "1/4")])
        result = compose_swiss_Gamma(outer, [inner])
        expected = validate_swiss_config(
            [disk("-1/8", "1/2", "1/16"), disk("1/8", "1/2", "1/16")],
            [semidisk(0, "1/4")])
        assert result == expected

    def test_gamma_unit(self):
        rng = random.Random(3)
        x = random_swiss_config(rng, 1, 2)
        assert compose_swiss_gamma(unit_swiss_config(), [x]) == x
        assert compose_swiss_gamma(x, [unit_swiss_config()] * 2) == x

    def test_Gamma_unit(self):
        rng = random.Random(4)
        x = random_swiss_config(rng, 2, 1)
        assert compose_swiss_Gamma(x, [unit_disk_config()] * 2) == x

    def test_interchange(self):
        rng = random.Random(8)
        for _ in range(10):
            s = random_swiss_config(rng, 1, 2)
            ts = [random_swiss_config(rng, 1, 1), random_swiss_config(rng, 0, 1)]
            total_disks = 1 + 1 + 0
            ds = [random_disk_config(rng, rng.randint(1, 2))
                  for _ in range(total_disks)]
            lhs = compose_swiss_Gamma(compose_swiss_gamma(s, ts), ds)
            rhs = compose_swiss_gamma(
                compose_swiss_Gamma(s, ds[:1]),
                [compose_swiss_Gamma(ts[0], ds[1:2]),
                 compose_swiss_Gamma(ts[1], [])])
            assert lhs == rhs

    def test_closure_of_compositions(self):
        rng = random.Random(9)
        for _ in range(15):
            s = random_swiss_config(rng, 1, 2)
            ts = [random_swiss_config(rng, rng.randint(0, 1), 1) for _ in range(2)]
            out = compose_swiss_gamma(s, ts)
            # re-validating from raw pieces must succeed
            assert validate_swiss_config(out.disks, out.semidisks) == out

    def test_swiss_action_relabels_independently(self):
        cfg = validate_swiss_config(
            [disk("-1/2", "1/2", "1/8"), disk("1/2", "1/2", "1/8")],
            [semidisk("-1/2", "1/8"), semidisk("1/2", "1/8")])
        out = act_swiss(Permutation((2, 1)), Permutation.identity(2), cfg)
        assert out.disks == (cfg.disks[1], cfg.disks[0])
        assert out.semidisks == cfg.semidisks


class TestSerialization:
    def test_round_trip_disks(self):
        cfg = validate_disk_config([disk("-1/2", 0, "1/4"), disk("1/2", 0, "1/4")])
        assert config_from_dict(config_to_dict(cfg)) == cfg

    def test_round_trip_swiss(self):
        cfg = validate_swiss_config([disk(0, "1/2", "1/4")], [semidisk(0, "1/4")])
        doc = json.loads(json.dumps(config_to_dict(cfg)))
        assert config_from_dict(doc) == cfg

    def test_accepts_integers_and_strings(self):
        doc = {"kind": "disks", "disks": [{"x": 0, "y": "0", "r": "1/2"}]}
        cfg = config_from_dict(doc)
        assert cfg.disks[0].radius == Fraction(1, 2)

    def test_rejects_unknown_kind(self):
        with pytest.raises(ValueError):
            config_from_dict({"kind": "squares", "disks": []})


class TestRenderSvg:
    def test_disk_picture_has_outline_and_labels(self):
        svg = render_svg(validate_disk_config(
            [disk("-1/2", 0, "1/4"), disk("1/2", 0, "1/4")]))
        assert svg.count("<circle") == 3  # outline + two disks
        assert ">1</text>" in svg and ">2</text>" in svg
        assert svg.startswith("<svg ")

    def test_swiss_picture_has_arcs(self):
        svg = render_svg(validate_swiss_config(
            [disk(0, "1/2", "1/4")], [semidisk(0, "1/4")]))
        assert svg.count("<path") == 2  # outline + one semidisk
        assert svg.count("<circle") == 1
        assert ">s1</text>" in svg

    def test_deterministic(self):
        cfg = validate_swiss_config([disk(0, "1/2", "1/4")], [semidisk(0, "1/4")])
        assert render_svg(cfg) == render_svg(cfg)

    def test_twelve_significant_digits(self):
        svg = render_svg(validate_disk_config([disk("1/3", 0, "1/3")]))
        assert 'cx="0.333333333333"' in svg
