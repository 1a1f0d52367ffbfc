import json

import pytest

from fatpointlab.cli import (
    EXIT_FAIL,
    EXIT_INFEASIBLE,
    EXIT_OK,
    EXIT_SKIPPED,
    EXIT_USAGE,
    main,
)
from fatpointlab.exact import ScalarField
from fatpointlab.instances import (
    InstanceError,
    canonical_json,
    field_from_descriptor,
    scheme_from_dict,
    scheme_to_dict,
    vectors_to_dict,
)
from fatpointlab.schemes import FatPointScheme

QQ = ScalarField.rational()


def write_json(path, data):
    path.write_text(canonical_json(data))
    return str(path)


class TestInstances:
    def test_field_descriptors(self):
        assert field_from_descriptor("rational").is_rational
        assert field_from_descriptor("prime:10007").p == 10007
        for bad in ("prime:10", "prime:x", "float", 7):
            with pytest.raises(InstanceError):
                field_from_descriptor(bad)

    def test_scheme_round_trip(self):
        x = FatPointScheme(QQ, 2, [(("1/2", 1, 0), 2), ((0, 0, 1), 1)])
        d = scheme_to_dict(x, seed=7, generator="test")
        y = scheme_from_dict(d)
        assert y.points == x.points and y.n == x.n
        assert scheme_to_dict(y, seed=7, generator="test") == d

    def test_malformed_rejected(self):
        with pytest.raises(InstanceError):
            scheme_from_dict({"field": "rational", "ambient_dim": 2, "points": [
                {"coords": ["1", "oops", "0"], "mult": 1}]})
        with pytest.raises(InstanceError):
            scheme_from_dict({"field": "rational", "ambient_dim": 2, "points": [
                {"coords": ["0", "0", "0"], "mult": 1}]})


class TestGenVerify:
    def test_round_trip_and_determinism(self, tmp_path):
        out1, out2 = str(tmp_path / "a.json"), str(tmp_path / "b.json")
        args = ["gen", "--kind", "generic", "--n", "2", "--s", "4", "--seed", "5"]
        assert main(args + ["--out", out1]) == EXIT_OK
        assert main(args + ["--out", out2]) == EXIT_OK
        assert open(out1).read() == open(out2).read()
        report = str(tmp_path / "report.json")
        code = main(["verify", out1, "--checks", "main-theorem,cardinality",
                     "--out", report])
        assert code == EXIT_OK
        data = json.loads(open(report).read())
        assert data["failed"] == 0 and data["passed"] == 2

    def test_verify_skips_guarded_checks(self, tmp_path):
        # total multiplicity 15 trips the cardinality guard; nothing fails
        pts = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1), (1, 2, 3)]
        x = FatPointScheme(QQ, 2, [(p, 3) for p in pts])
        inst = write_json(tmp_path / "big.json", scheme_to_dict(x))
        report = str(tmp_path / "report.json")
        code = main(["verify", inst, "--checks", "main-theorem,cardinality",
                     "--out", report])
        assert code == EXIT_SKIPPED
        data = json.loads(open(report).read())
        assert "skipped" in data["checks"]["cardinality"]
        assert data["checks"]["main-theorem"]["pass"] is True

    def test_verify_all_default_checks(self, tmp_path):
        x = FatPointScheme(QQ, 2, [((1, 0, 0), 2), ((0, 1, 0), 1), ((1, 1, 1), 1)])
        inst = write_json(tmp_path / "x.json", scheme_to_dict(x))
        report = str(tmp_path / "r.json")
        code = main(["verify", inst, "--out", report])
        assert code == EXIT_OK
        data = json.loads(open(report).read())
        assert data["failed"] == 0 and data["passed"] == 5

    def test_unknown_check_is_usage_error(self, tmp_path):
        x = FatPointScheme(QQ, 1, [((1, 0), 1), ((0, 1), 1)])
        inst = write_json(tmp_path / "x.json", scheme_to_dict(x))
        assert main(["verify", inst, "--checks", "nope"]) == EXIT_USAGE

    def test_malformed_instance_is_usage_error(self, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{not json")
        assert main(["verify", str(bad)]) == EXIT_USAGE

    def test_csv_and_table_formats(self, tmp_path):
        x = FatPointScheme(QQ, 1, [((1, 0), 1), ((0, 1), 1)])
        inst = write_json(tmp_path / "x.json", scheme_to_dict(x))
        csv_out = str(tmp_path / "r.csv")
        main(["verify", inst, "--checks", "main-theorem", "--format", "csv",
              "--out", csv_out])
        text = open(csv_out).read()
        assert text.startswith("key,value")
        assert "checks.main-theorem.pass" in text
        table_out = str(tmp_path / "r.txt")
        main(["verify", inst, "--checks", "main-theorem", "--format", "table",
              "--out", table_out])
        assert "checks.main-theorem.pass" in open(table_out).read()


class TestPartitionCommand:
    def test_scheme_instance_feasible(self, tmp_path):
        x = FatPointScheme(QQ, 2, [((1, 0, 0), 2), ((0, 1, 0), 2)])
        inst = write_json(tmp_path / "x.json", scheme_to_dict(x))
        out = str(tmp_path / "cert.json")
        code = main(["partition", inst, "--k", "2", "--out", out])
        assert code == EXIT_OK
        data = json.loads(open(out).read())
        assert data["infeasible"] is False and len(data["blocks"]) == 2

    def test_vectors_instance_infeasible(self, tmp_path):
        d = vectors_to_dict(QQ, [(1, 1), (2, 2), (3, 3)])
        inst = write_json(tmp_path / "v.json", d)
        out = str(tmp_path / "w.json")
        code = main(["partition", inst, "--k", "2", "--out", out])
        assert code == EXIT_INFEASIBLE
        data = json.loads(open(out).read())
        assert data["infeasible"] is True and data["subset"] == [0, 1, 2]

    def test_avoidance_mode(self, tmp_path):
        d = vectors_to_dict(QQ, [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1),
                                 (1, 2, 3), (1, 4, 9)])
        inst = write_json(tmp_path / "v.json", d)
        out = str(tmp_path / "cert.json")
        code = main(["partition", inst, "--mode", "avoidance", "--k", "3",
                     "--p", "1", "--tail", "0", "--out", out])
        assert code == EXIT_OK
        data = json.loads(open(out).read())
        assert data["avoidance"] == [{"element": 0, "block": 0}]


class TestReproduce:
    def test_example_28(self, tmp_path):
        out = str(tmp_path / "r.json")
        assert main(["reproduce", "2.8", "--out", out]) == EXIT_OK
        data = json.loads(open(out).read())
        assert data["pass"] is True
        assert data["results"]["hypothesis_holds"] is True
        assert data["results"]["qualifying_set_exists"] is False

    def test_sharpness(self, tmp_path):
        out = str(tmp_path / "r.json")
        assert main(["reproduce", "4.6-sharpness", "--out", out]) == EXIT_OK
        data = json.loads(open(out).read())
        for entry in data["results"].values():
            assert entry["reg_index"] == entry["segre"]

    def test_veronese_scenario(self, tmp_path):
        out = str(tmp_path / "r.json")
        assert main(["reproduce", "5.4-veronese", "--out", out]) == EXIT_OK
        data = json.loads(open(out).read())
        assert data["results"]["lifted_reg_index"] == 1

    def test_generic_scenario(self, tmp_path):
        out = str(tmp_path / "r.json")
        assert main(["reproduce", "5.6-generic", "--seed", "1", "--out", out]) == EXIT_OK
        data = json.loads(open(out).read())
        assert data["pass"] is True


class TestGenKinds:
    def test_rational_normal_curve(self, tmp_path):
        out = str(tmp_path / "x.json")
        code = main(["gen", "--kind", "rational-normal-curve", "--n", "3",
                     "--s", "4", "--mult", "2", "--out", out])
        assert code == EXIT_OK
        data = json.loads(open(out).read())
        assert data["kind"] == "scheme" and len(data["points"]) == 4
        assert all(p["mult"] == 2 for p in data["points"])

    def test_example_28_vectors(self, tmp_path):
        out = str(tmp_path / "v.json")
        code = main(["gen", "--kind", "example-2.8", "--t", "4", "--k", "3",
                     "--p", "1", "--out", out])
        assert code == EXIT_OK
        data = json.loads(open(out).read())
        assert data["kind"] == "vectors" and len(data["vectors"]) == 8

    def test_prime_field_gen(self, tmp_path):
        out = str(tmp_path / "x.json")
        code = main(["gen", "--kind", "generic", "--n", "2", "--s", "3",
                     "--field", "prime:10007", "--out", out])
        assert code == EXIT_OK
        data = json.loads(open(out).read())
        assert data["field"] == "prime:10007"
