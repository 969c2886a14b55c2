import io
import json
from contextlib import redirect_stderr, redirect_stdout

import pytest

from weakyd import cli
from weakyd.exactlin import FieldError
from weakyd.specfile import (SchemaError, SpecSyntaxError, build_bialgebra, dumps_spec,
                             export_spec, loads_spec)
from weakyd.yetterdrinfeld import check_yd


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = cli.main(list(argv))
    return code, out.getvalue(), err.getvalue()


def example(*args):
    code, text, _ = run("example", *args)
    assert code == 0
    return text


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def test_groupoid_spec_for_z2():
    spec = loads_spec(example("group_algebra", "2", "--groupoid"))
    assert spec.kind == "groupoid"
    assert len(spec.groupoid.objects) == 1 and spec.dim == 2


def test_pair_groupoid_example_is_weak_hopf(tmp_path):
    text = example("pair_groupoid", "2")
    spec = loads_spec(text)
    assert spec.kind == "weak_hopf" and spec.dim == 4
    code, out, _ = run("verify", write(tmp_path, "p2.json", text), "--suite", "hopf")
    assert code == 0 and out.endswith("0 failed\n")


def test_graded_yd_example():
    spec = loads_spec(example("graded_yd", "pair_groupoid", "2", "--degree", "id_1"))
    H = build_bialgebra(spec.algebra)
    rep, M = check_yd(H, spec.tensors["action"], spec.tensors["coaction"], "ll")
    assert M is not None
    assert spec.meta["degrees"] == ["id_1", "id_2"]


def test_bad_example_parameters():
    assert run("example", "graded_yd", "pair_groupoid", "2", "--degree", "1->2")[0] == 2
    assert run("example", "pair_groupoid", "x")[0] == 2
    assert run("example", "nothing", "2")[0] == 2


def test_zero_denominator_is_a_field_error():
    with pytest.raises(FieldError):
        loads_spec('{"kind": "algebra", "dim": 1, "mult": [[0, 0, 0, "1/0"]], "unit": [[0, 1]]}')


def test_syntax_error_has_line_and_column():
    with pytest.raises(SpecSyntaxError) as info:
        loads_spec('{"kind": "algebra",\n "dim": 1 "mult": []}')
    assert info.value.lineno == 2 and info.value.offset == 11


@pytest.mark.parametrize("text", [
    '{"kind": "algebra", "dim": 1, "mult": [], "unit": [], "extra": 1}',
    '{"kind": "algebra", "dim": 1, "mult": [[0, 0, 1, 1]], "unit": [[0, 1]]}',
    '{"kind": "algebra", "dim": 1, "mult": [[0, 0, 0, "2/4"]], "unit": [[0, 1]]}',
    '{"kind": "algebra", "dim": 1, "mult": [[0, 0, 0, 1.5]], "unit": [[0, 1]]}',
    '{"kind": "algebra", "dim": 1, "unit": [[0, 1]]}',
    '{"kind": "lattice", "dim": 1}',
    '{"kind": "algebra", "dim": 2, "basis": ["a"], "mult": [], "unit": []}',
])
def test_schema_errors(text):
    with pytest.raises(SchemaError):
        loads_spec(text)


def test_bad_prime_field():
    with pytest.raises(FieldError):
        loads_spec('{"kind": "algebra", "field": "prime:4", "dim": 1, "mult": [], "unit": []}')


def test_field_override_from_environment(monkeypatch):
    text = example("pair_groupoid", "2")
    monkeypatch.setenv("WEAKYD_FIELD", "prime:3")
    spec = loads_spec(text)
    assert spec.field.name == "prime:3"
    assert cli.run_suite(spec, "hopf")[0].passed


def test_algebra_kind_runs_its_own_checks(tmp_path):
    text = '{"kind": "algebra", "dim": 1, "mult": [[0, 0, 0, 1]], "unit": [[0, 1]]}'
    code, out, _ = run("verify", write(tmp_path, "a.json", text))
    assert code == 0 and "algebra: 3 checks" in out


def test_corrupted_algebra_names_the_failing_indices(tmp_path):
    obj = json.loads(example("group_algebra", "2"))
    obj["mult"] = [e if e[:3] != [0, 1, 1] else [0, 1, 1, -1] for e in obj["mult"]]
    code, out, _ = run("verify", write(tmp_path, "bad.json", json.dumps(obj)),
                       "--suite", "bialgebra", "--json")
    assert code == 1
    rep = json.loads(out)
    checks = {c["name"]: c for c in rep["checks"]}
    assert len(checks["associativity"]["witness"]["index"]) == 3
    assert checks["comultiplication_multiplicative"]["witness"]["index"] == [0, 1]


def test_unknown_suite_exit_status(tmp_path):
    path = write(tmp_path, "z2.json", example("group_algebra", "2"))
    assert run("verify", path, "--suite", "nope")[0] == 2
    with pytest.raises(cli.UnknownSuite):
        cli.run_suite(loads_spec(example("group_algebra", "2")), "nope")


def test_double_export_passes_hopf_suite(tmp_path):
    path = write(tmp_path, "z2.json", example("group_algebra", "2"))
    out = str(tmp_path / "d.json")
    code, text, _ = run("verify", path, "--suite", "double", "--export", out)
    assert code == 0
    spec = loads_spec(open(out).read())
    assert spec.kind == "weak_hopf" and spec.dim == 4
    assert run("verify", out, "--suite", "hopf")[0] == 0


def test_export_needs_matching_suite(tmp_path):
    path = write(tmp_path, "z2.json", example("group_algebra", "2"))
    assert run("verify", path, "--suite", "hopf", "--export", str(tmp_path / "x"))[0] == 2


@pytest.mark.parametrize("suite", ["yd", "entwining", "duality"])
def test_suites_on_yd_module_spec(tmp_path, suite):
    path = write(tmp_path, "m.json", example("graded_yd", "pair_groupoid", "2"))
    code, out, _ = run("verify", path, "--suite", suite)
    assert code == 0, out


def test_no_antipode_is_a_failure(tmp_path):
    obj = {"kind": "weak_bialgebra", "dim": 2,
           "mult": [[0, 0, 0, 1], [0, 1, 1, 1], [1, 0, 1, 1], [1, 1, 1, 1]],
           "unit": [[0, 1]], "comult": [[0, 0, 0, 1], [1, 1, 1, 1]],
           "counit": [[0, 1], [1, 1]]}
    path = write(tmp_path, "mon.json", json.dumps(obj))
    assert run("verify", path, "--suite", "bialgebra")[0] == 0
    code, out, _ = run("verify", path, "--suite", "hopf")
    assert code == 1 and "antipode_exists" in out


def test_parse_export_round_trip():
    for args in (("pair_groupoid", "3"), ("graded_yd", "pair_groupoid", "2"),
                 ("group_algebra", "3", "--groupoid")):
        text = example(*args)
        assert dumps_spec(export_spec(loads_spec(text))) == text


def test_prime_field_values_are_reduced():
    # e e = 2e with unit e/2; over F_5 the unit is 3e
    text = ('{"kind": "algebra", "field": "prime:5", "dim": 1, '
            '"mult": [[0, 0, 0, 2]], "unit": [[0, "1/2"]]}')
    spec = loads_spec(text)
    assert cli.run_suite(spec, "bialgebra")[0].passed
    assert export_spec(spec)["unit"] == [[0, 3]]
    assert int(spec.tensors["unit"][0]) == 3
