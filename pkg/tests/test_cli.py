import io
import json
from importlib import resources

import jsonschema
import pytest

from reflex.cli import GroupSpec, UsageError, main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def schema(name):
    return json.loads(resources.files("reflex").joinpath("schema", name).read_text())


def run_json(*argv, kind="report"):
    code, text = run(*argv, "--json" if kind == "report" else "--format=json")
    obj = json.loads(text)
    jsonschema.validate(obj, schema(f"{kind}.schema.json"))
    return code, obj


def test_two_orbit_example():
    code, text = run("verify", "two-orbit", "--group", "G(2,1,2)", "--orbit", "s")
    assert code == 0
    assert "1+2y+2x+2xy+y^2" in text and "(1+2x+y)(1+y)" in text


def test_two_orbit_json_and_extension():
    code, obj = run_json("verify", "two-orbit", "--group", "G13", "--orbit", "t", "--sign", "signed")
    assert code == 0 and obj["status"] == "ok"
    assert obj["checks"][0]["rhs"] == "(1-12x-5y)(1-y)"


def test_affine_example():
    assert run("verify", "affine", "--type", "C", "--rank", "2", "--cutoff", "12")[0] == 0


def test_affine_printed_product_fails():
    code, obj = run_json("verify", "affine", "--type", "C", "--rank", "2", "--cutoff", "6",
                         "--rhs", "printed")
    assert code == 1 and obj["status"] == "mismatch"


@pytest.mark.parametrize("argv", [
    ("verify", "two-orbit", "--group", "G(99"),
    ("verify", "two-orbit", "--group", "G99"),
    ("verify", "two-orbit", "--group", "G(2,1,2)", "--orbit", "z"),
    ("verify", "affine", "--type", "H", "--rank", "3"),
    ("order", "--twisted", "2B", "--q", "2"),
    ("table", "nonsense"),
    ("frobnicate",),
])
def test_usage_errors_exit_2(argv):
    assert run(*argv)[0] == 2


def test_solomon_weighted_dihedral():
    assert run("verify", "solomon", "--group", "G(4,2,3)")[0] == 0
    code, obj = run_json("verify", "weighted", "--type", "F", "--rank", "4")
    assert code == 0 and all(c["status"] == "ok" for c in obj["checks"])
    assert run("verify", "dihedral", "--b", "4")[0] == 0
    assert run("verify", "dihedral", "--group", "I2(6)")[0] == 0


def test_verify_all_subset():
    code, obj = run_json("verify", "all", "--criteria", "4,9")
    assert code == 0 and len(obj["checks"]) == 2


def test_table_short_exponents_csv():
    code, text = run("table", "short-exponents", "--format", "csv")
    assert code == 0
    rows = {line.split(",")[0]: line for line in text.strip().splitlines()[1:]}
    assert rows["F4"].endswith('"4,8"') and rows["G2"].endswith(",3") and rows["C3"].endswith(",3")
    assert rows["B4"].endswith('"2,4,6"')


def test_table_reflexponents_g26():
    code, obj = run_json("table", "reflexponents", "--group", "G26", kind="table")
    assert code == 0
    orb = obj["rows"][0]["orbits"]
    assert orb["s"]["reflexponents"] == [9] and orb["s"]["coreflexponents"] == [9]
    assert sorted(orb["t"]["reflexponents"]) == [9, 15] and sorted(orb["t"]["coreflexponents"]) == [3, 9]


def test_table_degrees():
    code, text = run("table", "degrees", "--group", "G(2,1,2)")
    assert code == 0 and "2,4" in text.replace(" ", "")
    run_json("table", "degrees", "--group", "G28", kind="table")


def test_order_examples():
    code, text = run("order", "--twisted", "3D4", "--q", "2")
    assert code == 0 and "211341312" in text
    code, obj = run_json("order", "--twisted", "2A", "--rank", "3", "--q", "2", "--check")
    assert code == 0 and obj["checks"][0]["lhs"] == "25920"
    code, text = run("order", "--twisted", "2D", "--rank", "4", "--q", "2")
    assert "197406720" in text


def test_deterministic_output():
    a = run("verify", "two-orbit", "--group", "G(3,1,2)")
    b = run("verify", "two-orbit", "--group", "G(3,1,2)")
    strip = lambda t: [l for l in t.splitlines() if "s)" not in l and "time" not in l]
    assert a[0] == b[0] == 0 and strip(a[1]) == strip(b[1])


@pytest.mark.parametrize("text", ["G(6,2,3)", "G13", "I2(8)", "C2", "B3~", "G(2,1,2)"])
def test_group_spec_roundtrip(text):
    assert str(GroupSpec.parse(text)) == text


def test_group_spec_rejects():
    for bad in ("G(1,2", "I2()", "X7", ""):
        with pytest.raises(UsageError):
            GroupSpec.parse(bad)
