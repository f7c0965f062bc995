import json
import subprocess
import sys

import pytest

from etmaps import cli, realize


def run_cli(args, stdin_text=None, capsys=None):
    """Call the CLI entry point in-process and capture stdout."""
    if stdin_text is not None:
        import io
        old = sys.stdin
        sys.stdin = io.StringIO(stdin_text)
        try:
            code = cli.main(args)
        finally:
            sys.stdin = old
    else:
        code = cli.main(args)
    out, _ = capsys.readouterr()
    return code, out


def spec_json():
    return json.dumps({
        "class": "2Pex",
        "group": {"degree": 6, "generators": ["(1,2,3,4,5,6)", "(1,2)"]},
        "images": {"X": "(1,2,3,4,5,6)", "Y": "(1,2)(3,5)"},
    })


def test_build_then_classify(capsys, tmp_path):
    spec_file = tmp_path / "spec.json"
    spec_file.write_text(spec_json())
    code, out = run_cli(["build", "--spec", str(spec_file)], capsys=capsys)
    assert code == 0
    m = json.loads(out)
    assert m["flags"] == 1440
    code, out = run_cli(["classify", "-"], stdin_text=json.dumps(m), capsys=capsys)
    assert code == 0
    assert out.strip() == "2Pex"


def test_info_n46_3(capsys, tmp_path):
    m = realize.psl2_class1(11).build()
    map_file = tmp_path / "n46_3.json"
    map_file.write_text(json.dumps(m.to_json()))
    code, out = run_cli(["info", str(map_file)], capsys=capsys)
    assert code == 0
    info = json.loads(out)
    assert (info["V"], info["E"], info["F"], info["chi"]) == (55, 165, 66, -44)
    assert info["genus"] == {"kind": "non_orientable", "value": 46}


def test_op_dual_classify_chain(capsys, tmp_path):
    # etm op dual tetra.json | etm classify -  ->  "1"
    from etmaps import build as bld
    G = realize.sym_group(4)
    w = bld.search_epimorphisms("1", G, exhaustive=False, limit=1).witnesses[0]
    m = bld.build_map(bld.EpimorphismSpec("1", G, w))
    map_file = tmp_path / "tetra.json"
    map_file.write_text(json.dumps(m.to_json()))
    code, out = run_cli(["op", "dual", str(map_file)], capsys=capsys)
    assert code == 0
    code, out = run_cli(["classify", "-"], stdin_text=out, capsys=capsys)
    assert code == 0
    assert out.strip() == "1"


def test_classify_basic_2Pex_prints_covered_class(capsys, tmp_path):
    from etmaps import classes
    m = classes.basic_map("2Pex")
    map_file = tmp_path / "basic_2Pex.json"
    map_file.write_text(json.dumps(m.to_json()))
    code, out = run_cli(["classify", str(map_file)], capsys=capsys)
    assert code == 0
    assert out.strip() == "1"  # the basic map of a class is never in that class


def test_realize_emits_spec(capsys):
    code, out = run_cli(["realize", "--family", "psl2", "--q", "11",
                         "--class", "1"], capsys=capsys)
    assert code == 0
    obj = json.loads(out)
    assert obj["class"] == "1"
    assert obj["group"]["degree"] == 12


def test_realize_unrealizable_is_reported(capsys):
    code, out = run_cli(["realize", "--family", "sym-even", "--class", "1",
                         "--n", "6"], capsys=capsys)
    assert code == 0
    obj = json.loads(out)
    assert "unrealizable" in obj


def test_realize_roundtrips_through_build(capsys, tmp_path):
    code, out = run_cli(["realize", "--family", "nilpotent-chiral", "--e", "4"],
                        capsys=capsys)
    assert code == 0
    spec_file = tmp_path / "nilp.json"
    spec_file.write_text(out)
    code, out = run_cli(["build", "--spec", str(spec_file)], capsys=capsys)
    assert code == 0
    assert json.loads(out)["flags"] == 1024


def test_search_cli(capsys, tmp_path):
    group_file = tmp_path / "s5.json"
    group_file.write_text(json.dumps(
        {"degree": 5, "generators": ["(1,2,3,4,5)", "(1,2)"]}))
    code, out = run_cli(["search", "--class", "2Pex", "--group", str(group_file),
                         "--exhaustive", "--up-to-cycle-type"], capsys=capsys)
    assert code == 0
    obj = json.loads(out)
    assert obj["proved_empty"] is True
    assert obj["witnesses"] == []


def test_verify_suite_exit_codes(capsys):
    code, out = run_cli(["verify", "rewrite-soundness"], capsys=capsys)
    assert code == 0
    report = json.loads(out)
    assert report["counts"]["fail"] == 0


def test_verify_markdown_format(capsys):
    code, out = run_cli(["verify", "priminv", "--format", "md"], capsys=capsys)
    assert code == 0
    assert out.startswith("## suite priminv")
    assert "| q=4 |" in out


def test_malformed_input_exit_2(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _ = run_cli(["classify", str(bad)], capsys=capsys)
    assert code == 2


def test_byte_stable_output(capsys):
    code1, out1 = run_cli(["verify", "rewrite-soundness"], capsys=capsys)
    code2, out2 = run_cli(["verify", "rewrite-soundness", "--threads", "4"],
                          capsys=capsys)
    assert out1 == out2


def test_console_script_installed():
    proc = subprocess.run(["etm", "verify", "rewrite-soundness"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout.splitlines()[0])["counts"]["fail"] == 0
