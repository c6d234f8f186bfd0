import json

import pytest

from whiskertype.cli import main
from whiskertype.core import parse_ideal

CUBIC = "n 2\ngen 3 0\ngen 0 3\ngen 1 1\n"
SQUARE = "# the square ideal\nn 2\ngen 2 0\ngen 0 2\n"


@pytest.fixture
def ideal_file(tmp_path):
    def write(text, name="ideal.txt"):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return write


def run(capsys, *argv):
    status = main(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


def test_info(capsys, ideal_file):
    status, out, _ = run(capsys, "info", ideal_file(SQUARE))
    assert status == 0
    assert out.splitlines() == ["n\t2", "b\t2 2", "length\t4", "h\t1 2 1"]


def test_info_not_zero_dimensional(capsys, ideal_file):
    status, _, err = run(capsys, "info", ideal_file("n 2\ngen 2 0\n"))
    assert status == 1
    assert "not zero-dimensional: x2" in err


def test_parse_error_names_line(capsys, ideal_file):
    status, _, err = run(capsys, "info", ideal_file("n 2\ngen 2 0\ngen 1\n"))
    assert status == 1
    assert "line 3" in err


def test_scale_refusal(capsys, ideal_file):
    status, _, err = run(capsys, "info", ideal_file("n 1\ngen 70\n"))
    assert status == 2
    assert "64" in err


def test_depth_table(capsys, ideal_file):
    status, out, _ = run(capsys, "depth", ideal_file(CUBIC), "--kmax", "3")
    assert status == 0
    rows = [line.split("\t") for line in out.splitlines()[1:]]
    assert [(int(k), int(q), int(d)) for k, q, d, _ in rows] == [(1, 2, 3), (2, 4, 1), (3, 4, 1)]
    assert [s for *_, s in rows] == ["N", "Y", "Y"]


def test_depth_json(capsys, ideal_file):
    _, out, _ = run(capsys, "depth", ideal_file(CUBIC), "--kmax", "2", "--json")
    data = json.loads(out)
    assert data["schema_version"] == 1
    assert data["stabilization_k"] == 2
    assert [r["depth"] for r in data["profile"]] == [3, 1]


def test_facets(capsys, ideal_file):
    _, out, _ = run(capsys, "facets", ideal_file(SQUARE))
    assert out.splitlines() == ["{x1_1,x2_1}", "{x1_1,x2_2}", "{x1_2,x2_1}", "{x1_2,x2_2}"]
    _, out, _ = run(capsys, "facets", ideal_file(SQUARE), "--json")
    assert json.loads(out)["facets"][0] == [[1, 1], [2, 1]]


def test_lgens(capsys, ideal_file):
    _, out, _ = run(capsys, "lgens", ideal_file(SQUARE))
    assert out.splitlines() == [
        "1\t1\t{x1_1,x2_1}\t{}",
        "2\tx2\t{x1_1,x2_2}\t{x2_1}",
        "3\tx1\t{x1_2,x2_1}\t{x1_1}",
        "4\tx1*x2\t{x1_2,x2_2}\t{x1_1,x2_1}",
    ]


def test_betti_with_oracle(capsys, ideal_file):
    status, out, _ = run(capsys, "betti", ideal_file(CUBIC), "--oracle")
    assert status == 0
    lines = out.splitlines()
    assert lines[0] == "i\tbeta_i\toracle\tmatch"
    assert lines[1:5] == ["0\t1\t1\tY", "1\t5\t5\tY", "2\t6\t6\tY", "3\t2\t2\tY"]
    assert lines[5:] == ["projdim\t3", "depth\t3"]


def test_betti_plain(capsys, ideal_file):
    _, out, _ = run(capsys, "betti", ideal_file(SQUARE))
    assert out.splitlines() == ["i\tbeta_i", "0\t1", "1\t4", "2\t4", "3\t1", "projdim\t3", "depth\t1"]


def test_vd_and_shelling(capsys, ideal_file):
    status, out, _ = run(capsys, "vd", ideal_file(CUBIC))
    assert status == 0
    assert out.splitlines()[0].startswith("shed x2_1")
    assert out.splitlines()[-1] == "verified\tY"
    _, out, _ = run(capsys, "vd", ideal_file(CUBIC), "--json")
    data = json.loads(out)
    assert data["certificate"]["vertex"] == [2, 1]
    assert data["certificate"]["cone_chain"] == [[2, 3], [2, 2]]
    status, out, _ = run(capsys, "shelling", ideal_file(SQUARE))
    assert out.splitlines()[-1] == "is_shelling\tY"
    assert len(out.splitlines()) == 5


def test_verify(capsys, ideal_file):
    status, out, _ = run(capsys, "verify", ideal_file(CUBIC))
    assert status == 0
    assert all(line.split("\t")[1] == "PASS" for line in out.splitlines())


def test_random_roundtrip(capsys, ideal_file):
    status, out, _ = run(capsys, "random", "--n", "3", "--bmax", "3", "--extra", "4", "--seed", "5")
    assert status == 0
    ideal = parse_ideal(out)
    assert ideal.n == 3
    status, verify_out, _ = run(capsys, "verify", ideal_file(out, "random.txt"))
    assert status == 0
    assert "FAIL" not in verify_out


def test_output_is_deterministic(capsys, ideal_file):
    path = ideal_file(CUBIC)
    for command in ("info", "facets", "lgens", "betti", "depth", "vd", "shelling", "verify"):
        first = run(capsys, command, path)[1]
        assert run(capsys, command, path)[1] == first
        first = run(capsys, command, path, "--json")[1]
        assert run(capsys, command, path, "--json")[1] == first
