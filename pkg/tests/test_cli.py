import json

import pytest

from cospec.census import CensusSpec, Domain, run_census
from cospec.cli import (
    census_rows_to_csv,
    census_rows_to_json,
    format_factors,
    format_matrix,
    main,
)
from cospec.graphs import connected_graph6_lines, parse_graph6
from cospec.intlinalg import charpoly, smith_normal_form
from cospec.invariants import Flavor, fingerprint
from cospec.matrices import MatrixKind, build_matrix

K = MatrixKind


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_snf_golden(capsys):
    code, out, _ = run_cli(capsys, "snf", "--kind", "l", "A_")
    want = format_factors(smith_normal_form(build_matrix(parse_graph6("A_"), K.LAPLACIAN)))
    assert code == 0 and out == want + "\n"
    assert out == "1 0\n"


def test_matrix_golden(capsys):
    code, out, _ = run_cli(capsys, "matrix", "--kind", "atrs", "Bw")
    g = parse_graph6("Bw")
    want = format_matrix(build_matrix(g, K.TRANSMISSION_ADJACENCY))
    assert code == 0 and out == want + "\n"


def test_charpoly_text_and_json(capsys):
    code, out, _ = run_cli(capsys, "charpoly", "--kind", "a", "Bw")
    assert code == 0 and out == "x^3 - 3*x - 2\n"
    code, out, _ = run_cli(capsys, "charpoly", "--kind", "a", "--format", "json", "Bw")
    assert json.loads(out) == {"coeffs": [-2, -3, 0, 1]}


def test_cof_command(capsys):
    code, out, _ = run_cli(capsys, "cof", "--kind", "a", "A_")
    assert code == 0 and out == "2*x + 2\n"


def test_fingerprint_hex(capsys):
    code, out, _ = run_cli(capsys, "fingerprint", "--kind", "a", "--flavor", "spectral", "Bw")
    want = fingerprint(parse_graph6("Bw"), K.ADJACENCY, Flavor.SPECTRAL).hex()
    assert code == 0 and out == want + "\n"


def test_fingerprint_describe(capsys):
    code, out, _ = run_cli(
        capsys, "fingerprint", "--kind", "a", "--flavor", "spectral", "--describe", "Bw"
    )
    assert code == 0 and "x^3 - 3*x - 2" in out


def test_relate_and_codet(capsys):
    from cospec.graphs import complete, cycle, disjoint_union, star, write_graph6

    a = write_graph6(star(4))
    b = write_graph6(disjoint_union(cycle(4), complete(1)))
    ga, gb = parse_graph6(a), parse_graph6(b)
    assert charpoly(build_matrix(ga, K.ADJACENCY)) == charpoly(build_matrix(gb, K.ADJACENCY))
    code, out, _ = run_cli(capsys, "relate", "--kind", "a", "--flavor", "spectral", a, b)
    assert code == 0 and out == "true\n"
    code, out, _ = run_cli(capsys, "relate", "--kind", "a", "--flavor", "gen-spectral", a, b)
    assert code == 0 and out == "false\n"
    code, out, _ = run_cli(capsys, "codet", "--kind", "a", a, b)
    assert code == 0 and out == "true\n"


def test_closed_form_commands(capsys):
    code, out, _ = run_cli(capsys, "closed-form", "star", "--leaves", "3")
    assert code == 0 and out == "1 1 5 60\n"
    code, out, _ = run_cli(capsys, "closed-form", "multipartite", "-m", "2", "-s", "2")
    assert code == 0 and out == "1 1 8 24\n"
    code, out, _ = run_cli(capsys, "closed-form", "tree", "Ch")
    assert code == 0 and out == "1 1 1 493\n"


def test_census_csv_golden(capsys):
    code, out, _ = run_cli(
        capsys,
        "census", "--n", "5", "--domain", "connected",
        "--kind", "a,q", "--flavor", "gen-spectral",
    )
    spec = CensusSpec(
        5, Domain.CONNECTED, (K.ADJACENCY, K.SIGNLESS_LAPLACIAN), Flavor.GEN_SPECTRAL
    )
    want = census_rows_to_csv(run_census(spec))
    assert code == 0 and out == want + "\n"
    assert "q,gen-spectral,5,21,2,2/21" in out


def test_census_json_mirror(capsys):
    code, out, _ = run_cli(
        capsys,
        "census", "--n", "4", "--domain", "connected",
        "--kind", "l", "--flavor", "invariant", "--format", "json",
    )
    spec = CensusSpec(4, Domain.CONNECTED, (K.LAPLACIAN,), Flavor.INVARIANT)
    assert code == 0 and out == census_rows_to_json(run_census(spec)) + "\n"
    data = json.loads(out)
    assert data["rows"][0]["domain_size"] == 6


def test_census_text_format(capsys):
    code, out, _ = run_cli(
        capsys,
        "census", "--n", "4", "--domain", "connected",
        "--kind", "a", "--flavor", "spectral", "--format", "text",
    )
    assert code == 0 and out.startswith("kind=a flavor=spectral n=4 domain_size=6")


def test_census_from_stdin_file(tmp_path, capsys):
    src = tmp_path / "g5.g6"
    src.write_text("\n".join(connected_graph6_lines(5)) + "\n", encoding="ascii")
    code, out, _ = run_cli(
        capsys,
        "census", "--n", "5", "--domain", "connected",
        "--kind", "q", "--flavor", "gen-spectral", "--input", str(src),
    )
    assert code == 0 and out.endswith("q,gen-spectral,5,21,2,2/21\n")


def test_batch_input_file(tmp_path, capsys):
    src = tmp_path / "graphs.g6"
    src.write_text(">>graph6<<\nA_\nBw\n", encoding="ascii")
    code, out, _ = run_cli(capsys, "snf", "--kind", "l", "--input", str(src))
    assert code == 0 and out == "1 0\n1 3 0\n"


def test_domain_error_exit_code(capsys):
    code, out, err = run_cli(capsys, "snf", "--kind", "d", "A?")
    assert code == 1 and out == "" and "connected" in err


def test_parse_error_exit_code(capsys):
    code, _, err = run_cli(capsys, "snf", "--kind", "a", "!!")
    assert code == 1 and "cospec:" in err


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["snf", "--kind", "bogus", "A_"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["census", "--n", "5"])
    assert exc.value.code == 2


def test_diff_paper_cli(capsys):
    code, out, _ = run_cli(capsys, "diff-paper", "--max-n", "5")
    assert code == 0
    lines = out.strip().splitlines()
    assert all(line.startswith("PASS") for line in lines[:-1])
    assert lines[-1].endswith("0 mismatches")
