"""CLI subcommands, exit codes, certificate round trips."""

import json

from click.testing import CliRunner

from cyclemod import certify
from cyclemod.cli import main
from cyclemod.graph import complete_bipartite, complete_graph, format_graph


def run(*args, files=None):
    runner = CliRunner()
    with runner.isolated_filesystem():
        for name, content in (files or {}).items():
            with open(name, "w") as fh:
                fh.write(content)
        return runner.invoke(main, list(args), catch_exceptions=False)


K4 = format_graph(complete_graph(4))
K5 = format_graph(complete_graph(5))
K44 = format_graph(complete_bipartite(4, 4))


def test_paths_success():
    res = run("paths", "--graph", "g", "--x", "0", "--y", "1", "--k", "2",
              "--mode", "length", files={"g": K5})
    assert res.exit_code == 0
    cert = json.loads(res.output)
    assert sorted(len(m) - 1 for m in cert["family"]) == [2, 4]
    assert certify.verify(cert) == (True, None)


def test_paths_hypothesis_not_met():
    res = run("paths", "--graph", "g", "--x", "0", "--y", "1", "--k", "2",
              files={"g": K4})
    assert res.exit_code == 2


def test_paths_bad_file():
    res = run("paths", "--graph", "g", "--x", "0", "--y", "1", "--k", "1",
              files={"g": "p x\nnot a graph\n"})
    assert res.exit_code == 1


def test_cycles_and_verify_round_trip():
    res = run("cycles", "--graph", "g", "--k", "2", files={"g": K4})
    assert res.exit_code == 0
    cert = json.loads(res.output)
    assert cert["branch"] == "II"
    assert sorted(len(m) for m in cert["family"]) == [3, 4]

    ver = run("verify", "--cert", "c", files={"c": res.output})
    assert ver.exit_code == 0 and ver.output.strip() == "OK"

    cert["family"][0][0] = 99
    bad = run("verify", "--cert", "c", files={"c": json.dumps(cert)})
    assert bad.exit_code == 4 and bad.output.startswith("FAIL")


def test_cycles_branch_iii_with_mod():
    res = run("cycles", "--graph", "g", "--k", "3", "--mod", files={"g": K44})
    assert res.exit_code == 0
    cert = json.loads(res.output)
    assert cert["branch"] == "III"
    assert sorted(cert["residues"]) == ["0", "1", "2"]


def test_cycles_mod_needs_odd_k():
    res = run("cycles", "--graph", "g", "--k", "4", "--mod", files={"g": K44})
    assert res.exit_code == 2


def test_gen_deterministic_and_infeasible():
    a = run("gen", "--n", "6", "--mindeg", "3", "--seed", "1")
    b = run("gen", "--n", "6", "--mindeg", "3", "--seed", "1")
    assert a.exit_code == 0 and a.output == b.output
    bad = run("gen", "--n", "4", "--mindeg", "4")
    assert bad.exit_code == 5


def test_sweep_exhaustive_small():
    res = run("sweep", "--nmax", "5", "--exhaustive")
    assert res.exit_code == 0
    assert "gap_rate 0.0000" in res.output


def test_sweep_samples():
    res = run("sweep", "--nmax", "6", "--samples", "10")
    assert res.exit_code == 0
    assert "fails 0" in res.output
