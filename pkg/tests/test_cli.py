import json

import pytest

from domino_qsym import cli, verify
from domino_qsym.core import enumerate_standard_domino


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    records = [json.loads(line) for line in out.splitlines() if line.strip()]
    return code, records, err


def test_enumerate_counts(capsys):
    code, recs, err = run(capsys, "enumerate", "--kind", "arc", "--n", "3")
    assert code == 0 and len(recs) == 24 and "24 records" in err
    assert {r["class"]["type"] for r in recs} == {"T1", "T2", "T3", "T4", "T5", "T6"}
    code, recs, _ = run(capsys, "enumerate", "--kind", "perms", "--n", "2")
    assert code == 0 and len(recs) == 8
    assert recs[0] == {"perm": "1,2", "des": [], "des_r": [], "neg": 0, "sdes": {"S": [2], "eps": "+"}}
    code, recs, _ = run(capsys, "enumerate", "--kind", "tableaux", "--family", "domino", "--shape", "3,3")
    assert code == 0 and len(recs) == len(list(enumerate_standard_domino((3, 3)))) == 3
    assert all(r["shape"] == [3, 3] and r["two_quotient"] == [[2], [1]] for r in recs)


def test_enumerate_semistandard(capsys):
    code, recs, _ = run(capsys, "enumerate", "--kind", "tableaux", "--shape", "2,1", "--max-label", "3")
    assert code == 0 and len(recs) == 8


def test_enumerate_output_is_deterministic(capsys):
    first = run(capsys, "enumerate", "--kind", "arc", "--n", "4")[1]
    second = run(capsys, "enumerate", "--kind", "arc", "--n", "4")[1]
    assert first == second


def test_map_phi1(capsys):
    code, [rec], _ = run(capsys, "map", "--name", "phi1", "--perm", "-3,8,5,-2,1,-9,-7,4,6")
    assert code == 0
    assert rec["output"]["perm"] == "-7,8,5,-9,1,-2,-3,4,6"
    # statistics swap sides
    assert rec["input"]["des"] == rec["output"]["des_r"]
    assert rec["input"]["des_r"] == rec["output"]["des"]


def test_map_rs(capsys):
    code, [rec], _ = run(capsys, "map", "--name", "rs", "--perm", "5,2,4,1,3")
    assert code == 0
    assert rec["output"]["P"] == {"rows": [[1, 3], [2, 4], [5]]}
    assert rec["output"]["Q"]["tableau"] == {"rows": [[1, 3], [2, 5], [4]]}
    assert rec["input"]["des"] == rec["output"]["Q"]["des"] == [1, 3]


def test_map_arc2domino_and_back(capsys):
    code, [rec], _ = run(capsys, "map", "--name", "arc2domino", "--perm", "-5,6,-4,7,-3,-2,-1")
    assert code == 0
    assert rec["input"]["class"] == {"type": "T5", "k": 5}
    assert rec["output"]["shape"] == [7, 7]
    assert rec["input"]["des"] == rec["output"]["des"]
    tableau = json.dumps(rec["output"]["tableau"])
    code, [back], _ = run(capsys, "map", "--name", "domino2arc", "--tableau", tableau, "--which", "T5")
    assert code == 0 and back["output"]["perm"] == "-5,6,-4,7,-3,-2,-1"


def test_map_phi_chain_and_littlewood(capsys, bv_q):
    code, [rec], _ = run(capsys, "map", "--name", "phi2", "--perm", "-1,6,-2,7,-3,-4,-5")
    assert code == 0
    assert rec["output"]["tableau"] == {"kind": "standard", "t1": [[1, 3, 5, 6, 7]], "t2": [[2, 4]]}
    code, [p3], _ = run(capsys, "map", "--name", "phi3", "--tableau", json.dumps(rec["output"]["tableau"]))
    assert code == 0 and p3["output"]["des"] == rec["output"]["des"]
    code, [lw], _ = run(capsys, "map", "--name", "littlewood", "--tableau", json.dumps(bv_q.to_json()))
    assert code == 0
    assert lw["output"]["tableau"]["t1"] == [[1, 2, 8], [7, 9]]
    code, [birs], _ = run(capsys, "map", "--name", "birs", "--perm", "-3,8,5,-2,1,-9,-7,4,-6")
    assert code == 0 and birs["output"]["Q"]["sdes"]["eps"] == "-++-+--+-"


def test_map_reads_stdin(capsys, monkeypatch, bv_q):
    import io
    monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps(bv_q.to_json())))
    code, [rec], _ = run(capsys, "map", "--name", "littlewood", "--tableau", "-")
    assert code == 0 and rec["output"]["shape"] == [[3, 2], [2, 1, 1]]


def test_expand(capsys):
    code, [rec], _ = run(capsys, "expand", "--shape", "2,2")
    assert code == 0
    got = {tuple(c["rho"]): c["coef"] for c in rec["coefficients"]}
    assert got == {(1,): 1, (2,): 1, (1, 1): 1}


def test_usage_and_domain_errors(capsys):
    assert run(capsys, "map", "--name", "arc2domino", "--perm", "2,1,3")[0] == 2
    assert run(capsys, "map", "--name", "phi1")[0] == 2
    assert run(capsys, "map", "--name", "phi1", "--perm", "1,1")[0] == 2
    assert run(capsys, "map", "--name", "rs", "--perm", "-1,2")[0] == 2
    assert run(capsys, "render", "--tableau", "{not json")[0] == 2
    code, _, err = run(capsys, "verify", "--identity", "gdx", "--n", "9")
    assert code == 2 and "--force" in err
    assert run(capsys, "verify", "--identity", "nope", "--n", "2")[0] == 2
    assert run(capsys, "verify", "--n", "2")[0] == 2
    with pytest.raises(SystemExit) as exc:
        cli.main(["enumerate", "--kind", "bogus"])
    assert exc.value.code == 2


def test_render_command(capsys):
    code = cli.main(["render", "--tableau", '{"kind": "standard", "shape": [2], '
                     '"dominoes": [{"row": 1, "col": 1, "orient": "H", "label": 1}]}'])
    out = capsys.readouterr().out
    assert code == 0 and out == "┌───────┐\n│   1   │\n└───────┘\n"
    cli.main(["render", "--tableau", '{"rows": []}', "--format", "json"])
    assert capsys.readouterr().out == '{"rows": []}\n'


def test_verify_examples(capsys):
    code, [rec], _ = run(capsys, "verify", "--identity", "thm-sap", "--n", "3", "--mode", "multiset")
    assert code == 0 and rec["status"] == "pass" and rec["witness"] is None
    assert set(rec) >= {"identity", "n", "mode", "status", "elapsed", "witness"}
    code, [rec], _ = run(capsys, "verify", "--identity", "gdx", "--n", "2")
    assert code == 0 and rec["status"] == "pass"
    code, [rec], _ = run(capsys, "verify", "--identity", "chow-poirier", "--n", "1")
    assert code == 0


def test_verify_is_independent_of_jobs(capsys):
    def strip(recs):
        return [{k: v for k, v in r.items() if k != "elapsed"} for r in recs]

    code1, serial, _ = run(capsys, "verify", "--all", "--n", "3", "--jobs", "1")
    code2, parallel, _ = run(capsys, "verify", "--all", "--n", "3", "--jobs", "2")
    assert code1 == code2 == 0
    assert strip(serial) == strip(parallel)
    assert [r["identity"] for r in serial] == [t for t in verify.IDENTITIES if verify.IDENTITIES[t].min_n <= 3]


def test_verify_failure_reports_witness(capsys, monkeypatch):
    def broken(n, mode):
        for k in range(n + 1):
            verify._expect(k < 2, {"k": k})
        return {}

    monkeypatch.setitem(verify.IDENTITIES, "w1", verify.Identity(broken, 1, 6))
    code, [rec], err = run(capsys, "verify", "--identity", "w1", "--n", "3")
    assert code == 1
    assert rec["status"] == "fail" and rec["witness"] == {"k": 2}
    assert "0 passed, 1 failed" in err
