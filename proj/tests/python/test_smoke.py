import json

import pytest

import ksod


def test_branch_count_and_classify():
    assert ksod.branch_count("z^2 - w^3")["branches"] == 1
    assert ksod.branch_count(factors=["z^2 - w^3", "z - w"])["branches"] == 2
    d4 = ksod.classify("D4")
    assert (d4["branches"], d4["cl_rank"]) == (3, 2)
    assert ksod.classify("z*w")["node"] is True
    assert ksod.parse_polynomial("(z+w)^2") == "z^2 + 2*z*w + w^2"


def test_newton_polygon():
    edges = ksod.newton_polygon("z^2 - w^3")
    assert len(edges) == 1


def test_decide_examples():
    assert ksod.decide({"kind": "threefold", "label": "nodal-quadric"})["decision"] == "Yes"
    chain = {"kind": "curve", "graph": {"vertices": 2, "edges": [[0, 1]]}}
    verdict = ksod.decide(chain)
    assert verdict["decision"] == "Yes"
    assert verdict["certificate"]["kind"] == "BurbanTree"
    cubic = {"kind": "threefold", "singularities": [{"ade": "A1"}], "pic_rank": 2, "cl_rank": 2}
    no = ksod.decide(json.dumps(cubic))
    assert no["decision"] == "No"
    assert no["obstruction"]["group"] == "Z"


def test_threefold_with_matrix():
    spec = {"singularities": [{"ade": "A1", "count": 2}], "pic_rank": 1, "cl_rank": 2}
    report = ksod.threefold(spec, matrix=[[2], [4]])
    assert report["k_minus_one"]["group"] == "Z + Z/2"


def test_curve_quiver_blowup():
    assert ksod.curve_k_minus_one({"graph": {"vertices": 3, "edges": [[0, 1], [1, 2], [2, 0]]}})["free_rank"] == 1
    q = ksod.quiver({"graph": {"vertices": 3, "edges": [[0, 1], [1, 2]]}})
    assert q["dimension"] == 9
    steps = {"steps": [{"center": "nodal_curve", "graph": {"vertices": 1, "edges": [[0, 0]] * 3}}]}
    assert ksod.blowup(steps)["k_minus_one"]["free_rank"] == 3


def test_snf_big_integers():
    big = 10**30
    out = ksod.smith_normal_form([[2 * big, 0], [0, 3]])
    assert out["cokernel"]["free_rank"] == 0
    assert int(out["diagonal"][1]) == 6 * big


def test_tables():
    rows = ksod.del_pezzo_table()
    assert [r["k_minus_one_rank"] for r in rows] == [21, 10, 5, 2, 0, 0]
    assert len(ksod.ade_table(1, 3)) == 12


def test_errors():
    with pytest.raises(ksod.KsodError):
        ksod.branch_count("z +")
    with pytest.raises(ksod.UnsupportedError, match="--factors"):
        ksod.branch_count("((z^2+w^2)^2-2*w^6)^2+w^13")
    with pytest.raises(ValueError):
        ksod.decide({"kind": "curve", "grph": {}})


def test_run_cli():
    code, out, err = ksod.run_cli(["table", "delpezzo"])
    assert code == 0 and "Unknown" in out and err == ""
    assert ksod.run_cli(["branches", "z^2"])[0] == 1
