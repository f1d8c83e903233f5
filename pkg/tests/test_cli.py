import json

import pytest

from fangvp import cli, instance_io
from fangvp.cli import MAX_BMLO_GENERATORS, main
from fangvp.instance_io import InstanceFile
from fangvp.pseudometric import IndexPoset, PseudometricFamily

from conftest import D_ALPHA


def run(capsys, *argv):
    status = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return status, (json.loads(out) if out else None), (json.loads(err) if err else None)


def write(tmp_path, inst, name="inst.json"):
    path = tmp_path / name
    instance_io.dump(inst, path)
    return str(path)


@pytest.fixture
def alpha_path(tmp_path, ex1_alpha, ex1_phi):
    return write(tmp_path, InstanceFile(ex1_alpha.carrier, ex1_alpha, ex1_phi, start=0), "alpha.json")


def test_check_family(capsys, ex1_path):
    status, rep, _ = run(capsys, "check", "--family", "-i", ex1_path)
    assert status == 0
    names = [v["name"] for v in rep["verdicts"]]
    assert names == ["family." + k for k in
                     ("reflexive", "symmetric", "sufficient", "monotone", "triangular", "directed")]
    assert rep["verdicts"][4]["info"]["triangular_map"] == {"0": 0, "1": 1}


def test_check_asymmetric_exits_one(capsys, tmp_path):
    inst = InstanceFile(PseudometricFamily.single(((0, 1), (2, 0))).carrier,
                        PseudometricFamily.single(((0, 1), (2, 0))))
    status, rep, _ = run(capsys, "check", "--family", "-i", write(tmp_path, inst))
    assert status == 1
    sym = next(v for v in rep["verdicts"] if v["name"] == "family.symmetric")
    assert sym == {"name": "family.symmetric", "holds": False, "witness": {"index": 0, "pair": [0, 1]}}


def test_check_all_on_ex1(capsys, ex1_path):
    status, rep, _ = run(capsys, "check", "-i", ex1_path)
    assert status == 0
    assert rep["command"]["checks"] == ["family", "entourages", "compatible", "transfer",
                                        "gapcompat", "selfclosed"]


def test_check_evpdlc(capsys, alpha_path):
    status, rep, _ = run(capsys, "check", "--evpdlc", "-i", alpha_path)
    assert status == 0
    assert rep["verdicts"][0]["info"]["maximal"] == [2]


def test_check_evpdlc_needs_single_metric(capsys, ex1_path):
    status, _, err = run(capsys, "check", "--evpdlc", "-i", ex1_path)
    assert status == 2 and err["error"] == "PassInapplicable"


def test_solve_fang_and_hamel(capsys, ex1_path):
    status, rep, _ = run(capsys, "solve", "fang", "-i", ex1_path, "-u", "0")
    assert status == 0 and rep["certificate"]["point"] == 1
    assert rep["verdicts"] == [{"name": "verify", "holds": True}]
    status, rep, _ = run(capsys, "solve", "--kind", "hamel", "-i", ex1_path)
    assert status == 0 and rep["certificate"]["point"] == 0


def test_solve_ekeland(capsys, alpha_path):
    status, rep, _ = run(capsys, "solve", "ekeland", "-i", alpha_path)
    assert status == 0
    c = rep["certificate"]
    assert c["point"] == 2 and c["clause1"] == [{"index": 0, "lhs": "2", "rhs": "3"}]


def test_solve_usage_errors(capsys, tmp_path, ex1_family, ex1_phi, ex1_path):
    no_scaling = write(tmp_path, InstanceFile(ex1_family.carrier, ex1_family, ex1_phi))
    assert run(capsys, "solve", "hamel", "-i", no_scaling)[0] == 2
    assert run(capsys, "solve", "ekeland", "-i", ex1_path)[0] == 2
    assert run(capsys, "solve", "fang", "-i", ex1_path, "-u", "9")[0] == 2
    assert run(capsys, "solve", "-i", ex1_path)[0] == 2
    assert run(capsys, "solve", "fang", "-i", str(tmp_path / "missing.json"))[0] == 2


def test_solve_invalid_family_exits_one(capsys, tmp_path):
    z = PseudometricFamily.single(((0, 0), (0, 0)))
    from fangvp import Objective
    status, rep, _ = run(capsys, "solve", "fang", "-i", write(tmp_path, InstanceFile(z.carrier, z, Objective((1, 0)))))
    assert status == 1
    assert rep["verdicts"][0]["witness"]["error"] == "PreconditionViolated"


def test_parse_error_exits_two(capsys, tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{"carrier": {"size": 2}, "objective": ["1"]}')
    status, _, err = run(capsys, "check", "-i", str(p))
    assert status == 2 and err["error"] == "ParseError"


def test_reduce_sup(capsys, ex1_path):
    status, rep, _ = run(capsys, "reduce", "sup", "-i", ex1_path)
    assert status == 0 and rep["verdicts"][0]["holds"]
    assert rep["instance"]["distances"] == [[["0", "2", "4"], ["2", "0", "2"], ["4", "2", "0"]]]


def test_reduce_rescale_unit_is_identity(capsys, tmp_path, ex1_family, ex1_phi, ex1_path):
    from fangvp import ScalingMap
    unit = write(tmp_path, InstanceFile(ex1_family.carrier, ex1_family, ex1_phi, ScalingMap.ones(2)))
    status, rep, _ = run(capsys, "reduce", "rescale", "-i", unit)
    assert status == 0
    original = json.load(open(ex1_path))
    assert json.dumps(rep["instance"]["distances"]) == json.dumps(original["distances"])
    status, rep, _ = run(capsys, "reduce", "rescale", "-i", ex1_path)
    assert status == 0 and rep["instance"]["distances"][1][0] == ["0", "4", "8"]


def test_reduce_bmlo(capsys, tmp_path):
    f1 = ((0, 3, 1), (3, 0, 2), (1, 2, 0))
    F = PseudometricFamily(3, IndexPoset.discrete(2), (D_ALPHA, f1))
    status, rep, _ = run(capsys, "reduce", "bmlo", "-i", write(tmp_path, InstanceFile(F.carrier, F)))
    assert status == 0
    assert rep["instance"]["index"]["size"] == 3
    assert rep["instance"]["index"]["leq"] == [[0, 2], [1, 2]]


def test_reduce_bmlo_generator_cap(capsys, tmp_path):
    k = MAX_BMLO_GENERATORS + 1
    F = PseudometricFamily(1, IndexPoset.discrete(k), (((0,),),) * k)
    status, _, err = run(capsys, "reduce", "bmlo", "-i", write(tmp_path, InstanceFile(F.carrier, F)))
    assert status == 2 and "at most" in err["message"]


def test_reduce_slice_writes_output(capsys, tmp_path, ex1_path):
    out = tmp_path / "slice.json"
    status, rep, _ = run(capsys, "reduce", "slice", "-i", ex1_path, "-o", str(out))
    assert status == 0
    assert rep["verdicts"][0]["points"] == [0]
    assert instance_io.load(out).carrier.size == 1


def test_chain(capsys, tmp_path):
    from fangvp import Relation
    r = Relation.from_pairs(3, [(0, 1), (1, 2), (2, 1)])
    path = write(tmp_path, InstanceFile(r.carrier, relation=r))
    status, rep, _ = run(capsys, "chain", "-i", path)
    assert status == 0 and rep["chain"] == {"prefix": [0], "cycle": [1, 2]}
    r = Relation.from_pairs(3, [(0, 1), (1, 2)])
    status, rep, _ = run(capsys, "chain", "-i", write(tmp_path, InstanceFile(r.carrier, relation=r), "b.json"))
    assert status == 1 and rep["verdicts"][0]["witness"] == {"successor_missing": 2}


@pytest.mark.parametrize("kind", ["fang", "metric", "nonexpansive", "bmlo"])
def test_generate_and_check(capsys, tmp_path, kind):
    out = tmp_path / f"{kind}.json"
    status, _, _ = run(capsys, "generate", "--seed", "7", "--kind", kind, "-o", str(out))
    assert status == 0
    if kind == "bmlo":
        # generators need not be directed; the constructed family must be
        status, rep, _ = run(capsys, "reduce", "bmlo", "-i", str(out))
    else:
        status, rep, _ = run(capsys, "check", "--family", "-i", str(out))
    assert status == 0


def test_seed_input(capsys):
    status, rep, _ = run(capsys, "solve", "fang", "--seed", "3")
    assert status == 0 and rep["command"]["seed"] == 3


def test_timing_is_opt_in(capsys, ex1_path):
    assert "timing" not in run(capsys, "check", "-i", ex1_path)[1]
    assert "timing" in run(capsys, "check", "--timing", "-i", ex1_path)[1]


def test_unknown_check_is_usage_error():
    from fangvp import UnknownCheck
    with pytest.raises(UnknownCheck):
        cli.run_check(InstanceFile(PseudometricFamily.single(((0,),)).carrier), ["nope"])
