import os

from nearsemiring import bundled_file
from nearsemiring.algfile import load, parse
from nearsemiring.axioms import check_axioms
from nearsemiring.catalog import luk_chain
from nearsemiring.cli import main


def path(name):
    return str(bundled_file(name))


def run(capsys, *argv):
    status = main(list(argv))
    captured = capsys.readouterr()
    return status, captured.out, captured.err


def test_check_b2_luk_rs_all_pass(capsys):
    status, out, _ = run(capsys, "check", path("b2.alg"), "--class", "luk-rs")
    assert status == 0
    assert "FAIL" not in out
    assert "PASS (vii)" in out


def test_check_g3_fails_vii_with_witness(capsys):
    status, out, _ = run(capsys, "check", path("g3.alg"), "--class", "luk-nrs")
    assert status == 1
    assert "FAIL (vii) -- witness: x=1, y=h" in out
    fails = [l for l in out.splitlines()
             if l.startswith("FAIL (") and "derived" not in l]
    assert fails[0].startswith("FAIL (vii)")


def test_check_mv_document(capsys):
    status, out, _ = run(capsys, "check", path("l3-mv.alg"))
    assert status == 0
    assert "mv axioms" in out


def test_ideals_l3(capsys):
    status, out, _ = run(capsys, "ideals", path("l3.alg"))
    assert status == 0
    assert "ideals (2)" in out
    assert "INFO {0} < {0, h, 1}" in out


def test_congruences_includes_malcev_checks(capsys):
    status, out, _ = run(capsys, "congruences", path("b2xb2.alg"))
    assert status == 0
    assert "congruences (4)" in out
    assert "PASS p(x,y,y) = x" in out
    assert "PASS 0-regularity" in out


def test_center_report(capsys):
    status, out, _ = run(capsys, "center", path("b2xl3.alg"))
    assert status == 0
    assert "center: {(0,0), (0,1), (1,0), (1,1)}" in out
    assert "PASS boolean algebra laws" in out


def test_claims_l3_exits_one_with_blocks(capsys):
    status, out, _ = run(capsys, "claims", path("l3.alg"))
    assert status == 1
    assert "CLAIM semiring-ideal-conditions subset={0, h}" in out
    assert "WITNESS (I1) a=1, b=h" in out
    assert "CLAIM principal-ideal-products element=h" in out


def test_claims_rejects_non_semiring(capsys):
    status, _, err = run(capsys, "claims", path("g3.alg"))
    assert status == 2
    assert "(vii)" in err


def test_decompose_by_name_and_non_central_rejection(capsys):
    status, out, _ = run(capsys, "decompose", path("b2xl3.alg"),
                         "--element", "(1,0)")
    assert status == 0
    assert "PASS pair map is an isomorphism onto the product" in out
    status, _, err = run(capsys, "decompose", path("l3.alg"), "--element", "h")
    assert status == 2
    assert "not central" in err


def test_principal_ideal(capsys):
    status, out, _ = run(capsys, "principal-ideal", path("l3.alg"),
                         "--element", "h")
    assert status == 0
    assert "I(h) = {0, h, 1}" in out


def test_unknown_element_distinct_diagnostic(capsys):
    status, _, err = run(capsys, "principal-ideal", path("l3.alg"),
                         "--element", "q")
    assert status == 2
    assert "unknown element name" in err
    status, _, err = run(capsys, "principal-ideal", path("l3.alg"),
                         "--element", "7")
    assert status == 2
    assert "outside the universe" in err


def test_missing_file_and_parse_error(tmp_path, capsys):
    status, _, err = run(capsys, "check", str(tmp_path / "nope.alg"))
    assert status == 2 and "no such file" in err
    bad = tmp_path / "bad.alg"
    bad.write_text("kind = luk-nrs\nsize = 2\nzero = 0\none = 1\n"
                   "plus = [[0,1],[1]]\ntimes = [[0,0],[0,1]]\nalpha = [1,0]\n")
    status, _, err = run(capsys, "check", str(bad))
    assert status == 2
    assert "line 5" in err and "row 1" in err


def test_to_mv_from_mv_pipeline(tmp_path, capsys):
    status, out, _ = run(capsys, "to-mv", path("l3.alg"))
    assert status == 0
    mv_file = tmp_path / "chain.alg"
    mv_file.write_text(out)
    status, out2, _ = run(capsys, "from-mv", str(mv_file))
    assert status == 0
    alg = parse(out2).to_algebra()
    assert alg == luk_chain(3)


def test_roundtrip_command(capsys):
    for name in ("l3.alg", "l3-mv.alg"):
        status, out, _ = run(capsys, "roundtrip", path(name))
        assert status == 0
        assert "PASS round trip is table-identical" in out


def test_cb_search_command(capsys):
    status, out, _ = run(capsys, "cb", path("b2.alg"), path("l3.alg"), "--search")
    assert status == 0
    assert "sizes differ" in out


def test_cb_explicit_command(tmp_path, capsys):
    m = tmp_path / "ident.map"
    m.write_text("map = [0, 1]\n")
    status, out, _ = run(capsys, "cb", path("b2.alg"), path("b2.alg"),
                         "--gamma", str(m), "--beta", str(m), "--a", "1", "--b", "1")
    assert status == 0
    assert "PASS assembled map is an isomorphism" in out


def test_cb_usage_error(capsys):
    status, _, err = run(capsys, "cb", path("b2.alg"), path("b2.alg"))
    assert status == 2
    assert "--search" in err


def test_enumerate_writes_directory(tmp_path, capsys):
    out_dir = tmp_path / "models"
    status, out, _ = run(capsys, "enumerate", "--size", "3",
                         "--class", "luk-nrs", "--out", str(out_dir))
    assert status == 0
    files = sorted(os.listdir(out_dir))
    assert len(files) == 1 and files[0].endswith(".alg")
    alg = load(out_dir / files[0]).to_algebra()
    assert check_axioms(alg, "luk-nrs").ok


def test_dot_exports(capsys):
    status, out, _ = run(capsys, "dot", path("l3.alg"), "--lattice", "id")
    assert status == 0
    assert out.count("->") == 1 and 'label="{0, h, 1}"' in out
    status, out, _ = run(capsys, "dot", path("b2xb2.alg"), "--lattice", "ce")
    assert status == 0
    assert out.count("->") == 4  # diamond covering relation
    status, out, _ = run(capsys, "dot", path("trivial.alg"), "--lattice", "id")
    assert status == 0
    assert out.count("->") == 0 and out.count("label=") == 1


def test_usage_exit_code(capsys):
    assert main([]) == 2
    capsys.readouterr()
    assert main(["check"]) == 2
    capsys.readouterr()


def test_exit_statuses_deterministic(capsys):
    # identical body (everything after the argv echo) regardless of threads
    s1, out1, _ = run(capsys, "claims", path("l3.alg"), "--threads", "2")
    s2, out2, _ = run(capsys, "claims", path("l3.alg"))
    body1 = out1.split("\n", 1)[1]
    body2 = out2.split("\n", 1)[1]
    assert s1 == s2 == 1
    assert body1 == body2


def test_check_inrs_class_derived_identities_are_informational(capsys):
    # G3 is a genuine inrs; the derived interchange consequences fail but
    # must not gate admission for the requested class
    status, out, _ = run(capsys, "check", path("g3.alg"), "--class", "inrs")
    assert status == 0
    assert "INFO x*x^a = x^a*x = 0 fails at" in out
    assert "FAIL" not in out


def test_check_defaults_to_file_kind(capsys):
    # g3.alg declares kind inrs, which it satisfies
    status, out, _ = run(capsys, "check", path("g3.alg"))
    assert status == 0
    assert "axioms (inrs)" in out
