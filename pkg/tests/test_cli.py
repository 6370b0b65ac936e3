import pathlib

from homstruct.cli import main
from homstruct.fileformat import parse_file

DATA = pathlib.Path(__file__).parent / "data"
CORPUS = DATA / "corpus.json"


def run(*argv):
    return main([str(a) for a in argv])


# --- verify -----------------------------------------------------------------

def test_verify_octonions_alternative_suite_passes(capsys):
    assert run("verify", CORPUS, "octonions", "--suite", "LEFT_HOM_ALT,RIGHT_HOM_ALT") == 0
    out = capsys.readouterr().out
    assert "LEFT_HOM_ALT: PASS" in out
    assert "RIGHT_HOM_ALT: PASS" in out


def test_verify_octonions_associativity_fails_with_witness(capsys):
    assert run("verify", CORPUS, "octonions", "--suite", "HOM_ASSOC") == 1
    out = capsys.readouterr().out
    assert "HOM_ASSOC: FAIL" in out
    assert "(1,2,4)" in out
    assert "-2" in out


def test_verify_all_defaults_to_kind_suite(capsys):
    assert run("verify", CORPUS, "octonions") == 1  # HOM_ASSOC fails
    assert run("verify", CORPUS, "dual_numbers") == 0
    assert run("verify", CORPUS, "dual_regular") == 0
    assert run("verify", CORPUS, "primitive2") == 0
    out = capsys.readouterr().out
    assert "HOM_POISSON_COALGEBRA: PASS" in out
    assert "COCOMMUTATIVITY: PASS" in out


def test_verify_comodule_and_witness_cap(capsys):
    assert run("verify", CORPUS, "primitive2_regular") == 0
    assert run("verify", CORPUS, "non_alternative2", "--max-witnesses", "2") == 1
    out = capsys.readouterr().out
    assert "showing 2" in out


def test_verify_malformed_rational_exits_2(capsys):
    assert run("verify", DATA / "bad_rational.json", "a") == 2
    assert "FORMAT_ERROR" in capsys.readouterr().err


def test_verify_unknown_name_and_axiom_exit_2(capsys):
    assert run("verify", CORPUS, "no_such_structure") == 2
    assert run("verify", CORPUS, "octonions", "--suite", "NOT_AN_AXIOM") == 2
    assert run("verify", CORPUS, "octonions", "--suite", "LEFT_MODULE") == 2


def test_verify_missing_file_exits_2():
    assert run("verify", DATA / "missing.json", "a") == 2


# --- twist ------------------------------------------------------------------

def test_twist_dual_numbers_then_verify(tmp_path, capsys):
    out = tmp_path / "twisted.json"
    assert run("twist", CORPUS, "dual_numbers", "--endo", "diag:1,2", "--out", out) == 0
    assert run("verify", out, "dual_numbers") == 0


def test_twist_with_named_map(tmp_path):
    out = tmp_path / "twisted.json"
    assert run("twist", CORPUS, "dual_numbers", "--endo", "dual_scale", "--out", out) == 0
    sf = parse_file(out)
    assert sf.get("dual_numbers").mu.c[0][1][1] == 2


def test_twist_with_non_endomorphism_exits_1(tmp_path, capsys):
    out = tmp_path / "x.json"
    assert run("twist", CORPUS, "dual_numbers", "--endo", "diag:2,1", "--out", out) == 1
    assert "NOT_ENDOMORPHISM" in capsys.readouterr().err
    assert run("twist", CORPUS, "dual_numbers", "--endo", "bad_scale", "--out", out) == 1


def test_twist_identity_is_byte_idempotent(tmp_path):
    out = tmp_path / "id.json"
    assert run("twist", CORPUS, "dual_numbers", "--endo", "id", "--out", out) == 0
    assert out.read_bytes() == CORPUS.read_bytes()


def test_twist_already_twisted_exits_1(tmp_path, capsys):
    first = tmp_path / "first.json"
    assert run("twist", CORPUS, "dual_numbers", "--endo", "diag:1,2", "--out", first) == 0
    second = tmp_path / "second.json"
    assert run("twist", first, "dual_numbers", "--endo", "diag:1,2", "--out", second) == 1
    assert "ALREADY_TWISTED" in capsys.readouterr().err


def test_twist_module_and_comodule(tmp_path):
    out = tmp_path / "m.json"
    assert run("twist", CORPUS, "dual_regular", "--out", out) == 0
    assert run("verify", out, "dual_regular") == 0
    out2 = tmp_path / "c.json"
    assert run("twist", CORPUS, "poisson_dual4_regular", "--out", out2) == 0
    assert run("verify", out2, "poisson_dual4_regular") == 0


def test_twist_module_rejects_endo_argument(tmp_path):
    assert run("twist", CORPUS, "dual_regular", "--endo", "id", "--out", tmp_path / "x.json") == 2


def test_twist_right_module_prints_mirror_note(tmp_path, capsys):
    exported = tmp_path / "right.json"
    assert run("catalog", "export", "octonion_regular_right_module", "--out", exported) == 0
    out = tmp_path / "twisted.json"
    assert run("twist", exported, "octonion_regular_right_module", "--out", out) == 0
    assert "mirrored composition" in capsys.readouterr().out
    assert run("verify", out, "octonion_regular_right_module") == 0


def test_twist_rename_keeps_original(tmp_path):
    out = tmp_path / "renamed.json"
    assert (
        run("twist", CORPUS, "dual_numbers", "--endo", "diag:1,2", "--out", out, "--as", "dual_tw")
        == 0
    )
    sf = parse_file(out)
    assert sf.get("dual_numbers").alpha.is_identity()
    assert not sf.get("dual_tw").alpha.is_identity()


def test_twist_endo_requires_algebra_dim(tmp_path, capsys):
    assert run("twist", CORPUS, "dual_numbers", "--endo", "diag:1", "--out", tmp_path / "x.json") == 2
    assert run("twist", CORPUS, "dual_numbers", "--out", tmp_path / "x.json") == 2
    assert run("twist", CORPUS, "dual_numbers", "--endo", "diag:x,y", "--out", tmp_path / "x.json") == 2
    assert run("twist", CORPUS, "dual_numbers", "--endo", "diag:1/0,1", "--out", tmp_path / "x.json") == 2


# --- transform ----------------------------------------------------------------

def test_negate_twice_restores_bytes(tmp_path):
    once = tmp_path / "neg.json"
    twice = tmp_path / "negneg.json"
    assert run("transform", CORPUS, "octonions", "negate", "--out", once) == 0
    assert once.read_bytes() != CORPUS.read_bytes()
    assert run("transform", once, "octonions", "negate", "--out", twice) == 0
    assert twice.read_bytes() == CORPUS.read_bytes()


def test_opposite_octonions_still_left_alternative(tmp_path):
    out = tmp_path / "opp.json"
    assert run("transform", CORPUS, "octonions", "opposite", "--out", out) == 0
    assert run("verify", out, "octonions", "--suite", "LEFT_HOM_ALT,RIGHT_HOM_ALT") == 0


def test_opposite_of_commutative_structure_is_identity_on_bytes(tmp_path):
    # dual numbers are commutative, so reversing the inputs changes nothing
    out = tmp_path / "opp.json"
    assert run("transform", CORPUS, "dual_numbers", "opposite", "--out", out) == 0
    assert out.read_bytes() == CORPUS.read_bytes()


def test_negate_module_updates_base_algebra(tmp_path):
    out = tmp_path / "negmod.json"
    assert run("transform", CORPUS, "dual_regular", "negate", "--out", out) == 0
    sf = parse_file(out)
    assert sf.get("dual_numbers").mu.c[0][0][0] == -1
    assert run("verify", out, "dual_regular") == 0
    back = tmp_path / "back.json"
    assert run("transform", out, "dual_regular", "negate", "--out", back) == 0
    assert back.read_bytes() == CORPUS.read_bytes()


def test_opposite_module_flips_side(tmp_path):
    out = tmp_path / "oppmod.json"
    assert run("transform", CORPUS, "dual_regular", "opposite", "--out", out) == 0
    sf = parse_file(out)
    assert sf.get("dual_regular").side == "right"
    assert run("verify", out, "dual_regular") == 0


def test_negate_comodule_and_coalgebra(tmp_path):
    out = tmp_path / "negcom.json"
    assert run("transform", CORPUS, "poisson_dual4_regular", "negate", "--out", out) == 0
    assert run("verify", out, "poisson_dual4_regular") == 0
    out2 = tmp_path / "negco.json"
    assert run("transform", CORPUS, "primitive2", "negate", "--out", out2) == 0
    assert run("verify", out2, "primitive2") == 0


def test_opposite_comodule_unsupported(tmp_path, capsys):
    assert (
        run("transform", CORPUS, "poisson_dual4_regular", "opposite", "--out", tmp_path / "x.json")
        == 1
    )
    assert "KIND_MISMATCH" in capsys.readouterr().err


# --- check-morphism --------------------------------------------------------------

def test_check_morphism_identity_and_zero(capsys):
    assert run("check-morphism", CORPUS, "dual_scale", "dual_numbers", "dual_numbers") == 0
    assert run("check-morphism", CORPUS, "zero_map2", "dual_numbers", "dual_numbers") == 0


def test_check_morphism_failure(capsys):
    assert run("check-morphism", CORPUS, "bad_scale", "dual_numbers", "dual_numbers") == 1
    assert "FAIL" in capsys.readouterr().out


def test_check_module_morphism_via_cli():
    assert run("check-morphism", CORPUS, "dual_mul_map", "dual_regular", "dual_regular") == 0


def test_check_comodule_morphism_via_cli():
    assert run("check-morphism", CORPUS, "line_embed", "line_comodule", "primitive2_regular") == 1
    # kinds differ (coassociative vs poisson): precondition failure, not a crash


def test_strict_flag_changes_verdict():
    assert run("check-morphism", CORPUS, "unit_map1", "mod_beta2", "mod_beta3") == 0
    assert run("check-morphism", CORPUS, "unit_map1", "mod_beta2", "mod_beta3", "--strict") == 1


def test_check_morphism_with_non_map_entry_exits_2():
    assert run("check-morphism", CORPUS, "octonions", "dual_numbers", "dual_numbers") == 2


# --- catalog ----------------------------------------------------------------------

def test_catalog_list(capsys):
    assert run("catalog", "list") == 0
    out = capsys.readouterr().out
    assert "octonions" in out
    assert "HomAlgebra" in out


def test_catalog_export_matches_golden(capsys):
    assert run("catalog", "export", "octonions") == 0
    out = capsys.readouterr().out
    assert out.encode() == (DATA / "golden_octonions.json").read_bytes()


def test_catalog_export_module_includes_base(tmp_path):
    out = tmp_path / "mod.json"
    assert run("catalog", "export", "octonion_regular_module", "--out", out) == 0
    sf = parse_file(out)
    assert sf.get("octonion_regular_module").algebra == sf.get("octonion_regular_module_algebra")
    assert run("verify", out, "octonion_regular_module") == 0


def test_catalog_export_unknown_or_missing_name(capsys):
    assert run("catalog", "export", "not_a_thing") == 2
    assert run("catalog", "export") == 2


# --- console entry point ------------------------------------------------------------

def test_module_invocation_smoke(tmp_path):
    import subprocess
    import sys

    proc = subprocess.run(
        [sys.executable, "-m", "homstruct", "verify", str(CORPUS), "octonions",
         "--suite", "LEFT_HOM_ALT"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "PASS" in proc.stdout
