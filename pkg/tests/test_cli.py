import io
import json

import pytest

from cli.cli_initializer import CliInitializer
from cli.expression import elaborate, is_oriented, parse, print_morphism
from helpers.configurator import RunConfig
from helpers.errors import ConfigurationError, ExpressionSyntaxError, TypeMismatchError
from superalg.catalog import make_algebra
from superalg.scalars import scalar
from unoriented.category import UnorientedCategory


@pytest.fixture
def config_file(tmp_path):
    path = tmp_path / "engine.ini"
    path.write_text("[engine]\nalgebra = R\nsigma = 0\nd = 1\nform = osp(2,1|0)\n")
    return str(path)


def run(config_file, *argv):
    out, err = io.StringIO(), io.StringIO()
    code = CliInitializer(out, err).run([argv[0], "--config", config_file, *argv[1:]])
    payload = json.loads(out.getvalue()) if out.getvalue() else None
    failure = json.loads(err.getvalue()) if err.getvalue() else None
    return code, payload, failure


def test_double_crossing_normalizes_to_identity(config_file):
    code, payload, _ = run(config_file, "normalize", "x ; x")
    assert code == 0
    assert (payload["r"], payload["s"]) == (2, 2)
    (term,) = payload["terms"]
    assert term["coefficient"] == "1"
    assert term["diagram"]["match"] == [[1, 3], [2, 4]]


def test_loop_is_the_bubble_parameter(config_file):
    code, payload, _ = run(config_file, "normalize", "cup ; cap", "--d", "3")
    assert code == 0
    (term,) = payload["terms"]
    assert term["coefficient"] == "3"
    assert (payload["r"], payload["s"]) == (0, 0)


def test_tokens_multiply(config_file):
    code, payload, _ = run(config_file, "normalize", "tok(i) ; tok(i)", "--algebra", "C")
    assert code == 0
    (term,) = payload["terms"]
    assert term["coefficient"] == "-1"
    assert term["diagram"]["tokens"] == {"1-2": "1"}


def test_printed_normal_form_reads_back(config_file):
    _, payload, _ = run(config_file, "normalize", "2 * (tok(j) @ id(1) ; cap ; cup) + x", "--algebra", "H")
    category = UnorientedCategory(make_algebra("H"), 0, 1)
    again = elaborate(payload["text"], category)
    assert again.to_json(category.algebra) == payload["terms"]


def test_oriented_expression(config_file):
    code, payload, _ = run(config_file, "normalize", "cupR ; capL", "--d", "5")
    assert code == 0
    assert payload["category"] == "oriented"
    assert payload["terms"][0]["coefficient"] == "5"


def test_dim_hom(config_file):
    assert run(config_file, "dim-hom", "2", "2", "--algebra", "H")[1]["count"] == 48
    assert run(config_file, "dim-hom", "ud", "ud", "--algebra", "H")[1]["count"] == 32
    assert run(config_file, "dim-hom", "0", "ud", "--oriented")[1]["count"] == 1


def test_syntax_error_reports_position(config_file):
    code, payload, failure = run(config_file, "normalize", "cap ; ?")
    assert code == 2
    assert payload is None
    assert failure["error"] == "ExpressionSyntaxError"
    assert failure["position"] == 6


def test_type_mismatch(config_file):
    code, _, failure = run(config_file, "normalize", "cap ; cap")
    assert code == 2
    assert failure["error"] == "TypeMismatchError"


def test_odd_form_rejects_nonzero_bubbles(config_file):
    code, _, failure = run(config_file, "normalize", "cap", "--sigma", "1", "--d", "2")
    assert code == 2
    assert failure["error"] == "ConfigurationError"


def test_eval_loop(config_file):
    code, payload, _ = run(config_file, "eval", "cup ; cap")
    assert code == 0
    assert payload["shape"] == [1, 1]
    assert payload["rows"] == [["3"]]


def test_eval_oriented_identity(config_file):
    code, payload, _ = run(config_file, "eval", "id(u)", "--glmn", "2", "1")
    assert code == 0
    assert payload["shape"] == [3, 3]
    assert payload["rows"][0] == ["1", "0", "0"]


def test_check_fullness(config_file):
    code, payload, _ = run(config_file, "check-fullness", "--form", "osp(2,1|0)")
    assert code == 0
    assert (payload["rank"], payload["dim"], payload["ok"]) == (3, 3, True)
    assert "elapsed" not in payload


def test_check_relations(config_file):
    code, payload, _ = run(config_file, "check-relations", "--algebra", "C", "--label", "i")
    assert code == 0
    assert payload["failed"] == 0


def test_trace(config_file):
    code, payload, _ = run(config_file, "trace", "id(2)", "--d", "3")
    assert code == 0
    assert payload == {"schema": 1, "trace": "9"}


def test_list_forms(config_file):
    code, payload, _ = run(config_file, "list-forms")
    assert code == 0
    assert "osp(p,q|2n)" in {row["family"] for row in payload["forms"]}
    assert "H->Mat2(C)" in payload["embeddings"]


def test_lie_basis(config_file):
    code, payload, _ = run(config_file, "lie-basis", "--form", "osp(1,0|2)")
    assert code == 0
    assert (payload["dim_even"], payload["dim_odd"]) == (3, 2)


def test_unknown_form(config_file):
    code, _, failure = run(config_file, "lie-basis", "--form", "sl(2)")
    assert code == 2
    assert failure["error"] == "UnknownNameError"


def test_bad_configuration(tmp_path):
    path = tmp_path / "bad.ini"
    path.write_text("[engine]\nfield = real\n")
    code, _, failure = run(str(path), "list-forms")
    assert code == 2
    assert failure["error"] == "ConfigurationError"


def test_run_config_overrides(config_file):
    config = RunConfig.load(config_file, algebra="C", field="gaussian")
    assert config.algebra_name() == "C_cplx"
    assert RunConfig.load(config_file, algebra="C", involution="id").algebra_name() == "C_real_id"
    with pytest.raises(ConfigurationError):
        RunConfig.load(config_file, log_level="LOUD")


def test_parser_precedence():
    node = parse("x @ id(1) ; 2 * cap + cap")
    assert node.kind == "sum"
    chain = node.children[0]
    assert chain.kind == "compose"
    assert chain.children[0].kind == "tensor"
    assert chain.children[1].kind == "scaled"
    assert chain.children[1].value == scalar(2)


def test_oriented_detection():
    assert is_oriented(parse("capL"))
    assert is_oriented(parse("id(ud)"))
    assert not is_oriented(parse("id(2) ; cap"))


@pytest.mark.parametrize("text, position", [("cap ; ;", 6), ("tok(i", 3), ("(cap", 4), ("[1/2 * cap", 0)])
def test_parse_errors(text, position):
    with pytest.raises(ExpressionSyntaxError) as info:
        parse(text)
    assert info.value.position == position


def test_down_token_needs_orientation():
    category = UnorientedCategory(make_algebra("R"), 0, 1)
    with pytest.raises(TypeMismatchError):
        elaborate("dtok(1)", category)


def test_zero_morphism_prints():
    category = UnorientedCategory(make_algebra("R"), 0, 1)
    zero = elaborate("cap + -1 * cap", category)
    assert print_morphism(zero, category) == "0"


def test_missing_config_is_written_with_defaults(tmp_path):
    path = tmp_path / "fresh.ini"
    config = RunConfig.load(str(path))
    assert path.exists()
    assert "[engine]" in path.read_text()
    assert (config.algebra, config.sigma, config.d) == ("R", 0, "1")


def test_check_faithfulness(config_file):
    code, payload, _ = run(config_file, "check-faithfulness", "--algebra", "H", "--r", "1", "--s", "1")
    assert code == 0
    assert payload["independent"]
    code, payload, _ = run(config_file, "check-faithfulness", "--form", "osp(2,0|0)", "--r", "1", "--s", "1")
    assert code == 0
    assert payload["pairing_ok"] is True


def test_expand_orientations(config_file):
    code, payload, _ = run(config_file, "expand-orientations", "cap", "--sigma", "1", "--d", "0")
    assert code == 0
    assert payload["source"] == [["uu", 0], ["ud", 1], ["du", 1], ["dd", 0]]
    assert payload["entries"]
    code, _, failure = run(config_file, "expand-orientations", "capL")
    assert code == 2
    assert failure["error"] == "TypeMismatchError"


def test_check_quaternionic_and_embeddings(config_file):
    code, payload, _ = run(config_file, "check-quaternionic", "--form", "osp*(1|1,0)")
    assert code == 0
    assert payload["ok"]
    code, payload, _ = run(config_file, "check-embeddings", "--name", "H->Mat2(C)", "--name", "ClC->Mat11(C)")
    assert code == 0
    assert [row["name"] for row in payload["embeddings"]] == ["H->Mat2(C)", "ClC->Mat11(C)"]


def test_validation_rejects_bad_values(config_file):
    with pytest.raises(ConfigurationError):
        RunConfig.load(config_file, sigma=2)
    with pytest.raises(ConfigurationError):
        RunConfig.load(config_file, max_unknowns=0)
