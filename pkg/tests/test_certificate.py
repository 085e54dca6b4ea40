import json
from dataclasses import replace

import pytest

from wsat.core.base import CertificateViolation, NotWeaklySaturatedError
from wsat.graph import Edge, complete_graph, path_graph
from wsat.pattern import PatternSpec, Witness
from wsat.percolation import (
    Certificate,
    CertificateStep,
    certificate_from_dict,
    certificate_from_order,
    certificate_to_dict,
    extract_certificate,
    read_certificates,
    verify_certificate,
    write_certificates,
)


@pytest.fixture
def certificate(complement_p5, k23) -> Certificate:
    return extract_certificate(complement_p5, k23)


def _with_steps(certificate, steps):
    return replace(certificate, steps=tuple(steps))


def test_extracted_certificate(certificate):
    assert len(certificate) == 4
    first = certificate.steps[0]
    assert first.edge == Edge(1, 2)
    assert first.witness == Witness((0, 1), (2, 3, 4))
    result = verify_certificate(certificate)
    assert result.valid
    assert result.message == "certificate valid"


def test_extract_refuses_graph_with_copy(k23):
    with pytest.raises(NotWeaklySaturatedError) as excinfo:
        extract_certificate(complete_graph(5), k23)
    assert excinfo.value.reason == CertificateViolation.BASE_NOT_PATTERN_FREE


def test_extract_refuses_stuck_closure(k23):
    with pytest.raises(NotWeaklySaturatedError, match="not weakly saturated"):
        extract_certificate(path_graph(5), k23)


def test_dropped_step_leaves_closure_incomplete(certificate):
    truncated = _with_steps(certificate, certificate.steps[:-1])
    result = verify_certificate(truncated)
    assert not result
    assert result.reason == CertificateViolation.CLOSURE_INCOMPLETE
    assert result.message == "closure incomplete"


def test_premature_step_is_rejected(certificate):
    steps = (certificate.steps[-1],) + certificate.steps[:-1]
    result = verify_certificate(_with_steps(certificate, steps))
    assert result.reason == CertificateViolation.WITNESS_EDGE_MISSING
    assert result.step == 1


def test_duplicate_step(certificate):
    steps = certificate.steps + certificate.steps[:1]
    result = verify_certificate(_with_steps(certificate, steps))
    assert result.reason == CertificateViolation.DUPLICATE_STEP_EDGE
    assert result.step == 5


def test_step_edge_already_in_base(certificate):
    bogus = CertificateStep(Edge(0, 2), Witness((0, 1), (2, 3, 4)))
    result = verify_certificate(_with_steps(certificate, [bogus]))
    assert result.reason == CertificateViolation.STEP_EDGE_IN_BASE


def test_step_edge_out_of_range(certificate):
    bogus = CertificateStep(Edge(3, 7), Witness((0, 1), (2, 3, 4)))
    result = verify_certificate(_with_steps(certificate, [bogus]))
    assert result.reason == CertificateViolation.INVALID_STEP_EDGE
    assert result.message == "step edge out of range (step 1)"


def test_witness_with_wrong_shape(certificate):
    bogus = CertificateStep(Edge(1, 2), Witness((0, 1), (2, 3)))
    result = verify_certificate(_with_steps(certificate, [bogus]))
    assert result.reason == CertificateViolation.WITNESS_SHAPE


def test_witness_not_using_the_step_edge(certificate):
    bogus = CertificateStep(Edge(1, 2), Witness((3, 4), (0, 1, 2)))
    result = verify_certificate(_with_steps(certificate, [bogus]))
    assert result.reason == CertificateViolation.WITNESS_MISSES_EDGE


def test_base_with_a_copy(k23):
    result = verify_certificate(Certificate(k23, complete_graph(5), ()))
    assert result.reason == CertificateViolation.BASE_NOT_PATTERN_FREE


def test_pattern_too_large(k23):
    result = verify_certificate(Certificate(k23, path_graph(4), ()))
    assert result.reason == CertificateViolation.PATTERN_TOO_LARGE


def test_dict_form(certificate):
    data = certificate_to_dict(certificate)
    assert data["n"] == 5
    assert data["pattern"] == {"s": 2, "t": 3, "kind": "bipartite"}
    assert data["steps"][0] == {
        "edge": [1, 2],
        "side_s": [0, 1],
        "side_t": [2, 3, 4],
    }
    assert certificate_from_dict(json.loads(json.dumps(data))) == certificate


def test_dict_with_inconsistent_order(certificate):
    data = certificate_to_dict(certificate)
    data["n"] = 6
    with pytest.raises(ValueError):
        certificate_from_dict(data)


def _drop_key(record, key):
    return {k: v for k, v in record.items() if k != key}


@pytest.mark.parametrize(
    "corrupt, message",
    [
        (lambda d: d["steps"][1].update(edge=[2, 3, 4]), "step 2"),
        (
            lambda d: d["steps"].__setitem__(
                1, _drop_key(d["steps"][1], "side_s")
            ),
            "step 2",
        ),
        (lambda d: d["steps"][0].update(side_t="abc"), "step 1"),
        (lambda d: d.pop("base"), "record"),
        (lambda d: d.update(steps={"edge": [0, 1]}), "steps must be a list"),
    ],
)
def test_malformed_records_raise_value_error(certificate, corrupt, message):
    data = certificate_to_dict(certificate)
    corrupt(data)
    with pytest.raises(ValueError, match=message):
        certificate_from_dict(data)


def test_jsonl_files_append(tmp_path, certificate):
    path = str(tmp_path / "certs" / "run.jsonl")
    write_certificates(path, [certificate])
    write_certificates(path, [certificate])
    loaded = read_certificates(path)
    assert loaded == [certificate, certificate]
    assert all(verify_certificate(c) for c in loaded)


def test_certificate_from_explicit_order(complement_p5, k23):
    order = [(1, 2), (3, 4), (2, 3), (0, 1)]
    certificate = certificate_from_order(complement_p5, k23, order)
    assert [step.edge for step in certificate.steps] == [
        Edge(1, 2),
        Edge(3, 4),
        Edge(2, 3),
        Edge(0, 1),
    ]
    assert verify_certificate(certificate)


def test_certificate_from_order_rejects_dead_step(complement_p5, k23):
    with pytest.raises(NotWeaklySaturatedError) as excinfo:
        certificate_from_order(complement_p5, k23, [(0, 1)])
    assert excinfo.value.step == 1
    with pytest.raises(NotWeaklySaturatedError):
        certificate_from_order(complement_p5, k23, [(0, 2)])


def test_bad_suggested_witness_is_replaced(complement_p5, k23):
    wrong = Witness((2, 3), (0, 1, 4))
    certificate = certificate_from_order(
        complement_p5, k23, [(1, 2)], witnesses=[wrong]
    )
    assert certificate.steps[0].witness == Witness((0, 1), (2, 3, 4))
