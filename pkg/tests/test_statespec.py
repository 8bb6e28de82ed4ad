import json

import numpy as np
import pytest

from cylwigner import (StateKind, StateSpec, build_state, make_N_l_eigenstate,
                       make_summed_oam, make_superposition, parse_state_spec,
                       serialize_state_spec)
from cylwigner.errors import SpecParseError


def test_parse_eigenstate():
    spec = parse_state_spec("eigenstate N=3 l0=1")
    assert spec.kind is StateKind.EIGENSTATE
    assert spec.params == {"N": 3, "l0": 1}
    assert np.array_equal(build_state(spec).coeffs,
                          make_N_l_eigenstate(3, 1).coeffs)


def test_parse_summed_and_superposition():
    spec = parse_state_spec("summed l0=0 Nmax=20")
    assert np.array_equal(build_state(spec).coeffs,
                          make_summed_oam(0, 20).coeffs)
    spec = parse_state_spec("superposition l1=3 l2=-3 phi0=0 Nmax=9")
    assert np.array_equal(build_state(spec).coeffs,
                          make_superposition(3, -3, 0.0, 9).coeffs)


def test_parse_raw():
    spec = parse_state_spec("raw c[0,0]=0.6 c[1,1]=0.8j")
    s = build_state(spec)
    assert s.coeffs[0, 0] == pytest.approx(0.6)
    assert s.coeffs[1, 1] == pytest.approx(0.8j)
    assert s.is_normalized


def test_parse_json_forms():
    spec = parse_state_spec('{"kind": "eigenstate", "N": 2, "l0": 0}')
    assert spec.params == {"N": 2, "l0": 0}
    spec = parse_state_spec('{"kind": "raw", "coeffs": [[0, 0, "1"]]}')
    assert build_state(spec).coeffs[0, 0] == 1.0


def test_parse_errors_carry_position():
    with pytest.raises(SpecParseError) as e:
        parse_state_spec("bogus N=1")
    assert e.value.column == 1
    with pytest.raises(SpecParseError) as e:
        parse_state_spec("eigenstate N=x l0=0")
    assert e.value.column == 12
    with pytest.raises(SpecParseError):
        parse_state_spec("")
    with pytest.raises(SpecParseError):
        parse_state_spec("{not json")


def test_parse_rejects_malformed_pairs():
    with pytest.raises(SpecParseError):
        parse_state_spec("eigenstate N=3 l0=1 l0=1")
    with pytest.raises(SpecParseError):
        parse_state_spec("eigenstate N=3 junk")
    with pytest.raises(SpecParseError):
        parse_state_spec("eigenstate N=3")
    with pytest.raises(SpecParseError):
        parse_state_spec("eigenstate N=3 l0=1 extra=2")
    with pytest.raises(SpecParseError):
        parse_state_spec("raw notakey=1")


def test_semantic_error_names_parity():
    with pytest.raises(ValueError, match="parity"):
        parse_state_spec("eigenstate N=3 l0=2")
    with pytest.raises(ValueError, match="range"):
        parse_state_spec("summed l0=5 Nmax=3")


def test_round_trip_identity():
    texts = [
        "eigenstate N=3 l0=1",
        "summed l0=0 Nmax=20",
        "superposition l1=3 l2=-3 phi0=0.25 Nmax=9",
        "raw c[0,0]=0.6 c[1,1]=0.8j",
        "raw c[2,1]=-0.5-0.5j c[0,0]=1",
    ]
    for text in texts:
        spec = parse_state_spec(text)
        again = parse_state_spec(serialize_state_spec(spec))
        assert again == spec
        # serialization is canonical: a second round trip is a fixed point
        assert serialize_state_spec(again) == serialize_state_spec(spec)


def test_validate_is_idempotent():
    spec = StateSpec(StateKind.EIGENSTATE, {"N": 2, "l0": 0})
    assert spec.validate() is spec
    with pytest.raises(ValueError):
        StateSpec(StateKind.EIGENSTATE, {"N": 2, "l0": 1}).validate()


def test_json_error_reports_location():
    with pytest.raises(SpecParseError) as e:
        parse_state_spec('{"kind": "eigenstate", "N": }')
    assert e.value.line == 1
    assert e.value.column > 1


def test_raw_rejects_all_zero():
    with pytest.raises(ValueError):
        parse_state_spec("raw c[0,0]=0")


def test_json_missing_kind():
    with pytest.raises(SpecParseError):
        parse_state_spec(json.dumps({"N": 2}))
