"""Declarative state specifications: parsing, validation, serialization.

Two input grammars are accepted: a compact one-line key=value form,

    eigenstate N=3 l0=1
    summed l0=0 Nmax=20
    superposition l1=3 l2=-3 phi0=0 Nmax=9
    raw c[0,0]=0.6 c[1,1]=0.8j

and a JSON object with a "kind" field and the same parameter names.
Parsing validates the constructor preconditions (parity, ranges) so a
spec that parses is a spec that builds.
"""

import json
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import SpecParseError
from .twomode import TwoModeFock, make_N_l_eigenstate, make_summed_oam, make_superposition


class StateKind(Enum):
    EIGENSTATE = "eigenstate"
    SUMMED_OAM = "summed"
    SUPERPOSITION = "superposition"
    RAW_COEFFS = "raw"


@dataclass(frozen=True)
class StateSpec:
    kind: StateKind
    params: dict

    def validate(self):
        """Check constructor preconditions; raises ValueError naming them."""
        build_state(self)
        return self


_REQUIRED = {
    StateKind.EIGENSTATE: {"N": int, "l0": int},
    StateKind.SUMMED_OAM: {"l0": int, "Nmax": int},
    StateKind.SUPERPOSITION: {"l1": int, "l2": int, "phi0": float, "Nmax": int},
}


def build_state(spec):
    """Construct the TwoModeFock described by a spec."""
    p = spec.params
    if spec.kind is StateKind.EIGENSTATE:
        return make_N_l_eigenstate(p["N"], p["l0"])
    if spec.kind is StateKind.SUMMED_OAM:
        return make_summed_oam(p["l0"], p["Nmax"])
    if spec.kind is StateKind.SUPERPOSITION:
        return make_superposition(p["l1"], p["l2"], p["phi0"], p["Nmax"])
    entries = p["coeffs"]
    cut = max(max(i, j) for i, j in entries)
    table = np.zeros((cut + 1, cut + 1), dtype=complex)
    for (i, j), c in entries.items():
        table[i, j] = c
    nrm = np.linalg.norm(table)
    if nrm == 0:
        raise ValueError("raw spec has no nonzero coefficients")
    return TwoModeFock(table / nrm)


def _parse_scalar(kind, key, text, col):
    try:
        if kind is int:
            return int(text)
        return float(text)
    except ValueError:
        raise SpecParseError(f"value for {key} is not a valid {kind.__name__}: {text!r}",
                             column=col) from None


def parse_state_spec(text):
    """Parse spec text (key=value line or JSON object) into a StateSpec."""
    stripped = text.strip()
    if not stripped:
        raise SpecParseError("empty state spec")
    if stripped.startswith("{"):
        return _parse_json(stripped)
    return _parse_keyvalue(text)


def _parse_keyvalue(text):
    tokens = []
    col = 1
    for tok in text.split(" "):
        if tok.strip():
            tokens.append((tok.strip(), col))
        col += len(tok) + 1
    head, head_col = tokens[0]
    try:
        kind = StateKind(head)
    except ValueError:
        raise SpecParseError(f"unknown state kind {head!r}", column=head_col) from None

    pairs = {}
    cols = {}
    for tok, col in tokens[1:]:
        if "=" not in tok:
            raise SpecParseError(f"expected key=value, got {tok!r}", column=col)
        key, _, val = tok.partition("=")
        if key in pairs:
            raise SpecParseError(f"duplicate key {key!r}", column=col)
        pairs[key] = val
        cols[key] = col

    if kind is StateKind.RAW_COEFFS:
        entries = {}
        for key, val in pairs.items():
            col = cols[key]
            if not (key.startswith("c[") and key.endswith("]")):
                raise SpecParseError(f"raw spec keys must look like c[i,j], got {key!r}",
                                     column=col)
            try:
                i, j = (int(part) for part in key[2:-1].split(","))
                c = complex(val)
            except ValueError:
                raise SpecParseError(f"bad raw coefficient entry {key}={val}",
                                     column=col) from None
            if i < 0 or j < 0:
                raise SpecParseError("raw coefficient indices must be non-negative",
                                     column=col)
            entries[(i, j)] = c
        if not entries:
            raise SpecParseError("raw spec needs at least one coefficient")
        return StateSpec(StateKind.RAW_COEFFS, {"coeffs": entries}).validate()

    schema = _REQUIRED[kind]
    params = {}
    for key, typ in schema.items():
        if key not in pairs:
            raise SpecParseError(f"{kind.value} spec is missing {key}")
        params[key] = _parse_scalar(typ, key, pairs[key], cols[key])
    extra = set(pairs) - set(schema)
    if extra:
        raise SpecParseError(f"unexpected keys for {kind.value}: {sorted(extra)}",
                             column=cols[sorted(extra)[0]])
    return StateSpec(kind, params).validate()


def _parse_json(text):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise SpecParseError(f"invalid JSON: {e.msg}", line=e.lineno, column=e.colno) from None
    if not isinstance(obj, dict) or "kind" not in obj:
        raise SpecParseError("JSON spec must be an object with a 'kind' field")
    try:
        kind = StateKind(obj["kind"])
    except ValueError:
        raise SpecParseError(f"unknown state kind {obj['kind']!r}") from None
    if kind is StateKind.RAW_COEFFS:
        entries = {}
        for item in obj.get("coeffs", []):
            try:
                i, j, val = item[0], item[1], item[2]
                c = complex(val) if isinstance(val, str) else complex(*val) \
                    if isinstance(val, list) else complex(val)
            except (TypeError, ValueError, IndexError):
                raise SpecParseError(f"bad raw coefficient entry {item!r}") from None
            entries[(int(i), int(j))] = c
        if not entries:
            raise SpecParseError("raw spec needs at least one coefficient")
        return StateSpec(kind, {"coeffs": entries}).validate()
    schema = _REQUIRED[kind]
    params = {}
    for key, typ in schema.items():
        if key not in obj:
            raise SpecParseError(f"{kind.value} spec is missing {key}")
        try:
            params[key] = typ(obj[key])
        except (TypeError, ValueError):
            raise SpecParseError(f"value for {key} is not a valid {typ.__name__}") from None
    return StateSpec(kind, params).validate()


def serialize_state_spec(spec):
    """Canonical one-line text form; parse(serialize(s)) == s."""
    if spec.kind is StateKind.RAW_COEFFS:
        parts = [f"c[{i},{j}]={_fmt_complex(c)}"
                 for (i, j), c in sorted(spec.params["coeffs"].items())]
        return "raw " + " ".join(parts)
    schema = _REQUIRED[spec.kind]
    parts = [f"{key}={_fmt_num(spec.params[key])}" for key in schema]
    return f"{spec.kind.value} " + " ".join(parts)


def _fmt_num(v):
    if isinstance(v, int):
        return str(v)
    return repr(float(v))


def _fmt_complex(c):
    c = complex(c)
    return f"{c.real!r}{c.imag:+}j".replace("+-", "-") if c.imag else repr(c.real)
