"""JSON definition files: parsing, schema validation and canonical output.

Rationals are written as strings ("3", "-1/2").  On input, tensors may be
dense nested arrays or sparse ``{"[i,j,k]": "p/q"}`` maps; output is always
dense, so a file written by :func:`to_document` parses back to the same
object and re-serializes byte for byte.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Any

import jsonschema
import numpy as np

from .group import BicocycleGroupData, FiniteGroup, PointedSet
from .kernel import BasedSpace, BilinearMapTensor, SubspacePair, to_rational, zeros
from .lie import BicocycleSumData, GradedLieData, LieAlgebra
from .quantum import (
    AlgebraTensor,
    BialgebraTensor,
    BicocycleData,
    CdccData,
    CdcpData,
    CoalgebraTensor,
    induced_subcoalgebra,
)

SIX_MAPS = ("varphi", "psi", "phi", "theta", "mu", "gamma")


class DefinitionError(ValueError):
    """A definition file failed to parse or validate; ``path`` locates the problem."""

    def __init__(self, message: str, path: str = "/"):
        super().__init__(f"{path}: {message}")
        self.path = path


@lru_cache(maxsize=1)
def schema() -> dict:
    text = resources.files("bicross").joinpath("schema/definition.schema.json").read_text()
    return json.loads(text)


def _pointer(parts) -> str:
    return "/" + "/".join(str(p) for p in parts)


def _deepest(err: jsonschema.ValidationError) -> jsonschema.ValidationError:
    """Follow oneOf/anyOf branches down to the most specific failure."""
    best = err
    for sub in err.context or ():
        cand = _deepest(sub)
        if len(cand.absolute_path) > len(best.absolute_path):
            best = cand
    return best


def validate(doc: Any) -> None:
    validator = jsonschema.Draft202012Validator(schema())
    errors = [_deepest(e) for e in validator.iter_errors(doc)]
    if errors:
        err = max(errors, key=lambda e: (len(e.absolute_path), [str(p) for p in e.absolute_path]))
        raise DefinitionError(err.message, _pointer(err.absolute_path))


# --------------------------------------------------------------------------
# tensors


def _q(x) -> str:
    return str(Fraction(x))


def encode_tensor(arr: np.ndarray):
    arr = np.asarray(arr, dtype=object)
    if arr.ndim == 0:
        return _q(arr[()])
    return [encode_tensor(a) for a in arr]


def decode_tensor(raw, shape: tuple[int, ...], path: str) -> np.ndarray:
    out = zeros(shape)
    if isinstance(raw, dict):
        for key, value in raw.items():
            try:
                idx = tuple(json.loads(key))
            except json.JSONDecodeError as exc:
                raise DefinitionError(f"bad index {key!r}", path) from exc
            if len(idx) != len(shape) or any(not 0 <= i < n for i, n in zip(idx, shape)):
                raise DefinitionError(f"index {list(idx)} out of range for shape {list(shape)}", f"{path}/{key}")
            out[idx] = _rational(value, f"{path}/{key}")
        return out
    arr = np.array(raw, dtype=object)
    if arr.shape != tuple(shape):
        raise DefinitionError(f"expected shape {list(shape)}, got {list(arr.shape)}", path)
    for idx in np.ndindex(*shape):
        out[idx] = _rational(arr[idx], path + "".join(f"/{i}" for i in idx))
    return out


def _rational(value, path: str) -> Fraction:
    try:
        return to_rational(value)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise DefinitionError(f"not a rational: {value!r}", path) from exc


def _index(labels, label, path: str) -> int:
    labels = list(labels)
    if isinstance(label, int) and not isinstance(label, bool):
        if 0 <= label < len(labels):
            return label
    elif label in labels:
        return labels.index(label)
    raise DefinitionError(f"unknown label {label!r}", path)


# --------------------------------------------------------------------------
# split descriptions (inputs of ``factor``)


@dataclass(frozen=True, eq=False)
class LieSplit:
    """Rows of m and h basis vectors, in the coordinates of some Lie algebra."""

    m: np.ndarray
    h: np.ndarray
    m_labels: tuple[str, ...] | None = None
    h_labels: tuple[str, ...] | None = None

    @classmethod
    def of(cls, pair: SubspacePair) -> "LieSplit":
        return cls(pair.m_basis.T.copy(), pair.h_basis.T.copy(), pair.m_labels, pair.h_labels)

    def pair(self, L: LieAlgebra) -> SubspacePair:
        n = L.dim
        if self.m.shape[1:] != (n,) or self.h.shape[1:] != (n,):
            raise DefinitionError(f"split vectors do not have {n} coordinates", "/m")
        return SubspacePair.from_vectors(L.space, list(self.m), list(self.h), self.m_labels, self.h_labels)


@dataclass(frozen=True)
class GroupSplit:
    M: tuple[str, ...]
    H: tuple[str, ...]


@dataclass(frozen=True)
class Embedding:
    labels: tuple[str, ...]
    vectors: np.ndarray | None = None
    grouplike: str | None = None

    def matrix(self, G: BialgebraTensor) -> np.ndarray:
        if self.vectors is not None:
            return self.vectors
        emb = zeros((len(self.labels), G.dim))
        for r, name in enumerate(self.labels):
            emb[r, G.space.index(name)] = Fraction(1)
        return emb

    def coalgebra(self, G: BialgebraTensor) -> tuple[CoalgebraTensor, np.ndarray]:
        g = self.labels.index(self.grouplike) if self.grouplike else 0
        return induced_subcoalgebra(G.coalgebra, self.matrix(G), list(self.labels), g)


@dataclass(frozen=True)
class BialgebraSplit:
    M: Embedding
    H: Embedding


@dataclass(frozen=True, eq=False)
class CdccSplit:
    M: AlgebraTensor
    H: BialgebraTensor
    q: np.ndarray
    p: np.ndarray


# --------------------------------------------------------------------------
# encoding


def _coalgebra_doc(C: CoalgebraTensor) -> dict:
    return {
        "basis": list(C.labels),
        "comul": encode_tensor(C.comul),
        "counit": encode_tensor(C.counit),
        "grouplike": None if C.grouplike is None else C.labels[C.grouplike],
    }


def _algebra_doc(A: AlgebraTensor) -> dict:
    return {
        "basis": list(A.space.basis_labels),
        "mul": encode_tensor(A.mul),
        "unit": encode_tensor(A.unit),
        "character": None if A.character is None else encode_tensor(A.character),
    }


def _bialgebra_doc(B: BialgebraTensor) -> dict:
    a, c = _algebra_doc(B.algebra), _coalgebra_doc(B.coalgebra)
    return {
        "basis": a["basis"], "mul": a["mul"], "unit": a["unit"],
        "comul": c["comul"], "counit": c["counit"],
        "grouplike": c["grouplike"], "character": a["character"],
    }


def to_document(obj, name: str | None = None) -> dict:
    """Canonical JSON-ready dict for any supported object."""
    doc: dict[str, Any]
    if isinstance(obj, LieAlgebra):
        doc = {"kind": "lie_algebra", "basis": list(obj.space.basis_labels),
               "bracket": encode_tensor(obj.bracket.coeffs)}
    elif isinstance(obj, BicocycleSumData):
        doc = {"kind": "bicocycle_sum_data", "m": list(obj.m.basis_labels), "h": list(obj.h.basis_labels),
               "maps": {k: encode_tensor(getattr(obj, k).coeffs) for k in SIX_MAPS}}
    elif isinstance(obj, GradedLieData):
        doc = {"kind": "graded_lie", "name": obj.name}
    elif isinstance(obj, FiniteGroup):
        el = list(obj.elements)
        doc = {"kind": "finite_group", "elements": el, "identity": el[obj.identity],
               "table": [[el[int(c)] for c in row] for row in obj.cayley]}
    elif isinstance(obj, BicocycleGroupData):
        sets = {"M": list(obj.M.elements), "H": list(obj.H.elements)}
        codomain = {"varphi": "M", "psi": "H", "phi": "M", "theta": "H", "mu": "H", "gamma": "M"}
        doc = {"kind": "group_data",
               "M": {"elements": sets["M"], "point": sets["M"][obj.M.point]},
               "H": {"elements": sets["H"], "point": sets["H"][obj.H.point]},
               "maps": {k: [[sets[codomain[k]][int(c)] for c in row] for row in getattr(obj, k)]
                        for k in SIX_MAPS}}
    elif isinstance(obj, CoalgebraTensor):
        doc = {"kind": "coalgebra", **_coalgebra_doc(obj)}
    elif isinstance(obj, BialgebraTensor):
        doc = {"kind": "bialgebra", **_bialgebra_doc(obj)}
    elif isinstance(obj, CdcpData):
        doc = {"kind": "cdcp_data", "M": _coalgebra_doc(obj.M), "H": _bialgebra_doc(obj.H),
               "maps": {k: encode_tensor(getattr(obj, k)) for k in CdcpData.MAPS}}
    elif isinstance(obj, CdccData):
        doc = {"kind": "cdcc_data", "M": _algebra_doc(obj.M), "H": _bialgebra_doc(obj.H),
               "maps": {k: encode_tensor(getattr(obj, k)) for k in CdccData.MAPS}}
    elif isinstance(obj, BicocycleData):
        doc = {"kind": "bicocycle_data", "M": _coalgebra_doc(obj.M), "H": _coalgebra_doc(obj.H),
               "maps": {k: encode_tensor(getattr(obj, k)) for k in SIX_MAPS}}
    elif isinstance(obj, (SubspacePair, LieSplit)):
        sp = LieSplit.of(obj) if isinstance(obj, SubspacePair) else obj
        doc = {"kind": "lie_split", "m": encode_tensor(sp.m), "h": encode_tensor(sp.h)}
        if sp.m_labels is not None:
            doc["m_labels"] = list(sp.m_labels)
        if sp.h_labels is not None:
            doc["h_labels"] = list(sp.h_labels)
    elif isinstance(obj, GroupSplit):
        doc = {"kind": "group_split", "M": list(obj.M), "H": list(obj.H)}
    elif isinstance(obj, BialgebraSplit):
        doc = {"kind": "bialgebra_split", "M": _embedding_doc(obj.M), "H": _embedding_doc(obj.H)}
    elif isinstance(obj, CdccSplit):
        doc = {"kind": "cdcc_split", "M": _algebra_doc(obj.M), "H": _bialgebra_doc(obj.H),
               "q": encode_tensor(obj.q), "p": encode_tensor(obj.p)}
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")
    if name is not None:
        doc = {"kind": doc.pop("kind"), "name": name, **doc}
    return doc


def _embedding_doc(e: Embedding) -> dict:
    doc: dict[str, Any] = {"labels": list(e.labels)}
    if e.vectors is not None:
        doc["vectors"] = encode_tensor(e.vectors)
    if e.grouplike is not None:
        doc["grouplike"] = e.grouplike
    return doc


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=1, ensure_ascii=False) + "\n"


def save(obj, path, name: str | None = None) -> None:
    doc = obj if isinstance(obj, dict) else to_document(obj, name)
    Path(path).write_text(dumps(doc), encoding="utf-8")


# --------------------------------------------------------------------------
# decoding


def _coalgebra(raw: dict, path: str) -> CoalgebraTensor:
    labels = raw["basis"]
    n = len(labels)
    g = raw.get("grouplike")
    return CoalgebraTensor(
        BasedSpace(labels),
        decode_tensor(raw["comul"], (n, n, n), f"{path}/comul"),
        decode_tensor(raw["counit"], (n,), f"{path}/counit"),
        None if g is None else _index(labels, g, f"{path}/grouplike"),
    )


def _algebra(raw: dict, path: str) -> AlgebraTensor:
    labels = raw["basis"]
    n = len(labels)
    ch = raw.get("character")
    return AlgebraTensor(
        BasedSpace(labels),
        decode_tensor(raw["mul"], (n, n, n), f"{path}/mul"),
        decode_tensor(raw["unit"], (n,), f"{path}/unit"),
        None if ch is None else decode_tensor(ch, (n,), f"{path}/character"),
    )


def _bialgebra(raw: dict, path: str) -> BialgebraTensor:
    return BialgebraTensor(_algebra(raw, path), _coalgebra(raw, path))


def _label_table(raw, rows, cols, codomain, path) -> np.ndarray:
    if len(raw) != len(rows) or any(len(r) != len(cols) for r in raw):
        raise DefinitionError(f"expected a {len(rows)}x{len(cols)} table", path)
    return np.array([[_index(codomain, c, f"{path}/{i}/{j}") for j, c in enumerate(r)]
                     for i, r in enumerate(raw)], dtype=int).reshape(len(rows), len(cols))


def _decode(doc: dict):
    kind = doc["kind"]
    if kind == "lie_algebra":
        labels = doc["basis"]
        n = len(labels)
        sp = BasedSpace(labels)
        return LieAlgebra(sp, BilinearMapTensor(sp, sp, sp, decode_tensor(doc["bracket"], (n, n, n), "/bracket")))
    if kind == "bicocycle_sum_data":
        m, h = BasedSpace(doc["m"]), BasedSpace(doc["h"])
        dims = {"m": m.dim, "h": h.dim}
        sig = {"phi": "mmm", "theta": "mmh", "mu": "hhh", "gamma": "hhm", "varphi": "hmm", "psi": "hmh"}
        arrays = {k: decode_tensor(doc["maps"][k], tuple(dims[c] for c in sig[k]), f"/maps/{k}") for k in SIX_MAPS}
        return BicocycleSumData.from_arrays(m, h, **arrays)
    if kind == "graded_lie":
        from .fixtures import GRADED

        if doc["name"] not in GRADED:
            raise DefinitionError(f"unknown graded algebra {doc['name']!r}; known: {sorted(GRADED)}", "/name")
        return GRADED[doc["name"]]()
    if kind == "finite_group":
        el = doc["elements"]
        table = _label_table(doc["table"], el, el, el, "/table")
        return FiniteGroup(tuple(el), table, _index(el, doc["identity"], "/identity"))
    if kind == "group_data":
        M = PointedSet(doc["M"]["elements"], _index(doc["M"]["elements"], doc["M"]["point"], "/M/point"))
        H = PointedSet(doc["H"]["elements"], _index(doc["H"]["elements"], doc["H"]["point"], "/H/point"))
        sets = {"M": M.elements, "H": H.elements}
        sig = {"varphi": "HMM", "psi": "HMH", "phi": "MMM", "theta": "MMH", "mu": "HHH", "gamma": "HHM"}
        tables = {k: _label_table(doc["maps"][k], sets[s[0]], sets[s[1]], sets[s[2]], f"/maps/{k}")
                  for k, s in sig.items()}
        return BicocycleGroupData(M, H, **tables)
    if kind == "coalgebra":
        return _coalgebra(doc, "")
    if kind == "bialgebra":
        return _bialgebra(doc, "")
    if kind == "cdcp_data":
        M, H = _coalgebra(doc["M"], "/M"), _bialgebra(doc["H"], "/H")
        m, h = M.dim, H.dim
        shapes = {"varphi": (h, m, m), "psi": (h, m, h), "phi": (m, m, m), "theta": (m, m, h)}
        return CdcpData(M, H, **{k: decode_tensor(doc["maps"][k], s, f"/maps/{k}") for k, s in shapes.items()})
    if kind == "cdcc_data":
        M, H = _algebra(doc["M"], "/M"), _bialgebra(doc["H"], "/H")
        m, h = M.dim, H.dim
        shapes = {"nabla": (m, h, m), "blackdown": (h, h, m), "delta": (m, m, m), "sigma": (h, m, m)}
        return CdccData(M, H, **{k: decode_tensor(doc["maps"][k], s, f"/maps/{k}") for k, s in shapes.items()})
    if kind == "bicocycle_data":
        M, H = _coalgebra(doc["M"], "/M"), _coalgebra(doc["H"], "/H")
        m, h = M.dim, H.dim
        shapes = {"varphi": (h, m, m), "psi": (h, m, h), "phi": (m, m, m),
                  "theta": (m, m, h), "mu": (h, h, h), "gamma": (h, h, m)}
        return BicocycleData(M, H, **{k: decode_tensor(doc["maps"][k], s, f"/maps/{k}") for k, s in shapes.items()})
    if kind == "lie_split":
        return _lie_split(doc)
    if kind == "group_split":
        return GroupSplit(tuple(doc["M"]), tuple(doc["H"]))
    if kind == "bialgebra_split":
        return BialgebraSplit(_embedding(doc["M"]), _embedding(doc["H"]))
    if kind == "cdcc_split":
        M, H = _algebra(doc["M"], "/M"), _bialgebra(doc["H"], "/H")
        q = np.array(doc["q"], dtype=object) if not isinstance(doc["q"], dict) else None
        n = len(doc["q"]) if q is not None else 1 + max(json.loads(k)[0] for k in doc["q"])
        return CdccSplit(M, H, decode_tensor(doc["q"], (n, M.dim), "/q"), decode_tensor(doc["p"], (n, H.dim), "/p"))
    raise DefinitionError(f"unsupported kind {kind!r}", "/kind")


def _embedding(raw: dict) -> Embedding:
    vectors = raw.get("vectors")
    if vectors is not None:
        rows = vectors if isinstance(vectors, list) else None
        if rows is None:
            raise DefinitionError("embedding vectors must be dense rows", "/vectors")
        vectors = decode_tensor(vectors, (len(rows), len(rows[0]) if rows else 0), "/vectors")
    return Embedding(tuple(raw["labels"]), vectors, raw.get("grouplike"))


def _rows(raw, path: str) -> np.ndarray:
    if isinstance(raw, dict):
        raise DefinitionError("split vectors must be dense rows", path)
    if not raw:
        return zeros((0, 0))
    return decode_tensor(raw, (len(raw), len(raw[0]) if isinstance(raw[0], list) else 0), path)


def _lie_split(doc: dict) -> LieSplit:
    m, h = _rows(doc["m"], "/m"), _rows(doc["h"], "/h")
    n = max(m.shape[1], h.shape[1])
    m = m if m.size or m.shape[1] == n else zeros((0, n))
    h = h if h.size or h.shape[1] == n else zeros((0, n))
    ml, hl = doc.get("m_labels"), doc.get("h_labels")
    return LieSplit(m, h, tuple(ml) if ml else None, tuple(hl) if hl else None)


def from_document(doc: dict):
    """Validate and decode; raises DefinitionError naming the offending path."""
    validate(doc)
    try:
        return _decode(doc)
    except DefinitionError:
        raise
    except (ValueError, KeyError, IndexError) as exc:
        raise DefinitionError(str(exc), "/") from exc


def loads(text: str):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DefinitionError(f"invalid JSON: {exc.msg} (line {exc.lineno}, column {exc.colno})") from exc
    return from_document(doc)


def load_document(path) -> dict:
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise DefinitionError(f"invalid JSON: {exc.msg} (line {exc.lineno}, column {exc.colno})") from exc
    validate(doc)
    return doc


def load(path):
    return from_document(load_document(path))
