"""Field-weighted BM25F scoring, the baseline ranker and bandit feature.

score = t_tilde / (k1 + t_tilde) * idf, where
t_tilde = sum over fields of w_f * tf_f / (1 + b_f * (len_f/avglen_f - 1)).

Parameters live in a small key/value config file (`k1`, `weight.<field>`,
`b.<field>`); average field lengths are corpus running means.
"""

from dataclasses import dataclass, field as dc_field
from pathlib import Path

from .errors import InvalidParams
from .textpipe import Candidate, Field, FIELD_ORDER, IdfStore, Token, idf_component

_DEFAULT_CONFIG = Path(__file__).parent / "data" / "bm25f_default.toml"


def parse_config(text: str) -> tuple[float, dict, dict]:
    """Parse `k1`, `weight.<field>`, `b.<field>` from key/value lines."""
    k1 = 1.2
    weights: dict[Field, float] = {}
    b_values: dict[Field, float] = {}
    field_by_name = {f.value: f for f in FIELD_ORDER}
    for raw_line in text.splitlines():
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise InvalidParams(f"malformed config line: {raw_line!r}")
        key = key.strip()
        try:
            number = float(value.strip())
        except ValueError as exc:
            raise InvalidParams(f"bad value in config line: {raw_line!r}") from exc
        if key == "k1":
            k1 = number
        elif key.startswith("weight."):
            name = key[len("weight."):]
            if name not in field_by_name:
                raise InvalidParams(f"unknown field: {name}")
            weights[field_by_name[name]] = number
        elif key.startswith("b."):
            name = key[len("b."):]
            if name not in field_by_name:
                raise InvalidParams(f"unknown field: {name}")
            b_values[field_by_name[name]] = number
        else:
            raise InvalidParams(f"unknown config key: {key}")
    return k1, weights, b_values


@dataclass
class Bm25fParams:
    field_weights: dict
    field_b: dict
    k1: float = 1.2
    avg_field_len: dict = dc_field(default_factory=dict)

    def __post_init__(self):
        for f in FIELD_ORDER:
            self.field_weights.setdefault(f, 0.0)
            self.field_b.setdefault(f, 0.75)
            self.avg_field_len.setdefault(f, 1.0)
        self.validate()

    def validate(self) -> None:
        if self.k1 <= 0:
            raise InvalidParams(f"k1 must be > 0, got {self.k1}")
        for f, w in self.field_weights.items():
            if w < 0:
                raise InvalidParams(f"negative weight for {f}: {w}")
        if not any(w > 0 for w in self.field_weights.values()):
            raise InvalidParams("all field weights are zero")
        for f, b in self.field_b.items():
            if not 0.0 <= b <= 1.0:
                raise InvalidParams(f"b outside [0,1] for {f}: {b}")
        for f, avg in self.avg_field_len.items():
            if avg <= 0:
                raise InvalidParams(f"avg_field_len must be > 0 for {f}: {avg}")

    @classmethod
    def from_config_text(cls, text: str, avg_field_len: dict | None = None) -> "Bm25fParams":
        k1, weights, b_values = parse_config(text)
        return cls(
            field_weights=weights,
            field_b=b_values,
            k1=k1,
            avg_field_len=dict(avg_field_len or {}),
        )

    @classmethod
    def default(cls, avg_field_len: dict | None = None) -> "Bm25fParams":
        return cls.from_config_text(
            _DEFAULT_CONFIG.read_text(encoding="utf-8"), avg_field_len
        )


class FieldLengthTracker:
    """Running mean of per-field token counts across the corpus."""

    def __init__(self):
        self.doc_count = 0
        self._sums = {f: 0 for f in FIELD_ORDER}

    def add_document(self, doc_field_lens: dict) -> None:
        self.doc_count += 1
        for f in FIELD_ORDER:
            self._sums[f] += doc_field_lens.get(f, 0)

    @property
    def avg_field_len(self) -> dict:
        # fields empty across the whole corpus fall back to a neutral 1.0
        # (their tf is always 0, so the value never reaches a score)
        if self.doc_count == 0:
            return {f: 1.0 for f in FIELD_ORDER}
        out = {}
        for f in FIELD_ORDER:
            mean = self._sums[f] / self.doc_count
            out[f] = mean if mean > 0 else 1.0
        return out


def field_lengths(tokens: list[Token]) -> dict:
    """Per-field length = token count after stopword removal."""
    lens = {f: 0 for f in FIELD_ORDER}
    for tok in tokens:
        lens[tok.field] += 1
    return lens


def weighted_tf(candidate: Candidate, doc_field_lens: dict, params: Bm25fParams) -> float:
    t_tilde = 0.0
    for f in FIELD_ORDER:
        tf = candidate.per_field_tf.get(f, 0)
        w = params.field_weights[f]
        if tf == 0 or w == 0.0:
            continue
        b = params.field_b[f]
        length = doc_field_lens.get(f, 0)
        norm = 1.0 + b * (length / params.avg_field_len[f] - 1.0)
        t_tilde += w * tf / norm
    return t_tilde


def bm25f_score(candidate: Candidate, doc_field_lens: dict,
                params: Bm25fParams, idf: IdfStore) -> float:
    params.validate()
    t_tilde = weighted_tf(candidate, doc_field_lens, params)
    if t_tilde == 0.0:
        return 0.0
    return t_tilde / (params.k1 + t_tilde) * idf_component(candidate.df, idf.doc_count)


def rank_bm25f(candidates: list[Candidate], doc_field_lens: dict,
               params: Bm25fParams, idf: IdfStore, top_m: int = 3) -> list[tuple[str, float]]:
    """Top-m candidates by score, ties broken by candidate order."""
    scored = [
        (c.phrase, bm25f_score(c, doc_field_lens, params, idf)) for c in candidates
    ]
    scored.sort(key=lambda pair: -pair[1])
    return scored[: max(0, min(top_m, len(scored)))]
