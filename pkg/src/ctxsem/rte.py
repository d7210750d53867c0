"""RTE-style dataset parsing and evaluation (accuracy and CWS)."""

import json
from dataclasses import dataclass
from typing import Tuple

from .errors import MalformedDataset


@dataclass(frozen=True)
class RtePair:
    id: str
    text: Tuple[str, ...]
    hypothesis: Tuple[str, ...]
    label: bool


@dataclass(frozen=True)
class PairScore:
    id: str
    score: float
    label: bool
    predicted: bool


@dataclass(frozen=True)
class EvalReport:
    n: int
    accuracy: float
    cws: float
    threshold: float
    scores: Tuple[PairScore, ...]

    def to_tsv(self):
        lines = [
            f"n\t{self.n}",
            f"accuracy\t{self.accuracy:.17g}",
            f"cws\t{self.cws:.17g}",
            f"threshold\t{self.threshold:.17g}",
        ]
        for s in self.scores:
            lines.append(
                f"pair\t{s.id}\t{s.score:.17g}\t{int(s.label)}\t{int(s.predicted)}"
            )
        return "\n".join(lines)

    def to_json(self):
        return json.dumps(
            {
                "n": self.n,
                "accuracy": self.accuracy,
                "cws": self.cws,
                "threshold": self.threshold,
                "pairs": [
                    {
                        "id": s.id,
                        "score": s.score,
                        "label": s.label,
                        "predicted": s.predicted,
                    }
                    for s in self.scores
                ],
            },
            sort_keys=True,
        )


def parse_rte_dataset(text, lowercase=False):
    """TSV ``id<TAB>text<TAB>hypothesis<TAB>0|1``; a header line is skipped."""
    pairs = []
    seen = set()
    for n, line in enumerate(text.splitlines(), 1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        parts = line.rstrip("\n").split("\t")
        if len(parts) != 4:
            raise MalformedDataset(n, f"expected 4 fields, got {len(parts)}")
        pid, t, h, label = parts
        if n == 1 and label not in ("0", "1"):
            continue  # header
        if label not in ("0", "1"):
            raise MalformedDataset(n, f"label must be 0 or 1, got {label!r}")
        if lowercase:
            t, h = t.lower(), h.lower()
        if pid in seen:
            raise MalformedDataset(n, f"duplicate pair id {pid!r}")
        seen.add(pid)
        if not t.split() or not h.split():
            raise MalformedDataset(n, "empty text or hypothesis")
        pairs.append(
            RtePair(id=pid, text=tuple(t.split()), hypothesis=tuple(h.split()),
                    label=label == "1")
        )
    return pairs


def confidence_weighted_score(scores):
    """Mean precision-at-i after sorting by score descending (ties by id)."""
    ranked = sorted(scores, key=lambda s: (-s.score, s.id))
    correct = 0
    total = 0.0
    for i, s in enumerate(ranked, 1):
        if s.predicted == s.label:
            correct += 1
        total += correct / i
    return total / len(ranked) if ranked else 0.0


def run_rte_eval(pairs, scorer, threshold=0.5):
    """Score each pair and report accuracy and CWS at the given cutoff."""
    scores = []
    for p in pairs:
        score = scorer(p.text, p.hypothesis)
        scores.append(
            PairScore(id=p.id, score=score, label=p.label,
                      predicted=score >= threshold)
        )
    n = len(scores)
    accuracy = (
        sum(1 for s in scores if s.predicted == s.label) / n if n else 0.0
    )
    return EvalReport(
        n=n,
        accuracy=accuracy,
        cws=confidence_weighted_score(scores),
        threshold=threshold,
        scores=tuple(scores),
    )
