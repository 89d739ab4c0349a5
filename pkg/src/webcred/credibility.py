"""Checklist scores, buckets, the per-criterion ensemble, and its files.

A page's credibility score counts how many of the 7 checklist criteria its
text satisfies; scores bucket into low (0-2), medium (3-4), and high (5-7).
The ensemble keeps, for every criterion, whichever model family scored the
higher cross-validated F1, so different criteria may use different
families.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .errors import DataError
from .eval import CvReport
from .forest import ForestModel
from .ingest import WebDocument
from .models import model_from_dict
from .svm import SvmModel
from .textprep import TfIdfModel, clean_text, tokenize, transform

N_CRITERIA = 7

CRITERIA_DESCRIPTIONS = {
    1: "information is based on objective, scientific research",
    2: "adequate detail about the level of evidence is included",
    3: "uncertainties and limitations of the research are described",
    4: "evidence is not exaggerated, overstated or misrepresented",
    5: "context for the research is provided",
    6: "language is clear, non-technical and easy to understand",
    7: "sponsorship and funding are transparent",
}

BUCKETS = ("low", "medium", "high")


def validate_labels(labels: Sequence[int]) -> tuple[int, ...]:
    if len(labels) != N_CRITERIA:
        raise DataError(f"expected {N_CRITERIA} criterion labels, got {len(labels)}")
    values = tuple(int(v) for v in labels)
    if any(v not in (0, 1) for v in values):
        raise DataError(f"criterion labels must be 0 or 1, got {values}")
    return values


def bucket_for_score(score: int) -> str:
    if not 0 <= score <= N_CRITERIA:
        raise DataError(f"credibility score must be 0..{N_CRITERIA}, got {score}")
    if score <= 2:
        return "low"
    if score <= 4:
        return "medium"
    return "high"


@dataclass
class CredibilityResult:
    labels: tuple[int, ...]
    score: int
    bucket: str


def score_from_labels(labels: Sequence[int]) -> CredibilityResult:
    """Score = number of satisfied criteria; bucket per the cut points."""
    values = validate_labels(labels)
    score = sum(values)
    return CredibilityResult(labels=values, score=score, bucket=bucket_for_score(score))


@dataclass
class EnsembleEntry:
    """One criterion's chosen model plus the CV numbers that justified it."""

    criterion: int
    family: str
    model: SvmModel | ForestModel
    provenance: dict[str, dict[str, float]]


@dataclass
class EnsembleModel:
    entries: dict[int, EnsembleEntry]

    def __post_init__(self):
        missing = [k for k in range(1, N_CRITERIA + 1) if k not in self.entries]
        if missing:
            raise DataError(f"ensemble is missing criteria {missing}")


def select_families(cv_report: CvReport) -> dict[int, str]:
    """Per criterion, the family with the higher mean F1.

    Ties go to higher mean accuracy, then to the random forest.
    """
    by_criterion: dict[int, dict[str, tuple[float, float]]] = {}
    for row in cv_report.rows:
        by_criterion.setdefault(row.criterion, {})[row.family] = (
            row.f1_mean,
            row.acc_mean,
        )
    chosen: dict[int, str] = {}
    for criterion in range(1, N_CRITERIA + 1):
        families = by_criterion.get(criterion, {})
        if "svm" not in families or "rf" not in families:
            raise DataError(
                f"criterion {criterion}: need CV rows for both families, "
                f"have {sorted(families)}"
            )
        svm_f1, svm_acc = families["svm"]
        rf_f1, rf_acc = families["rf"]
        if svm_f1 > rf_f1 or (svm_f1 == rf_f1 and svm_acc > rf_acc):
            chosen[criterion] = "svm"
        else:
            chosen[criterion] = "rf"
    return chosen


def build_ensemble(
    cv_report: CvReport,
    models: dict[tuple[int, str], SvmModel | ForestModel],
) -> EnsembleModel:
    """Assemble the 7-entry ensemble from CV results and trained models."""
    chosen = select_families(cv_report)
    stats = {
        (row.criterion, row.family): {
            "f1_mean": row.f1_mean,
            "f1_std": row.f1_std,
            "acc_mean": row.acc_mean,
            "acc_std": row.acc_std,
        }
        for row in cv_report.rows
    }
    entries: dict[int, EnsembleEntry] = {}
    for criterion, family in chosen.items():
        model = models.get((criterion, family))
        if model is None:
            raise DataError(
                f"no trained {family} model supplied for criterion {criterion}"
            )
        entries[criterion] = EnsembleEntry(
            criterion=criterion,
            family=family,
            model=model,
            provenance={
                "svm": stats[(criterion, "svm")],
                "rf": stats[(criterion, "rf")],
            },
        )
    return EnsembleModel(entries=entries)


def predict_criteria(
    tokens: Sequence[str], ensemble: EnsembleModel, tfidf: TfIdfModel
) -> tuple[int, ...]:
    x = transform(tokens, tfidf)
    return tuple(
        ensemble.entries[k].model.predict(x) for k in range(1, N_CRITERIA + 1)
    )


def predict_credibility(
    doc: WebDocument, ensemble: EnsembleModel, tfidf: TfIdfModel
) -> CredibilityResult:
    """Clean, tokenize, vectorize, and apply all 7 criterion models."""
    cleaned = clean_text(doc.text)
    if not cleaned:
        raise DataError(f"document {doc.url}: no text left after cleaning")
    labels = predict_criteria(tokenize(cleaned), ensemble, tfidf)
    return score_from_labels(labels)


def evaluate_ensemble(
    docs: Sequence[WebDocument],
    gold_labels: Sequence[Sequence[int]],
    ensemble: EnsembleModel,
    tfidf: TfIdfModel,
) -> dict:
    """Three-class bucket evaluation against expert labels.

    Returns overall accuracy, precision of the predicted-low bucket (None
    when nothing was predicted low), and the 3x3 confusion matrix with
    rows = gold bucket, columns = predicted bucket, both in low, medium,
    high order.
    """
    if len(docs) != len(gold_labels):
        raise DataError(f"got {len(docs)} documents but {len(gold_labels)} labels")
    if not docs:
        raise DataError("cannot evaluate on an empty document set")
    index = {b: i for i, b in enumerate(BUCKETS)}
    confusion = [[0, 0, 0] for _ in BUCKETS]
    correct = 0
    for doc, labels in zip(docs, gold_labels):
        gold = score_from_labels(labels).bucket
        predicted = predict_credibility(doc, ensemble, tfidf).bucket
        confusion[index[gold]][index[predicted]] += 1
        if gold == predicted:
            correct += 1
    predicted_low = sum(confusion[i][0] for i in range(3))
    low_precision = confusion[0][0] / predicted_low if predicted_low else None
    return {
        "three_class_accuracy": correct / len(docs),
        "low_precision": low_precision,
        "confusion": confusion,
        "bucket_order": list(BUCKETS),
        "n_documents": len(docs),
    }


def ensemble_to_dict(ensemble: EnsembleModel, tfidf: TfIdfModel) -> dict:
    """Single-file model format bundling the TF-IDF stage and all 7 models."""
    criteria = []
    for k in range(1, N_CRITERIA + 1):
        entry = ensemble.entries[k]
        payload = entry.model.to_dict()
        family = payload.pop("family")
        params = payload.pop("params")
        criteria.append(
            {
                "criterion": k,
                "family": family,
                "params": params,
                "weights_or_trees": payload,
                "provenance": entry.provenance,
            }
        )
    return {"schema_version": 1, "tfidf": tfidf.to_dict(), "criteria": criteria}


def ensemble_from_dict(data: dict) -> tuple[EnsembleModel, TfIdfModel]:
    if data.get("schema_version") != 1:
        raise DataError(f"unsupported model schema_version {data.get('schema_version')!r}")
    tfidf = TfIdfModel.from_dict(data["tfidf"])
    entries: dict[int, EnsembleEntry] = {}
    for item in data["criteria"]:
        criterion = int(item["criterion"])
        model = model_from_dict(
            {"family": item["family"], "params": item["params"], **item["weights_or_trees"]}
        )
        entries[criterion] = EnsembleEntry(
            criterion=criterion,
            family=item["family"],
            model=model,
            provenance=item.get("provenance", {}),
        )
    return EnsembleModel(entries=entries), tfidf


def read_labels_csv(path: str | Path) -> dict[str, tuple[int, ...]]:
    """labels.csv: url,c1,...,c7 with a header row; values 0/1."""
    expected = ["url"] + [f"c{k}" for k in range(1, N_CRITERIA + 1)]
    labels: dict[str, tuple[int, ...]] = {}
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or [h.strip() for h in header] != expected:
            raise DataError(
                f"{path}: expected header {','.join(expected)}, got {header}"
            )
        for lineno, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != len(expected):
                raise DataError(f"{path}:{lineno}: expected {len(expected)} fields")
            url = row[0]
            if url in labels:
                raise DataError(f"{path}:{lineno}: duplicate url {url}")
            try:
                labels[url] = validate_labels([int(v) for v in row[1:]])
            except ValueError as exc:
                raise DataError(f"{path}:{lineno}: {exc}") from exc
    if not labels:
        raise DataError(f"{path}: no label rows")
    return labels


def write_scores_csv(
    results: Sequence[tuple[str, CredibilityResult]], path: str | Path
) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(
            ["url"] + [f"c{k}" for k in range(1, N_CRITERIA + 1)] + ["score", "bucket"]
        )
        for url, result in results:
            writer.writerow([url, *result.labels, result.score, result.bucket])


def read_scores_csv(path: str | Path) -> dict[str, CredibilityResult]:
    results: dict[str, CredibilityResult] = {}
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        expected = (
            ["url"] + [f"c{k}" for k in range(1, N_CRITERIA + 1)] + ["score", "bucket"]
        )
        if header != expected:
            raise DataError(f"{path}: unexpected scores header {header}")
        for row in reader:
            if not row:
                continue
            result = score_from_labels([int(v) for v in row[1:8]])
            if result.score != int(row[8]) or result.bucket != row[9]:
                raise DataError(f"{path}: inconsistent row for {row[0]}")
            results[row[0]] = result
    return results


def write_label_distribution_csv(
    labels: Sequence[Sequence[int]], path: str | Path
) -> None:
    """Per-criterion proportion of documents satisfying it."""
    if not labels:
        raise DataError("no labels to summarize")
    rows = [validate_labels(v) for v in labels]
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["criterion", "proportion_satisfied"])
        for k in range(N_CRITERIA):
            proportion = sum(r[k] for r in rows) / len(rows)
            writer.writerow([k + 1, repr(proportion)])
