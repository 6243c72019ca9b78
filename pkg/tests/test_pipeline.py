"""Pipeline runner tests: scoring methods, thresholds, files, manifests."""

from __future__ import annotations

import json

import pytest

from pairsim.errors import ConfigError, MissingEmbeddingError, ScoreMismatchError, SingleClassError
from pairsim.evaluation import metrics_identities_hold
from pairsim.ingest import load_scores, read_manifest
from pairsim.pipeline import (
    RunConfig,
    replay_manifest,
    run_errors,
    run_eval,
    run_score,
)


class TestRunConfig:
    def test_embedding_method_requires_embeddings(self, dataset_csv):
        with pytest.raises(ConfigError, match="requires --embeddings"):
            RunConfig(dataset=dataset_csv, method="embedding-angular")

    def test_external_method_requires_scores(self, dataset_csv):
        with pytest.raises(ConfigError, match="requires --scores"):
            RunConfig(dataset=dataset_csv, method="external-scores")

    def test_fixed_threshold_range(self, dataset_csv):
        with pytest.raises(ConfigError, match="fixed threshold"):
            RunConfig(dataset=dataset_csv, threshold_mode="fixed", threshold_value=1.5)

    def test_unknown_method(self, dataset_csv):
        with pytest.raises(ConfigError, match="unknown method"):
            RunConfig(dataset=dataset_csv, method="levenshtein")

    def test_split_range(self, dataset_csv):
        with pytest.raises(ConfigError, match="--split"):
            RunConfig(dataset=dataset_csv, split=1.0)


class TestStringMatchScoring:
    def test_scores_every_pair_sorted(self, dataset_csv, tmp_path):
        config = RunConfig(dataset=dataset_csv, format="generic-csv", out=str(tmp_path / "out"))
        result = run_score(config)
        assert [r.pair_id for r in result.records] == ["p1", "p2", "p3", "p4", "p5", "p6"]
        assert all(0.0 <= r.score <= 1.0 for r in result.records)
        # equivalent pairs overlap more than the unrelated ones here
        by_id = {r.pair_id: r.score for r in result.records}
        assert by_id["p1"] > by_id["p4"]

    def test_score_file_loads_back(self, dataset_csv, tmp_path):
        config = RunConfig(dataset=dataset_csv, format="generic-csv", out=str(tmp_path / "out"))
        result = run_score(config)
        assert load_scores(str(result.score_file)) == result.records

    def test_identical_across_worker_counts(self, dataset_csv, tmp_path):
        base = dict(dataset=dataset_csv, format="generic-csv")
        one = run_score(RunConfig(**base, out=str(tmp_path / "o1"), threads=1))
        many = run_score(RunConfig(**base, out=str(tmp_path / "o8"), threads=8))
        assert one.records == many.records
        assert one.score_file.read_text() == many.score_file.read_text()

    def test_lemma_table_changes_normalization(self, dataset_csv, tmp_path):
        table = tmp_path / "lemmas.tsv"
        table.write_text("stocks\tstock\n", encoding="utf-8")
        with_table = run_score(
            RunConfig(
                dataset=dataset_csv,
                format="generic-csv",
                lemma_table=str(table),
                out=str(tmp_path / "ot"),
            )
        )
        assert all(0.0 <= r.score <= 1.0 for r in with_table.records)


class TestEmbeddingScoring:
    def test_angular_run(self, dataset_qqp, embeddings_for_qqp, tmp_path):
        config = RunConfig(
            dataset=dataset_qqp,
            method="embedding-angular",
            embeddings=embeddings_for_qqp,
            out=str(tmp_path / "out"),
        )
        result = run_score(config)
        by_id = {r.pair_id: r.score for r in result.records}
        # nearly parallel vectors outscore nearly orthogonal ones
        assert by_id["3"] > by_id["2"]

    def test_missing_text_id_named(self, dataset_qqp, tmp_path):
        vecs = tmp_path / "incomplete.tsv"
        vecs.write_text("11\t1.0,0.0,0.0\n", encoding="utf-8")
        config = RunConfig(
            dataset=dataset_qqp,
            method="embedding-cosine",
            embeddings=str(vecs),
            out=str(tmp_path / "out"),
        )
        with pytest.raises(MissingEmbeddingError, match="'12'"):
            run_score(config)


class TestExternalScores:
    def test_pass_through(self, dataset_qqp, scores_for_qqp, tmp_path):
        config = RunConfig(
            dataset=dataset_qqp,
            method="external-scores",
            scores=scores_for_qqp,
            out=str(tmp_path / "out"),
        )
        result = run_score(config)
        assert [(r.pair_id, r.score) for r in result.records] == [
            ("1", 0.9),
            ("2", 0.2),
            ("3", 0.35),
            ("4", 0.4),
        ]

    def test_missing_score_rejected(self, dataset_qqp, tmp_path):
        scores = tmp_path / "short.tsv"
        scores.write_text("1\t0.9\n2\t0.2\n", encoding="utf-8")
        config = RunConfig(
            dataset=dataset_qqp, method="external-scores",
            scores=str(scores), out=str(tmp_path / "out"),
        )
        with pytest.raises(ScoreMismatchError, match="no score"):
            run_score(config)

    def test_extra_score_rejected(self, dataset_qqp, scores_for_qqp, tmp_path):
        with open(scores_for_qqp, "a", encoding="utf-8") as handle:
            handle.write("999\t0.5\n")
        config = RunConfig(
            dataset=dataset_qqp, method="external-scores",
            scores=scores_for_qqp, out=str(tmp_path / "out"),
        )
        with pytest.raises(ScoreMismatchError, match="not in the dataset"):
            run_score(config)


class TestRunEval:
    def test_writes_all_reports(self, dataset_csv, tmp_path):
        out = tmp_path / "out"
        config = RunConfig(dataset=dataset_csv, format="generic-csv", out=str(out))
        result = run_eval(config)
        assert metrics_identities_hold(result.report)
        for name in ("metrics.txt", "metrics.csv", "roc.csv", "manifest.json"):
            assert (out / name).exists(), name
        assert (out / "roc.csv").read_text().splitlines()[0] == "fpr,tpr,threshold"

    def test_fixed_threshold(self, dataset_qqp, scores_for_qqp, tmp_path):
        config = RunConfig(
            dataset=dataset_qqp,
            method="external-scores",
            scores=scores_for_qqp,
            threshold_mode="fixed",
            threshold_value=0.5,
            out=str(tmp_path / "out"),
        )
        result = run_eval(config)
        assert result.report.threshold == 0.5
        # scores 0.9 (label 1) predicted positive; 0.35 (label 1) missed
        assert result.report.tp == 1 and result.report.fn == 1

    def test_youden_threshold_recorded_in_manifest(self, dataset_qqp, scores_for_qqp, tmp_path):
        out = tmp_path / "out"
        config = RunConfig(
            dataset=dataset_qqp, method="external-scores",
            scores=scores_for_qqp, out=str(out),
        )
        result = run_eval(config)
        manifest = read_manifest(str(out / "manifest.json"))
        assert manifest["threshold"]["mode"] == "youden"
        assert manifest["threshold"]["value"] == result.report.threshold
        assert manifest["metrics"]["accuracy"] == result.report.accuracy
        assert manifest["dataset"]["summary"]["total"] == 4

    def test_single_class_raises(self, tmp_path):
        path = tmp_path / "one_class.csv"
        path.write_text(
            "pair_id,text_a,text_b,label\np1,a b,a b,1\np2,c d,c e,1\n", encoding="utf-8"
        )
        config = RunConfig(dataset=str(path), format="generic-csv", out=str(tmp_path / "out"))
        with pytest.raises(SingleClassError):
            run_eval(config)

    def test_split_partitions_threshold_selection(self, tmp_path):
        rows = ["pair_id,text_a,text_b,label"]
        for i in range(40):
            label = i % 2
            text_b = "how do i buy a stock" if label else "when is the market closed today"
            rows.append(f"p{i:02d},how do i buy a stock,{text_b},{label}")
        path = tmp_path / "pairs.csv"
        path.write_text("\n".join(rows) + "\n", encoding="utf-8")
        config = RunConfig(
            dataset=str(path), format="generic-csv", split=0.5, out=str(tmp_path / "out")
        )
        result = run_eval(config)
        # holdout is a strict subset of the data
        assert result.curve.positives + result.curve.negatives < 40
        assert metrics_identities_hold(result.report)

    def test_manifest_replay_reproduces_run(self, dataset_csv, tmp_path):
        first_out = tmp_path / "first"
        config = RunConfig(dataset=dataset_csv, format="generic-csv", out=str(first_out))
        run_eval(config)
        manifest = read_manifest(str(first_out / "manifest.json"))
        replay_config = replay_manifest(manifest, out=str(tmp_path / "second"))
        run_eval(replay_config)
        for name in ("metrics.txt", "metrics.csv", "roc.csv"):
            assert (first_out / name).read_text() == (tmp_path / "second" / name).read_text()


class TestRunErrors:
    def test_perfect_fixture_empty_report(self, dataset_qqp, tmp_path):
        scores = tmp_path / "perfect.tsv"
        scores.write_text("1\t0.9\n2\t0.1\n3\t0.8\n4\t0.2\n", encoding="utf-8")
        config = RunConfig(
            dataset=dataset_qqp, method="external-scores",
            scores=str(scores), out=str(tmp_path / "out"),
        )
        result = run_errors(config, limit=10)
        assert result.mistakes == []
        assert result.report_file.read_text() == "Qn1\tQn2\ttrue\tpred\n"

    def test_misclassified_positive_pair_appears(self, dataset_qqp, scores_for_qqp, tmp_path):
        # pair 3 (equivalent fee questions) scores 0.35, below the selected
        # threshold, so it must show up as true=1 pred=0
        config = RunConfig(
            dataset=dataset_qqp, method="external-scores",
            scores=scores_for_qqp, threshold_mode="fixed", threshold_value=0.4,
            out=str(tmp_path / "out"),
        )
        result = run_errors(config, limit=10)
        rows = {m.pair_id: m for m in result.mistakes}
        assert "3" in rows
        mistake = rows["3"]
        assert mistake.text_a == "Are there maintenance fees for stocks"
        assert mistake.text_b == "Are there any management fees to own the stock?"
        assert (mistake.true_label, mistake.predicted_label) == (1, 0)
        report_text = result.report_file.read_text()
        assert "Are there maintenance fees for stocks\tAre there any management fees to own the stock?\t1\t0" in report_text

    def test_limit_zero_header_only(self, dataset_qqp, scores_for_qqp, tmp_path):
        config = RunConfig(
            dataset=dataset_qqp, method="external-scores",
            scores=scores_for_qqp, threshold_mode="fixed", threshold_value=0.4,
            out=str(tmp_path / "out"),
        )
        result = run_errors(config, limit=0)
        assert result.report_file.read_text() == "Qn1\tQn2\ttrue\tpred\n"
        assert result.mistakes == []
