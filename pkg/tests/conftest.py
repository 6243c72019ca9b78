"""Shared fixtures and the acceptance pass/fail reporter."""

from __future__ import annotations

import pytest

QQP_HEADER = "id\tqid1\tqid2\tquestion1\tquestion2\tis_duplicate\n"


def pytest_runtest_logreport(report):
    """One visible [PASS]/[FAIL]/[SKIP] line per acceptance criterion."""
    if "acceptance" not in report.keywords:
        return
    name = report.nodeid.split("::")[-1]
    if report.when == "call":
        verdict = "PASS" if report.passed else "FAIL"
        print(f"\n[{verdict}] {name}", flush=True)
    elif report.when == "setup" and report.skipped:
        print(f"\n[SKIP] {name}: {report.longrepr[2] if report.longrepr else ''}", flush=True)


@pytest.fixture
def dataset_csv(tmp_path):
    """Six generic-csv pairs, both classes, varied overlap."""
    path = tmp_path / "pairs.csv"
    path.write_text(
        "pair_id,text_a,text_b,label\n"
        "p1,how do i buy a stock,how to buy stocks,1\n"
        "p2,what is an index fund,can i short a mutual fund,0\n"
        "p3,minimum amount to open an account,what is the minimum to open an account,1\n"
        "p4,are dividends taxed,when does the market open,0\n"
        "p5,transfer money to my account,how do i transfer money into my account,1\n"
        "p6,what is a limit order,why did my order fail,0\n",
        encoding="utf-8",
    )
    return str(path)


@pytest.fixture
def dataset_qqp(tmp_path):
    """Four QQP-layout pairs; q31 appears in two pairs to exercise id reuse."""
    path = tmp_path / "pairs.tsv"
    path.write_text(
        QQP_HEADER
        + "1\t11\t12\tHow do I buy a stock\tHow to buy stocks\t1\n"
        + "2\t21\t22\tWhat is an index fund\tCan I short a mutual fund\t0\n"
        + "3\t31\t32\tAre there maintenance fees for stocks\tAre there any management fees to own the stock?\t1\n"
        + "4\t31\t42\tAre there maintenance fees for stocks\tWhen does the market open\t0\n",
        encoding="utf-8",
    )
    return str(path)


@pytest.fixture
def embeddings_for_qqp(tmp_path):
    """3-dim vectors for every text id in dataset_qqp."""
    path = tmp_path / "vecs.tsv"
    path.write_text(
        "11\t1.0,0.2,0.0\n"
        "12\t0.9,0.3,0.1\n"
        "21\t0.0,1.0,0.0\n"
        "22\t1.0,0.0,1.0\n"
        "31\t0.5,0.5,0.0\n"
        "32\t0.45,0.55,0.0\n"
        "42\t0.0,0.1,1.0\n",
        encoding="utf-8",
    )
    return str(path)


@pytest.fixture
def scores_for_qqp(tmp_path):
    """External scores covering exactly dataset_qqp's pair ids."""
    path = tmp_path / "ext_scores.tsv"
    path.write_text("1\t0.9\n2\t0.2\n3\t0.35\n4\t0.4\n", encoding="utf-8")
    return str(path)
