import logging
from dataclasses import replace

import numpy as np
import pytest

from stcutlib.analysis import (
    Mismatch,
    VerifyParams,
    diff_report,
    threads_from_env,
    verify_instance,
)
from stcutlib.gen import GenSpec, corpus_specs, generate, planted_chain_spec
from stcutlib.graph import build_graph
from stcutlib.oracle import oracle_report
from stcutlib.stbridge import CutKind, st_bridges


def test_threads_from_env(monkeypatch):
    monkeypatch.delenv("STCUT_THREADS", raising=False)
    assert threads_from_env() == 1
    monkeypatch.setenv("STCUT_THREADS", "4")
    assert threads_from_env() == 4
    assert VerifyParams().threads == 4


@pytest.mark.parametrize("raw", ["zero", "0", "-3"])
def test_invalid_threads_fall_back_with_a_warning(monkeypatch, caplog, raw):
    monkeypatch.setenv("STCUT_THREADS", raw)
    with caplog.at_level(logging.WARNING):
        assert threads_from_env() == 1
    assert "STCUT_THREADS" in caplog.text


def test_planted_chain_passes():
    instance = generate(planted_chain_spec(4, block=5, seed=2))
    verdict = verify_instance(
        instance.graph,
        instance.source,
        instance.sink,
        planted_bridges=instance.planted_bridges,
        planted_articulation=instance.planted_articulation,
    )
    assert verdict.passed
    assert verdict.to_dict()["mismatches"] == []


def test_wrong_planted_truth_is_reported(six_node):
    verdict = verify_instance(six_node, 0, 5, planted_bridges=(1,))
    assert not verdict.passed
    assert verdict.mismatches == (Mismatch("bridges", "planted", [1], [0]),)


def test_unreachable_sink_passes_when_both_searches_agree():
    g = build_graph(3, [(0, 1), (2, 1)])
    assert verify_instance(g, 0, 2).passed


def test_corrupted_report_gives_a_structured_diff(six_node):
    report = st_bridges(six_node, 0, 5)
    oracle = oracle_report(six_node, 0, 5)
    comp = np.array(report.comp)
    comp[2] = 7
    corrupted = replace(report, sequence=(), comp=comp)
    diff = diff_report(corrupted, oracle, CutKind.BRIDGE)
    assert [m.aspect for m in diff] == ["set", "comp"]
    assert diff[0].to_dict() == {
        "kind": "bridges",
        "aspect": "set",
        "expected": [0],
        "found": [],
    }


def test_wrong_order_is_an_order_mismatch(chain):
    report = st_bridges(chain, 0, 2)
    oracle = oracle_report(chain, 0, 2)
    swapped = replace(report, sequence=report.sequence[::-1])
    diff = diff_report(swapped, oracle, CutKind.BRIDGE)
    assert diff == [Mismatch("bridges", "order", [0, 1], [1, 0])]


def test_small_random_corpus_passes():
    params = VerifyParams(limit_paths=1_000, threads=1, queue="lifo")
    for spec in corpus_specs(100, seed=11):
        instance = generate(spec)
        assert verify_instance(instance.graph, 0, spec.n - 1, params).passed, spec


def test_unreachable_corpus_passes():
    for seed in range(20):
        instance = generate(GenSpec("random_digraph", n=6, seed=seed, unreachable=True))
        assert verify_instance(instance.graph, 0, 5).passed
