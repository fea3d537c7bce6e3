"""Smoke tests for the python bindings; the C++ suites carry the real depth."""

import os

import pytest

import hifi_rag

REPO_ROOT = os.environ.get("HIFI_REPO_ROOT", os.path.join(os.path.dirname(__file__), "..", ".."))


def test_rouge_values():
    assert hifi_rag.rouge_l_f1("a b c d", "a c d") == pytest.approx(6.0 / 7.0, abs=1e-9)
    assert hifi_rag.rouge_l_f1("same text", "same text") == pytest.approx(1.0)
    assert hifi_rag.rouge_l_f1("alpha", "beta") == 0.0
    assert hifi_rag.tokenize("The cat, sat!") == ["the", "cat", "sat"]
    assert hifi_rag.lcs_length(["a", "b", "c", "d"], ["a", "c", "d"]) == 3


def test_extract_json_array():
    assert hifi_rag.extract_json_array("```json\n[3, 2, 6, 7]\n```") == [3, 2, 6, 7]
    assert hifi_rag.extract_json_array('noise ["a", "b"] noise') == ["a", "b"]
    with pytest.raises(hifi_rag.HifiError):
        hifi_rag.extract_json_array("no array here")


def test_render_template():
    rendered = hifi_rag.render_template("query-plan", {"USER_QUESTION": "Q"})
    assert rendered.startswith(
        "Create an effective and concise Google search query for this question: \nQ"
    )
    baseline = hifi_rag.render_template("baseline-q", {"USER_QUESTION": "Q"})
    assert baseline == "Please limit your answer to under 200 words. Q"


def test_parse_page_sections():
    html = "<html><head><title>T</title></head><body><h1>A</h1><p>one</p><h2>B</h2><p>two</p></body></html>"
    page = hifi_rag.parse_page(html, "https://x.example/p")
    assert page["title"] == "T"
    assert [s["heading_path"] for s in page["sections"]] == [["A"], ["A", "B"]]
    assert page["sections"][0]["content"] == "one"


def test_named_configs():
    names = hifi_rag.named_config_names()
    assert len(names) == 7
    final = hifi_rag.named_config("final")
    assert final["two_turn_enabled"] is True
    assert final["reddit_k"] == 5
    with pytest.raises(hifi_rag.HifiError):
        hifi_rag.named_config("nope")


def test_ask_replays_bundled_fixtures():
    fixtures = os.path.join(REPO_ROOT, "fixtures")
    examples = os.path.join(REPO_ROOT, "data", "fewshot_examples.json")
    dataset = os.path.join(fixtures, "dataset_val5.jsonl")
    if not os.path.exists(dataset):
        pytest.skip("bundled fixtures not present")

    import json

    with open(dataset) as f:
        question = json.loads(f.readline())["question"]

    first = hifi_rag.ask(question, "final", fixtures, examples, "replay", "v1")
    second = hifi_rag.ask(question, "final", fixtures, examples, "replay", "v1")
    assert first["answer"]
    assert first == second
    assert first["urls_after_filter"] <= first["urls_before_filter"]
