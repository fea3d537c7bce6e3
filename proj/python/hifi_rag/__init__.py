"""Hierarchical-filtering retrieval-augmented QA pipeline (C++ core bindings)."""

from hifi_rag._core import (
    HifiError,
    ask,
    extract_json_array,
    lcs_length,
    named_config,
    named_config_names,
    normalize_url,
    parse_page,
    parse_reddit_page,
    render_template,
    rouge_l_f1,
    tokenize,
)

__all__ = [
    "HifiError",
    "ask",
    "extract_json_array",
    "lcs_length",
    "named_config",
    "named_config_names",
    "normalize_url",
    "parse_page",
    "parse_reddit_page",
    "render_template",
    "rouge_l_f1",
    "tokenize",
]
