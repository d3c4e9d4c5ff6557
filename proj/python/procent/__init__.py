# Copyright 2026 The Procent Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Centering-based pronoun resolution with pitch-accent semantics.

Documents are JSON Lines strings: one ``{"kind": "entity", ...}`` or
``{"kind": "utterance", ...}`` object per line. The functions below decode
the engine's JSONL output into plain python objects.
"""

import json as _json

from ._procent import (
    MissingGoldError,
    ParseError,
    SearchSpaceTooLarge,
    __version__,
    accents_jsonl,
    annotate_jsonl,
    check_jsonl,
    eval_jsonl,
    oracle_jsonl,
    resolve_jsonl,
    round_trip,
)

__all__ = [
    "MissingGoldError",
    "ParseError",
    "SearchSpaceTooLarge",
    "__version__",
    "accents",
    "annotate",
    "check",
    "evaluate",
    "oracle",
    "resolve",
    "round_trip",
]


def _lines(text):
    return [_json.loads(line) for line in text.splitlines() if line]


def resolve(text, prosody=True):
    """Resolve a document; returns a list of per-utterance trace dicts."""
    return _lines(resolve_jsonl(text, prosody))


def oracle(text, prosody=True, max_search=100000):
    """Resolve by exhaustive search; same schema as :func:`resolve`."""
    return _lines(oracle_jsonl(text, prosody, max_search))


def check(text, prosody=True):
    """Diagnostics the resolver would emit, as a list of dicts."""
    return _lines(check_jsonl(text, prosody))


def accents(text):
    """Accent obligations for a gold-annotated document."""
    return _lines(accents_jsonl(text))


def annotate(text):
    """The accent-annotated document, as a JSON Lines string."""
    return annotate_jsonl(text)


def evaluate(text):
    """Resolution-vs-gold metrics as a dict."""
    return _json.loads(eval_jsonl(text))
