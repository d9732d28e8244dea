"""Python access to the formgym environment, dataset and scorer."""

import json

from . import _core
from ._core import FormgymError, bleu

__all__ = ["Env", "FormgymError", "bleu", "catalog", "dataset", "oracle_episode"]


def catalog():
    """Built-in form schemas as dicts."""
    return [json.loads(doc) for doc in _core.catalog_documents()]


def dataset(per_form_count=50, seed=42):
    """Templated gold records as dicts."""
    return [json.loads(line) for line in _core.dataset_jsonl(per_form_count, seed).splitlines() if line]


def oracle_episode(record, theme_id=""):
    """Score report of the gold-knowing agent on one record."""
    return json.loads(_core.oracle_episode(record["form_id"], json.dumps(record), theme_id))


class Env:
    """One episode on a built-in form, driven by action-DSL text."""

    def __init__(self, record, theme_id="", width=1280, height=1024, ruler_on=False, step_cap=500):
        self._env = _core.Env(record["form_id"], json.dumps(record), theme_id, width, height, ruler_on, step_cap)

    def step(self, text):
        return json.loads(self._env.step_text(text))

    def oracle_actions(self):
        return self._env.oracle_text()

    def screenshot_png(self):
        return self._env.screenshot_png()

    def values(self):
        return dict(self._env.values())

    def report(self):
        return json.loads(self._env.report_json())

    @property
    def submitted(self):
        return self._env.submitted

    @property
    def page(self):
        return self._env.page
