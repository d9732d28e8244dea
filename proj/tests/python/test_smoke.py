import struct

import pytest

import formgym


def test_catalog_and_dataset_counts():
    forms = formgym.catalog()
    assert len(forms) == 25
    assert sum(len(f["fields"]) for f in forms) == 279
    records = formgym.dataset(per_form_count=2, seed=42)
    assert len(records) == 50
    assert records == formgym.dataset(per_form_count=2, seed=42)


def test_oracle_episode_is_perfect():
    record = formgym.dataset(per_form_count=1, seed=3)[0]
    report = formgym.oracle_episode(record)
    assert report["state_strict"]["strict_completion"] is True
    assert report["state_strict"]["episodic_value"] == pytest.approx(1.0)


def test_env_step_screenshot_and_values():
    record = formgym.dataset(per_form_count=1, seed=5)[0]
    env = formgym.Env(record)
    png = env.screenshot_png()
    assert png[:8] == b"\x89PNG\r\n\x1a\n"
    width, height = struct.unpack(">II", png[16:24])
    assert (width, height) == (1280, 1024)
    while not env.submitted:
        events = env.step(env.oracle_actions())
        assert events
    assert env.values() == record["gold"]
    assert env.report()["state_strict"]["episodic_value"] == pytest.approx(1.0)


def test_bleu_and_errors():
    assert formgym.bleu("the same words here", "the same words here") == pytest.approx(1.0)
    assert formgym.bleu("alpha beta", "gamma delta") == 0.0
    with pytest.raises(formgym.FormgymError):
        formgym.Env({"form_id": "no_such_form", "sample_id": "x", "provenance": "templated", "gold": {},
                     "context_document": ""})
