import json

import pytest

from codeshift.config import PROFILES, ShiftType, SplitConfig, derive_seed, load_split_config, profile_config
from codeshift.errors import ConfigError


def test_profiles_match_published_sizes():
    reg, task = PROFILES["python75"]
    assert (reg.n_id_classes, reg.n_train_per_class, reg.n_id_test_per_class, reg.n_ood_test_per_class) == (75, 732, 134, 134)
    assert (task.n_id_classes, task.n_ood_classes, task.n_train_per_class, task.n_id_test_per_class,
            task.n_ood_test_per_class) == (65, 10, 846, 154, 1000)
    reg, task = PROFILES["java250s"]
    assert (reg.n_id_classes, reg.n_train_per_class, reg.n_id_test_per_class) == (250, 180, 60)
    assert (task.n_id_classes, task.n_ood_classes, task.n_ood_test_per_class) == (200, 50, 300)
    reg, task = PROFILES["python800s"]
    assert (reg.n_id_classes, task.n_id_classes, task.n_ood_classes) == (800, 640, 160)


def test_profile_selects_task_variant():
    assert profile_config("java250s", "task").n_ood_classes == 50
    assert profile_config("java250s", "time", seed=4).seed == 4
    with pytest.raises(ConfigError):
        profile_config("nope", "random")


def test_invalid_counts_rejected():
    with pytest.raises(ConfigError):
        SplitConfig(0, 1, 1, 1)


def test_config_files(tmp_path):
    toml = tmp_path / "c.toml"
    toml.write_text("n_id_classes = 3\nn_train_per_class = 4\nn_id_test_per_class = 2\n"
                    "n_ood_test_per_class = 2\n\n[task]\nn_id_classes = 2\nn_ood_classes = 1\n")
    assert load_split_config(toml, ShiftType.RANDOM).n_id_classes == 3
    assert load_split_config(toml, ShiftType.TASK).n_ood_classes == 1
    js = tmp_path / "c.json"
    js.write_text(json.dumps({"profile": "python75", "n_train_per_class": 10}))
    assert load_split_config(js, "time").n_train_per_class == 10


def test_derive_seed_is_stable_and_separates_streams():
    assert derive_seed(7, "random", "t1") == derive_seed(7, "random", "t1")
    assert derive_seed(7, "random", "t1") != derive_seed(7, "random", "t2")
    assert derive_seed(7, "ab", "c") != derive_seed(7, "a", "bc")
    assert 0 <= derive_seed(2**64 - 1, "x") < 2**64
