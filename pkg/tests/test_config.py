import pytest

from hypermediator import BuildConfig, ConfigError, load_config
from hypermediator.config import parse_config


class TestLoadConfig:
    def test_missing_file_gives_defaults(self, tmp_path):
        config = load_config(tmp_path)
        assert config == BuildConfig()
        assert config.thresholds.strong_min == 3
        assert config.thresholds.moderate_min == 2
        assert "analogie" in config.analogy_labels
        assert config.context_chars == 200

    def test_file_values(self, tmp_path):
        (tmp_path / "hypermediator.toml").write_text(
            """
strong_min = 4
moderate_min = 3
analogy_labels = ["ressemblance", "analogie"]
context_chars = 80

[captions]
relation = 'lien entre "{concept}" et "{partner}"'
""",
            encoding="utf-8",
        )
        config = load_config(tmp_path)
        assert config.thresholds.strong_min == 4
        assert config.thresholds.moderate_min == 3
        assert config.analogy_labels == ("analogie", "ressemblance")
        assert config.context_chars == 80
        assert config.templates.relation.startswith("lien entre")
        # untouched templates keep their defaults
        assert config.templates.norm == BuildConfig().templates.norm

    def test_cli_overrides_file(self, tmp_path):
        (tmp_path / "hypermediator.toml").write_text("strong_min = 5", encoding="utf-8")
        config = load_config(tmp_path).overridden(strong_min=7, analogy_labels=["x"])
        assert config.thresholds.strong_min == 7
        assert config.analogy_labels == ("x",)

    def test_invalid_toml(self, tmp_path):
        (tmp_path / "hypermediator.toml").write_text("strong_min = = 3", encoding="utf-8")
        with pytest.raises(ConfigError):
            load_config(tmp_path)


class TestParseConfig:
    def test_unknown_key_rejected(self):
        with pytest.raises(ConfigError, match="unknown key"):
            parse_config({"strong_max": 3})

    def test_inverted_thresholds_rejected(self):
        with pytest.raises(ConfigError):
            parse_config({"strong_min": 2, "moderate_min": 3})

    def test_non_integer_threshold_rejected(self):
        with pytest.raises(ConfigError):
            parse_config({"strong_min": "trois"})

    def test_bad_labels_rejected(self):
        with pytest.raises(ConfigError):
            parse_config({"analogy_labels": "analogie"})

    def test_bad_template_placeholder_rejected(self):
        with pytest.raises(ConfigError, match="caption template"):
            parse_config({"captions": {"relation": "{inconnu}"}})

    def test_unknown_template_name_rejected(self):
        with pytest.raises(ConfigError):
            parse_config({"captions": {"inexistant": "x"}})

    def test_negative_context_rejected(self):
        with pytest.raises(ConfigError):
            parse_config({"context_chars": -1})
