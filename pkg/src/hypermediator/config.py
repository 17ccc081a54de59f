"""Per-corpus build configuration.

An optional ``hypermediator.toml`` at the corpus root pins the knobs the
markup model leaves open, so builds stay reproducible per corpus:

    strong_min = 3
    moderate_min = 2
    analogy_labels = ["analogy", "analogie", "analog"]
    context_chars = 200

    [captions]
    relation = 'fragment in which "{concept}" relates to "{partner}" ({rel_type})'

CLI flags override file values.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Optional, Union

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from .graph import DEFAULT_ANALOGY_LABELS, WeightThresholds
from .records import DEFAULT_TEMPLATES, CaptionTemplates

CONFIG_FILENAME = "hypermediator.toml"


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class BuildConfig:
    thresholds: WeightThresholds = WeightThresholds()
    analogy_labels: tuple[str, ...] = tuple(sorted(DEFAULT_ANALOGY_LABELS))
    templates: CaptionTemplates = DEFAULT_TEMPLATES
    context_chars: int = 200

    def overridden(
        self,
        strong_min: Optional[int] = None,
        moderate_min: Optional[int] = None,
        analogy_labels: Optional[list[str]] = None,
        context_chars: Optional[int] = None,
    ) -> "BuildConfig":
        config = self
        if strong_min is not None or moderate_min is not None:
            config = replace(
                config,
                thresholds=WeightThresholds(
                    strong_min if strong_min is not None else config.thresholds.strong_min,
                    moderate_min if moderate_min is not None else config.thresholds.moderate_min,
                ),
            )
        if analogy_labels is not None:
            config = replace(config, analogy_labels=tuple(sorted(set(analogy_labels))))
        if context_chars is not None:
            config = replace(config, context_chars=context_chars)
        return config


def load_config(corpus_dir: Union[str, Path]) -> BuildConfig:
    """Read ``hypermediator.toml`` from the corpus root, if present."""
    path = Path(corpus_dir) / CONFIG_FILENAME
    if not path.exists():
        return BuildConfig()
    try:
        data = tomllib.loads(path.read_text(encoding="utf-8"))
    except tomllib.TOMLDecodeError as exc:
        raise ConfigError(f"{path}: {exc}") from exc
    return parse_config(data, source=str(path))


def parse_config(data: dict, source: str = "config") -> BuildConfig:
    def expect(value: object, kind: type, key: str) -> object:
        # bool is an int subclass; reject it explicitly for integer knobs
        if not isinstance(value, kind) or isinstance(value, bool):
            raise ConfigError(f"{source}: {key} must be {kind.__name__}")
        return value

    known = {"strong_min", "moderate_min", "analogy_labels", "context_chars", "captions"}
    unknown = set(data) - known
    if unknown:
        raise ConfigError(f"{source}: unknown key(s): {sorted(unknown)}")

    strong_min = int(expect(data.get("strong_min", 3), int, "strong_min"))
    moderate_min = int(expect(data.get("moderate_min", 2), int, "moderate_min"))
    try:
        thresholds = WeightThresholds(strong_min, moderate_min)
    except ValueError as exc:
        raise ConfigError(f"{source}: {exc}") from exc

    labels = data.get("analogy_labels", sorted(DEFAULT_ANALOGY_LABELS))
    if not isinstance(labels, list) or not all(isinstance(v, str) for v in labels):
        raise ConfigError(f"{source}: analogy_labels must be a list of strings")

    context_chars = int(expect(data.get("context_chars", 200), int, "context_chars"))
    if context_chars < 0:
        raise ConfigError(f"{source}: context_chars must be >= 0")

    captions = data.get("captions", {})
    if not isinstance(captions, dict) or not all(
        isinstance(k, str) and isinstance(v, str) for k, v in captions.items()
    ):
        raise ConfigError(f"{source}: [captions] must map template names to strings")
    try:
        templates = DEFAULT_TEMPLATES.with_overrides(captions)
    except ValueError as exc:
        raise ConfigError(f"{source}: {exc}") from exc
    _check_templates(templates, source)

    return BuildConfig(
        thresholds=thresholds,
        analogy_labels=tuple(sorted(set(labels))),
        templates=templates,
        context_chars=context_chars,
    )


def _check_templates(templates: CaptionTemplates, source: str) -> None:
    sample = {
        "concept": "x", "partner": "y", "rel_type": "t",
        "date": "d", "place": "p", "author": "a", "reference": "r",
    }
    from dataclasses import fields

    for f in fields(templates):
        try:
            getattr(templates, f.name).format(**sample)
        except (KeyError, IndexError, ValueError) as exc:
            raise ConfigError(f"{source}: caption template {f.name!r} is invalid: {exc}") from exc
