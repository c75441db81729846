from ._kosnet import (
    ConfigError,
    Dataset,
    EmptyKey,
    IntegrityError,
    KosnetError,
    LookupError,
    ParseError,
    normalize_label,
    run_pipeline,
)

__all__ = [
    "ConfigError",
    "Dataset",
    "EmptyKey",
    "IntegrityError",
    "KosnetError",
    "LookupError",
    "ParseError",
    "normalize_label",
    "run_pipeline",
]
