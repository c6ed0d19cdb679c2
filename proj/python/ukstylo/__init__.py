"""Ukrainian stylometric features from CoNLL-U, backed by the C++ engine."""
import os
from pathlib import Path

from ._core import (  # noqa: F401
    Engine as _Engine,
    LexiconError,
    ParseError,
    ValidationError,
    classify,
    default_data_dir,
    macro_f1,
    stratified_split,
)

__all__ = ["Engine", "data_dir", "classify", "macro_f1", "stratified_split", "ParseError", "ValidationError",
           "LexiconError"]


def data_dir():
    """Lexicon directory: $STYLOMETRIX_DATA_DIR, then the copy shipped in the wheel, then the source tree."""
    env = os.environ.get("STYLOMETRIX_DATA_DIR")
    if env:
        return Path(env)
    packaged = Path(__file__).with_name("data")
    if (packaged / "lexicons").is_dir():
        return packaged
    return Path(default_data_dir())


def Engine(data_dir_path=None):
    return _Engine(str(data_dir_path) if data_dir_path is not None else str(data_dir()))
