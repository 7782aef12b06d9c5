"""Bundled linguistic resources (stoplist, POS lexicon, trigger lexicon)."""

import hashlib
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources as _res
from pathlib import Path

from rqeqa.question_types import TriggerLexicon
from rqeqa.text_prep import PosLexicon, load_stoplist, preprocess

STOPWORDS_FILE = "stopwords.txt"
POS_FILE = "pos_lexicon.tsv"
TRIGGERS_FILE = "triggers.tsv"


def data_path(name):
    """Path of a file shipped in the package ``data`` directory."""
    return Path(str(_res.files("rqeqa") / "data" / name))


def sha256_file(path):
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


@dataclass(frozen=True)
class Resources:
    stoplist: frozenset
    lexicon: PosLexicon
    triggers: TriggerLexicon = field(compare=False)
    checksums: dict = field(default_factory=dict, compare=False)

    def preprocess(self, text):
        return preprocess(text, self.stoplist, self.lexicon)

    @classmethod
    def load(cls, directory=None):
        directory = Path(directory) if directory else data_path("")
        paths = {n: directory / n for n in (STOPWORDS_FILE, POS_FILE, TRIGGERS_FILE)}
        for p in paths.values():
            if not p.exists():
                raise FileNotFoundError(f"missing resource file: {p}")
        return cls(
            stoplist=load_stoplist(paths[STOPWORDS_FILE]),
            lexicon=PosLexicon.from_file(paths[POS_FILE]),
            triggers=TriggerLexicon.from_file(paths[TRIGGERS_FILE]),
            checksums={n: sha256_file(p) for n, p in paths.items()},
        )


@lru_cache(maxsize=1)
def default_resources():
    return Resources.load()
