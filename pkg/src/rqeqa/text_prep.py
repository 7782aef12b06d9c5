"""Text normalization shared by the feature extractor and the index."""

import re
import unicodedata
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path

from rqeqa.porter import porter_stem

# alphanumeric runs, optionally joined by internal hyphens or apostrophes
_TOKEN_RE = re.compile(r"[^\W_]+(?:['\-][^\W_]+)*")
_APOSTROPHES = str.maketrans({"’": "'", "‘": "'", "ʼ": "'",
                              "‐": "-", "‑": "-"})


class Tag(str, Enum):
    NOUN = "NOUN"
    VERB = "VERB"
    OTHER = "OTHER"


@dataclass(frozen=True)
class PosLexicon:
    noun_entries: frozenset = field(default_factory=frozenset)
    verb_entries: frozenset = field(default_factory=frozenset)

    @classmethod
    def from_file(cls, path):
        nouns, verbs = set(), set()
        for lineno, line in enumerate(Path(path).read_text("utf-8").splitlines(), 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            try:
                word, tag = line.split("\t")
            except ValueError:
                raise ValueError(f"{path}:{lineno}: expected '<word>\\t<NOUN|VERB>'") from None
            if tag == "NOUN":
                nouns.add(word.lower())
            elif tag == "VERB":
                verbs.add(word.lower())
            else:
                raise ValueError(f"{path}:{lineno}: unknown tag {tag!r}")
        return cls(frozenset(nouns), frozenset(verbs))


@dataclass(frozen=True)
class NormalizedText:
    raw: str
    tokens: tuple
    content_stems: tuple  # ordered; the multiset view is collections.Counter(content_stems)
    tags: tuple = ()

    @property
    def char_form(self):
        return " ".join(self.tokens)


def tokenize(text):
    """Split ``text`` into lowercase word tokens, keeping internal ``-`` and ``'``."""
    text = unicodedata.normalize("NFC", text).translate(_APOSTROPHES).lower()
    return _TOKEN_RE.findall(text)


def remove_stopwords(tokens, stoplist):
    return [t for t in tokens if t not in stoplist]


def tag_pos(tokens, lexicon):
    """Lexicon lookup tagger; nouns take precedence over verbs."""
    tags = []
    for tok in tokens:
        tok = tok.lower()
        if tok in lexicon.noun_entries:
            tags.append(Tag.NOUN)
        elif tok in lexicon.verb_entries:
            tags.append(Tag.VERB)
        else:
            tags.append(Tag.OTHER)
    return tags


def stem_all(tokens):
    return [porter_stem(t) for t in tokens]


def preprocess(text, stoplist, lexicon=None):
    tokens = tokenize(text)
    stems = stem_all(remove_stopwords(tokens, stoplist))
    tags = tuple(tag_pos(tokens, lexicon)) if lexicon is not None else ()
    return NormalizedText(raw=text, tokens=tuple(tokens), content_stems=tuple(stems), tags=tags)


def load_stoplist(path):
    words = set()
    for line in Path(path).read_text("utf-8").splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            words.add(line.lower())
    return frozenset(words)
