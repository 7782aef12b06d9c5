"""Inverted index over expanded question documents, TF-IDF and In_expB2
scoring, score-sum fusion and candidate retrieval."""

import io
import math
import struct
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import NamedTuple

from rqeqa.question_types import expand_triggers

INDEX_MAGIC = b"RQEQAIDX"
INDEX_VERSION = 1


class InvalidIndex(ValueError):
    pass


class StaleIndex(InvalidIndex):
    """Index was built from a different collection."""


class Hit(NamedTuple):
    pair_id: str
    score: float


def ranked(scores):
    """Hits sorted by descending score, ties by ascending pair id."""
    return [Hit(pid, s) for pid, s in sorted(scores.items(), key=lambda kv: (-kv[1], kv[0]))]


def document_terms(pair, resources):
    """Stems indexed for one pair: question, focus synonyms, type triggers."""
    terms = list(resources.preprocess(pair.question).content_stems)
    for syn in pair.focus.synonyms:
        terms.extend(resources.preprocess(syn).content_stems)
    if pair.question_type.is_known:
        # inflected trigger variants share stems; each trigger stem counts once
        trigger_stems = set()
        for trig in expand_triggers(pair.question_type, resources.triggers):
            trigger_stems.update(resources.preprocess(trig).content_stems)
        terms.extend(sorted(trigger_stems))
    return terms


@dataclass
class InvertedIndex:
    doc_ids: tuple
    doc_lengths: tuple
    postings: dict  # term -> [(doc index, tf), ...] sorted by doc index
    collection_checksum: str = ""
    doc_freq: dict = field(init=False, repr=False)
    coll_freq: dict = field(init=False, repr=False)

    def __post_init__(self):
        self.doc_freq = {t: len(p) for t, p in self.postings.items()}
        self.coll_freq = {t: sum(tf for _, tf in p) for t, p in self.postings.items()}
        self._pos = {pid: i for i, pid in enumerate(self.doc_ids)}
        self._forward = None

    @property
    def n_docs(self):
        return len(self.doc_ids)

    @property
    def avg_doc_length(self):
        return sum(self.doc_lengths) / len(self.doc_lengths)

    @property
    def vocabulary_size(self):
        return len(self.postings)

    def doc_terms(self, pair_id):
        """Term frequencies of one document, rebuilt from the postings."""
        if self._forward is None:
            forward = [{} for _ in self.doc_ids]
            for term, plist in self.postings.items():
                for d, tf in plist:
                    forward[d][term] = tf
            self._forward = forward
        return dict(self._forward[self._pos[pair_id]])

    def check_collection(self, collection):
        if self.collection_checksum != collection.checksum():
            raise StaleIndex("index checksum does not match the collection; rebuild the index")

    def stats(self):
        return {
            "N": self.n_docs,
            "avg_dl": self.avg_doc_length,
            "vocabulary": self.vocabulary_size,
            "doc_lengths": dict(zip(self.doc_ids, self.doc_lengths)),
            "df": dict(sorted(self.doc_freq.items())),
            "cf": dict(sorted(self.coll_freq.items())),
        }

    def save(self, path):
        Path(path).write_bytes(dumps_index(self))

    @classmethod
    def load(cls, path):
        return loads_index(Path(path).read_bytes())


def build_index(collection, resources):
    if len(collection) == 0:
        raise InvalidIndex("empty collection")
    pairs = sorted(collection, key=lambda p: p.id)
    doc_ids, lengths = [], []
    postings = {}
    for i, pair in enumerate(pairs):
        tf = Counter(document_terms(pair, resources))
        doc_ids.append(pair.id)
        lengths.append(sum(tf.values()))
        for term, n in tf.items():
            postings.setdefault(term, []).append((i, n))
    return InvertedIndex(tuple(doc_ids), tuple(lengths),
                         dict(sorted(postings.items())), collection.checksum())


def _query_tf(query):
    stems = query.content_stems if hasattr(query, "content_stems") else query
    return Counter(stems)


def score_tfidf(query, index):
    """sum_t qtf * tf * ln(1 + N/n_t)."""
    N = index.n_docs
    scores = {}
    for term, qtf in _query_tf(query).items():
        plist = index.postings.get(term)
        if not plist:
            continue
        idf = math.log(1.0 + N / len(plist))
        for d, tf in plist:
            pid = index.doc_ids[d]
            scores[pid] = scores.get(pid, 0.0) + qtf * tf * idf
    return ranked({p: s for p, s in scores.items() if s > 0})


def inexpb2_weight(tf, dl, avg_dl, N, n, F, c=1.0):
    """In_expB2 weight of one term in one document (query tf excluded)."""
    tfn = tf * math.log2(1.0 + c * avg_dl / dl)
    n_e = N * (1.0 - (1.0 - n / N) ** F)
    return (F + 1) / (n * (tfn + 1)) * tfn * math.log2((N + 1) / (n_e + 0.5))


def score_inexpb2(query, index, c=1.0):
    if c <= 0:
        raise ValueError("c must be positive")
    N, avg_dl = index.n_docs, index.avg_doc_length
    scores = {}
    for term, qtf in _query_tf(query).items():
        plist = index.postings.get(term)
        if not plist:
            continue
        n, F = len(plist), index.coll_freq[term]
        for d, tf in plist:
            pid = index.doc_ids[d]
            w = inexpb2_weight(tf, index.doc_lengths[d], avg_dl, N, n, F, c)
            scores[pid] = scores.get(pid, 0.0) + qtf * w
    return ranked({p: s for p, s in scores.items() if s > 0})


def fuse(result_v, result_w):
    """Sum per-document scores of two result lists and re-rank."""
    scores = dict(result_v)
    for pid, s in result_w:
        scores[pid] = scores.get(pid, 0.0) + s
    return ranked(scores)


def retrieve_candidates(pq, index, resources, n_max=100, c=1.0):
    if n_max <= 0:
        raise ValueError("n_max must be positive")
    query = resources.preprocess(pq)
    return fuse(score_tfidf(query, index), score_inexpb2(query, index, c))[:n_max]


# binary persistence: see docs/index_format.md

def _put_str(buf, s):
    b = s.encode("utf-8")
    buf.write(struct.pack("<H", len(b)))
    buf.write(b)


def _get_str(buf):
    (n,) = struct.unpack("<H", buf.read(2))
    return buf.read(n).decode("utf-8")


def dumps_index(index):
    buf = io.BytesIO()
    buf.write(INDEX_MAGIC)
    checksum = bytes.fromhex(index.collection_checksum) if index.collection_checksum else bytes(32)
    buf.write(struct.pack("<HId", INDEX_VERSION, index.n_docs, index.avg_doc_length))
    buf.write(checksum)
    buf.write(struct.pack("<I", len(index.postings)))
    for pid, dl in zip(index.doc_ids, index.doc_lengths):
        _put_str(buf, pid)
        buf.write(struct.pack("<I", dl))
    for term in sorted(index.postings):
        plist = index.postings[term]
        _put_str(buf, term)
        buf.write(struct.pack("<I", len(plist)))
        for d, tf in plist:
            buf.write(struct.pack("<II", d, tf))
    return buf.getvalue()


def loads_index(data):
    buf = io.BytesIO(data)
    if buf.read(len(INDEX_MAGIC)) != INDEX_MAGIC:
        raise InvalidIndex("not an index file")
    try:
        version, n_docs, _avg = struct.unpack("<HId", buf.read(14))
        if version != INDEX_VERSION:
            raise InvalidIndex(f"unsupported index version {version}")
        checksum = buf.read(32).hex()
        (n_terms,) = struct.unpack("<I", buf.read(4))
        doc_ids, lengths = [], []
        for _ in range(n_docs):
            doc_ids.append(_get_str(buf))
            lengths.append(struct.unpack("<I", buf.read(4))[0])
        postings = {}
        for _ in range(n_terms):
            term = _get_str(buf)
            (k,) = struct.unpack("<I", buf.read(4))
            postings[term] = [struct.unpack("<II", buf.read(8)) for _ in range(k)]
    except (struct.error, UnicodeDecodeError):
        raise InvalidIndex("truncated or corrupt index file") from None
    if buf.read(1):
        raise InvalidIndex("trailing data after index")
    if checksum == "00" * 32:
        checksum = ""
    return InvertedIndex(tuple(doc_ids), tuple(lengths), postings, checksum)
