"""Pairwise lexical features for question entailment.

All measures operate on preprocessed questions: set-based measures use the
content stems, Levenshtein uses the space-joined token string. Degenerate
0/0 cases are 0.0 so no NaN ever enters a feature vector.
"""

import math
from collections import Counter
from dataclasses import astuple, dataclass, fields

from rqeqa.question_types import detect_types, type_match_feature
from rqeqa.text_prep import Tag, porter_stem


class DegenerateHypothesis(ValueError):
    """The hypothesis question has no tokens."""


@dataclass(frozen=True)
class FeatureVector:
    word_overlap: float
    dice_bigram: float
    cosine: float
    levenshtein_sim: float
    jaccard: float
    sim_max: float
    sim_avg: float
    length_ratio: float
    morpho_overlap: int
    type_match: int

    def as_list(self):
        return [float(v) for v in astuple(self)]


FEATURE_NAMES = tuple(f.name for f in fields(FeatureVector))


def word_overlap(a, b):
    sa, sb = set(a.content_stems), set(b.content_stems)
    if not sa or not sb:
        return 0.0
    return len(sa & sb) / min(len(sa), len(sb))


def _bigrams(stems):
    return set(zip(stems, stems[1:]))


def dice_bigram(a, b):
    ba, bb = _bigrams(a.content_stems), _bigrams(b.content_stems)
    if not ba and not bb:
        return 0.0
    return 2 * len(ba & bb) / (len(ba) + len(bb))


def cosine_sim(a, b):
    ta, tb = Counter(a.content_stems), Counter(b.content_stems)
    if not ta or not tb:
        return 0.0
    dot = sum(v * tb[k] for k, v in ta.items() if k in tb)
    if dot == 0:
        return 0.0
    # integer norms: sqrt(na * na) is exact, so identical inputs give 1.0
    na = sum(v * v for v in ta.values())
    nb = sum(v * v for v in tb.values())
    return min(1.0, dot / math.sqrt(na * nb))


def edit_distance(x, y):
    """Unit-cost Levenshtein distance, two-row dynamic programme."""
    if x == y:
        return 0
    # a shared prefix or suffix never changes the distance
    start = 0
    while start < len(x) and start < len(y) and x[start] == y[start]:
        start += 1
    end_x, end_y = len(x), len(y)
    while end_x > start and end_y > start and x[end_x - 1] == y[end_y - 1]:
        end_x -= 1
        end_y -= 1
    x, y = x[start:end_x], y[start:end_y]
    if len(x) < len(y):
        x, y = y, x
    if not y:
        return len(x)
    prev = list(range(len(y) + 1))
    for i, cx in enumerate(x, 1):
        cur = [i] * (len(y) + 1)
        left = i
        for j, cy in enumerate(y, 1):
            best = prev[j - 1] if cx == cy else prev[j - 1] + 1
            if prev[j] + 1 < best:
                best = prev[j] + 1
            if left + 1 < best:
                best = left + 1
            cur[j] = left = best
        prev = cur
    return prev[-1]


def levenshtein_sim(a, b):
    x, y = a.char_form, b.char_form
    longest = max(len(x), len(y))
    if longest == 0:
        return 1.0
    return 1.0 - edit_distance(x, y) / longest


def jaccard(a, b):
    sa, sb = set(a.content_stems), set(b.content_stems)
    union = sa | sb
    if not union:
        return 0.0
    return len(sa & sb) / len(union)


def _tagged_stems(text, tag):
    return {porter_stem(tok) for tok, t in zip(text.tokens, text.tags) if t == tag}


def morpho_overlap(a, b):
    """Shared noun stems plus shared verb stems; needs tagged inputs."""
    return sum(
        len(_tagged_stems(a, tag) & _tagged_stems(b, tag))
        for tag in (Tag.NOUN, Tag.VERB)
    )


def length_ratio(a, b):
    if not b.tokens:
        raise DegenerateHypothesis(f"hypothesis has no tokens: {b.raw!r}")
    return len(a.tokens) / len(b.tokens)


def features_from_normalized(pq, hq, type_match=0):
    sims = (word_overlap(pq, hq), dice_bigram(pq, hq), cosine_sim(pq, hq),
            levenshtein_sim(pq, hq), jaccard(pq, hq))
    return FeatureVector(
        *sims,
        sim_max=max(sims),
        sim_avg=min(math.fsum(sims) / len(sims), max(sims)),
        length_ratio=length_ratio(pq, hq),
        morpho_overlap=morpho_overlap(pq, hq),
        type_match=type_match,
    )


def extract_features(pq, hq, resources):
    """Feature vector for a (premise, hypothesis) question pair of raw texts."""
    a, b = resources.preprocess(pq), resources.preprocess(hq)
    tm = type_match_feature(detect_types(pq, resources.triggers),
                            detect_types(hq, resources.triggers))
    return features_from_normalized(a, b, tm)


def format_row(fv, sep="\t"):
    """Delimited ten-column record in the fixed feature order."""
    return sep.join(repr(v) for v in fv.as_list())
