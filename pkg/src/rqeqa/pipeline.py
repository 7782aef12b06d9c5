"""End-to-end answering: IR candidates, entailment filtering, hybrid ranking."""

import json
import logging
from dataclasses import dataclass, field

from rqeqa.classifier import predict_proba
from rqeqa.features import extract_features
from rqeqa.index import retrieve_candidates
from rqeqa.question_types import detect_types

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class PipelineConfig:
    alpha: float = 0.5
    beta: float = 0.5
    n_max: int = 100
    top_k: int = 10
    entailment_threshold: float = 0.5
    c: float = 1.0
    fallback_to_ir: bool = False
    # False: normalize over all N retrieved candidates, then filter
    normalize_after_filter: bool = False

    def __post_init__(self):
        if not (0 <= self.alpha <= 1 and 0 <= self.beta <= 1):
            raise ValueError("alpha and beta must lie in [0, 1]")
        if abs(self.alpha + self.beta - 1.0) > 1e-9:
            raise ValueError(f"alpha + beta must equal 1 (got {self.alpha} + {self.beta})")
        if self.n_max <= 0 or self.top_k <= 0:
            raise ValueError("n_max and top_k must be positive")
        if self.c <= 0:
            raise ValueError("c must be positive")
        if not 0 <= self.entailment_threshold <= 1:
            raise ValueError("entailment_threshold must lie in [0, 1]")


@dataclass
class AnswerCandidate:
    pair_id: str
    hq_text: str
    answer_text: str
    ir_score: float
    rqe_score: float
    entailed: bool
    norm_ir: float = 0.0
    norm_rqe: float = 0.0
    hybrid_score: float = None
    alpha: float = 0.5
    beta: float = 0.5
    source: str = ""
    url: str = None
    features: object = field(default=None, repr=False)
    pq_types: frozenset = frozenset()
    hq_types: frozenset = frozenset()
    matched_terms: tuple = ()

    def to_record(self):
        return {
            "pair_id": self.pair_id, "question": self.hq_text, "answer": self.answer_text,
            "source": self.source, "url": self.url, "ir_score": self.ir_score,
            "rqe_score": self.rqe_score, "entailed": self.entailed,
            "norm_ir": self.norm_ir, "norm_rqe": self.norm_rqe,
            "hybrid_score": self.hybrid_score,
        }


@dataclass
class AnswerResult:
    candidates: list
    n_retrieved: int
    n_entailed: int
    diagnostic: str = ""

    def __iter__(self):
        return iter(self.candidates)

    def __len__(self):
        return len(self.candidates)

    def __getitem__(self, i):
        return self.candidates[i]


def _normalizer(values):
    top = max(values, default=0.0)
    if top <= 0:
        return lambda v: 0.0
    return lambda v: v / top


def rank_candidates(candidates, config):
    """Normalize, filter and order scored candidates (mutates scores in place).

    Each candidate needs ``ir_score``, ``rqe_score`` and ``entailed`` set.
    """
    pool = [c for c in candidates if c.entailed] if config.normalize_after_filter else candidates
    norm_ir = _normalizer([c.ir_score for c in pool])
    norm_rqe = _normalizer([c.rqe_score for c in pool])
    kept = []
    for cand in candidates:
        cand.norm_ir = norm_ir(cand.ir_score)
        cand.norm_rqe = norm_rqe(cand.rqe_score)
        cand.alpha, cand.beta = config.alpha, config.beta
        if cand.entailed:
            cand.hybrid_score = config.alpha * cand.norm_ir + config.beta * cand.norm_rqe
            kept.append(cand)
        else:
            cand.hybrid_score = None
    kept.sort(key=lambda c: (-c.hybrid_score, c.pair_id))
    return kept[:config.top_k]


def answer(pq, index, collection, model, resources, config=PipelineConfig()):
    hits = retrieve_candidates(pq, index, resources, config.n_max, config.c)
    if not hits:
        return AnswerResult([], 0, 0, "no candidate questions retrieved")
    pq_norm = resources.preprocess(pq)
    pq_types = detect_types(pq, resources.triggers)
    query_terms = set(pq_norm.content_stems)
    candidates = []
    for pid, ir in hits:
        pair = collection[pid]
        fv = extract_features(pq, pair.question, resources)
        p = predict_proba(model, fv)
        doc_terms = index.doc_terms(pid)
        candidates.append(AnswerCandidate(
            pair_id=pid, hq_text=pair.question, answer_text=pair.answer,
            ir_score=ir, rqe_score=p, entailed=p >= config.entailment_threshold,
            source=pair.source, url=pair.url, features=fv, pq_types=pq_types,
            hq_types=detect_types(pair.question, resources.triggers),
            matched_terms=tuple(sorted(query_terms & doc_terms.keys())),
        ))
    ranked = rank_candidates(candidates, config)
    n_entailed = sum(c.entailed for c in candidates)
    if ranked:
        return AnswerResult(ranked, len(hits), n_entailed)
    diagnostic = f"all {len(hits)} candidates filtered as non-entailed"
    if config.fallback_to_ir:
        log.info("%s; falling back to IR ranking", diagnostic)
        return AnswerResult(candidates[:config.top_k], len(hits), 0, diagnostic + " (IR fallback)")
    return AnswerResult([], len(hits), 0, diagnostic)


def explain(candidate, threshold=0.5):
    """Read-only breakdown of how a candidate was scored."""
    hscore = None
    if candidate.entailed:
        hscore = candidate.alpha * candidate.norm_ir + candidate.beta * candidate.norm_rqe
    return {
        "pair_id": candidate.pair_id,
        "features": candidate.features.__dict__ if candidate.features is not None else None,
        "ir_score": candidate.ir_score,
        "rqe_probability": candidate.rqe_score,
        "entailment_threshold": threshold,
        "entailed": candidate.entailed,
        "norm_ir": candidate.norm_ir,
        "norm_rqe": candidate.norm_rqe,
        "alpha": candidate.alpha,
        "beta": candidate.beta,
        "hybrid_score": hscore,
        "pq_types": sorted(str(t) for t in candidate.pq_types),
        "hq_types": sorted(str(t) for t in candidate.hq_types),
        "matched_terms": list(candidate.matched_terms),
    }


def hybrid_rerank_cqa(lr_scores, ir_ranks, w=8.9):
    """Rerank by ``lr + w / ir_rank``.

    Returns ``(position, score)`` pairs in new order, where ``position`` indexes
    the input lists; ties keep ascending IR rank.
    """
    if len(lr_scores) != len(ir_ranks):
        raise ValueError("one LR score per IR rank required")
    scored = []
    for i, (lr, rank) in enumerate(zip(lr_scores, ir_ranks)):
        if rank < 1:
            raise ValueError(f"IR rank must be >= 1 (got {rank} at position {i})")
        scored.append((i, lr + w / rank, rank))
    scored.sort(key=lambda t: (-t[1], t[2]))
    return [(i, s) for i, s, _ in scored]


def to_jsonl(result, qid=None):
    lines = []
    for rank, cand in enumerate(result, 1):
        rec = cand.to_record()
        rec["rank"] = rank
        if qid is not None:
            rec["qid"] = qid
        lines.append(json.dumps(rec, ensure_ascii=False, sort_keys=True))
    return "\n".join(lines) + ("\n" if lines else "")


def trec_run_lines(qid, result, tag="rqeqa"):
    """``<qid> Q0 <pair_id> <rank> <score> <tag>`` lines."""
    out = []
    for rank, cand in enumerate(result, 1):
        score = cand.hybrid_score if cand.hybrid_score is not None else cand.ir_score
        out.append(f"{qid} Q0 {cand.pair_id} {rank} {score:.6f} {tag}")
    return out
