"""LiveQA first-answer measures, MAP@10 / MRR@10 and assessor agreement.

A judged run maps each question id to the grades (1-4) of its returned
answers in rank order; unanswered questions map to an empty list.
"""

import json
from dataclasses import asdict, dataclass
from pathlib import Path

GRADES = (1, 2, 3, 4)
CORRECT = 3  # grade threshold for MAP/MRR
UNJUDGED_GRADE = 1


class EmptyRun(ValueError):
    pass


def _check(run):
    if not run:
        raise EmptyRun("run has no questions")
    for qid, grades in run.items():
        for g in grades:
            if g not in GRADES:
                raise ValueError(f"question {qid}: grade {g!r} not in 1-4")


def _first_grades(run):
    return [grades[0] if grades else None for grades in run.values()]


def avg_score(run):
    """Mean first-answer score on the 0-3 scale; unanswered counts 0."""
    _check(run)
    return sum((g - 1) if g else 0 for g in _first_grades(run)) / len(run)


def succ_at(run, i):
    _check(run)
    return sum(1 for g in _first_grades(run) if g and g >= i) / len(run)


def prec_at(run, i):
    _check(run)
    firsts = [g for g in _first_grades(run) if g is not None]
    if not firsts:
        raise EmptyRun("no answered questions")
    return sum(1 for g in firsts if g >= i) / len(firsts)


def average_precision(grades, cutoff=10):
    hits, total = 0, 0.0
    for rank, g in enumerate(grades[:cutoff], 1):
        if g >= CORRECT:
            hits += 1
            total += hits / rank
    return total / hits if hits else 0.0


def reciprocal_rank(grades, cutoff=10):
    for rank, g in enumerate(grades[:cutoff], 1):
        if g >= CORRECT:
            return 1.0 / rank
    return 0.0


def map_at_10(run):
    _check(run)
    return sum(average_precision(g) for g in run.values()) / len(run)


def mrr_at_10(run):
    _check(run)
    return sum(reciprocal_rank(g) for g in run.values()) / len(run)


@dataclass
class MetricReport:
    questions: int
    answered: int
    avg_score_0_3: float
    succ_at: dict
    prec_at: dict  # values are None when nothing was answered
    map_at_10: float
    mrr_at_10: float

    def to_json(self):
        return json.dumps(asdict(self), sort_keys=True)

    def to_table(self):
        rows = [("questions", self.questions), ("answered", self.answered),
                ("avgScore(0-3)", self.avg_score_0_3)]
        rows += [(f"succ@{i}+", v) for i, v in self.succ_at.items()]
        rows += [(f"prec@{i}+", v) for i, v in self.prec_at.items()]
        rows += [("MAP@10", self.map_at_10), ("MRR@10", self.mrr_at_10)]
        fmt = lambda v: "n/a" if v is None else (f"{v:.3f}" if isinstance(v, float) else str(v))
        return "\n".join(f"{name:<14}{fmt(v)}" for name, v in rows)


def metric_report(run):
    _check(run)
    answered = sum(1 for g in run.values() if g)
    return MetricReport(
        questions=len(run), answered=answered,
        avg_score_0_3=avg_score(run),
        succ_at={i: succ_at(run, i) for i in (2, 3, 4)},
        prec_at={i: (prec_at(run, i) if answered else None) for i in (2, 3, 4)},
        map_at_10=map_at_10(run), mrr_at_10=mrr_at_10(run),
    )


@dataclass(frozen=True)
class Agreement:
    precision: float
    f1: float
    partial_precision: float
    partial_f1: float


def _p_f1(matches, n):
    p = matches / n
    # every rating is a positive, so recall is 1
    return p, (2 * p / (1 + p) if p else 0.0)


def agreement_f1(reference, other):
    if len(reference) != len(other):
        raise ValueError(f"grade lists differ in length ({len(reference)} vs {len(other)})")
    if not reference:
        raise ValueError("empty grade lists")
    exact = sum(a == b for a, b in zip(reference, other))
    partial = sum((a >= CORRECT) == (b >= CORRECT) for a, b in zip(reference, other))
    p, f1 = _p_f1(exact, len(reference))
    pp, pf1 = _p_f1(partial, len(reference))
    return Agreement(p, f1, pp, pf1)


def read_run_file(path):
    """TREC run lines -> {qid: [pair_id, ...]} ordered by rank."""
    ranked = {}
    for lineno, line in enumerate(Path(path).read_text("utf-8").splitlines(), 1):
        if not line.strip():
            continue
        parts = line.split()
        if len(parts) != 6:
            raise ValueError(f"{path}:{lineno}: expected '<qid> Q0 <pair_id> <rank> <score> <tag>'")
        ranked.setdefault(parts[0], []).append((int(parts[3]), parts[2]))
    return {q: [pid for _, pid in sorted(v)] for q, v in ranked.items()}


def read_judgments(path, keyed="id"):
    """``<qid>\\t<pair_id or rank>\\t<grade>`` lines -> {qid: {key: grade}}.

    With ``keyed="rank"`` the middle column is the 1-based answer rank.
    """
    if keyed not in ("id", "rank"):
        raise ValueError("keyed must be 'id' or 'rank'")
    out = {}
    for lineno, line in enumerate(Path(path).read_text("utf-8").splitlines(), 1):
        if not line.strip() or line.startswith("#"):
            continue
        parts = line.split("\t") if "\t" in line else line.split()
        try:
            qid, key, grade = parts
            grade = int(grade)
            key = int(key) if keyed == "rank" else key
        except ValueError:
            raise ValueError(f"{path}:{lineno}: expected '<qid>\\t<{keyed}>\\t<grade>'") from None
        if grade not in GRADES:
            raise ValueError(f"{path}:{lineno}: grade {grade} not in 1-4")
        out.setdefault(qid, {})[key] = grade
    return out


def judge_run(ranked, judgments, qids, keyed="id"):
    """Join a ranked run with judgments into a judged run over ``qids``.

    Unjudged answers get grade 1; questions absent from the run are
    unanswered.
    """
    run = {}
    for qid in qids:
        table = judgments.get(qid, {})
        answers = ranked.get(qid, [])
        if keyed == "rank":
            run[qid] = [table.get(r, UNJUDGED_GRADE) for r in range(1, len(answers) + 1)]
        else:
            run[qid] = [table.get(pid, UNJUDGED_GRADE) for pid in answers]
    return run
