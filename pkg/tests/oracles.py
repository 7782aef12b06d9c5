"""Independent reference implementations used as test oracles.

Nothing here imports rqeqa. Tokenizing, stemming (nltk's original-algorithm
Porter stemmer), features, retrieval scores, metrics and model scoring are
rewritten from their closed-form definitions, usually in the most naive way
available, so the tests can compare the two implementations.
"""

import json
import math
import unicodedata
from pathlib import Path

from nltk.stem.porter import PorterStemmer

DATA = Path(__file__).resolve().parent.parent / "src" / "rqeqa" / "data"

_porter = PorterStemmer(mode=PorterStemmer.ORIGINAL_ALGORITHM)


def stem(word):
    return word if len(word) <= 2 else _porter.stem(word, to_lowercase=False)


# ---------------------------------------------------------------- text


def tokenize(text):
    """Character scanner: alphanumeric runs glued by single internal - or '."""
    text = unicodedata.normalize("NFC", text)
    for a, b in (("’", "'"), ("‘", "'"), ("ʼ", "'"), ("‐", "-"), ("‑", "-")):
        text = text.replace(a, b)
    text = text.lower()
    out, i, n = [], 0, len(text)
    while i < n:
        if not text[i].isalnum():
            i += 1
            continue
        j = i
        while True:
            while j < n and text[j].isalnum():
                j += 1
            if j + 1 < n and text[j] in "'-" and text[j + 1].isalnum():
                j += 1
                continue
            break
        out.append(text[i:j])
        i = j
    return out


def read_stoplist(path=DATA / "stopwords.txt"):
    return {w.strip().lower() for w in Path(path).read_text("utf-8").splitlines()
            if w.strip() and not w.startswith("#")}


def read_lexicon(path=DATA / "pos_lexicon.tsv"):
    nouns, verbs = set(), set()
    for line in Path(path).read_text("utf-8").splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        word, tag = line.strip().split("\t")
        (nouns if tag == "NOUN" else verbs).add(word.lower())
    return nouns, verbs


def read_triggers(path=DATA / "triggers.tsv"):
    """List of (phrase tokens, 'CAT/Name')."""
    out = []
    for line in Path(path).read_text("utf-8").splitlines():
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        phrase, cat, name = line.split("\t")
        out.append((tuple(tokenize(phrase)), f"{cat.strip()}/{name.strip()}"))
    return out


class Env:
    """Bundled resources parsed from the data files by the oracle's own readers."""

    def __init__(self):
        self.stop = read_stoplist()
        self.nouns, self.verbs = read_lexicon()
        self.triggers = read_triggers()

    def stems(self, text):
        return [stem(t) for t in tokenize(text) if t not in self.stop]

    def types(self, text):
        toks = tokenize(text)
        found = set()
        for phrase, qtype in self.triggers:
            k = len(phrase)
            if any(tuple(toks[i:i + k]) == phrase for i in range(len(toks) - k + 1)):
                found.add(qtype)
        return found

    def trigger_phrases(self, qtype):
        return sorted({" ".join(p) for p, t in self.triggers if t == qtype})


# ---------------------------------------------------------------- features


def edit_distance(x, y):
    """Full (len(x)+1) x (len(y)+1) matrix."""
    d = [[0] * (len(y) + 1) for _ in range(len(x) + 1)]
    for i in range(len(x) + 1):
        d[i][0] = i
    for j in range(len(y) + 1):
        d[0][j] = j
    for i in range(1, len(x) + 1):
        for j in range(1, len(y) + 1):
            d[i][j] = min(d[i - 1][j] + 1, d[i][j - 1] + 1,
                          d[i - 1][j - 1] + (0 if x[i - 1] == y[j - 1] else 1))
    return d[len(x)][len(y)]


def similarities(sa, sb, ca, cb):
    """Five similarities from stem sequences ``sa``/``sb`` and char forms."""
    A, B = set(sa), set(sb)
    overlap = len(A & B) / min(len(A), len(B)) if A and B else 0.0
    bga = {(sa[i], sa[i + 1]) for i in range(len(sa) - 1)}
    bgb = {(sb[i], sb[i + 1]) for i in range(len(sb) - 1)}
    dice = 2 * len(bga & bgb) / (len(bga) + len(bgb)) if bga or bgb else 0.0
    vocab = sorted(A | B)
    va = [sa.count(t) for t in vocab]
    vb = [sb.count(t) for t in vocab]
    na = math.sqrt(sum(v * v for v in va))
    nb = math.sqrt(sum(v * v for v in vb))
    cos = sum(x * y for x, y in zip(va, vb)) / (na * nb) if na and nb else 0.0
    longest = max(len(ca), len(cb))
    lev = 1.0 - edit_distance(ca, cb) / longest if longest else 1.0
    jac = len(A & B) / len(A | B) if A | B else 0.0
    return [overlap, dice, cos, lev, jac]


def features(env, pq, hq):
    ta, tb = tokenize(pq), tokenize(hq)
    sa, sb = env.stems(pq), env.stems(hq)
    sims = similarities(sa, sb, " ".join(ta), " ".join(tb))

    def tagged(tokens, want):
        out = set()
        for t in tokens:
            tag = "NOUN" if t in env.nouns else ("VERB" if t in env.verbs else None)
            if tag == want:
                out.add(stem(t))
        return out

    morpho = sum(len(tagged(ta, k) & tagged(tb, k)) for k in ("NOUN", "VERB"))
    pa, pb = env.types(pq), env.types(hq)
    tm = 0 if not pa & pb else (2 if pa == pb else 1)
    return sims + [max(sims), sum(sims) / 5, len(ta) / len(tb), morpho, tm]


# ---------------------------------------------------------------- retrieval


def expanded_documents(env, pairs):
    """{pair_id: term list} for collection dicts, per the documented expansion."""
    docs = {}
    for p in pairs:
        terms = env.stems(p["question"])
        for syn in p["focus"].get("synonyms", []):
            terms += env.stems(syn)
        trig = set()
        for phrase in env.trigger_phrases(p["question_type"]):
            trig.update(env.stems(phrase))
        docs[p["id"]] = terms + sorted(trig)
    return docs


def corpus_stats(docs):
    N = len(docs)
    dl = {d: len(t) for d, t in docs.items()}
    df, cf = {}, {}
    for terms in docs.values():
        for t in set(terms):
            df[t] = df.get(t, 0) + 1
        for t in terms:
            cf[t] = cf.get(t, 0) + 1
    return N, dl, sum(dl.values()) / N, df, cf


def tfidf_scores(docs, query):
    N, _, _, df, _ = corpus_stats(docs)
    out = {}
    for d, terms in docs.items():
        s = 0.0
        for t in set(query):
            tf = terms.count(t)
            if tf:
                s += query.count(t) * tf * math.log(1 + N / df[t])
        if s > 0:
            out[d] = s
    return out


def inexpb2_scores(docs, query, c=1.0):
    N, dl, avg, df, cf = corpus_stats(docs)
    out = {}
    for d, terms in docs.items():
        s = 0.0
        for t in set(query):
            tf = terms.count(t)
            if not tf:
                continue
            n, F = df[t], cf[t]
            tfn = tf * math.log2(1 + c * avg / dl[d])
            ne = N * (1 - (1 - n / N) ** F)
            s += query.count(t) * (F + 1) / (n * (tfn + 1)) * tfn * math.log2((N + 1) / (ne + 0.5))
        if s > 0:
            out[d] = s
    return out


def order(scores):
    return sorted(scores, key=lambda d: (-scores[d], d))


# ---------------------------------------------------------------- classifier


def read_model(path):
    kv = {}
    for line in Path(path).read_text("utf-8").splitlines():
        if "=" in line:
            k, v = line.split("=", 1)
            kv[k.strip()] = v.strip()
    vec = lambda k: [float(x) for x in kv[k].split(",")]
    return {"w": vec("weights"), "b": float(kv["bias"]), "mu": vec("means"),
            "sd": vec("stds"), "threshold": float(kv["threshold"])}


def probability(model, x):
    z = model["b"] + sum(w * (xi - m) / s for w, xi, m, s in zip(model["w"], x, model["mu"], model["sd"]))
    return 1 / (1 + math.exp(-z))


def lr_loss(params, X, y, lam):
    """Mean negative log-likelihood plus (lam/2)*||w||^2, by explicit loops."""
    w, b = params[:-1], params[-1]
    total = 0.0
    for row, label in zip(X, y):
        z = sum(wi * xi for wi, xi in zip(w, row)) + b
        # log(1 + e^z) - label*z, written stably
        total += (max(z, 0) + math.log1p(math.exp(-abs(z)))) - label * z
    return total / len(X) + lam / 2 * sum(wi * wi for wi in w)


# ---------------------------------------------------------------- pipeline


def answer(env, pairs, model, pq, alpha=0.5, beta=0.5, n_max=100, top_k=10, threshold=0.5):
    """Whole answering procedure from the definitions; returns [(id, hscore)]."""
    docs = expanded_documents(env, pairs)
    q = env.stems(pq)
    a, b = tfidf_scores(docs, q), inexpb2_scores(docs, q)
    fused = {d: a.get(d, 0.0) + b.get(d, 0.0) for d in set(a) | set(b)}
    cands = order(fused)[:n_max]
    by_id = {p["id"]: p for p in pairs}
    rqe = {d: probability(model, features(env, pq, by_id[d]["question"])) for d in cands}
    max_ir = max((fused[d] for d in cands), default=0.0)
    max_rqe = max(rqe.values(), default=0.0)
    out = {}
    for d in cands:
        if rqe[d] >= threshold:
            out[d] = (alpha * (fused[d] / max_ir if max_ir > 0 else 0.0)
                      + beta * (rqe[d] / max_rqe if max_rqe > 0 else 0.0))
    return [(d, out[d]) for d in order(out)][:top_k]


def load_sample_pairs():
    return json.loads((DATA / "sample_collection.json").read_text("utf-8"))["pairs"]


# ---------------------------------------------------------------- metrics


def naive_metrics(run):
    """All report metrics for {qid: [grades]} by direct counting."""
    Q = len(run)
    firsts = [g[0] for g in run.values() if len(g) > 0]
    res = {"avg": sum(f - 1 for f in firsts) / Q}
    for i in (2, 3, 4):
        hits = len([f for f in firsts if f >= i])
        res[f"succ{i}"] = hits / Q
        res[f"prec{i}"] = hits / len(firsts) if firsts else None
    ap_sum = rr_sum = 0.0
    for grades in run.values():
        top = grades[:10]
        correct_ranks = [r + 1 for r in range(len(top)) if top[r] >= 3]
        if correct_ranks:
            ap_sum += sum((n + 1) / r for n, r in enumerate(correct_ranks)) / len(correct_ranks)
            rr_sum += 1 / correct_ranks[0]
    res["map"] = ap_sum / Q
    res["mrr"] = rr_sum / Q
    return res
