"""QA-pair collection: data model, loaders, validation and pattern-based
generation of pairs from structured article records."""

import hashlib
import json
import logging
import re
import xml.etree.ElementTree as ET
from dataclasses import dataclass, field
from pathlib import Path

from rqeqa.classifier import LabeledPair
from rqeqa.question_types import (
    DISEASE, DRUG, OTHER, FocusAnnotation, QuestionType,
    UnknownQuestionType, find_type,
)

log = logging.getLogger(__name__)

COLLECTION_FORMAT = "rqeqa-collection"
COLLECTION_VERSION = 1
TOPIC = "TOPIC"


class CollectionError(ValueError):
    pass


# free-text labels seen in distributed files -> taxonomy names
TYPE_ALIASES = {
    "information": "Information", "other information": "Information",
    "stages": "Information",
    "research": "Research", "clinical trials": "Research",
    "causes": "Causes", "cause": "Causes",
    "treatment": "Treatment", "treatments": "Treatment",
    "prevention": "Prevention",
    "exams and tests": "Diagnosis", "diagnosis": "Diagnosis",
    "outlook": "Prognosis", "prognosis": "Prognosis",
    "complications": "Complications", "symptoms": "Symptoms",
    "inheritance": "Inheritance", "susceptibility": "Susceptibility",
    "genetic changes": "GeneticChanges", "frequency": "Frequency",
    "considerations": "Considerations",
    "when to contact a medical professional": "ContactProfessional",
    "contact a medical professional": "ContactProfessional",
    "support groups": "SupportGroups",
    "interactions with medications": "InteractionMedications",
    "interactions with food": "InteractionFood",
    "interactions with herbs and supplements": "InteractionHerbsSupplements",
    "important warning": "ImportantWarning",
    "special instructions": "SpecialInstructions", "precautions": "SpecialInstructions",
    "brand names": "BrandNames", "brand names of combination products": "BrandNames",
    "how does it work": "HowDoesItWork", "how effective is it": "HowEffective",
    "indication": "Indication", "contraindication": "Contraindication",
    "how can i learn more": "LearnMore", "learn more": "LearnMore",
    "side effects": "SideEffects", "emergency or overdose": "EmergencyOverdose",
    "severe reaction": "SevereReaction", "forget a dose": "ForgetDose",
    "dietary": "Dietary", "why get vaccinated": "WhyGetVaccinated",
    "storage and disposal": "StorageDisposal", "usage": "Usage", "dose": "Dose",
}

_DRUG_SOURCES = re.compile(r"drug|herb|supplement", re.I)


@dataclass(frozen=True)
class QAPair:
    id: str
    question: str
    answer: str
    focus: FocusAnnotation
    question_type: QuestionType
    source: str = ""
    url: str = None

    def to_dict(self):
        f = self.focus
        focus = {"focus": f.focus, "synonyms": list(f.synonyms)}
        for key in ("cui", "semantic_type", "semantic_group"):
            if getattr(f, key) is not None:
                focus[key] = getattr(f, key)
        d = {"id": self.id, "question": self.question, "answer": self.answer,
             "focus": focus, "question_type": str(self.question_type),
             "source": self.source}
        if self.url is not None:
            d["url"] = self.url
        return d


class Collection:
    """Immutable, id-addressable sequence of QA pairs."""

    def __init__(self, pairs):
        self.pairs = tuple(pairs)
        self._by_id = {}
        for p in self.pairs:
            if p.id in self._by_id:
                raise CollectionError(f"duplicate pair id: {p.id!r}")
            self._by_id[p.id] = p

    def __len__(self):
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def __getitem__(self, pair_id):
        return self._by_id[pair_id]

    def __contains__(self, pair_id):
        return pair_id in self._by_id

    def __eq__(self, other):
        return isinstance(other, Collection) and self.pairs == other.pairs

    def to_json(self):
        doc = {"format": COLLECTION_FORMAT, "version": COLLECTION_VERSION,
               "pairs": [p.to_dict() for p in self.pairs]}
        return json.dumps(doc, ensure_ascii=False, indent=1, sort_keys=True) + "\n"

    def checksum(self):
        canonical = json.dumps([p.to_dict() for p in self.pairs],
                               ensure_ascii=False, sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(canonical.encode("utf-8")).hexdigest()

    def save(self, path):
        Path(path).write_text(self.to_json(), encoding="utf-8")


def resolve_type(label, source="", strict=False):
    """Map a type label to the taxonomy.

    Accepts ``CATEGORY/Name`` or, outside strict mode, a bare name or any
    alias from ``TYPE_ALIASES``. Unresolvable labels raise in strict mode and
    are carried through unchanged (category OTHER) otherwise, so that
    validation can report them.
    """
    label = label.strip()
    if "/" in label:
        category, _, name = label.partition("/")
        qtype = QuestionType(category.strip().upper(), name.strip())
        if qtype.is_known or not strict:
            return qtype
        raise UnknownQuestionType(f"not in taxonomy: {label!r}")
    if strict:
        raise UnknownQuestionType(f"strict mode needs CATEGORY/Name, got {label!r}")
    name = TYPE_ALIASES.get(label.lower(), label)
    preferred = DRUG if _DRUG_SOURCES.search(source or "") else DISEASE
    try:
        return find_type(name, preferred)
    except UnknownQuestionType:
        pass
    try:
        return find_type(name)
    except UnknownQuestionType:
        return QuestionType(OTHER, label)


def _pair_from_dict(d, strict, where):
    try:
        focus_d = d.get("focus") or {}
        if isinstance(focus_d, str):
            focus_d = {"focus": focus_d}
        focus = FocusAnnotation(
            focus=focus_d.get("focus", ""),
            synonyms=tuple(focus_d.get("synonyms", ())),
            cui=focus_d.get("cui"),
            semantic_type=focus_d.get("semantic_type"),
            semantic_group=focus_d.get("semantic_group"),
        )
        source = d.get("source", "")
        return QAPair(
            id=str(d["id"]), question=d.get("question", ""), answer=d.get("answer", ""),
            focus=focus,
            question_type=resolve_type(d.get("question_type", ""), source, strict),
            source=source, url=d.get("url"),
        )
    except KeyError as exc:
        raise CollectionError(f"{where}: missing field {exc}") from None
    except UnknownQuestionType as exc:
        raise CollectionError(f"{where}: {exc}") from None


def _load_json(text, path, strict):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CollectionError(f"{path}: parse error at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if isinstance(doc, dict):
        if doc.get("format", COLLECTION_FORMAT) != COLLECTION_FORMAT:
            raise CollectionError(f"{path}: unexpected format {doc.get('format')!r}")
        items = doc.get("pairs", [])
    elif isinstance(doc, list):
        items = doc
    else:
        raise CollectionError(f"{path}: expected an object with 'pairs' or a list")
    return [_pair_from_dict(d, strict, f"{path}: pair #{i}") for i, d in enumerate(items)]


def _text(el, tag):
    child = el.find(tag)
    return (child.text or "").strip() if child is not None else ""


def _load_medquad_xml(text, path, strict):
    """Reader for the public MedQuAD per-document XML layout."""
    try:
        root = ET.fromstring(text)
    except ET.ParseError as exc:
        line, col = exc.position
        raise CollectionError(f"{path}: parse error at line {line}, column {col}") from None
    docs = [root] if root.tag == "Document" else root.iter("Document")
    pairs = []
    for doc in docs:
        source = doc.get("source", "")
        url = doc.get("url")
        umls = doc.find("FocusAnnotations/UMLS")
        cui = sem_type = sem_group = None
        if umls is not None:
            cui = _text(umls, "CUIs/CUI") or None
            sem_type = _text(umls, "SemanticTypes/SemanticType") or None
            sem_group = _text(umls, "SemanticGroup") or None
        focus = FocusAnnotation(
            focus=_text(doc, "Focus"),
            synonyms=tuple((s.text or "").strip() for s in doc.iterfind("Synonyms/Synonym")),
            cui=cui, semantic_type=sem_type, semantic_group=sem_group,
        )
        for qa in doc.iterfind("QAPairs/QAPair"):
            q = qa.find("Question")
            if q is None:
                raise CollectionError(f"{path}: QAPair without Question in document {doc.get('id')}")
            pid = q.get("qid") or f"{doc.get('id')}-{qa.get('pid')}"
            try:
                qtype = resolve_type(q.get("qtype", ""), source, strict)
            except UnknownQuestionType as exc:
                raise CollectionError(f"{path}: {pid}: {exc}") from None
            pairs.append(QAPair(id=pid, question=(q.text or "").strip(),
                                answer=_text(qa, "Answer"), focus=focus,
                                question_type=qtype, source=source, url=url))
    return pairs


def load_collection(path, format=None, strict=False):
    path = Path(path)
    if format is None:
        format = "xml" if path.suffix.lower() == ".xml" else "json"
    text = path.read_text(encoding="utf-8")
    if not text.strip():
        raise CollectionError(f"{path}: empty collection")
    if format == "json":
        pairs = _load_json(text, path, strict)
    elif format == "xml":
        pairs = _load_medquad_xml(text, path, strict)
    else:
        raise ValueError(f"unknown collection format {format!r}")
    if not pairs:
        raise CollectionError(f"{path}: empty collection")
    return Collection(pairs)


@dataclass(frozen=True)
class Violation:
    pair_id: str
    field: str
    message: str

    def __str__(self):
        return f"{self.pair_id}: {self.field}: {self.message}"


def validate_collection(collection):
    """All invariant violations, in collection order; never raises."""
    out = []
    seen = set()
    for p in collection:
        if not p.id:
            out.append(Violation(p.id, "id", "empty id"))
        elif p.id in seen:
            out.append(Violation(p.id, "id", "duplicate id"))
        seen.add(p.id)
        if not p.question.strip():
            out.append(Violation(p.id, "question", "empty question"))
        if not p.answer.strip():
            out.append(Violation(p.id, "answer", "empty answer"))
        if not p.focus.focus.strip():
            out.append(Violation(p.id, "focus", "empty focus"))
        for dup in p.focus.duplicate_synonyms():
            out.append(Violation(p.id, "focus.synonyms", f"duplicate synonym {dup!r}"))
        if not p.question_type.is_known:
            out.append(Violation(p.id, "question_type", f"{p.question_type} not in taxonomy"))
    return out


@dataclass(frozen=True)
class ArticleRecord:
    topic: str
    category: str
    sections: tuple  # of (title, body)
    synonyms: tuple = ()
    source: str = ""
    url: str = None

    @classmethod
    def from_dict(cls, d):
        return cls(topic=d["topic"], category=d.get("category", DISEASE).upper(),
                   sections=tuple((s["title"], s["body"]) for s in d.get("sections", ())),
                   synonyms=tuple(d.get("synonyms", ())), source=d.get("source", ""),
                   url=d.get("url"))


def load_articles(path):
    doc = json.loads(Path(path).read_text(encoding="utf-8"))
    items = doc["articles"] if isinstance(doc, dict) else doc
    return [ArticleRecord.from_dict(d) for d in items]


@dataclass(frozen=True)
class PatternRule:
    section: str
    qtype: QuestionType
    template: str
    match: str = "exact"  # or "prefix"

    def matches(self, title):
        title, want = title.strip().casefold(), self.section.strip().casefold()
        return title == want if self.match == "exact" else title.startswith(want)


@dataclass(frozen=True)
class PatternConfig:
    rules: tuple = ()

    @classmethod
    def from_dict(cls, d):
        rules = []
        for i, r in enumerate(d.get("rules", [])):
            try:
                qtype = QuestionType(r["category"].upper(), r["type"])
                rule = PatternRule(r["section"], qtype, r["template"], r.get("match", "exact"))
            except (KeyError, AttributeError, TypeError) as exc:
                raise CollectionError(f"pattern rule #{i}: missing or bad field {exc}") from None
            if not qtype.is_known:
                raise CollectionError(f"pattern rule #{i}: {qtype} not in taxonomy")
            if rule.template.count(TOPIC) != 1:
                raise CollectionError(f"pattern rule #{i}: template needs exactly one {TOPIC}")
            if rule.match not in ("exact", "prefix"):
                raise CollectionError(f"pattern rule #{i}: match must be exact or prefix")
            rules.append(rule)
        return cls(tuple(rules))

    @classmethod
    def load(cls, path):
        try:
            doc = json.loads(Path(path).read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise CollectionError(f"{path}: parse error at line {exc.lineno}, column {exc.colno}") from None
        if not isinstance(doc, dict):
            raise CollectionError(f"{path}: expected an object with 'rules'")
        return cls.from_dict(doc)


def _slug(text):
    return re.sub(r"[^a-z0-9]+", "-", text.lower()).strip("-") or "topic"


def _dedupe(names, exclude=""):
    seen, out = {exclude.casefold()}, []
    for n in names:
        n = n.strip()
        if n and n.casefold() not in seen:
            seen.add(n.casefold())
            out.append(n)
    return tuple(out)


def generate_qa_pairs(article, config):
    """Pairs for every section matched by a rule (first rule wins).

    Returns ``(pairs, skipped_titles)``.
    """
    focus = FocusAnnotation(article.topic, _dedupe(article.synonyms, article.topic))
    pairs, skipped = [], []
    for i, (title, body) in enumerate(article.sections):
        rule = next((r for r in config.rules if r.matches(title)), None)
        if rule is None or not body.strip():
            skipped.append(title)
            continue
        pairs.append(QAPair(
            id=f"{_slug(article.source or 'src')}-{_slug(article.topic)}-{i + 1}",
            question=rule.template.replace(TOPIC, article.topic),
            answer=body.strip(), focus=focus, question_type=rule.qtype,
            source=article.source, url=article.url,
        ))
    if skipped:
        log.info("%s: skipped %d section(s): %s", article.topic, len(skipped), ", ".join(skipped))
    return pairs, skipped


def _xml_pairs(text, path):
    try:
        root = ET.fromstring(text)
    except ET.ParseError as exc:
        line, col = exc.position
        raise CollectionError(f"{path}: parse error at line {line}, column {col}") from None
    out = []
    for el in root.iter("pair"):
        value = (el.get("value") or "").strip().lower()
        if value not in ("true", "false"):
            raise CollectionError(f"{path}: pair {el.get('pid')}: bad value {value!r}")
        out.append(LabeledPair(_text(el, "chq"), _text(el, "faq"), value == "true"))
    return out


def load_pair_dataset(path):
    """Labeled question pairs from ``<premise>\\t<hypothesis>\\t<0|1>`` lines.

    Files ending in ``.xml`` are read as ``<pair value="true|false">`` records
    with ``<chq>``/``<faq>`` children.
    """
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    if path.suffix.lower() == ".xml":
        pairs = _xml_pairs(text, path)
    else:
        pairs = []
        for lineno, line in enumerate(text.splitlines(), 1):
            if not line.strip():
                continue
            parts = line.split("\t")
            if len(parts) != 3 or parts[2].strip() not in ("0", "1") \
                    or not parts[0].strip() or not parts[1].strip():
                raise CollectionError(f"{path}:{lineno}: expected '<premise>\\t<hypothesis>\\t<0|1>'")
            pairs.append(LabeledPair(parts[0].strip(), parts[1].strip(), parts[2].strip() == "1"))
    if not pairs:
        raise CollectionError(f"{path}: no pairs")
    pos = sum(p.label for p in pairs)
    log.info("%s: %d pairs (%d positive, %d negative)", path, len(pairs), pos, len(pairs) - pos)
    return pairs

