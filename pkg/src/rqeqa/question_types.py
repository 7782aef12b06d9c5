"""Question-type taxonomy, trigger lexicon and the type-match feature."""

from dataclasses import dataclass, field
from pathlib import Path

from rqeqa.text_prep import tokenize

DISEASE = "DISEASE"
DRUG = "DRUG"
OTHER = "OTHER"
CATEGORIES = (DISEASE, DRUG, OTHER)

DISEASE_TYPES = (
    "Information", "Research", "Causes", "Treatment", "Prevention",
    "Diagnosis", "Prognosis", "Complications", "Symptoms", "Inheritance",
    "Susceptibility", "GeneticChanges", "Frequency", "Considerations",
    "ContactProfessional", "SupportGroups",
)
DRUG_TYPES = (
    "Information", "InteractionMedications", "InteractionFood",
    "InteractionHerbsSupplements", "ImportantWarning", "SpecialInstructions",
    "BrandNames", "HowDoesItWork", "HowEffective", "Indication",
    "Contraindication", "LearnMore", "SideEffects", "EmergencyOverdose",
    "SevereReaction", "ForgetDose", "Dietary", "WhyGetVaccinated",
    "StorageDisposal", "Usage", "Dose",
)
OTHER_TYPES = ("Information",)

_INVENTORY = {DISEASE: DISEASE_TYPES, DRUG: DRUG_TYPES, OTHER: OTHER_TYPES}


class UnknownQuestionType(ValueError):
    pass


@dataclass(frozen=True, order=True)
class QuestionType:
    category: str
    name: str

    def __str__(self):
        return f"{self.category}/{self.name}"

    @property
    def is_known(self):
        return self.name in _INVENTORY.get(self.category, ())

    @classmethod
    def parse(cls, text):
        """Parse ``CATEGORY/Name``."""
        category, sep, name = text.partition("/")
        if not sep:
            raise UnknownQuestionType(f"expected CATEGORY/Name, got {text!r}")
        qtype = cls(category.strip().upper(), name.strip())
        if not qtype.is_known:
            raise UnknownQuestionType(f"not in taxonomy: {text!r}")
        return qtype


def all_types():
    return [QuestionType(cat, name) for cat in CATEGORIES for name in _INVENTORY[cat]]


def find_type(name, category=None):
    """Resolve a bare taxonomy name, preferring ``category`` when given."""
    cats = [category] if category else list(CATEGORIES)
    for cat in cats:
        if name in _INVENTORY.get(cat, ()):
            return QuestionType(cat, name)
    raise UnknownQuestionType(f"not in taxonomy: {name!r} (category {category})")


@dataclass(frozen=True)
class FocusAnnotation:
    focus: str
    synonyms: tuple = ()
    cui: str = None
    semantic_type: str = None
    semantic_group: str = None

    def duplicate_synonyms(self):
        seen, dups = set(), []
        for s in self.synonyms:
            key = s.casefold()
            if key in seen:
                dups.append(s)
            seen.add(key)
        return dups


@dataclass
class TriggerLexicon:
    entries: dict = field(default_factory=dict)  # phrase -> set[QuestionType]

    def add(self, phrase, qtype):
        phrase = " ".join(tokenize(phrase))
        if not phrase:
            raise ValueError("empty trigger phrase")
        if not qtype.is_known:
            raise UnknownQuestionType(str(qtype))
        self.entries.setdefault(phrase, set()).add(qtype)
        self.__dict__.pop("_by_first", None)

    @classmethod
    def from_file(cls, path):
        lex = cls()
        for lineno, line in enumerate(Path(path).read_text("utf-8").splitlines(), 1):
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            parts = line.rstrip("\n").split("\t")
            if len(parts) != 3:
                raise ValueError(f"{path}:{lineno}: expected '<phrase>\\t<CATEGORY>\\t<TypeName>'")
            phrase, category, name = parts
            qtype = QuestionType(category.strip(), name.strip())
            if not qtype.is_known:
                raise UnknownQuestionType(f"{path}:{lineno}: {qtype} not in taxonomy")
            lex.add(phrase, qtype)
        return lex

    def _index(self):
        # first token -> list of (token tuple, types)
        idx = self.__dict__.get("_by_first")
        if idx is None:
            idx = {}
            for phrase, types in self.entries.items():
                toks = tuple(phrase.split(" "))
                idx.setdefault(toks[0], []).append((toks, types))
            self.__dict__["_by_first"] = idx
        return idx


def matching_triggers(question, lexicon):
    """All trigger phrases occurring as contiguous token runs in ``question``."""
    tokens = tokenize(question)
    idx = lexicon._index()
    found = []
    for i, tok in enumerate(tokens):
        for toks, _ in idx.get(tok, ()):
            if tuple(tokens[i:i + len(toks)]) == toks:
                found.append(" ".join(toks))
    return found


def detect_types(question, lexicon):
    types = set()
    for phrase in matching_triggers(question, lexicon):
        types |= lexicon.entries[phrase]
    return frozenset(types)


def type_match_feature(pq_types, hq_types):
    """2 for identical nonempty type sets, 1 for partial overlap, else 0."""
    pq_types, hq_types = set(pq_types), set(hq_types)
    if not pq_types & hq_types:
        return 0
    return 2 if pq_types == hq_types else 1


def expand_triggers(qtype, lexicon):
    if not qtype.is_known:
        raise UnknownQuestionType(str(qtype))
    return sorted(p for p, types in lexicon.entries.items() if qtype in types)
