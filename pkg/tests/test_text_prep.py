import string

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from rqeqa.porter import porter_stem
from rqeqa.resources import data_path
from rqeqa.text_prep import (
    NormalizedText, PosLexicon, Tag, load_stoplist, preprocess, remove_stopwords,
    tag_pos, tokenize,
)

texty = st.text(alphabet=string.ascii_letters + string.digits + " -'’?.,!é_\t\n", max_size=80)


def test_tokenize_examples():
    assert tokenize("") == []
    assert tokenize("What is Tinnitus?") == ["what", "is", "tinnitus"]
    assert tokenize("Wolff-Parkinson-White syndrome") == ["wolff-parkinson-white", "syndrome"]


def test_tokenize_strips_edges_and_normalizes_quotes():
    assert tokenize("--hello-- 'world' Alzheimer’s") == ["hello", "world", "alzheimer's"]
    assert tokenize("under_score a-b- -c") == ["under", "score", "a-b", "c"]
    # decomposed e + combining acute composes to a single letter
    assert tokenize("Ménière") == tokenize("Ménière") == ["ménière"]


@given(texty)
def test_tokenize_matches_scanner_oracle(text):
    assert tokenize(text) == oracles.tokenize(text)


@given(texty)
def test_tokens_have_no_space_or_uppercase(text):
    for tok in tokenize(text):
        assert tok and not any(c.isspace() for c in tok) and tok == tok.lower()


def test_remove_stopwords_examples():
    assert remove_stopwords(["what", "is", "tinnitus"], {"what", "is"}) == ["tinnitus"]
    assert remove_stopwords([], {"a"}) == []
    assert remove_stopwords(["treatment", "for", "torticollis"], {"for"}) == ["treatment", "torticollis"]


@given(st.lists(st.text(max_size=6)))
def test_remove_stopwords_empty_stoplist_is_identity(tokens):
    assert remove_stopwords(tokens, set()) == tokens


@pytest.mark.parametrize("word", ["caresses", "ponies", "a", "is", "generalizations",
                                  "oscillators", "hopping", "relational", "agreed"])
def test_porter_examples_against_nltk(word):
    assert porter_stem(word) == oracles.stem(word)


def test_porter_spec_values():
    assert porter_stem("caresses") == "caress"
    assert porter_stem("ponies") == "poni"
    assert porter_stem("a") == "a"


@given(st.text(alphabet=string.ascii_lowercase, min_size=1, max_size=14))
@settings(max_examples=400)
def test_porter_matches_nltk_and_never_grows(word):
    out = porter_stem(word)
    assert out == oracles.stem(word)
    assert len(out) <= len(word)


def test_porter_matches_nltk_on_bundled_vocabulary():
    words = set()
    for name in ("pos_lexicon.tsv", "sample_collection.json", "sample_rqe_pairs.tsv", "triggers.tsv"):
        words.update(t for t in tokenize(data_path(name).read_text("utf-8")) if t.isalpha())
    bad = [w for w in sorted(words) if porter_stem(w) != oracles.stem(w)]
    assert not bad


def test_tag_pos_examples():
    assert tag_pos(["treatment"], PosLexicon(frozenset({"treatment"}))) == [Tag.NOUN]
    assert tag_pos(["zzzz"], PosLexicon()) == [Tag.OTHER]
    assert tag_pos(["treat"], PosLexicon(verb_entries=frozenset({"treat"}))) == [Tag.VERB]


def test_tag_pos_case_insensitive_and_noun_first():
    lex = PosLexicon(frozenset({"cause"}), frozenset({"cause"}))
    assert tag_pos(["Cause"], lex) == [Tag.NOUN]


@given(st.lists(st.sampled_from(["treat", "pain", "xyz", "the", "cure"])))
def test_tag_pos_one_tag_per_token(tokens):
    lex = PosLexicon(frozenset({"pain"}), frozenset({"treat", "cure"}))
    assert len(tag_pos(tokens, lex)) == len(tokens)


def test_preprocess_example(resources):
    nt = resources.preprocess("What is the treatment?")
    assert nt.tokens == ("what", "is", "the", "treatment")
    assert nt.content_stems == ("treatment",)
    assert nt.char_form == "what is the treatment"


def test_preprocess_inflections_follow_porter(resources):
    # Porter keeps "treatment" for the plural noun; the two verb forms share "treat"
    nt = resources.preprocess("Treatments treating treated")
    assert list(nt.content_stems) == [oracles.stem(w) for w in ("treatments", "treating", "treated")]
    assert nt.content_stems == ("treatment", "treat", "treat")


@given(texty)
def test_preprocess_is_pure(text):
    stop = load_stoplist(data_path("stopwords.txt"))
    a, b = preprocess(text, stop), preprocess(text, stop)
    assert a == b and isinstance(a, NormalizedText)
    # every content stem traces back to a surviving token
    survivors = [t for t in a.tokens if t not in stop]
    assert list(a.content_stems) == [porter_stem(t) for t in survivors]


def test_bundled_stoplist_is_pinned(resources):
    assert 100 <= len(resources.stoplist) <= 250
    assert {"what", "is", "the", "for"} <= resources.stoplist
    assert len(resources.checksums["stopwords.txt"]) == 64


def test_lexicon_file_errors(tmp_path):
    bad = tmp_path / "lex.tsv"
    bad.write_text("pain\tADJ\n")
    with pytest.raises(ValueError, match="unknown tag"):
        PosLexicon.from_file(bad)
