"""Consumer health question answering by recognizing question entailment.

A user question is matched against a collection of trusted question-answer
pairs: an inverted index proposes candidate questions, a logistic-regression
entailment classifier filters them, and survivors are ranked by a blend of
both scores.
"""

from rqeqa.classifier import EntailmentModel, TrainConfig, cross_validate, train
from rqeqa.collection import Collection, QAPair, load_collection, validate_collection
from rqeqa.features import FeatureVector, extract_features
from rqeqa.index import InvertedIndex, build_index
from rqeqa.pipeline import PipelineConfig, answer
from rqeqa.resources import Resources, default_resources
from rqeqa.text_prep import preprocess, tokenize

__version__ = "0.1.0"

__all__ = [
    "Collection", "EntailmentModel", "FeatureVector", "InvertedIndex", "PipelineConfig",
    "QAPair", "Resources", "TrainConfig", "answer", "build_index", "cross_validate",
    "default_resources", "extract_features", "load_collection", "preprocess", "tokenize",
    "train", "validate_collection",
]
