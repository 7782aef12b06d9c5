"""Logistic-regression entailment classifier over pair feature vectors."""

import hashlib
import logging
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from rqeqa.features import FEATURE_NAMES, FeatureVector, extract_features

log = logging.getLogger(__name__)

MODEL_FORMAT = "rqeqa-lr-model"
MODEL_VERSION = 1
N_FEATURES = len(FEATURE_NAMES)


class TrainingError(ValueError):
    pass


class NonFiniteFeature(ValueError):
    pass


@dataclass(frozen=True)
class LabeledPair:
    premise: str
    hypothesis: str
    label: bool


@dataclass(frozen=True)
class TrainConfig:
    learning_rate: float = 0.1
    epochs: int = 500
    l2_lambda: float = 1e-4
    seed: int = 13
    convergence_tol: float = 1e-7

    def __post_init__(self):
        if self.learning_rate <= 0 or self.epochs <= 0 or self.convergence_tol <= 0:
            raise ValueError("learning_rate, epochs and convergence_tol must be positive")
        if self.l2_lambda < 0:
            raise ValueError("l2_lambda must be non-negative")


@dataclass
class EntailmentModel:
    weights: np.ndarray
    bias: float
    feature_means: np.ndarray
    feature_stds: np.ndarray
    threshold: float = 0.5
    training_checksum: str = ""
    # filled by train(); not persisted
    history: list = field(default_factory=list, repr=False, compare=False)

    def __post_init__(self):
        if not 0 < self.threshold < 1:
            raise ValueError(f"threshold must lie in (0, 1), got {self.threshold}")
        if not (np.isfinite(self.weights).all() and np.isfinite(self.bias)):
            raise ValueError("model weights must be finite")
        if not (np.asarray(self.feature_stds) > 0).all():
            raise ValueError("feature stds must be positive")

    def standardize(self, X):
        return (np.asarray(X, dtype=float) - self.feature_means) / self.feature_stds

    @property
    def params(self):
        return np.append(self.weights, self.bias)

    def save(self, path):
        Path(path).write_text(dumps_model(self), encoding="utf-8")

    @classmethod
    def load(cls, path):
        return loads_model(Path(path).read_text(encoding="utf-8"))


def _floats(values):
    return ",".join(repr(float(v)) for v in values)


def dumps_model(model):
    lines = [
        f"format = {MODEL_FORMAT}",
        f"version = {MODEL_VERSION}",
        f"feature_order = {','.join(FEATURE_NAMES)}",
        f"weights = {_floats(model.weights)}",
        f"bias = {float(model.bias)!r}",
        f"means = {_floats(model.feature_means)}",
        f"stds = {_floats(model.feature_stds)}",
        f"threshold = {float(model.threshold)!r}",
        f"training_checksum = {model.training_checksum}",
    ]
    return "\n".join(lines) + "\n"


def loads_model(text):
    kv = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip() or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise ValueError(f"model file line {lineno}: expected 'key = value'")
        kv[key.strip()] = value.strip()
    if kv.get("format") != MODEL_FORMAT:
        raise ValueError(f"not a model file (format={kv.get('format')!r})")
    if int(kv.get("version", -1)) != MODEL_VERSION:
        raise ValueError(f"unsupported model version {kv.get('version')}")
    if tuple(kv["feature_order"].split(",")) != FEATURE_NAMES:
        raise ValueError("model feature order does not match this build")

    def vec(key):
        arr = np.array([float(x) for x in kv[key].split(",")])
        if arr.shape != (N_FEATURES,):
            raise ValueError(f"{key}: expected {N_FEATURES} values")
        return arr

    return EntailmentModel(
        weights=vec("weights"), bias=float(kv["bias"]),
        feature_means=vec("means"), feature_stds=vec("stds"),
        threshold=float(kv["threshold"]),
        training_checksum=kv.get("training_checksum", ""),
    )


def sigmoid(z):
    z = np.asarray(z, dtype=float)
    return np.where(z >= 0, 1.0 / (1.0 + np.exp(-np.abs(z))),
                    np.exp(-np.abs(z)) / (1.0 + np.exp(-np.abs(z))))


def loss_and_gradient(params, X, y, l2_lambda):
    """Mean NLL plus (l2/2)*||w||^2 and its gradient over (w..., b).

    ``X`` is the standardized batch (n x d); ``params`` holds d weights then
    the bias, which is not regularized.
    """
    X = np.asarray(X, dtype=float)
    y = np.asarray(y, dtype=float)
    if X.shape[0] == 0:
        raise ValueError("empty batch")
    w, b = params[:-1], params[-1]
    z = X @ w + b
    loss = float(np.mean(np.logaddexp(0.0, z) - y * z) + 0.5 * l2_lambda * (w @ w))
    resid = sigmoid(z) - y
    grad = np.empty_like(params, dtype=float)
    grad[:-1] = X.T @ resid / X.shape[0] + l2_lambda * w
    grad[-1] = resid.mean()
    return loss, grad


def _check_finite(X, pairs=None):
    bad = ~np.isfinite(X).all(axis=1)
    if bad.any():
        i = int(np.flatnonzero(bad)[0])
        where = f"pair {i}"
        if pairs is not None:
            where += f" ({pairs[i].premise!r} / {pairs[i].hypothesis!r})"
        raise NonFiniteFeature(f"non-finite feature in {where}")


def feature_matrix(pairs, resources):
    rows = []
    for i, p in enumerate(pairs):
        try:
            rows.append(extract_features(p.premise, p.hypothesis, resources).as_list())
        except ValueError as exc:
            raise TrainingError(f"pair {i}: {exc}") from exc
    X = np.array(rows, dtype=float).reshape(len(rows), N_FEATURES)
    _check_finite(X, pairs)
    return X


def pairs_checksum(pairs):
    h = hashlib.sha256()
    for p in pairs:
        h.update(f"{p.premise}\t{p.hypothesis}\t{int(p.label)}\n".encode("utf-8"))
    return h.hexdigest()


def fit(X, y, config=TrainConfig(), threshold=0.5):
    """Fit on a raw feature matrix; returns a model with frozen scaling stats."""
    X = np.asarray(X, dtype=float)
    y = np.asarray(y, dtype=float)
    if X.ndim != 2 or X.shape[0] < 2:
        raise TrainingError("need at least two training pairs")
    if len(set(y.tolist())) < 2:
        raise TrainingError("degenerate training set: only one class present")
    _check_finite(X)
    means = X.mean(axis=0)
    stds = X.std(axis=0)
    stds[stds == 0] = 1.0
    Z = (X - means) / stds

    params = np.zeros(X.shape[1] + 1)
    lr = config.learning_rate
    loss, grad = loss_and_gradient(params, Z, y, config.l2_lambda)
    history = [loss]
    for _ in range(config.epochs):
        candidate = params - lr * grad
        new_loss, new_grad = loss_and_gradient(candidate, Z, y, config.l2_lambda)
        while new_loss > loss and lr > 1e-12:
            lr /= 2
            candidate = params - lr * grad
            new_loss, new_grad = loss_and_gradient(candidate, Z, y, config.l2_lambda)
        delta = loss - new_loss
        params, loss, grad = candidate, new_loss, new_grad
        history.append(loss)
        if abs(delta) < config.convergence_tol:
            break
    log.debug("trained %d epochs, final loss %.6g", len(history) - 1, loss)
    return EntailmentModel(weights=params[:-1].copy(), bias=float(params[-1]),
                           feature_means=means, feature_stds=stds,
                           threshold=threshold, history=history)


def train(pairs, config=TrainConfig(), resources=None):
    if resources is None:
        from rqeqa.resources import default_resources
        resources = default_resources()
    if len(pairs) < 2:
        raise TrainingError("need at least two training pairs")
    if len({p.label for p in pairs}) < 2:
        raise TrainingError("degenerate training set: only one class present")
    X = feature_matrix(pairs, resources)
    y = np.array([float(p.label) for p in pairs])
    model = fit(X, y, config)
    model.training_checksum = pairs_checksum(pairs)
    return model


def _as_array(fv):
    x = np.array(fv.as_list() if isinstance(fv, FeatureVector) else fv, dtype=float)
    if not np.isfinite(x).all():
        raise NonFiniteFeature(f"non-finite feature vector: {x}")
    return x


def logit(model, fv):
    return float(model.standardize(_as_array(fv)) @ model.weights + model.bias)


def predict_proba(model, fv):
    return float(sigmoid(logit(model, fv)))


def classify(model, fv, threshold=None):
    t = model.threshold if threshold is None else threshold
    return predict_proba(model, fv) >= t


@dataclass(frozen=True)
class ClassifierMetrics:
    accuracy: float
    precision: float
    recall: float
    f1: float
    n: int


def binary_metrics(y_true, y_pred):
    y_true = [bool(v) for v in y_true]
    y_pred = [bool(v) for v in y_pred]
    if not y_true:
        raise ValueError("no examples")
    tp = sum(t and p for t, p in zip(y_true, y_pred))
    fp = sum(p and not t for t, p in zip(y_true, y_pred))
    fn = sum(t and not p for t, p in zip(y_true, y_pred))
    correct = sum(t == p for t, p in zip(y_true, y_pred))
    precision = tp / (tp + fp) if tp + fp else 0.0
    recall = tp / (tp + fn) if tp + fn else 0.0
    f1 = 2 * precision * recall / (precision + recall) if precision + recall else 0.0
    return ClassifierMetrics(correct / len(y_true), precision, recall, f1, len(y_true))


def evaluate_classifier(model, pairs, resources=None):
    if resources is None:
        from rqeqa.resources import default_resources
        resources = default_resources()
    X = feature_matrix(pairs, resources)
    probs = sigmoid(model.standardize(X) @ model.weights + model.bias)
    return binary_metrics([p.label for p in pairs], probs >= model.threshold)


def cross_validate(pairs, k=10, config=TrainConfig(), resources=None):
    """Mean accuracy over ``k`` shuffled folds (shuffle seeded by ``config.seed``)."""
    if resources is None:
        from rqeqa.resources import default_resources
        resources = default_resources()
    if len(pairs) < k:
        raise ValueError(f"need at least {k} pairs for {k}-fold CV")
    X = feature_matrix(pairs, resources)
    y = np.array([float(p.label) for p in pairs])
    order = np.random.default_rng(config.seed).permutation(len(pairs))
    folds = np.array_split(order, k)
    correct = 0
    for fold in folds:
        train_idx = np.setdiff1d(order, fold)
        model = fit(X[train_idx], y[train_idx], config)
        probs = sigmoid(model.standardize(X[fold]) @ model.weights + model.bias)
        correct += int(np.sum((probs >= model.threshold) == (y[fold] == 1.0)))
    return correct / len(pairs)
