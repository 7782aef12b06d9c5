"""Command-line interface: build-index, train-rqe, eval-rqe, ask, batch-eval,
gen-collection, validate."""

import argparse
import dataclasses
import json
import logging
import sys
from pathlib import Path

from rqeqa.classifier import (
    EntailmentModel, TrainConfig, TrainingError, cross_validate,
    evaluate_classifier, train,
)
from rqeqa.collection import (
    Collection, CollectionError, PatternConfig, generate_qa_pairs, load_articles,
    load_collection, load_pair_dataset, validate_collection,
)
from rqeqa.evaluation import judge_run, metric_report, read_judgments
from rqeqa.index import InvertedIndex, InvalidIndex, StaleIndex, build_index
from rqeqa.pipeline import PipelineConfig, answer, explain, to_jsonl, trec_run_lines
from rqeqa.resources import Resources, data_path, default_resources

log = logging.getLogger("rqeqa")

CONFIG_KEYS = {
    "collection", "index", "model", "resources", "alpha", "beta", "n_max",
    "top_k", "threshold", "c", "fallback_to_ir", "json", "seed",
}
DEFAULTS = {
    "collection": None, "index": None, "model": None, "resources": None,
    "alpha": 0.5, "beta": 0.5, "n_max": 100, "top_k": 10, "threshold": 0.5,
    "c": 1.0, "fallback_to_ir": False, "json": False, "seed": 13,
}


class CliError(Exception):
    pass


def _load_config_file(path):
    if path is None:
        return {}
    try:
        cfg = json.loads(Path(path).read_text(encoding="utf-8"))
    except FileNotFoundError:
        raise CliError(f"config file not found: {path}") from None
    except json.JSONDecodeError as exc:
        raise CliError(f"{path}: invalid JSON at line {exc.lineno}: {exc.msg}") from None
    unknown = set(cfg) - CONFIG_KEYS
    if unknown:
        raise CliError(f"{path}: unknown config keys: {', '.join(sorted(unknown))}")
    return cfg


def effective_config(args):
    """Flags override the config file, which overrides built-in defaults."""
    cfg = dict(DEFAULTS)
    cfg.update(_load_config_file(args.config))
    for key in CONFIG_KEYS:
        value = getattr(args, key, None)
        if value is not None:
            cfg[key] = value
    return cfg


def _pipeline_config(cfg):
    try:
        return PipelineConfig(alpha=cfg["alpha"], beta=cfg["beta"], n_max=cfg["n_max"],
                              top_k=cfg["top_k"], entailment_threshold=cfg["threshold"],
                              c=cfg["c"], fallback_to_ir=cfg["fallback_to_ir"])
    except ValueError as exc:
        raise CliError(f"invalid pipeline configuration: {exc}") from None


def _resources(cfg):
    return Resources.load(cfg["resources"]) if cfg["resources"] else default_resources()


def _read_collection(path):
    if not Path(path).exists():
        raise CliError(f"collection file not found: {path}")
    return load_collection(path)


def _system(cfg, force):
    """Collection, index, model and resources for answering."""
    resources = _resources(cfg)
    collection = _read_collection(cfg["collection"] or data_path("sample_collection.json"))
    if cfg["index"]:
        if not Path(cfg["index"]).exists():
            raise CliError(f"index file not found: {cfg['index']}")
        index = InvertedIndex.load(cfg["index"])
        try:
            index.check_collection(collection)
        except StaleIndex as exc:
            if not force:
                raise CliError(f"{exc} (use --force to override)") from None
            log.warning("%s; continuing because of --force", exc)
    else:
        index = build_index(collection, resources)
    model_path = cfg["model"] or data_path("reference_model.txt")
    if not Path(model_path).exists():
        raise CliError(f"model file not found: {model_path}")
    return collection, index, EntailmentModel.load(model_path), resources


def _emit(args, cfg, record, text):
    print(json.dumps(record, sort_keys=True) if cfg["json"] else text)


def cmd_build_index(args, cfg):
    path = args.collection or cfg["collection"]
    if not path:
        raise CliError("--collection is required")
    collection = _read_collection(path)
    violations = validate_collection(collection)
    if violations:
        raise CliError(f"invalid collection ({len(violations)} violation(s)); first: {violations[0]}")
    index = build_index(collection, _resources(cfg))
    index.save(args.output)
    _emit(args, cfg,
          {"N": index.n_docs, "vocabulary": index.vocabulary_size,
           "avg_dl": index.avg_doc_length, "output": str(args.output)},
          f"N={index.n_docs} vocabulary={index.vocabulary_size} "
          f"avg_dl={index.avg_doc_length:.4f} -> {args.output}")
    return 0


def cmd_train_rqe(args, cfg):
    if not 0 < cfg["threshold"] < 1:
        raise CliError(f"threshold must lie in (0, 1), got {cfg['threshold']}")
    pairs = load_pair_dataset(args.pairs)
    config = TrainConfig(learning_rate=args.learning_rate, epochs=args.epochs,
                         l2_lambda=args.l2, seed=cfg["seed"])
    resources = _resources(cfg)
    try:
        model = train(pairs, config, resources)
    except TrainingError as exc:
        raise CliError(str(exc)) from None
    model.threshold = cfg["threshold"]
    model.save(args.output)
    metrics = evaluate_classifier(model, pairs, resources)
    epochs = len(model.history) - 1
    _emit(args, cfg,
          {"pairs": len(pairs), "epochs": epochs, "final_loss": model.history[-1],
           "train_accuracy": metrics.accuracy, "output": str(args.output)},
          f"pairs={len(pairs)} epochs={epochs} final_loss={model.history[-1]:.6f} "
          f"train_accuracy={metrics.accuracy:.4f} -> {args.output}")
    return 0


def cmd_eval_rqe(args, cfg):
    pairs = load_pair_dataset(args.pairs)
    resources = _resources(cfg)
    if args.cv:
        acc = cross_validate(pairs, args.cv, TrainConfig(seed=cfg["seed"]), resources)
        _emit(args, cfg, {"folds": args.cv, "pairs": len(pairs), "accuracy": acc},
              f"{args.cv}-fold CV accuracy over {len(pairs)} pairs: {acc:.4f}")
        return 0
    model_path = cfg["model"] or data_path("reference_model.txt")
    m = evaluate_classifier(EntailmentModel.load(model_path), pairs, resources)
    _emit(args, cfg, dataclasses.asdict(m),
          f"n={m.n} accuracy={m.accuracy:.4f} precision={m.precision:.4f} "
          f"recall={m.recall:.4f} f1={m.f1:.4f}")
    return 0


def cmd_ask(args, cfg):
    pconf = _pipeline_config(cfg)
    collection, index, model, resources = _system(cfg, args.force)
    result = answer(args.question, index, collection, model, resources, pconf)
    if cfg["json"]:
        lines = []
        for rank, cand in enumerate(result, 1):
            rec = cand.to_record()
            rec["rank"] = rank
            if args.explain:
                rec["explanation"] = explain(cand, pconf.entailment_threshold)
            lines.append(json.dumps(rec, ensure_ascii=False, sort_keys=True))
        if lines:
            print("\n".join(lines))
    else:
        if not result.candidates:
            print(f"no answers: {result.diagnostic}")
        for rank, cand in enumerate(result, 1):
            score = cand.hybrid_score if cand.hybrid_score is not None else float("nan")
            print(f"{rank:>2}. [{cand.pair_id}] {cand.hq_text}  "
                  f"(hybrid={score:.4f} ir={cand.ir_score:.4f} rqe={cand.rqe_score:.4f})")
            print(f"    {cand.answer_text}")
            if args.explain:
                print("    " + json.dumps(explain(cand, pconf.entailment_threshold), sort_keys=True))
    if cfg["json"] and not result.candidates:
        print(f"no answers: {result.diagnostic}", file=sys.stderr)
    return 0


def _read_questions(path):
    if not Path(path).exists():
        raise CliError(f"questions file not found: {path}")
    questions = []
    for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        if not line.strip() or line.startswith("#"):
            continue
        qid, sep, text = line.partition("\t")
        if not sep or not text.strip():
            raise CliError(f"{path}:{lineno}: expected '<qid>\\t<question>'")
        questions.append((qid.strip(), text.strip()))
    if not questions:
        raise CliError(f"{path}: no questions")
    return questions


def cmd_batch_eval(args, cfg):
    questions = _read_questions(args.questions)
    if not Path(args.judgments).exists():
        raise CliError(f"judgments file not found: {args.judgments}")
    judgments = read_judgments(args.judgments, args.keyed)
    pconf = _pipeline_config(cfg)
    collection, index, model, resources = _system(cfg, args.force)
    run_lines, ranked = [], {}
    for qid, text in sorted(questions):
        result = answer(text, index, collection, model, resources, pconf)
        ranked[qid] = [c.pair_id for c in result]
        run_lines += trec_run_lines(qid, result, args.tag)
    run_text = "\n".join(run_lines) + ("\n" if run_lines else "")
    if args.run_out:
        Path(args.run_out).write_text(run_text, encoding="utf-8")
    report = metric_report(judge_run(ranked, judgments, [q for q, _ in sorted(questions)], args.keyed))
    if args.report_out:
        Path(args.report_out).write_text(report.to_json() + "\n", encoding="utf-8")
    print(report.to_json() if cfg["json"] else report.to_table())
    return 0


def cmd_gen_collection(args, cfg):
    try:
        config = PatternConfig.load(args.patterns)
    except (FileNotFoundError, CollectionError) as exc:
        raise CliError(f"bad pattern config: {exc}") from None
    pairs, n_skipped = [], 0
    for article in load_articles(args.articles):
        generated, skipped = generate_qa_pairs(article, config)
        pairs += generated
        n_skipped += len(skipped)
    Collection(pairs).save(args.output)
    _emit(args, cfg, {"pairs": len(pairs), "skipped_sections": n_skipped, "output": str(args.output)},
          f"pairs={len(pairs)} skipped_sections={n_skipped} -> {args.output}")
    return 0


def cmd_validate(args, cfg):
    path = args.collection or cfg["collection"]
    if not path:
        raise CliError("--collection is required")
    collection = _read_collection(path)
    violations = validate_collection(collection)
    for v in violations:
        print(json.dumps(dataclasses.asdict(v), sort_keys=True) if cfg["json"] else str(v))
    if not cfg["json"]:
        print(f"{len(collection)} pairs, {len(violations)} violation(s)")
    return 1 if violations else 0


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON config file")
    common.add_argument("--json", action="store_true", default=None, help="JSON output")
    common.add_argument("--verbose", "-v", action="store_true")
    common.add_argument("--seed", type=int)
    common.add_argument("--force", action="store_true", help="ignore index/collection checksum mismatch")
    common.add_argument("--resources", help="directory with stopwords/lexicon/trigger files")

    pipeline = argparse.ArgumentParser(add_help=False)
    pipeline.add_argument("--collection")
    pipeline.add_argument("--index")
    pipeline.add_argument("--model")
    pipeline.add_argument("--alpha", type=float)
    pipeline.add_argument("--beta", type=float)
    pipeline.add_argument("--n-max", dest="n_max", type=int)
    pipeline.add_argument("--top-k", dest="top_k", type=int)
    pipeline.add_argument("--threshold", type=float)
    pipeline.add_argument("-c", dest="c", type=float, help="In_expB2 length-normalization constant")
    pipeline.add_argument("--fallback-to-ir", dest="fallback_to_ir", action="store_true", default=None)

    parser = argparse.ArgumentParser(prog="rqeqa", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build-index", parents=[common], help="index a collection")
    p.add_argument("--collection")
    p.add_argument("--output", "-o", required=True)
    p.set_defaults(func=cmd_build_index)

    p = sub.add_parser("train-rqe", parents=[common], help="train the entailment classifier")
    p.add_argument("--pairs", required=True)
    p.add_argument("--output", "-o", required=True)
    p.add_argument("--epochs", type=int, default=TrainConfig.epochs)
    p.add_argument("--learning-rate", type=float, default=TrainConfig.learning_rate)
    p.add_argument("--l2", type=float, default=TrainConfig.l2_lambda)
    p.add_argument("--threshold", type=float)
    p.set_defaults(func=cmd_train_rqe)

    p = sub.add_parser("eval-rqe", parents=[common], help="evaluate the classifier on labeled pairs")
    p.add_argument("--pairs", required=True)
    p.add_argument("--model")
    p.add_argument("--cv", type=int, help="k-fold cross-validation instead of a fixed model")
    p.set_defaults(func=cmd_eval_rqe)

    p = sub.add_parser("ask", parents=[common, pipeline], help="answer one question")
    p.add_argument("question")
    p.add_argument("--explain", action="store_true")
    p.set_defaults(func=cmd_ask)

    p = sub.add_parser("batch-eval", parents=[common, pipeline], help="answer and score a question file")
    p.add_argument("--questions", required=True)
    p.add_argument("--judgments", required=True)
    p.add_argument("--keyed", choices=("id", "rank"), default="id")
    p.add_argument("--run-out")
    p.add_argument("--report-out")
    p.add_argument("--tag", default="rqeqa")
    p.set_defaults(func=cmd_batch_eval)

    p = sub.add_parser("gen-collection", parents=[common], help="generate QA pairs from articles")
    p.add_argument("--articles", required=True)
    p.add_argument("--patterns", required=True)
    p.add_argument("--output", "-o", required=True)
    p.set_defaults(func=cmd_gen_collection)

    p = sub.add_parser("validate", parents=[common], help="check collection invariants")
    p.add_argument("--collection")
    p.set_defaults(func=cmd_validate)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    try:
        cfg = effective_config(args)
        if args.verbose:
            print("effective config: " + json.dumps(cfg, sort_keys=True, default=str), file=sys.stderr)
        return args.func(args, cfg)
    except (CliError, CollectionError, InvalidIndex, TrainingError, FileNotFoundError, ValueError) as exc:
        print(f"rqeqa {args.command}: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
