"""Command-line surface.

Subcommands: build-lang, entail, rte-eval, lda-train, pregroup-parse,
pregroup-compose, demo.  Exit codes: 0 success, 2 input error, 3 model
error.  A key=value --config file supplies defaults for any long option.
"""

import argparse
import json
import sys

from . import lda as lda_mod
from .algebras import (
    additive_theory,
    lift_string,
    overlap_theory,
    pointwise_theory,
    string_entailment,
    subsequence_theory,
    tensor_theory,
)
from .contextalg import (
    build_context_theory,
    format_language_tsv,
    language_from_corpus,
    parse_corpus,
    parse_language_tsv,
)
from .demo import run_demo
from .docproj import entail_docproj, index_corpus
from .errors import (
    CtxsemError,
    EmptyCorpus,
    MalformedInput,
)
from .keys import parse_key
from .pregroup import (
    compose_sentence,
    format_type,
    parse_lexicon,
    parse_type,
    reduces_to,
    sentence_type,
)
from .rte import parse_rte_dataset, run_rte_eval
from .sparse import SparseVec

MODELS = (
    "pointwise", "additive", "tensor", "subseq", "overlap",
    "context", "docproj", "lda",
)


def read_text(path):
    try:
        with open(path, "r", encoding="utf-8") as f:
            return f.read()
    except OSError as e:
        raise MalformedInput(f"cannot read {path}: {e}") from None


def parse_word_vectors(text):
    """Word-vector table: lines ``word<TAB>key<TAB>coefficient``."""
    table = {}
    for n, line in enumerate(text.splitlines(), 1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 3:
            raise MalformedInput(f"vectors line {n}: expected 3 fields")
        word, key_text, coeff = parts
        try:
            pair = (parse_key(key_text), float(coeff))
        except ValueError:
            raise MalformedInput(f"vectors line {n}: bad coefficient") from None
        table.setdefault(word, []).append(pair)
    return {w: SparseVec(pairs) for w, pairs in table.items()}


def parse_config(path):
    cfg = {}
    for n, line in enumerate(read_text(path).splitlines(), 1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        if "=" not in line:
            raise MalformedInput(f"config line {n}: expected key=value")
        key, _, value = line.partition("=")
        cfg[key.strip().replace("-", "_")] = value.strip()
    return cfg


def tokenize(text, lowercase=False):
    return tuple((text.lower() if lowercase else text).split())


def build_scorer(args, extra_words=()):
    """Return (scorer, provenance) for the selected model kind."""
    model = args.model
    prov = {"model": model}
    if model in ("pointwise", "additive", "tensor"):
        if not args.vectors:
            raise MalformedInput(f"--vectors is required for model {model}")
        vectors = parse_word_vectors(read_text(args.vectors))
        theory = {
            "pointwise": pointwise_theory,
            "additive": additive_theory,
            "tensor": tensor_theory,
        }[model](vectors)
        return (lambda x, y: string_entailment(theory, x, y)), prov
    if model in ("subseq", "overlap"):
        make = subsequence_theory if model == "subseq" else overlap_theory

        def scorer(x, y):
            theory = make(set(x) | set(y) | set(extra_words))
            return string_entailment(theory, x, y)

        return scorer, prov
    if model == "context":
        if args.language:
            lang = parse_language_tsv(read_text(args.language))
        elif args.corpus:
            lang = language_from_corpus(parse_corpus(read_text(args.corpus)))
        else:
            raise MalformedInput("model context needs --language or --corpus")
        prov["max_len"] = args.max_len
        theory = build_context_theory(lang, max_len=args.max_len)
        return (lambda x, y: string_entailment(theory, x, y)), prov
    if model == "docproj":
        if not args.corpus:
            raise MalformedInput("model docproj needs --corpus")
        index = index_corpus(parse_corpus(read_text(args.corpus)))
        return (lambda x, y: entail_docproj(index, x, y)), prov
    if model == "lda":
        if not args.lda_model:
            raise MalformedInput("model lda needs --lda-model")
        m = lda_mod.load_model(args.lda_model)
        cfg = lda_mod.McConfig(samples=args.M, doc_length=args.N, seed=args.seed)
        prov.update(seed=args.seed, N=args.N, M=args.M, oov=args.oov)
        skip = args.oov == "skip"

        def scorer(x, y):
            return lda_mod.entail_lda(m, x, y, cfg, oov_skip=skip)

        return scorer, prov
    raise MalformedInput(f"unknown model kind: {model}")


def cmd_build_lang(args):
    lang = language_from_corpus(parse_corpus(read_text(args.corpus)))
    out = format_language_tsv(lang)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as f:
            f.write(out + "\n")
    else:
        print(out)
    return 0


def cmd_entail(args):
    x = tokenize(args.x, args.lowercase)
    y = tokenize(args.y, args.lowercase)
    scorer, prov = build_scorer(args, extra_words=x + y)
    score = scorer(x, y)
    payload = {"score": score, **prov}
    if args.model == "subseq":
        theory = subsequence_theory(set(x) | set(y))
        lx, ly = lift_string(theory, x), lift_string(theory, y)
        payload["support_inclusion"] = set(lx.support()) <= set(ly.support())
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        prov_text = " ".join(f"{k}={v}" for k, v in sorted(prov.items()))
        print(f"{score:.12g}\t{prov_text}")
        if "support_inclusion" in payload:
            print(f"support_inclusion\t{payload['support_inclusion']}")
    return 0


def cmd_rte_eval(args):
    pairs = parse_rte_dataset(read_text(args.dataset), lowercase=args.lowercase)
    if not pairs:
        raise EmptyCorpus("dataset contains no pairs")
    words = [w for p in pairs for w in p.text + p.hypothesis]
    scorer, _ = build_scorer(args, extra_words=words)
    report = run_rte_eval(pairs, scorer, threshold=args.threshold)
    print(report.to_json() if args.json else report.to_tsv())
    return 0


def cmd_lda_train(args):
    docs = parse_corpus(read_text(args.corpus))
    cfg = lda_mod.SamplerConfig(
        iterations=args.iterations,
        burn_in=args.burn_in,
        seed=args.seed,
        alpha_sym=args.alpha,
        beta_smooth=args.beta_smooth,
    )
    model = lda_mod.train_lda(docs, args.topics, cfg)
    lda_mod.save_model(model, args.out)
    print(f"wrote {args.out}: k={model.k} vocab={len(model.vocab)}")
    return 0


def cmd_pregroup_parse(args):
    lexicon = parse_lexicon(read_text(args.lexicon))
    words = tuple(args.words)
    stype = sentence_type(lexicon, words)
    ok, witness = reduces_to(stype, parse_type(args.target))
    if args.json:
        print(json.dumps({
            "type": format_type(stype),
            "reduces": ok,
            "witness": [format_type(t) for t in witness],
        }))
    else:
        print(f"type\t{format_type(stype)}")
        print(f"reduces to {args.target}\t{'yes' if ok else 'no'}")
        if ok:
            print("witness\t" + " -> ".join(format_type(t) for t in witness))
    return 0


def cmd_pregroup_compose(args):
    lexicon = parse_lexicon(read_text(args.lexicon))
    result = compose_sentence(lexicon, args.words)
    if args.json:
        print(json.dumps({
            "terms": [
                {
                    "coeff": t.coeff,
                    "type": format_type(t.type()),
                }
                for t in result.terms
            ],
        }))
    else:
        print(repr(result))
    return 0


def cmd_demo(args):
    failures = run_demo()
    return 1 if failures else 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="ctxsem",
        description="Context-theoretic semantics: composition and entailment.",
    )
    parser.add_argument("--config", help="key=value defaults file")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--json", action="store_true",
                        help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build-lang", help="corpus file -> language TSV")
    p.add_argument("--corpus", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_build_lang)

    def add_model_opts(p):
        p.add_argument("--model", choices=MODELS, required=True)
        p.add_argument("--vectors", help="word-vector table (word, key, coeff)")
        p.add_argument("--corpus", help="one document per line")
        p.add_argument("--language", help="language TSV")
        p.add_argument("--max-len", type=int, default=3)
        p.add_argument("--lda-model", help="trained LDA model file")
        p.add_argument("--N", type=int, default=1000, help="assumed document length")
        p.add_argument("--M", type=int, default=1000, help="Monte-Carlo samples")
        p.add_argument("--oov", choices=("error", "skip"), default="error")
        p.add_argument("--lowercase", action="store_true")

    p = sub.add_parser("entail", help="degree of entailment between two strings")
    add_model_opts(p)
    p.add_argument("x")
    p.add_argument("y")
    p.set_defaults(func=cmd_entail)

    p = sub.add_parser("rte-eval", help="evaluate a scorer on an RTE-style TSV")
    add_model_opts(p)
    p.add_argument("--dataset", required=True)
    p.add_argument("--threshold", type=float, default=0.5)
    p.set_defaults(func=cmd_rte_eval)

    p = sub.add_parser("lda-train", help="collapsed Gibbs LDA training")
    p.add_argument("--corpus", required=True)
    p.add_argument("--topics", type=int, required=True)
    p.add_argument("--iterations", type=int, default=200)
    p.add_argument("--burn-in", type=int, default=50)
    p.add_argument("--alpha", type=float, default=None)
    p.add_argument("--beta-smooth", type=float, default=0.01)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_lda_train)

    p = sub.add_parser("pregroup-parse", help="type-check a sentence")
    p.add_argument("--lexicon", required=True)
    p.add_argument("--target", default="s")
    p.add_argument("words", nargs="+")
    p.set_defaults(func=cmd_pregroup_parse)

    p = sub.add_parser("pregroup-compose", help="compose a sentence's tensor")
    p.add_argument("--lexicon", required=True)
    p.add_argument("words", nargs="+")
    p.set_defaults(func=cmd_pregroup_compose)

    p = sub.add_parser("demo", help="replay the anchored worked examples")
    p.set_defaults(func=cmd_demo)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.config:
        defaults = parse_config(args.config)
        for key, value in defaults.items():
            if hasattr(args, key) and getattr(args, key) in (None, False):
                current = getattr(args, key)
                if isinstance(current, bool):
                    value = value.lower() in ("1", "true", "yes")
                setattr(args, key, value)
    try:
        return args.func(args)
    except (MalformedInput, EmptyCorpus) as e:
        print(f"input error: {e}", file=sys.stderr)
        return 2
    except CtxsemError as e:
        print(f"model error: {e}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
