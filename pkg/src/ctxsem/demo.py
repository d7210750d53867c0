"""Replay of the worked examples that anchor this package's numerics.

Each check recomputes a published hand calculation through the library
and compares bit-for-bit at tight tolerance.  The CLI `demo` subcommand
prints one pass/fail line per check and exits nonzero on any failure.
"""

from . import keys
from .algebras import (
    additive_product,
    additive_theory,
    convolution,
    lift_string,
    pointwise_product,
    pointwise_theory,
    string_entailment,
    subsequence_theory,
    subsequence_xi,
    tensor_alg_product,
)
from .contextalg import (
    average_length,
    build_context_theory,
    classify_language,
    context_product,
    context_vector,
    language_from_corpus,
    select_basis,
)
from .docproj import entail_docproj, index_corpus, phi, projection
from .pregroup import (
    GammaVec,
    TypedFactor,
    TypedTensor,
    format_type,
    gamma_product,
    parse_type,
    reduces_to,
)
from .sparse import SparseVec, degree_of_entailment, from_axes, meet, norm

TABLE1 = {
    "cat": from_axes([0, 2, 3]),
    "animal": from_axes([2, 1, 2]),
    "big": from_axes([1, 3, 0]),
}


def _vec_seq(*entries):
    return SparseVec({keys.seq(k.split()) if k else keys.seq([]): c
                      for k, c in entries})


def _vec_pair(*entries):
    # left/right contexts are written as character strings, e.g. ("a", "cd")
    return SparseVec(
        {keys.pair(tuple(l), tuple(r)): c for (l, r), c in entries}
    )


def corpus_language():
    """The six-letter three-string example corpus."""
    return language_from_corpus([tuple("abcd"), tuple("aecd"), tuple("abfd")])


def checks():
    """Yield (name, passed, detail) for every anchored example."""
    t3 = 1.0 / 3.0

    # finite-dimensional products
    yield (
        "pointwise big.cat = (0,6,0)",
        pointwise_product(TABLE1["big"], TABLE1["cat"]) == from_axes([0, 6, 0]),
        "componentwise product of (1,3,0) and (0,2,3)",
    )
    yield (
        "additive (1,1,3,0) [+] (1,0,2,3) = (1,1,5,3)",
        additive_product(from_axes([1, 1, 3, 0]), from_axes([1, 0, 2, 3]))
        == from_axes([1, 1, 5, 3]),
        "scalar slot multiplies, the rest cross-add",
    )
    tensor_expected = SparseVec(
        {keys.seq([str(i), str(j)]): TABLE1["big"][keys.axis(i)] * TABLE1["cat"][keys.axis(j)]
         for i in range(3) for j in range(3)}
    )
    yield (
        "tensor (1,3,0) (x) (0,2,3) = (0,2,3,0,6,9,0,0,0)",
        tensor_alg_product(TABLE1["big"], TABLE1["cat"]) == tensor_expected,
        "rank-2 keys carry the outer product",
    )

    # entailment on Table 1
    yield (
        "meet(cat, animal) = (0,1,2)",
        meet(TABLE1["cat"], TABLE1["animal"]) == from_axes([0, 1, 2]),
        "componentwise minimum",
    )
    ent = degree_of_entailment(TABLE1["cat"], TABLE1["animal"])
    yield (
        "Ent(cat, animal) = 3/5",
        abs(ent - 0.6) < 1e-12,
        f"got {ent}",
    )
    theory = pointwise_theory(TABLE1)
    yield (
        "string entailment cat -> animal = 3/5 via the pointwise theory",
        abs(string_entailment(theory, ["cat"], ["animal"]) - 0.6) < 1e-12,
        "lift + degree of entailment",
    )
    yield (
        "additive theory: big cat = (1,1,5,3)",
        lift_string(
            additive_theory(
                {"big": from_axes([1, 1, 3, 0]), "cat": from_axes([1, 0, 2, 3])}
            ),
            ["big", "cat"],
        )
        == from_axes([1, 1, 5, 3]),
        "lift through the additive product",
    )

    # subsequence embedding
    yield (
        "subsequence xi(a) = (e_a + e_empty)/2",
        subsequence_xi("a") == _vec_seq(("a", 0.5), ("", 0.5)),
        "unit 1-norm embedding",
    )
    sub = subsequence_theory(["a", "b"])
    yield (
        "subsequence: ab expands to the four subsequences at weight 1/4",
        lift_string(sub, ["a", "b"])
        == _vec_seq(("a b", 0.25), ("a", 0.25), ("b", 0.25), ("", 0.25)),
        "convolution of two embeddings",
    )

    # context algebra of the three-string corpus
    lang = corpus_language()
    yield (
        "corpus language is a distribution with average length 4",
        classify_language(lang) == "distribution"
        and abs(average_length(lang) - 4.0) < 1e-12,
        "three strings of mass 1/3",
    )
    b_hat = context_vector(lang, ("b",))
    c_hat = context_vector(lang, ("c",))
    yield (
        "b-hat = 1/3 (a, cd) + 1/3 (a, fd)",
        b_hat == _vec_pair((("a", "cd"), t3), (("a", "fd"), t3)),
        "contexts of b",
    )
    yield (
        "c-hat = 1/3 (ab, d) + 1/3 (ae, d)",
        c_hat == _vec_pair((("ab", "d"), t3), (("ae", "d"), t3)),
        "contexts of c",
    )
    basis = select_basis(lang, max_len=2)
    bc = context_product(lang, basis, b_hat, c_hat)
    yield (
        "b-hat . c-hat = 1/3 (a, d)",
        bc == _vec_pair((("a", "d"), t3)),
        "the product recovers the context of bc",
    )
    e_hat = context_vector(lang, ("e",))
    f_hat = context_vector(lang, ("f",))
    yield (
        "e-hat . f-hat = 0",
        context_product(lang, basis, e_hat, f_hat) == SparseVec(),
        "ef never occurs",
    )
    afd = 3.0 * (b_hat - e_hat)   # the basis vector (a, fd)
    aed = 3.0 * (c_hat - f_hat)   # the basis vector (ae, d)
    acd = 3.0 * e_hat             # the basis vector (a, cd)
    abd = 3.0 * f_hat             # the basis vector (ab, d)
    witness = context_product(lang, basis, afd, aed)
    yield (
        "(a,fd) . (ae,d) = -3 (a,d): positive vectors, negative product",
        witness == _vec_pair((("a", "d"), -3.0)),
        "the positivity failure witness",
    )
    yield (
        "(a,cd) . (ae,d) = 3 (a,d)",
        context_product(lang, basis, acd, aed) == _vec_pair((("a", "d"), 3.0)),
        "",
    )
    yield (
        "(a,fd) . (ab,d) = 3 (a,d)",
        context_product(lang, basis, afd, abd) == _vec_pair((("a", "d"), 3.0)),
        "",
    )
    yield (
        "(a,cd) . (ab,d) = 0",
        context_product(lang, basis, acd, abd) == SparseVec(),
        "",
    )
    theory = build_context_theory(lang, max_len=2)
    yield (
        "context theory lifts bc to 1/3 (a, d)",
        lift_string(theory, ["b", "c"]) == _vec_pair((("a", "d"), t3)),
        "",
    )
    lbar = average_length(lang)
    yield (
        "norm bound: ||x-hat||_1 <= average length for every word",
        all(norm(context_vector(lang, (a,)), 1) <= lbar + 1e-12
            for a in sorted(lang.alphabet)),
        "",
    )

    # document projections on the toy corpus
    docs = [["cat", "sits"], ["cat", "dog"], ["dog", "runs"]]
    index = index_corpus(docs)
    yield (
        "phi(P_cat) = n_cat / |D| = 2/3",
        abs(phi(index, projection(index, {"cat"})) - 2.0 / 3.0) < 1e-12,
        "",
    )
    yield (
        "Ent(cat -> dog) = 1/2 by document counting",
        abs(entail_docproj(index, ["cat"], ["dog"]) - 0.5) < 1e-12,
        "",
    )

    # pregroup reductions and the transitive sentence
    sent_type = parse_type("pi") + parse_type("pi^r s o^l") + parse_type("o")
    ok, wit = reduces_to(sent_type, parse_type("s"))
    yield (
        "pi (pi^r s o^l) o reduces to s",
        ok and wit[-1] == parse_type("s"),
        " -> ".join(format_type(t) for t in wit),
    )
    v = {
        "john": from_axes([1, 0]),
        "likes1": from_axes([2, 1]),
        "likes2": from_axes([0, 3]),
        "likes3": from_axes([1, 1]),
        "mary": from_axes([0, 2]),
    }
    pi, s, o = parse_type("pi")[0], parse_type("s")[0], parse_type("o")[0]
    words = [
        GammaVec([TypedTensor(1.0, (TypedFactor(v["john"], pi),))]),
        GammaVec(
            [
                TypedTensor(
                    1.0,
                    (
                        TypedFactor(v["likes1"], pi.right_adjoint()),
                        TypedFactor(v["likes2"], s),
                        TypedFactor(v["likes3"], o.left_adjoint()),
                    ),
                )
            ]
        ),
        GammaVec([TypedTensor(1.0, (TypedFactor(v["mary"], o),))]),
    ]
    result = words[0]
    for w in words[1:]:
        result = gamma_product(result, w)
    scale = 2.0 * 2.0  # <john, likes1> = 2 and <likes3, mary> = 2
    expected = GammaVec(
        [TypedTensor(scale, (TypedFactor(v["likes2"], s),))]
    )
    yield (
        "john likes mary -> <v_john, v1> <v3, v_mary> (v2 : s)",
        result == expected
        and all(t.type() == (s,) for t in result.terms),
        "product-state verb collapses to a typed statement vector",
    )


def run_demo(out=print):
    """Run every check; return the number of failures."""
    failures = 0
    for name, ok, detail in checks():
        status = "PASS" if ok else "FAIL"
        if not ok:
            failures += 1
        suffix = f"  ({detail})" if detail and not ok else ""
        out(f"[{status}] {name}{suffix}")
    return failures
