#include "doctest.h"
#include "oracle.hpp"

#include <cstdlib>

#include "envlab/envelope.hpp"
#include "envlab/golden.hpp"

using namespace envlab;

namespace {

LaurentPoly y_pow(std::size_t rank, std::int64_t k) {
    ExpVec e = ExpVec::zero(rank);
    e.y = k;
    return LaurentPoly::monomial(e);
}

std::vector<ExpVec> std_chars(std::size_t n, std::size_t rank, std::size_t off) {
    std::vector<ExpVec> chi;
    for (std::size_t i = 0; i <= n; ++i) {
        ExpVec e = ExpVec::zero(rank);
        if (i) e.a[off + i - 1] = 1;
        chi.push_back(e);
    }
    return chi;
}

const GKMSpace& p2() {
    static const GKMSpace x = p2_example_space();
    return x;
}

const GKMSpace& p3() {
    static const GKMSpace x = projective_space(3);
    return x;
}

const GKMSpace& p1xp1() {
    static const GKMSpace x = product(projective_space(1, std_chars(1, 2, 0)), projective_space(1, std_chars(1, 2, 1)));
    return x;
}

std::size_t count(const AxiomReport& r, Axiom a) {
    std::size_t k = 0;
    for (const auto& rec : r.records) k += rec.axiom == a ? 1 : 0;
    return k;
}

struct EnvGuard {
    explicit EnvGuard(const char* v) {
        if (v)
            setenv("ENVLAB_SEARCH_CAP", v, 1);
        else
            unsetenv("ENVLAB_SEARCH_CAP");
    }
    ~EnvGuard() { unsetenv("ENVLAB_SEARCH_CAP"); }
};

} // namespace

TEST_SUITE("envelope") {

TEST_CASE("P2 candidate: every entry against the oracle") {
    const GKMSpace& x = p2();
    const Chamber c = p2_example_chamber();
    const StabCandidate cand = candidate_from_mc(x, c);
    const std::vector<ExpVec> chi = {ExpVec({0, 0}), ExpVec({1, 0}), ExpVec({0, 1})};
    // Cell dims: e0 2, e1 1, e2 0.
    const std::int64_t dims[3] = {2, 1, 0};
    for (PointId f = 0; f < 3; ++f)
        for (PointId g = 0; g < 3; ++g)
            CHECK(cand.entry(f, g) == oracle::pn_cell_oracle(chi, c.sigma(), f, g) * y_pow(2, -dims[f]));
    // The worked entry for (e1, e2) before normalisation by y.
    const LaurentPoly one = LaurentPoly::constant(2, 1);
    const LaurentPoly y = y_pow(2, 1);
    const LaurentPoly ba = LaurentPoly::monomial(ExpVec({-1, 1})), b = LaurentPoly::monomial(ExpVec({0, 1}));
    CHECK(cand.entry(1, 2) * y == (one - y) * ba * (one - b));
}

TEST_CASE("P2 candidate passes all axioms pair by pair") {
    const StabCandidate cand = candidate_from_mc(p2(), p2_example_chamber());
    const AxiomReport r = check_all(cand, Slope::trivial(p2()));
    CHECK(r.verdict());
    CHECK(count(r, Axiom::Vanishing) == 3);
    CHECK(count(r, Axiom::Divisibility) == 6);
    CHECK(count(r, Axiom::Normalization) == 3);
    CHECK(count(r, Axiom::Smallness) == 3);
    for (const auto& rec : r.records)
        if (rec.axiom == Axiom::Divisibility) {
            REQUIRE(rec.witness.quotient);
            CHECK(*rec.witness.lhs * *rec.witness.quotient == cand.entry(rec.f, rec.g));
        }
}

TEST_CASE("adding 1 to the (e1, e2) entry breaks strong c only") {
    StabCandidate cand = candidate_from_mc(p2(), p2_example_chamber());
    cand.table[1][2] = cand.table[1][2] + LaurentPoly::constant(2, 1);
    const Slope triv = Slope::trivial(p2());
    const AxiomReport strong = check_all(cand, triv, true);
    CHECK_FALSE(strong.passes(Axiom::Smallness));
    CHECK(strong.passes(Axiom::Divisibility));
    CHECK(strong.passes(Axiom::Normalization));
    bool found = false;
    for (const auto& rec : strong.records)
        if (!rec.pass) {
            CHECK(rec.f == 1);
            CHECK(rec.g == 2);
            REQUIRE(rec.witness.counterexample);
            CHECK(rec.witness.counterexample->is_zero());
            found = true;
        }
    CHECK(found);
    CHECK(check_all(cand, triv, false).verdict());
}

TEST_CASE("axiom b: diagonal normalisation identity on random splits") {
    // y^{-|A|} prod_{a in A}(1 - y e^{-a}) * eu(R) * e^{det A} (-1)^{|A|}
    //   = eu(R + {y - a : a in A}), evaluated modulo a prime.
    std::mt19937_64 rng(71);
    for (int t = 0; t < 200; ++t) {
        const std::size_t r = 1 + t % 3;
        const auto a = oracle::random_weights(rng, r, t % 4), rep = oracle::random_weights(rng, r, (t / 4) % 3);
        const auto pt = oracle::random_point(rng, r);
        oracle::u64 lhs = oracle::eval(lambda_y_dual(a, r) * euler(rep, r), pt);
        lhs = oracle::mulmod(lhs, oracle::ipow(pt.back(), -static_cast<std::int64_t>(a.size())));
        for (const auto& w : a) lhs = oracle::mulmod(lhs, oracle::eval(LaurentPoly::monomial(w), pt));
        if (a.size() % 2) lhs = (oracle::P - lhs) % oracle::P;
        oracle::u64 rhs = oracle::eval(euler(rep, r), pt);
        for (const auto& w : a) {
            const oracle::u64 m = oracle::eval(LaurentPoly::monomial(ExpVec(w.a, -1)), pt);
            rhs = oracle::mulmod(rhs, (1 + oracle::P - m) % oracle::P);
        }
        CHECK(lhs == rhs);
    }
    // And on every diagonal of every P^3 chamber.
    for (const Chamber& c : chamber_representatives(p3()))
        CHECK(check_axiom_b(candidate_from_mc(p3(), c)).verdict());
}

TEST_CASE("axiom b rejects a rescaled diagonal") {
    StabCandidate cand = candidate_from_mc(p2(), p2_example_chamber());
    cand.table[0][0] = cand.table[0][0] * y_pow(2, 1);
    const AxiomReport r = check_axiom_b(cand);
    CHECK_FALSE(r.verdict());
    CHECK_FALSE(r.records[0].pass);
    CHECK(r.records[1].pass);
}

TEST_CASE("axiom a rejects support outside the closure") {
    StabCandidate cand = candidate_from_mc(p2(), p2_example_chamber());
    cand.table[2][0] = LaurentPoly::constant(2, 1);
    const AxiomReport r = check_axiom_a(cand);
    CHECK_FALSE(r.passes(Axiom::Vanishing));
    CHECK(r.passes(Axiom::Divisibility));
    StabCandidate d = candidate_from_mc(p2(), p2_example_chamber());
    d.table[0][1] = d.table[0][1] + LaurentPoly::constant(2, 1);
    CHECK_FALSE(check_axiom_a(d).passes(Axiom::Divisibility));
}

TEST_CASE("T*P1 families") {
    static const GKMSpace x = tp1_example_space();
    const Slope triv = Slope::trivial(x);
    const StabCandidate f1 = tp1_family(x, 1), f2 = tp1_family(x, 2);
    const StabCandidate mc = candidate_from_mc(x, tp1_example_chamber());
    CHECK(check_all(f1, triv, false).verdict());
    CHECK(check_all(f2, triv, false).verdict());
    CHECK_FALSE(check_all(f1, triv, true).verdict());
    CHECK(check_all(f2, triv, true).verdict());
    CHECK(f2.same_table(mc));
    CHECK_FALSE(f1.same_table(mc));
    // Family 1 fails exactly on the off-diagonal smallness check.
    for (const auto& rec : check_all(f1, triv, true).records)
        CHECK(rec.pass == !(rec.axiom == Axiom::Smallness));
    const ExampleRun run = run_paper_examples();
    CHECK(run.tp1.ok());
    CHECK(run.tp1.strong_passer == 2);
    CHECK(run.p2.ok());
    CHECK(run.p2.checks.size() == 9);
}

TEST_CASE("slope translation") {
    const GKMSpace& x = p2();
    for (const Chamber& c : chamber_representatives(x)) {
        const StabCandidate cand = candidate_from_mc(x, c);
        CHECK(slope_translate(cand, Slope::trivial(x)).same_table(cand));
        const Slope l = Slope::from_bundle(x, "O(-1)"), l_inv = Slope::from_bundle(x, "O(1)");
        const StabCandidate t = slope_translate(cand, l);
        // Composition is the tensor product; inverse bundles undo each other.
        CHECK(slope_translate(t, l).same_table(slope_translate(cand, Slope::from_bundle(x, "O(-2)"))));
        CHECK(slope_translate(t, l_inv).same_table(cand));
        // Diagonals are untouched; a and b survive.
        for (PointId f = 0; f < 3; ++f) CHECK(t.entry(f, f) == cand.entry(f, f));
        CHECK(check_axiom_a(t).verdict());
        CHECK(check_axiom_b(t).verdict());
        // Axiom c at slope L for the translate is axiom c at the trivial slope.
        const AxiomReport tl = check_axiom_c(t, l), c0 = check_axiom_c(cand, Slope::trivial(x));
        REQUIRE(tl.records.size() == c0.records.size());
        for (std::size_t i = 0; i < tl.records.size(); ++i) {
            CHECK(tl.records[i].pass == c0.records[i].pass);
            CHECK(tl.records[i].witness.polytope == c0.records[i].witness.polytope);
        }
    }
    CHECK_THROWS_AS(slope_translate(candidate_from_mc(x, Chamber({1, 2})), Slope::from_bundle(x, "O(-1)", 2)),
                    InputError);
}

TEST_CASE("minimal n") {
    EnvGuard g(nullptr);
    const StabCandidate cand = candidate_from_mc(p2(), p2_example_chamber());
    const Slope o1 = Slope::from_bundle(p2(), "O(-1)");
    const MinimalN m = minimal_n(cand, o1);
    CHECK(m.n == 2);
    CHECK(m.stable());
    CHECK(m.probe.size() == 5);
    CHECK_FALSE(check_axiom_c(cand, o1, true).verdict());
    CHECK(check_axiom_c(cand, o1, false).verdict());
    CHECK(minimal_n(cand, Slope::trivial(p2())).n == 1);
    CHECK_THROWS_WITH_AS(minimal_n(cand, Slope::from_bundle(p2(), "O(1)")), doctest::Contains("anti-ample"),
                         InputError);
    CHECK_THROWS_AS(minimal_n(cand, o1, 1), SearchCapExceeded);
    {
        EnvGuard cap("1");
        CHECK(search_cap() == 1);
        CHECK_THROWS_AS(minimal_n(cand, o1), SearchCapExceeded);
    }
    {
        EnvGuard bad("x");
        CHECK_THROWS_AS(search_cap(), InputError);
    }
    CHECK(search_cap() == 10000);
    // Larger anti-ample slopes need larger n.
    CHECK(minimal_n(cand, Slope::from_bundle(p2(), "O(-2)")).n >= m.n);
}

TEST_CASE("strong c implies weak c") {
    std::vector<const GKMSpace*> spaces = {&p2(), &p3(), &p1xp1()};
    for (const GKMSpace* x : spaces)
        for (const Chamber& c : chamber_representatives(*x)) {
            const StabCandidate cand = candidate_from_mc(*x, c);
            for (const auto& b : x->bundles())
                for (std::int64_t n = 1; n <= 4; ++n) {
                    const Slope s = Slope::from_bundle(*x, b.name, n);
                    if (check_axiom_c(cand, s, true).verdict()) CHECK(check_axiom_c(cand, s, false).verdict());
                }
        }
}

TEST_CASE("uniqueness probe") {
    const StabCandidate cand = candidate_from_mc(p2(), p2_example_chamber());
    const auto perts = perturbation_family(cand);
    CHECK(perts.size() >= 50);
    std::size_t excluded = 0;
    for (const auto& p : perts) {
        CHECK_FALSE(p.delta.is_zero());
        excluded += p.kind == "excluded-vertex" ? 1 : 0;
    }
    CHECK(excluded == 3);
    // Same family twice.
    const auto again = perturbation_family(cand);
    REQUIRE(again.size() == perts.size());
    for (std::size_t i = 0; i < perts.size(); ++i) CHECK(again[i].delta == perts[i].delta);

    const UniquenessReport rep = uniqueness_probe(cand, perts);
    CHECK(rep.ok());
    CHECK(rep.tried == perts.size());
    CHECK(rep.broken == perts.size());

    static const GKMSpace x = tp1_example_space();
    const StabCandidate mc = candidate_from_mc(x, tp1_example_chamber());
    const UniquenessReport r2 = uniqueness_probe(mc, perturbation_family(mc), {tp1_family(x, 1), tp1_family(x, 2)});
    CHECK(r2.ok());
}

}
