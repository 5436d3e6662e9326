#include "envlab/golden.hpp"

#include <set>

namespace envlab {

namespace {

struct Term {
    std::int64_t a, b, y, coeff;
};

LaurentPoly poly2(std::initializer_list<Term> terms) {
    LaurentPoly::TermMap m;
    for (const auto& t : terms) m[ExpVec({t.a, t.b}, t.y)] += t.coeff;
    return LaurentPoly::from_terms(2, std::move(m));
}

struct FacetGolden {
    std::vector<std::int64_t> normal;
    std::int64_t offset;
    Cochar direction;
    int orientation;
};

// Reference data for the P^2 example, in (a, b)-exponent coordinates.
const LaurentPoly& golden_euler() {
    static const LaurentPoly p = poly2({{0, 0, 0, 1}, {0, 1, 0, -1}, {-1, 1, 0, -1}, {-1, 2, 0, 1}});
    return p;
}
const LaurentPoly& golden_mc() {
    static const LaurentPoly p = poly2({{-1, 1, 0, 1}, {-1, 2, 0, -1}, {-1, 1, 1, -1}, {-1, 2, 1, 1}});
    return p;
}
const std::vector<std::int64_t> golden_det = {0, 0};
const std::vector<std::int64_t> golden_v = {1, -1};
const std::vector<FacetGolden> golden_facets = {
    {{1, 0}, 0, {1, 0}, -1},
    {{1, 1}, 1, {1, 1}, -1},
    {{-1, 0}, 1, {1, 0}, 1},
    {{-1, -1}, 0, {1, 1}, 1},
};
const LaurentPoly& golden_tau3_limit() {
    static const LaurentPoly p = poly2({{0, 0, 1, 1}, {0, 0, 0, -1}});
    return p;
}
const std::vector<std::int64_t> golden_pi = {-1, 0, 1, 0}; // tau1..tau4

std::string vec_str(const std::vector<std::int64_t>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

GoldenCheck poly_check(const std::string& name, const LaurentPoly& expected, const LaurentPoly& actual) {
    GoldenCheck c;
    c.name = name;
    c.pass = expected == actual;
    c.expected = to_pretty(expected);
    c.actual = to_pretty(actual);
    if (!c.pass) c.diff = term_diff(expected, actual);
    return c;
}

GoldenCheck text_check(const std::string& name, const std::string& expected, const std::string& actual) {
    GoldenCheck c;
    c.name = name;
    c.expected = expected;
    c.actual = actual;
    c.pass = expected == actual;
    if (!c.pass) c.diff = {"expected " + expected, "actual   " + actual};
    return c;
}

std::string facet_str(const std::vector<std::int64_t>& normal, const std::string& offset, const Cochar& dir,
                      int orient) {
    return "E:" + vec_str(normal) + "<=" + offset + " sigma_H:" + vec_str(dir) + " t:" + (orient > 0 ? "t" : "1/t");
}

P2Example run_p2() {
    P2Example out;
    const GKMSpace x = p2_example_space();
    const Chamber c = p2_example_chamber();
    const PointId f = x.index_of("e1"), g = x.index_of("e2");
    const std::size_t r = x.rank();

    out.checks.push_back(poly_check("eu(normal at F')", golden_euler(), euler(x.tangent(g), r)));
    out.checks.push_back(poly_check("mC(cell F) at F'", golden_mc(), mc_cell(x, c, f).at(g)));
    out.checks.push_back(text_check("det of attracting part at F'", vec_str(golden_det),
                                    vec_str(det_character(cell_data(x, c, g).attracting, r).a)));
    const Slope s = Slope::from_bundle(x, "O(-1)");
    out.checks.push_back(text_check("slope difference v", to_string(QVec::from_ints(golden_v)),
                                    to_string(s.difference(f, g))));

    out.facet_rows = facet_slope_analysis(x, c, f, g, s);
    std::string exp_table, act_table;
    for (const auto& fg : golden_facets)
        exp_table += facet_str(fg.normal, std::to_string(fg.offset), fg.direction, fg.orientation) + ";";
    std::vector<const FacetRow*> facet_only;
    for (const auto& row : out.facet_rows)
        if (!row.span_equation) facet_only.push_back(&row);
    for (const auto* row : facet_only)
        act_table += facet_str(row->ctx.facet.normal, to_string(row->ctx.facet.offset), row->ctx.direction,
                               row->ctx.orientation) + ";";
    out.checks.push_back(text_check("facet table", exp_table, act_table));

    auto limit_of = [&](std::size_t i) -> const LimitResult* {
        return i < facet_only.size() ? &facet_only[i]->limit : nullptr;
    };
    {
        const LimitResult* l = limit_of(0);
        out.checks.push_back(text_check("limit across tau1", "zero", l ? to_string(l->kind) : "missing"));
    }
    {
        const LimitResult* l = limit_of(2);
        if (l && l->kind == LimitResult::Kind::Value)
            out.checks.push_back(poly_check("limit across tau3", golden_tau3_limit(), l->num));
        else
            out.checks.push_back(text_check("limit across tau3", to_pretty(golden_tau3_limit()),
                                            l ? to_string(l->kind) : "missing"));
    }
    auto pi_str = [&](std::size_t i) {
        return i < facet_only.size() ? to_string(facet_only[i]->pi_of_slope) : std::string("missing");
    };
    out.checks.push_back(text_check("pi of v on tau2, tau4",
                                    std::to_string(golden_pi[1]) + "," + std::to_string(golden_pi[3]),
                                    pi_str(1) + "," + pi_str(3)));
    out.checks.push_back(text_check("pi of v on tau3", std::to_string(golden_pi[2]), pi_str(2)));
    return out;
}

TP1Example run_tp1() {
    TP1Example out;
    static const GKMSpace x = tp1_example_space();
    const Chamber c = tp1_example_chamber();
    const Slope triv = Slope::trivial(x);
    out.family1 = tp1_family(x, 1);
    out.family2 = tp1_family(x, 2);
    out.mc = candidate_from_mc(x, c);
    out.family1_weak = check_all(out.family1, triv, false).verdict();
    out.family2_weak = check_all(out.family2, triv, false).verdict();
    out.family1_strong = check_all(out.family1, triv, true).verdict();
    out.family2_strong = check_all(out.family2, triv, true).verdict();
    if (out.family1_strong != out.family2_strong) {
        out.strong_passer = out.family1_strong ? 1 : 2;
        out.passer_equals_mc = (out.strong_passer == 1 ? out.family1 : out.family2).same_table(out.mc);
    }
    return out;
}

} // namespace

std::size_t P2Example::matched() const {
    std::size_t k = 0;
    for (const auto& c : checks) k += c.pass ? 1 : 0;
    return k;
}

bool TP1Example::ok() const {
    return family1_weak && family2_weak && strong_passer != 0 && passer_equals_mc;
}

GKMSpace p2_example_space() { return projective_space(2, {ExpVec({0, 0}), ExpVec({1, 0}), ExpVec({0, 1})}); }
Chamber p2_example_chamber() { return Chamber({1, 2}); }
GKMSpace tp1_example_space() { return projective_space(1, {ExpVec({1}), ExpVec({0})}); }
Chamber tp1_example_chamber() { return Chamber({1}); }

StabCandidate tp1_family(const GKMSpace& x, int which) {
    if (x.rank() != 1 || x.size() != 2) throw std::invalid_argument("tp1_family: expects P^1 in rank 1");
    StabCandidate cand;
    cand.space = &x;
    cand.chamber = tp1_example_chamber();
    cand.order = x.order(cand.chamber);
    cand.label = "family " + std::to_string(which);
    const auto& o1 = x.bundle("O(-1)").restriction;
    const auto& o2 = x.bundle("O(-2)").restriction;
    const ExpVec alpha({1}), inv_y({0}, -1);
    cand.table.assign(2, {});
    for (PointId g = 0; g < 2; ++g) {
        // 1 - O(-1)
        cand.table[0].push_back(LaurentPoly::one_minus(o1[g]));
        if (which == 1) {
            // 1/y - O(-1)/a
            cand.table[1].push_back(LaurentPoly::monomial(inv_y) - LaurentPoly::monomial(o1[g] - alpha));
        } else {
            // O(-1)/y - O(-2)/a
            cand.table[1].push_back(LaurentPoly::monomial(o1[g] + inv_y) - LaurentPoly::monomial(o2[g] - alpha));
        }
    }
    return cand;
}

ExampleRun run_paper_examples() {
    ExampleRun run;
    run.p2 = run_p2();
    run.tp1 = run_tp1();
    return run;
}

std::vector<std::string> term_diff(const LaurentPoly& expected, const LaurentPoly& actual) {
    std::vector<std::string> out;
    const LaurentPoly d = expected - actual;
    for (const auto& [e, c] : d.terms()) {
        const Integer mag = abs(c);
        out.push_back((c > 0 ? "missing " : "extra ") + mag.get_str() + " @ " + to_string(e));
    }
    return out;
}

} // namespace envlab
