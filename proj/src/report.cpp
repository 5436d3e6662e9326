#include "envlab/report.hpp"

#include <sstream>

#include "json.hpp"

namespace envlab {

using nlohmann::ordered_json;

namespace {

std::string pass_str(bool b) { return b ? "pass" : "FAIL"; }

std::string csv(const std::vector<std::int64_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

ordered_json vertex_json(const QVec& v) {
    ordered_json a = ordered_json::array();
    for (const auto& x : v.coords()) a.push_back(to_string(x));
    return a;
}

ordered_json vertices_json(const std::vector<QVec>& vs) {
    ordered_json a = ordered_json::array();
    for (const auto& v : vs) a.push_back(vertex_json(v));
    return a;
}

std::string vertices_str(const std::vector<QVec>& vs) {
    std::string s = "{";
    for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? " " : "") + to_string(vs[i]);
    return s + "}";
}

std::string poly_str(const LaurentPoly& p, Format fmt) {
    return fmt == Format::Pretty ? to_pretty(p, VarNames::greek(p.rank())) : to_pretty(p);
}

std::string half_space_str(const HalfSpace& h) {
    std::string s = "<(" + csv(h.normal) + "),x> <= " + to_string(h.offset);
    return s;
}

std::string limit_str(const LimitResult& l, Format fmt) {
    switch (l.kind) {
    case LimitResult::Kind::Zero: return "0";
    case LimitResult::Kind::Value: return poly_str(l.num, fmt);
    case LimitResult::Kind::Fraction: return "(" + poly_str(l.num, fmt) + ")/(" + poly_str(l.den, fmt) + ")";
    case LimitResult::Kind::Divergent: return "divergent";
    }
    return "?";
}

ordered_json witness_json(const Witness& w) {
    ordered_json j = ordered_json::object();
    if (w.entry) j["entry"] = to_pretty(*w.entry);
    if (w.quotient) j["quotient"] = to_pretty(*w.quotient);
    if (w.lhs) j["lhs"] = to_pretty(*w.lhs);
    if (w.rhs) j["rhs"] = to_pretty(*w.rhs);
    if (!w.polytope.empty() || w.excluded) j["polytope"] = vertices_json(w.polytope);
    if (!w.bound.empty()) j["bound"] = vertices_json(w.bound);
    if (w.excluded) j["excluded"] = vertex_json(*w.excluded);
    if (w.counterexample) j["counterexample"] = vertex_json(*w.counterexample);
    if (!w.note.empty()) j["note"] = w.note;
    return j;
}

std::string witness_str(const Witness& w, Format fmt) {
    std::vector<std::string> parts;
    if (w.quotient) parts.push_back("quotient=" + poly_str(*w.quotient, fmt));
    if (w.entry) parts.push_back("entry=" + poly_str(*w.entry, fmt));
    if (w.lhs && w.rhs) parts.push_back("lhs=" + poly_str(*w.lhs, fmt) + " rhs=" + poly_str(*w.rhs, fmt));
    if (!w.polytope.empty() || w.excluded) parts.push_back("P=" + vertices_str(w.polytope));
    if (!w.bound.empty()) parts.push_back("N=" + vertices_str(w.bound));
    if (w.counterexample) parts.push_back("witness=" + to_string(*w.counterexample));
    if (!w.note.empty()) parts.push_back(w.note);
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? " " : "") + parts[i];
    return s;
}

ordered_json facet_row_json(const FacetRow& r) {
    ordered_json j;
    j["facet"] = r.label;
    j["E_H"] = half_space_str(r.ctx.facet);
    j["sigma_H"] = r.ctx.direction;
    j["t"] = r.ctx.orientation > 0 ? "t" : "1/t";
    j["gamma"] = r.ctx.gamma.a;
    j["pi_of_slope"] = to_string(r.pi_of_slope);
    j["limit_kind"] = to_string(r.limit.kind);
    j["limit"] = limit_str(r.limit, Format::Json);
    j["verdict"] = pass_str(r.verdict);
    return j;
}

std::string order_chain(const GKMSpace& x, const PartialOrder& ord) {
    auto ext = ord.linear_extension();
    bool total = true;
    for (std::size_t i = 0; i + 1 < ext.size(); ++i)
        if (!ord.less(ext[i], ext[i + 1])) total = false;
    if (!total) return "";
    std::string s;
    for (std::size_t i = ext.size(); i-- > 0;) s += x.name(ext[i]) + (i ? " > " : "");
    return s;
}

std::vector<std::pair<PointId, PointId>> covers(const PartialOrder& ord) {
    std::vector<std::pair<PointId, PointId>> out;
    const std::size_t n = ord.size();
    for (PointId hi = 0; hi < n; ++hi)
        for (PointId lo = 0; lo < n; ++lo) {
            if (!ord.less(lo, hi)) continue;
            bool cover = true;
            for (PointId m = 0; m < n; ++m)
                if (ord.less(lo, m) && ord.less(m, hi)) cover = false;
            if (cover) out.emplace_back(hi, lo);
        }
    return out;
}

} // namespace

Format format_from_string(const std::string& s) {
    if (s == "json") return Format::Json;
    if (s == "tsv") return Format::Tsv;
    if (s == "pretty") return Format::Pretty;
    throw InputError("unknown format '" + s + "' (json, tsv, pretty)");
}

SlopeSpec SlopeSpec::parse(const std::string& s) {
    SlopeSpec spec;
    if (s.empty()) throw InputError("empty slope");
    if (s == "trivial") return spec;
    const auto slash = s.rfind('/');
    if (slash == std::string::npos || s.find(')', slash) != std::string::npos) {
        spec.name = s;
        return spec;
    }
    spec.name = s.substr(0, slash);
    const std::string tail = s.substr(slash + 1);
    if (tail == "search") {
        spec.search = true;
        return spec;
    }
    try {
        std::size_t pos = 0;
        spec.n = std::stoll(tail, &pos);
        if (pos != tail.size() || spec.n < 1) throw std::invalid_argument(tail);
    } catch (const std::exception&) {
        throw InputError("bad slope denominator '" + tail + "'");
    }
    return spec;
}

Slope SlopeSpec::resolve(const GKMSpace& x) const {
    if (name == "trivial") return Slope::trivial(x);
    return Slope::from_bundle(x, name, n);
}

bool VerifyOutcome::pass() const { return report.verdict() && (!minimal || minimal->stable()); }

VerifyOutcome run_verify(const GKMSpace& x, const Chamber& c, const SlopeSpec& spec, bool strong) {
    if (!x.smooth_closure_certified())
        throw UncertifiedSpace("refusing to verify: the space does not certify smooth cell closures, so the "
                               "motivic Chern classes of cells cannot be computed from closures");
    x.require_generic(c);
    VerifyOutcome out;
    out.space = &x;
    out.chamber = c;
    out.strong = strong;
    out.slope = spec.resolve(x);
    const StabCandidate cand = candidate_from_mc(x, c);
    if (spec.search) {
        out.minimal = minimal_n(cand, out.slope);
        out.slope = out.slope.with_n(out.minimal->n);
    }
    out.report = check_all(cand, out.slope, strong);
    if (!out.slope.is_trivial()) {
        for (PointId f = 0; f < x.size(); ++f)
            for (PointId g = 0; g < x.size(); ++g)
                if (cand.order.less(g, f)) out.facets.push_back({f, g, facet_slope_analysis(x, c, f, g, out.slope)});
    }
    return out;
}

std::string render_space(const GKMSpace& x, const std::vector<Chamber>& chambers, Format fmt) {
    const VarNames names = fmt == Format::Pretty ? VarNames::greek(x.rank()) : VarNames::ascii(x.rank());
    auto wstr = [&](const ExpVec& w) { return to_pretty(LaurentPoly::monomial(w), names); };
    if (fmt == Format::Json) {
        ordered_json j;
        j["rank"] = x.rank();
        j["dim"] = x.dim();
        j["points"] = ordered_json::array();
        for (PointId p = 0; p < x.size(); ++p) {
            ordered_json pt;
            pt["name"] = x.name(p);
            pt["tangent"] = ordered_json::array();
            for (const auto& w : x.tangent(p)) pt["tangent"].push_back(w.a);
            j["points"].push_back(pt);
        }
        j["chambers"] = ordered_json::array();
        for (const auto& c : chambers) {
            const PartialOrder ord = x.order(c);
            ordered_json cj;
            cj["sigma"] = c.sigma();
            cj["cell_dims"] = ordered_json::object();
            for (PointId p = 0; p < x.size(); ++p) cj["cell_dims"][x.name(p)] = cell_data(x, c, p).dim();
            cj["covers"] = ordered_json::array();
            for (auto [hi, lo] : covers(ord)) cj["covers"].push_back({x.name(hi), x.name(lo)});
            const std::string chain = order_chain(x, ord);
            if (!chain.empty()) cj["order"] = chain;
            j["chambers"].push_back(cj);
        }
        j["bundles"] = ordered_json::array();
        for (const auto& b : x.bundles()) {
            ordered_json bj;
            bj["name"] = b.name;
            bj["ampleness"] = to_string(b.ampleness);
            bj["restriction"] = ordered_json::object();
            for (PointId p = 0; p < x.size(); ++p) bj["restriction"][x.name(p)] = b.restriction[p].a;
            j["bundles"].push_back(bj);
        }
        j["certifications"] = {{"smooth_closures", x.smooth_closure_certified()},
                               {"local_product", x.local_product_certified()}};
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    const char* sep = fmt == Format::Tsv ? "\t" : "  ";
    out << "points" << sep << x.size() << sep << "dim" << sep << x.dim() << sep << "rank" << sep << x.rank() << "\n";
    for (PointId p = 0; p < x.size(); ++p) {
        out << "tangent" << sep << x.name(p) << sep;
        for (std::size_t k = 0; k < x.tangent(p).size(); ++k) out << (k ? " " : "") << wstr(x.tangent(p)[k]);
        out << "\n";
    }
    for (const auto& c : chambers) {
        const PartialOrder ord = x.order(c);
        out << "chamber" << sep << csv(c.sigma()) << sep << "cells";
        for (PointId p = 0; p < x.size(); ++p) out << " " << x.name(p) << ":" << cell_data(x, c, p).dim();
        const std::string chain = order_chain(x, ord);
        out << sep << "order" << sep;
        if (!chain.empty()) {
            out << chain;
        } else {
            bool first = true;
            for (auto [hi, lo] : covers(ord)) {
                out << (first ? "" : ", ") << x.name(hi) << " > " << x.name(lo);
                first = false;
            }
        }
        out << "\n";
    }
    for (const auto& b : x.bundles()) {
        out << "bundle" << sep << b.name << sep << to_string(b.ampleness) << sep;
        for (PointId p = 0; p < x.size(); ++p)
            out << (p ? " " : "") << x.name(p) << ":" << wstr(b.restriction[p]);
        out << "\n";
    }
    out << "certified" << sep << "smooth_closures=" << (x.smooth_closure_certified() ? "true" : "false") << sep
        << "local_product=" << (x.local_product_certified() ? "true" : "false") << "\n";
    return out.str();
}

std::string render_verify(const VerifyOutcome& v, Format fmt) {
    const GKMSpace& x = *v.space;
    if (fmt == Format::Json) {
        ordered_json j;
        j["points"] = ordered_json::array();
        for (PointId p = 0; p < x.size(); ++p) j["points"].push_back(x.name(p));
        j["chamber"] = v.chamber.sigma();
        j["slope"] = v.slope.tag();
        j["axiom_c_mode"] = v.strong ? "strong" : "weak";
        j["support"] = "necessary conditions";
        if (v.minimal) {
            ordered_json m;
            m["n"] = v.minimal->n;
            m["probe"] = ordered_json::array();
            for (auto [n, ok] : v.minimal->probe) m["probe"].push_back({{"n", n}, {"verdict", pass_str(ok)}});
            j["minimal_n"] = m;
        }
        j["records"] = ordered_json::array();
        for (const auto& r : v.report.records) {
            ordered_json rj;
            rj["pair"] = {x.name(r.f), x.name(r.g)};
            rj["axiom"] = to_string(r.axiom);
            rj["verdict"] = pass_str(r.pass);
            rj["witness"] = witness_json(r.witness);
            j["records"].push_back(rj);
        }
        if (!v.facets.empty()) {
            j["facet_analysis"] = ordered_json::array();
            for (const auto& pf : v.facets) {
                ordered_json fj;
                fj["pair"] = {x.name(pf.f), x.name(pf.g)};
                fj["rows"] = ordered_json::array();
                for (const auto& row : pf.rows) fj["rows"].push_back(facet_row_json(row));
                j["facet_analysis"].push_back(fj);
            }
        }
        j["summary"] = {{"a", pass_str(v.report.passes(Axiom::Vanishing) && v.report.passes(Axiom::Divisibility))},
                        {"b", pass_str(v.report.passes(Axiom::Normalization))},
                        {"c", pass_str(v.report.passes(Axiom::Smallness))},
                        {"verdict", pass_str(v.pass())}};
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    if (fmt == Format::Tsv) {
        out << "pair\taxiom\tverdict\twitness\n";
        for (const auto& r : v.report.records)
            out << x.name(r.f) << "," << x.name(r.g) << "\t" << to_string(r.axiom) << "\t" << pass_str(r.pass) << "\t"
                << witness_str(r.witness, fmt) << "\n";
        if (!v.facets.empty()) {
            out << "pair\tfacet\tE_H\tsigma_H\tt-orientation\tpi_of_slope\tlimit\tverdict\n";
            for (const auto& pf : v.facets)
                for (const auto& row : pf.rows)
                    out << x.name(pf.f) << "," << x.name(pf.g) << "\t" << row.label << "\t"
                        << half_space_str(row.ctx.facet) << "\t(" << csv(row.ctx.direction) << ")\t"
                        << (row.ctx.orientation > 0 ? "t" : "1/t") << "\t" << to_string(row.pi_of_slope) << "\t"
                        << limit_str(row.limit, fmt) << "\t" << pass_str(row.verdict) << "\n";
        }
        if (v.minimal) out << "minimal_n\t" << v.minimal->n << "\n";
        out << "verdict\t" << pass_str(v.pass()) << "\n";
        return out.str();
    }
    out << "chamber sigma = (" << csv(v.chamber.sigma()) << "), slope " << v.slope.tag() << ", axiom c "
        << (v.strong ? "strong" : "weak") << "\n";
    out << "support (a): necessary conditions only (vanishing + divisibility at fixed points)\n";
    for (const auto& r : v.report.records)
        out << "  " << pass_str(r.pass) << "  " << to_string(r.axiom) << "  (" << x.name(r.f) << ", " << x.name(r.g)
            << ")  " << witness_str(r.witness, fmt) << "\n";
    for (const auto& pf : v.facets) {
        out << "facets for (" << x.name(pf.f) << ", " << x.name(pf.g) << "):\n";
        for (const auto& row : pf.rows)
            out << "  " << row.label << "  " << half_space_str(row.ctx.facet) << "  pi(v)=" << to_string(row.pi_of_slope)
                << "  limit=" << limit_str(row.limit, fmt) << "  " << pass_str(row.verdict) << "\n";
    }
    if (v.minimal) {
        out << "minimal n = " << v.minimal->n << "; probe";
        for (auto [n, ok] : v.minimal->probe) out << " " << n << ":" << pass_str(ok);
        out << "\n";
    }
    out << "verdict: " << pass_str(v.pass()) << "\n";
    return out.str();
}

std::vector<std::string> example_summary(const ExampleRun& run) {
    std::vector<std::string> lines;
    lines.push_back("P2 example: " + std::to_string(run.p2.matched()) + "/" + std::to_string(run.p2.checks.size()) +
                    " golden values match");
    const TP1Example& t = run.tp1;
    std::string weak = t.family1_weak && t.family2_weak ? "both pass"
                       : t.family1_weak                 ? "only family 1 passes"
                       : t.family2_weak                 ? "only family 2 passes"
                                                        : "neither passes";
    std::string strong = t.strong_passer != 0 ? "exactly one passes (family " + std::to_string(t.strong_passer) + ")"
                         : t.family1_strong     ? "both pass"
                                                : "neither passes";
    std::string line = "T*P1 example: weak: " + weak + "; strong: " + strong;
    if (t.strong_passer != 0) line += t.passer_equals_mc ? "; passer equals mC candidate" : "; passer differs from mC candidate";
    lines.push_back(line);
    return lines;
}

std::string render_examples(const ExampleRun& run, Format fmt) {
    if (fmt == Format::Json) {
        ordered_json j;
        j["p2"] = ordered_json::array();
        for (const auto& c : run.p2.checks) {
            ordered_json cj;
            cj["name"] = c.name;
            cj["verdict"] = pass_str(c.pass);
            cj["expected"] = c.expected;
            cj["actual"] = c.actual;
            if (!c.diff.empty()) cj["diff"] = c.diff;
            j["p2"].push_back(cj);
        }
        j["facet_table"] = ordered_json::array();
        for (const auto& row : run.p2.facet_rows) j["facet_table"].push_back(facet_row_json(row));
        const TP1Example& t = run.tp1;
        j["tp1"] = {{"family1", {{"weak", pass_str(t.family1_weak)}, {"strong", pass_str(t.family1_strong)}}},
                    {"family2", {{"weak", pass_str(t.family2_weak)}, {"strong", pass_str(t.family2_strong)}}},
                    {"strong_passer", t.strong_passer},
                    {"passer_equals_mc", t.passer_equals_mc}};
        j["summary"] = example_summary(run);
        j["verdict"] = pass_str(run.ok());
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    const char* sep = fmt == Format::Tsv ? "\t" : "  ";
    for (const auto& c : run.p2.checks) {
        out << pass_str(c.pass) << sep << c.name << sep << c.actual << "\n";
        for (const auto& d : c.diff) out << sep << sep << d << "\n";
    }
    if (fmt == Format::Tsv) out << "facet\tE_H\tsigma_H\tt-orientation\tpi_of_slope\tlimit\tverdict\n";
    for (const auto& row : run.p2.facet_rows)
        out << row.label << sep << half_space_str(row.ctx.facet) << sep << "(" << csv(row.ctx.direction) << ")" << sep
            << (row.ctx.orientation > 0 ? "t" : "1/t") << sep << to_string(row.pi_of_slope) << sep
            << limit_str(row.limit, fmt) << sep << pass_str(row.verdict) << "\n";
    for (const auto& l : example_summary(run)) out << l << "\n";
    return out.str();
}

} // namespace envlab
