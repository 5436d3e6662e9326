#include "envlab/envelope.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace envlab {

namespace {

QVec to_qvec(const ExpVec& e) { return QVec::from_ints(e.a); }

ExpVec y_power(std::size_t rank, std::int64_t k) {
    ExpVec e = ExpVec::zero(rank);
    e.y = k;
    return e;
}

// nu^-_g = repelling tangent weights plus y times the duals of the attracting ones.
WeightList nu_minus(const CellData& cd) {
    WeightList out = cd.repelling;
    for (const auto& w : cd.attracting) out.push_back(ExpVec((-w).a, 1));
    return out;
}

PairRecord smallness_record(const StabCandidate& cand, const Slope& s, bool strong, PointId f, PointId g) {
    const GKMSpace& x = *cand.space;
    const CellData cd = cell_data(x, cand.chamber, g);
    const QVec shift = s.difference(f, g) + to_qvec(det_character(cd.attracting, x.rank()));
    const QPolytope p = translate(newton_A(cand.entry(f, g)), shift);
    const QPolytope bound = newton_A(euler(nu_minus(cd), x.rank()));
    PairRecord rec{f, g, Axiom::Smallness, true, {}};
    rec.witness.polytope = p.vertices();
    rec.witness.bound = bound.vertices();
    rec.witness.excluded = QVec(x.rank());
    for (const auto& v : p.vertices()) {
        if (!contains_point(bound, v)) {
            rec.pass = false;
            rec.witness.counterexample = v;
            rec.witness.note = "vertex outside the bounding polytope";
            return rec;
        }
    }
    if (strong && contains_point(p, QVec(x.rank()))) {
        rec.pass = false;
        rec.witness.counterexample = QVec(x.rank());
        rec.witness.note = "contains the excluded point";
    }
    return rec;
}

} // namespace

Slope Slope::trivial(const GKMSpace& x) {
    Slope s;
    s.values.assign(x.size(), ExpVec::zero(x.rank()));
    return s;
}

Slope Slope::from_bundle(const GKMSpace& x, const std::string& name, std::int64_t n) {
    if (n < 1) throw InputError("slope denominator must be a positive integer");
    const LineBundle& b = x.bundle(name);
    Slope s;
    s.name = b.name;
    s.values = b.restriction;
    s.n = n;
    s.ampleness = b.ampleness;
    return s;
}

Slope Slope::with_n(std::int64_t k) const {
    if (k < 1) throw InputError("slope denominator must be a positive integer");
    Slope s = *this;
    s.n = k;
    return s;
}

QVec Slope::difference(PointId f, PointId g) const {
    return (to_qvec(values.at(f)) - to_qvec(values.at(g))) / Rational(static_cast<long>(n));
}

bool Slope::is_trivial() const {
    return std::all_of(values.begin(), values.end(), [](const ExpVec& e) { return e.a_is_zero(); });
}

std::string Slope::tag() const { return n == 1 ? name : name + "/" + std::to_string(n); }

StabCandidate candidate_from_mc(const GKMSpace& x, const Chamber& c) {
    StabCandidate cand;
    cand.space = &x;
    cand.chamber = c;
    cand.order = x.order(c);
    cand.label = "mC";
    const auto mc = mc_table(x, c);
    for (PointId f = 0; f < x.size(); ++f) {
        const auto d = static_cast<std::int64_t>(cell_data(x, c, f).dim());
        std::vector<LaurentPoly> row;
        for (const auto& v : mc[f].values) row.push_back(shift(v, y_power(x.rank(), -d)));
        cand.table.push_back(std::move(row));
    }
    return cand;
}

std::string to_string(Axiom a) {
    switch (a) {
    case Axiom::Vanishing: return "a:vanishing";
    case Axiom::Divisibility: return "a:divisibility";
    case Axiom::Normalization: return "b:normalization";
    case Axiom::Smallness: return "c:newton";
    }
    return "?";
}

bool AxiomReport::passes(Axiom a) const {
    return std::all_of(records.begin(), records.end(),
                       [a](const PairRecord& r) { return r.axiom != a || r.pass; });
}

bool AxiomReport::verdict() const {
    return std::all_of(records.begin(), records.end(), [](const PairRecord& r) { return r.pass; });
}

void AxiomReport::append(const AxiomReport& o) { records.insert(records.end(), o.records.begin(), o.records.end()); }

AxiomReport check_axiom_a(const StabCandidate& cand) {
    const GKMSpace& x = *cand.space;
    AxiomReport rep;
    for (PointId f = 0; f < x.size(); ++f) {
        for (PointId g = 0; g < x.size(); ++g) {
            const LaurentPoly& e = cand.entry(f, g);
            if (!cand.order.leq(g, f)) {
                PairRecord rec{f, g, Axiom::Vanishing, e.is_zero(), {}};
                if (!rec.pass) rec.witness.entry = e;
                rep.records.push_back(std::move(rec));
                continue;
            }
            const LaurentPoly d = lambda_y_dual(cell_data(x, cand.chamber, g).attracting, x.rank());
            auto q = exact_quotient(e, d);
            PairRecord rec{f, g, Axiom::Divisibility, q.has_value(), {}};
            rec.witness.lhs = d;
            if (q)
                rec.witness.quotient = *q;
            else
                rec.witness.entry = e;
            rep.records.push_back(std::move(rec));
        }
    }
    return rep;
}

AxiomReport check_axiom_b(const StabCandidate& cand) {
    const GKMSpace& x = *cand.space;
    AxiomReport rep;
    for (PointId f = 0; f < x.size(); ++f) {
        const CellData cd = cell_data(x, cand.chamber, f);
        LaurentPoly lhs = shift(cand.entry(f, f), det_character(cd.attracting, x.rank()));
        if (cd.attracting.size() % 2 == 1) lhs = -lhs;
        const LaurentPoly rhs = euler(nu_minus(cd), x.rank());
        PairRecord rec{f, f, Axiom::Normalization, lhs == rhs, {}};
        rec.witness.lhs = lhs;
        rec.witness.rhs = rhs;
        rep.records.push_back(std::move(rec));
    }
    return rep;
}

AxiomReport check_axiom_c(const StabCandidate& cand, const Slope& s, bool strong) {
    AxiomReport rep;
    rep.slope = s.tag();
    rep.strong = strong;
    const std::size_t n = cand.space->size();
    for (PointId f = 0; f < n; ++f)
        for (PointId g = 0; g < n; ++g)
            if (cand.order.less(g, f)) rep.records.push_back(smallness_record(cand, s, strong, f, g));
    return rep;
}

AxiomReport check_all(const StabCandidate& cand, const Slope& s, bool strong) {
    AxiomReport rep = check_axiom_a(cand);
    rep.append(check_axiom_b(cand));
    rep.append(check_axiom_c(cand, s, strong));
    rep.slope = s.tag();
    rep.strong = strong;
    return rep;
}

StabCandidate slope_translate(const StabCandidate& cand, const Slope& s) {
    if (s.n != 1) throw InputError("only integral slopes translate candidates");
    StabCandidate out = cand;
    for (PointId f = 0; f < out.table.size(); ++f)
        for (PointId g = 0; g < out.table[f].size(); ++g)
            out.table[f][g] = shift(out.table[f][g], s.values.at(g) - s.values.at(f));
    out.label = cand.label + "*" + s.tag();
    return out;
}

std::int64_t search_cap() {
    if (const char* env = std::getenv("ENVLAB_SEARCH_CAP")) {
        char* end = nullptr;
        const long long v = std::strtoll(env, &end, 10);
        if (end == env || *end != '\0' || v < 1) throw InputError("ENVLAB_SEARCH_CAP must be a positive integer");
        return v;
    }
    return 10000;
}

bool MinimalN::stable() const {
    return std::all_of(probe.begin(), probe.end(), [](const auto& p) { return p.second; });
}

MinimalN minimal_n(const StabCandidate& cand, const Slope& s, std::optional<std::int64_t> cap) {
    const std::int64_t limit = cap ? *cap : search_cap();
    auto passes = [&](std::int64_t n) { return check_axiom_c(cand, s.with_n(n), true).verdict(); };
    MinimalN out;
    if (s.is_trivial()) {
        out.n = 1;
    } else {
        if (s.ampleness != Ampleness::AntiAmple)
            throw InputError("minimal-n search needs an anti-ample slope; '" + s.name + "' is " +
                             to_string(s.ampleness));
        std::int64_t n = 1;
        while (n <= limit && !passes(n)) ++n;
        if (n > limit)
            throw SearchCapExceeded("no n <= " + std::to_string(limit) + " satisfies axiom c for slope " + s.name);
        out.n = n;
    }
    for (std::int64_t k = out.n + 1; k <= out.n + 5; ++k) out.probe.emplace_back(k, passes(k));
    return out;
}

std::vector<Perturbation> perturbation_family(const StabCandidate& cand, std::size_t min_count) {
    const GKMSpace& x = *cand.space;
    const std::size_t r = x.rank();
    std::vector<Perturbation> out;
    for (PointId f = 0; f < x.size(); ++f)
        for (PointId g = 0; g < x.size(); ++g)
            if (cand.order.less(g, f)) {
                const ExpVec v = -det_character(cell_data(x, cand.chamber, g).attracting, r);
                out.push_back({f, g, LaurentPoly::monomial(v), "excluded-vertex"});
            }
    if (x.size() == 0) return out;

    // Characters e^v y^k with v in growing boxes, in a fixed order.
    std::vector<ExpVec> shifts;
    auto add_shell = [&](std::int64_t b) {
        Cochar v(r, -b);
        while (true) {
            std::int64_t m = 0;
            for (auto e : v) m = std::max(m, e < 0 ? -e : e);
            if (m == b)
                for (std::int64_t k = -1; k <= 1; ++k) shifts.push_back(ExpVec(v, k));
            std::size_t i = r;
            bool done = true;
            while (i > 0) {
                --i;
                if (v[i] < b) {
                    ++v[i];
                    done = false;
                    break;
                }
                v[i] = -b;
            }
            if (done) break;
        }
        if (r == 0 && b == 0)
            for (std::int64_t k = -1; k <= 1; ++k) shifts.push_back(ExpVec({}, k));
    };
    std::size_t used = 0;
    for (std::int64_t b = 0; out.size() < min_count && b < 8; ++b) {
        add_shell(b);
        for (; used < shifts.size(); ++used) {
            for (PointId f = 0; f < x.size(); ++f)
                for (PointId g = 0; g < x.size(); ++g)
                    out.push_back({f, g, shift(euler(x.tangent(g), r), shifts[used]),
                                   "eu*" + to_string(shifts[used])});
            if (out.size() >= min_count) break;
        }
    }
    return out;
}

UniquenessReport uniqueness_probe(const StabCandidate& cand, const std::vector<Perturbation>& perturbations,
                                  const std::vector<StabCandidate>& others) {
    const Slope triv = Slope::trivial(*cand.space);
    UniquenessReport rep;
    std::vector<const StabCandidate*> passers;
    const bool base_passes = check_all(cand, triv, true).verdict();
    if (base_passes) passers.push_back(&cand);
    for (const auto& p : perturbations) {
        ++rep.tried;
        StabCandidate c = cand;
        c.table[p.f][p.g] = c.table[p.f][p.g] + p.delta;
        if (check_all(c, triv, true).verdict()) {
            if (!p.delta.is_zero()) rep.survivors.push_back(p);
        } else {
            ++rep.broken;
        }
    }
    for (const auto& o : others)
        if (check_all(o, triv, true).verdict()) passers.push_back(&o);
    for (const auto* c : passers)
        if (!c->same_table(*passers.front())) rep.passing_candidates_agree = false;
    return rep;
}

} // namespace envlab
