#include "envlab/space_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace envlab {

using nlohmann::ordered_json;

namespace {

const ordered_json& field(const ordered_json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InputError(std::string("space file: missing field '") + key + "'");
    return j.at(key);
}

std::vector<std::int64_t> int_vector(const ordered_json& j, const std::string& what) {
    if (!j.is_array()) throw InputError("space file: " + what + " must be an array of integers");
    std::vector<std::int64_t> out;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw InputError("space file: " + what + " must be an array of integers");
        out.push_back(x.get<std::int64_t>());
    }
    return out;
}

ExpVec weight(const ordered_json& j, std::size_t rank, const std::string& what) {
    auto v = int_vector(j, what);
    if (v.size() == rank + 1) {
        if (v.back() != 0) throw InputError("space file: " + what + " has a nonzero y part");
        v.pop_back();
    }
    if (v.size() != rank) throw RankMismatch("space file: " + what + " has length " + std::to_string(v.size()) +
                                             ", expected rank " + std::to_string(rank));
    return ExpVec(v);
}

Cochar parse_csv(const std::string& s) {
    Cochar out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            out.push_back(std::stoll(item, &pos));
            if (pos != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw InputError("space file: bad cocharacter key '" + s + "'");
        }
    }
    return out;
}

} // namespace

GKMSpace parse_space_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("space file: malformed JSON: ") + e.what());
    }
    try {
        GKMSpace::Data d;
        const auto& rank = field(j, "rank");
        if (!rank.is_number_integer() || rank.get<std::int64_t>() < 0)
            throw InputError("space file: rank must be a nonnegative integer");
        d.rank = rank.get<std::size_t>();

        for (const auto& p : field(j, "points")) {
            if (!p.is_string()) throw InputError("space file: point names must be strings");
            d.names.push_back(p.get<std::string>());
        }
        auto index = [&](const ordered_json& nm) -> PointId {
            if (!nm.is_string()) throw InputError("space file: expected a point name");
            const auto s = nm.get<std::string>();
            for (PointId i = 0; i < d.names.size(); ++i)
                if (d.names[i] == s) return i;
            throw InputError("space file: unknown point '" + s + "'");
        };

        const auto& tan = field(j, "tangent");
        for (const auto& nm : d.names) {
            if (!tan.contains(nm)) throw InputError("space file: no tangent weights for '" + nm + "'");
            WeightList w;
            for (const auto& x : tan.at(nm)) w.push_back(weight(x, d.rank, "tangent weight at '" + nm + "'"));
            d.tangent.push_back(std::move(w));
        }

        if (j.contains("edges")) {
            std::vector<std::vector<PointId>> e;
            for (const auto& nm : d.names) {
                if (!j["edges"].contains(nm)) throw InputError("space file: no edges for '" + nm + "'");
                std::vector<PointId> row;
                for (const auto& q : j["edges"].at(nm)) row.push_back(index(q));
                e.push_back(std::move(row));
            }
            d.edges = std::move(e);
        }

        if (j.contains("bundles")) {
            for (const auto& [name, b] : j["bundles"].items()) {
                LineBundle lb;
                lb.name = name;
                const auto& res = field(b, "restriction");
                for (const auto& nm : d.names) {
                    if (!res.contains(nm))
                        throw InputError("space file: bundle '" + name + "' has no value at '" + nm + "'");
                    lb.restriction.push_back(weight(res.at(nm), d.rank, "bundle '" + name + "' at '" + nm + "'"));
                }
                lb.ampleness = b.contains("ampleness") ? ampleness_from_string(b["ampleness"].get<std::string>())
                                                       : Ampleness::Other;
                d.bundles.push_back(std::move(lb));
            }
        }

        if (j.contains("order")) {
            for (const auto& [key, rel] : j["order"].items()) {
                OrderEntry o;
                o.representative = parse_csv(key);
                for (const auto& pr : rel) {
                    if (!pr.is_array() || pr.size() != 2)
                        throw InputError("space file: order relations are [less, greater] pairs");
                    o.relations.emplace_back(index(pr[0]), index(pr[1]));
                }
                d.orders.push_back(std::move(o));
            }
        }

        const auto& cert = field(j, "certifications");
        auto flag = [&](const char* k) {
            const auto& v = field(cert, k);
            if (!v.is_boolean()) throw InputError(std::string("space file: certification '") + k + "' must be boolean");
            return v.get<bool>();
        };
        d.smooth_closure_certified = flag("smooth_closures");
        d.local_product_certified = flag("local_product");
        return GKMSpace(std::move(d));
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("space file: ") + e.what());
    }
}

GKMSpace load_space_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open space file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_space_json(ss.str());
}

std::string space_to_json(const GKMSpace& x) {
    ordered_json j;
    j["rank"] = x.rank();
    j["points"] = ordered_json::array();
    for (PointId p = 0; p < x.size(); ++p) j["points"].push_back(x.name(p));
    ordered_json tan = ordered_json::object();
    for (PointId p = 0; p < x.size(); ++p) {
        ordered_json w = ordered_json::array();
        for (const auto& v : x.tangent(p)) w.push_back(v.a);
        tan[x.name(p)] = w;
    }
    j["tangent"] = tan;
    if (x.has_edges()) {
        ordered_json e = ordered_json::object();
        for (PointId p = 0; p < x.size(); ++p) {
            ordered_json row = ordered_json::array();
            for (std::size_t k = 0; k < x.dim(); ++k) row.push_back(x.name(x.edge(p, k)));
            e[x.name(p)] = row;
        }
        j["edges"] = e;
    }
    ordered_json b = ordered_json::object();
    for (const auto& lb : x.bundles()) {
        ordered_json res = ordered_json::object();
        for (PointId p = 0; p < x.size(); ++p) res[x.name(p)] = lb.restriction[p].a;
        b[lb.name] = {{"restriction", res}, {"ampleness", to_string(lb.ampleness)}};
    }
    j["bundles"] = b;
    if (!x.explicit_orders().empty()) {
        ordered_json o = ordered_json::object();
        for (const auto& e : x.explicit_orders()) {
            std::string key;
            for (std::size_t i = 0; i < e.representative.size(); ++i)
                key += (i ? "," : "") + std::to_string(e.representative[i]);
            ordered_json rel = ordered_json::array();
            for (auto [lo, hi] : e.relations) rel.push_back({x.name(lo), x.name(hi)});
            o[key] = rel;
        }
        j["order"] = o;
    }
    j["certifications"] = {{"smooth_closures", x.smooth_closure_certified()},
                           {"local_product", x.local_product_certified()}};
    return j.dump(2) + "\n";
}

} // namespace envlab
