#pragma once

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "classify.hpp"
#include "combinatorics.hpp"
#include "cyclotomic.hpp"
#include "graph.hpp"
#include "transforms.hpp"

namespace pbent {

using json = nlohmann::json;

inline json to_json(const CycInt& a) { return a.coeffs(); }

// single values print as numbers, non-constant cells as sorted arrays
inline json to_json(const ValueSet& s) {
    if (s.size() == 1) return *s.begin();
    return std::vector<std::int64_t>(s.begin(), s.end());
}

inline std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline std::string key_of(std::initializer_list<int> xs) {
    std::string k;
    for (int x : xs) k += (k.empty() ? "" : ",") + std::to_string(x);
    return k;
}

inline json spectrum_json(const Spectrum& W, int p, int n) {
    json j;
    j["p"] = p;
    j["n"] = n;
    j["values"] = json::array();
    for (const auto& w : W) j["values"].push_back(to_json(w));
    return j;
}

inline json tables_json(const std::vector<PTable>& t) {
    json out = json::array();
    for (const auto& k : t) {
        json m = json::array();
        for (const auto& row : k) {
            json r = json::array();
            for (const auto& cell : row) r.push_back(to_json(cell));
            m.push_back(r);
        }
        out.push_back(m);
    }
    return out;
}

inline json trace_tables_json(const TraceTables& t) {
    json out = json::array();
    for (const auto& k : t.p) {
        json m = json::array();
        for (const auto& row : k) {
            json r = json::array();
            for (const auto& cell : row) r.push_back(cell ? json(to_string(*cell)) : json(nullptr));
            m.push_back(r);
        }
        out.push_back(m);
    }
    return out;
}

inline json wpds_json(const WpdsReport& rep, const TraceTables* trace = nullptr) {
    json j;
    j["sizes"] = rep.sizes;
    j["lambda"] = json::object();
    for (const auto& [key, s] : rep.lambda) j["lambda"][key_of({key[0], key[1], key[2]})] = to_json(s);
    j["mu"] = json::object();
    for (const auto& [key, s] : rep.mu) j["mu"][key_of({key.first, key.second})] = to_json(s);
    j["p_tables"] = tables_json(rep.p_tables);
    j["is_weighted_pds"] = rep.is_weighted_pds;
    j["symmetric"] = rep.symmetric;
    j["integrality"] = json::array();
    if (trace)
        for (const auto& c : trace->non_integral)
            j["integrality"].push_back({{"k", c[0]}, {"i", c[1]}, {"j", c[2]}, {"value", to_string(*trace->p[c[0]][c[1]][c[2]])}});
    if (rep.unweighted) {
        const auto& u = *rep.unweighted;
        j["unweighted_pds"] = {u.v, u.k, u.lambda, u.mu ? json(*u.mu) : json(nullptr)};
    }
    return j;
}

inline json weighted_srg_json(const WeightedSrgVerdict& v) {
    json j;
    for (const auto& [key, s] : v.k) j["k"][key_of({key.first, key.second})] = to_json(s);
    for (const auto& [key, s] : v.lambda) j["lambda"][key_of({key[0], key[1], key[2]})] = to_json(s);
    j["mu"] = json::object();
    for (const auto& [key, s] : v.mu) j["mu"][key_of({key.first, key.second})] = to_json(s);
    j["is_edge_weighted_srg"] = v.is_edge_weighted_srg;
    j["complete"] = v.complete;
    return j;
}

inline json profile_json(const BentProfile& prof) {
    json j;
    j["bent"] = prof.is_bent;
    j["weakly_regular"] = prof.is_weakly_regular;
    j["regular"] = prof.is_regular;
    if (prof.dual) j["dual"] = values_csv(*prof.dual);
    if (!prof.mu_description.empty()) j["mu"] = prof.mu_description;
    return j;
}

inline json orbit_attributes_json(const OrbitAttributes& a) {
    json j;
    j["size"] = a.size;
    j["representative"] = to_literal(a.representative);
    j["anf"] = a.anf;
    j["degree"] = a.degree;
    j["homogeneous"] = a.homogeneous;
    j["signature"] = a.signature;
    j["support_size"] = a.support_size;
    j["bent"] = a.bent;
    j["regular"] = a.regular;
    j["weakly_regular"] = a.weakly_regular;
    j["mu"] = a.mu;
    j["weighted_pds"] = a.weighted_pds;
    j["weighted_srg"] = a.weighted_srg;
    j["complete"] = a.complete;
    if (a.unweighted_srg) {
        const auto& s = *a.unweighted_srg;
        j["unweighted_srg"] = {s.v, s.k, s.lambda, s.mu};
    } else {
        j["unweighted_srg"] = nullptr;
    }
    j["invariants_constant"] = a.invariants_constant;
    return j;
}

inline json orbit_report_json(const ClassificationReport& rep) {
    json j;
    const auto& en = rep.enumeration;
    j["p"] = en.p;
    j["n"] = en.n;
    j["mode"] = en.mode;
    j["candidates"] = en.candidates;
    j["bent"] = en.bent.size();
    j["closed"] = rep.partition.closed;
    j["orbits"] = json::array();
    for (std::size_t o = 0; o < rep.orbits.size(); ++o) {
        json a = orbit_attributes_json(rep.orbits[o]);
        a["id"] = o;
        json rel = json::array();
        for (const auto& r : rep.scalar_relations[o]) rel.push_back(r ? json(*r) : json(nullptr));
        a["scalar_images"] = rel;
        j["orbits"].push_back(a);
    }
    return j;
}

inline std::string orbit_csv(const ClassificationReport& rep) {
    std::ostringstream os;
    os << "orbit_id,size,signature,bent,regular,weakly_regular,homogeneous,weighted_pds\n";
    auto b = [](bool x) { return x ? "true" : "false"; };
    for (std::size_t o = 0; o < rep.orbits.size(); ++o) {
        const auto& a = rep.orbits[o];
        std::string sig;
        for (auto s : a.signature) sig += (sig.empty() ? "" : " ") + std::to_string(s);
        os << o << "," << a.size << "," << sig << "," << b(a.bent) << "," << b(a.regular) << ","
           << b(a.weakly_regular) << "," << b(a.homogeneous) << "," << b(a.weighted_pds) << "\n";
    }
    return os.str();
}

}  // namespace pbent
