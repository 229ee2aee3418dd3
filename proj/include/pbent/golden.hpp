#pragma once

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "classify.hpp"
#include "combinatorics.hpp"
#include "core.hpp"
#include "orbits.hpp"
#include "report.hpp"
#include "transforms.hpp"

namespace pbent {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

inline json load_fixture(const std::string& dir, const std::string& file) {
    std::ifstream in(dir + "/" + file);
    if (!in) throw invalid_input("cannot open fixture " + dir + "/" + file);
    return json::parse(in);
}

inline std::string fixture_for(int p, int n) { return "gf" + std::to_string(p) + "_" + std::to_string(n) + ".json"; }

inline PAryFunction from_anf(const std::string& s, int p, int n) { return evaluate_anf(parse_anf(s, p, n), p, n); }

namespace detail {

// value of a cell whose class may be empty (no observations means 0)
inline std::optional<std::int64_t> cell(const ValueSet& s) {
    if (s.empty()) return 0;
    if (s.size() == 1) return *s.begin();
    return std::nullopt;
}

}  // namespace detail

// Cells that differ from the expected integer tables; rows/columns beyond the expected size must be zero.
struct CellMismatch {
    int k = 0, i = 0, j = 0;
    std::string got, want;
    std::string contradiction;  // identity the expected tables break at this cell, empty if none

    std::string describe() const {
        std::string s = "p^" + std::to_string(k) + "_{" + std::to_string(i) + "," + std::to_string(j) + "} = " + got +
                        ", expected " + want;
        return contradiction.empty() ? s : s + " (expected tables break " + contradiction + ")";
    }
};

// Identities any intersection table of a symmetric scheme satisfies:
// p^k_{ij} = p^k_{ji}, sum_j p^k_{ij} = |D_i|, and |D_k| p^k_{ij} invariant under permuting (i, j, k).
template <class Get>
std::string table_contradiction(const Get& t, const std::vector<std::size_t>& sizes, int k, int i, int j) {
    const int m = static_cast<int>(sizes.size());
    const Rational x = t(k, i, j);
    if (x != t(k, j, i)) return "p^k_{ij} = p^k_{ji}";
    if (sizes[k]) {
        Rational row = 0;
        for (int c = 0; c < m; ++c) row += t(k, i, c);
        if (row != Rational(static_cast<std::int64_t>(sizes[i]))) return "row sum of p^k_{i*}";
    }
    const std::array<std::array<int, 3>, 3> perms{{{k, i, j}, {i, j, k}, {j, k, i}}};
    for (const auto& [a, b, c] : perms)
        if (Rational(static_cast<std::int64_t>(sizes[a])) * t(a, b, c) != Rational(static_cast<std::int64_t>(sizes[k])) * x)
            return "|D_k| p^k_{ij} = |D_" + std::to_string(a) + "| p^" + std::to_string(a) + "_{" + std::to_string(b) +
                   "," + std::to_string(c) + "}";
    return "";
}

// Cells that differ from the expected integer tables; rows/columns beyond the expected size must be zero.
inline std::vector<CellMismatch> table_mismatches(const std::vector<PTable>& got, const json& expected,
                                                  const std::vector<std::size_t>& sizes) {
    std::vector<CellMismatch> out;
    const int m = static_cast<int>(expected.size());
    auto want_at = [&](int k, int i, int j) -> Rational {
        return (k < m && i < m && j < m) ? Rational(expected[k][i][j].get<std::int64_t>()) : Rational(0);
    };
    const int g = static_cast<int>(got.size());
    for (int k = 0; k < g; ++k)
        for (int i = 0; i < g; ++i)
            for (int j = 0; j < g; ++j) {
                auto v = detail::cell(got[k][i][j]);
                const Rational want = want_at(k, i, j);
                if (v && Rational(*v) == want) continue;
                CellMismatch c{k, i, j, v ? std::to_string(*v) : to_string(got[k][i][j]), to_string(want), ""};
                if (k < m && i < m && j < m) c.contradiction = table_contradiction(want_at, sizes, k, i, j);
                out.push_back(std::move(c));
            }
    return out;
}

inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(s));
    return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

inline std::vector<CellMismatch> trace_table_mismatches(const TraceTables& t, const json& expected,
                                                        const std::vector<std::size_t>& sizes) {
    std::vector<CellMismatch> out;
    auto want_at = [&](int k, int i, int j) { return parse_rational(expected[k][i][j].get<std::string>()); };
    const int m = static_cast<int>(expected.size());
    for (int k = 0; k < m; ++k)
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                const Rational want = want_at(k, i, j);
                const auto& v = t.p[k][i][j];
                if (v && *v == want) continue;
                out.push_back({k, i, j, v ? to_string(*v) : std::string("n/a"), to_string(want),
                               table_contradiction(want_at, sizes, k, i, j)});
            }
    return out;
}

// Passes when every mismatch sits on a cell the expected tables themselves contradict.
inline Check mismatch_check(const std::string& name, const std::vector<CellMismatch>& mm) {
    Check c{name, true, "all cells match"};
    if (mm.empty()) return c;
    std::vector<std::string> parts;
    for (const auto& m : mm) {
        c.pass = c.pass && !m.contradiction.empty();
        parts.push_back(m.describe());
    }
    c.detail = std::to_string(mm.size()) + " cell(s) differ: ";
    for (std::size_t i = 0; i < parts.size() && i < 6; ++i) c.detail += (i ? "; " : "") + parts[i];
    if (parts.size() > 6) c.detail += "; ...";
    return c;
}

inline std::string join(const std::vector<std::string>& xs, std::size_t limit = 6) {
    std::string s;
    for (std::size_t i = 0; i < xs.size() && i < limit; ++i) s += (i ? "; " : "") + xs[i];
    if (xs.size() > limit) s += "; ... (" + std::to_string(xs.size()) + " total)";
    return s;
}

// Picks the expected case whose level-curve sizes match, then compares every cell.
inline Check compare_to_cases(const std::string& name, const PAryFunction& f, const std::vector<json>& cases) {
    auto rep = is_weighted_pds(level_curves(f));
    Check c{name, false, ""};
    for (const auto& cs : cases) {
        auto sizes = cs.at("sizes").get<std::vector<std::size_t>>();
        bool match = true;
        for (std::size_t i = 0; i < rep.sizes.size(); ++i)
            if (rep.sizes[i] != (i < sizes.size() ? sizes[i] : 0)) match = false;
        if (!match) continue;
        return mismatch_check(name, table_mismatches(rep.p_tables, cs.at("p_tables"), rep.sizes));
    }
    std::string sz;
    for (auto s : rep.sizes) sz += std::to_string(s) + " ";
    c.detail = "no expected case with level-curve sizes " + sz;
    return c;
}

inline std::string sizes_string(const std::map<std::size_t, std::size_t>& m) {
    std::string s;
    for (const auto& [size, count] : m) s += (s.empty() ? "" : " ") + std::to_string(size) + "x" + std::to_string(count);
    return s;
}

inline std::map<std::size_t, std::size_t> orbit_size_histogram(const OrbitPartition& part) {
    std::map<std::size_t, std::size_t> h;
    for (const auto& o : part.orbits) ++h[o.size()];
    return h;
}

// Golden comparisons shared by the CLI and the acceptance binary.
inline std::vector<Check> classification_checks(const ClassificationReport& rep, const json& fx) {
    std::vector<Check> out;
    const int p = rep.enumeration.p, n = rep.enumeration.n;
    const auto& en = rep.enumeration;
    if (en.mode == "even")
        out.push_back({"candidate count", en.candidates == fx.at("candidates").get<std::uint64_t>(),
                       std::to_string(en.candidates)});
    out.push_back({"bent count", en.bent.size() == fx.at("bent_count").get<std::size_t>(), std::to_string(en.bent.size())});
    out.push_back({"closed under GL", rep.partition.closed, rep.partition.closed ? "yes" : "image outside the set"});

    auto hist = orbit_size_histogram(rep.partition);
    std::map<std::size_t, std::size_t> want;
    if (fx.contains("orbit_sizes") && fx.at("orbit_sizes").is_object()) {
        for (auto& [k, v] : fx.at("orbit_sizes").items()) want[std::stoul(k)] = v.get<std::size_t>();
    } else {
        const json& list = fx.contains("orbit_sizes") ? fx.at("orbit_sizes") : fx.at("orbit_sizes_listed");
        for (auto s : list) ++want[s.get<std::size_t>()];
    }
    out.push_back({"orbit sizes", hist == want, sizes_string(hist)});

    bool inv = true;
    for (const auto& a : rep.orbits) inv = inv && a.invariants_constant;
    out.push_back({"orbit invariants constant", inv, ""});

    if (fx.contains("representatives")) {
        std::set<std::size_t> seen;
        bool distinct = true, sizes_ok = true, flags_ok = true, wpds_ok = true;
        std::vector<std::string> notes;
        for (const auto& r : fx.at("representatives")) {
            const std::string name = r.at("name");
            PAryFunction f = from_anf(r.at("anf"), p, n);
            auto o = rep.partition.find(f);
            if (!o) {
                distinct = false;
                notes.push_back(name + " not in the bent set");
                continue;
            }
            if (!seen.insert(*o).second) distinct = false;
            const auto& a = rep.orbits[*o];
            if (a.size != r.at("size").get<std::size_t>()) {
                sizes_ok = false;
                notes.push_back(name + " orbit size " + std::to_string(a.size));
            }
            if (a.regular != r.at("regular").get<bool>() || a.weakly_regular != r.at("weakly_regular").get<bool>()) {
                flags_ok = false;
                notes.push_back(name + (a.regular ? " regular" : a.weakly_regular ? " weakly regular" : " not weakly regular"));
            }
            if (a.weighted_pds != r.at("weighted_pds").get<bool>()) {
                wpds_ok = false;
                notes.push_back(name + (a.weighted_pds ? " gives" : " does not give") + " a weighted PDS");
            }
        }
        out.push_back({"representatives in distinct orbits", distinct, join(notes)});
        out.push_back({"representative orbit sizes", sizes_ok, ""});
        out.push_back({"representative regularity", flags_ok, ""});
        out.push_back({"weighted PDS verdicts", wpds_ok, ""});
    }
    return out;
}

// Intersection-table comparisons for each classified space.
inline std::vector<Check> table_checks(const ClassificationReport& rep, const json& fx) {
    std::vector<Check> out;
    const int p = rep.enumeration.p, n = rep.enumeration.n;
    if (p == 3 && n == 2) {
        std::vector<json> cases{fx.at("sw_case_1"), fx.at("sw_case_2")};
        bool all = true;
        std::vector<std::string> notes;
        for (const auto& f : rep.enumeration.bent) {
            auto w = is_weighted_pds(level_curves(f));
            if (!w.is_weighted_pds) continue;
            auto c = compare_to_cases(values_csv(f), f, cases);
            if (!c.pass) {
                all = false;
                notes.push_back(c.name + ": " + c.detail);
            }
        }
        out.push_back({"weighted PDS tables match the two GF(3)^2 cases", all, join(notes, 3)});
    } else if (p == 3 && n == 3) {
        std::vector<json> cases{fx.at("gf33bent_case_1"), fx.at("gf33bent_case_2")};
        for (const auto& r : fx.at("representatives")) {
            if (!r.at("weighted_pds").get<bool>()) continue;
            auto c = compare_to_cases(r.at("name").get<std::string>() + " tables", from_anf(r.at("anf"), p, n), cases);
            out.push_back(c);
        }
    } else if (p == 5 && n == 2) {
        std::map<std::string, std::string> anf;
        for (const auto& r : fx.at("representatives")) anf[r.at("name")] = r.at("anf");
        for (const std::string name : {"f1", "f2", "f5"}) {
            auto f = from_anf(anf.at(name), p, n);
            auto w = is_weighted_pds(level_curves(f));
            out.push_back(mismatch_check(name + " tables", table_mismatches(w.p_tables, fx.at(name + "_tables"), w.sizes)));
        }
        for (const auto& other : fx.at("f5_tables_shared_with")) {
            auto f = from_anf(anf.at(other.get<std::string>()), p, n);
            auto w = is_weighted_pds(level_curves(f));
            out.push_back(mismatch_check(other.get<std::string>() + " tables equal f5 tables",
                                         table_mismatches(w.p_tables, fx.at("f5_tables"), w.sizes)));
        }
        auto f3 = from_anf(anf.at("f3"), p, n);
        auto curves = level_curves(f3);
        auto t = intersection_numbers_trace(build_cayley_graph(f3), curves);
        std::vector<std::string> bad;
        for (auto& [key, v] : fx.at("f3_traces").items()) {
            int i = key[0] - '0', j = key[2] - '0', k = key[4] - '0';
            if (t.traces[k][i][j] != v.get<std::int64_t>())
                bad.push_back("Tr(A" + std::to_string(i) + "A" + std::to_string(j) + "A" + std::to_string(k) +
                              ") = " + std::to_string(t.traces[k][i][j]) + ", expected " + std::to_string(v.get<std::int64_t>()));
        }
        out.push_back({"f3 traces", bad.empty(), join(bad)});
        std::vector<std::string> half;
        for (const auto& c : t.non_integral) half.push_back(to_string(*t.p[c[0]][c[1]][c[2]]));
        const bool has_half = std::find(half.begin(), half.end(), "1/2") != half.end();
        out.push_back({"f3 trace table has non-integral cells", !t.all_integral && has_half,
                       std::to_string(t.non_integral.size()) + " non-integral cells"});
        std::vector<std::size_t> sizes;
        for (const auto& d : curves.D) sizes.push_back(d.size());
        out.push_back(mismatch_check("f3 trace tables", trace_table_mismatches(t, fx.at("f3_trace_tables"), sizes)));
    }
    return out;
}

struct RegularityRow {
    PAryFunction f;
    bool regular = false, weakly_regular = false, weighted_srg = false, complete = false;
};

struct RegularityCharacterization {
    std::vector<RegularityRow> rows;
    bool holds = false;
};

// (weighted SRG and not complete) <=> regular; (weighted SRG and complete) <=> weakly regular, not regular
inline RegularityCharacterization regularity_characterization(const std::vector<PAryFunction>& bent) {
    RegularityCharacterization r;
    r.holds = !bent.empty();
    for (const auto& f : bent) {
        auto prof = classify_regularity(f);
        auto v = weighted_srg_verdict(build_cayley_graph(f));
        RegularityRow row{f, prof.is_regular, prof.is_weakly_regular, v.is_edge_weighted_srg, v.complete};
        const bool a = (row.weighted_srg && !row.complete) == row.regular;
        const bool b = (row.weighted_srg && row.complete) == (row.weakly_regular && !row.regular);
        r.holds = r.holds && a && b;
        r.rows.push_back(row);
    }
    return r;
}

struct ConjectureObservation {
    PAryFunction f;
    std::size_t orbit_size = 0;
    bool homogeneous = false, weakly_regular = false, weighted_srg = false;
    std::vector<ValueSet> mu_diagonal;  // mu_{ii} for nonempty D_i, 1 <= i < p
    bool main_holds = true;    // weighted PDS => homogeneous and weakly regular
    bool walsh_applies = false;
    bool walsh_holds = true;   // weakly regular + weighted SRG => mu_ii = 0
};

// One observation per orbit whose level curves give a weighted PDS, or that is a weighted SRG.
inline std::vector<ConjectureObservation> conjecture_report(const ClassificationReport& rep) {
    std::vector<ConjectureObservation> out;
    for (std::size_t o = 0; o < rep.orbits.size(); ++o) {
        const auto& a = rep.orbits[o];
        if (!a.weighted_pds && !a.weighted_srg) continue;
        ConjectureObservation c;
        c.f = a.representative;
        c.orbit_size = a.size;
        c.homogeneous = a.homogeneous;
        c.weakly_regular = a.weakly_regular;
        c.weighted_srg = a.weighted_srg;
        auto curves = level_curves(a.representative);
        auto w = is_weighted_pds(curves);
        for (int i = 1; i < a.representative.p; ++i) {
            if (curves.D[i].empty()) continue;
            auto it = w.mu.find({i, i});
            c.mu_diagonal.push_back(it == w.mu.end() ? ValueSet{} : it->second);
        }
        if (a.weighted_pds) c.main_holds = a.homogeneous && a.weakly_regular;
        c.walsh_applies = a.weakly_regular && a.weighted_srg;
        if (c.walsh_applies)
            c.walsh_holds = std::all_of(c.mu_diagonal.begin(), c.mu_diagonal.end(), [](const ValueSet& m) { return m.empty() || m == ValueSet{0}; });
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace pbent
