#pragma once

/**
 * @file corpus.hpp
 * @brief Exhaustive theorem verification over all semigroups up to a genus
 *        bound, with a JSON-lines report cache.
 *
 * Properties are registered declaratively (id, checker); every checker is
 * a pure function of one semigroup and its report, so the corpus is
 * partitioned across workers with an atomic cursor and the aggregate is
 * sorted afterwards. Output is therefore identical for any worker count.
 *
 * Skip semantics: preconditions such as "type = 2" or "not a DVR" produce
 * skipped results, never vacuous passes, so coverage stays visible.
 *
 * Cache: JSON lines, first line {"format": "cdeg-cache", "version": 1},
 * then one record {"gens": [...], "report": {...}} per semigroup, sorted
 * by generator sequence. A cache hit skips recomputation of the report
 * (including the rootset enumeration, the expensive part).
 */

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "check_result.hpp"
#include "errors.hpp"
#include "idealization.hpp"
#include "invariants.hpp"
#include "json_io.hpp"
#include "relideal.hpp"
#include "roots.hpp"
#include "semigroup.hpp"

namespace cdeg {

/// Full per-ring analysis: every invariant plus the rootset summary.
inline InvariantReport analyze(const NumericalSemigroup& S,
                               std::int64_t roots_cap = default_roots_genus_cap) {
    InvariantReport rep = report(S);
    if (S.genus() <= roots_cap) fill_rootset(rep, S, roots_cap);
    return rep;
}

struct ExperimentRow {
    std::vector<std::int64_t> generators;
    std::int64_t rho_R = 0;
    std::int64_t rho_A = 0;
    bool equal = false;
};

struct PropertyCounts {
    std::int64_t pass = 0, fail = 0, skipped = 0;
};

struct VerificationReport {
    std::int64_t max_genus = 0;
    std::int64_t semigroup_count = 0;
    std::vector<std::string> properties;
    PropertyCounts totals;
    std::map<std::string, PropertyCounts> per_property;
    std::vector<PropertyCheckResult> failures;
    std::vector<ExperimentRow> experiment;
    double wall_ms = 0.0;
};

namespace detail_corpus {

struct CheckContext {
    const NumericalSemigroup& S;
    const InvariantReport& rep;
    std::int64_t roots_cap;
    // idealization components are shared by thm6.8 / cor6.9 / question6.10
    mutable std::optional<IdealizationInvariants> ideal_components;

    const IdealizationInvariants& idealization() const {
        if (!ideal_components) ideal_components = detail_idealization::components(S);
        return *ideal_components;
    }
};

using Checker = PropertyCheckResult (*)(const CheckContext&);

inline PropertyCheckResult skip_dvr(const std::string& id, const CheckContext& c) {
    return PropertyCheckResult::skip(id, c.S.generators(), "valuation ring");
}
inline PropertyCheckResult skip_roots(const std::string& id, const CheckContext& c) {
    return PropertyCheckResult::skip(id, c.S.generators(), "genus exceeds roots cap");
}

inline PropertyCheckResult check_cor25(const CheckContext& c) {
    nlohmann::ordered_json payload{{"cdeg", c.rep.cdeg}, {"type", c.rep.type}};
    const bool ok = c.rep.cdeg >= c.rep.type - 1 && ((c.rep.cdeg == 0) == (c.rep.type == 1));
    return ok ? PropertyCheckResult::pass("cor2.5", c.S.generators(), payload)
              : PropertyCheckResult::fail("cor2.5", c.S.generators(), payload);
}

inline PropertyCheckResult check_prop26(const CheckContext& c) {
    if (c.S.is_trivial()) return skip_dvr("prop2.6", c);
    if (c.S.genus() > c.roots_cap) return skip_roots("prop2.6", c);
    // Socle length, lambda(E/(a)) and red(E) are translation invariants, and
    // every class has an integral translate inside m^2, so the sweep runs on
    // the normalized representatives directly.
    const RelativeIdeal R = ring_ideal(c.S);
    const std::int64_t r = c.S.type();
    std::int64_t classes = 0, irreducible = 0;
    PropertyCheckResult verdict = PropertyCheckResult::pass("prop2.6", c.S.generators());
    enumerate_normalized_ideals(
        c.S,
        [&](const RelativeIdeal& L) {
            if (!verdict.passed()) return;
            ++classes;
            if (socle_length(L) != 1) return;  // not irreducible
            ++irreducible;
            const std::int64_t lam = length_between(R, L);  // = lambda(E/(a))
            if (lam < r - 1 || (lam == r - 1 && reduction_number(L) > 2))
                verdict = PropertyCheckResult::fail(
                    "prop2.6", c.S.generators(),
                    {{"class", minimal_generators(L)}, {"lambda_E_over_a", lam}, {"type", r}});
        },
        c.roots_cap);
    if (!verdict.passed()) return verdict;
    return PropertyCheckResult::pass("prop2.6", c.S.generators(),
                                     {{"classes", classes}, {"irreducible", irreducible}});
}

inline PropertyCheckResult check_rem43(const CheckContext& c) {
    if (c.rep.type < 2)
        return PropertyCheckResult::skip("rem4.3", c.S.generators(), "type 1 (Gorenstein)");
    nlohmann::ordered_json payload{{"rho", c.rep.canonical_index},
                                   {"multiplicity", c.rep.multiplicity},
                                   {"cdeg", c.rep.cdeg},
                                   {"type", c.rep.type}};
    bool ok = c.rep.canonical_index >= 2;
    if (c.rep.multiplicity == 3) ok = ok && c.rep.canonical_index == 2;
    if (c.rep.cdeg == c.rep.type - 1) ok = ok && c.rep.canonical_index == 2;
    return ok ? PropertyCheckResult::pass("rem4.3", c.S.generators(), payload)
              : PropertyCheckResult::fail("rem4.3", c.S.generators(), payload);
}

inline PropertyCheckResult check_prop45(const CheckContext& c) {
    if (c.rep.type != 2)
        return PropertyCheckResult::skip("prop4.5", c.S.generators(), "type is not 2");
    const RelativeIdeal C = embed_integral(canonical_ideal(c.S), embed_target::inside_ring);
    const std::int64_t a = C.offset();
    const std::int64_t lhs = length_between(shift(C, a), product(C, C));
    const std::int64_t rhs = length_between(shift(ring_ideal(c.S), a), C);
    nlohmann::ordered_json payload{{"lambda_C2_aC", lhs}, {"lambda_C_a", rhs}};
    return lhs == rhs ? PropertyCheckResult::pass("prop4.5", c.S.generators(), payload)
                      : PropertyCheckResult::fail("prop4.5", c.S.generators(), payload);
}

inline PropertyCheckResult check_thm46(const CheckContext& c) {
    if (c.rep.type != 2)
        return PropertyCheckResult::skip("thm4.6", c.S.generators(), "type is not 2");
    nlohmann::ordered_json payload{
        {"e1", c.rep.e1}, {"rho", c.rep.canonical_index}, {"cdeg", c.rep.cdeg}};
    const bool ok = c.rep.e1 <= c.rep.canonical_index * c.rep.cdeg &&
                    ((c.rep.canonical_index == 2) == (c.rep.e1 == 2 * c.rep.cdeg));
    return ok ? PropertyCheckResult::pass("thm4.6", c.S.generators(), payload)
              : PropertyCheckResult::fail("thm4.6", c.S.generators(), payload);
}

inline PropertyCheckResult check_thm58(const CheckContext& c) {
    if (c.rep.type < 2)
        return PropertyCheckResult::skip("thm5.8", c.S.generators(), "type 1 (Gorenstein)");
    if (!c.rep.roots_computed) return skip_roots("thm5.8", c);
    return detail_roots::check_from(c.S, c.rep.rootset, c.rep.witnesses);
}

inline PropertyCheckResult check_prop56(const CheckContext& c) {
    if (c.rep.type < 2)
        return PropertyCheckResult::skip("prop5.6", c.S.generators(), "type 1 (Gorenstein)");
    if (!c.rep.roots_computed) return skip_roots("prop5.6", c);
    return detail_roots::check_tau_bound(c.S, c.rep.witnesses);
}

inline PropertyCheckResult check_prop59(const CheckContext& c) {
    if (!c.rep.roots_computed) return skip_roots("prop5.9", c);
    return detail_roots::check_index_bound(c.S, c.rep.witnesses, c.rep.canonical_index);
}

inline PropertyCheckResult check_thm68(const CheckContext& c) {
    if (c.S.is_trivial()) return skip_dvr("thm6.8", c);
    const IdealizationInvariants& inv = c.idealization();
    nlohmann::ordered_json payload{{"cdeg_A", inv.cdeg_A},
                                   {"expected_cdeg_A", 2 * c.rep.cdeg + 2},
                                   {"r_A", inv.r_A},
                                   {"expected_r_A", 2 * c.rep.type + 1},
                                   {"lambda_L_C", inv.lam_L_C},
                                   {"m_products_equal", inv.m_products_equal}};
    bool ok = inv.cdeg_A == 2 * c.rep.cdeg + 2 && inv.r_A == 2 * c.rep.type + 1 &&
              inv.m_products_equal && inv.lam_L_mC == inv.lam_L_mL && inv.lam_L_C == 1;
    if (ok) {
        // pair power law: (K_A)^n = L^n x L^{n-1}C for n <= rho_A + 2
        const RelativeIdeal C =
            embed_integral(canonical_ideal(c.S), embed_target::inside_m_squared);
        const RelativeIdeal L = colon(C, maximal_ideal(c.S));
        PairIdeal P(L, C);
        const PairIdeal base(L, C);
        for (std::int64_t n = 2; n <= inv.rho_A + 2 && ok; ++n) {
            P = pair_mul(P, base);
            ok = same_set(P.first, power(L, n)) &&
                 same_set(P.second, product(power(L, n - 1), C));
            if (!ok) payload["power_law_failed_at"] = n;
        }
    }
    return ok ? PropertyCheckResult::pass("thm6.8", c.S.generators(), payload)
              : PropertyCheckResult::fail("thm6.8", c.S.generators(), payload);
}

inline PropertyCheckResult check_cor69(const CheckContext& c) {
    if (c.S.is_trivial()) return skip_dvr("cor6.9", c);
    const IdealizationInvariants& inv = c.idealization();
    const bool ag_R = c.rep.cdeg == c.rep.type - 1;
    const bool ag_A = inv.cdeg_A == inv.r_A - 1;
    nlohmann::ordered_json payload{{"cdeg_A", inv.cdeg_A},
                                   {"r_A", inv.r_A},
                                   {"cdeg", c.rep.cdeg},
                                   {"type", c.rep.type}};
    return ag_R == ag_A ? PropertyCheckResult::pass("cor6.9", c.S.generators(), payload)
                        : PropertyCheckResult::fail("cor6.9", c.S.generators(), payload);
}

inline PropertyCheckResult check_ag2route(const CheckContext& c) {
    const bool via_cdeg = c.rep.cdeg == c.rep.type - 1;
    const bool via_symmetry = 2 * c.rep.genus == c.rep.frobenius + c.rep.type;
    nlohmann::ordered_json payload{{"via_cdeg", via_cdeg}, {"via_symmetry", via_symmetry}};
    return via_cdeg == via_symmetry
               ? PropertyCheckResult::pass("ag2route", c.S.generators(), payload)
               : PropertyCheckResult::fail("ag2route", c.S.generators(), payload);
}

inline PropertyCheckResult check_e1route(const CheckContext& c) {
    if (c.S.is_trivial()) return skip_dvr("e1route", c);
    try {
        const std::int64_t e1 = hilbert_e1(c.S);  // asserts Sally sum == fit
        return PropertyCheckResult::pass("e1route", c.S.generators(), {{"e1", e1}});
    } catch (const internal_inconsistency& e) {
        return PropertyCheckResult::fail("e1route", c.S.generators(), {{"error", e.what()}});
    }
}

inline PropertyCheckResult check_cdegroute(const CheckContext& c) {
    try {
        const std::int64_t d = cdeg(c.S);  // asserts all three routes
        return PropertyCheckResult::pass("cdegroute", c.S.generators(), {{"cdeg", d}});
    } catch (const internal_inconsistency& e) {
        return PropertyCheckResult::fail("cdegroute", c.S.generators(), {{"error", e.what()}});
    }
}

inline PropertyCheckResult check_prop73(const CheckContext& c) {
    if (c.S.is_trivial()) return skip_dvr("prop7.3", c);
    // deg(gr_C(R)) = lambda(R/(a)) = min(C) in the equimultiple model, so
    // cdeg* = min(C) - lambda(R/C) must equal cdeg
    const RelativeIdeal R = ring_ideal(c.S);
    const RelativeIdeal C = embed_integral(canonical_ideal(c.S), embed_target::inside_ring);
    const std::int64_t cdeg_star = C.offset() - length_between(C, R);
    nlohmann::ordered_json payload{{"cdeg_star", cdeg_star}, {"cdeg", c.rep.cdeg}};
    return cdeg_star == c.rep.cdeg
               ? PropertyCheckResult::pass("prop7.3", c.S.generators(), payload)
               : PropertyCheckResult::fail("prop7.3", c.S.generators(), payload);
}

inline PropertyCheckResult check_question610(const CheckContext& c) {
    if (c.S.is_trivial()) return skip_dvr("question6.10", c);
    const IdealizationInvariants& inv = c.idealization();
    // open question: data only, never a failure
    return PropertyCheckResult::pass(
        "question6.10", c.S.generators(),
        {{"rho_R", c.rep.canonical_index},
         {"rho_A", inv.rho_A},
         {"equal", c.rep.canonical_index == inv.rho_A}});
}

struct PropertyEntry {
    const char* id;
    Checker checker;
};

inline const std::vector<PropertyEntry>& registry() {
    static const std::vector<PropertyEntry> entries{
        {"cor2.5", check_cor25},     {"prop2.6", check_prop26},
        {"rem4.3", check_rem43},     {"prop4.5", check_prop45},
        {"thm4.6", check_thm46},     {"thm5.8", check_thm58},
        {"prop5.6", check_prop56},   {"prop5.9", check_prop59},
        {"thm6.8", check_thm68},     {"cor6.9", check_cor69},
        {"ag2route", check_ag2route}, {"e1route", check_e1route},
        {"cdegroute", check_cdegroute}, {"prop7.3", check_prop73},
        {"question6.10", check_question610},
    };
    return entries;
}

}  // namespace detail_corpus

inline std::vector<std::string> known_properties() {
    std::vector<std::string> out;
    for (const auto& e : detail_corpus::registry()) out.emplace_back(e.id);
    return out;
}

inline constexpr const char* cache_format_name = "cdeg-cache";
inline constexpr int cache_format_version = 1;

/// Persist reports as JSON lines, sorted by generator sequence.
inline void cache_store(const std::string& path, std::vector<InvariantReport> reports) {
    std::sort(reports.begin(), reports.end(),
              [](const InvariantReport& a, const InvariantReport& b) {
                  return a.generators < b.generators;
              });
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw io_error("cannot open cache for writing: " + path);
    out << json{{"format", cache_format_name}, {"version", cache_format_version}}.dump() << '\n';
    for (const auto& r : reports)
        out << json{{"gens", r.generators}, {"report", report_to_json(r)}}.dump() << '\n';
    if (!out) throw io_error("write failed: " + path);
}

inline std::vector<InvariantReport> cache_load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open cache for reading: " + path);
    std::string line;
    if (!std::getline(in, line)) throw corrupt_record(1, "missing header");
    json header = json::parse(line, nullptr, false);
    if (header.is_discarded() || !header.contains("format") || !header.contains("version"))
        throw corrupt_record(1, "malformed header");
    if (header["format"] != cache_format_name ||
        header["version"] != cache_format_version)
        throw format_version_mismatch("cache header " + line);
    std::vector<InvariantReport> out;
    long long lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        json j = json::parse(line, nullptr, false);
        if (j.is_discarded()) throw corrupt_record(lineno, "not valid JSON");
        try {
            out.push_back(report_from_json(j.at("report")));
        } catch (const std::exception& e) {
            throw corrupt_record(lineno, e.what());
        }
    }
    return out;
}

struct SuiteOptions {
    std::int64_t max_genus = 8;
    std::vector<std::string> properties;  // empty means all registered
    int workers = 1;
    std::string cache_path;  // empty means no cache
    std::int64_t genus_cap = default_genus_cap;
    std::int64_t roots_cap = default_roots_genus_cap;
};

inline VerificationReport run_suite(const SuiteOptions& opt) {
    using Clock = std::chrono::steady_clock;
    const auto t0 = Clock::now();

    std::vector<detail_corpus::PropertyEntry> selected;
    if (opt.properties.empty()) {
        selected = detail_corpus::registry();
    } else {
        for (const auto& id : opt.properties) {
            bool found = false;
            for (const auto& e : detail_corpus::registry())
                if (id == e.id) {
                    selected.push_back(e);
                    found = true;
                    break;
                }
            if (!found) throw unknown_property(id);
        }
    }

    const std::vector<NumericalSemigroup> corpus =
        semigroups_up_to_genus(opt.max_genus, opt.genus_cap);

    std::map<std::vector<std::int64_t>, InvariantReport> cached;
    if (!opt.cache_path.empty()) {
        std::ifstream probe(opt.cache_path);
        if (probe.good()) {
            probe.close();
            for (auto& r : cache_load(opt.cache_path)) cached.emplace(r.generators, std::move(r));
        }
    }

    const std::size_t n = corpus.size();
    std::vector<InvariantReport> reports(n);
    std::vector<std::vector<PropertyCheckResult>> results(n);
    std::atomic<std::size_t> cursor{0};
    std::mutex err_mutex;
    std::exception_ptr first_error;

    auto work = [&] {
        for (;;) {
            const std::size_t i = cursor.fetch_add(1);
            if (i >= n) break;
            try {
                const NumericalSemigroup& S = corpus[i];
                auto hit = cached.find(S.generators());
                reports[i] = hit != cached.end() ? hit->second : analyze(S, opt.roots_cap);
                detail_corpus::CheckContext ctx{S, reports[i], opt.roots_cap};
                for (const auto& e : selected) results[i].push_back(e.checker(ctx));
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        }
    };
    const int workers = std::max(opt.workers, 1);
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);

    VerificationReport rep;
    rep.max_genus = opt.max_genus;
    rep.semigroup_count = static_cast<std::int64_t>(n);
    for (const auto& e : selected) {
        rep.properties.emplace_back(e.id);
        rep.per_property[e.id] = {};
    }

    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return corpus[a].generators() < corpus[b].generators();
    });
    for (std::size_t i : order) {
        std::vector<PropertyCheckResult> row = results[i];
        std::sort(row.begin(), row.end(),
                  [](const PropertyCheckResult& a, const PropertyCheckResult& b) {
                      return a.property_id < b.property_id;
                  });
        for (auto& r : row) {
            auto& pc = rep.per_property[r.property_id];
            switch (r.status) {
                case PropertyCheckResult::Status::pass:
                    ++pc.pass;
                    ++rep.totals.pass;
                    break;
                case PropertyCheckResult::Status::fail:
                    ++pc.fail;
                    ++rep.totals.fail;
                    rep.failures.push_back(r);
                    break;
                case PropertyCheckResult::Status::skipped:
                    ++pc.skipped;
                    ++rep.totals.skipped;
                    break;
            }
            if (r.property_id == "question6.10" && r.passed())
                rep.experiment.push_back({r.generators,
                                          r.payload.at("rho_R").get<std::int64_t>(),
                                          r.payload.at("rho_A").get<std::int64_t>(),
                                          r.payload.at("equal").get<bool>()});
        }
    }

    if (!opt.cache_path.empty()) cache_store(opt.cache_path, reports);

    rep.wall_ms =
        std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    return rep;
}

/// Canonical JSON payload of a suite run. Timing is deliberately excluded:
/// the payload is byte-identical across worker counts and reruns.
inline json verification_to_json(const VerificationReport& r) {
    json j{{"max_genus", r.max_genus},
           {"semigroup_count", r.semigroup_count},
           {"properties", r.properties}};
    j["totals"] = {{"pass", r.totals.pass},
                   {"fail", r.totals.fail},
                   {"skipped", r.totals.skipped}};
    json per = json::object();
    for (const auto& id : r.properties) {
        const auto& pc = r.per_property.at(id);
        per[id] = {{"pass", pc.pass}, {"fail", pc.fail}, {"skipped", pc.skipped}};
    }
    j["per_property"] = std::move(per);
    json fails = json::array();
    for (const auto& f : r.failures) fails.push_back(check_to_json(f));
    j["failures"] = std::move(fails);
    bool with_experiment = false;
    for (const auto& id : r.properties) with_experiment |= id == "question6.10";
    if (with_experiment) {
        json rows = json::array();
        for (const auto& e : r.experiment)
            rows.push_back(json{{"gens", e.generators},
                                {"rho_R", e.rho_R},
                                {"rho_A", e.rho_A},
                                {"equal", e.equal}});
        j["experiment"] = std::move(rows);
    }
    return j;
}

}  // namespace cdeg
