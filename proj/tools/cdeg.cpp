// cdeg: canonical-ideal invariants of numerical semigroup rings.
//
// Subcommands: invariants, roots, family, verify, idealize.
// Output: aligned tables by default, or a JSON envelope with --json.
// Exit codes: 0 success / all checks pass, 1 property failure,
//             2 usage error, 3 I/O error.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cdeg/corpus.hpp"
#include "cdeg/families.hpp"
#include "cdeg/idealization.hpp"
#include "cdeg/invariants.hpp"
#include "cdeg/json_io.hpp"
#include "cdeg/relideal.hpp"
#include "cdeg/roots.hpp"
#include "cdeg/semigroup.hpp"

namespace {

using cdeg::json;

struct Output {
    bool as_json = false;
    std::string command;
    json input = json::object();
    json result;
    double timing_ms = 0.0;
};

void print_kv(const std::string& key, const json& v) {
    std::cout << "  " << key << ": ";
    if (v.is_string())
        std::cout << v.get<std::string>();
    else
        std::cout << v.dump();
    std::cout << "\n";
}

void render_invariants_table(const json& r) {
    for (const auto& [k, v] : r.items()) {
        if (k == "root_witnesses") continue;
        print_kv(k, v);
    }
    if (r.contains("root_witnesses") && !r["root_witnesses"].empty()) {
        std::cout << "  root witnesses:\n";
        for (const auto& w : r["root_witnesses"])
            std::cout << "    L = " << w["generators"].dump() << "  tau = " << w["tau"]
                      << "  red(L) = " << w["reduction_number"]
                      << "  closed = " << (w["closed"].get<bool>() ? "yes" : "no") << "\n";
    }
}

void render_family_table(const json& r) {
    for (const auto& row : r["rows"]) {
        std::cout << "  " << row["params"].dump() << "  gens=" << row["generators"].dump()
                  << "  " << (row["match"].get<bool>() ? "MATCH" : "MISMATCH") << "\n";
        if (!row["match"].get<bool>())
            std::cout << "    claimed:  " << row["claimed"].dump() << "\n    computed: "
                      << row["computed"].dump() << "\n";
    }
}

void render_verify_table(const json& r) {
    std::cout << "  semigroups: " << r["semigroup_count"] << "  (genus <= " << r["max_genus"]
              << ")\n";
    std::cout << "  totals: pass=" << r["totals"]["pass"] << " fail=" << r["totals"]["fail"]
              << " skipped=" << r["totals"]["skipped"] << "\n";
    for (const auto& [id, pc] : r["per_property"].items())
        std::cout << "    " << id << ": pass=" << pc["pass"] << " fail=" << pc["fail"]
                  << " skipped=" << pc["skipped"] << "\n";
    for (const auto& f : r["failures"])
        std::cout << "  FAIL " << f["property"].get<std::string>() << " on "
                  << f["generators"].dump() << ": " << f.value("payload", json::object()).dump()
                  << "\n";
    if (r.contains("experiment")) {
        std::int64_t unequal = 0;
        for (const auto& row : r["experiment"])
            if (!row["equal"].get<bool>()) ++unequal;
        std::cout << "  experiment rows: " << r["experiment"].size()
                  << " (rho_R != rho_A on " << unequal << ")\n";
    }
}

void render_roots_table(const json& r) {
    std::cout << "  monomial rootset: " << r["rootset"].dump() << "\n";
    for (const auto& w : r["witnesses"])
        std::cout << "    L = " << w["generators"].dump() << "  tau = " << w["tau"]
                  << "  red(L) = " << w["reduction_number"]
                  << "  closed = " << (w["closed"].get<bool>() ? "yes" : "no") << "\n";
}

void emit(const Output& out) {
    if (out.as_json) {
        json envelope{{"schema_version", cdeg::schema_version},
                      {"command", out.command},
                      {"input", out.input},
                      {"result", out.result},
                      {"timing_ms", out.timing_ms}};
        std::cout << envelope.dump(2) << "\n";
        return;
    }
    std::cout << out.command << ":\n";
    if (out.command == "invariants" || out.command == "idealize")
        render_invariants_table(out.result);
    else if (out.command == "roots")
        render_roots_table(out.result);
    else if (out.command == "family")
        render_family_table(out.result);
    else
        render_verify_table(out.result);
    if (out.command == "verify") std::cout << "  wall: " << out.timing_ms << " ms\n";
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"canonical-ideal invariants of numerical semigroup rings"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags are accepted after the subcommand

    bool as_json = false;
    bool as_table = false;
    std::string config_path;
    app.add_flag("--json", as_json, "emit a JSON envelope (schema_version 1)");
    app.add_flag("--table", as_table, "emit an aligned table (default)");
    app.add_option("--config", config_path,
                   "JSON config file (keys: genus_cap, workers, cache_path); flags win");

    std::vector<std::int64_t> gens;
    auto* inv_cmd = app.add_subcommand("invariants", "full invariant report of one ring");
    inv_cmd->add_option("gens", gens, "semigroup generators")->required();

    std::vector<std::int64_t> root_gens;
    std::int64_t roots_cap = cdeg::default_roots_genus_cap;
    auto* roots_cmd = app.add_subcommand("roots", "monomial rootset with witnesses");
    roots_cmd->add_option("gens", root_gens, "semigroup generators")->required();
    roots_cmd->add_option("--max-genus-override", roots_cap,
                          "raise the rootset enumeration genus cap");

    std::string family_name;
    std::int64_t from = 0, to = 0, fam_a = 0, fam_b = 0;
    auto* fam_cmd = app.add_subcommand("family", "closed-form claims over a parameter range");
    fam_cmd->add_option("name", family_name, "one of: e-family, a-family-1, a-family-2, maxgen, type3-rootless")
        ->required();
    auto* from_opt = fam_cmd->add_option("--from", from, "first parameter value");
    auto* to_opt = fam_cmd->add_option("--to", to, "last parameter value");
    fam_cmd->add_option("--a", fam_a, "parameter a (type3-rootless)");
    fam_cmd->add_option("--b", fam_b, "parameter b (type3-rootless)");

    std::int64_t max_genus = 8;
    std::string properties_csv;
    int workers = 0;
    std::string cache_path;
    std::string experiment_out;
    auto* verify_cmd = app.add_subcommand("verify", "run the theorem suite over all semigroups");
    verify_cmd->add_option("--max-genus", max_genus, "genus bound (default 8)");
    auto* props_opt =
        verify_cmd->add_option("--properties", properties_csv, "comma-separated property ids");
    auto* workers_opt = verify_cmd->add_option("--workers", workers, "worker thread count");
    auto* cache_opt = verify_cmd->add_option("--cache", cache_path, "JSON-lines report cache");
    verify_cmd->add_option("--experiment-out", experiment_out,
                           "write the canonical-index experiment as JSON lines");

    std::vector<std::int64_t> ideal_gens;
    auto* ideal_cmd = app.add_subcommand("idealize", "invariants of the idealization R x m");
    ideal_cmd->add_option("gens", ideal_gens, "semigroup generators")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    Output out;
    out.as_json = as_json;

    // config file and environment merge under explicit flags
    std::int64_t genus_cap = cdeg::default_genus_cap;
    try {
        if (!config_path.empty()) {
            std::ifstream cfg(config_path);
            if (!cfg) throw cdeg::io_error("cannot open config: " + config_path);
            json j = json::parse(cfg, nullptr, false);
            if (j.is_discarded()) throw cdeg::io_error("config is not valid JSON: " + config_path);
            if (j.contains("genus_cap")) genus_cap = j["genus_cap"].get<std::int64_t>();
            if (j.contains("workers") && workers_opt->count() == 0)
                workers = j["workers"].get<int>();
            if (j.contains("cache_path") && cache_opt->count() == 0)
                cache_path = j["cache_path"].get<std::string>();
        }
        if (const char* env = std::getenv("CDEG_GENUS_CAP")) genus_cap = std::atoll(env);

        using Clock = std::chrono::steady_clock;
        const auto t0 = Clock::now();

        if (*inv_cmd) {
            out.command = "invariants";
            out.input = {{"generators", gens}};
            const auto S = cdeg::NumericalSemigroup::make(gens);
            out.result = cdeg::report_to_json(cdeg::analyze(S));
        } else if (*roots_cmd) {
            out.command = "roots";
            out.input = {{"generators", root_gens}, {"genus_cap", roots_cap}};
            const auto S = cdeg::NumericalSemigroup::make(root_gens);
            const auto rs = cdeg::rootset(S, roots_cap);
            json ws = json::array();
            for (const auto& w : rs.witnesses) {
                json jw = cdeg::witness_to_json(cdeg::summarize(w));
                jw["ideal"] = cdeg::ideal_to_json(w.ideal);
                ws.push_back(std::move(jw));
            }
            out.result = {{"rootset", rs.taus}, {"witnesses", std::move(ws)}};
        } else if (*fam_cmd) {
            out.command = "family";
            std::vector<cdeg::FamilyRow> rows;
            if (family_name == "e-family") {
                if (from_opt->count() == 0) from = 4;
                if (to_opt->count() == 0) to = 12;
                for (std::int64_t e = from; e <= to; ++e) rows.push_back(cdeg::e_family_row(e));
            } else if (family_name == "a-family-1") {
                if (from_opt->count() == 0) from = 4;
                if (to_opt->count() == 0) to = 12;
                for (std::int64_t a = from; a <= to; ++a) rows.push_back(cdeg::a_family_1_row(a));
            } else if (family_name == "a-family-2") {
                if (from_opt->count() == 0) from = 5;
                if (to_opt->count() == 0) to = 12;
                for (std::int64_t a = from; a <= to; ++a) rows.push_back(cdeg::a_family_2_row(a));
            } else if (family_name == "maxgen") {
                if (from_opt->count() == 0) from = 3;
                if (to_opt->count() == 0) to = 10;
                for (std::int64_t a = from; a <= to; ++a) rows.push_back(cdeg::maxgen_row(a));
            } else if (family_name == "type3-rootless") {
                if (fam_a <= 0 || fam_b <= 0)
                    throw cdeg::param_out_of_range("type3-rootless needs --a and --b");
                if (from_opt->count() == 0) from = fam_a + fam_b + 2;
                if (to_opt->count() == 0) to = fam_a + fam_b + 6;
                for (std::int64_t e = from; e <= to; ++e)
                    rows.push_back(cdeg::type3_rootless_row(fam_a, fam_b, e));
            } else {
                throw cdeg::param_out_of_range("unknown family: " + family_name);
            }
            out.input = {{"family", family_name}, {"from", from}, {"to", to}};
            if (family_name == "type3-rootless") {
                out.input["a"] = fam_a;
                out.input["b"] = fam_b;
            }
            json jrows = json::array();
            bool all_match = true;
            for (const auto& r : rows) {
                all_match = all_match && r.match;
                jrows.push_back(cdeg::family_row_to_json(r));
            }
            out.result = {{"rows", std::move(jrows)}, {"all_match", all_match}};
        } else if (*verify_cmd) {
            out.command = "verify";
            cdeg::SuiteOptions sopt;
            sopt.max_genus = max_genus;
            if (props_opt->count() > 0) sopt.properties = split_csv(properties_csv);
            sopt.workers = workers > 0 ? workers : 1;
            sopt.cache_path = cache_path;
            sopt.genus_cap = genus_cap;
            const auto rep = cdeg::run_suite(sopt);
            out.input = {{"max_genus", max_genus},
                         {"properties", sopt.properties.empty() ? cdeg::known_properties()
                                                                : sopt.properties},
                         {"workers", sopt.workers}};
            out.result = cdeg::verification_to_json(rep);
            if (!experiment_out.empty()) {
                std::ofstream ex(experiment_out, std::ios::binary | std::ios::trunc);
                if (!ex) throw cdeg::io_error("cannot open: " + experiment_out);
                for (const auto& row : rep.experiment)
                    ex << json{{"gens", row.generators},
                               {"rho_R", row.rho_R},
                               {"rho_A", row.rho_A}}
                              .dump()
                       << '\n';
            }
        } else if (*ideal_cmd) {
            out.command = "idealize";
            out.input = {{"generators", ideal_gens}};
            const auto S = cdeg::NumericalSemigroup::make(ideal_gens);
            const auto inv = cdeg::idealization_invariants(S);
            const auto ex = cdeg::idealization_index_experiment(S);
            const auto ag = cdeg::idealization_ag_transfer(S);
            out.result = {{"cdeg_A", inv.cdeg_A},
                          {"r_A", inv.r_A},
                          {"rho_A", inv.rho_A},
                          {"rho_R", ex.rho_R},
                          {"rho_equal", ex.equal},
                          {"lambda_L_over_C", inv.lam_L_C},
                          {"ag_transfer", ag.passed() ? "pass" : "fail"}};
        }

        out.timing_ms =
            std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
        emit(out);

        if (out.command == "verify" && out.result["totals"]["fail"].get<std::int64_t>() > 0)
            return 1;
        if (out.command == "family" && !out.result["all_match"].get<bool>()) return 1;
        if (out.command == "idealize" && out.result["ag_transfer"] == "fail") return 1;
        return 0;
    } catch (const cdeg::empty_generators& e) {
        std::cerr << "error (empty generator list): " << e.what() << "\n";
        return 2;
    } catch (const cdeg::nonpositive_generator& e) {
        std::cerr << "error (positivity violated): " << e.what() << "\n";
        return 2;
    } catch (const cdeg::gcd_not_one& e) {
        std::cerr << "error (gcd violated): " << e.what() << "\n";
        return 2;
    } catch (const cdeg::param_out_of_range& e) {
        std::cerr << "error (parameter out of range): " << e.what() << "\n";
        return 2;
    } catch (const cdeg::hypothesis_violated& e) {
        std::cerr << "error (family hypothesis violated): " << e.what() << "\n";
        return 2;
    } catch (const cdeg::unknown_property& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const cdeg::genus_cap_exceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const cdeg::format_version_mismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const cdeg::corrupt_record& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const cdeg::io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
