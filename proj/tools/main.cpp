// eigenone: exact-arithmetic decision tool for the eigenvalue-one property of
// finite groups, plus character tables and symbolic degree-bound evaluators.

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>

#include "eigenone/bounds.hpp"
#include "eigenone/cache.hpp"

using namespace eigenone;
using nlohmann::json;

namespace {

int emit_error(const std::string& message, long position = -1) {
    json err{{"format", REPORT_FORMAT}, {"error", json{{"message", message}}}};
    if (position >= 0) err["error"]["position"] = position;
    std::cout << err.dump() << "\n";
    return 2;
}

long env_long(const char* name, long fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    try {
        return std::stol(v);
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string(name) + " is not an integer");
    }
}

std::optional<std::filesystem::path> env_cache_dir() {
    const char* v = std::getenv("EIGENONE_CACHE_DIR");
    if (!v || !*v) return std::nullopt;
    return std::filesystem::path(v);
}

void print_report(const json& rpt, bool pretty) {
    std::cout << (pretty ? rpt.dump(2) : rpt.dump()) << "\n";
}

// "8^10" or a plain integer.
Int parse_big(const std::string& s) {
    auto caret = s.find('^');
    if (caret == std::string::npos) return Int(s);
    Int base(s.substr(0, caret));
    long e = std::stol(s.substr(caret + 1));
    if (e < 0) throw std::invalid_argument("negative exponent");
    return int_pow(base, e);
}

// "a..b" or a single value.
std::pair<long, long> parse_range(const std::string& s) {
    auto dots = s.find("..");
    if (dots == std::string::npos) {
        long v = std::stol(s);
        return {v, v};
    }
    return {std::stol(s.substr(0, dots)), std::stol(s.substr(dots + 2))};
}

void print_bound_row(const std::string& family, const BoundResult& r) {
    std::cout << family;
    for (const auto& [k, v] : r.data) std::cout << " " << k << "=" << v.str();
    std::cout << " | " << r.inequality << " | " << (r.passes ? "PASS" : "FAIL") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact decision tool for the eigenvalue-one property of finite groups"};
    app.require_subcommand(1);

    long max_order;
    try {
        max_order = env_long("EIGENONE_MAX_ORDER", 1024);
    } catch (const std::exception& e) {
        return emit_error(e.what());
    }
    long closure_bound = std::max(10000L, max_order);

    // --- chartab ---------------------------------------------------------
    auto* sc_tab = app.add_subcommand("chartab", "Print the exact character table as JSON");
    std::string tab_spec;
    bool tab_pretty = false, tab_nocache = false;
    sc_tab->add_option("group", tab_spec, "Preset name or cycle-notation generators")->required();
    sc_tab->add_flag("--pretty", tab_pretty, "Indented human-readable JSON");
    sc_tab->add_flag("--no-cache", tab_nocache, "Bypass the on-disk table cache");

    // --- e1 --------------------------------------------------------------
    auto* sc_e1 = app.add_subcommand("e1", "Decide the eigenvalue-one property");
    std::string e1_spec, e1_char, e1_mode = "fast", e1_autfile;
    bool e1_even = false, e1_pretty = false, e1_nocache = false;
    unsigned long e1_seed = 0;
    long e1_jobs = 1;
    sc_e1->add_option("group", e1_spec, "Preset name or cycle-notation generators")->required();
    sc_e1->add_option("--char", e1_char,
                      "Limit to characters: a degree (e.g. 4) or an index (e.g. i:2)");
    sc_e1->add_flag("--pairs-even-ok", e1_even,
                    "Allow even-degree pairs (absolute irreducibility is verified)");
    sc_e1->add_option("--mode", e1_mode, "fast: first certificate wins; validate: Direct always")
        ->check(CLI::IsMember({"fast", "validate"}));
    sc_e1->add_option("--aut-file", e1_autfile,
                      "JSON list of automorphisms as generator-image cycle strings");
    sc_e1->add_option("--seed", e1_seed, "Random seed for intertwiner sampling");
    sc_e1->add_option("--jobs", e1_jobs, "Bound on concurrent tasks")->check(CLI::PositiveNumber);
    sc_e1->add_flag("--pretty", e1_pretty, "Indented human-readable JSON");
    sc_e1->add_flag("--no-cache", e1_nocache, "Bypass the on-disk table cache");

    // --- bounds ----------------------------------------------------------
    auto* sc_b = app.add_subcommand("bounds", "Evaluate symbolic degree bounds exactly");
    std::string b_family, b_f = "1", b_chi1;
    long b_d = 0;
    sc_b->add_option("family", b_family, "g2 | prop5a | prop5b")
        ->required()
        ->check(CLI::IsMember({"g2", "prop5a", "prop5b"}));
    sc_b->add_option("--f", b_f, "Field exponent f or range a..b");
    sc_b->add_option("--d", b_d, "Rank parameter d (prop5a)");
    sc_b->add_option("--chi1", b_chi1, "Character degree, integer or base^exp (e.g. 8^10)");

    // --- verify-report ---------------------------------------------------
    auto* sc_v = app.add_subcommand("verify-report", "Replay the eigenvalue checks of a report");
    std::string v_file;
    bool v_pretty = false;
    sc_v->add_option("file", v_file, "Report JSON file")->required();
    sc_v->add_flag("--pretty", v_pretty, "Indented human-readable JSON");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*sc_tab) {
            PermGroup G = parse_group_spec(tab_spec, closure_bound);
            if (G.order() > max_order)
                return emit_error("group order exceeds EIGENONE_MAX_ORDER (" +
                                  std::to_string(max_order) + ")");
            CharacterTable T = cached_character_table(G, env_cache_dir(), tab_nocache, max_order);
            print_report(chartab_to_json(tab_spec, G, T), tab_pretty);
            return 0;
        }

        if (*sc_e1) {
            PermGroup G = parse_group_spec(e1_spec, closure_bound);
            if (G.order() > max_order)
                return emit_error("group order exceeds EIGENONE_MAX_ORDER (" +
                                  std::to_string(max_order) + ")");
            E1Options opts;
            opts.even_ok = e1_even;
            opts.validate = e1_mode == "validate";
            opts.seed = e1_seed;
            opts.table_bound = max_order;
            if (!e1_autfile.empty()) {
                std::ifstream in(e1_autfile);
                if (!in) return emit_error("cannot open automorphism file " + e1_autfile);
                json aj = json::parse(in);
                std::vector<std::vector<Perm>> auts;
                for (const auto& a : aj) {
                    std::vector<Perm> imgs;
                    for (const auto& s : a)
                        imgs.push_back(perm_from_cycles(s.get<std::string>(), G.degree()));
                    auts.push_back(std::move(imgs));
                }
                opts.user_auts = std::move(auts);
            }

            GroupVerdict gv;
            CharacterTable T = cached_character_table(G, env_cache_dir(), e1_nocache, max_order);
            if (e1_char.empty()) {
                gv = check_group(G, opts, &T);
            } else {
                std::vector<long> rows;
                if (e1_char.rfind("i:", 0) == 0) {
                    long idx = std::stol(e1_char.substr(2));
                    if (idx < 0 || idx >= (long)T.irr.size())
                        return emit_error("character index out of range");
                    rows.push_back(idx);
                } else {
                    long deg = std::stol(e1_char);
                    for (size_t r = 0; r < T.irr.size(); ++r)
                        if (T.degrees[r] == deg && fs_indicator(T, (long)r) == 1)
                            rows.push_back((long)r);
                    if (rows.empty())
                        return emit_error("no real irreducible character of degree " +
                                          std::to_string(deg));
                }
                gv.order = G.order();
                for (long r : rows) gv.characters.push_back(check_pair(G, T, r, opts));
                gv.overall = "holds";
                for (const auto& pv : gv.characters)
                    if (pv.status != "holds") gv.overall = "fails";
            }
            print_report(verdict_to_json(e1_spec, gv, e1_mode, e1_seed), e1_pretty);
            return gv.overall == "holds" ? 0 : 1;
        }

        if (*sc_b) {
            auto [lo, hi] = parse_range(b_f);
            if (lo > hi || lo < 1) return emit_error("invalid f range");
            bool all_pass = true;
            for (long f = lo; f <= hi; ++f) {
                BoundResult r;
                if (b_family == "g2") {
                    r = example4_g2_bound(f);
                } else {
                    if (b_chi1.empty()) return emit_error("--chi1 is required for prop5 bounds");
                    r = prop5_bounds(b_family == "prop5a" ? 'a' : 'b', b_d, f, parse_big(b_chi1));
                }
                print_bound_row(b_family, r);
                all_pass = all_pass && r.passes;
            }
            return all_pass ? 0 : 1;
        }

        if (*sc_v) {
            std::ifstream in(v_file);
            if (!in) return emit_error("cannot open report file " + v_file);
            json rpt = json::parse(in);
            ReplayResult rr = replay_report(rpt, max_order);
            json out{{"format", REPORT_FORMAT},
                     {"ok", rr.ok},
                     {"verified", rr.verified},
                     {"skipped", rr.skipped},
                     {"problems", rr.problems}};
            print_report(out, v_pretty);
            return rr.ok ? 0 : 1;
        }
    } catch (const ParseError& e) {
        return emit_error(e.what(), e.position);
    } catch (const std::exception& e) {
        return emit_error(e.what());
    }
    return emit_error("no subcommand");
}
