#pragma once

#include <json.hpp>

#include "eigenone/e1.hpp"
#include "eigenone/parse.hpp"

namespace eigenone {

inline constexpr int REPORT_FORMAT = 1;

// ---------------------------------------------------------------------------
// Value serialization
// ---------------------------------------------------------------------------

inline Rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    return Rational(num, den);
}

/// {"conductor": n, "coeffs": {"<power>": "p/q", ...}} with zero coefficients
/// omitted; powers are exponents of the primitive n-th root of unity.
inline nlohmann::json cyclo_to_json(const Cyclo& c) {
    nlohmann::json coeffs = nlohmann::json::object();
    const auto& cs = c.coeffs();
    for (size_t i = 0; i < cs.size(); ++i)
        if (cs[i] != 0) coeffs[std::to_string(i)] = rational_to_string(cs[i]);
    return nlohmann::json{{"conductor", c.conductor()}, {"coeffs", std::move(coeffs)}};
}

inline Cyclo cyclo_from_json(const nlohmann::json& j) {
    long n = j.at("conductor").get<long>();
    if (n <= 0) throw std::invalid_argument("conductor must be positive");
    Cyclo out;
    for (const auto& [key, val] : j.at("coeffs").items()) {
        long e = std::stol(key);
        if (e < 0 || e >= n) throw std::invalid_argument("coefficient power out of range");
        out += Cyclo(rational_from_string(val.get<std::string>())) * Cyclo::zeta(n, e);
    }
    return out;
}

/// Parse a single permutation in 1-based cycle notation ("()" = identity) and
/// extend it to the given degree.
inline Perm perm_from_cycles(const std::string& text, long degree) {
    std::vector<long> img(degree);
    std::iota(img.begin(), img.end(), 0L);
    std::string trimmed = text;
    while (!trimmed.empty() && std::isspace((unsigned char)trimmed.back())) trimmed.pop_back();
    if (trimmed == "()" || trimmed.empty()) return Perm(std::move(img));
    long parsed_degree = 0;
    auto gens = parse_cycle_generators(text, &parsed_degree);
    if (gens.size() != 1) throw std::invalid_argument("expected a single permutation");
    if (parsed_degree > degree) throw std::invalid_argument("permutation exceeds the group degree");
    const auto& p = gens[0].images();
    for (size_t i = 0; i < p.size(); ++i) img[i] = p[i];
    return Perm(std::move(img));
}

// ---------------------------------------------------------------------------
// Verdict reports
// ---------------------------------------------------------------------------

inline nlohmann::json certificate_to_json(const Certificate& c) {
    nlohmann::json data = nlohmann::json::object();
    for (const auto& [k, v] : c.data) data[k] = v;
    return nlohmann::json{{"method", c.method}, {"data", std::move(data)}};
}

inline nlohmann::json verdict_to_json(const std::string& spec, const GroupVerdict& gv,
                                      const std::string& mode, unsigned long seed) {
    nlohmann::json chars = nlohmann::json::array();
    for (const auto& pv : gv.characters) {
        nlohmann::json tasks = nlohmann::json::array();
        for (const auto& nv : pv.nu_classes) {
            nlohmann::json nu = nlohmann::json::array();
            for (const auto& p : nv.nu_images) nu.push_back(p.to_cycles());
            for (const auto& tv : nv.signs) {
                nlohmann::json t{{"nu", nu},
                                 {"sign", tv.sign},
                                 {"status", tv.status},
                                 {"certificate", certificate_to_json(tv.certificate)}};
                if (tv.witness) {
                    t["witness"] = tv.witness_word;
                    t["witness_element"] = *tv.witness;
                } else {
                    t["witness"] = nullptr;
                    t["witness_element"] = nullptr;
                }
                if (tv.certificate_agrees) t["certificate_agrees"] = *tv.certificate_agrees;
                tasks.push_back(std::move(t));
            }
        }
        chars.push_back(nlohmann::json{{"chi", pv.chi},
                                       {"degree", pv.degree},
                                       {"quotient_order", pv.quotient_order},
                                       {"status", pv.status},
                                       {"nu_classes", std::move(tasks)}});
    }
    nlohmann::json out{{"format", REPORT_FORMAT},
                       {"group", spec},
                       {"order", gv.order},
                       {"mode", mode},
                       {"seed", seed},
                       {"overall", gv.overall},
                       {"characters", std::move(chars)}};
    out["structural"] = gv.structural ? certificate_to_json(*gv.structural) : nlohmann::json();
    return out;
}

inline nlohmann::json chartab_to_json(const std::string& spec, const PermGroup& G,
                                      const CharacterTable& T) {
    nlohmann::json classes = nlohmann::json::array();
    for (const auto& cl : G.classes())
        classes.push_back(nlohmann::json{{"representative", G.element(cl.representative).to_cycles()},
                                         {"size", cl.size},
                                         {"element_order", G.element_order(cl.representative)}});
    nlohmann::json irr = nlohmann::json::array();
    for (const auto& row : T.irr) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& v : row) r.push_back(cyclo_to_json(v));
        irr.push_back(std::move(r));
    }
    return nlohmann::json{{"format", REPORT_FORMAT}, {"group", spec},    {"order", G.order()},
                          {"classes", classes},      {"degrees", T.degrees}, {"irr", irr}};
}

// ---------------------------------------------------------------------------
// Report replay: re-run exactly the eigenvalue checks recorded in a report.
// ---------------------------------------------------------------------------

struct ReplayResult {
    bool ok = true;
    long verified = 0;  // tasks whose eigenvalue check was replayed
    long skipped = 0;   // certificate-only tasks with nothing to replay
    std::vector<std::string> problems;
};

inline ReplayResult replay_report(const nlohmann::json& rpt, long table_bound = 1024) {
    ReplayResult rr;
    auto fail = [&](const std::string& msg) {
        rr.ok = false;
        rr.problems.push_back(msg);
    };
    if (rpt.at("format").get<int>() != REPORT_FORMAT)
        throw std::invalid_argument("unsupported report format version");
    PermGroup G = parse_group_spec(rpt.at("group").get<std::string>());
    if (G.order() != rpt.at("order").get<long>())
        throw std::invalid_argument("group order does not match the report");
    unsigned long seed = rpt.at("seed").get<unsigned long>();
    CharacterTable T = character_table(G, table_bound);

    for (const auto& ch : rpt.at("characters")) {
        long chi = ch.at("chi").get<long>();
        if (chi < 0 || chi >= (long)T.irr.size()) {
            fail("character index out of range");
            continue;
        }
        if (T.degrees[chi] != ch.at("degree").get<long>()) {
            fail("character degree does not match the table");
            continue;
        }
        auto fq = faithful_quotient(G, T, chi);
        const PermGroup& Q = fq.quotient;
        CharacterTable TQ = character_table(Q, table_bound);
        long chi_q = -1;
        for (size_t r = 0; r < TQ.irr.size(); ++r)
            if (TQ.irr[r] == fq.chi) chi_q = (long)r;
        if (chi_q < 0) {
            fail("descended character not found in quotient table");
            continue;
        }
        MatrixRep rep = build_irreducible_rep(Q, TQ, chi_q);

        // Recover the nu-class index from first appearance order.
        std::map<std::vector<std::string>, long> nu_index;
        std::map<long, IntertwinerData> its;
        for (const auto& task : ch.at("nu_classes")) {
            std::vector<std::string> nu_strs;
            for (const auto& s : task.at("nu")) nu_strs.push_back(s.get<std::string>());
            auto [pos, inserted] = nu_index.try_emplace(nu_strs, (long)nu_index.size());
            long ni = pos->second;
            if (inserted) {
                std::vector<Perm> imgs;
                for (const auto& s : nu_strs) imgs.push_back(perm_from_cycles(s, Q.degree()));
                Automorphism nu = Automorphism::from_gen_images(Q, imgs);
                unsigned long task_seed =
                    seed * 1000003ul + (unsigned long)chi * 1009ul + (unsigned long)ni;
                its.emplace(ni, solve_intertwiner(rep, nu, task_seed));
            }
            const IntertwinerData& it = its.at(ni);
            int sign = task.at("sign").get<int>();
            RadicalReal target = it.target(sign);
            std::string status = task.at("status").get<std::string>();
            if (status == "holds") {
                if (task.at("witness").is_null()) {
                    ++rr.skipped;  // certificate-only, no concrete element recorded
                    continue;
                }
                long w = Q.index_of(Perm::identity(Q.degree()));
                for (const auto& gi : task.at("witness")) {
                    if (w < 0) break;
                    long idx = gi.get<long>();
                    if (idx < 0 || idx >= (long)Q.generators().size()) {
                        w = -1;
                        break;
                    }
                    w = Q.product(w, Q.index_of(Q.generators()[idx]));
                }
                if (w < 0) {
                    fail("witness word references a missing generator");
                    continue;
                }
                if (!task.at("witness_element").is_null() &&
                    task.at("witness_element").get<long>() != w)
                    fail("witness word and element index disagree");
                if (has_algebraic_eigenvalue(rep.rho(w) * it.m, target))
                    ++rr.verified;
                else
                    fail("recorded witness does not produce eigenvalue 1");
            } else if (status == "fails") {
                bool any = false;
                for (long g = 0; g < Q.order() && !any; ++g)
                    if (has_algebraic_eigenvalue(rep.rho(g) * it.m, target)) any = true;
                if (any)
                    fail("recorded failure contradicted by the exhaustive rescan");
                else
                    ++rr.verified;
            } else {
                fail("unknown task status '" + status + "'");
            }
        }
    }
    return rr;
}

}  // namespace eigenone
