#pragma once

#include <sstream>

#include "eigenone/presets.hpp"

namespace eigenone {

struct ParseError : std::runtime_error {
    long position;  // 0-based offset into the input text, -1 when not positional
    ParseError(const std::string& msg, long pos) : std::runtime_error(msg), position(pos) {}
};

/// Parse generator text in cycle notation, e.g. "(1,2)(3,4); (1,2,3)".
/// Points are 1-based in the text and 0-based internally; generators are
/// separated by ';'.
inline std::vector<Perm> parse_cycle_generators(const std::string& text, long* degree_out) {
    std::vector<std::vector<std::vector<long>>> gens;  // gen -> cycles -> points
    long max_point = 0;
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace((unsigned char)text[i])) ++i;
    };
    while (true) {
        std::vector<std::vector<long>> cycles;
        skip_ws();
        while (i < text.size() && text[i] == '(') {
            ++i;
            std::vector<long> cyc;
            while (true) {
                skip_ws();
                size_t start = i;
                while (i < text.size() && std::isdigit((unsigned char)text[i])) ++i;
                if (i == start) throw ParseError("expected a point number", (long)i);
                long pt = std::stol(text.substr(start, i - start));
                if (pt < 1) throw ParseError("points are 1-based", (long)start);
                for (long q : cyc)
                    if (q == pt - 1) throw ParseError("repeated point in cycle", (long)start);
                cyc.push_back(pt - 1);
                max_point = std::max(max_point, pt);
                skip_ws();
                if (i < text.size() && text[i] == ',') {
                    ++i;
                    continue;
                }
                if (i < text.size() && text[i] == ')') {
                    ++i;
                    break;
                }
                throw ParseError("expected ',' or ')'", (long)i);
            }
            if (cyc.size() < 2) throw ParseError("cycle needs at least two points", (long)i);
            cycles.push_back(std::move(cyc));
            skip_ws();
        }
        if (cycles.empty()) throw ParseError("expected a cycle '('", (long)i);
        gens.push_back(std::move(cycles));
        skip_ws();
        if (i < text.size() && text[i] == ';') {
            ++i;
            continue;
        }
        if (i >= text.size()) break;
        throw ParseError("unexpected character", (long)i);
    }
    long degree = std::max(max_point, 1L);
    std::vector<Perm> out;
    for (const auto& cycles : gens) {
        std::vector<long> img(degree);
        std::iota(img.begin(), img.end(), 0L);
        for (const auto& c : cycles) {
            // points within one generator must not collide across cycles
            for (size_t k = 0; k < c.size(); ++k) {
                if (img[c[k]] != c[k])
                    throw ParseError("point appears in two cycles of one generator", -1);
            }
            for (size_t k = 0; k < c.size(); ++k) img[c[k]] = c[(k + 1) % c.size()];
        }
        out.push_back(Perm(std::move(img)));
    }
    if (degree_out) *degree_out = degree;
    return out;
}

/// A preset name or cycle-notation generator text.
inline PermGroup parse_group_spec(const std::string& text, long bound = 10000) {
    std::string trimmed = text;
    while (!trimmed.empty() && std::isspace((unsigned char)trimmed.front())) trimmed.erase(0, 1);
    while (!trimmed.empty() && std::isspace((unsigned char)trimmed.back())) trimmed.pop_back();
    if (trimmed.empty()) throw ParseError("empty group spec", 0);
    if (trimmed[0] == '(') {
        long degree = 0;
        auto gens = parse_cycle_generators(trimmed, &degree);
        return PermGroup::from_generators(std::move(gens), degree, bound);
    }
    if (auto g = make_preset(trimmed)) return *g;
    std::ostringstream os;
    os << "unknown preset '" << trimmed << "'; available: ";
    bool first = true;
    for (const auto& n : preset_names()) {
        if (!first) os << ", ";
        os << n;
        first = false;
    }
    os << " (Cn/Dn take a numeric suffix, e.g. C6, D12)";
    throw ParseError(os.str(), -1);
}

}  // namespace eigenone
