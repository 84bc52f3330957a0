#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "eigenone/report.hpp"

namespace eigenone {

inline constexpr int CACHE_FORMAT = 1;

/// FNV-1a hash of the multiplication table in canonical (lexicographic
/// element) order; independent of how the group was specified.
inline std::uint64_t group_table_key(const PermGroup& G) {
    std::uint64_t h = 1469598103934665603ull;
    auto feed = [&](std::uint64_t v) {
        for (int b = 0; b < 8; ++b) {
            h ^= (v >> (8 * b)) & 0xffull;
            h *= 1099511628211ull;
        }
    };
    long n = G.order();
    feed((std::uint64_t)n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) feed((std::uint64_t)G.product(i, j));
    return h;
}

inline std::filesystem::path cache_entry_path(const std::filesystem::path& dir,
                                              const PermGroup& G) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)group_table_key(G));
    return dir / ("eigenone-table-" + std::string(buf) + ".json");
}

inline nlohmann::json table_to_cache_json(const CharacterTable& T) {
    nlohmann::json irr = nlohmann::json::array();
    for (const auto& row : T.irr) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& v : row) r.push_back(cyclo_to_json(v));
        irr.push_back(std::move(r));
    }
    return nlohmann::json{{"format", CACHE_FORMAT},
                          {"order", T.group->order()},
                          {"class_count", T.group->class_count()},
                          {"degrees", T.degrees},
                          {"irr", std::move(irr)}};
}

/// Store after successful verification; failures to write are non-fatal.
inline void store_table(const std::filesystem::path& dir, const PermGroup& G,
                        const CharacterTable& T) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    std::ofstream out(cache_entry_path(dir, G));
    if (!out) return;
    out << table_to_cache_json(T).dump() << "\n";
}

/// Load with a cheap re-verification (degree sum, trivial row, a few row
/// norms); anything suspicious is discarded with a warning.
inline std::optional<CharacterTable> load_table(const std::filesystem::path& dir,
                                                const PermGroup& G) {
    auto path = cache_entry_path(dir, G);
    std::ifstream in(path);
    if (!in) return std::nullopt;
    try {
        nlohmann::json j = nlohmann::json::parse(in);
        if (j.at("format").get<int>() != CACHE_FORMAT)
            throw std::runtime_error("cache entry has a different format version");
        if (j.at("order").get<long>() != G.order() ||
            j.at("class_count").get<long>() != G.class_count())
            throw std::runtime_error("cache entry does not match the group");
        CharacterTable T;
        T.group = &G;
        T.degrees = j.at("degrees").get<std::vector<long>>();
        for (const auto& row : j.at("irr")) {
            ClassFunction cf;
            for (const auto& v : row) cf.push_back(cyclo_from_json(v));
            if ((long)cf.size() != G.class_count())
                throw std::runtime_error("cache entry row has the wrong length");
            T.irr.push_back(std::move(cf));
        }
        if ((long)T.irr.size() != G.class_count() || T.degrees.size() != T.irr.size())
            throw std::runtime_error("cache entry has the wrong number of rows");
        // Spot checks: degree sum, trivial character, first row norms.
        long sq = 0;
        for (size_t r = 0; r < T.irr.size(); ++r) {
            sq += T.degrees[r] * T.degrees[r];
            if (!(T.irr[r][0] == Cyclo(Rational(T.degrees[r]))))
                throw std::runtime_error("cache entry degree column mismatch");
        }
        if (sq != G.order()) throw std::runtime_error("cache entry degree sum mismatch");
        for (const auto& v : T.irr[0])
            if (!(v == Cyclo(Rational(1))))
                throw std::runtime_error("cache entry trivial row corrupt");
        for (size_t r = 0; r < T.irr.size() && r < 3; ++r)
            if (!(inner_product(T, T.irr[r], T.irr[r]) == Cyclo(Rational(1))))
                throw std::runtime_error("cache entry fails orthogonality spot check");
        return T;
    } catch (const std::exception& e) {
        std::cerr << "warning: discarding cache entry " << path.string() << ": " << e.what()
                  << "\n";
        std::error_code ec;
        std::filesystem::remove(path, ec);
        return std::nullopt;
    }
}

/// Character table with optional on-disk caching. The cache directory comes
/// from the caller (typically the EIGENONE_CACHE_DIR environment variable);
/// no directory or no_cache means compute directly.
inline CharacterTable cached_character_table(const PermGroup& G,
                                             const std::optional<std::filesystem::path>& dir,
                                             bool no_cache = false, long bound = 1024) {
    if (dir && !no_cache) {
        if (auto T = load_table(*dir, G)) {
            std::cerr << "cache hit (order " << G.order() << ")\n";
            return std::move(*T);
        }
    }
    CharacterTable T = character_table(G, bound);
    if (dir && !no_cache) store_table(*dir, G, T);
    return T;
}

}  // namespace eigenone
