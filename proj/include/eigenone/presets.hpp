#pragma once

#include <cctype>
#include <numeric>
#include <string>

#include "eigenone/group.hpp"

namespace eigenone {
namespace detail {

inline Perm from_cycles(long deg, const std::vector<std::vector<long>>& cycles) {
    std::vector<long> img(deg);
    std::iota(img.begin(), img.end(), 0L);
    for (const auto& c : cycles)
        for (size_t i = 0; i < c.size(); ++i) img[c[i]] = c[(i + 1) % c.size()];
    return Perm(std::move(img));
}

/// Small finite field GF(p^f) with table arithmetic; elements are 0..q-1
/// encoded as base-p digit vectors of polynomial coefficients.
struct SmallField {
    long p, f, q;
    std::vector<long> add_t, mul_t;  // q*q tables
    long gen;                        // a multiplicative generator

    SmallField(long p_, long f_) : p(p_), f(f_) {
        q = 1;
        for (long i = 0; i < f; ++i) q *= p;
        // Irreducible polynomials (monic, coefficients of x^0..x^(f-1)).
        std::vector<long> irr;
        if (f == 1) irr = {0};
        else if (p == 2 && f == 2) irr = {1, 1};        // x^2 + x + 1
        else if (p == 2 && f == 3) irr = {1, 1, 0};     // x^3 + x + 1
        else if (p == 3 && f == 2) irr = {1, 0};        // x^2 + 1
        else throw std::invalid_argument("unsupported field size");
        auto digits = [&](long e) {
            std::vector<long> d(f);
            for (long i = 0; i < f; ++i) { d[i] = e % p; e /= p; }
            return d;
        };
        auto encode = [&](const std::vector<long>& d) {
            long e = 0;
            for (long i = f - 1; i >= 0; --i) e = e * p + d[i];
            return e;
        };
        add_t.resize(q * q);
        mul_t.resize(q * q);
        for (long a = 0; a < q; ++a)
            for (long b = 0; b < q; ++b) {
                auto da = digits(a), db = digits(b);
                std::vector<long> s(f);
                for (long i = 0; i < f; ++i) s[i] = (da[i] + db[i]) % p;
                add_t[a * q + b] = encode(s);
                std::vector<long> prod(2 * f - 1, 0);
                for (long i = 0; i < f; ++i)
                    for (long j = 0; j < f; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
                for (long k = 2 * f - 2; k >= f; --k) {
                    long c = prod[k];
                    if (c == 0) continue;
                    prod[k] = 0;
                    // x^k = x^(k-f) * (-irr)
                    for (long i = 0; i < f; ++i)
                        prod[k - f + i] = ((prod[k - f + i] - c * irr[i]) % p + p) % p;
                }
                prod.resize(f);
                mul_t[a * q + b] = encode(prod);
            }
        gen = 0;
        for (long g = 1; g < q; ++g) {
            long x = g, ord = 1;
            while (x != 1) { x = mul(x, g); ++ord; }
            if (ord == q - 1) { gen = g; break; }
        }
    }
    long add(long a, long b) const { return add_t[a * q + b]; }
    long mul(long a, long b) const { return mul_t[a * q + b]; }
    long neg(long a) const {
        for (long b = 0; b < q; ++b)
            if (add(a, b) == 0) return b;
        return 0;
    }
    long inv(long a) const {
        for (long b = 1; b < q; ++b)
            if (mul(a, b) == 1) return b;
        throw std::domain_error("inverse of zero");
    }
};

/// Moebius action of an invertible 2x2 matrix on the projective line
/// {0..q-1} + {infinity = q}, as a permutation on q+1 points.
inline Perm moebius(const SmallField& F, long a, long b, long c, long d) {
    long q = F.q;
    std::vector<long> img(q + 1);
    auto apply = [&](long x) {
        if (x == q) {  // infinity
            if (c == 0) return q;
            return F.mul(a, F.inv(c));
        }
        long num = F.add(F.mul(a, x), b);
        long den = F.add(F.mul(c, x), d);
        if (den == 0) return q;
        return F.mul(num, F.inv(den));
    };
    for (long x = 0; x <= q; ++x) img[x] = apply(x);
    return Perm(std::move(img));
}

/// SL2(p) acting on the nonzero vectors of F_p^2 (point (x,y) -> x*p + y - 1 shifted).
inline PermGroup sl2p(long p) {
    SmallField F(p, 1);
    long n = p * p - 1;
    auto point = [&](long x, long y) { return x * p + y - 1; };  // (0,0) excluded
    auto act = [&](long a, long b, long c, long d) {
        std::vector<long> img(n);
        for (long x = 0; x < p; ++x)
            for (long y = 0; y < p; ++y) {
                if (x == 0 && y == 0) continue;
                long nx = F.add(F.mul(a, x), F.mul(b, y));
                long ny = F.add(F.mul(c, x), F.mul(d, y));
                img[point(x, y)] = point(nx, ny);
            }
        return Perm(std::move(img));
    };
    return PermGroup::from_generators({act(1, 1, 0, 1), act(0, F.neg(1), 1, 0)}, n);
}

inline PermGroup psl2(long q) {
    long p, f;
    if (q == 4) { p = 2; f = 2; }
    else if (q == 8) { p = 2; f = 3; }
    else if (q == 9) { p = 3; f = 2; }
    else { p = q; f = 1; }
    SmallField F(p, f);
    std::vector<Perm> gens;
    gens.push_back(moebius(F, 1, 1, 0, 1));                       // x -> x + 1
    if (f > 1) gens.push_back(moebius(F, 1, F.gen, 0, 1));        // x -> x + g
    if (q > 3) gens.push_back(moebius(F, F.mul(F.gen, F.gen), 0, 0, 1));  // x -> g^2 x
    gens.push_back(moebius(F, 0, F.neg(1), 1, 0));                // x -> -1/x
    return PermGroup::from_generators(std::move(gens), q + 1);
}

inline PermGroup pgl2(long q) {
    SmallField F(q, 1);
    std::vector<Perm> gens;
    gens.push_back(moebius(F, 1, 1, 0, 1));
    gens.push_back(moebius(F, F.gen, 0, 0, 1));  // x -> g x (non-square scaling)
    gens.push_back(moebius(F, 0, 1, 1, 0));      // x -> 1/x
    return PermGroup::from_generators(std::move(gens), q + 1);
}

inline PermGroup dihedral(long order) {
    if (order < 4 || order % 2 != 0) throw std::invalid_argument("dihedral order must be even >= 4");
    long n = order / 2;
    std::vector<long> rot(n), refl(n);
    for (long i = 0; i < n; ++i) {
        rot[i] = (i + 1) % n;
        refl[i] = (n - i) % n;
    }
    return PermGroup::from_generators({Perm(std::move(rot)), Perm(std::move(refl))}, n);
}

inline PermGroup quaternion8() {
    Perm a = from_cycles(8, {{0, 1, 2, 3}, {4, 7, 6, 5}});
    Perm b = from_cycles(8, {{0, 4, 2, 6}, {1, 5, 3, 7}});
    return PermGroup::from_generators({a, b}, 8);
}

inline PermGroup d8_on(long deg, long off) {
    // dihedral of order 8 on points off..off+3 within a larger degree
    return PermGroup::from_generators(
        {from_cycles(deg, {{off, off + 1, off + 2, off + 3}}),
         from_cycles(deg, {{off + 1, off + 3}})},
        deg);
}

/// Extraspecial group of order 32: central product D8*D8 (plus type) or
/// D8*Q8 (minus type), as the quotient of the direct product by the
/// anti-diagonal central subgroup.
inline PermGroup extraspecial32(bool plus) {
    if (plus) {
        Perm r1 = from_cycles(8, {{0, 1, 2, 3}});
        Perm s1 = from_cycles(8, {{1, 3}});
        Perm r2 = from_cycles(8, {{4, 5, 6, 7}});
        Perm s2 = from_cycles(8, {{5, 7}});
        PermGroup prod = PermGroup::from_generators({r1, s1, r2, s2}, 8);
        long z = prod.index_of(from_cycles(8, {{0, 2}, {1, 3}, {4, 6}, {5, 7}}));
        if (z < 0) throw std::logic_error("central element not found");
        return quotient_group(prod, prod.closure_of({z}));
    }
    // D8 on points 0..3, Q8 (regular representation) on points 4..11.
    Perm r = from_cycles(12, {{0, 1, 2, 3}});
    Perm s = from_cycles(12, {{1, 3}});
    Perm a = from_cycles(12, {{4, 5, 6, 7}, {8, 11, 10, 9}});
    Perm b = from_cycles(12, {{4, 8, 6, 10}, {5, 9, 7, 11}});
    PermGroup prod = PermGroup::from_generators({r, s, a, b}, 12);
    // z = r^2 * a^2 (product of the two central involutions)
    long ri = prod.index_of(r), ai = prod.index_of(a);
    long z = prod.product(prod.product(ri, ri), prod.product(ai, ai));
    return quotient_group(prod, prod.closure_of({z}));
}

inline PermGroup symmetric(long n) {
    if (n < 1 || n > 8) throw std::invalid_argument("Sn supported for 1 <= n <= 8");
    if (n == 1) return PermGroup::from_generators({}, 1);
    std::vector<Perm> gens{from_cycles(n, {{0, 1}})};
    if (n > 2) {
        std::vector<long> full(n);
        std::iota(full.begin(), full.end(), 0L);
        gens.push_back(from_cycles(n, {full}));
    }
    return PermGroup::from_generators(std::move(gens), n, 50000);
}

inline PermGroup alternating(long n) {
    if (n < 1 || n > 8) throw std::invalid_argument("An supported for 1 <= n <= 8");
    if (n < 3) return PermGroup::from_generators({}, n < 1 ? 1 : n);
    std::vector<Perm> gens{from_cycles(n, {{0, 1, 2}})};
    if (n > 3) {
        std::vector<long> c;
        if (n % 2 == 1)
            for (long i = 0; i < n; ++i) c.push_back(i);
        else
            for (long i = 1; i < n; ++i) c.push_back(i);
        gens.push_back(from_cycles(n, {c}));
    }
    return PermGroup::from_generators(std::move(gens), n, 50000);
}

inline PermGroup cyclic(long n) {
    if (n < 1) throw std::invalid_argument("Cn requires n >= 1");
    if (n == 1) return PermGroup::from_generators({}, 1);
    std::vector<long> img(n);
    for (long i = 0; i < n; ++i) img[i] = (i + 1) % n;
    return PermGroup::from_generators({Perm(std::move(img))}, n);
}

}  // namespace detail

inline std::vector<std::string> preset_names() {
    return {"S2",  "S3",  "S4",  "S5",  "S6",  "S7",  "S8",  "A3",      "A4",      "A5",
            "A6",  "A7",  "A8",  "Cn",  "Dn",  "Q8",  "ES32+", "ES32-", "SL2(3)",  "SL2(5)",
            "PSL2(4)", "PSL2(5)", "PSL2(7)", "PSL2(8)", "PSL2(9)", "PSL2(11)", "PGL2(3)"};
}

/// Build a preset group by name; Cn and Dn take the numeric part from the
/// name (e.g. C6, D12 = dihedral of order 12).
inline std::optional<PermGroup> make_preset(const std::string& name) {
    auto num_suffix = [&](char prefix) -> std::optional<long> {
        if (name.size() < 2 || name[0] != prefix) return std::nullopt;
        for (size_t i = 1; i < name.size(); ++i)
            if (!std::isdigit((unsigned char)name[i])) return std::nullopt;
        return std::stol(name.substr(1));
    };
    if (name == "Q8") return detail::quaternion8();
    if (name == "ES32+") return detail::extraspecial32(true);
    if (name == "ES32-") return detail::extraspecial32(false);
    if (name == "SL2(3)") return detail::sl2p(3);
    if (name == "SL2(5)") return detail::sl2p(5);
    if (name == "PGL2(3)") return detail::pgl2(3);
    for (long q : {4L, 5L, 7L, 8L, 9L, 11L})
        if (name == "PSL2(" + std::to_string(q) + ")") return detail::psl2(q);
    if (auto n = num_suffix('S')) return detail::symmetric(*n);
    if (auto n = num_suffix('A')) return detail::alternating(*n);
    if (auto n = num_suffix('C')) return detail::cyclic(*n);
    if (auto n = num_suffix('D')) return detail::dihedral(*n);
    return std::nullopt;
}

}  // namespace eigenone
