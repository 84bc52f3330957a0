#pragma once

#include <vector>

#include "eigenone/cyclotomic.hpp"
#include "eigenone/numeric.hpp"

namespace eigenone {

/// Dense univariate polynomial over the (real) cyclotomic field, ascending degree.
class Poly {
public:
    Poly() : c_(1, Cyclo()) {}
    explicit Poly(std::vector<Cyclo> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) c_.assign(1, Cyclo());
        trim();
    }
    static Poly constant(const Cyclo& v) { return Poly(std::vector<Cyclo>{v}); }
    static Poly x_power(size_t k, const Cyclo& lead = Cyclo(Rational(1))) {
        std::vector<Cyclo> c(k + 1, Cyclo());
        c[k] = lead;
        return Poly(std::move(c));
    }

    const std::vector<Cyclo>& coeffs() const { return c_; }
    long degree() const { return (long)c_.size() - 1; }  // zero polynomial: degree 0 by convention
    bool is_zero() const { return c_.size() == 1 && c_[0].is_zero(); }
    const Cyclo& lead() const { return c_.back(); }
    const Cyclo& operator[](size_t i) const { return c_[i]; }

    bool operator==(const Poly& o) const { return c_ == o.c_; }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Cyclo> r(std::max(a.c_.size(), b.c_.size()), Cyclo());
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<Cyclo> r(std::max(a.c_.size(), b.c_.size()), Cyclo());
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<Cyclo> r(a.c_.size() + b.c_.size() - 1, Cyclo());
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) {
                if (b.c_[j].is_zero()) continue;
                r[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return Poly(std::move(r));
    }

    Poly scaled(const Cyclo& s) const {
        std::vector<Cyclo> r = c_;
        for (auto& v : r) v *= s;
        return Poly(std::move(r));
    }
    Poly monic() const {
        if (is_zero()) return *this;
        return scaled(lead().inverse());
    }

    Poly derivative() const {
        if (c_.size() == 1) return Poly();
        std::vector<Cyclo> r(c_.size() - 1, Cyclo());
        for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i].scaled(Rational((long)i));
        return Poly(std::move(r));
    }

    Cyclo eval(const Cyclo& x) const {
        Cyclo acc;
        for (long i = (long)c_.size() - 1; i >= 0; --i) acc = acc * x + c_[i];
        return acc;
    }

    /// Euclidean division; returns (quotient, remainder).
    std::pair<Poly, Poly> divmod(const Poly& d) const {
        if (d.is_zero()) throw std::domain_error("polynomial division by zero");
        std::vector<Cyclo> rem = c_;
        std::vector<Cyclo> quot(rem.size() >= d.c_.size() ? rem.size() - d.c_.size() + 1 : 1,
                                Cyclo());
        Cyclo lead_inv = d.lead().inverse();
        for (long i = (long)rem.size() - 1; i >= (long)d.c_.size() - 1; --i) {
            if (rem[i].is_zero()) continue;
            Cyclo q = rem[i] * lead_inv;
            quot[i - (d.c_.size() - 1)] = q;
            for (size_t j = 0; j < d.c_.size(); ++j) rem[i - (d.c_.size() - 1) + j] -= q * d.c_[j];
        }
        return {Poly(std::move(quot)), Poly(std::move(rem))};
    }

private:
    std::vector<Cyclo> c_;
    void trim() {
        while (c_.size() > 1 && c_.back().is_zero()) c_.pop_back();
    }
};

/// Monic gcd; errors when both inputs are zero.
inline Poly poly_gcd(Poly a, Poly b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd of two zero polynomials");
    while (!b.is_zero()) {
        Poly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

inline Poly squarefree_part(const Poly& p) {
    if (p.is_zero() || p.degree() == 0) return p.monic();
    Poly g = poly_gcd(p, p.derivative());
    if (g.degree() == 0) return p.monic();
    return p.divmod(g).first.monic();
}

/// Interval endpoint for real-root counting.
struct Bound {
    enum Kind { NegInf, Finite, PosInf } kind = Finite;
    Rational value{0};
    bool open = true;

    static Bound neg_inf() { return {NegInf, Rational(0), true}; }
    static Bound pos_inf() { return {PosInf, Rational(0), true}; }
    static Bound at(const Rational& v, bool open_flag = true) { return {Finite, v, open_flag}; }
};

namespace detail {

inline std::vector<Poly> sturm_chain(const Poly& p) {
    std::vector<Poly> chain;
    chain.push_back(p);
    chain.push_back(p.derivative());
    while (!chain.back().is_zero() && chain.back().degree() >= 0) {
        const Poly& a = chain[chain.size() - 2];
        const Poly& b = chain.back();
        if (b.is_zero()) break;
        Poly r = a.divmod(b).second;
        if (r.is_zero()) break;
        chain.push_back(Poly() - r);
    }
    return chain;
}

inline int sign_at(const Poly& q, const Bound& b) {
    if (q.is_zero()) return 0;
    switch (b.kind) {
        case Bound::Finite:
            return sign_of(q.eval(Cyclo(b.value)));
        case Bound::PosInf:
            return sign_of(q.lead());
        case Bound::NegInf:
            return (q.degree() % 2 == 0 ? 1 : -1) * sign_of(q.lead());
    }
    return 0;
}

inline int sign_variations(const std::vector<Poly>& chain, const Bound& b) {
    int count = 0, prev = 0;
    for (const auto& q : chain) {
        int s = sign_at(q, b);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

}  // namespace detail

/// Exact number of distinct real roots of squarefree p in the interval.
inline long sturm_count(const Poly& p, const Bound& lo, const Bound& hi) {
    if (p.is_zero()) throw std::domain_error("sturm_count on zero polynomial");
    if (p.degree() == 0) return 0;
    {
        Poly g = poly_gcd(p, p.derivative());
        if (g.degree() != 0) throw std::domain_error("sturm_count requires squarefree input");
    }
    auto chain = detail::sturm_chain(p);
    long count = detail::sign_variations(chain, lo) - detail::sign_variations(chain, hi);
    // V(a) - V(b) counts roots in (a, b]; adjust for the requested endpoints.
    if (hi.kind == Bound::Finite && hi.open && sign_of(p.eval(Cyclo(hi.value))) == 0) --count;
    if (lo.kind == Bound::Finite && !lo.open && sign_of(p.eval(Cyclo(lo.value))) == 0) ++count;
    return count;
}

}  // namespace eigenone
