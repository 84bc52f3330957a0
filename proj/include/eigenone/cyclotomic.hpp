#pragma once

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "eigenone/rational.hpp"

namespace eigenone {

namespace detail {

/// Coefficients of the n-th cyclotomic polynomial, ascending degree, cached.
inline const std::vector<Int>& cyclotomic_poly(long n) {
    static std::map<long, std::vector<Int>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    // x^n - 1 divided by the product of Phi_d over proper divisors d of n.
    std::vector<Int> num(n + 1, 0);
    num[0] = -1;
    num[n] = 1;
    for (long d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        std::vector<Int> phi_d;
        {
            auto found = cache.find(d);
            if (found != cache.end()) {
                phi_d = found->second;
            } else {
                // Build recursively without re-entering the lock.
                std::vector<Int> nd(d + 1, 0);
                nd[0] = -1;
                nd[d] = 1;
                for (long e = 1; e < d; ++e) {
                    if (d % e != 0) continue;
                    const auto& phi_e = cache.at(e);  // divisors are built in increasing order
                    std::vector<Int> q(nd.size() - phi_e.size() + 1, 0);
                    for (long i = (long)q.size() - 1; i >= 0; --i) {
                        Int c = nd[i + phi_e.size() - 1];
                        q[i] = c;
                        for (size_t j = 0; j < phi_e.size(); ++j) nd[i + j] -= c * phi_e[j];
                    }
                    nd = q;
                }
                cache[d] = nd;
                phi_d = nd;
            }
        }
        std::vector<Int> q(num.size() - phi_d.size() + 1, 0);
        for (long i = (long)q.size() - 1; i >= 0; --i) {
            Int c = num[i + phi_d.size() - 1];
            q[i] = c;
            for (size_t j = 0; j < phi_d.size(); ++j) num[i + j] -= c * phi_d[j];
        }
        num = q;
    }
    return cache.emplace(n, std::move(num)).first->second;
}

inline long euler_phi(long n) {
    long result = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

/// In-place reduction of a rational polynomial modulo Phi_n; result has degree < phi(n).
inline void reduce_mod_phi(std::vector<Rational>& poly, long n) {
    const auto& phi = cyclotomic_poly(n);
    size_t deg = phi.size() - 1;  // = phi(n)
    if (poly.size() <= deg) {
        poly.resize(deg, Rational(0));
        return;
    }
    for (long i = (long)poly.size() - 1; i >= (long)deg; --i) {
        Rational c = poly[i];
        if (c == 0) continue;
        poly[i] = 0;
        for (size_t j = 0; j < deg; ++j) poly[i - deg + j] -= c * Rational(phi[j]);
    }
    poly.resize(deg);
}

}  // namespace detail

/// An exact element of a cyclotomic field Q(zeta_n), stored on the power basis
/// 1, zeta, ..., zeta^(phi(n)-1) modulo Phi_n, with the conductor minimized so
/// that equality is coefficient equality. Conductors are never 2 mod 4.
class Cyclo {
public:
    Cyclo() : n_(1), c_(1, Rational(0)) {}
    explicit Cyclo(const Rational& r) : n_(1), c_(1, r) {}
    explicit Cyclo(long v) : n_(1), c_(1, Rational(v)) {}

    /// Primitive-root constructor: zeta_n^e, canonicalized.
    static Cyclo zeta(long n, long e) {
        if (n <= 0) throw std::invalid_argument("zeta: conductor must be positive");
        e %= n;
        if (e < 0) e += n;
        long g = gcd_long(e == 0 ? n : e, n);
        n /= g;
        e /= g;
        bool negate = false;
        if (n % 2 == 0 && (n / 2) % 2 == 1) {  // conductor 2m, m odd: zeta_2m = -zeta_m^((m+1)/2)
            long m = n / 2;
            if (e % 2 == 1) negate = true;
            e = (e * ((m + 1) / 2)) % m;
            n = m;
        }
        Cyclo out;
        out.n_ = n;
        out.c_.assign(detail::euler_phi(n), Rational(0));
        std::vector<Rational> poly(e + 1, Rational(0));
        poly[e] = negate ? Rational(-1) : Rational(1);
        detail::reduce_mod_phi(poly, n);
        out.c_ = std::move(poly);
        out.canonicalize();
        return out;
    }

    long conductor() const { return n_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const auto& c : c_)
            if (c != 0) return false;
        return true;
    }
    bool is_rational() const { return n_ == 1; }
    Rational rational_value() const {
        if (n_ != 1) throw std::domain_error("rational_value on irrational cyclotomic");
        return c_[0];
    }
    bool is_integer() const { return n_ == 1 && denominator(c_[0]) == 1; }

    bool operator==(const Cyclo& o) const { return n_ == o.n_ && c_ == o.c_; }
    bool operator!=(const Cyclo& o) const { return !(*this == o); }

    Cyclo operator-() const {
        Cyclo r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    friend Cyclo operator+(const Cyclo& a, const Cyclo& b) {
        auto [x, y, n] = Cyclo::lift_pair(a, b);
        for (size_t i = 0; i < y.size(); ++i) x[i] += y[i];
        return Cyclo::from_reduced(std::move(x), n);
    }
    friend Cyclo operator-(const Cyclo& a, const Cyclo& b) {
        auto [x, y, n] = Cyclo::lift_pair(a, b);
        for (size_t i = 0; i < y.size(); ++i) x[i] -= y[i];
        return Cyclo::from_reduced(std::move(x), n);
    }
    friend Cyclo operator*(const Cyclo& a, const Cyclo& b) {
        if (a.n_ == 1) return b.scaled(a.c_[0]);
        if (b.n_ == 1) return a.scaled(b.c_[0]);
        auto [x, y, n] = Cyclo::lift_pair(a, b);
        std::vector<Rational> prod(x.size() + y.size() - 1, Rational(0));
        for (size_t i = 0; i < x.size(); ++i) {
            if (x[i] == 0) continue;
            for (size_t j = 0; j < y.size(); ++j) {
                if (y[j] == 0) continue;
                prod[i + j] += x[i] * y[j];
            }
        }
        detail::reduce_mod_phi(prod, n);
        return Cyclo::from_reduced(std::move(prod), n);
    }
    friend Cyclo operator/(const Cyclo& a, const Cyclo& b) { return a * b.inverse(); }

    Cyclo& operator+=(const Cyclo& o) { return *this = *this + o; }
    Cyclo& operator-=(const Cyclo& o) { return *this = *this - o; }
    Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }
    Cyclo& operator/=(const Cyclo& o) { return *this = *this / o; }

    Cyclo scaled(const Rational& r) const {
        if (r == 0) return Cyclo();
        Cyclo out = *this;
        for (auto& c : out.c_) c *= r;
        return out;
    }

    Cyclo inverse() const {
        if (is_zero()) throw std::domain_error("division by zero cyclotomic");
        if (n_ == 1) return Cyclo(Rational(1) / c_[0]);
        // Extended Euclid of this (as polynomial) with Phi_n over Q.
        const auto& phi_int = detail::cyclotomic_poly(n_);
        std::vector<Rational> r0(phi_int.begin(), phi_int.end());
        std::vector<Rational> r1 = c_;
        trim(r1);
        std::vector<Rational> s0(1, Rational(0)), s1(1, Rational(1));
        while (true) {
            // r0 = q*r1 + r2
            std::vector<Rational> rem = r0;
            std::vector<Rational> q(rem.size() >= r1.size() ? rem.size() - r1.size() + 1 : 1,
                                    Rational(0));
            Rational lead = r1.back();
            for (long i = (long)rem.size() - 1; i >= (long)r1.size() - 1; --i) {
                Rational c = rem[i] / lead;
                if (c == 0) continue;
                q[i - (r1.size() - 1)] = c;
                for (size_t j = 0; j < r1.size(); ++j) rem[i - (r1.size() - 1) + j] -= c * r1[j];
            }
            trim(rem);
            // s2 = s0 - q*s1
            std::vector<Rational> s2 = s0;
            s2.resize(std::max(s2.size(), q.size() + s1.size() - 1), Rational(0));
            for (size_t i = 0; i < q.size(); ++i) {
                if (q[i] == 0) continue;
                for (size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
            }
            trim(s2);
            if (rem.size() == 1 && rem[0] != 0) {
                // r1 divides into a unit: s1-chain scaled gives the inverse of c_ mod Phi.
                Rational scale = Rational(1) / rem[0];
                std::vector<Rational> inv = s2;
                for (auto& c : inv) c *= scale;
                detail::reduce_mod_phi(inv, n_);
                return Cyclo::from_reduced(std::move(inv), n_);
            }
            if (rem.size() == 1) throw std::domain_error("non-invertible cyclotomic element");
            r0 = std::move(r1);
            r1 = std::move(rem);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
    }

    /// Galois action zeta -> zeta^j, gcd(j, n) = 1.
    Cyclo galois(long j) const {
        if (n_ == 1) return *this;
        return Cyclo::from_reduced(galois_raw(j), n_);
    }

    /// Complex conjugation (zeta -> zeta^-1).
    Cyclo conj() const { return n_ == 1 ? *this : galois(n_ - 1); }

    /// Fixed by complex conjugation, i.e. real under the embedding zeta_n -> exp(2 pi i / n).
    bool is_real() const { return n_ == 1 || *this == conj(); }

    Cyclo pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        Cyclo r(Rational(1)), b = *this;
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    std::string to_string() const {
        if (n_ == 1) return rational_to_string(c_[0]);
        std::ostringstream os;
        bool first = true;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            if (!first) os << " + ";
            os << rational_to_string(c_[i]);
            if (i > 0) os << "*z" << n_ << "^" << i;
            first = false;
        }
        if (first) os << "0";
        return os.str();
    }

    /// Strict total order usable as a map key (lexicographic, not numeric).
    bool operator<(const Cyclo& o) const {
        if (n_ != o.n_) return n_ < o.n_;
        for (size_t i = 0; i < c_.size(); ++i)
            if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
        return false;
    }

private:
    long n_;
    std::vector<Rational> c_;

    /// Coefficients of the Galois image at the current conductor, reduced mod
    /// Phi_n but NOT canonicalized (used internally to avoid recursion).
    std::vector<Rational> galois_raw(long j) const {
        j %= n_;
        if (j < 0) j += n_;
        if (gcd_long(j, n_) != 1) throw std::invalid_argument("galois exponent not coprime");
        std::vector<Rational> poly(n_, Rational(0));
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            poly[(i * j) % n_] += c_[i];
        }
        detail::reduce_mod_phi(poly, n_);
        return poly;
    }

    static void trim(std::vector<Rational>& v) {
        while (v.size() > 1 && v.back() == 0) v.pop_back();
    }

    static Cyclo from_reduced(std::vector<Rational> coeffs, long n) {
        Cyclo out;
        out.n_ = n;
        coeffs.resize(detail::euler_phi(n), Rational(0));
        out.c_ = std::move(coeffs);
        out.canonicalize();
        return out;
    }

    /// Lifts a and b to the lcm of their conductors; returns both coefficient
    /// vectors (reduced mod Phi_lcm) and the common conductor.
    static std::tuple<std::vector<Rational>, std::vector<Rational>, long> lift_pair(
        const Cyclo& a, const Cyclo& b) {
        long n = lcm_long(a.n_, b.n_);
        return {a.lift_to(n), b.lift_to(n), n};
    }

    std::vector<Rational> lift_to(long n) const {
        if (n == n_) {
            auto v = c_;
            v.resize(detail::euler_phi(n), Rational(0));
            return v;
        }
        long k = n / n_;
        std::vector<Rational> poly(n, Rational(0));
        for (size_t i = 0; i < c_.size(); ++i)
            if (c_[i] != 0) poly[(i * k) % n] += c_[i];
        detail::reduce_mod_phi(poly, n);
        return poly;
    }

    /// Descends to the minimal conductor.
    void canonicalize() {
        if (n_ == 1) return;
        // Quick rationality check: on the power basis, rational means all
        // higher coefficients vanish.
        bool rational = true;
        for (size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) { rational = false; break; }
        if (rational) {
            c_.resize(1);
            n_ = 1;
            return;
        }
        bool descended = true;
        while (descended && n_ > 1) {
            descended = false;
            long n = n_;
            for (long p = 2; p <= n; ++p) {
                if (n % p != 0) continue;
                bool prime = true;
                for (long q = 2; q * q <= p; ++q)
                    if (p % q == 0) { prime = false; break; }
                if (!prime) continue;
                long d = n / p;
                if (d % 2 == 0 && (d / 2) % 2 == 1) d /= 2;
                if (d == n || d < 1) continue;
                if (try_descend(d)) {
                    descended = true;
                    break;
                }
            }
            if (n_ == 1) break;
        }
    }

    /// Attempts to rewrite the element in Q(zeta_d), d | n. Returns true on success.
    bool try_descend(long d) {
        long n = n_;
        // Fixed-field test: invariant under all Galois maps j = 1 mod d.
        for (long j = 1 + d; j < n; j += d) {
            if (gcd_long(j, n) != 1) continue;
            if (galois_raw(j) != c_) return false;
        }
        if (d == 1) {
            // Rational but not caught by the quick check cannot happen on the
            // power basis; keep a guard anyway.
            return false;
        }
        long phid = detail::euler_phi(d);
        long phin = (long)c_.size();
        // Solve sum y_i * (zeta_n^{(n/d) i} mod Phi_n) = this.
        std::vector<std::vector<Rational>> cols(phid);
        long k = n / d;
        for (long i = 0; i < phid; ++i) {
            std::vector<Rational> poly(n, Rational(0));
            poly[(i * k) % n] = 1;
            detail::reduce_mod_phi(poly, n);
            cols[i] = std::move(poly);
        }
        // Gaussian elimination on the phin x (phid+1) augmented system.
        std::vector<std::vector<Rational>> aug(phin, std::vector<Rational>(phid + 1, Rational(0)));
        for (long r = 0; r < phin; ++r) {
            for (long i = 0; i < phid; ++i) aug[r][i] = cols[i][r];
            aug[r][phid] = c_[r];
        }
        std::vector<long> pivot_col(phin, -1);
        long row = 0;
        for (long col = 0; col < phid && row < phin; ++col) {
            long pr = -1;
            for (long r = row; r < phin; ++r)
                if (aug[r][col] != 0) { pr = r; break; }
            if (pr < 0) continue;
            std::swap(aug[row], aug[pr]);
            Rational inv = Rational(1) / aug[row][col];
            for (long j2 = col; j2 <= phid; ++j2) aug[row][j2] *= inv;
            for (long r = 0; r < phin; ++r) {
                if (r == row || aug[r][col] == 0) continue;
                Rational f = aug[r][col];
                for (long j2 = col; j2 <= phid; ++j2) aug[r][j2] -= f * aug[row][j2];
            }
            pivot_col[row] = col;
            ++row;
        }
        for (long r = row; r < phin; ++r)
            if (aug[r][phid] != 0) return false;  // inconsistent: not in the subfield
        std::vector<Rational> y(phid, Rational(0));
        for (long r = 0; r < row; ++r) y[pivot_col[r]] = aug[r][phid];
        n_ = d;
        c_ = std::move(y);
        canonicalize();
        return true;
    }
};

inline Cyclo operator*(const Rational& r, const Cyclo& c) { return c.scaled(r); }

}  // namespace eigenone
