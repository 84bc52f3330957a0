#pragma once

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <optional>
#include <stdexcept>

#include "eigenone/cyclotomic.hpp"

namespace eigenone {

namespace detail {

/// Crude but conservative interval: midpoint arithmetic with an explicit
/// radius that absorbs a generous rounding slack after every operation.
template <class F>
struct Ival {
    F mid{0};
    F rad{0};

    static F slack(const F& x) {
        using std::abs;
        return (abs(x) + F(1)) * std::numeric_limits<F>::epsilon() * 16;
    }
    static Ival exact(const F& x) { return {x, slack(x)}; }

    Ival operator+(const Ival& o) const {
        F m = mid + o.mid;
        return {m, rad + o.rad + slack(m)};
    }
    Ival operator-(const Ival& o) const {
        F m = mid - o.mid;
        return {m, rad + o.rad + slack(m)};
    }
    Ival operator*(const Ival& o) const {
        using std::abs;
        F m = mid * o.mid;
        F r = abs(mid) * o.rad + abs(o.mid) * rad + rad * o.rad;
        return {m, r + slack(m)};
    }
    bool excludes_zero() const {
        using std::abs;
        return abs(mid) > rad;
    }
    int sign() const { return mid > 0 ? 1 : -1; }
};

template <class F>
Ival<F> eval_real_embedding(const Cyclo& x) {
    using boost::math::constants::pi;
    long n = x.conductor();
    Ival<F> acc{F(0), F(0)};
    const F two_pi = 2 * pi<F>();
    for (size_t e = 0; e < x.coeffs().size(); ++e) {
        const Rational& c = x.coeffs()[e];
        if (c == 0) continue;
        F cf = c.template convert_to<F>();
        F angle = two_pi * F((unsigned long)e) / F((unsigned long)n);
        F cs = cos(angle);
        Ival<F> term = Ival<F>::exact(cf) * Ival<F>{cs, Ival<F>::slack(cs) * 4};
        acc = acc + term;
    }
    return acc;
}

/// theta = sign * base^(1/k), base > 0 rational-embedded real cyclotomic.
template <class F>
Ival<F> eval_radical(const Cyclo& base, long k, int sgn) {
    Ival<F> b = eval_real_embedding<F>(base);
    if (!(b.mid > 0)) return {F(0), F(1)};  // force refinement / caller guards base > 0
    using std::pow;
    F root = pow(b.mid, F(1) / F((long long)k));
    // |d root / d base| = root / (k * base)
    F deriv = root / (F((long long)k) * b.mid);
    F r = deriv * b.rad + Ival<F>::slack(root) * 4;
    if (sgn < 0) root = -root;
    return {root, r};
}

using F24 = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<24>>;
using F48 = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<48>>;
using F96 = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<96>>;
using F192 = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<192>>;
using F384 = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<384>>;
using F768 = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<768>>;

template <class F, class Fn>
std::optional<int> try_sign(Fn&& fn) {
    Ival<F> v = fn.template operator()<F>();
    if (v.excludes_zero()) return v.sign();
    return std::nullopt;
}

/// Runs the evaluator at doubling precision until the interval excludes zero.
/// The caller is responsible for the exact zero test beforehand.
template <class Fn>
int refine_sign(Fn&& fn) {
    if (auto s = try_sign<F24>(fn)) return *s;
    if (auto s = try_sign<F48>(fn)) return *s;
    if (auto s = try_sign<F96>(fn)) return *s;
    if (auto s = try_sign<F192>(fn)) return *s;
    if (auto s = try_sign<F384>(fn)) return *s;
    if (auto s = try_sign<F768>(fn)) return *s;
    throw std::runtime_error("sign refinement did not converge at 768 digits");
}

struct EmbedEval {
    const Cyclo& v;
    template <class F>
    Ival<F> operator()() const {
        return eval_real_embedding<F>(v);
    }
};

}  // namespace detail

/// Sign of a conjugation-fixed cyclotomic under the embedding zeta_n -> exp(2 pi i/n).
/// Exact zero test first, then interval refinement with doubling precision.
inline int sign_of(const Cyclo& x) {
    if (!x.is_real()) throw std::domain_error("sign_of on non-real cyclotomic");
    if (x.is_zero()) return 0;
    if (x.is_rational()) return x.rational_value() > 0 ? 1 : -1;
    return detail::refine_sign(detail::EmbedEval{x});
}

inline Cyclo abs_value(const Cyclo& x) { return sign_of(x) < 0 ? -x : x; }

}  // namespace eigenone
