#pragma once

#include "eigenone/matrix.hpp"

namespace eigenone {

/// The real number sign * base^(1/k), base a positive real cyclotomic.
struct RadicalReal {
    Cyclo base;     // > 0 under the real embedding
    long index = 1; // k
    int sign = 1;   // +1 or -1

    void validate() const {
        if (index < 1) throw std::invalid_argument("radical index must be positive");
        if (sign != 1 && sign != -1) throw std::invalid_argument("radical sign must be +-1");
        if (!base.is_real() || sign_of(base) <= 0)
            throw std::invalid_argument("radical base must be a positive real cyclotomic");
    }

    /// x^k - sign^k * base, the defining polynomial.
    Poly defining_poly() const {
        // sign^k * base: positive except for odd k with negative sign.
        std::vector<Cyclo> coeffs(index + 1, Cyclo());
        coeffs[0] = (index % 2 == 1 && sign < 0) ? base : -base;
        coeffs[index] = Cyclo(Rational(1));
        return Poly(std::move(coeffs));
    }

    Bound side_lo() const { return sign > 0 ? Bound::at(Rational(0)) : Bound::neg_inf(); }
    Bound side_hi() const { return sign > 0 ? Bound::pos_inf() : Bound::at(Rational(0)); }
};

/// True when theta is an exact root of p (p with conjugation-fixed coefficients).
inline bool is_root_at_radical(const Poly& p, const RadicalReal& theta) {
    theta.validate();
    if (p.is_zero()) return true;
    Poly g = poly_gcd(squarefree_part(p), theta.defining_poly());
    if (g.degree() == 0) return false;
    // theta is the unique real root of the defining polynomial on its sign side.
    return sturm_count(g, theta.side_lo(), theta.side_hi()) >= 1;
}

namespace detail {

struct RadicalPolyEval {
    const Poly& p;
    const RadicalReal& th;
    template <class F>
    Ival<F> operator()() const {
        auto t = eval_radical<F>(th.base, th.index, th.sign);
        Ival<F> acc{F(0), F(0)};
        Ival<F> tp{F(1), F(0)};
        for (size_t i = 0; i < p.coeffs().size(); ++i) {
            if (!p.coeffs()[i].is_zero()) acc = acc + eval_real_embedding<F>(p.coeffs()[i]) * tp;
            tp = tp * t;
        }
        return acc;
    }
};

}  // namespace detail

/// Exact sign of p(theta): algebraic zero test first, then interval refinement.
inline int sign_at_radical(const Poly& p, const RadicalReal& theta) {
    theta.validate();
    if (p.is_zero()) return 0;
    for (const auto& c : p.coeffs())
        if (!c.is_real()) throw std::domain_error("sign_at_radical needs real coefficients");
    if (is_root_at_radical(p, theta)) return 0;
    return detail::refine_sign(detail::RadicalPolyEval{p, theta});
}

/// True iff theta = sign * base^(1/k) is an eigenvalue of M (exact test).
inline bool has_algebraic_eigenvalue(const Mat& M, const RadicalReal& theta) {
    if (M.rows() != M.cols()) throw std::invalid_argument("eigenvalue test on non-square matrix");
    theta.validate();
    Poly p = M.charpoly();
    for (const auto& c : p.coeffs())
        if (!c.is_real())
            throw std::domain_error("characteristic polynomial is not conjugation-fixed");
    return is_root_at_radical(p, theta);
}

}  // namespace eigenone
