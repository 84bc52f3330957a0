#pragma once

#include <random>

#include "eigenone/algebraic.hpp"
#include "eigenone/automorphism.hpp"
#include "eigenone/rep.hpp"

namespace eigenone {

/// Intertwiner m with rho(nu(g)) m = m rho(g) for all g, its Schur scaling
/// m^k = lambda * id, and the radical mu0 = |lambda|^(1/k). The two
/// finite-order normalizer elements inducing nu modulo Inn are
/// n_pm = +-|lambda|^(-1/k) * m; they are never materialized as matrices.
struct IntertwinerData {
    Automorphism nu;
    long k = 1;          // smallest k with m^k scalar
    Mat m;
    Cyclo lambda;        // m^k = lambda * id, conjugation-fixed, nonzero
    Cyclo abs_lambda;    // |lambda| under the real embedding
    RadicalReal mu0;     // |lambda|^(1/k), sign +1

    /// The eigenvalue target for the sign branch: sign * |lambda|^(1/k).
    RadicalReal target(int sign) const { return RadicalReal{abs_lambda, k, sign}; }
};

/// Solve rho(nu(g)) m = m rho(g) by averaging m = sum_g rho(nu(g)) X rho(g)^-1
/// over a random X; normalize by the first nonzero entry so the result is
/// independent of X up to the canonical +- pair.
inline IntertwinerData solve_intertwiner(const MatrixRep& rep, const Automorphism& nu,
                                         unsigned long seed = 0) {
    const PermGroup& G = *rep.group;
    long n = G.order(), d = rep.dim;
    // chi must be nu-fixed, otherwise no intertwiner exists.
    for (const auto& cl : G.classes())
        if (!(rep.rho(nu.apply(cl.representative)).trace() ==
              rep.rho(cl.representative).trace()))
            throw std::invalid_argument("character is not fixed by the automorphism");

    std::mt19937 rng(seed);
    Mat m;
    bool found = false;
    for (int attempt = 0; attempt < 16 && !found; ++attempt) {
        Mat X(d, d);
        for (long i = 0; i < d; ++i)
            for (long j = 0; j < d; ++j)
                X.at(i, j) = Cyclo(Rational((long)(rng() % 7) - 3));
        Mat acc(d, d);
        for (long g = 0; g < n; ++g) acc = acc + rep.rho(nu.apply(g)) * X * rep.rho(G.inverse(g));
        if (!acc.is_zero()) {
            m = std::move(acc);
            found = true;
        }
    }
    if (!found) throw std::runtime_error("intertwiner averaging yielded zero after retries");

    // Canonical scaling: first nonzero entry becomes 1.
    for (long i = 0; i < d && true; ++i) {
        bool done = false;
        for (long j = 0; j < d; ++j)
            if (!m.at(i, j).is_zero()) {
                m = m.scaled(m.at(i, j).inverse());
                done = true;
                break;
            }
        if (done) break;
    }
    for (const auto& gen : G.generators()) {
        long gi = G.index_of(gen);
        if (!(rep.rho(nu.apply(gi)) * m == m * rep.rho(gi)))
            throw std::logic_error("intertwining relation failed on a generator");
    }

    IntertwinerData it;
    it.nu = nu;
    it.m = m;
    long max_k = nu.order();
    Mat p = m;
    for (long j = 1; j <= max_k; ++j) {
        if (auto s = p.as_scalar()) {
            it.k = j;
            it.lambda = *s;
            break;
        }
        if (j == max_k) throw std::logic_error("m^k never became scalar");
        p = p * m;
    }
    if (it.lambda.is_zero()) throw std::logic_error("intertwiner is singular");
    if (!it.lambda.is_real()) throw std::logic_error("Schur scalar is not conjugation-fixed");
    it.abs_lambda = sign_of(it.lambda) < 0 ? -it.lambda : it.lambda;
    it.mu0 = RadicalReal{it.abs_lambda, it.k, 1};
    it.mu0.validate();
    return it;
}

}  // namespace eigenone
