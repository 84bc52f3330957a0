#pragma once

#include "eigenone/group.hpp"
#include "eigenone/numeric.hpp"

namespace eigenone {

namespace detail {

inline long mulmod(long a, long b, long p) { return (long)((long long)a * b % p); }
inline long powmod(long a, long e, long p) {
    long r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}
inline long invmod(long a, long p) { return powmod((a % p + p) % p, p - 2, p); }

inline bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline long primitive_root(long p) {
    std::vector<long> prime_factors;
    long m = p - 1;
    for (long d = 2; d * d <= m; ++d)
        if (m % d == 0) {
            prime_factors.push_back(d);
            while (m % d == 0) m /= d;
        }
    if (m > 1) prime_factors.push_back(m);
    for (long g = 2; g < p; ++g) {
        bool ok = true;
        for (long q : prime_factors)
            if (powmod(g, (p - 1) / q, p) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    throw std::logic_error("no primitive root found");
}

/// Characteristic polynomial det(xI - M) mod p, ascending coefficients
/// (division-free Berkowitz scheme, same shape as the exact Mat::charpoly).
inline std::vector<long> charpoly_mod_p(const std::vector<std::vector<long>>& M, long p) {
    long n = (long)M.size();
    if (n == 0) return {1 % p};
    std::vector<long> vec{1 % p, (p - M[0][0] % p) % p};
    for (long m = 1; m < n; ++m) {
        std::vector<long> c(m + 2, 0);
        c[0] = 1 % p;
        c[1] = (p - M[m][m] % p) % p;
        std::vector<long> s(m);
        for (long i = 0; i < m; ++i) s[i] = M[i][m] % p;
        for (long k = 2; k <= m + 1; ++k) {
            long dot = 0;
            for (long i = 0; i < m; ++i) dot = (dot + mulmod(M[m][i] % p, s[i], p)) % p;
            c[k] = (p - dot) % p;
            if (k <= m) {
                std::vector<long> next(m, 0);
                for (long i = 0; i < m; ++i) {
                    if (s[i] == 0) continue;
                    for (long r2 = 0; r2 < m; ++r2)
                        next[r2] = (next[r2] + mulmod(M[r2][i] % p, s[i], p)) % p;
                }
                s = std::move(next);
            }
        }
        std::vector<long> out(m + 2, 0);
        for (size_t j = 0; j < out.size(); ++j)
            for (size_t k = 0; k < c.size() && k <= j; ++k)
                if (j - k < vec.size()) out[j] = (out[j] + mulmod(c[k], vec[j - k], p)) % p;
        vec = std::move(out);
    }
    return {vec.rbegin(), vec.rend()};
}

}  // namespace detail

using ClassFunction = std::vector<Cyclo>;

/// Exact complex character table of a permutation group, computed by the
/// class-matrix eigenvector method (Burnside / Dixon-Schneider) over a prime
/// field and lifted to cyclotomics, then verified by exact orthogonality.
struct CharacterTable {
    const PermGroup* group = nullptr;
    std::vector<ClassFunction> irr;  // rows; irr[0] is the trivial character
    std::vector<long> degrees;       // chi(1) as plain integers

    long class_count() const { return group->class_count(); }
    const Cyclo& value(long chi, long cls) const { return irr[chi][cls]; }

    /// Class of the k-th power of the representative of class cls.
    long power_class(long cls, long k) const {
        const PermGroup& G = *group;
        long rep = G.classes()[cls].representative;
        long ord = G.element_order(rep);
        k %= ord;
        if (k < 0) k += ord;
        long x = 0;
        for (long i = 0; i < k; ++i) x = G.product(x, rep);
        return G.class_of(x);
    }
};

inline CharacterTable character_table(const PermGroup& G, long bound = 1024) {
    if (G.order() > bound)
        throw std::runtime_error("character table bound " + std::to_string(bound) + " exceeded");
    long n = G.order();
    long r = G.class_count();
    const auto& classes = G.classes();

    // Prime p = 1 (mod exponent), p > 2|G|: character values and degree data
    // lift uniquely from F_p.
    long e = G.exponent();
    long p = 0;
    for (long c = e + 1;; c += e)
        if (c > 2 * n && detail::is_prime(c)) { p = c; break; }

    // Structure constants and class matrices A_j with (A_j)_{ik} = a_{jik},
    // where c_j c_i = sum_k a_{jik} c_k in the class algebra.
    std::vector<long> rep_inv_class(r);
    for (long i = 0; i < r; ++i) rep_inv_class[i] = G.class_of(G.inverse(classes[i].representative));
    std::vector<std::vector<std::vector<long>>> A(
        r, std::vector<std::vector<long>>(r, std::vector<long>(r, 0)));
    for (long j = 0; j < r; ++j)
        for (long i = 0; i < r; ++i) {
            std::vector<long> count(r, 0);
            for (long x : classes[j].members)
                for (long y : classes[i].members) ++count[G.class_of(G.product(x, y))];
            for (long k = 0; k < r; ++k) {
                if (count[k] % classes[k].size != 0)
                    throw std::logic_error("structure constant not integral");
                A[j][i].resize(r);
                A[j][i][k] = (count[k] / classes[k].size) % p;
            }
        }
    auto mat_of = [&](long j) {
        std::vector<std::vector<long>> m(r, std::vector<long>(r));
        for (long i = 0; i < r; ++i)
            for (long k = 0; k < r; ++k) m[i][k] = A[j][i][k];  // (A_j w)_i = w_j * w_i
        return m;
    };

    // Simultaneous eigenspaces by iterative splitting with each A_j.
    using Vecp = std::vector<long>;
    std::vector<std::vector<Vecp>> spaces;  // each: basis of column vectors (length r)
    {
        std::vector<Vecp> full;
        for (long i = 0; i < r; ++i) {
            Vecp v(r, 0);
            v[i] = 1;
            full.push_back(v);
        }
        spaces.push_back(full);
    }
    auto solve_coords = [&](const std::vector<Vecp>& basis, const Vecp& target) {
        long d = (long)basis.size();
        std::vector<std::vector<long>> aug(r, std::vector<long>(d + 1));
        for (long row = 0; row < r; ++row) {
            for (long c = 0; c < d; ++c) aug[row][c] = basis[c][row];
            aug[row][d] = target[row];
        }
        std::vector<long> coords(d, 0);
        long rr = 0;
        std::vector<long> piv(d, -1);
        for (long c = 0; c < d && rr < r; ++c) {
            long pr = -1;
            for (long row = rr; row < r; ++row)
                if (aug[row][c] != 0) { pr = row; break; }
            if (pr < 0) continue;
            std::swap(aug[rr], aug[pr]);
            long inv = detail::invmod(aug[rr][c], p);
            for (long cc = c; cc <= d; ++cc) aug[rr][cc] = detail::mulmod(aug[rr][cc], inv, p);
            for (long row = 0; row < r; ++row) {
                if (row == rr || aug[row][c] == 0) continue;
                long f = aug[row][c];
                for (long cc = c; cc <= d; ++cc)
                    aug[row][cc] = ((aug[row][cc] - detail::mulmod(f, aug[rr][cc], p)) % p + p) % p;
            }
            piv[c] = rr;
            ++rr;
        }
        for (long row = rr; row < r; ++row)
            if (aug[row][d] != 0) throw std::logic_error("vector left the invariant subspace");
        for (long c = 0; c < d; ++c)
            if (piv[c] >= 0) coords[c] = aug[piv[c]][d];
        return coords;
    };

    for (long j = 1; j < r; ++j) {
        bool all_split = true;
        for (const auto& s : spaces)
            if (s.size() > 1) all_split = false;
        if (all_split) break;
        auto Aj = mat_of(j);
        std::vector<std::vector<Vecp>> next;
        for (auto& s : spaces) {
            long d = (long)s.size();
            if (d == 1) {
                next.push_back(std::move(s));
                continue;
            }
            // Restricted matrix R: A_j b_c = sum R_{c'c} b_{c'}
            std::vector<std::vector<long>> R(d, std::vector<long>(d, 0));
            for (long c = 0; c < d; ++c) {
                Vecp img(r, 0);
                for (long row = 0; row < r; ++row) {
                    long acc = 0;
                    for (long k = 0; k < r; ++k)
                        acc = (acc + detail::mulmod(Aj[row][k], s[c][k], p)) % p;
                    img[row] = acc;
                }
                auto coords = solve_coords(s, img);
                for (long c2 = 0; c2 < d; ++c2) R[c2][c] = coords[c2];
            }
            auto cp = detail::charpoly_mod_p(R, p);
            long split_total = 0;
            for (long lambda = 0; lambda < p; ++lambda) {
                // Horner evaluation of cp at lambda
                long val = 0;
                for (long i = (long)cp.size() - 1; i >= 0; --i)
                    val = (detail::mulmod(val, lambda, p) + cp[i]) % p;
                if (val != 0) continue;
                // kernel of R - lambda
                std::vector<std::vector<long>> M(d, std::vector<long>(d));
                for (long a = 0; a < d; ++a)
                    for (long b = 0; b < d; ++b)
                        M[a][b] = ((R[a][b] - (a == b ? lambda : 0)) % p + p) % p;
                // row reduce
                std::vector<long> pivot_of_col(d, -1);
                long row = 0;
                for (long col = 0; col < d && row < d; ++col) {
                    long pr = -1;
                    for (long rr2 = row; rr2 < d; ++rr2)
                        if (M[rr2][col] != 0) { pr = rr2; break; }
                    if (pr < 0) continue;
                    std::swap(M[row], M[pr]);
                    long inv = detail::invmod(M[row][col], p);
                    for (long cc = col; cc < d; ++cc) M[row][cc] = detail::mulmod(M[row][cc], inv, p);
                    for (long rr2 = 0; rr2 < d; ++rr2) {
                        if (rr2 == row || M[rr2][col] == 0) continue;
                        long f = M[rr2][col];
                        for (long cc = col; cc < d; ++cc)
                            M[rr2][cc] = ((M[rr2][cc] - detail::mulmod(f, M[row][cc], p)) % p + p) % p;
                    }
                    pivot_of_col[col] = row;
                    ++row;
                }
                std::vector<Vecp> kernel_cols;
                for (long col = 0; col < d; ++col) {
                    if (pivot_of_col[col] >= 0) continue;
                    Vecp y(d, 0);
                    y[col] = 1;
                    for (long c2 = 0; c2 < d; ++c2)
                        if (pivot_of_col[c2] >= 0) y[c2] = (p - M[pivot_of_col[c2]][col]) % p;
                    kernel_cols.push_back(y);
                }
                if (kernel_cols.empty()) continue;
                std::vector<Vecp> sub;
                for (const auto& y : kernel_cols) {
                    Vecp v(r, 0);
                    for (long c = 0; c < d; ++c)
                        for (long row2 = 0; row2 < r; ++row2)
                            v[row2] = (v[row2] + detail::mulmod(y[c], s[c][row2], p)) % p;
                    sub.push_back(v);
                }
                split_total += (long)sub.size();
                next.push_back(std::move(sub));
            }
            if (split_total != d) throw std::logic_error("class matrix failed to split cleanly");
        }
        spaces = std::move(next);
    }
    for (const auto& s : spaces)
        if (s.size() != 1) throw std::logic_error("eigenspace splitting incomplete");

    long id_class = G.class_of(0);

    // Per character: omega vector, degree, lifted values.
    struct Row {
        long degree;
        ClassFunction values;
    };
    std::vector<Row> rows;
    long w = detail::primitive_root(p);
    for (const auto& s : spaces) {
        Vecp omega = s[0];
        long scale = detail::invmod(omega[id_class], p);
        if (omega[id_class] == 0) throw std::logic_error("degenerate eigenvector");
        for (auto& v : omega) v = detail::mulmod(v, scale, p);
        // 1/d^2 = (1/|G|) sum_i omega_i omega_{i'} / |C_i|
        long t = 0;
        for (long i = 0; i < r; ++i)
            t = (t + detail::mulmod(detail::mulmod(omega[i], omega[rep_inv_class[i]], p),
                                    detail::invmod(classes[i].size % p, p), p)) %
                p;
        long d2 = detail::mulmod(n % p, detail::invmod(t, p), p);
        long deg = 0;
        while (deg * deg < d2) ++deg;
        if (deg * deg != d2 || deg == 0 || deg * deg > n)
            throw std::logic_error("character degree recovery failed");
        // chi(g_i) mod p
        std::vector<long> chi_p(r);
        for (long i = 0; i < r; ++i)
            chi_p[i] = detail::mulmod(detail::mulmod(deg % p, omega[i], p),
                                      detail::invmod(classes[i].size % p, p), p);
        // Lift: chi(g) = sum_s m_s zeta_o^s with m_s the multiplicity of the
        // eigenvalue zeta_o^s, recovered mod p (m_s <= deg < p/2).
        ClassFunction values(r);
        for (long i = 0; i < r; ++i) {
            long rep = classes[i].representative;
            long o = G.element_order(rep);
            long z = detail::powmod(w, (p - 1) / o, p);
            long oinv = detail::invmod(o % p, p);
            Cyclo val;
            long x = 0;
            std::vector<long> chi_on_powers(o);
            for (long tt = 0; tt < o; ++tt) {
                chi_on_powers[tt] = chi_p[G.class_of(x)];
                x = G.product(x, rep);
            }
            for (long sexp = 0; sexp < o; ++sexp) {
                long zs_inv = detail::powmod(detail::invmod(z, p), sexp, p);
                long acc = 0, zp = 1;
                for (long tt = 0; tt < o; ++tt) {
                    acc = (acc + detail::mulmod(chi_on_powers[tt], zp, p)) % p;
                    zp = detail::mulmod(zp, zs_inv, p);
                }
                long m = detail::mulmod(acc, oinv, p);
                if (m > deg) throw std::logic_error("eigenvalue multiplicity lift failed");
                if (m != 0) val += Cyclo::zeta(o, sexp).scaled(Rational(m));
            }
            values[i] = val;
        }
        rows.push_back({deg, std::move(values)});
    }

    // Deterministic order: trivial first, then by (degree, values).
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        return a.values < b.values;
    });
    for (size_t i = 0; i < rows.size(); ++i) {
        bool trivial = true;
        for (const auto& v : rows[i].values)
            if (!(v == Cyclo(Rational(1)))) { trivial = false; break; }
        if (trivial) {
            std::rotate(rows.begin(), rows.begin() + i, rows.begin() + i + 1);
            break;
        }
    }

    CharacterTable T;
    T.group = &G;
    for (auto& row : rows) {
        T.degrees.push_back(row.degree);
        T.irr.push_back(std::move(row.values));
    }

    // Exact verification: sum of squares and row orthogonality.
    long sum_sq = 0;
    for (long d : T.degrees) sum_sq += d * d;
    if (sum_sq != n) throw std::logic_error("character table verification failed: degrees");
    for (long a = 0; a < r; ++a)
        for (long b = a; b < r; ++b) {
            Cyclo acc;
            for (long i = 0; i < r; ++i)
                acc += Cyclo(Rational(classes[i].size)) * T.irr[a][i] * T.irr[b][i].conj();
            Cyclo expect = a == b ? Cyclo(Rational(n)) : Cyclo();
            if (!(acc == expect))
                throw std::logic_error("character table verification failed: orthogonality");
        }
    return T;
}

/// Frobenius-Schur indicator (1/|G|) sum_g chi(g^2).
inline int fs_indicator(const CharacterTable& T, long chi) {
    const PermGroup& G = *T.group;
    Cyclo acc;
    for (long c = 0; c < T.class_count(); ++c)
        acc += Cyclo(Rational(G.classes()[c].size)) * T.irr[chi][T.power_class(c, 2)];
    Cyclo ind = acc.scaled(Rational(1, G.order()));
    if (!ind.is_rational()) throw std::logic_error("indicator not rational");
    Rational v = ind.rational_value();
    if (v != 0 && v != 1 && v != -1) throw std::logic_error("indicator out of range");
    return v == 0 ? 0 : (v > 0 ? 1 : -1);
}

/// (1/|G|) sum over classes |C| phi(C) conj(psi(C)).
inline Cyclo inner_product(const CharacterTable& T, const ClassFunction& phi,
                           const ClassFunction& psi) {
    const PermGroup& G = *T.group;
    Cyclo acc;
    for (long c = 0; c < T.class_count(); ++c)
        acc += Cyclo(Rational(G.classes()[c].size)) * phi[c] * psi[c].conj();
    return acc.scaled(Rational(1, G.order()));
}

/// Restriction of chi (a class function on G) to the subgroup H: values on
/// H-classes plus multiplicities against Irr(H).
struct Restriction {
    ClassFunction values;               // on T_H's classes
    std::vector<Rational> multiplicities;  // <Res chi, psi> for psi in Irr(H)
};

inline Restriction restrict_character(const CharacterTable& TG, const ClassFunction& chi,
                                      const CharacterTable& TH) {
    const PermGroup& G = *TG.group;
    const PermGroup& H = *TH.group;
    Restriction out;
    for (const auto& cl : H.classes()) {
        long gi = G.index_of(H.element(cl.representative));
        if (gi < 0) throw std::invalid_argument("not a subgroup: element missing from G");
        out.values.push_back(chi[G.class_of(gi)]);
    }
    for (size_t i = 0; i < TH.irr.size(); ++i) {
        Cyclo m = inner_product(TH, out.values, TH.irr[i]);
        if (!m.is_rational()) throw std::logic_error("restriction multiplicity not rational");
        out.multiplicities.push_back(m.rational_value());
    }
    return out;
}

/// Indices of the non-trivial real irreducible characters of odd degree;
/// asserts indicator +1 for each (forced by odd degree + real values).
inline std::vector<long> odd_real_nontrivial(const CharacterTable& T) {
    std::vector<long> out;
    for (size_t i = 0; i < T.irr.size(); ++i) {
        if (T.degrees[i] % 2 == 0) continue;
        bool real = true, trivial = true;
        for (const auto& v : T.irr[i]) {
            if (!v.is_real()) { real = false; break; }
            if (!(v == Cyclo(Rational(1)))) trivial = false;
        }
        if (!real || trivial) continue;
        if (fs_indicator(T, (long)i) != 1)
            throw std::logic_error("odd-degree real character with indicator != +1");
        out.push_back((long)i);
    }
    return out;
}

/// Search Irr(P) for lambda with K <= ker(lambda) and <lambda, Res chi> odd;
/// with borel_mode additionally lambda linear with lambda^2 trivial.
inline std::optional<std::pair<long, CharacterTable>> parabolic_odd_constituent(
    const PermGroup& G, const PermGroup& P, const std::vector<long>& K_indices_in_P,
    const CharacterTable& TG, long chi, bool borel_mode) {
    long deg = TG.degrees[chi];
    if (deg % 2 == 0) throw std::invalid_argument("character degree must be odd");
    for (const auto& v : TG.irr[chi])
        if (!v.is_real()) throw std::invalid_argument("character must be real-valued");
    CharacterTable TP = character_table(P);
    Restriction res = restrict_character(TG, TG.irr[chi], TP);
    for (size_t li = 0; li < TP.irr.size(); ++li) {
        bool kernel_ok = true;
        for (long k : K_indices_in_P)
            if (!(TP.irr[li][P.class_of(k)] == Cyclo(Rational(TP.degrees[li])))) {
                kernel_ok = false;
                break;
            }
        if (!kernel_ok) continue;
        if (borel_mode) {
            if (TP.degrees[li] != 1) continue;
            bool order2 = true;
            for (const auto& v : TP.irr[li])
                if (!(v * v == Cyclo(Rational(1)))) { order2 = false; break; }
            if (!order2) continue;
        }
        const Rational& m = res.multiplicities[li];
        if (denominator(m) == 1 && numerator(m) % 2 != 0)
            return std::make_pair((long)li, std::move(TP));
    }
    return std::nullopt;
}

}  // namespace eigenone
