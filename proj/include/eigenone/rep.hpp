#pragma once

#include <random>

#include "eigenone/character_table.hpp"
#include "eigenone/matrix.hpp"

namespace eigenone {

/// Matrix representation of a permutation group over a (real) cyclotomic
/// field, with one matrix per element.
struct MatrixRep {
    const PermGroup* group = nullptr;
    long dim = 0;
    std::vector<Mat> gen_matrices;  // one per generator
    std::vector<Mat> all;           // one per element, index-aligned with the group

    const Mat& rho(long i) const { return all[i]; }
};

struct RepCertificate {
    bool character_checked = false;
    bool homomorphism_checked = false;
    bool irreducibility_checked = false;  // endomorphism algebra has dimension 1
    bool ok() const { return character_checked && homomorphism_checked && irreducibility_checked; }
};

namespace detail {

/// Left translation g*a in the group algebra (coefficient vectors on the
/// element basis).
inline Vec translate(const PermGroup& G, long g, const Vec& a) {
    Vec out(G.order(), Cyclo());
    for (long t = 0; t < G.order(); ++t)
        if (!a[t].is_zero()) out[G.product(g, t)] = a[t];
    return out;
}

/// An abelian subgroup A and a real linear character lambda of A occurring
/// with multiplicity one in the restriction of chi.
struct RankOneProjector {
    std::vector<long> subgroup;    // indices in G
    std::vector<Cyclo> lambda;     // value per subgroup element (same order)
};

inline std::optional<RankOneProjector> find_rank_one_projector(const PermGroup& G,
                                                               const CharacterTable& T,
                                                               long chi) {
    long n = G.order();
    std::set<std::vector<long>> seen;
    auto try_subgroup = [&](const std::vector<long>& A) -> std::optional<RankOneProjector> {
        if ((long)A.size() > 64) return std::nullopt;
        if (!seen.insert(A).second) return std::nullopt;
        PermGroup S = G.subgroup(A);
        CharacterTable TS = character_table(S);
        for (size_t li = 0; li < TS.irr.size(); ++li) {
            if (TS.degrees[li] != 1) continue;
            bool real = true;
            for (const auto& v : TS.irr[li])
                if (!v.is_real()) { real = false; break; }
            if (!real) continue;
            Cyclo m;
            std::vector<Cyclo> lambda_vals;
            for (long a : A) {
                const Cyclo& lv = TS.irr[li][S.class_of(S.index_of(G.element(a)))];
                lambda_vals.push_back(lv);
                m += T.irr[chi][G.class_of(a)] * lv.conj();
            }
            m = m.scaled(Rational(1, (long)A.size()));
            if (m == Cyclo(Rational(1)))
                return RankOneProjector{A, std::move(lambda_vals)};
        }
        return std::nullopt;
    };
    // Cyclic subgroups first, then 2- and 3-generated abelian ones.
    for (long h = 1; h < n; ++h)
        if (auto r = try_subgroup(G.closure_of({h}))) return r;
    for (long h1 = 1; h1 < n; ++h1)
        for (long h2 = h1 + 1; h2 < n; ++h2) {
            if (G.product(h1, h2) != G.product(h2, h1)) continue;
            if (auto r = try_subgroup(G.closure_of({h1, h2}))) return r;
        }
    for (long h1 = 1; h1 < n; ++h1)
        for (long h2 = h1 + 1; h2 < n; ++h2) {
            if (G.product(h1, h2) != G.product(h2, h1)) continue;
            for (long h3 = h2 + 1; h3 < n; ++h3) {
                if (G.product(h1, h3) != G.product(h3, h1)) continue;
                if (G.product(h2, h3) != G.product(h3, h2)) continue;
                if (auto r = try_subgroup(G.closure_of({h1, h2, h3}))) return r;
            }
        }
    return std::nullopt;
}

}  // namespace detail

/// Build an explicit matrix representation affording the real irreducible
/// character chi (indicator +1) over the real subfield of a cyclotomic field.
///
/// Method: in the group algebra, a0 = e_chi * P is a rank-one element, where
/// e_chi is the central primitive idempotent and P projects onto a real
/// linear character of an abelian subgroup occurring once in Res(chi). Both
/// factors have conjugation-fixed coefficients, so the spun basis {g * a0}
/// is conjugation-fixed and the action matrices land in the real subfield.
inline MatrixRep build_irreducible_rep(const PermGroup& G, const CharacterTable& T, long chi,
                                       long order_guard = 200) {
    long n = G.order();
    long d = T.degrees[chi];
    for (const auto& v : T.irr[chi])
        if (!v.is_real()) throw std::invalid_argument("character is not real-valued");
    {
        Cyclo norm = inner_product(T, T.irr[chi], T.irr[chi]);
        if (!(norm == Cyclo(Rational(1)))) throw std::invalid_argument("character not irreducible");
    }
    if (fs_indicator(T, chi) != 1)
        throw std::invalid_argument("character has Frobenius-Schur indicator != +1");

    MatrixRep rep;
    rep.group = &G;
    rep.dim = d;
    if (d == 1) {
        for (const auto& g : G.generators()) {
            Mat m(1, 1);
            m.at(0, 0) = T.irr[chi][G.class_of(G.index_of(g))];
            rep.gen_matrices.push_back(m);
        }
    } else {
        if (n > order_guard)
            throw std::runtime_error("group order exceeds representation guard " +
                                     std::to_string(order_guard));
        auto proj = detail::find_rank_one_projector(G, T, chi);
        if (!proj)
            throw std::runtime_error(
                "no abelian subgroup with a real multiplicity-one linear constituent found; "
                "cannot realize this character");
        // a0 = e_chi * P
        Vec e_chi(n);
        for (long g = 0; g < n; ++g)
            e_chi[g] = T.irr[chi][G.class_of(G.inverse(g))].scaled(Rational(d, n));
        Vec a0(n, Cyclo());
        Rational inv_size(1, (long)proj->subgroup.size());
        for (size_t ai = 0; ai < proj->subgroup.size(); ++ai) {
            Cyclo coef = proj->lambda[ai].conj().scaled(inv_size);
            if (coef.is_zero()) continue;
            long h = proj->subgroup[ai];
            for (long g = 0; g < n; ++g)
                if (!e_chi[g].is_zero()) a0[G.product(g, h)] += e_chi[g] * coef;
        }
        // Spin a0 to a basis of the minimal left ideal.
        std::vector<Vec> basis;
        {
            RowSpace probe(n);
            for (long g = 0; g < n && (long)basis.size() < d; ++g) {
                Vec v = detail::translate(G, g, a0);
                if (probe.add(v)) basis.push_back(std::move(v));
            }
        }
        if ((long)basis.size() != d)
            throw std::logic_error("spun module has wrong dimension (rank-one element invalid)");
        RowSpace span(n);
        for (const auto& b : basis) span.add(b);
        for (const auto& gen : G.generators()) {
            long gi = G.index_of(gen);
            Mat m(d, d);
            for (long j = 0; j < d; ++j) {
                auto coords = span.coords(detail::translate(G, gi, basis[j]));
                if (!coords) throw std::logic_error("module not invariant under generator");
                for (long i = 0; i < d; ++i) {
                    if (!(*coords)[i].is_real())
                        throw std::logic_error("matrix entry escaped the real subfield");
                    m.at(i, j) = (*coords)[i];
                }
            }
            rep.gen_matrices.push_back(std::move(m));
        }
    }
    rep.all.reserve(n);
    for (long i = 0; i < n; ++i) {
        Mat m = Mat::identity(d);
        for (long gi : G.word(i)) m = m * rep.gen_matrices[gi];
        rep.all.push_back(std::move(m));
    }
    return rep;
}

/// Full verification: homomorphism property, trace equality against chi, and
/// one-dimensionality of the endomorphism algebra.
inline RepCertificate verify_rep(const MatrixRep& rep, const CharacterTable& T, long chi,
                                 unsigned long sample_seed = 0) {
    const PermGroup& G = *rep.group;
    long n = G.order(), d = rep.dim;
    RepCertificate cert;

    cert.homomorphism_checked = true;
    if (n <= 200) {
        for (long i = 0; i < n && cert.homomorphism_checked; ++i)
            for (long j = 0; j < n; ++j)
                if (!(rep.rho(i) * rep.rho(j) == rep.rho(G.product(i, j)))) {
                    cert.homomorphism_checked = false;
                    break;
                }
    } else {
        std::mt19937 rng(sample_seed);
        for (int t = 0; t < 100; ++t) {
            long i = rng() % n, j = rng() % n;
            if (!(rep.rho(i) * rep.rho(j) == rep.rho(G.product(i, j)))) {
                cert.homomorphism_checked = false;
                break;
            }
        }
    }

    cert.character_checked = true;
    long scan = n <= 200 ? n : 0;
    for (long i = 0; i < scan; ++i)
        if (!(rep.rho(i).trace() == T.irr[chi][G.class_of(i)])) {
            cert.character_checked = false;
            break;
        }
    if (scan == 0)
        for (const auto& cl : G.classes())
            if (!(rep.rho(cl.representative).trace() == T.irr[chi][G.class_of(cl.representative)]))
                cert.character_checked = false;

    // Endomorphism algebra: X with rho(gen) X = X rho(gen) for all generators.
    long ng = (long)rep.gen_matrices.size();
    Mat sys(std::max(ng, 1L) * d * d, d * d);
    for (long g = 0; g < ng; ++g) {
        const Mat& R = rep.gen_matrices[g];
        // (R X - X R)_{ij} = sum_k R_ik X_kj - X_ik R_kj
        for (long i = 0; i < d; ++i)
            for (long j = 0; j < d; ++j) {
                long row = g * d * d + i * d + j;
                for (long k = 0; k < d; ++k) {
                    sys.at(row, k * d + j) += R.at(i, k);
                    sys.at(row, i * d + k) -= R.at(k, j);
                }
            }
    }
    auto [rank, kernel] = sys.nullspace();
    (void)rank;
    cert.irreducibility_checked = (kernel.size() == 1) || (ng == 0 && d == 1);
    return cert;
}

/// Quotient by ker(chi) = {g : chi(g) = chi(1)}, with the descended class
/// function on the quotient's classes.
struct FaithfulQuotient {
    PermGroup quotient;
    ClassFunction chi;            // on quotient classes
    std::vector<long> elem_to_point;  // G-element -> coset point
};

inline FaithfulQuotient faithful_quotient(const PermGroup& G, const CharacterTable& T, long chi) {
    Cyclo deg = Cyclo(Rational(T.degrees[chi]));
    std::vector<long> kernel;
    for (long i = 0; i < G.order(); ++i)
        if (T.irr[chi][G.class_of(i)] == deg) kernel.push_back(i);
    FaithfulQuotient out;
    out.quotient = quotient_group(G, kernel, &out.elem_to_point);
    const PermGroup& Q = out.quotient;
    const std::vector<long>& coset = out.elem_to_point;
    // image permutation of each G element, to pull class representatives back
    std::map<Perm, long> preimage;
    long pts = Q.degree();
    for (long g = 0; g < G.order(); ++g) {
        std::vector<long> img(pts);
        for (long x = 0; x < G.order(); ++x) img[coset[x]] = coset[G.product(x, g)];
        Perm p(std::move(img));
        if (!preimage.count(p)) preimage[p] = g;
    }
    for (const auto& cl : Q.classes())
        out.chi.push_back(T.irr[chi][G.class_of(preimage.at(Q.element(cl.representative)))]);
    return out;
}

}  // namespace eigenone
