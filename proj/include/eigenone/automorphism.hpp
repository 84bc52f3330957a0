#pragma once

#include "eigenone/group.hpp"

namespace eigenone {

/// An automorphism of a PermGroup, stored as the full element-index map,
/// verified as a bijective homomorphism at construction.
class Automorphism {
public:
    static std::optional<Automorphism> try_from_gen_images(const PermGroup& G,
                                                           const std::vector<Perm>& images) {
        if (images.size() != G.generators().size()) return std::nullopt;
        std::vector<long> img_idx;
        for (const auto& p : images) {
            long i = G.index_of(p);
            if (i < 0) return std::nullopt;
            img_idx.push_back(i);
        }
        long n = G.order();
        std::vector<long> map(n);
        for (long i = 0; i < n; ++i) {
            long acc = 0;  // identity
            for (long gi : G.word(i)) acc = G.product(acc, img_idx[gi]);
            map[i] = acc;
        }
        std::vector<char> hit(n, 0);
        for (long v : map) {
            if (hit[v]) return std::nullopt;
            hit[v] = 1;
        }
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < n; ++j)
                if (map[G.product(i, j)] != G.product(map[i], map[j])) return std::nullopt;
        Automorphism a;
        a.g_ = &G;
        a.map_ = std::move(map);
        return a;
    }

    static Automorphism from_gen_images(const PermGroup& G, const std::vector<Perm>& images) {
        auto a = try_from_gen_images(G, images);
        if (!a) throw std::invalid_argument("generator images do not define an automorphism");
        return *a;
    }

    static Automorphism identity_map(const PermGroup& G) {
        Automorphism a;
        a.g_ = &G;
        a.map_.resize(G.order());
        std::iota(a.map_.begin(), a.map_.end(), 0L);
        return a;
    }

    /// ad_g: x -> g^-1 x g.
    static Automorphism inner(const PermGroup& G, long g) {
        Automorphism a;
        a.g_ = &G;
        a.map_.resize(G.order());
        for (long i = 0; i < G.order(); ++i) a.map_[i] = G.conjugate(i, g);
        return a;
    }

    const PermGroup& group() const { return *g_; }
    long apply(long i) const { return map_[i]; }
    const std::vector<long>& mapping() const { return map_; }

    std::vector<Perm> gen_images() const {
        std::vector<Perm> out;
        for (const auto& g : g_->generators()) out.push_back(g_->element(map_[g_->index_of(g)]));
        return out;
    }

    /// Composition: (a.compose(b))(x) = a(b(x)).
    Automorphism compose(const Automorphism& o) const {
        Automorphism r;
        r.g_ = g_;
        r.map_.resize(map_.size());
        for (size_t i = 0; i < map_.size(); ++i) r.map_[i] = map_[o.map_[i]];
        return r;
    }
    Automorphism inverse() const {
        Automorphism r;
        r.g_ = g_;
        r.map_.resize(map_.size());
        for (size_t i = 0; i < map_.size(); ++i) r.map_[map_[i]] = (long)i;
        return r;
    }
    Automorphism power(long e) const {
        Automorphism r = identity_map(*g_);
        Automorphism b = e < 0 ? inverse() : *this;
        for (long i = 0; i < (e < 0 ? -e : e); ++i) r = r.compose(b);
        return r;
    }

    bool is_identity() const {
        for (size_t i = 0; i < map_.size(); ++i)
            if (map_[i] != (long)i) return false;
        return true;
    }
    long order() const {
        long n = 1;
        Automorphism p = *this;
        while (!p.is_identity()) {
            p = p.compose(*this);
            ++n;
        }
        return n;
    }

    bool operator==(const Automorphism& o) const { return map_ == o.map_; }
    bool operator<(const Automorphism& o) const { return map_ < o.map_; }

private:
    const PermGroup* g_ = nullptr;
    std::vector<long> map_;
};

inline bool is_inner(const Automorphism& a) {
    const PermGroup& G = a.group();
    for (long g = 0; g < G.order(); ++g)
        if (a == Automorphism::inner(G, g)) return true;
    return false;
}

inline std::vector<long> fixed_subgroup_indices(const Automorphism& a) {
    std::vector<long> out;
    for (long i = 0; i < a.group().order(); ++i)
        if (a.apply(i) == i) out.push_back(i);
    return out;
}

inline PermGroup fixed_subgroup(const PermGroup& G, const Automorphism& a) {
    return G.subgroup(fixed_subgroup_indices(a));
}

/// Complete automorphism list by backtracking over generator images, pruned
/// by element order, product order, and prefix closure size; every candidate
/// is verified by the full multiplication-table check.
inline std::vector<Automorphism> automorphism_group(const PermGroup& G, long bound = 256) {
    if (G.order() > bound)
        throw std::runtime_error(
            "automorphism search bound " + std::to_string(bound) +
            " exceeded; supply automorphisms explicitly");
    std::vector<long> gidx;
    for (const auto& g : G.generators()) gidx.push_back(G.index_of(g));
    if (gidx.empty()) return {Automorphism::identity_map(G)};

    std::vector<long> prefix_size(gidx.size());
    for (size_t i = 0; i < gidx.size(); ++i) {
        std::vector<long> pre(gidx.begin(), gidx.begin() + i + 1);
        prefix_size[i] = (long)G.closure_of(pre).size();
    }

    std::vector<Automorphism> found;
    std::vector<long> imgs;
    auto rec = [&](auto&& self, size_t level) -> void {
        if (level == gidx.size()) {
            std::vector<Perm> image_perms;
            for (long i : imgs) image_perms.push_back(G.element(i));
            if (auto a = Automorphism::try_from_gen_images(G, image_perms))
                found.push_back(*a);
            return;
        }
        long want = G.element_order(gidx[level]);
        for (long cand = 0; cand < G.order(); ++cand) {
            if (G.element_order(cand) != want) continue;
            bool ok = true;
            for (size_t j = 0; j < level; ++j)
                if (G.element_order(G.product(imgs[j], cand)) !=
                    G.element_order(G.product(gidx[j], gidx[level]))) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            imgs.push_back(cand);
            if ((long)G.closure_of(imgs).size() == prefix_size[level]) self(self, level + 1);
            imgs.pop_back();
        }
    };
    rec(rec, 0);
    std::sort(found.begin(), found.end());
    return found;
}

/// One representative per Inn-coset among the automorphisms fixing the class
/// function chi (given by its values per conjugacy class). The identity's
/// coset is always present.
template <class T>
std::vector<Automorphism> outer_classes_fixing_char(const PermGroup& G,
                                                    const std::vector<Automorphism>& auts,
                                                    const std::vector<T>& chi_by_class) {
    if ((long)chi_by_class.size() != G.class_count())
        throw std::invalid_argument("class function length mismatch");
    std::vector<Automorphism> inner_maps;
    for (long g = 0; g < G.order(); ++g) inner_maps.push_back(Automorphism::inner(G, g));
    std::sort(inner_maps.begin(), inner_maps.end());
    inner_maps.erase(std::unique(inner_maps.begin(), inner_maps.end(),
                                 [](const auto& a, const auto& b) { return a == b; }),
                     inner_maps.end());
    auto inner_contains = [&](const Automorphism& a) {
        return std::binary_search(inner_maps.begin(), inner_maps.end(), a);
    };

    std::vector<Automorphism> reps;
    for (const auto& a : auts) {
        bool fixes = true;
        for (const auto& cl : G.classes())
            if (!(chi_by_class[G.class_of(a.apply(cl.representative))] ==
                  chi_by_class[G.class_of(cl.representative)])) {
                fixes = false;
                break;
            }
        if (!fixes) continue;
        bool dup = false;
        for (const auto& r : reps)
            if (inner_contains(a.compose(r.inverse()))) {
                dup = true;
                break;
            }
        if (!dup) reps.push_back(a);
    }
    // Put the identity coset first, represented by the identity map.
    for (auto& r : reps)
        if (inner_contains(r)) {
            r = Automorphism::identity_map(G);
            std::swap(r, reps[0]);
            break;
        }
    return reps;
}

struct CharacteristicStructure {
    std::vector<std::vector<long>> proper_characteristic;  // proper nontrivial, index lists
    bool char_simple;
    // G = L x ... x L with L simple non-abelian, when characteristically simple.
    std::optional<std::pair<PermGroup, long>> direct_power_of_simple;
};

inline CharacteristicStructure characteristic_structure(const PermGroup& G,
                                                        const std::vector<Automorphism>& auts) {
    CharacteristicStructure out;
    auto normals = G.normal_subgroups();
    for (const auto& sub : normals) {
        bool inv = true;
        for (const auto& a : auts) {
            std::vector<long> image;
            for (long i : sub) image.push_back(a.apply(i));
            std::sort(image.begin(), image.end());
            if (image != sub) {
                inv = false;
                break;
            }
        }
        if (!inv) continue;
        if ((long)sub.size() > 1 && (long)sub.size() < G.order())
            out.proper_characteristic.push_back(sub);
    }
    out.char_simple = out.proper_characteristic.empty() && G.order() > 1;
    if (out.char_simple && !G.is_abelian()) {
        // Minimal normal subgroups are the simple direct factors.
        std::vector<std::vector<long>> minimal;
        for (const auto& a : normals) {
            if (a.size() <= 1 || (long)a.size() == G.order()) continue;
            bool min = true;
            for (const auto& b : normals) {
                if (b.size() <= 1 || b == a || b.size() >= a.size()) continue;
                if (std::includes(a.begin(), a.end(), b.begin(), b.end())) {
                    min = false;
                    break;
                }
            }
            if (min) minimal.push_back(a);
        }
        if (minimal.empty()) minimal.push_back(normals.back());  // G itself is simple
        PermGroup L = G.subgroup(minimal[0]);
        long mult = (long)minimal.size();
        bool sizes_ok = true;
        long prod = 1;
        for (const auto& m : minimal) {
            if ((long)m.size() != L.order()) sizes_ok = false;
            prod *= (long)m.size();
        }
        if (sizes_ok && prod == G.order() && L.normal_subgroups().size() == 2)
            out.direct_power_of_simple = {std::move(L), mult};
    }
    return out;
}

/// Holomorph-model extended group: carrier on |G| points generated by the
/// right translations of G together with nu.
struct ExtendedGroup {
    const PermGroup* base;
    Automorphism nu;
    long k;  // order of nu
    PermGroup carrier;
    long coset_count() const { return carrier.order() / base->order(); }

    /// The coset automorphisms ad_g o nu (x -> g^-1 nu(x) g), deduplicated,
    /// each with one witness g, in deterministic order.
    std::vector<std::pair<long, Automorphism>> coset_autos() const {
        std::vector<std::pair<long, Automorphism>> out;
        std::set<std::vector<long>> seen;
        for (long g = 0; g < base->order(); ++g) {
            Automorphism a = Automorphism::inner(*base, g).compose(nu);
            if (seen.insert(a.mapping()).second) out.emplace_back(g, a);
        }
        return out;
    }
};

inline ExtendedGroup build_extended(const PermGroup& G, const Automorphism& nu) {
    long n = G.order();
    std::vector<Perm> gens;
    for (const auto& g : G.generators()) {
        long gi = G.index_of(g);
        std::vector<long> img(n);
        for (long x = 0; x < n; ++x) img[x] = G.product(x, gi);  // right translation
        gens.push_back(Perm(std::move(img)));
    }
    long k = nu.order();
    if (!nu.is_identity()) {
        std::vector<long> img(n);
        for (long x = 0; x < n; ++x) img[x] = nu.apply(x);
        gens.push_back(Perm(std::move(img)));
    }
    PermGroup carrier = PermGroup::from_generators(std::move(gens), n, n * k);
    return ExtendedGroup{&G, nu, k, std::move(carrier)};
}

}  // namespace eigenone
