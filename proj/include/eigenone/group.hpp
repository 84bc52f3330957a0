#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "eigenone/perm.hpp"
#include "eigenone/rational.hpp"

namespace eigenone {

/// A finite permutation group with its complete element list. Elements are
/// indexed in lexicographic order of their image sequences, so index 0 is
/// always the identity and the indexing is independent of generator order.
class PermGroup {
public:
    struct ConjClass {
        long representative;        // minimal member index
        long size;
        std::vector<long> members;  // sorted indices
    };

    static PermGroup from_generators(std::vector<Perm> gens, long degree, long bound = 10000) {
        for (const auto& g : gens)
            if (g.degree() != degree) throw std::invalid_argument("generator degree mismatch");
        PermGroup G;
        G.degree_ = degree;
        G.gens_ = std::move(gens);
        G.close(bound);
        G.build_tables();
        return G;
    }

    long degree() const { return degree_; }
    long order() const { return (long)elems_.size(); }
    const std::vector<Perm>& generators() const { return gens_; }
    const std::vector<Perm>& elements() const { return elems_; }
    const Perm& element(long i) const { return elems_[i]; }
    /// Word over generator indices multiplying (left to right) to element i.
    const std::vector<long>& word(long i) const { return words_[i]; }

    long index_of(const Perm& p) const {
        auto it = index_.find(p);
        return it == index_.end() ? -1 : it->second;
    }
    bool contains(const Perm& p) const { return index_.count(p) != 0; }

    long product(long i, long j) const {
        if (!table_.empty()) return table_[i * order() + j];
        return index_.at(elems_[i] * elems_[j]);
    }
    long inverse(long i) const { return inv_[i]; }
    long conjugate(long x, long g) const {  // g^-1 x g
        return product(product(inv_[g], x), g);
    }
    long element_order(long i) const { return orders_[i]; }
    long exponent() const { return exponent_; }

    const std::vector<ConjClass>& classes() const { return classes_; }
    long class_of(long i) const { return class_of_[i]; }
    long class_count() const { return (long)classes_.size(); }

    long centralizer_order(long i) const {
        long c = 0;
        for (long h = 0; h < order(); ++h)
            if (product(h, i) == product(i, h)) ++c;
        return c;
    }
    long centralizer_order(const Perm& g) const {
        long i = index_of(g);
        if (i < 0) throw std::invalid_argument("element not in group");
        return centralizer_order(i);
    }

    std::vector<long> center() const {
        std::vector<long> z;
        for (long i = 0; i < order(); ++i)
            if (centralizer_order(i) == order()) z.push_back(i);
        return z;
    }

    bool is_abelian() const {
        for (size_t a = 0; a < gens_.size(); ++a)
            for (size_t b = a + 1; b < gens_.size(); ++b)
                if (!(gens_[a] * gens_[b] == gens_[b] * gens_[a])) return false;
        return true;
    }

    /// Subgroup generated by the given element indices, as a sorted index list.
    std::vector<long> closure_of(const std::vector<long>& seed) const {
        std::vector<char> in(order(), 0);
        std::vector<long> list{0};
        in[0] = 1;
        for (size_t head = 0; head < list.size(); ++head)
            for (long s : seed) {
                long p = product(list[head], s);
                if (!in[p]) {
                    in[p] = 1;
                    list.push_back(p);
                }
            }
        std::sort(list.begin(), list.end());
        return list;
    }

    /// Normal closure of the seed, with a small generating set recorded.
    std::vector<long> normal_closure(const std::vector<long>& seed,
                                     std::vector<long>* gens_out = nullptr) const {
        std::vector<long> kgens;
        std::vector<long> closure{0};
        auto try_add = [&](long x) {
            if (std::binary_search(closure.begin(), closure.end(), x)) return;
            kgens.push_back(x);
            closure = closure_of(kgens);
        };
        for (long s : seed) try_add(s);
        std::vector<long> ggens;
        for (const auto& g : gens_) ggens.push_back(index_.at(g));
        bool changed = true;
        while (changed) {
            changed = false;
            size_t count = kgens.size();
            for (size_t i = 0; i < count; ++i)
                for (long g : ggens) {
                    long c = conjugate(kgens[i], g);
                    if (!std::binary_search(closure.begin(), closure.end(), c)) {
                        try_add(c);
                        changed = true;
                    }
                }
        }
        if (gens_out) *gens_out = kgens;
        return closure;
    }

    /// Derived subgroup of the subgroup generated by `sub_gens` (index list).
    std::vector<long> derived_subgroup(const std::vector<long>& sub_gens,
                                       std::vector<long>* gens_out = nullptr) const {
        // Commutators of generator pairs, then normal closure inside the
        // subgroup (conjugation by the subgroup's generators).
        std::set<long> comms;
        for (long a : sub_gens)
            for (long b : sub_gens)
                comms.insert(product(product(inv_[a], inv_[b]), product(a, b)));
        std::vector<long> kgens;
        std::vector<long> closure{0};
        auto try_add = [&](long x) {
            if (std::binary_search(closure.begin(), closure.end(), x)) return;
            kgens.push_back(x);
            closure = closure_of(kgens);
        };
        for (long c : comms) try_add(c);
        bool changed = true;
        while (changed) {
            changed = false;
            size_t count = kgens.size();
            for (size_t i = 0; i < count; ++i)
                for (long g : sub_gens) {
                    long c = conjugate(kgens[i], g);
                    if (!std::binary_search(closure.begin(), closure.end(), c)) {
                        try_add(c);
                        changed = true;
                    }
                }
        }
        if (gens_out) *gens_out = kgens;
        return closure;
    }

    bool is_solvable() const {
        std::vector<long> gens;
        for (const auto& g : gens_) gens.push_back(index_.at(g));
        long prev = order();
        while (true) {
            std::vector<long> next_gens;
            std::vector<long> d = derived_subgroup(gens, &next_gens);
            if ((long)d.size() == 1) return true;
            if ((long)d.size() == prev) return false;
            prev = (long)d.size();
            gens = next_gens.empty() ? std::vector<long>{0} : next_gens;
        }
    }

    /// All normal subgroups, as sorted index lists (join closure of the
    /// normal closures of single class representatives).
    std::vector<std::vector<long>> normal_subgroups() const {
        std::set<std::vector<long>> found;
        found.insert(std::vector<long>{0});
        std::vector<std::vector<long>> atoms;
        for (const auto& cl : classes_) {
            auto n = normal_closure({cl.representative});
            if (found.insert(n).second) atoms.push_back(n);
        }
        std::vector<std::vector<long>> work(found.begin(), found.end());
        for (size_t i = 0; i < work.size(); ++i)
            for (const auto& atom : atoms) {
                std::vector<long> joined;
                std::set_union(work[i].begin(), work[i].end(), atom.begin(), atom.end(),
                               std::back_inserter(joined));
                if ((long)joined.size() > order()) continue;
                auto sub = closure_of(joined);
                if (found.insert(sub).second) work.push_back(sub);
            }
        std::vector<std::vector<long>> out(found.begin(), found.end());
        std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
            return a.size() != b.size() ? a.size() < b.size() : a < b;
        });
        return out;
    }

    /// The subgroup on the given indices as its own PermGroup (same degree).
    PermGroup subgroup(const std::vector<long>& indices) const {
        std::vector<Perm> gens;
        for (long i : indices) gens.push_back(elems_[i]);
        return from_generators(std::move(gens), degree_, order());
    }

private:
    long degree_ = 0;
    std::vector<Perm> gens_;
    std::vector<Perm> elems_;
    std::vector<std::vector<long>> words_;
    std::map<Perm, long> index_;
    std::vector<long> inv_;
    std::vector<long> orders_;
    std::vector<long> table_;  // flat multiplication table when small enough
    long exponent_ = 1;
    std::vector<ConjClass> classes_;
    std::vector<long> class_of_;

    void close(long bound) {
        std::map<Perm, std::vector<long>> seen;
        std::vector<Perm> queue{Perm::identity(degree_)};
        seen[queue[0]] = {};
        for (size_t head = 0; head < queue.size(); ++head) {
            Perm cur = queue[head];
            std::vector<long> w = seen.at(cur);
            for (size_t gi = 0; gi < gens_.size(); ++gi) {
                Perm nxt = cur * gens_[gi];
                if (seen.count(nxt)) continue;
                if ((long)seen.size() >= bound)
                    throw std::runtime_error("group order exceeds bound " +
                                             std::to_string(bound));
                auto w2 = w;
                w2.push_back((long)gi);
                seen[nxt] = std::move(w2);
                queue.push_back(std::move(nxt));
            }
        }
        for (auto& [p, w] : seen) {
            elems_.push_back(p);
            words_.push_back(std::move(w));
            index_[p] = (long)elems_.size() - 1;
        }
    }

    void build_tables() {
        long n = order();
        if (n <= 1024) {
            table_.resize(n * n);
            for (long i = 0; i < n; ++i)
                for (long j = 0; j < n; ++j) table_[i * n + j] = index_.at(elems_[i] * elems_[j]);
        }
        inv_.resize(n);
        orders_.resize(n);
        for (long i = 0; i < n; ++i) {
            inv_[i] = index_.at(elems_[i].inverse());
            orders_[i] = elems_[i].order();
            exponent_ = lcm_long(exponent_, orders_[i]);
        }
        // Conjugacy classes as orbits under conjugation by generators.
        std::vector<long> ggens;
        for (const auto& g : gens_) ggens.push_back(index_.at(g));
        class_of_.assign(n, -1);
        std::vector<ConjClass> classes;
        for (long i = 0; i < n; ++i) {
            if (class_of_[i] >= 0) continue;
            std::vector<long> orbit{i};
            class_of_[i] = (long)classes.size();
            for (size_t head = 0; head < orbit.size(); ++head)
                for (long g : ggens) {
                    long c = conjugate(orbit[head], g);
                    if (class_of_[c] < 0) {
                        class_of_[c] = (long)classes.size();
                        orbit.push_back(c);
                    }
                }
            std::sort(orbit.begin(), orbit.end());
            classes.push_back({orbit[0], (long)orbit.size(), std::move(orbit)});
        }
        // Deterministic order: by size, then by minimal member.
        std::vector<long> perm(classes.size());
        std::iota(perm.begin(), perm.end(), 0L);
        std::sort(perm.begin(), perm.end(), [&](long a, long b) {
            if (classes[a].size != classes[b].size) return classes[a].size < classes[b].size;
            return classes[a].representative < classes[b].representative;
        });
        classes_.resize(classes.size());
        std::vector<long> new_id(classes.size());
        for (size_t k = 0; k < perm.size(); ++k) {
            classes_[k] = std::move(classes[perm[k]]);
            new_id[perm[k]] = (long)k;
        }
        for (long i = 0; i < n; ++i) class_of_[i] = new_id[class_of_[i]];
    }
};

/// Quotient G/N as a permutation group on the right cosets of N.
/// `elem_to_point` (optional) receives the coset point of each element of G.
inline PermGroup quotient_group(const PermGroup& G, const std::vector<long>& normal,
                                std::vector<long>* elem_to_point = nullptr) {
    long n = G.order();
    std::vector<long> coset(n, -1);
    long count = 0;
    for (long i = 0; i < n; ++i) {
        if (coset[i] >= 0) continue;
        for (long m : normal) coset[G.product(m, i)] = count;  // coset N*i
        ++count;
    }
    std::vector<Perm> images;
    for (const auto& g : G.generators()) {
        long gi = G.index_of(g);
        std::vector<long> img(count, -1);
        for (long x = 0; x < n; ++x) img[coset[x]] = coset[G.product(x, gi)];
        images.push_back(Perm(std::move(img)));
    }
    if (elem_to_point) *elem_to_point = coset;
    return PermGroup::from_generators(std::move(images), count, count == 0 ? 1 : count);
}

}  // namespace eigenone
