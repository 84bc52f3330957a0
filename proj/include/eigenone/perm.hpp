#pragma once

#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace eigenone {

/// Permutation of {0, ..., deg-1}, stored as the image sequence.
class Perm {
public:
    Perm() = default;
    explicit Perm(std::vector<long> images) : img_(std::move(images)) {
        std::vector<char> seen(img_.size(), 0);
        for (long v : img_) {
            if (v < 0 || v >= (long)img_.size() || seen[v])
                throw std::invalid_argument("image sequence is not a permutation");
            seen[v] = 1;
        }
    }

    static Perm identity(long deg) {
        std::vector<long> v(deg);
        std::iota(v.begin(), v.end(), 0L);
        return Perm(std::move(v));
    }

    long degree() const { return (long)img_.size(); }
    long operator()(long x) const { return img_[x]; }
    const std::vector<long>& images() const { return img_; }

    bool is_identity() const {
        for (size_t i = 0; i < img_.size(); ++i)
            if (img_[i] != (long)i) return false;
        return true;
    }

    /// Composition: (a * b)(x) = a(b(x)).
    friend Perm operator*(const Perm& a, const Perm& b) {
        if (a.degree() != b.degree()) throw std::invalid_argument("permutation degree mismatch");
        std::vector<long> v(a.img_.size());
        for (size_t i = 0; i < v.size(); ++i) v[i] = a.img_[b.img_[i]];
        Perm p;
        p.img_ = std::move(v);
        return p;
    }

    Perm inverse() const {
        std::vector<long> v(img_.size());
        for (size_t i = 0; i < img_.size(); ++i) v[img_[i]] = (long)i;
        Perm p;
        p.img_ = std::move(v);
        return p;
    }

    long order() const {
        long n = 1;
        Perm p = *this;
        while (!p.is_identity()) {
            p = p * *this;
            ++n;
        }
        return n;
    }

    bool operator==(const Perm& o) const { return img_ == o.img_; }
    bool operator!=(const Perm& o) const { return img_ != o.img_; }
    bool operator<(const Perm& o) const { return img_ < o.img_; }

    /// Cycle notation with 1-based points, e.g. "(1,2)(3,4)"; "()" for the identity.
    std::string to_cycles() const {
        std::ostringstream os;
        std::vector<char> seen(img_.size(), 0);
        bool any = false;
        for (size_t i = 0; i < img_.size(); ++i) {
            if (seen[i] || img_[i] == (long)i) continue;
            os << "(";
            long x = (long)i;
            bool first = true;
            while (!seen[x]) {
                seen[x] = 1;
                if (!first) os << ",";
                os << (x + 1);
                first = false;
                x = img_[x];
            }
            os << ")";
            any = true;
        }
        if (!any) os << "()";
        return os.str();
    }

private:
    std::vector<long> img_;
};

}  // namespace eigenone
