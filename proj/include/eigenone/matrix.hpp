#pragma once

#include <optional>
#include <vector>

#include "eigenone/polynomial.hpp"

namespace eigenone {

using Vec = std::vector<Cyclo>;

/// Dense matrix over the cyclotomic field.
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(long rows, long cols) : rows_(rows), cols_(cols), e_(rows * cols, Cyclo()) {}

    static Mat identity(long n) {
        Mat m(n, n);
        for (long i = 0; i < n; ++i) m.at(i, i) = Cyclo(Rational(1));
        return m;
    }

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    Cyclo& at(long r, long c) { return e_[r * cols_ + c]; }
    const Cyclo& at(long r, long c) const { return e_[r * cols_ + c]; }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }

    friend Mat operator+(const Mat& a, const Mat& b) {
        Mat r(a.rows_, a.cols_);
        for (size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] + b.e_[i];
        return r;
    }
    friend Mat operator-(const Mat& a, const Mat& b) {
        Mat r(a.rows_, a.cols_);
        for (size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] - b.e_[i];
        return r;
    }
    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix dimension mismatch");
        Mat r(a.rows_, b.cols_);
        for (long i = 0; i < a.rows_; ++i)
            for (long k = 0; k < a.cols_; ++k) {
                const Cyclo& aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (long j = 0; j < b.cols_; ++j) {
                    const Cyclo& bkj = b.at(k, j);
                    if (bkj.is_zero()) continue;
                    r.at(i, j) += aik * bkj;
                }
            }
        return r;
    }

    Mat scaled(const Cyclo& s) const {
        Mat r = *this;
        for (auto& v : r.e_) v *= s;
        return r;
    }
    Mat transpose() const {
        Mat r(cols_, rows_);
        for (long i = 0; i < rows_; ++i)
            for (long j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }
    Mat conj_entries() const {
        Mat r = *this;
        for (auto& v : r.e_) v = v.conj();
        return r;
    }
    Cyclo trace() const {
        Cyclo t;
        for (long i = 0; i < rows_; ++i) t += at(i, i);
        return t;
    }
    bool is_zero() const {
        for (const auto& v : e_)
            if (!v.is_zero()) return false;
        return true;
    }
    /// Returns the scalar s when this == s * I.
    std::optional<Cyclo> as_scalar() const {
        if (rows_ != cols_ || rows_ == 0) return std::nullopt;
        const Cyclo& s = at(0, 0);
        for (long i = 0; i < rows_; ++i)
            for (long j = 0; j < cols_; ++j) {
                if (i == j && !(at(i, j) == s)) return std::nullopt;
                if (i != j && !at(i, j).is_zero()) return std::nullopt;
            }
        return s;
    }

    Mat pow(long k) const {
        Mat r = identity(rows_), b = *this;
        while (k) {
            if (k & 1) r = r * b;
            if (k >>= 1) b = b * b;
        }
        return r;
    }

    Mat inverse() const {
        if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
        long n = rows_;
        Mat a = *this, inv = identity(n);
        for (long col = 0; col < n; ++col) {
            long pr = -1;
            for (long r = col; r < n; ++r)
                if (!a.at(r, col).is_zero()) { pr = r; break; }
            if (pr < 0) throw std::domain_error("singular matrix");
            for (long j = 0; j < n; ++j) {
                std::swap(a.e_[col * n + j], a.e_[pr * n + j]);
                std::swap(inv.e_[col * n + j], inv.e_[pr * n + j]);
            }
            Cyclo piv_inv = a.at(col, col).inverse();
            for (long j = 0; j < n; ++j) {
                a.at(col, j) *= piv_inv;
                inv.at(col, j) *= piv_inv;
            }
            for (long r = 0; r < n; ++r) {
                if (r == col || a.at(r, col).is_zero()) continue;
                Cyclo f = a.at(r, col);
                for (long j = 0; j < n; ++j) {
                    a.at(r, j) -= f * a.at(col, j);
                    inv.at(r, j) -= f * inv.at(col, j);
                }
            }
        }
        return inv;
    }

    /// Exact kernel: returns (rank, basis of null space).
    std::pair<long, std::vector<Vec>> nullspace() const {
        Mat a = *this;
        long n = rows_, m = cols_;
        std::vector<long> pivot_of_col(m, -1);
        long row = 0;
        for (long col = 0; col < m && row < n; ++col) {
            long pr = -1;
            for (long r = row; r < n; ++r)
                if (!a.at(r, col).is_zero()) { pr = r; break; }
            if (pr < 0) continue;
            for (long j = 0; j < m; ++j) std::swap(a.e_[row * m + j], a.e_[pr * m + j]);
            Cyclo inv = a.at(row, col).inverse();
            for (long j = col; j < m; ++j) a.at(row, j) *= inv;
            for (long r = 0; r < n; ++r) {
                if (r == row || a.at(r, col).is_zero()) continue;
                Cyclo f = a.at(r, col);
                for (long j = col; j < m; ++j) a.at(r, j) -= f * a.at(row, j);
            }
            pivot_of_col[col] = row;
            ++row;
        }
        long rank = row;
        std::vector<Vec> basis;
        for (long col = 0; col < m; ++col) {
            if (pivot_of_col[col] >= 0) continue;
            Vec v(m, Cyclo());
            v[col] = Cyclo(Rational(1));
            for (long c2 = 0; c2 < m; ++c2) {
                long pr = pivot_of_col[c2];
                if (pr >= 0) v[c2] = -a.at(pr, col);
            }
            basis.push_back(std::move(v));
        }
        return {rank, basis};
    }

    /// Characteristic polynomial det(xI - M) by the Berkowitz division-free scheme.
    Poly charpoly() const {
        if (rows_ != cols_) throw std::invalid_argument("charpoly of non-square matrix");
        long n = rows_;
        if (n == 0) return Poly::constant(Cyclo(Rational(1)));
        // Coefficients stored descending (monic first).
        std::vector<Cyclo> vec{Cyclo(Rational(1)), -at(0, 0)};
        for (long m = 1; m < n; ++m) {
            // c_0 = 1, c_1 = -A(m,m), c_k = -(R M^(k-2) S), k = 2..m+1
            std::vector<Cyclo> c(m + 2, Cyclo());
            c[0] = Cyclo(Rational(1));
            c[1] = -at(m, m);
            Vec s(m);
            for (long i = 0; i < m; ++i) s[i] = at(i, m);
            for (long k = 2; k <= m + 1; ++k) {
                Cyclo dot;
                for (long i = 0; i < m; ++i) dot += at(m, i) * s[i];
                c[k] = -dot;
                if (k <= m) {
                    Vec next(m, Cyclo());
                    for (long i = 0; i < m; ++i) {
                        if (s[i].is_zero()) continue;
                        for (long r = 0; r < m; ++r) next[r] += at(r, i) * s[i];
                    }
                    s = std::move(next);
                }
            }
            std::vector<Cyclo> out(m + 2, Cyclo());
            for (size_t j = 0; j < out.size(); ++j)
                for (size_t k = 0; k < c.size() && k <= j; ++k)
                    if (j - k < vec.size()) out[j] += c[k] * vec[j - k];
            vec = std::move(out);
        }
        std::vector<Cyclo> ascending(vec.rbegin(), vec.rend());
        return Poly(std::move(ascending));
    }

private:
    long rows_, cols_;
    std::vector<Cyclo> e_;
};

inline Mat apply_to_vec_as_col(const Mat& m, const Vec& v) {
    Mat col((long)v.size(), 1);
    for (size_t i = 0; i < v.size(); ++i) col.at((long)i, 0) = v[i];
    return m * col;
}

/// Incremental row-space with exact elimination; tracks how each reduced row
/// decomposes over the originally inserted vectors.
class RowSpace {
public:
    explicit RowSpace(long width) : width_(width) {}

    long dim() const { return (long)rows_.size(); }
    long width() const { return width_; }

    /// Inserts v; returns true when it enlarged the space.
    bool add(const Vec& v) {
        Vec r = v;
        std::vector<Cyclo> combo(inserted_ + 1, Cyclo());
        combo[inserted_] = Cyclo(Rational(1));
        reduce_in_place(r, combo);
        ++inserted_;
        for (auto& cb : combos_) cb.resize(inserted_, Cyclo());
        combo.resize(inserted_, Cyclo());
        long piv = first_nonzero(r);
        if (piv < 0) return false;
        Cyclo inv = r[piv].inverse();
        for (auto& x : r) x *= inv;
        for (auto& x : combo) x *= inv;
        // Back-substitute into existing rows to keep RREF.
        for (size_t i = 0; i < rows_.size(); ++i) {
            Cyclo f = rows_[i][piv];
            if (f.is_zero()) continue;
            for (long j = 0; j < width_; ++j) rows_[i][j] -= f * r[j];
            for (size_t j = 0; j < combo.size(); ++j) combos_[i][j] -= f * combo[j];
        }
        rows_.push_back(std::move(r));
        combos_.push_back(std::move(combo));
        pivots_.push_back(piv);
        return true;
    }

    bool contains(const Vec& v) const {
        Vec r = v;
        reduce_only(r);
        return first_nonzero(r) < 0;
    }

    /// Expresses v over the inserted vectors; nullopt when v is outside the space.
    std::optional<std::vector<Cyclo>> coords(const Vec& v) const {
        Vec r = v;
        std::vector<Cyclo> acc(inserted_, Cyclo());
        for (size_t i = 0; i < rows_.size(); ++i) {
            Cyclo f = r[pivots_[i]];
            if (f.is_zero()) continue;
            for (long j = 0; j < width_; ++j) r[j] -= f * rows_[i][j];
            for (size_t j = 0; j < combos_[i].size(); ++j) acc[j] += f * combos_[i][j];
        }
        if (first_nonzero(r) >= 0) return std::nullopt;
        return acc;
    }

private:
    long width_;
    long inserted_ = 0;
    std::vector<Vec> rows_;
    std::vector<std::vector<Cyclo>> combos_;
    std::vector<long> pivots_;

    static long first_nonzero(const Vec& v) {
        for (size_t i = 0; i < v.size(); ++i)
            if (!v[i].is_zero()) return (long)i;
        return -1;
    }
    void reduce_in_place(Vec& r, std::vector<Cyclo>& combo) {
        for (size_t i = 0; i < rows_.size(); ++i) {
            Cyclo f = r[pivots_[i]];
            if (f.is_zero()) continue;
            for (long j = 0; j < width_; ++j) r[j] -= f * rows_[i][j];
            for (size_t j = 0; j < combos_[i].size(); ++j) combo[j] -= f * combos_[i][j];
        }
    }
    void reduce_only(Vec& r) const {
        for (size_t i = 0; i < rows_.size(); ++i) {
            Cyclo f = r[pivots_[i]];
            if (f.is_zero()) continue;
            for (long j = 0; j < width_; ++j) r[j] -= f * rows_[i][j];
        }
    }
};

}  // namespace eigenone
