#pragma once

#include <cassert>
#include <optional>
#include <vector>

#include "sposet/errors.hpp"

namespace sposet {

// Dense exact matrix over a field context. Everything here is small; the
// point is determinism and exactness, not speed.
template <class Fd>
class Matrix {
public:
    using Elem = typename Fd::Elem;

    Matrix() : f_(), rows_(0), cols_(0) {}
    Matrix(Fd f, int rows, int cols)
        : f_(f), rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, f.zero()) {}

    static Matrix identity(Fd f, int n) {
        Matrix m(f, n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = f.one();
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Fd& field() const { return f_; }

    Elem& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Elem& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

    std::vector<Elem> col(int c) const {
        std::vector<Elem> v;
        v.reserve(rows_);
        for (int r = 0; r < rows_; ++r) v.push_back(at(r, c));
        return v;
    }

    void set_col(int c, const std::vector<Elem>& v) {
        for (int r = 0; r < rows_; ++r) at(r, c) = v[r];
    }

    Matrix mul(const Matrix& o) const {
        assert(cols_ == o.rows_);
        Matrix out(f_, rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                if (f_.is_zero(at(i, k))) continue;
                for (int j = 0; j < o.cols_; ++j)
                    out.at(i, j) = f_.add(out.at(i, j), f_.mul(at(i, k), o.at(k, j)));
            }
        return out;
    }

    std::vector<Elem> apply(const std::vector<Elem>& v) const {
        assert(static_cast<int>(v.size()) == cols_);
        std::vector<Elem> out(rows_, f_.zero());
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (!f_.is_zero(at(i, j))) out[i] = f_.add(out[i], f_.mul(at(i, j), v[j]));
        return out;
    }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!f_.is_zero(x)) return false;
        return true;
    }

    bool equals(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) return false;
        for (std::size_t i = 0; i < a_.size(); ++i)
            if (!f_.eq(a_[i], o.a_[i])) return false;
        return true;
    }

private:
    Fd f_;
    int rows_, cols_;
    std::vector<Elem> a_;
};

template <class Fd>
struct Echelon {
    Matrix<Fd> rref;
    std::vector<int> pivot_cols;
};

// Reduced row echelon form. Column order is fixed left to right; the pivot
// row within a column is chosen by fewest nonzeros (Markowitz-style) to keep
// rational entries small. RREF is unique, so the result is deterministic.
template <class Fd>
Echelon<Fd> rref(Matrix<Fd> m) {
    const Fd f = m.field();
    Echelon<Fd> e;
    int pr = 0;
    for (int c = 0; c < m.cols() && pr < m.rows(); ++c) {
        int best = -1;
        int best_nz = -1;
        for (int r = pr; r < m.rows(); ++r) {
            if (f.is_zero(m.at(r, c))) continue;
            int nz = 0;
            for (int j = c; j < m.cols(); ++j)
                if (!f.is_zero(m.at(r, j))) ++nz;
            if (best < 0 || nz < best_nz) {
                best = r;
                best_nz = nz;
            }
        }
        if (best < 0) continue;
        if (best != pr)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pr, j), m.at(best, j));
        const auto piv_inv = f.inv(m.at(pr, c));
        for (int j = c; j < m.cols(); ++j) m.at(pr, j) = f.mul(m.at(pr, j), piv_inv);
        for (int r = 0; r < m.rows(); ++r) {
            if (r == pr || f.is_zero(m.at(r, c))) continue;
            const auto factor = m.at(r, c);
            for (int j = c; j < m.cols(); ++j)
                m.at(r, j) = f.sub(m.at(r, j), f.mul(factor, m.at(pr, j)));
        }
        e.pivot_cols.push_back(c);
        ++pr;
    }
    e.rref = std::move(m);
    return e;
}

template <class Fd>
int rank(const Matrix<Fd>& m) {
    return static_cast<int>(rref(m).pivot_cols.size());
}

// Canonical nullspace basis from the RREF: one column per free variable, in
// ascending free-column order, with a 1 in the free slot.
template <class Fd>
Matrix<Fd> nullspace(const Matrix<Fd>& m) {
    const Fd f = m.field();
    Echelon<Fd> e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : e.pivot_cols) is_pivot[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Matrix<Fd> basis(f, m.cols(), static_cast<int>(free_cols.size()));
    for (int k = 0; k < static_cast<int>(free_cols.size()); ++k) {
        int fc = free_cols[k];
        basis.at(fc, k) = f.one();
        for (int pi = 0; pi < static_cast<int>(e.pivot_cols.size()); ++pi)
            basis.at(e.pivot_cols[pi], k) = f.neg(e.rref.at(pi, fc));
    }
    return basis;
}

// Solve A x = b exactly. Requires the system to be consistent; columns of A
// are expected independent in the based-cohomology use (unique solution).
// Free variables, if any, are set to zero.
template <class Fd>
std::optional<std::vector<typename Fd::Elem>> solve(const Matrix<Fd>& a,
                                                    const std::vector<typename Fd::Elem>& b) {
    const Fd f = a.field();
    Matrix<Fd> aug(f, a.rows(), a.cols() + 1);
    for (int r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
        aug.at(r, a.cols()) = b[r];
    }
    Echelon<Fd> e = rref(std::move(aug));
    for (int c : e.pivot_cols)
        if (c == a.cols()) return std::nullopt;  // inconsistent
    std::vector<typename Fd::Elem> x(a.cols(), f.zero());
    for (int pi = 0; pi < static_cast<int>(e.pivot_cols.size()); ++pi)
        x[e.pivot_cols[pi]] = e.rref.at(pi, a.cols());
    return x;
}

}  // namespace sposet
