#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "errors.hpp"
#include "scalar.hpp"

namespace liecoh {

/// Dense matrix over the exact scalar field. Row-major.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Matrix identity(size_t n) {
        Matrix m(n, n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
        return m;
    }

    static Matrix from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
        Matrix m(rows.size(), rows.size() ? rows.begin()->size() : 0);
        size_t i = 0;
        for (const auto& r : rows) {
            if (r.size() != m.cols_) throw InputError("ragged initializer for matrix");
            size_t j = 0;
            for (long long v : r) m.at(i, j++) = Scalar(v);
            ++i;
        }
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Scalar& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const Scalar& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    std::vector<Scalar> row(size_t i) const {
        return {a_.begin() + static_cast<long>(i * cols_),
                a_.begin() + static_cast<long>((i + 1) * cols_)};
    }

    void set_row(size_t i, const std::vector<Scalar>& r) {
        if (r.size() != cols_) throw InputError("row length mismatch");
        std::copy(r.begin(), r.end(), a_.begin() + static_cast<long>(i * cols_));
    }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }

    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = i + 1; j < cols_; ++j)
                if (at(i, j) != at(j, i)) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix m(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
        return m;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        a.check_same_shape(b);
        Matrix r(a.rows_, a.cols_);
        for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = a.a_[i] + b.a_[i];
        return r;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        a.check_same_shape(b);
        Matrix r(a.rows_, a.cols_);
        for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = a.a_[i] - b.a_[i];
        return r;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw InputError("matrix product shape mismatch");
        Matrix r(a.rows_, b.cols_);
        for (size_t i = 0; i < a.rows_; ++i)
            for (size_t k = 0; k < a.cols_; ++k) {
                const Scalar& aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (size_t j = 0; j < b.cols_; ++j) {
                    const Scalar& bkj = b.at(k, j);
                    if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
                }
            }
        return r;
    }

    friend Matrix operator*(const Scalar& s, const Matrix& m) {
        Matrix r(m.rows_, m.cols_);
        for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = s * m.a_[i];
        return r;
    }

    std::vector<Scalar> apply(const std::vector<Scalar>& v) const {
        if (v.size() != cols_) throw InputError("matrix-vector shape mismatch");
        std::vector<Scalar> out(rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j)
                if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] += at(i, j) * v[j];
        return out;
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    /// Stack b below a (column counts must match; an empty matrix is neutral).
    static Matrix vstack(const Matrix& a, const Matrix& b) {
        if (a.rows_ == 0 && a.cols_ == 0) return b;
        if (b.rows_ == 0 && b.cols_ == 0) return a;
        if (a.cols_ != b.cols_) throw InputError("vstack column mismatch");
        Matrix r(a.rows_ + b.rows_, a.cols_);
        std::copy(a.a_.begin(), a.a_.end(), r.a_.begin());
        std::copy(b.a_.begin(), b.a_.end(), r.a_.begin() + static_cast<long>(a.a_.size()));
        return r;
    }

    static Matrix hstack(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_) throw InputError("hstack row mismatch");
        Matrix r(a.rows_, a.cols_ + b.cols_);
        for (size_t i = 0; i < a.rows_; ++i) {
            for (size_t j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
            for (size_t j = 0; j < b.cols_; ++j) r.at(i, a.cols_ + j) = b.at(i, j);
        }
        return r;
    }

    std::string str() const {
        std::string out;
        for (size_t i = 0; i < rows_; ++i) {
            out += "[ ";
            for (size_t j = 0; j < cols_; ++j) {
                out += at(i, j).str();
                if (j + 1 < cols_) out += ", ";
            }
            out += " ]\n";
        }
        return out;
    }

private:
    void check_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix shape mismatch");
    }

    size_t rows_, cols_;
    std::vector<Scalar> a_;
};

inline std::vector<Scalar> scale(const Scalar& s, const std::vector<Scalar>& v) {
    std::vector<Scalar> out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
    return out;
}

inline std::vector<Scalar> add(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
    if (a.size() != b.size()) throw InputError("vector length mismatch");
    std::vector<Scalar> out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

inline std::vector<Scalar> sub(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
    if (a.size() != b.size()) throw InputError("vector length mismatch");
    std::vector<Scalar> out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

inline Scalar dot(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
    if (a.size() != b.size()) throw InputError("vector length mismatch");
    Scalar s;
    for (size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
    return s;
}

inline bool is_zero(const std::vector<Scalar>& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

} // namespace liecoh
