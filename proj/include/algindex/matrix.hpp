// Dense matrices over an arbitrary exact scalar. The scalar type supplies
// +,-,*, unary -, ==, plus ADL-found is_zero/zero_like/one_like; matrices keep
// a zero exemplar so empty shapes still know their coefficient domain.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "algindex/common.hpp"
#include "algindex/scalar_ops.hpp"

namespace algindex {

template <typename T>
class Matrix {
  public:
    Matrix(std::size_t rows, std::size_t cols, T zero)
        : rows_(rows), cols_(cols), zero_(zero), a_(rows * cols, zero) {}

    static Matrix identity(std::size_t n, const T& one, const T& zero) {
        Matrix m(n, n, zero);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const T& zero() const { return zero_; }

    T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    T* row(std::size_t i) { return a_.data() + i * cols_; }
    const T* row(std::size_t i) const { return a_.data() + i * cols_; }

    Matrix transpose() const {
        Matrix t(cols_, rows_, zero_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend Matrix operator+(const Matrix& x, const Matrix& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw error("matrix shape mismatch in +");
        Matrix r = x;
        for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] = r.a_[k] + y.a_[k];
        return r;
    }
    friend Matrix operator-(const Matrix& x, const Matrix& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw error("matrix shape mismatch in -");
        Matrix r = x;
        for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] = r.a_[k] - y.a_[k];
        return r;
    }
    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.cols_ != y.rows_) throw error("matrix shape mismatch in *");
        Matrix r(x.rows_, y.cols_, x.zero_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t k = 0; k < x.cols_; ++k) {
                if (is_zero(x(i, k))) continue;
                for (std::size_t j = 0; j < y.cols_; ++j) r(i, j) = r(i, j) + x(i, k) * y(k, j);
            }
        return r;
    }

    Matrix scaled(const T& c) const {
        Matrix r = *this;
        for (auto& v : r.a_) v = v * c;
        return r;
    }

    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

    bool all_zero() const {
        for (const auto& v : a_)
            if (!is_zero(v)) return false;
        return true;
    }

  private:
    std::size_t rows_, cols_;
    T zero_;
    std::vector<T> a_;
};

// Block matrix with block (i,j) = A(i,j) * B.
template <typename T>
Matrix<T> kronecker(const Matrix<T>& a, const Matrix<T>& b) {
    Matrix<T> r(a.rows() * b.rows(), a.cols() * b.cols(), a.zero());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (is_zero(a(i, j))) continue;
            for (std::size_t p = 0; p < b.rows(); ++p)
                for (std::size_t q = 0; q < b.cols(); ++q)
                    r(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
        }
    return r;
}

template <typename T>
std::string to_string(const Matrix<T>& m) {
    std::string s;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        s += i == 0 ? "[" : " ";
        s += "[";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) s += ", ";
            s += to_string(m(i, j));
        }
        s += i + 1 == m.rows() ? "]]" : "]\n";
    }
    if (m.rows() == 0) s = "[]";
    return s;
}

}  // namespace algindex
