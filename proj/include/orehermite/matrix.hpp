#ifndef OREHERMITE_MATRIX_HPP
#define OREHERMITE_MATRIX_HPP

#include <utility>
#include <vector>

#include "orehermite/common.hpp"

namespace oreh {

/// Dense rectangular grid, row major.
template <class T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(int rows, int cols, const T& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& operator()(int i, int j) { return data_[i * cols_ + j]; }
    const T& operator()(int i, int j) const { return data_[i * cols_ + j]; }

    bool square() const { return rows_ == cols_; }

    void swap_rows(int a, int b) {
        if (a == b) return;
        for (int j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    Matrix<T> transposed() const {
        Matrix<T> t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    int rows_, cols_;
    std::vector<T> data_;
};

}  // namespace oreh

#endif
