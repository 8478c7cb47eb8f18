#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace ispec {

/// Dense real matrix, row-major. Dimensions in this project are small
/// (n <= 25 or so), so the representation favors simplicity over blocking.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
    Matrix(std::initializer_list<std::initializer_list<double>> rows);

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<double>& data() const { return data_; }
    std::vector<double>& data() { return data_; }

    Matrix transposed() const;
    bool is_symmetric(double rel_tol) const;

    std::vector<double> matvec(const std::vector<double>& x) const;

    double max_abs() const;
    double frobenius_norm() const;
    /// Operator infinity norm (max absolute row sum).
    double inf_norm() const;
    double min_entry() const;

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

double dot(const std::vector<double>& a, const std::vector<double>& b);
double inf_norm(const std::vector<double>& v);
double two_norm(const std::vector<double>& v);
std::vector<double> abs_vec(const std::vector<double>& v);

} // namespace ispec
