#pragma once

#include "seifertwitt/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace sw {

class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols);

    static QMatrix identity(std::size_t n);
    static QMatrix zero(std::size_t rows, std::size_t cols) { return QMatrix(rows, cols); }
    static QMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
    static QMatrix from_rows(const std::vector<std::vector<Rat>>& rows);
    static QMatrix column_vector(const std::vector<Rat>& v);
    static QMatrix scalar(std::size_t n, const Rat& c);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }
    bool is_square() const { return rows_ == cols_; }

    Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<Rat>& data() const { return data_; }

    QMatrix transpose() const;
    QMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const QMatrix& b);
    QMatrix column(std::size_t j) const { return block(0, j, rows_, 1); }
    QMatrix row(std::size_t i) const { return block(i, 0, 1, cols_); }
    QMatrix select_rows(const std::vector<std::size_t>& idx) const;
    QMatrix select_cols(const std::vector<std::size_t>& idx) const;
    QMatrix principal(const std::vector<std::size_t>& idx) const;

    bool is_zero() const;
    bool is_identity() const;
    bool is_integral() const;

    QMatrix& operator+=(const QMatrix& o);
    QMatrix& operator-=(const QMatrix& o);
    QMatrix& operator*=(const Rat& c);

    friend QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
    friend QMatrix operator-(QMatrix a, const QMatrix& b) { return a -= b; }
    friend QMatrix operator-(QMatrix a) { return a *= Rat(-1); }
    friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
    friend QMatrix operator*(const Rat& c, QMatrix a) { return a *= c; }
    friend bool operator==(const QMatrix& a, const QMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const QMatrix& a, const QMatrix& b) { return !(a == b); }
    bool operator<(const QMatrix& o) const;  // arbitrary total order, for sorting

    std::string to_string() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> data_;
};

QMatrix hstack(const QMatrix& a, const QMatrix& b);
QMatrix vstack(const QMatrix& a, const QMatrix& b);
QMatrix direct_sum(const QMatrix& a, const QMatrix& b);

}  // namespace sw
