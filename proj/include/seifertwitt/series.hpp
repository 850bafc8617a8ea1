#pragma once

#include "seifertwitt/matrix.hpp"

#include <string>
#include <utility>
#include <vector>

namespace sw {

// noncommutative polynomial in x_1..x_mu truncated above degree D; words
// are stored densely, grouped by length, letters as base-mu digits
class TruncSeries {
public:
    TruncSeries() = default;
    TruncSeries(int mu, int degree);
    static TruncSeries constant(int mu, int degree, const Rat& c);
    static TruncSeries letter(int mu, int degree, int i);  // x_i, i >= 1

    int mu() const { return mu_; }
    int degree() const { return degree_; }
    std::size_t size() const { return c_.size(); }

    // word letters are 1-based generator indices
    std::size_t index(const std::vector<int>& word) const;
    std::vector<int> word(std::size_t index) const;
    std::size_t offset(int length) const;
    int length_of(std::size_t index) const;

    Rat& operator[](std::size_t i) { return c_[i]; }
    const Rat& operator[](std::size_t i) const { return c_[i]; }
    Rat coeff(const std::vector<int>& word) const;

    bool is_zero() const;
    TruncSeries truncated(int degree) const;

    TruncSeries& operator+=(const TruncSeries& o);
    TruncSeries& operator-=(const TruncSeries& o);
    TruncSeries& operator*=(const Rat& c);
    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
    friend TruncSeries operator*(const Rat& c, TruncSeries a) { return a *= c; }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        return a.mu_ == b.mu_ && a.degree_ == b.degree_ && a.c_ == b.c_;
    }

    // nonzero terms as ("x1 x2", "p/q"); the empty word is "1"
    std::vector<std::pair<std::string, std::string>> terms() const;

private:
    int mu_ = 1, degree_ = 0;
    std::vector<Rat> c_;
};

std::string word_string(const std::vector<int>& word);

using SeriesMatrix = std::vector<std::vector<TruncSeries>>;
SeriesMatrix multiply(const SeriesMatrix& a, const SeriesMatrix& b);
SeriesMatrix identity_series(std::size_t n, int mu, int degree);

// coefficient of x_{i1}..x_{ik} is row T_{i1} .. T_{ik} col
struct NCRationalSeries {
    int mu = 1;
    QMatrix row, col;
    std::vector<QMatrix> transitions;

    std::size_t dim() const { return col.rows(); }
    Rat coeff(const std::vector<int>& word) const;
    TruncSeries truncate(int degree) const;
};

}  // namespace sw
