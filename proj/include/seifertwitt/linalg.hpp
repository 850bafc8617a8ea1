#pragma once

#include "seifertwitt/matrix.hpp"

#include <optional>
#include <vector>

namespace sw {

struct Rref {
    QMatrix reduced;
    std::vector<std::size_t> pivots;
};

Rref rref(QMatrix m);
std::size_t rank(const QMatrix& m);
Rat determinant(QMatrix m);
QMatrix inverse(const QMatrix& m);  // throws SingularError

// columns form the basis obtained from the free variables of the RREF
QMatrix kernel(const QMatrix& m);
// a x = b, any particular solution
std::optional<QMatrix> solve(const QMatrix& a, const QMatrix& b);

struct SolveResult {
    std::size_t rank = 0;
    QMatrix kernel;
    bool consistent = true;
    std::optional<QMatrix> particular;
    std::optional<QMatrix> inverse;
};
SolveResult solve_or_kernel(const QMatrix& m, const QMatrix* rhs = nullptr);

// Subspaces of Q^n are stored as n x k matrices of basis columns.
// The canonical basis is the transposed RREF of the row space.
QMatrix canonical_basis(const QMatrix& cols);
std::vector<std::size_t> leading_positions(const QMatrix& canonical);
QMatrix span_sum(const QMatrix& a, const QMatrix& b);
QMatrix intersect(const QMatrix& a, const QMatrix& b);
bool span_contains(const QMatrix& space, const QMatrix& vecs);
// basis vectors of `big` (canonical) whose leading positions are not those of `small`
QMatrix complement_section(const QMatrix& big, const QMatrix& small);
// {v : u^T v = 0 for all columns u}
QMatrix annihilator(const QMatrix& cols, std::size_t n);

}  // namespace sw
