#pragma once

#include "welding/rational.hpp"

#include <optional>
#include <vector>

namespace welding {

// Dense exact rational matrix. Small sizes only (partition-indexed bases),
// so no sparsity games.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const Rational& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    RationalMatrix transposed() const;
    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
    friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
    bool is_zero() const;
    bool operator==(const RationalMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

    static RationalMatrix identity(int n);

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

// Reduced row echelon form (in place copy); returns pivot column indices.
// Deterministic: first nonzero row is the pivot.
std::vector<int> rref(RationalMatrix& m);

int rank(RationalMatrix m);

// Canonical kernel basis from the RREF: one vector per free column, entry 1
// at the free column, pivot entries filled in.
std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m);

// Exact solution of an overdetermined consistent system A x = b with full
// column rank, by fraction-free (Bareiss) elimination over the integers with
// deterministic pivoting. Throws std::runtime_error if the columns are rank
// deficient or any equation ends up violated; on success the residual of
// every input row is exactly zero (this is re-verified before returning).
std::vector<Rational> solve_exact(const RationalMatrix& a, const std::vector<Rational>& b);

} // namespace welding
