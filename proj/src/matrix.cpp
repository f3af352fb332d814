#include "welding/matrix.hpp"

#include <stdexcept>

namespace welding {

RationalMatrix RationalMatrix::transposed() const {
    RationalMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
    RationalMatrix r(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const Rational& aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols(); ++j) {
                if (b.at(k, j) == 0) continue;
                r.at(i, j) += aik * b.at(k, j);
            }
        }
    return r;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix difference shape mismatch");
    RationalMatrix r(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j) - b.at(i, j);
    return r;
}

bool RationalMatrix::is_zero() const {
    for (const auto& x : a_)
        if (x != 0) return false;
    return true;
}

RationalMatrix RationalMatrix::identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

std::vector<int> rref(RationalMatrix& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int p = -1;
        for (int i = row; i < m.rows(); ++i)
            if (m.at(i, col) != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(row, j));
        const Rational inv = 1 / m.at(row, col);
        for (int j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row) continue;
            const Rational f = m.at(i, col);
            if (f == 0) continue;
            for (int j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int rank(RationalMatrix m) { return static_cast<int>(rref(m).size()); }

std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m) {
    RationalMatrix r = m;
    const std::vector<int> pivots = rref(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(m.cols(), Rational(0));
        v[free] = 1;
        for (size_t pi = 0; pi < pivots.size(); ++pi) v[pivots[pi]] = -r.at(int(pi), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Rational> solve_exact(const RationalMatrix& a, const std::vector<Rational>& b) {
    const int rows = a.rows(), cols = a.cols();
    if (static_cast<int>(b.size()) != rows) throw std::invalid_argument("rhs size mismatch");

    // clear denominators row by row
    std::vector<std::vector<Int>> m(rows, std::vector<Int>(cols + 1));
    for (int i = 0; i < rows; ++i) {
        Int l = 1;
        for (int j = 0; j < cols; ++j)
            l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(a.at(i, j)));
        l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(b[i]));
        for (int j = 0; j < cols; ++j) {
            const Rational scaled = a.at(i, j) * Rational(l);
            m[i][j] = boost::multiprecision::numerator(scaled);
        }
        const Rational sb = b[i] * Rational(l);
        m[i][cols] = boost::multiprecision::numerator(sb);
    }

    // fraction-free forward elimination
    Int prev = 1;
    int r = 0;
    std::vector<int> pivot_col;
    for (int col = 0; col < cols && r < rows; ++col) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][col] != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(m[p], m[r]);
        const Int piv = m[r][col];
        for (int i = r + 1; i < rows; ++i) {
            const Int f = m[i][col];
            for (int j = col; j <= cols; ++j) {
                Int v = m[i][j] * piv - f * m[r][j];
                m[i][j] = v / prev; // exact by the Bareiss identity
            }
        }
        prev = piv;
        pivot_col.push_back(col);
        ++r;
    }
    if (r < cols) throw std::runtime_error("solve_exact: rank-deficient system");
    for (int i = r; i < rows; ++i)
        if (m[i][cols] != 0) throw std::runtime_error("solve_exact: inconsistent system");

    // back substitution over the rationals
    std::vector<Rational> x(cols);
    for (int k = r - 1; k >= 0; --k) {
        const int col = pivot_col[k];
        Rational acc(m[k][cols]);
        for (int j = col + 1; j < cols; ++j) acc -= Rational(m[k][j]) * x[j];
        if (m[k][col] == 0) throw std::runtime_error("solve_exact: zero pivot");
        x[col] = acc / Rational(m[k][col]);
    }

    // every original equation must hold exactly
    for (int i = 0; i < rows; ++i) {
        Rational acc = 0;
        for (int j = 0; j < cols; ++j) acc += a.at(i, j) * x[j];
        if (acc != b[i]) throw std::runtime_error("solve_exact: nonzero residual");
    }
    return x;
}

} // namespace welding
