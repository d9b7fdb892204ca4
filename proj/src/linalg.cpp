#include "bsato/linalg.hpp"

#include "bsato/error.hpp"

namespace bsato {

namespace {

// Row echelon with recorded pivot columns. Operates in place.
std::vector<int> echelon(Matrix& a, std::vector<Rational>* rhs) {
    int rows = (int)a.size();
    int cols = rows ? (int)a[0].size() : 0;
    std::vector<int> pivot_cols;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (!a[i][c].is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[piv], a[r]);
        if (rhs) std::swap((*rhs)[piv], (*rhs)[r]);
        Rational inv = a[r][c].inv();
        for (int j = c; j < cols; ++j) a[r][j] *= inv;
        if (rhs) (*rhs)[r] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            Rational f = a[i][c];
            for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
            if (rhs) (*rhs)[i] -= f * (*rhs)[r];
        }
        pivot_cols.push_back(c);
        ++r;
    }
    return pivot_cols;
}

} // namespace

SolveResult solve_linear(Matrix a, std::vector<Rational> b) {
    check_usage(a.size() == b.size(), "matrix/rhs size mismatch");
    int rows = (int)a.size();
    int cols = rows ? (int)a[0].size() : 0;
    std::vector<int> pivots = echelon(a, &b);
    for (int i = (int)pivots.size(); i < rows; ++i)
        if (!b[i].is_zero()) return {SolveStatus::inconsistent, {}};
    if ((int)pivots.size() < cols) return {SolveStatus::underdetermined, {}};
    std::vector<Rational> x(cols, Rational(0));
    for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = b[i];
    return {SolveStatus::unique, std::move(x)};
}

std::vector<std::vector<Rational>> nullspace(Matrix a) {
    int rows = (int)a.size();
    int cols = rows ? (int)a[0].size() : 0;
    std::vector<int> pivots = echelon(a, nullptr);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[free] = Rational(1);
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace bsato
