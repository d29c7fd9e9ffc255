#include "mhat/linalg.hpp"

namespace mhat {

std::optional<std::vector<Scalar>> solve_linear(ExactMatrix m, std::vector<Scalar> rhs) {
    if (m.rows != rhs.size()) fail(ErrorCode::Internal, "solve_linear: shape mismatch");
    const std::size_t n = m.rows, k = m.cols;
    std::size_t row = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t col = 0; col < k && row < n; ++col) {
        std::size_t p = row;
        while (p < n && m.at(p, col).is_zero()) ++p;
        if (p == n) continue;
        if (p != row) {
            for (std::size_t j = 0; j < k; ++j) std::swap(m.at(p, j), m.at(row, j));
            std::swap(rhs[p], rhs[row]);
        }
        Scalar inv = m.at(row, col).inverse();
        for (std::size_t j = col; j < k; ++j) m.at(row, j) = m.at(row, j) * inv;
        rhs[row] = rhs[row] * inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            Scalar f = m.at(i, col);
            for (std::size_t j = col; j < k; ++j) {
                m.at(i, j) = m.at(i, j) - f * m.at(row, j);
            }
            rhs[i] = rhs[i] - f * rhs[row];
        }
        pivot_col.push_back(col);
        ++row;
    }
    // Inconsistent rows?
    for (std::size_t i = row; i < n; ++i) {
        if (!rhs[i].is_zero()) return std::nullopt;
    }
    if (pivot_col.size() != k) return std::nullopt;  // underdetermined
    std::vector<Scalar> x(k, Scalar::zero(rhs.empty() ? FieldSpec::rationals() : rhs[0].field()));
    for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = rhs[i];
    return x;
}

std::optional<ExactMatrix> invert_matrix(const ExactMatrix& m) {
    if (m.rows != m.cols) fail(ErrorCode::Internal, "invert_matrix: not square");
    const std::size_t n = m.rows;
    const FieldSpec fs = n ? m.data[0].field() : FieldSpec::rationals();
    ExactMatrix a = m;
    ExactMatrix inv(n, n, fs);
    for (std::size_t i = 0; i < n; ++i) inv.at(i, i) = Scalar::one(fs);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && a.at(p, col).is_zero()) ++p;
        if (p == n) return std::nullopt;
        if (p != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a.at(p, j), a.at(col, j));
                std::swap(inv.at(p, j), inv.at(col, j));
            }
        }
        Scalar f = a.at(col, col).inverse();
        for (std::size_t j = 0; j < n; ++j) {
            a.at(col, j) = a.at(col, j) * f;
            inv.at(col, j) = inv.at(col, j) * f;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a.at(i, col).is_zero()) continue;
            Scalar g = a.at(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                a.at(i, j) = a.at(i, j) - g * a.at(col, j);
                inv.at(i, j) = inv.at(i, j) - g * inv.at(col, j);
            }
        }
    }
    return inv;
}

}  // namespace mhat
