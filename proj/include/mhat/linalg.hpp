#pragma once

#include <optional>
#include <vector>

#include "mhat/scalar.hpp"

namespace mhat {

/// Dense exact matrix, row-major. Only used for desk-scale solves (units,
/// antipode inversion, modular elements, dual bases).
struct ExactMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<Scalar> data;

    ExactMatrix() = default;
    ExactMatrix(std::size_t r, std::size_t c, const FieldSpec& fs)
        : rows(r), cols(c), data(r * c, Scalar::zero(fs)) {}

    Scalar& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

/// Solves M x = b by Gaussian elimination. Returns nullopt when inconsistent
/// or underdetermined (we only ever need unique solutions).
std::optional<std::vector<Scalar>> solve_linear(ExactMatrix m, std::vector<Scalar> rhs);

/// Inverse of a square matrix; nullopt when singular.
std::optional<ExactMatrix> invert_matrix(const ExactMatrix& m);

}  // namespace mhat
