#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "mhat/errors.hpp"

namespace mhat {

enum class FieldKind { Rationals, PrimeField };

/// Coefficient domain descriptor: the rationals, or a prime field F_p.
/// Primality of p is verified at construction.
struct FieldSpec {
    FieldKind kind = FieldKind::Rationals;
    std::uint64_t p = 0;  // characteristic; 0 for the rationals

    static FieldSpec rationals() { return FieldSpec{FieldKind::Rationals, 0}; }
    static FieldSpec prime_field(std::uint64_t p);

    bool operator==(const FieldSpec& other) const {
        return kind == other.kind && p == other.p;
    }
    bool operator!=(const FieldSpec& other) const { return !(*this == other); }

    std::string str() const;
};

bool is_prime_u64(std::uint64_t n);

/// An exact field element. Rationals are kept in lowest terms with positive
/// denominator, prime-field values as residues in [0, p), so equality is
/// structural.
class Scalar {
public:
    Scalar() = default;  // zero over Q; parent field set on first use

    static Scalar zero(const FieldSpec& fs);
    static Scalar one(const FieldSpec& fs);
    static Scalar from_int(const FieldSpec& fs, long long value);
    /// num/den in Q; in F_p den must be invertible.
    static Scalar from_fraction(const FieldSpec& fs, long long num, long long den);

    const FieldSpec& field() const { return fs_; }

    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& other) const;
    Scalar operator-(const Scalar& other) const;
    Scalar operator*(const Scalar& other) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& other) { return *this = *this + other; }
    Scalar& operator*=(const Scalar& other) { return *this = *this * other; }

    /// Multiplicative inverse; throws DivisionByZero on zero.
    Scalar inverse() const;

    /// Integer power, negative exponents allowed for nonzero values.
    Scalar pow(long long exponent) const;

    bool operator==(const Scalar& other) const;
    bool operator!=(const Scalar& other) const { return !(*this == other); }

    /// "num/den" over Q (den omitted when 1), "r mod p" over F_p.
    std::string str() const;
    /// Inverse of str(); also accepts plain integers in either field.
    static Scalar parse(const FieldSpec& fs, const std::string& text);

    /// Multiplicative order when finite; 0 if the element has infinite order
    /// (possible only over Q). Requires a nonzero value.
    std::uint64_t multiplicative_order() const;

private:
    void check_same_field(const Scalar& other) const;

    FieldSpec fs_ = FieldSpec::rationals();
    mpq_class q_ = 0;       // used when kind == Rationals
    std::uint64_t r_ = 0;   // used when kind == PrimeField
};

/// Element of exact multiplicative order n, found by deterministic search
/// from 2 upward. Over Q only n <= 2 is possible; over F_p requires n | p-1.
Scalar root_of_unity(const FieldSpec& fs, std::uint64_t n);

}  // namespace mhat
