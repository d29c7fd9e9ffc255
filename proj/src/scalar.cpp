#include "mhat/scalar.hpp"

#include <sstream>

namespace mhat {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::FieldMismatch: return "FieldMismatch";
        case ErrorCode::NoRoot: return "NoRoot";
        case ErrorCode::GroupMismatch: return "GroupMismatch";
        case ErrorCode::ParentMismatch: return "ParentMismatch";
        case ErrorCode::ArityMismatch: return "ArityMismatch";
        case ErrorCode::NotInvertible: return "NotInvertible";
        case ErrorCode::UnsupportedPush: return "UnsupportedPush";
        case ErrorCode::NotScalar: return "NotScalar";
        case ErrorCode::CounitNotOne: return "CounitNotOne";
        case ErrorCode::CoveringViolation: return "CoveringViolation";
        case ErrorCode::NoSolution: return "NoSolution";
        case ErrorCode::NoDual: return "NoDual";
        case ErrorCode::NotCounimodular: return "NotCounimodular";
        case ErrorCode::LegExpansionUnavailable: return "LegExpansionUnavailable";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::ConfigError: return "ConfigError";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

FieldSpec FieldSpec::prime_field(std::uint64_t p) {
    if (!is_prime_u64(p)) {
        fail(ErrorCode::ConfigError, "PrimeField characteristic must be prime, got " + std::to_string(p));
    }
    return FieldSpec{FieldKind::PrimeField, p};
}

std::string FieldSpec::str() const {
    if (kind == FieldKind::Rationals) return "Q";
    return "F" + std::to_string(p);
}

namespace {

std::uint64_t mod_reduce(long long value, std::uint64_t p) {
    long long m = value % static_cast<long long>(p);
    if (m < 0) m += static_cast<long long>(p);
    return static_cast<std::uint64_t>(m);
}

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t result = 1 % p;
    base %= p;
    while (exp) {
        if (exp & 1) result = mod_mul(result, base, p);
        base = mod_mul(base, base, p);
        exp >>= 1;
    }
    return result;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
    if (a == 0) fail(ErrorCode::DivisionByZero, "inverse of 0 in F" + std::to_string(p));
    return mod_pow(a, p - 2, p);
}

}  // namespace

Scalar Scalar::zero(const FieldSpec& fs) {
    Scalar s;
    s.fs_ = fs;
    return s;
}

Scalar Scalar::one(const FieldSpec& fs) {
    return from_int(fs, 1);
}

Scalar Scalar::from_int(const FieldSpec& fs, long long value) {
    Scalar s;
    s.fs_ = fs;
    if (fs.kind == FieldKind::Rationals) {
        s.q_ = mpq_class(static_cast<long>(value));
    } else {
        s.r_ = mod_reduce(value, fs.p);
    }
    return s;
}

Scalar Scalar::from_fraction(const FieldSpec& fs, long long num, long long den) {
    if (den == 0) fail(ErrorCode::DivisionByZero, "fraction with zero denominator");
    Scalar s;
    s.fs_ = fs;
    if (fs.kind == FieldKind::Rationals) {
        s.q_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
        s.q_.canonicalize();
    } else {
        std::uint64_t d = mod_reduce(den, fs.p);
        s.r_ = mod_mul(mod_reduce(num, fs.p), mod_inverse(d, fs.p), fs.p);
    }
    return s;
}

void Scalar::check_same_field(const Scalar& other) const {
    if (fs_ != other.fs_) {
        fail(ErrorCode::FieldMismatch, "operands from " + fs_.str() + " and " + other.fs_.str());
    }
}

bool Scalar::is_zero() const {
    return fs_.kind == FieldKind::Rationals ? q_ == 0 : r_ == 0;
}

bool Scalar::is_one() const {
    return fs_.kind == FieldKind::Rationals ? q_ == 1 : r_ == 1 % fs_.p;
}

Scalar Scalar::operator+(const Scalar& other) const {
    check_same_field(other);
    Scalar s;
    s.fs_ = fs_;
    if (fs_.kind == FieldKind::Rationals) {
        s.q_ = q_ + other.q_;
    } else {
        s.r_ = (r_ + other.r_) % fs_.p;
    }
    return s;
}

Scalar Scalar::operator-(const Scalar& other) const {
    return *this + (-other);
}

Scalar Scalar::operator*(const Scalar& other) const {
    check_same_field(other);
    Scalar s;
    s.fs_ = fs_;
    if (fs_.kind == FieldKind::Rationals) {
        s.q_ = q_ * other.q_;
    } else {
        s.r_ = mod_mul(r_, other.r_, fs_.p);
    }
    return s;
}

Scalar Scalar::operator-() const {
    Scalar s;
    s.fs_ = fs_;
    if (fs_.kind == FieldKind::Rationals) {
        s.q_ = -q_;
    } else {
        s.r_ = r_ == 0 ? 0 : fs_.p - r_;
    }
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of 0 in " + fs_.str());
    Scalar s;
    s.fs_ = fs_;
    if (fs_.kind == FieldKind::Rationals) {
        s.q_ = 1 / q_;
    } else {
        s.r_ = mod_inverse(r_, fs_.p);
    }
    return s;
}

Scalar Scalar::pow(long long exponent) const {
    if (exponent < 0) return inverse().pow(-exponent);
    Scalar acc = one(fs_);
    Scalar base = *this;
    std::uint64_t e = static_cast<std::uint64_t>(exponent);
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool Scalar::operator==(const Scalar& other) const {
    check_same_field(other);
    if (fs_.kind == FieldKind::Rationals) return q_ == other.q_;
    return r_ == other.r_;
}

std::string Scalar::str() const {
    if (fs_.kind == FieldKind::Rationals) return q_.get_str();
    return std::to_string(r_) + " mod " + std::to_string(fs_.p);
}

Scalar Scalar::parse(const FieldSpec& fs, const std::string& text) {
    std::string t = text;
    auto strip = [](std::string& s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.erase(s.begin());
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
    };
    strip(t);
    if (t.empty()) fail(ErrorCode::ParseError, "empty scalar");

    auto mod_pos = t.find(" mod ");
    if (mod_pos != std::string::npos) {
        if (fs.kind != FieldKind::PrimeField) {
            fail(ErrorCode::ParseError, "'mod' scalar in a rational field context: " + text);
        }
        std::string lhs = t.substr(0, mod_pos), rhs = t.substr(mod_pos + 5);
        strip(lhs);
        strip(rhs);
        try {
            if (std::stoull(rhs) != fs.p) {
                fail(ErrorCode::ParseError, "scalar modulus disagrees with field: " + text);
            }
            return from_int(fs, std::stoll(lhs));
        } catch (const std::invalid_argument&) {
            fail(ErrorCode::ParseError, "bad scalar: " + text);
        } catch (const std::out_of_range&) {
            fail(ErrorCode::ParseError, "scalar out of range: " + text);
        }
    }

    auto slash = t.find('/');
    try {
        if (slash == std::string::npos) return from_int(fs, std::stoll(t));
        long long num = std::stoll(t.substr(0, slash));
        long long den = std::stoll(t.substr(slash + 1));
        return from_fraction(fs, num, den);
    } catch (const std::invalid_argument&) {
        fail(ErrorCode::ParseError, "bad scalar: " + text);
    } catch (const std::out_of_range&) {
        fail(ErrorCode::ParseError, "scalar out of range: " + text);
    }
}

std::uint64_t Scalar::multiplicative_order() const {
    if (is_zero()) fail(ErrorCode::DivisionByZero, "order of 0");
    if (fs_.kind == FieldKind::Rationals) {
        if (q_ == 1) return 1;
        if (q_ == -1) return 2;
        return 0;
    }
    // Order divides p-1; walk the powers directly (fields here are small).
    std::uint64_t acc = r_;
    std::uint64_t k = 1;
    while (acc != 1) {
        acc = mod_mul(acc, r_, fs_.p);
        ++k;
        if (k > fs_.p) fail(ErrorCode::Internal, "order search overran the group");
    }
    return k;
}

Scalar root_of_unity(const FieldSpec& fs, std::uint64_t n) {
    if (n == 0) fail(ErrorCode::NoRoot, "order 0 requested");
    if (n == 1) return Scalar::one(fs);
    if (fs.kind == FieldKind::Rationals) {
        if (n == 2) return Scalar::from_int(fs, -1);
        fail(ErrorCode::NoRoot, "Q has no primitive root of unity of order " + std::to_string(n));
    }
    if ((fs.p - 1) % n != 0) {
        fail(ErrorCode::NoRoot,
             std::to_string(n) + " does not divide p-1 = " + std::to_string(fs.p - 1));
    }
    for (std::uint64_t c = 2; c < fs.p; ++c) {
        Scalar candidate = Scalar::from_int(fs, static_cast<long long>(c));
        if (candidate.multiplicative_order() == n) return candidate;
    }
    fail(ErrorCode::NoRoot, "no element of order " + std::to_string(n) + " in " + fs.str());
}

}  // namespace mhat
