#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "mhat/errors.hpp"

namespace mhat {

/// Canonical encoding of a group element: a fixed-length vector of integers
/// whose interpretation depends on the owning GroupSpec. Equal elements have
/// identical codes.
using GroupCode = std::vector<std::int64_t>;

class GroupSpec;
using GroupSpecPtr = std::shared_ptr<const GroupSpec>;

struct GroupElement {
    const GroupSpec* spec = nullptr;
    GroupCode code;

    bool operator==(const GroupElement& other) const {
        return spec == other.spec && code == other.code;
    }
};

/// Discrete group oracle. Finite kinds enumerate fully; Z and Z^k enumerate
/// a box of the requested radius.
class GroupSpec {
public:
    enum class Kind {
        CyclicZn,
        FreeAbelianZ,
        FreeAbelianZk,
        SymmetricSn,
        DihedralDn,
        MultiplicationTable,
        DirectProduct,
    };

    static GroupSpecPtr cyclic(std::uint64_t n);
    static GroupSpecPtr free_abelian();                  // Z
    static GroupSpecPtr free_abelian_k(std::uint64_t k); // Z^k
    static GroupSpecPtr symmetric(std::uint64_t n);
    static GroupSpecPtr dihedral(std::uint64_t n);       // order 2n
    /// Validated at construction: Latin square, identity, inverses,
    /// associativity (exhaustive for order <= 64, seeded sampling above).
    static GroupSpecPtr from_table(std::vector<std::string> names,
                                   std::vector<std::vector<std::uint32_t>> table,
                                   std::uint64_t assoc_seed = 1);
    static GroupSpecPtr direct_product(std::vector<GroupSpecPtr> factors);

    /// Parses the instance-file syntax: "Zn:3", "Z", "Zk:2", "Sn:3", "Dn:4",
    /// "prod:Zn:3,Zn:3". Table groups are built separately from their file.
    static GroupSpecPtr parse(const std::string& text);

    Kind kind() const { return kind_; }
    bool is_finite() const;
    std::uint64_t order() const;  // throws for infinite kinds
    std::size_t code_len() const { return code_len_; }
    bool is_abelian() const;
    std::string str() const;

    GroupElement identity() const;
    GroupElement mul(const GroupElement& a, const GroupElement& b) const;
    GroupElement inv(const GroupElement& a) const;
    GroupElement element(GroupCode code) const;  // canonicalizes + validates

    /// Finite kinds ignore `bound` and return the whole group in a fixed
    /// deterministic order; Z/Z^k return the centered box of radius `bound`.
    std::vector<GroupElement> enumerate(std::uint64_t bound) const;

    std::string element_str(const GroupElement& g) const;

    /// True when every coordinate of the code ranges over integers that add:
    /// Z, Z^k, Z_n and direct products thereof. Needed by exponential-form
    /// function terms.
    bool has_integer_coordinates() const;

private:
    GroupSpec() = default;

    void canonicalize(GroupCode& code) const;
    void check_member(const GroupElement& g) const;

    Kind kind_ = Kind::FreeAbelianZ;
    std::uint64_t n_ = 0;  // modulus / degree / dihedral parameter
    std::size_t code_len_ = 1;
    std::vector<std::string> names_;                       // table kind
    std::vector<std::vector<std::uint32_t>> table_;        // table kind
    std::vector<std::uint32_t> table_inverse_;             // table kind
    std::uint32_t table_identity_ = 0;                     // table kind
    std::vector<GroupSpecPtr> factors_;                    // direct product
};

}  // namespace mhat
