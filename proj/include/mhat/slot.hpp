#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "mhat/element.hpp"
#include "mhat/group.hpp"
#include "mhat/scalar.hpp"

namespace mhat {

using CodeSpan = std::span<const std::int64_t>;

/// Structure-constant tables of a finite-dimensional Hopf algebra. Loaded
/// from file or materialized from another instance; validated on build:
/// associativity, counit homomorphism property, bijective antipode, and the
/// existence of a unit (solved for, not trusted).
struct ScTables {
    FieldSpec field;
    std::vector<std::string> names;
    std::size_t dim = 0;

    using Combo = std::vector<std::pair<std::uint32_t, Scalar>>;
    using PairCombo = std::vector<std::tuple<std::uint32_t, std::uint32_t, Scalar>>;

    std::vector<std::vector<Combo>> mul;   // [i][j]
    std::vector<PairCombo> delta;          // [i]
    std::vector<Scalar> eps;               // [i]
    std::vector<Combo> antipode;           // [i]
    std::vector<Combo> antipode_inv;       // derived
    std::vector<Scalar> unit;              // coordinates of 1, derived

    /// Validates and completes the tables (unit, S^{-1}).
    static std::shared_ptr<const ScTables> build(FieldSpec field,
                                                 std::vector<std::string> names,
                                                 std::vector<std::vector<Combo>> mul,
                                                 std::vector<PairCombo> delta,
                                                 std::vector<Scalar> eps,
                                                 std::vector<Combo> antipode,
                                                 bool check_associativity = true);
};

/// One primitive tensor factor of an instance. Function slots carry the
/// non-unital function algebra K(G) whose coproduct exists only through
/// covered products; the other kinds are unital with a finite full coproduct
/// per basis element.
class Slot {
public:
    enum class Kind {
        FunctionAlgebra,     // K(G), pointwise product
        GroupAlgebra,        // KG, convolution, group-like coproduct
        StructureConstants,  // explicit finite-dimensional tables
        DrinfeldDouble,      // K(G) x KG smash product for finite G
    };

    static Slot function_algebra(FieldSpec field, GroupSpecPtr group);
    static Slot group_algebra(FieldSpec field, GroupSpecPtr group);
    static Slot structure_constants(std::shared_ptr<const ScTables> sc);
    static Slot drinfeld_double(FieldSpec field, GroupSpecPtr group);

    Kind kind() const { return kind_; }
    const FieldSpec& field() const { return field_; }
    bool is_function() const { return kind_ == Kind::FunctionAlgebra; }
    bool is_unital() const { return !is_function(); }
    std::size_t code_len() const { return code_len_; }
    const GroupSpecPtr& group() const { return group_; }
    const std::shared_ptr<const ScTables>& sc() const { return sc_; }
    bool commutative() const;
    bool finite() const;
    std::uint64_t dimension() const;  // finite slots only

    std::vector<Key> basis_codes(std::uint64_t bound) const;

    // Term-level algebra maps. Every list is an exact finite expansion.
    std::vector<KeyScalar> mul(CodeSpan a, CodeSpan b) const;
    Scalar counit(CodeSpan a) const;
    /// S applied `power` times; negative powers use S^{-1}.
    std::vector<KeyScalar> antipode_pow(CodeSpan a, int power) const;
    /// Full coproduct of a basis element; unital slots only.
    std::vector<KeyPairScalar> delta(CodeSpan a) const;
    /// Coordinates of the slot unit; unital slots only.
    std::vector<KeyScalar> unit() const;

    // Covered coproducts, defined for every slot kind.
    std::vector<KeyPairScalar> cov_right(CodeSpan a, CodeSpan b) const;       // D(a)(1(x)b)
    std::vector<KeyPairScalar> cov_left(CodeSpan a, CodeSpan b) const;        // (a(x)1)D(b)
    std::vector<KeyPairScalar> cov_right_flip(CodeSpan a, CodeSpan b) const;  // D(a)(b(x)1)
    std::vector<KeyPairScalar> cov_left_flip(CodeSpan a, CodeSpan b) const;   // (1(x)a)D(b)
    std::vector<KeyPairScalar> t1_inv(CodeSpan a, CodeSpan b) const;  // sum a1 (x) S(a2)b
    std::vector<KeyPairScalar> t2_inv(CodeSpan a, CodeSpan b) const;  // sum aS(b1) (x) b2

    std::string label(CodeSpan code) const;

private:
    Slot() = default;

    GroupElement as_group(CodeSpan code) const;
    static Key code_of(const GroupElement& g);
    // DrinfeldDouble code layout: [g-part | h-part], basis d_g (x) h.
    GroupElement double_g(CodeSpan code) const;
    GroupElement double_h(CodeSpan code) const;
    static Key double_code(const GroupElement& g, const GroupElement& h);

    Kind kind_ = Kind::FunctionAlgebra;
    FieldSpec field_;
    std::size_t code_len_ = 1;
    GroupSpecPtr group_;
    std::shared_ptr<const ScTables> sc_;
};

}  // namespace mhat
