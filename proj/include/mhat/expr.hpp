#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "mhat/group.hpp"
#include "mhat/scalar.hpp"

namespace mhat {

/// Argument signature of a group-function term: one group per argument slot.
using FuncSig = std::vector<GroupSpecPtr>;

/// Integer-valued form c0 + sum l_i x_i + sum q_ij x_i x_j over the flattened
/// integer coordinates of the arguments. Covers bicharacter exponents (a*b)
/// and Gaussians (-n^2).
struct QuadForm {
    std::int64_t c0 = 0;
    std::vector<std::int64_t> lin;                          // indexed by coordinate
    std::vector<std::tuple<int, int, std::int64_t>> quad;   // (i, j, coeff)

    std::int64_t eval(std::span<const std::int64_t> coords) const;
    bool is_constant() const;
    QuadForm negated() const;
    std::string str() const;
};

/// One step of a variable remap: the inner argument is the ordered product of
/// outer arguments raised to +-1. An empty word means the group identity.
using ArgWord = std::vector<std::pair<int, int>>;

class FuncExpr;
using FuncExprPtr = std::shared_ptr<const FuncExpr>;

/// A total, evaluable function on a tuple of group elements. Immutable;
/// shared freely. This is the closed-form representation behind group-type
/// multipliers (bicharacters, Gaussians, their products, inverses and
/// structure-map rewrites).
class FuncExpr {
public:
    enum class Kind { Const, PowQ, Product, Inverse, IndicatorSum, Remap, PartialEval };

    static FuncExprPtr constant(const FieldSpec& fs, Scalar value, FuncSig sig);
    /// base ^ form(coords); every argument group must have integer coordinates.
    static FuncExprPtr pow_q(Scalar base, QuadForm form, FuncSig sig);
    static FuncExprPtr product(std::vector<FuncExprPtr> factors);
    static FuncExprPtr inverse(FuncExprPtr inner);
    /// Finitely supported term: sum of c * [args == point].
    static FuncExprPtr indicator_sum(
        std::vector<std::pair<std::vector<GroupElement>, Scalar>> points,
        const FieldSpec& fs, FuncSig sig);
    /// Precompose with the tuple map args -> (word_0(args), ..., word_{k-1}(args)).
    static FuncExprPtr remap(FuncSig outer_sig, std::vector<ArgWord> words, FuncExprPtr inner);
    /// Fix some inner arguments to constants; remaining positions are filled
    /// from the (shorter) outer tuple in order.
    static FuncExprPtr partial_eval(FuncExprPtr inner,
                                    std::vector<std::optional<GroupElement>> fixed);

    const FuncSig& sig() const { return sig_; }
    const FieldSpec& field() const { return fs_; }
    std::size_t arity() const { return sig_.size(); }

    Scalar eval(std::span<const GroupElement> args) const;

    /// True when zero values are impossible by the shape of the term alone
    /// (exponentials and their products/inverses/rewrites).
    bool certainly_nonvanishing() const;

    /// Present when the term is constant by shape (no argument dependence).
    std::optional<Scalar> constant_value() const;

    std::string str() const;

private:
    FuncExpr() = default;

    Kind kind_ = Kind::Const;
    FieldSpec fs_;
    FuncSig sig_;

    Scalar value_;                                      // Const
    Scalar base_;                                       // PowQ
    QuadForm form_;                                     // PowQ
    std::vector<FuncExprPtr> factors_;                  // Product
    FuncExprPtr inner_;                                 // Inverse / Remap / PartialEval
    std::vector<std::pair<std::vector<GroupElement>, Scalar>> points_;  // IndicatorSum
    std::vector<ArgWord> words_;                        // Remap
    std::vector<std::optional<GroupElement>> fixed_;    // PartialEval
};

}  // namespace mhat
