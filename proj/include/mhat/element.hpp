#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mhat/scalar.hpp"

namespace mhat {

class Instance;

/// Flat canonical basis index: concatenated per-slot codes, one block per
/// tensor leg. Tensor legs nest left-associatively as plain concatenation.
using Key = std::vector<std::int64_t>;

struct KeyScalar {
    Key key;
    Scalar coeff;
};

struct KeyPairScalar {
    Key first;
    Key second;
    Scalar coeff;
};

/// Sparse linear combination over Key with no stored zeros. Ordered map so
/// iteration (and therefore reporting) is deterministic.
class SparseVec {
public:
    using Map = std::map<Key, Scalar>;

    void add(const Key& key, const Scalar& coeff) {
        if (coeff.is_zero()) return;
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(key, coeff);
        } else {
            it->second = it->second + coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    void scale(const Scalar& c) {
        if (c.is_zero()) {
            terms_.clear();
            return;
        }
        for (auto& [k, v] : terms_) v = v * c;
    }

    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const Map& terms() const { return terms_; }
    bool operator==(const SparseVec& other) const { return terms_ == other.terms_; }

private:
    Map terms_;
};

/// A finitely supported element of a tensor power of the dense ideal A.
class Element {
public:
    Element() = default;
    Element(const Instance* parent, int arity) : parent_(parent), arity_(arity) {}
    Element(const Instance* parent, int arity, SparseVec vec)
        : parent_(parent), arity_(arity), vec_(std::move(vec)) {}

    const Instance* parent() const { return parent_; }
    int arity() const { return arity_; }
    const SparseVec& vec() const { return vec_; }
    SparseVec& vec() { return vec_; }
    bool is_zero() const { return vec_.empty(); }
    std::size_t term_count() const { return vec_.size(); }

    void add_term(const Key& key, const Scalar& coeff) { vec_.add(key, coeff); }

    Element operator+(const Element& other) const;
    Element operator-(const Element& other) const;
    Element scaled(const Scalar& c) const;
    /// Componentwise algebra product (same parent, same arity).
    Element operator*(const Element& other) const;
    /// Outer tensor product; arities add.
    Element tensor(const Element& other) const;

    bool operator==(const Element& other) const;
    bool operator!=(const Element& other) const { return !(*this == other); }

    std::string str() const;

private:
    void check_compatible(const Element& other) const;

    const Instance* parent_ = nullptr;
    int arity_ = 1;
    SparseVec vec_;
};

}  // namespace mhat
