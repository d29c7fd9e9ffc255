#include "mhat/expr.hpp"

#include <sstream>

namespace mhat {

std::int64_t QuadForm::eval(std::span<const std::int64_t> coords) const {
    std::int64_t v = c0;
    for (std::size_t i = 0; i < lin.size() && i < coords.size(); ++i) {
        v += lin[i] * coords[i];
    }
    for (const auto& [i, j, c] : quad) {
        v += c * coords[i] * coords[j];
    }
    return v;
}

bool QuadForm::is_constant() const {
    for (auto l : lin)
        if (l != 0) return false;
    for (const auto& [i, j, c] : quad) {
        (void)i;
        (void)j;
        if (c != 0) return false;
    }
    return true;
}

QuadForm QuadForm::negated() const {
    QuadForm f = *this;
    f.c0 = -f.c0;
    for (auto& l : f.lin) l = -l;
    for (auto& [i, j, c] : f.quad) {
        (void)i;
        (void)j;
        c = -c;
    }
    return f;
}

std::string QuadForm::str() const {
    std::ostringstream os;
    bool first = true;
    auto emit = [&](std::int64_t c, const std::string& term) {
        if (c == 0) return;
        if (!first) os << (c > 0 ? "+" : "-");
        else if (c < 0) os << "-";
        std::int64_t a = c > 0 ? c : -c;
        if (a != 1 || term.empty()) os << a;
        if (a != 1 && !term.empty()) os << "*";
        os << term;
        first = false;
    };
    emit(c0, "");
    for (std::size_t i = 0; i < lin.size(); ++i) emit(lin[i], "x" + std::to_string(i));
    for (const auto& [i, j, c] : quad) emit(c, "x" + std::to_string(i) + "*x" + std::to_string(j));
    if (first) os << "0";
    return os.str();
}

namespace {

void flatten_coords(std::span<const GroupElement> args, std::vector<std::int64_t>& out) {
    out.clear();
    for (const auto& g : args) {
        out.insert(out.end(), g.code.begin(), g.code.end());
    }
}

}  // namespace

FuncExprPtr FuncExpr::constant(const FieldSpec& fs, Scalar value, FuncSig sig) {
    auto e = std::shared_ptr<FuncExpr>(new FuncExpr());
    e->kind_ = Kind::Const;
    e->fs_ = fs;
    e->sig_ = std::move(sig);
    e->value_ = std::move(value);
    return e;
}

FuncExprPtr FuncExpr::pow_q(Scalar base, QuadForm form, FuncSig sig) {
    if (base.is_zero()) fail(ErrorCode::ConfigError, "exponential term with base 0");
    for (const auto& g : sig) {
        if (!g->has_integer_coordinates()) {
            fail(ErrorCode::ConfigError,
                 "exponential form over a group without integer coordinates: " + g->str());
        }
    }
    auto e = std::shared_ptr<FuncExpr>(new FuncExpr());
    e->kind_ = Kind::PowQ;
    e->fs_ = base.field();
    e->sig_ = std::move(sig);
    e->base_ = std::move(base);
    e->form_ = std::move(form);
    return e;
}

FuncExprPtr FuncExpr::product(std::vector<FuncExprPtr> factors) {
    if (factors.empty()) fail(ErrorCode::Internal, "empty function product");
    auto e = std::shared_ptr<FuncExpr>(new FuncExpr());
    e->kind_ = Kind::Product;
    e->fs_ = factors.front()->fs_;
    e->sig_ = factors.front()->sig_;
    for (const auto& f : factors) {
        if (f->sig_.size() != e->sig_.size()) {
            fail(ErrorCode::ArityMismatch, "function product with mixed arities");
        }
    }
    e->factors_ = std::move(factors);
    return e;
}

FuncExprPtr FuncExpr::inverse(FuncExprPtr inner) {
    if (inner->kind_ == Kind::PowQ) {
        return pow_q(inner->base_, inner->form_.negated(), inner->sig_);
    }
    if (inner->kind_ == Kind::Const) {
        return constant(inner->fs_, inner->value_.inverse(), inner->sig_);
    }
    auto e = std::shared_ptr<FuncExpr>(new FuncExpr());
    e->kind_ = Kind::Inverse;
    e->fs_ = inner->fs_;
    e->sig_ = inner->sig_;
    e->inner_ = std::move(inner);
    return e;
}

FuncExprPtr FuncExpr::indicator_sum(
    std::vector<std::pair<std::vector<GroupElement>, Scalar>> points,
    const FieldSpec& fs, FuncSig sig) {
    auto e = std::shared_ptr<FuncExpr>(new FuncExpr());
    e->kind_ = Kind::IndicatorSum;
    e->fs_ = fs;
    e->sig_ = std::move(sig);
    for (const auto& [tuple, coeff] : points) {
        (void)coeff;
        if (tuple.size() != e->sig_.size()) {
            fail(ErrorCode::ArityMismatch, "indicator point of wrong arity");
        }
    }
    e->points_ = std::move(points);
    return e;
}

FuncExprPtr FuncExpr::remap(FuncSig outer_sig, std::vector<ArgWord> words, FuncExprPtr inner) {
    if (words.size() != inner->arity()) {
        fail(ErrorCode::ArityMismatch, "remap word count does not match inner arity");
    }
    auto e = std::shared_ptr<FuncExpr>(new FuncExpr());
    e->kind_ = Kind::Remap;
    e->fs_ = inner->fs_;
    e->sig_ = std::move(outer_sig);
    e->words_ = std::move(words);
    e->inner_ = std::move(inner);
    return e;
}

FuncExprPtr FuncExpr::partial_eval(FuncExprPtr inner,
                                   std::vector<std::optional<GroupElement>> fixed) {
    if (fixed.size() != inner->arity()) {
        fail(ErrorCode::ArityMismatch, "partial evaluation mask of wrong arity");
    }
    auto e = std::shared_ptr<FuncExpr>(new FuncExpr());
    e->kind_ = Kind::PartialEval;
    e->fs_ = inner->fs_;
    for (std::size_t i = 0; i < fixed.size(); ++i) {
        if (!fixed[i].has_value()) e->sig_.push_back(inner->sig()[i]);
    }
    e->fixed_ = std::move(fixed);
    e->inner_ = std::move(inner);
    return e;
}

Scalar FuncExpr::eval(std::span<const GroupElement> args) const {
    if (args.size() != sig_.size()) {
        fail(ErrorCode::ArityMismatch, "function term applied to wrong number of arguments");
    }
    switch (kind_) {
        case Kind::Const:
            return value_;
        case Kind::PowQ: {
            std::vector<std::int64_t> coords;
            flatten_coords(args, coords);
            return base_.pow(form_.eval(coords));
        }
        case Kind::Product: {
            Scalar v = Scalar::one(fs_);
            for (const auto& f : factors_) v = v * f->eval(args);
            return v;
        }
        case Kind::Inverse: {
            Scalar v = inner_->eval(args);
            if (v.is_zero()) {
                fail(ErrorCode::NotInvertible, "pointwise inverse hit a zero value");
            }
            return v.inverse();
        }
        case Kind::IndicatorSum: {
            Scalar v = Scalar::zero(fs_);
            for (const auto& [tuple, coeff] : points_) {
                bool match = true;
                for (std::size_t i = 0; i < tuple.size(); ++i) {
                    if (!(tuple[i].code == args[i].code)) { match = false; break; }
                }
                if (match) v = v + coeff;
            }
            return v;
        }
        case Kind::Remap: {
            std::vector<GroupElement> inner_args;
            inner_args.reserve(words_.size());
            for (std::size_t w = 0; w < words_.size(); ++w) {
                const GroupSpec* g = inner_->sig()[w].get();
                GroupElement acc = g->identity();
                for (const auto& [idx, exp] : words_[w]) {
                    GroupElement factor = args[idx];
                    if (exp < 0) factor = g->inv(factor);
                    acc = g->mul(acc, factor);
                }
                inner_args.push_back(std::move(acc));
            }
            return inner_->eval(inner_args);
        }
        case Kind::PartialEval: {
            std::vector<GroupElement> inner_args;
            inner_args.reserve(fixed_.size());
            std::size_t next = 0;
            for (const auto& f : fixed_) {
                if (f.has_value()) inner_args.push_back(*f);
                else inner_args.push_back(args[next++]);
            }
            return inner_->eval(inner_args);
        }
    }
    fail(ErrorCode::Internal, "unreachable");
}

bool FuncExpr::certainly_nonvanishing() const {
    switch (kind_) {
        case Kind::Const: return !value_.is_zero();
        case Kind::PowQ: return true;
        case Kind::Product:
            for (const auto& f : factors_)
                if (!f->certainly_nonvanishing()) return false;
            return true;
        case Kind::Inverse:
        case Kind::Remap:
        case Kind::PartialEval:
            return inner_->certainly_nonvanishing();
        case Kind::IndicatorSum: return false;
    }
    return false;
}

std::optional<Scalar> FuncExpr::constant_value() const {
    switch (kind_) {
        case Kind::Const: return value_;
        case Kind::PowQ:
            if (form_.is_constant() && form_.quad.empty()) return base_.pow(form_.c0);
            return std::nullopt;
        case Kind::Product: {
            Scalar v = Scalar::one(fs_);
            for (const auto& f : factors_) {
                auto c = f->constant_value();
                if (!c) return std::nullopt;
                v = v * *c;
            }
            return v;
        }
        case Kind::Inverse: {
            auto c = inner_->constant_value();
            if (!c || c->is_zero()) return std::nullopt;
            return c->inverse();
        }
        case Kind::Remap:
        case Kind::PartialEval:
            // Constant inner terms stay constant under any variable change.
            if (auto c = inner_->constant_value()) return c;
            return std::nullopt;
        case Kind::IndicatorSum:
            if (points_.empty()) return Scalar::zero(fs_);
            return std::nullopt;
    }
    return std::nullopt;
}

std::string FuncExpr::str() const {
    std::ostringstream os;
    switch (kind_) {
        case Kind::Const:
            os << value_.str();
            break;
        case Kind::PowQ:
            os << base_.str() << "^(" << form_.str() << ")";
            break;
        case Kind::Product: {
            for (std::size_t i = 0; i < factors_.size(); ++i) {
                if (i) os << "*";
                os << "(" << factors_[i]->str() << ")";
            }
            break;
        }
        case Kind::Inverse:
            os << "inv(" << inner_->str() << ")";
            break;
        case Kind::IndicatorSum: {
            os << "ind{";
            for (std::size_t i = 0; i < points_.size(); ++i) {
                if (i) os << ",";
                os << points_[i].second.str() << "@(";
                for (std::size_t j = 0; j < points_[i].first.size(); ++j) {
                    if (j) os << ",";
                    os << points_[i].first[j].spec->element_str(points_[i].first[j]);
                }
                os << ")";
            }
            os << "}";
            break;
        }
        case Kind::Remap: {
            os << "(" << inner_->str() << ")o[";
            for (std::size_t w = 0; w < words_.size(); ++w) {
                if (w) os << ";";
                if (words_[w].empty()) os << "e";
                for (std::size_t i = 0; i < words_[w].size(); ++i) {
                    if (i) os << "*";
                    os << "x" << words_[w][i].first;
                    if (words_[w][i].second < 0) os << "^-1";
                }
            }
            os << "]";
            break;
        }
        case Kind::PartialEval: {
            os << "(" << inner_->str() << ")|[";
            bool first = true;
            for (std::size_t i = 0; i < fixed_.size(); ++i) {
                if (fixed_[i].has_value()) {
                    if (!first) os << ",";
                    os << "x" << i << "=" << fixed_[i]->spec->element_str(*fixed_[i]);
                    first = false;
                }
            }
            os << "]";
            break;
        }
    }
    return os.str();
}

}  // namespace mhat
