#include "mhat/group.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace mhat {

namespace {

std::int64_t mod_i64(std::int64_t v, std::int64_t n) {
    std::int64_t m = v % n;
    if (m < 0) m += n;
    return m;
}

}  // namespace

GroupSpecPtr GroupSpec::cyclic(std::uint64_t n) {
    if (n == 0) fail(ErrorCode::ConfigError, "Zn needs n >= 1");
    auto g = std::shared_ptr<GroupSpec>(new GroupSpec());
    g->kind_ = Kind::CyclicZn;
    g->n_ = n;
    g->code_len_ = 1;
    return g;
}

GroupSpecPtr GroupSpec::free_abelian() {
    auto g = std::shared_ptr<GroupSpec>(new GroupSpec());
    g->kind_ = Kind::FreeAbelianZ;
    g->code_len_ = 1;
    return g;
}

GroupSpecPtr GroupSpec::free_abelian_k(std::uint64_t k) {
    if (k == 0) fail(ErrorCode::ConfigError, "Zk needs k >= 1");
    auto g = std::shared_ptr<GroupSpec>(new GroupSpec());
    g->kind_ = Kind::FreeAbelianZk;
    g->n_ = k;
    g->code_len_ = k;
    return g;
}

GroupSpecPtr GroupSpec::symmetric(std::uint64_t n) {
    if (n == 0 || n > 8) fail(ErrorCode::ConfigError, "Sn supported for 1 <= n <= 8");
    auto g = std::shared_ptr<GroupSpec>(new GroupSpec());
    g->kind_ = Kind::SymmetricSn;
    g->n_ = n;
    g->code_len_ = n;
    return g;
}

GroupSpecPtr GroupSpec::dihedral(std::uint64_t n) {
    if (n == 0) fail(ErrorCode::ConfigError, "Dn needs n >= 1");
    auto g = std::shared_ptr<GroupSpec>(new GroupSpec());
    g->kind_ = Kind::DihedralDn;
    g->n_ = n;
    g->code_len_ = 2;  // (rotation, flip)
    return g;
}

GroupSpecPtr GroupSpec::from_table(std::vector<std::string> names,
                                   std::vector<std::vector<std::uint32_t>> table,
                                   std::uint64_t assoc_seed) {
    const std::size_t n = names.size();
    if (n == 0 || table.size() != n) {
        fail(ErrorCode::ConfigError, "table group: size mismatch");
    }
    for (const auto& row : table) {
        if (row.size() != n) fail(ErrorCode::ConfigError, "table group: ragged table");
        for (auto v : row) {
            if (v >= n) fail(ErrorCode::ConfigError, "table group: entry out of range");
        }
    }
    // Latin square check.
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<bool> seen_row(n, false), seen_col(n, false);
        for (std::size_t j = 0; j < n; ++j) {
            if (seen_row[table[i][j]]) fail(ErrorCode::ConfigError, "table group: repeated entry in row");
            seen_row[table[i][j]] = true;
            if (seen_col[table[j][i]]) fail(ErrorCode::ConfigError, "table group: repeated entry in column");
            seen_col[table[j][i]] = true;
        }
    }
    // Identity.
    std::int64_t id = -1;
    for (std::size_t e = 0; e < n; ++e) {
        bool ok = true;
        for (std::size_t j = 0; j < n; ++j) {
            if (table[e][j] != j || table[j][e] != j) { ok = false; break; }
        }
        if (ok) { id = static_cast<std::int64_t>(e); break; }
    }
    if (id < 0) fail(ErrorCode::ConfigError, "table group: no identity element");
    // Inverses.
    std::vector<std::uint32_t> inverse(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        bool found = false;
        for (std::size_t j = 0; j < n; ++j) {
            if (table[i][j] == static_cast<std::uint32_t>(id) &&
                table[j][i] == static_cast<std::uint32_t>(id)) {
                inverse[i] = static_cast<std::uint32_t>(j);
                found = true;
                break;
            }
        }
        if (!found) fail(ErrorCode::ConfigError, "table group: element without inverse: " + names[i]);
    }
    // Associativity: exhaustive up to order 64, seeded random triples above.
    auto assoc = [&](std::size_t a, std::size_t b, std::size_t c) {
        return table[table[a][b]][c] == table[a][table[b][c]];
    };
    if (n <= 64) {
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c)
                    if (!assoc(a, b, c)) {
                        fail(ErrorCode::ConfigError, "table group: associativity fails at (" +
                            names[a] + "," + names[b] + "," + names[c] + ")");
                    }
    } else {
        std::mt19937_64 rng(assoc_seed);
        for (int trial = 0; trial < 20000; ++trial) {
            std::size_t a = rng() % n, b = rng() % n, c = rng() % n;
            if (!assoc(a, b, c)) {
                fail(ErrorCode::ConfigError, "table group: associativity fails at sampled (" +
                    names[a] + "," + names[b] + "," + names[c] + ")");
            }
        }
    }

    auto g = std::shared_ptr<GroupSpec>(new GroupSpec());
    g->kind_ = Kind::MultiplicationTable;
    g->n_ = n;
    g->code_len_ = 1;
    g->names_ = std::move(names);
    g->table_ = std::move(table);
    g->table_inverse_ = std::move(inverse);
    g->table_identity_ = static_cast<std::uint32_t>(id);
    return g;
}

GroupSpecPtr GroupSpec::direct_product(std::vector<GroupSpecPtr> factors) {
    if (factors.empty()) fail(ErrorCode::ConfigError, "direct product of no groups");
    auto g = std::shared_ptr<GroupSpec>(new GroupSpec());
    g->kind_ = Kind::DirectProduct;
    g->code_len_ = 0;
    for (const auto& f : factors) g->code_len_ += f->code_len();
    g->factors_ = std::move(factors);
    return g;
}

GroupSpecPtr GroupSpec::parse(const std::string& text) {
    if (text == "Z") return free_abelian();
    auto starts_with = [&](const char* prefix) {
        return text.rfind(prefix, 0) == 0;
    };
    auto tail_number = [&](std::size_t offset) -> std::uint64_t {
        try {
            return std::stoull(text.substr(offset));
        } catch (...) {
            fail(ErrorCode::ParseError, "bad group spec: " + text);
        }
    };
    if (starts_with("Zn:")) return cyclic(tail_number(3));
    if (starts_with("Zk:")) return free_abelian_k(tail_number(3));
    if (starts_with("Sn:")) return symmetric(tail_number(3));
    if (starts_with("Dn:")) return dihedral(tail_number(3));
    if (starts_with("prod:")) {
        std::vector<GroupSpecPtr> factors;
        std::string rest = text.substr(5);
        std::size_t pos = 0;
        while (pos < rest.size()) {
            std::size_t comma = rest.find(',', pos);
            // group names may contain ':' but not ','; nested products are
            // not expressible in this syntax
            std::string part = comma == std::string::npos ? rest.substr(pos)
                                                          : rest.substr(pos, comma - pos);
            if (part.empty()) fail(ErrorCode::ParseError, "bad group spec: " + text);
            factors.push_back(parse(part));
            pos = comma == std::string::npos ? rest.size() : comma + 1;
        }
        return direct_product(std::move(factors));
    }
    fail(ErrorCode::ParseError, "unknown group spec: " + text);
}

bool GroupSpec::is_finite() const {
    switch (kind_) {
        case Kind::FreeAbelianZ:
        case Kind::FreeAbelianZk:
            return false;
        case Kind::DirectProduct:
            return std::all_of(factors_.begin(), factors_.end(),
                               [](const GroupSpecPtr& f) { return f->is_finite(); });
        default:
            return true;
    }
}

std::uint64_t GroupSpec::order() const {
    switch (kind_) {
        case Kind::CyclicZn: return n_;
        case Kind::SymmetricSn: {
            std::uint64_t f = 1;
            for (std::uint64_t i = 2; i <= n_; ++i) f *= i;
            return f;
        }
        case Kind::DihedralDn: return 2 * n_;
        case Kind::MultiplicationTable: return n_;
        case Kind::DirectProduct: {
            std::uint64_t o = 1;
            for (const auto& f : factors_) o *= f->order();
            return o;
        }
        default:
            fail(ErrorCode::ConfigError, "order() of an infinite group");
    }
}

bool GroupSpec::is_abelian() const {
    switch (kind_) {
        case Kind::CyclicZn:
        case Kind::FreeAbelianZ:
        case Kind::FreeAbelianZk:
            return true;
        case Kind::SymmetricSn: return n_ <= 2;
        case Kind::DihedralDn: return n_ <= 2;
        case Kind::MultiplicationTable: {
            for (std::size_t i = 0; i < n_; ++i)
                for (std::size_t j = i + 1; j < n_; ++j)
                    if (table_[i][j] != table_[j][i]) return false;
            return true;
        }
        case Kind::DirectProduct:
            return std::all_of(factors_.begin(), factors_.end(),
                               [](const GroupSpecPtr& f) { return f->is_abelian(); });
    }
    return false;
}

std::string GroupSpec::str() const {
    switch (kind_) {
        case Kind::CyclicZn: return "Zn:" + std::to_string(n_);
        case Kind::FreeAbelianZ: return "Z";
        case Kind::FreeAbelianZk: return "Zk:" + std::to_string(n_);
        case Kind::SymmetricSn: return "Sn:" + std::to_string(n_);
        case Kind::DihedralDn: return "Dn:" + std::to_string(n_);
        case Kind::MultiplicationTable: return "table[" + std::to_string(n_) + "]";
        case Kind::DirectProduct: {
            std::string s = "prod:";
            for (std::size_t i = 0; i < factors_.size(); ++i) {
                if (i) s += ",";
                s += factors_[i]->str();
            }
            return s;
        }
    }
    return "?";
}

bool GroupSpec::has_integer_coordinates() const {
    switch (kind_) {
        case Kind::CyclicZn:
        case Kind::FreeAbelianZ:
        case Kind::FreeAbelianZk:
            return true;
        case Kind::DirectProduct:
            return std::all_of(factors_.begin(), factors_.end(),
                               [](const GroupSpecPtr& f) { return f->has_integer_coordinates(); });
        default:
            return false;
    }
}

GroupElement GroupSpec::identity() const {
    GroupCode code(code_len_, 0);
    switch (kind_) {
        case Kind::SymmetricSn:
            std::iota(code.begin(), code.end(), 0);
            break;
        case Kind::MultiplicationTable:
            code[0] = table_identity_;
            break;
        case Kind::DirectProduct: {
            std::size_t off = 0;
            for (const auto& f : factors_) {
                GroupElement e = f->identity();
                std::copy(e.code.begin(), e.code.end(), code.begin() + off);
                off += f->code_len();
            }
            break;
        }
        default:
            break;  // all-zero code
    }
    return GroupElement{this, std::move(code)};
}

void GroupSpec::canonicalize(GroupCode& code) const {
    switch (kind_) {
        case Kind::CyclicZn:
            code[0] = mod_i64(code[0], static_cast<std::int64_t>(n_));
            break;
        case Kind::DihedralDn:
            code[0] = mod_i64(code[0], static_cast<std::int64_t>(n_));
            code[1] = mod_i64(code[1], 2);
            break;
        case Kind::DirectProduct: {
            std::size_t off = 0;
            for (const auto& f : factors_) {
                GroupCode sub(code.begin() + off, code.begin() + off + f->code_len());
                f->canonicalize(sub);
                std::copy(sub.begin(), sub.end(), code.begin() + off);
                off += f->code_len();
            }
            break;
        }
        default:
            break;
    }
}

void GroupSpec::check_member(const GroupElement& g) const {
    if (g.spec != this) fail(ErrorCode::GroupMismatch, "element belongs to a different group");
    if (g.code.size() != code_len_) fail(ErrorCode::GroupMismatch, "element code length mismatch");
}

GroupElement GroupSpec::element(GroupCode code) const {
    if (code.size() != code_len_) {
        fail(ErrorCode::ConfigError, "group element code of wrong length for " + str());
    }
    switch (kind_) {
        case Kind::SymmetricSn: {
            std::vector<bool> seen(n_, false);
            for (auto v : code) {
                if (v < 0 || v >= static_cast<std::int64_t>(n_) || seen[v]) {
                    fail(ErrorCode::ConfigError, "not a permutation word");
                }
                seen[v] = true;
            }
            break;
        }
        case Kind::MultiplicationTable:
            if (code[0] < 0 || code[0] >= static_cast<std::int64_t>(n_)) {
                fail(ErrorCode::ConfigError, "table element index out of range");
            }
            break;
        default:
            canonicalize(code);
            break;
    }
    return GroupElement{this, std::move(code)};
}

GroupElement GroupSpec::mul(const GroupElement& a, const GroupElement& b) const {
    check_member(a);
    check_member(b);
    GroupCode code(code_len_);
    switch (kind_) {
        case Kind::CyclicZn:
            code[0] = mod_i64(a.code[0] + b.code[0], static_cast<std::int64_t>(n_));
            break;
        case Kind::FreeAbelianZ:
        case Kind::FreeAbelianZk:
            for (std::size_t i = 0; i < code_len_; ++i) code[i] = a.code[i] + b.code[i];
            break;
        case Kind::SymmetricSn:
            // Left-to-right composition: (a*b)(i) = b(a(i)).
            for (std::size_t i = 0; i < code_len_; ++i) code[i] = b.code[a.code[i]];
            break;
        case Kind::DihedralDn: {
            // Elements r^i f^s with f r f = r^{-1}: (i,s)(j,t) = (i + (-1)^s j, s^t).
            std::int64_t j = a.code[1] ? -b.code[0] : b.code[0];
            code[0] = mod_i64(a.code[0] + j, static_cast<std::int64_t>(n_));
            code[1] = a.code[1] ^ b.code[1];
            break;
        }
        case Kind::MultiplicationTable:
            code[0] = table_[a.code[0]][b.code[0]];
            break;
        case Kind::DirectProduct: {
            std::size_t off = 0;
            for (const auto& f : factors_) {
                GroupElement fa{f.get(), GroupCode(a.code.begin() + off, a.code.begin() + off + f->code_len())};
                GroupElement fb{f.get(), GroupCode(b.code.begin() + off, b.code.begin() + off + f->code_len())};
                GroupElement fc = f->mul(fa, fb);
                std::copy(fc.code.begin(), fc.code.end(), code.begin() + off);
                off += f->code_len();
            }
            break;
        }
    }
    return GroupElement{this, std::move(code)};
}

GroupElement GroupSpec::inv(const GroupElement& a) const {
    check_member(a);
    GroupCode code(code_len_);
    switch (kind_) {
        case Kind::CyclicZn:
            code[0] = mod_i64(-a.code[0], static_cast<std::int64_t>(n_));
            break;
        case Kind::FreeAbelianZ:
        case Kind::FreeAbelianZk:
            for (std::size_t i = 0; i < code_len_; ++i) code[i] = -a.code[i];
            break;
        case Kind::SymmetricSn:
            for (std::size_t i = 0; i < code_len_; ++i) code[a.code[i]] = static_cast<std::int64_t>(i);
            break;
        case Kind::DihedralDn:
            if (a.code[1]) {
                code = a.code;  // reflections are involutions
            } else {
                code[0] = mod_i64(-a.code[0], static_cast<std::int64_t>(n_));
                code[1] = 0;
            }
            break;
        case Kind::MultiplicationTable:
            code[0] = table_inverse_[a.code[0]];
            break;
        case Kind::DirectProduct: {
            std::size_t off = 0;
            for (const auto& f : factors_) {
                GroupElement fa{f.get(), GroupCode(a.code.begin() + off, a.code.begin() + off + f->code_len())};
                GroupElement fi = f->inv(fa);
                std::copy(fi.code.begin(), fi.code.end(), code.begin() + off);
                off += f->code_len();
            }
            break;
        }
    }
    return GroupElement{this, std::move(code)};
}

std::vector<GroupElement> GroupSpec::enumerate(std::uint64_t bound) const {
    std::vector<GroupElement> out;
    switch (kind_) {
        case Kind::CyclicZn:
            for (std::uint64_t i = 0; i < n_; ++i) out.push_back(element({static_cast<std::int64_t>(i)}));
            break;
        case Kind::FreeAbelianZ: {
            std::int64_t b = static_cast<std::int64_t>(bound);
            for (std::int64_t i = -b; i <= b; ++i) out.push_back(element({i}));
            break;
        }
        case Kind::FreeAbelianZk: {
            std::int64_t b = static_cast<std::int64_t>(bound);
            GroupCode code(code_len_, -b);
            while (true) {
                out.push_back(element(code));
                std::size_t i = 0;  // first coordinate varies fastest
                while (i < code_len_ && code[i] == b) { code[i] = -b; ++i; }
                if (i == code_len_) break;
                ++code[i];
            }
            break;
        }
        case Kind::SymmetricSn: {
            GroupCode word(code_len_);
            std::iota(word.begin(), word.end(), 0);
            do {
                out.push_back(element(word));
            } while (std::next_permutation(word.begin(), word.end()));
            break;
        }
        case Kind::DihedralDn:
            for (std::int64_t s = 0; s < 2; ++s)
                for (std::int64_t r = 0; r < static_cast<std::int64_t>(n_); ++r)
                    out.push_back(element({r, s}));
            break;
        case Kind::MultiplicationTable:
            for (std::uint64_t i = 0; i < n_; ++i) out.push_back(element({static_cast<std::int64_t>(i)}));
            break;
        case Kind::DirectProduct: {
            std::vector<std::vector<GroupElement>> lists;
            for (const auto& f : factors_) lists.push_back(f->enumerate(bound));
            std::vector<std::size_t> idx(factors_.size(), 0);
            while (true) {
                GroupCode code;
                for (std::size_t i = 0; i < factors_.size(); ++i) {
                    const auto& c = lists[i][idx[i]].code;
                    code.insert(code.end(), c.begin(), c.end());
                }
                out.push_back(GroupElement{this, std::move(code)});
                std::size_t i = 0;  // first factor varies fastest
                while (i < idx.size() && idx[i] + 1 == lists[i].size()) { idx[i] = 0; ++i; }
                if (i == idx.size()) break;
                ++idx[i];
            }
            break;
        }
    }
    return out;
}

std::string GroupSpec::element_str(const GroupElement& g) const {
    check_member(const_cast<GroupElement&>(g));
    std::ostringstream os;
    switch (kind_) {
        case Kind::CyclicZn:
        case Kind::FreeAbelianZ:
            os << g.code[0];
            break;
        case Kind::FreeAbelianZk:
        case Kind::SymmetricSn: {
            os << "(";
            for (std::size_t i = 0; i < g.code.size(); ++i) {
                if (i) os << ",";
                os << g.code[i];
            }
            os << ")";
            break;
        }
        case Kind::DihedralDn:
            os << "r" << g.code[0] << (g.code[1] ? "f" : "");
            break;
        case Kind::MultiplicationTable:
            os << names_[g.code[0]];
            break;
        case Kind::DirectProduct: {
            os << "(";
            std::size_t off = 0;
            for (std::size_t i = 0; i < factors_.size(); ++i) {
                if (i) os << ",";
                GroupElement sub{factors_[i].get(),
                                 GroupCode(g.code.begin() + off, g.code.begin() + off + factors_[i]->code_len())};
                os << factors_[i]->element_str(sub);
                off += factors_[i]->code_len();
            }
            os << ")";
            break;
        }
    }
    return os.str();
}

}  // namespace mhat
