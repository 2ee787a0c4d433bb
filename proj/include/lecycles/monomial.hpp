#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace lecycles {

/// A monomial as a dense exponent vector over a fixed ambient variable list.
/// The vector length is fixed at construction.
class Monomial {
public:
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
    explicit Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
        for (int e : exps_)
            if (e < 0) throw std::invalid_argument("monomial exponent must be >= 0");
    }

    std::size_t nvars() const { return exps_.size(); }
    int exp(std::size_t i) const { return exps_.at(i); }
    const std::vector<int>& exps() const { return exps_; }

    int degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }
    bool is_one() const {
        return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
    }
    // pure power of a single variable (or 1); returns the variable index or -1
    int pure_variable() const {
        int idx = -1;
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > 0) {
                if (idx >= 0) return -1;
                idx = static_cast<int>(i);
            }
        return idx;
    }

    bool divides(const Monomial& m) const {
        check_arity(m);
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > m.exps_[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial& m) const {
        check_arity(m);
        std::vector<int> r(exps_);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] += m.exps_[i];
        return Monomial(std::move(r));
    }

    // this / m; pre: m.divides(*this)
    Monomial quotient(const Monomial& m) const {
        check_arity(m);
        std::vector<int> r(exps_);
        for (std::size_t i = 0; i < r.size(); ++i) {
            r[i] -= m.exps_[i];
            if (r[i] < 0) throw std::invalid_argument("monomial quotient: not divisible");
        }
        return Monomial(std::move(r));
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        a.check_arity(b);
        std::vector<int> r(a.exps_);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::max(r[i], b.exps_[i]);
        return Monomial(std::move(r));
    }

    static bool coprime(const Monomial& a, const Monomial& b) {
        a.check_arity(b);
        for (std::size_t i = 0; i < a.exps_.size(); ++i)
            if (a.exps_[i] > 0 && b.exps_[i] > 0) return false;
        return true;
    }

    // structural order (map key order, not a monomial order)
    auto operator<=>(const Monomial&) const = default;

private:
    void check_arity(const Monomial& m) const {
        if (exps_.size() != m.exps_.size())
            throw std::invalid_argument("monomial arity mismatch");
    }
    std::vector<int> exps_;
};

enum class OrderKind {
    GlobalDegRevLex,   // well-order; 1 is the smallest monomial
    LocalNegDegRevLex  // local order; 1 is the largest monomial
};

// degrevlex tie-break at equal total degree: the monomial whose last
// nonzero exponent difference is negative is the larger one
inline std::strong_ordering revlex_tie(const Monomial& a, const Monomial& b) {
    for (std::size_t i = a.nvars(); i-- > 0;) {
        int d = a.exp(i) - b.exp(i);
        if (d != 0) return d < 0 ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
}

inline std::strong_ordering compare(const Monomial& a, const Monomial& b, OrderKind order) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("monomial arity mismatch");
    int da = a.degree(), db = b.degree();
    if (da != db) {
        bool a_larger = (order == OrderKind::GlobalDegRevLex) ? da > db : da < db;
        return a_larger ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return revlex_tie(a, b);
}

inline bool order_less(const Monomial& a, const Monomial& b, OrderKind order) {
    return compare(a, b, order) == std::strong_ordering::less;
}

}  // namespace lecycles
