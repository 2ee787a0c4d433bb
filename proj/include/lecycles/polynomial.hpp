#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lecycles/monomial.hpp"
#include "lecycles/numeric.hpp"

namespace lecycles {

using Vars = std::vector<std::string>;
using VarsPtr = std::shared_ptr<const Vars>;

inline VarsPtr make_vars(Vars names) {
    return std::make_shared<const Vars>(std::move(names));
}

/// Exact multivariate polynomial over the rationals.
///
/// Canonical form: the term map never stores a zero coefficient, so two
/// polynomials are equal iff their term maps are equal. The variable list is
/// fixed at construction; index 0 is the distinguished generic coordinate.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rat>;

    explicit Polynomial(VarsPtr vars) : vars_(std::move(vars)) {}

    static Polynomial zero(VarsPtr vars) { return Polynomial(std::move(vars)); }
    static Polynomial constant(VarsPtr vars, const Rat& c);
    static Polynomial variable(VarsPtr vars, std::size_t index);
    static Polynomial term(VarsPtr vars, Monomial m, const Rat& c);

    const VarsPtr& vars() const { return vars_; }
    std::size_t nvars() const { return vars_->size(); }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }

    // coefficient of the constant monomial (value at the origin)
    Rat constant_term() const;
    Rat coeff(const Monomial& m) const;

    // max total degree over terms; -1 for the zero polynomial
    int degree() const;
    // min total degree over terms (the order of vanishing at 0); -1 for zero
    int order_at_origin() const;
    // max exponent of one variable; -1 for zero meaningless, 0 if absent
    int degree_in(std::size_t var) const;
    bool uses_variable(std::size_t var) const { return degree_in(var) > 0; }

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& q) const;
    Polynomial operator-(const Polynomial& q) const;
    Polynomial operator*(const Polynomial& q) const;
    Polynomial operator*(const Rat& c) const;
    Polynomial& operator+=(const Polynomial& q);
    Polynomial& operator-=(const Polynomial& q);

    bool operator==(const Polynomial& q) const;
    bool operator!=(const Polynomial& q) const { return !(*this == q); }

    Polynomial derivative(std::size_t var) const;
    Polynomial substitute(std::size_t var, const Polynomial& q) const;
    Polynomial pow(unsigned e) const;

    // leading term w.r.t. a monomial order; nullptr for the zero polynomial
    const std::pair<const Monomial, Rat>* leading_term(OrderKind order) const;
    const Monomial& leading_monomial(OrderKind order) const;

    // écart for Mora reduction: degree() - degree(leading monomial)
    int ecart(OrderKind order) const;

    // positive rational c with (1/c)*p integral and primitive; 0 for the zero poly
    Rat content() const;
    Polynomial primitive_part() const;
    // scale so the leading coefficient w.r.t. `order` is 1
    Polynomial monic(OrderKind order) const;

    // add c * m * q  (fused update used by reduction loops)
    void add_scaled(const Rat& c, const Monomial& m, const Polynomial& q);

    // grammar-compatible printing; terms in descending GlobalDegRevLex order
    std::string str() const;

private:
    void insert_term(const Monomial& m, const Rat& c);
    void check_same_vars(const Polynomial& q) const;

    VarsPtr vars_;
    TermMap terms_;
};

inline Polynomial operator*(const Rat& c, const Polynomial& p) { return p * c; }

bool same_vars(const VarsPtr& a, const VarsPtr& b);

// lift p to a variable list that starts with p's own variables
Polynomial extend_vars(const Polynomial& p, const VarsPtr& bigger);
// drop trailing variables (all must be unused in p)
Polynomial restrict_vars(const Polynomial& p, const VarsPtr& smaller);

}  // namespace lecycles
