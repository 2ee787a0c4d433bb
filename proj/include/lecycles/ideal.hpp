#pragma once

#include <optional>
#include <vector>

#include "lecycles/polynomial.hpp"

namespace lecycles {

/// A generating set together with its monomial order.
///
/// `reduced` means: leading coefficients are 1 and no generator's leading
/// monomial divides a monomial of another generator. For the global order this
/// is the unique reduced Groebner basis. For the local order, full tail
/// reduction need not terminate on polynomial data, so `reduced` there means
/// the basis is minimal (monic, leading monomials pairwise non-divisible); the
/// leading ideal, colength and dimension are unaffected by this weakening.
struct IdealBasis {
    std::vector<Polynomial> gens;
    OrderKind order = OrderKind::GlobalDegRevLex;
    bool reduced = false;
};

struct Colength {
    bool finite = false;
    long long value = 0;  // meaningful iff finite
    static Colength inf() { return {false, 0}; }
    static Colength of(long long v) { return {true, v}; }
    bool operator==(const Colength&) const = default;
};

/// Local Krull dimension at the origin; std::nullopt means the germ is empty
/// (1 lies in the leading ideal).
using LocalDimension = std::optional<int>;

/// Fully reduced normal form w.r.t. a global order (top and tail reduction).
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       OrderKind order = OrderKind::GlobalDegRevLex);

/// Reduced Groebner basis, GlobalDegRevLex. Zero generators are dropped; the
/// zero ideal yields an empty generator list.
IdealBasis buchberger(const std::vector<Polynomial>& gens);

/// Minimal standard basis for the localization at the origin (Mora's
/// algorithm with ecart-minimal reducer selection, first-found tie-break).
IdealBasis mora_standard_basis(const std::vector<Polynomial>& gens);

/// Mora weak normal form against a standard basis: u*f = sum q_i g_i + r with
/// u a local unit and lead(r) outside the leading ideal. Membership in the
/// localized ideal is r == 0.
Polynomial mora_weak_normal_form(const Polynomial& f, const std::vector<Polynomial>& basis);

std::vector<Monomial> leading_monomials(const IdealBasis& basis);

/// Vector-space dimension of the local quotient ring at the origin, counted
/// from the standard-basis staircase.
Colength local_colength(const std::vector<Polynomial>& gens);

LocalDimension local_dimension(const std::vector<Polynomial>& gens);

/// (I : g) as a reduced global basis.
IdealBasis ideal_quotient(const IdealBasis& ideal, const Polynomial& g);

/// (I : g^inf) as a reduced global basis.
IdealBasis saturate(const IdealBasis& ideal, const Polynomial& g);

/// True iff p vanishes identically on V(I), via 1 in I + (1 - t*p).
bool radical_membership(const Polynomial& p, const IdealBasis& ideal);

/// Ideal membership against a reduced global basis.
bool ideal_contains(const IdealBasis& ideal, const Polynomial& p);

/// Staircase helpers (exposed for the test-side counting oracles).
Colength staircase_count(const std::vector<Monomial>& lms, std::size_t nvars);
int staircase_dimension(const std::vector<Monomial>& lms, std::size_t nvars);

}  // namespace lecycles
