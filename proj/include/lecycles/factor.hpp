#pragma once

#include <utility>
#include <vector>

#include "lecycles/polynomial.hpp"

namespace lecycles {

/// content * prod(factors[i]^e_i) == input. Factors are primitive integer
/// polynomials with positive leading coefficient, irreducible over Q.
struct UnivariateFactorization {
    Rat content;
    std::vector<std::pair<Polynomial, int>> factors;
};

/// Exact factorization over Q of a polynomial in (at most) one variable.
/// Throws std::invalid_argument for the zero polynomial or if two or more
/// variables occur.
UnivariateFactorization univariate_factor(const Polynomial& p);

struct FactorLimits {
    int max_factor_degree = 6;     // candidate factors above this degree are not searched
    int max_image_degree = 96;     // Kronecker image degree cap
    long max_candidates = 200000;  // cap on recombination candidates
};

/// unit * prod(factors[i]^e_i) == input; factors primitive with positive
/// degrevlex-leading coefficient. `complete` is false when a returned factor
/// could not be certified irreducible within the limits.
struct Factorization {
    Rat unit;
    std::vector<std::pair<Polynomial, int>> factors;
    bool complete = true;
};

/// Multivariate factorization over Q: monomial content, then univariate or
/// Kronecker-substitution splitting.
Factorization factor_polynomial(const Polynomial& p, const FactorLimits& limits = {});

/// Exact multivariate division; std::nullopt when not divisible.
std::optional<Polynomial> try_divide(const Polynomial& numerator, const Polynomial& divisor);

}  // namespace lecycles
