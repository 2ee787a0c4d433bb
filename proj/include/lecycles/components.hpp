#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "lecycles/factor.hpp"
#include "lecycles/ideal.hpp"

namespace lecycles {

struct SplitConfig {
    int max_factor_degree = 6;  // factor search bound during branch splitting
    int trials = 4;             // generic linear-form draws before giving up
    std::uint64_t seed = 0;
};

/// One Q-irreducible one-dimensional component through the origin.
struct CurveComponent {
    IdealBasis prime;                     // reduced global basis of the prime ideal
    long long length = 1;                 // multiplicity in the ambient scheme cycle
    long long mult_origin = 1;            // multiplicity of the curve at the origin
    std::optional<int> branches;          // number of C-branches; nullopt = unknown
};

struct CycleDecomposition {
    std::vector<CurveComponent> components;
    std::vector<Polynomial> input;          // the decomposed generators (check data)
    std::vector<IdealBasis> discarded;      // branches away from the origin (diagnostics)
    std::vector<IdealBasis> residual;       // branches that could not be certified
    bool complete = true;                   // false iff residual is nonempty
};

struct SplitError : std::runtime_error {
    enum class Code { NotCurve, GenericTrialFailed };
    SplitError(Code code, const std::string& what) : std::runtime_error(what), code(code) {}
    Code code;
};

/// Split a one-dimensional scheme at the origin into components with their
/// cycle multiplicities. Branches that resist factoring or certification are
/// returned in `residual` (with complete = false) rather than guessed.
CycleDecomposition split_components(const std::vector<Polynomial>& gens,
                                    const SplitConfig& config = {});

/// mult_0 of a curve: stabilized minimum of colength(prime + (l)) over random
/// linear forms l.
long long multiplicity_at_origin(const IdealBasis& prime, const SplitConfig& config = {});

/// Number of C-irreducible branches of a Q-irreducible curve through the
/// origin, when the structure forces it (smooth germ, two-variable binomial,
/// or homogeneous binary form); std::nullopt otherwise.
std::optional<int> geometric_branch_count(const IdealBasis& prime);

}  // namespace lecycles
