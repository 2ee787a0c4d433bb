#include "lecycles/components.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace lecycles {

namespace {

std::string basis_key(const IdealBasis& b) {
    std::string s;
    for (const auto& g : b.gens) {
        s += g.str();
        s += ";";
    }
    return s;
}

bool through_origin(const IdealBasis& b) {
    for (const auto& g : b.gens)
        if (g.constant_term() != 0) return false;
    return true;
}

// Replace generators by solving linear-in-one-variable generators of the form
// c*x_v + h (x_v absent from h) and substituting. Returns the substituted
// non-linear remainder plus the consumed linear generators.
struct Elimination {
    std::vector<Polynomial> linear;     // the consumed generators
    std::vector<Polynomial> remainder;  // generators with the variables substituted out
};

Elimination eliminate_linear(const std::vector<Polynomial>& gens_in) {
    Elimination out;
    std::vector<Polynomial> gens = gens_in;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t gi = 0; gi < gens.size(); ++gi) {
            const Polynomial& g = gens[gi];
            if (g.is_zero()) continue;
            // find a variable occurring only linearly with a constant coefficient
            for (std::size_t v = 0; v < g.nvars(); ++v) {
                if (g.degree_in(v) != 1) continue;
                Rat coeff(0);
                bool clean = true;
                for (const auto& [m, c] : g.terms()) {
                    if (m.exp(v) == 0) continue;
                    if (m.exp(v) == 1 && m.degree() == 1)
                        coeff = c;
                    else
                        clean = false;
                }
                if (!clean || coeff == 0) continue;
                // g = coeff*x_v + h  ->  x_v = -h/coeff
                Polynomial xv = Polynomial::variable(g.vars(), v);
                Polynomial h = g - xv * coeff;
                Polynomial value = h * (Rat(-1) / coeff);
                out.linear.push_back(g);
                std::vector<Polynomial> next;
                for (std::size_t gj = 0; gj < gens.size(); ++gj) {
                    if (gj == gi) continue;
                    Polynomial s = gens[gj].substitute(v, value);
                    if (!s.is_zero()) next.push_back(s.primitive_part());
                }
                gens = std::move(next);
                changed = true;
                break;
            }
            if (changed) break;
        }
    }
    out.remainder = gens;
    return out;
}

std::vector<std::size_t> used_variables(const std::vector<Polynomial>& gens) {
    if (gens.empty()) return {};
    std::vector<std::size_t> used;
    for (std::size_t v = 0; v < gens.front().nvars(); ++v)
        for (const auto& g : gens)
            if (g.degree_in(v) > 0) {
                used.push_back(v);
                break;
            }
    return used;
}

// certified prime generators for a terminal branch, or nullopt
std::optional<std::vector<Polynomial>> certify_prime(const IdealBasis& branch,
                                                     const FactorLimits& limits) {
    Elimination elim = eliminate_linear(branch.gens);
    if (elim.remainder.empty()) return elim.linear;  // linear subspace
    if (elim.remainder.size() != 1) return std::nullopt;
    const Polynomial& q = elim.remainder.front();
    if (used_variables({q}).size() > 2) return std::nullopt;
    Factorization f = factor_polynomial(q, limits);
    if (!f.complete || f.factors.size() != 1) return std::nullopt;
    // drop multiplicity: the prime carries the reduced structure
    std::vector<Polynomial> gens = elim.linear;
    gens.push_back(f.factors.front().first);
    return gens;
}

Polynomial random_linear_form(SplitMix64& rng, const VarsPtr& vars) {
    Polynomial l = Polynomial::zero(vars);
    for (std::size_t v = 0; v < vars->size(); ++v)
        l += Polynomial::variable(vars, v) * Rat(rng.nonzero(9));
    return l;
}

Colength colength_with(const IdealBasis& basis, const Polynomial& extra) {
    std::vector<Polynomial> gens = basis.gens;
    gens.push_back(extra);
    return local_colength(gens);
}

}  // namespace

long long multiplicity_at_origin(const IdealBasis& prime, const SplitConfig& config) {
    SplitMix64 rng = SplitMix64(config.seed).split(0x6d756c74);
    const VarsPtr& vars = prime.gens.front().vars();
    std::vector<long long> values;
    int draws = std::max(2, config.trials);
    for (int attempt = 0; attempt < 4 * draws; ++attempt) {
        Polynomial l = random_linear_form(rng, vars);
        Colength c = colength_with(prime, l);
        if (!c.finite) continue;
        values.push_back(c.value);
        if (values.size() < 2) continue;
        long long best = *std::min_element(values.begin(), values.end());
        if (std::count(values.begin(), values.end(), best) >= 2) return best;
        if (static_cast<int>(values.size()) >= draws &&
            std::count(values.begin(), values.end(), best) >= 2)
            return best;
    }
    throw SplitError(SplitError::Code::GenericTrialFailed,
                     "multiplicity_at_origin: generic linear form never stabilized");
}

std::optional<int> geometric_branch_count(const IdealBasis& prime) {
    const VarsPtr& vars = prime.gens.front().vars();
    std::size_t n = vars->size();
    // smooth germ: Jacobian of the generators at the origin has rank n-1
    {
        std::vector<std::vector<Rat>> rows;
        for (const auto& g : prime.gens) {
            std::vector<Rat> row;
            for (std::size_t v = 0; v < n; ++v) row.push_back(g.derivative(v).constant_term());
            rows.push_back(row);
        }
        // rank by Gaussian elimination over Q
        std::size_t rank = 0;
        for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
            std::size_t pivot = rank;
            while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
            if (pivot == rows.size()) continue;
            std::swap(rows[pivot], rows[rank]);
            for (std::size_t r = 0; r < rows.size(); ++r) {
                if (r == rank || rows[r][col] == 0) continue;
                Rat factor = rows[r][col] / rows[rank][col];
                for (std::size_t c = col; c < n; ++c) rows[r][c] -= factor * rows[rank][c];
            }
            ++rank;
        }
        if (rank == n - 1) return 1;
    }
    Elimination elim = eliminate_linear(prime.gens);
    if (elim.remainder.empty()) return 1;  // a line
    if (elim.remainder.size() != 1) return std::nullopt;
    const Polynomial& q = elim.remainder.front();
    auto used = used_variables({q});
    if (used.size() != 2) return std::nullopt;
    if (q.order_at_origin() == 1) return 1;  // smooth plane germ
    // two-term curve a*u^i + b*v^j: gcd(i, j) branches at the origin
    if (q.term_count() == 2) {
        auto it = q.terms().begin();
        const Monomial& m1 = it->first;
        const Monomial& m2 = std::next(it)->first;
        int v1 = m1.pure_variable(), v2 = m2.pure_variable();
        if (v1 >= 0 && v2 >= 0 && v1 != v2 && !m1.is_one() && !m2.is_one())
            return std::gcd(m1.degree(), m2.degree());
    }
    // homogeneous Q-irreducible binary form: that many distinct lines
    if (q.order_at_origin() == q.degree()) return q.degree();
    return std::nullopt;
}

CycleDecomposition split_components(const std::vector<Polynomial>& gens,
                                    const SplitConfig& config) {
    if (local_dimension(gens) != LocalDimension(1))
        throw SplitError(SplitError::Code::NotCurve,
                         "split_components: scheme is not one-dimensional at the origin");
    FactorLimits limits;
    limits.max_factor_degree = config.max_factor_degree;

    CycleDecomposition out;
    out.input = gens;

    // branch exploration on factorizations of generators
    std::vector<IdealBasis> work{buchberger(gens)};
    std::vector<IdealBasis> terminal;
    std::set<std::string> seen;
    bool factoring_incomplete = false;
    while (!work.empty()) {
        IdealBasis branch = std::move(work.back());
        work.pop_back();
        if (!seen.insert(basis_key(branch)).second) continue;
        if (branch.gens.empty()) continue;  // zero ideal cannot occur below a curve
        if (branch.gens.size() == 1 && branch.gens.front().is_constant()) continue;  // empty variety
        bool split = false;
        for (std::size_t gi = 0; gi < branch.gens.size() && !split; ++gi) {
            Factorization f = factor_polynomial(branch.gens[gi], limits);
            if (!f.complete) factoring_incomplete = true;
            bool nontrivial = f.factors.size() > 1 ||
                              (f.factors.size() == 1 &&
                               (f.factors.front().second > 1 ||
                                f.factors.front().first.term_count() <
                                    branch.gens[gi].term_count()));
            if (f.factors.empty() || !nontrivial) continue;
            for (const auto& [piece, exp] : f.factors) {
                std::vector<Polynomial> next;
                for (std::size_t gj = 0; gj < branch.gens.size(); ++gj)
                    if (gj != gi) next.push_back(branch.gens[gj]);
                next.push_back(piece);
                work.push_back(buchberger(next));
            }
            split = true;
        }
        if (!split) terminal.push_back(std::move(branch));
    }

    // classify terminal branches
    std::vector<IdealBasis> candidates;
    for (auto& branch : terminal) {
        if (!through_origin(branch)) {
            out.discarded.push_back(std::move(branch));
            continue;
        }
        LocalDimension dim = local_dimension(branch.gens);
        if (!dim.has_value() || *dim == 0) {
            out.discarded.push_back(std::move(branch));
            continue;
        }
        if (*dim != 1) {
            out.residual.push_back(std::move(branch));
            continue;
        }
        auto prime_gens = certify_prime(branch, limits);
        if (!prime_gens) {
            out.residual.push_back(std::move(branch));
            continue;
        }
        IdealBasis prime = buchberger(*prime_gens);
        if (std::none_of(candidates.begin(), candidates.end(), [&](const IdealBasis& c) {
                return c.gens == prime.gens;
            }))
            candidates.push_back(std::move(prime));
    }
    out.complete = out.residual.empty() && !factoring_incomplete;

    // merge candidates with the same variety (mutual radical membership)
    std::vector<IdealBasis> primes;
    for (const auto& cand : candidates) {
        bool dup = false;
        for (const auto& kept : primes) {
            bool fwd = std::all_of(cand.gens.begin(), cand.gens.end(), [&](const Polynomial& g) {
                return radical_membership(g, kept);
            });
            bool bwd = std::all_of(kept.gens.begin(), kept.gens.end(), [&](const Polynomial& g) {
                return radical_membership(g, cand);
            });
            if (fwd && bwd) {
                dup = true;
                break;
            }
        }
        if (!dup) primes.push_back(cand);
    }

    // multiplicities at the origin
    std::vector<long long> mult;
    for (const auto& p : primes) mult.push_back(multiplicity_at_origin(p, config));

    // isolate each component in the input scheme by saturation
    IdealBasis input_basis = buchberger(gens);
    SplitMix64 rng = SplitMix64(config.seed).split(0x6c656e73);
    std::vector<IdealBasis> isolated;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        IdealBasis q = input_basis;
        for (std::size_t j = 0; j < primes.size(); ++j) {
            if (j == i) continue;
            const Polynomial* h = nullptr;
            for (const auto& g : primes[j].gens)
                if (!radical_membership(g, primes[i])) {
                    h = &g;
                    break;
                }
            if (!h)
                throw SplitError(SplitError::Code::GenericTrialFailed,
                                 "split_components: could not separate components");
            q = saturate(q, *h);
        }
        // remove primary components embedded at the origin
        for (int attempt = 0;; ++attempt) {
            if (attempt >= 4 * config.trials)
                throw SplitError(SplitError::Code::GenericTrialFailed,
                                 "split_components: no linear form avoids the component");
            Polynomial l0 = random_linear_form(rng, gens.front().vars());
            if (radical_membership(l0, primes[i])) continue;
            bool hits_other = false;
            for (std::size_t j = 0; j < primes.size() && !hits_other; ++j)
                if (j != i && radical_membership(l0, primes[j])) hits_other = true;
            if (hits_other) continue;
            q = saturate(q, l0);
            break;
        }
        isolated.push_back(std::move(q));
    }

    // lengths as intersection ratios against a verified-generic linear form;
    // two independent draws must agree
    std::vector<long long> lengths(primes.size(), 0);
    if (!primes.empty()) {
        std::vector<std::vector<long long>> agreed;
        for (int attempt = 0; attempt < 8 * config.trials; ++attempt) {
            Polynomial l = random_linear_form(rng, gens.front().vars());
            std::vector<long long> draw;
            bool ok = true;
            for (std::size_t i = 0; i < primes.size() && ok; ++i) {
                Colength den = colength_with(primes[i], l);
                if (!den.finite || den.value != mult[i]) {
                    ok = false;
                    break;
                }
                Colength num = colength_with(isolated[i], l);
                if (!num.finite || num.value % den.value != 0) {
                    ok = false;
                    break;
                }
                draw.push_back(num.value / den.value);
            }
            if (!ok) continue;
            agreed.push_back(draw);
            if (agreed.size() >= 2 && agreed[agreed.size() - 1] == agreed[agreed.size() - 2]) {
                lengths = draw;
                break;
            }
        }
        if (agreed.size() < 2 || lengths == std::vector<long long>(primes.size(), 0))
            throw SplitError(SplitError::Code::GenericTrialFailed,
                             "split_components: generic transversal never stabilized");
    }

    for (std::size_t i = 0; i < primes.size(); ++i) {
        CurveComponent c;
        c.prime = primes[i];
        c.length = lengths[i];
        c.mult_origin = mult[i];
        c.branches = geometric_branch_count(primes[i]);
        out.components.push_back(std::move(c));
    }
    // canonical order for reproducible reports
    std::sort(out.components.begin(), out.components.end(),
              [](const CurveComponent& a, const CurveComponent& b) {
                  return basis_key(a.prime) < basis_key(b.prime);
              });
    return out;
}

}  // namespace lecycles
