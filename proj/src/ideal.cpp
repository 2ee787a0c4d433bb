#include "lecycles/ideal.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <tuple>

namespace lecycles {

namespace {

// Internal term order: the two public kinds plus the block order used for
// elimination of one trailing auxiliary variable.
struct TermOrder {
    enum class Kind { Global, Local, ElimLast } kind = Kind::Global;

    std::strong_ordering cmp(const Monomial& a, const Monomial& b) const {
        switch (kind) {
            case Kind::Global:
                return compare(a, b, OrderKind::GlobalDegRevLex);
            case Kind::Local:
                return compare(a, b, OrderKind::LocalNegDegRevLex);
            case Kind::ElimLast: {
                int ta = a.exp(a.nvars() - 1), tb = b.exp(b.nvars() - 1);
                if (ta != tb) return ta > tb ? std::strong_ordering::greater : std::strong_ordering::less;
                return compare(a, b, OrderKind::GlobalDegRevLex);
            }
        }
        return std::strong_ordering::equal;
    }
    bool less(const Monomial& a, const Monomial& b) const {
        return cmp(a, b) == std::strong_ordering::less;
    }
    bool is_global() const { return kind != Kind::Local; }
};

const std::pair<const Monomial, Rat>* lead(const Polynomial& p, const TermOrder& ord) {
    const std::pair<const Monomial, Rat>* best = nullptr;
    for (const auto& t : p.terms())
        if (!best || ord.less(best->first, t.first)) best = &t;
    return best;
}

int ecart(const Polynomial& p, const TermOrder& ord) {
    return p.degree() - lead(p, ord)->first.degree();
}

Polynomial make_monic(const Polynomial& p, const TermOrder& ord) {
    const auto* lt = lead(p, ord);
    if (!lt || lt->second == 1) return p;
    return p * (1 / lt->second);
}

Polynomial spoly(const Polynomial& f, const Polynomial& g, const TermOrder& ord) {
    const auto* lf = lead(f, ord);
    const auto* lg = lead(g, ord);
    Monomial l = Monomial::lcm(lf->first, lg->first);
    Polynomial s = f.vars() ? Polynomial::zero(f.vars()) : f;
    s.add_scaled(1 / lf->second, l.quotient(lf->first), f);
    s.add_scaled(Rat(-1) / lg->second, l.quotient(lg->first), g);
    return s;
}

// Top-reduction against G; the result is only meaningful up to a positive
// scalar (it gets normalized by the caller), so intermediates are kept
// primitive to control coefficient growth.
Polynomial top_reduce(Polynomial h, const std::vector<Polynomial>& basis, const TermOrder& ord) {
    while (!h.is_zero()) {
        const auto* lt = lead(h, ord);
        const Polynomial* reducer = nullptr;
        for (const auto& g : basis) {
            const auto* lg = lead(g, ord);
            if (lg && lg->first.divides(lt->first)) {
                reducer = &g;
                break;
            }
        }
        if (!reducer) break;
        const auto* lg = lead(*reducer, ord);
        h.add_scaled(-lt->second / lg->second, lt->first.quotient(lg->first), *reducer);
        if (!h.is_zero()) h = h.primitive_part();
    }
    return h;
}

// Full normal form (global orders only: the tail loop needs a well-order).
Polynomial full_nf(const Polynomial& f, const std::vector<Polynomial>& basis,
                   const TermOrder& ord) {
    Polynomial h = f;
    Polynomial result = Polynomial::zero(f.vars());
    while (!h.is_zero()) {
        const auto* lt = lead(h, ord);
        const Polynomial* reducer = nullptr;
        for (const auto& g : basis) {
            const auto* lg = lead(g, ord);
            if (lg && lg->first.divides(lt->first)) {
                reducer = &g;
                break;
            }
        }
        if (reducer) {
            const auto* lg = lead(*reducer, ord);
            h.add_scaled(-lt->second / lg->second, lt->first.quotient(lg->first), *reducer);
        } else {
            result += Polynomial::term(f.vars(), lt->first, lt->second);
            h -= Polynomial::term(f.vars(), lt->first, lt->second);
        }
    }
    return result;
}

struct Pair {
    std::size_t i, j;
    Monomial lcm;
};

// deterministic pair selection: smallest lcm degree, then smallest lcm in the
// order, then indices
std::size_t pop_best_pair(std::vector<Pair>& pairs, const TermOrder& ord) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
        const Pair& a = pairs[k];
        const Pair& b = pairs[best];
        int da = a.lcm.degree(), db = b.lcm.degree();
        bool better;
        if (da != db)
            better = da < db;
        else if (a.lcm != b.lcm)
            better = ord.less(a.lcm, b.lcm);
        else
            better = std::tie(a.i, a.j) < std::tie(b.i, b.j);
        if (better) best = k;
    }
    return best;
}

// Minimal basis: drop elements whose leading monomial is divisible by the
// leading monomial of another kept element. Sorting by total degree puts
// divisors before their multiples for global and local orders alike.
std::vector<Polynomial> minimalize(std::vector<Polynomial> basis, const TermOrder& ord) {
    std::stable_sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
        return order_less(lead(a, ord)->first, lead(b, ord)->first, OrderKind::GlobalDegRevLex);
    });
    std::vector<Polynomial> kept;
    for (const auto& g : basis) {
        const Monomial& lm = lead(g, ord)->first;
        bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Polynomial& k) {
            return lead(k, ord)->first.divides(lm);
        });
        if (!redundant) kept.push_back(g);
    }
    return kept;
}

std::vector<Polynomial> buchberger_engine(std::vector<Polynomial> gens, const TermOrder& ord) {
    std::vector<Polynomial> basis;
    for (auto& g : gens)
        if (!g.is_zero()) basis.push_back(make_monic(g.primitive_part(), ord));
    if (basis.empty()) return basis;

    std::vector<Pair> pairs;
    auto queue_pairs_with = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i)
            pairs.push_back({i, j, Monomial::lcm(lead(basis[i], ord)->first,
                                                 lead(basis[j], ord)->first)});
    };
    for (std::size_t j = 1; j < basis.size(); ++j) queue_pairs_with(j);

    while (!pairs.empty()) {
        std::size_t k = pop_best_pair(pairs, ord);
        Pair pr = pairs[k];
        pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(k));
        const Monomial& li = lead(basis[pr.i], ord)->first;
        const Monomial& lj = lead(basis[pr.j], ord)->first;
        if (Monomial::coprime(li, lj)) continue;  // product criterion
        Polynomial r = top_reduce(spoly(basis[pr.i], basis[pr.j], ord), basis, ord);
        if (r.is_zero()) continue;
        basis.push_back(make_monic(r, ord));
        queue_pairs_with(basis.size() - 1);
    }

    basis = minimalize(std::move(basis), ord);
    // tail interreduction: leading monomials are pairwise non-divisible, so a
    // single pass yields the reduced basis
    std::vector<Polynomial> reduced;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        std::vector<Polynomial> others;
        for (std::size_t j = 0; j < basis.size(); ++j)
            if (j != i) others.push_back(basis[j]);
        reduced.push_back(make_monic(full_nf(basis[i], others, ord), ord));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ord.less(lead(a, ord)->first, lead(b, ord)->first);
    });
    return reduced;
}

Polynomial mora_nf(Polynomial h, std::vector<Polynomial> reducers, const TermOrder& ord) {
    while (!h.is_zero()) {
        const Monomial lm = lead(h, ord)->first;
        const Rat lc = lead(h, ord)->second;
        std::ptrdiff_t chosen = -1;
        int chosen_ecart = 0;
        for (std::size_t k = 0; k < reducers.size(); ++k) {
            if (!lead(reducers[k], ord)->first.divides(lm)) continue;
            int e = ecart(reducers[k], ord);
            if (chosen < 0 || e < chosen_ecart) {
                chosen = static_cast<std::ptrdiff_t>(k);
                chosen_ecart = e;
            }
        }
        if (chosen < 0) break;
        if (chosen_ecart > ecart(h, ord)) reducers.push_back(h);
        const Polynomial& g = reducers[static_cast<std::size_t>(chosen)];
        const auto* lg = lead(g, ord);
        h.add_scaled(-lc / lg->second, lm.quotient(lg->first), g);
        if (!h.is_zero()) h = h.primitive_part();
    }
    return h;
}

std::vector<Polynomial> mora_engine(std::vector<Polynomial> gens) {
    TermOrder ord{TermOrder::Kind::Local};
    std::vector<Polynomial> basis;
    for (auto& g : gens)
        if (!g.is_zero()) basis.push_back(make_monic(g.primitive_part(), ord));
    if (basis.empty()) return basis;

    std::vector<Pair> pairs;
    auto queue_pairs_with = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i)
            pairs.push_back({i, j, Monomial::lcm(lead(basis[i], ord)->first,
                                                 lead(basis[j], ord)->first)});
    };
    for (std::size_t j = 1; j < basis.size(); ++j) queue_pairs_with(j);

    while (!pairs.empty()) {
        std::size_t k = pop_best_pair(pairs, ord);
        Pair pr = pairs[k];
        pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(k));
        // no product criterion here: it is not valid for local orders
        Polynomial r = mora_nf(spoly(basis[pr.i], basis[pr.j], ord), basis, ord);
        if (r.is_zero()) continue;
        basis.push_back(make_monic(r, ord));
        queue_pairs_with(basis.size() - 1);
    }

    basis = minimalize(std::move(basis), ord);
    std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ord.less(lead(a, ord)->first, lead(b, ord)->first);
    });
    return basis;
}

// fresh auxiliary variable name not clashing with the ambient ones
std::string fresh_var_name(const Vars& vars) {
    std::string name = "t_";
    while (std::find(vars.begin(), vars.end(), name) != vars.end()) name += "_";
    return name;
}

// exact division by a single polynomial (global order); throws if not exact
Polynomial exact_divide(const Polynomial& h, const Polynomial& g, const TermOrder& ord) {
    Polynomial rem = h;
    Polynomial quot = Polynomial::zero(h.vars());
    const auto* lg = lead(g, ord);
    while (!rem.is_zero()) {
        const auto* lt = lead(rem, ord);
        if (!lg->first.divides(lt->first))
            throw std::logic_error("exact_divide: division is not exact");
        Rat c = lt->second / lg->second;
        Monomial m = lt->first.quotient(lg->first);
        quot += Polynomial::term(h.vars(), m, c);
        rem.add_scaled(-c, m, g);
    }
    return quot;
}

// run an elimination Groebner basis over vars + t and return the t-free part
std::vector<Polynomial> eliminate_aux(const std::vector<Polynomial>& gens_ext,
                                      const VarsPtr& ambient) {
    TermOrder ord{TermOrder::Kind::ElimLast};
    std::vector<Polynomial> gb = buchberger_engine(gens_ext, ord);
    std::vector<Polynomial> kept;
    for (const auto& g : gb) {
        bool uses_t = false;
        for (const auto& [m, c] : g.terms())
            if (m.exp(m.nvars() - 1) != 0) uses_t = true;
        if (!uses_t) kept.push_back(restrict_vars(g, ambient));
    }
    return kept;
}

}  // namespace

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       OrderKind order) {
    if (order != OrderKind::GlobalDegRevLex)
        throw std::invalid_argument("normal_form requires a global order");
    std::vector<Polynomial> nonzero;
    for (const auto& g : basis)
        if (!g.is_zero()) nonzero.push_back(g);
    return full_nf(f, nonzero, TermOrder{TermOrder::Kind::Global});
}

IdealBasis buchberger(const std::vector<Polynomial>& gens) {
    IdealBasis out;
    out.order = OrderKind::GlobalDegRevLex;
    out.gens = buchberger_engine(gens, TermOrder{TermOrder::Kind::Global});
    out.reduced = true;
    return out;
}

IdealBasis mora_standard_basis(const std::vector<Polynomial>& gens) {
    IdealBasis out;
    out.order = OrderKind::LocalNegDegRevLex;
    out.gens = mora_engine(gens);
    out.reduced = true;  // minimal; see IdealBasis docs
    return out;
}

Polynomial mora_weak_normal_form(const Polynomial& f, const std::vector<Polynomial>& basis) {
    std::vector<Polynomial> nonzero;
    for (const auto& g : basis)
        if (!g.is_zero()) nonzero.push_back(g);
    return mora_nf(f, std::move(nonzero), TermOrder{TermOrder::Kind::Local});
}

std::vector<Monomial> leading_monomials(const IdealBasis& basis) {
    TermOrder ord{basis.order == OrderKind::GlobalDegRevLex ? TermOrder::Kind::Global
                                                            : TermOrder::Kind::Local};
    std::vector<Monomial> lms;
    for (const auto& g : basis.gens)
        if (!g.is_zero()) lms.push_back(lead(g, ord)->first);
    return lms;
}

Colength staircase_count(const std::vector<Monomial>& lms, std::size_t nvars) {
    for (const auto& m : lms)
        if (m.is_one()) return Colength::of(0);
    // finite iff the leading ideal contains a pure power of every variable
    std::vector<int> box(nvars, -1);
    for (const auto& m : lms) {
        int v = m.pure_variable();
        if (v < 0) continue;
        int e = m.exp(static_cast<std::size_t>(v));
        if (box[static_cast<std::size_t>(v)] < 0 || e < box[static_cast<std::size_t>(v)])
            box[static_cast<std::size_t>(v)] = e;
    }
    for (std::size_t i = 0; i < nvars; ++i)
        if (box[i] < 0) return Colength::inf();

    long long count = 0;
    std::vector<int> exps(nvars, 0);
    // odometer over the box, skipping multiples of leading monomials
    while (true) {
        Monomial m{std::vector<int>(exps)};
        bool in_ideal = std::any_of(lms.begin(), lms.end(),
                                    [&](const Monomial& l) { return l.divides(m); });
        if (!in_ideal) ++count;
        std::size_t i = 0;
        while (i < nvars) {
            if (++exps[i] < box[i]) break;
            exps[i] = 0;
            ++i;
        }
        if (i == nvars) break;
    }
    return Colength::of(count);
}

int staircase_dimension(const std::vector<Monomial>& lms, std::size_t nvars) {
    for (const auto& m : lms)
        if (m.is_one()) throw std::invalid_argument("staircase_dimension: unit ideal");
    int best = 0;
    for (std::uint64_t mask = 0; mask < (1ULL << nvars); ++mask) {
        // S = variables in mask; valid iff no leading monomial is supported inside S
        bool valid = true;
        for (const auto& m : lms) {
            bool inside = true;
            for (std::size_t i = 0; i < nvars; ++i)
                if (m.exp(i) > 0 && !(mask & (1ULL << i))) inside = false;
            if (inside) {
                valid = false;
                break;
            }
        }
        if (valid) best = std::max(best, static_cast<int>(std::popcount(mask)));
    }
    return best;
}

Colength local_colength(const std::vector<Polynomial>& gens) {
    std::vector<Polynomial> nonzero;
    for (const auto& g : gens)
        if (!g.is_zero()) nonzero.push_back(g);
    if (nonzero.empty()) return Colength::inf();
    IdealBasis sb = mora_standard_basis(nonzero);
    return staircase_count(leading_monomials(sb), nonzero.front().nvars());
}

LocalDimension local_dimension(const std::vector<Polynomial>& gens) {
    std::vector<Polynomial> nonzero;
    std::size_t nvars = 0;
    for (const auto& g : gens) {
        nvars = g.nvars();
        if (!g.is_zero()) nonzero.push_back(g);
    }
    if (nonzero.empty()) return static_cast<int>(nvars);
    IdealBasis sb = mora_standard_basis(nonzero);
    auto lms = leading_monomials(sb);
    for (const auto& m : lms)
        if (m.is_one()) return std::nullopt;  // unit ideal: empty germ
    return staircase_dimension(lms, nonzero.front().nvars());
}

namespace {

struct AuxExtension {
    VarsPtr ext;
    Polynomial t;
    AuxExtension(const VarsPtr& ambient)
        : ext(nullptr), t(Polynomial::zero(ambient)) {
        Vars names = *ambient;
        names.push_back(fresh_var_name(*ambient));
        ext = make_vars(std::move(names));
        t = Polynomial::variable(ext, ext->size() - 1);
    }
};

}  // namespace

IdealBasis ideal_quotient(const IdealBasis& ideal, const Polynomial& g) {
    if (g.is_zero()) throw std::invalid_argument("ideal_quotient: divisor is zero");
    std::vector<Polynomial> nonzero;
    for (const auto& f : ideal.gens)
        if (!f.is_zero()) nonzero.push_back(f);
    if (nonzero.empty()) return buchberger({});
    const VarsPtr& ambient = nonzero.front().vars();
    // I cap (g) via the t-block order, then divide by g
    AuxExtension aux(ambient);
    std::vector<Polynomial> ext_gens;
    for (const auto& f : nonzero) ext_gens.push_back(aux.t * extend_vars(f, aux.ext));
    Polynomial one = Polynomial::constant(aux.ext, Rat(1));
    ext_gens.push_back((one - aux.t) * extend_vars(g, aux.ext));
    std::vector<Polynomial> intersection = eliminate_aux(ext_gens, ambient);
    TermOrder ord{TermOrder::Kind::Global};
    std::vector<Polynomial> quotients;
    for (const auto& h : intersection) quotients.push_back(exact_divide(h, g, ord));
    return buchberger(quotients);
}

IdealBasis saturate(const IdealBasis& ideal, const Polynomial& g) {
    if (g.is_zero()) throw std::invalid_argument("saturate: divisor is zero");
    std::vector<Polynomial> nonzero;
    for (const auto& f : ideal.gens)
        if (!f.is_zero()) nonzero.push_back(f);
    if (nonzero.empty()) return buchberger({});
    if (g.is_constant()) return buchberger(nonzero);
    const VarsPtr& ambient = nonzero.front().vars();
    AuxExtension aux(ambient);
    std::vector<Polynomial> ext_gens;
    for (const auto& f : nonzero) ext_gens.push_back(extend_vars(f, aux.ext));
    Polynomial one = Polynomial::constant(aux.ext, Rat(1));
    ext_gens.push_back(one - aux.t * extend_vars(g, aux.ext));
    return buchberger(eliminate_aux(ext_gens, ambient));
}

bool radical_membership(const Polynomial& p, const IdealBasis& ideal) {
    if (p.is_zero()) return true;
    const VarsPtr& ambient = p.vars();
    AuxExtension aux(ambient);
    std::vector<Polynomial> ext_gens;
    for (const auto& f : ideal.gens)
        if (!f.is_zero()) ext_gens.push_back(extend_vars(f, aux.ext));
    Polynomial one = Polynomial::constant(aux.ext, Rat(1));
    ext_gens.push_back(one - aux.t * extend_vars(p, aux.ext));
    std::vector<Polynomial> gb = buchberger_engine(ext_gens, TermOrder{TermOrder::Kind::Global});
    return std::any_of(gb.begin(), gb.end(),
                       [](const Polynomial& g) { return g.is_constant() && !g.is_zero(); });
}

bool ideal_contains(const IdealBasis& ideal, const Polynomial& p) {
    if (ideal.order != OrderKind::GlobalDegRevLex || !ideal.reduced)
        throw std::invalid_argument("ideal_contains expects a reduced global basis");
    return normal_form(p, ideal.gens).is_zero();
}

}  // namespace lecycles
