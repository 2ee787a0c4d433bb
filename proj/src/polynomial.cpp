#include "lecycles/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lecycles {

bool same_vars(const VarsPtr& a, const VarsPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

void Polynomial::check_same_vars(const Polynomial& q) const {
    if (!same_vars(vars_, q.vars_))
        throw std::invalid_argument("polynomial variable lists differ");
}

Polynomial Polynomial::constant(VarsPtr vars, const Rat& c) {
    Polynomial p(vars);
    if (c != 0) p.terms_.emplace(Monomial(vars->size()), c);
    return p;
}

Polynomial Polynomial::variable(VarsPtr vars, std::size_t index) {
    if (index >= vars->size()) throw std::out_of_range("variable index out of range");
    std::vector<int> e(vars->size(), 0);
    e[index] = 1;
    Polynomial p(vars);
    p.terms_.emplace(Monomial(std::move(e)), Rat(1));
    return p;
}

Polynomial Polynomial::term(VarsPtr vars, Monomial m, const Rat& c) {
    if (m.nvars() != vars->size()) throw std::invalid_argument("monomial arity mismatch");
    Polynomial p(vars);
    if (c != 0) p.terms_.emplace(std::move(m), c);
    return p;
}

Rat Polynomial::constant_term() const {
    auto it = terms_.find(Monomial(nvars()));
    return it == terms_.end() ? Rat(0) : it->second;
}

Rat Polynomial::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

int Polynomial::order_at_origin() const {
    if (terms_.empty()) return -1;
    int d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_) d = std::min(d, m.degree());
    return d;
}

int Polynomial::degree_in(std::size_t var) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.exp(var));
    return d;
}

void Polynomial::insert_term(const Monomial& m, const Rat& c) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (c != 0) terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

Polynomial Polynomial::operator-() const {
    Polynomial r(vars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& q) {
    check_same_vars(q);
    for (const auto& [m, c] : q.terms_) insert_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& q) {
    check_same_vars(q);
    for (const auto& [m, c] : q.terms_) insert_term(m, -c);
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& q) const {
    Polynomial r(*this);
    r += q;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& q) const {
    Polynomial r(*this);
    r -= q;
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& q) const {
    check_same_vars(q);
    Polynomial r(vars_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : q.terms_) r.insert_term(ma * mb, ca * cb);
    return r;
}

Polynomial Polynomial::operator*(const Rat& c) const {
    Polynomial r(vars_);
    if (c == 0) return r;
    for (const auto& [m, cc] : terms_) r.terms_.emplace(m, cc * c);
    return r;
}

bool Polynomial::operator==(const Polynomial& q) const {
    return same_vars(vars_, q.vars_) && terms_ == q.terms_;
}

Polynomial Polynomial::derivative(std::size_t var) const {
    if (var >= nvars()) throw std::out_of_range("variable index out of range");
    Polynomial r(vars_);
    for (const auto& [m, c] : terms_) {
        int e = m.exp(var);
        if (e == 0) continue;
        std::vector<int> exps = m.exps();
        exps[var] -= 1;
        r.insert_term(Monomial(std::move(exps)), c * e);
    }
    return r;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial r = constant(vars_, Rat(1));
    Polynomial base(*this);
    while (e > 0) {
        if (e & 1u) r = r * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return r;
}

Polynomial Polynomial::substitute(std::size_t var, const Polynomial& q) const {
    if (var >= nvars()) throw std::out_of_range("variable index out of range");
    check_same_vars(q);
    // group terms by the exponent of `var`, then expand with cached powers
    std::map<int, Polynomial> slices;
    for (const auto& [m, c] : terms_) {
        int e = m.exp(var);
        std::vector<int> exps = m.exps();
        exps[var] = 0;
        auto [it, inserted] = slices.try_emplace(e, vars_);
        it->second.insert_term(Monomial(std::move(exps)), c);
    }
    Polynomial result(vars_);
    Polynomial power = constant(vars_, Rat(1));
    int current = 0;
    for (const auto& [e, slice] : slices) {
        while (current < e) {
            power = power * q;
            ++current;
        }
        result += slice * power;
    }
    return result;
}

const std::pair<const Monomial, Rat>* Polynomial::leading_term(OrderKind order) const {
    const std::pair<const Monomial, Rat>* best = nullptr;
    for (const auto& t : terms_)
        if (!best || order_less(best->first, t.first, order)) best = &t;
    return best;
}

const Monomial& Polynomial::leading_monomial(OrderKind order) const {
    const auto* lt = leading_term(order);
    if (!lt) throw std::logic_error("leading monomial of zero polynomial");
    return lt->first;
}

int Polynomial::ecart(OrderKind order) const {
    const auto* lt = leading_term(order);
    if (!lt) throw std::logic_error("ecart of zero polynomial");
    return degree() - lt->first.degree();
}

Rat Polynomial::content() const {
    if (terms_.empty()) return Rat(0);
    Int g(0), l(1);
    for (const auto& [m, c] : terms_) {
        Int n = abs(rat_num(c));
        Int d = rat_den(c);
        g = gcd(g, n);
        l = lcm(l, d);
    }
    Rat r(g, l);
    r.canonicalize();
    return r;
}

Polynomial Polynomial::primitive_part() const {
    if (terms_.empty()) return *this;
    Rat c = content();
    Polynomial r(vars_);
    for (const auto& [m, cc] : terms_) r.terms_.emplace(m, cc / c);
    return r;
}

Polynomial Polynomial::monic(OrderKind order) const {
    const auto* lt = leading_term(order);
    if (!lt) return *this;
    Rat inv = 1 / lt->second;
    Polynomial r(vars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * inv);
    return r;
}

void Polynomial::add_scaled(const Rat& c, const Monomial& m, const Polynomial& q) {
    check_same_vars(q);
    if (c == 0) return;
    for (const auto& [mq, cq] : q.terms_) insert_term(m * mq, c * cq);
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::vector<const std::pair<const Monomial, Rat>*> order;
    order.reserve(terms_.size());
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(), [](const auto* a, const auto* b) {
        return order_less(b->first, a->first, OrderKind::GlobalDegRevLex);
    });
    std::ostringstream out;
    bool first = true;
    for (const auto* t : order) {
        const auto& [m, c] = *t;
        Rat a = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        bool coeff_shown = (a != 1) || m.is_one();
        if (coeff_shown) out << rat_str(a);
        bool star = coeff_shown;
        for (std::size_t i = 0; i < m.nvars(); ++i) {
            int e = m.exp(i);
            if (e == 0) continue;
            if (star) out << "*";
            out << (*vars_)[i];
            if (e > 1) out << "^" << e;
            star = true;
        }
    }
    return out.str();
}

Polynomial extend_vars(const Polynomial& p, const VarsPtr& bigger) {
    const Vars& small = *p.vars();
    if (bigger->size() < small.size() ||
        !std::equal(small.begin(), small.end(), bigger->begin()))
        throw std::invalid_argument("extend_vars: lists do not nest");
    Polynomial r(bigger);
    for (const auto& [m, c] : p.terms()) {
        std::vector<int> e = m.exps();
        e.resize(bigger->size(), 0);
        r += Polynomial::term(bigger, Monomial(std::move(e)), c);
    }
    return r;
}

Polynomial restrict_vars(const Polynomial& p, const VarsPtr& smaller) {
    const Vars& big = *p.vars();
    if (smaller->size() > big.size() ||
        !std::equal(smaller->begin(), smaller->end(), big.begin()))
        throw std::invalid_argument("restrict_vars: lists do not nest");
    Polynomial r(smaller);
    for (const auto& [m, c] : p.terms()) {
        for (std::size_t i = smaller->size(); i < big.size(); ++i)
            if (m.exp(i) != 0)
                throw std::invalid_argument("restrict_vars: polynomial uses dropped variable");
        std::vector<int> e(m.exps().begin(), m.exps().begin() + smaller->size());
        r += Polynomial::term(smaller, Monomial(std::move(e)), c);
    }
    return r;
}

}  // namespace lecycles
