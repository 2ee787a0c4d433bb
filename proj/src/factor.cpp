#include "lecycles/factor.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lecycles {

namespace {

// ---------------------------------------------------------------------------
// dense univariate polynomials over Z (little-endian coefficient vectors)
// ---------------------------------------------------------------------------

using ZPoly = std::vector<Int>;

void ztrim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}
int zdeg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    ztrim(r);
    return r;
}

ZPoly zderiv(const ZPoly& a) {
    ZPoly r;
    for (std::size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * static_cast<long>(i));
    ztrim(r);
    return r;
}

Int zcontent(const ZPoly& a) {
    Int g(0);
    for (const Int& c : a) g = gcd(g, c);
    return g;
}

ZPoly zprimitive(const ZPoly& a) {
    Int g = zcontent(a);
    if (g == 0) return a;
    if (a.back() < 0) g = -g;
    ZPoly r = a;
    for (Int& c : r) c /= g;
    return r;
}

// exact division, divisor need not be monic; nullopt if not exact over Z
std::optional<ZPoly> zdivide_exact(const ZPoly& a, const ZPoly& b) {
    if (b.empty()) throw std::invalid_argument("division by zero polynomial");
    ZPoly rem = a, quot(a.size(), Int(0));
    while (zdeg(rem) >= zdeg(b)) {
        Int q = rem.back() / b.back();
        if (q * b.back() != rem.back()) return std::nullopt;
        int shift = zdeg(rem) - zdeg(b);
        quot[static_cast<std::size_t>(shift)] = q;
        for (std::size_t i = 0; i < b.size(); ++i)
            rem[static_cast<std::size_t>(shift) + i] -= q * b[i];
        ztrim(rem);
        if (rem.empty()) break;
    }
    if (!rem.empty()) return std::nullopt;
    ztrim(quot);
    return quot;
}

// pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b
ZPoly zpseudo_rem(ZPoly a, const ZPoly& b) {
    int db = zdeg(b);
    while (zdeg(a) >= db && !a.empty()) {
        Int c = a.back();
        int shift = zdeg(a) - db;
        for (Int& x : a) x *= b.back();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[static_cast<std::size_t>(shift) + i] -= c * b[i];
        ztrim(a);
    }
    return a;
}

// primitive-PRS gcd over Z, normalized primitive with positive lc
ZPoly zgcd(ZPoly a, ZPoly b) {
    ztrim(a);
    ztrim(b);
    a = zprimitive(a);
    b = zprimitive(b);
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (zdeg(a) < zdeg(b)) std::swap(a, b);
    while (!b.empty()) {
        ZPoly r = zpseudo_rem(a, b);
        a = std::move(b);
        b = zprimitive(r);
    }
    if (!a.empty() && a.back() < 0)
        for (Int& c : a) c = -c;
    return a;
}

// ---------------------------------------------------------------------------
// univariate arithmetic over F_p (p small)
// ---------------------------------------------------------------------------

using PPoly = std::vector<long>;

void ptrim(PPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}
int pdeg(const PPoly& a) { return static_cast<int>(a.size()) - 1; }

long pinv(long a, long p) {
    long t = 0, nt = 1, r = p, nr = a % p;
    if (nr < 0) nr += p;
    while (nr != 0) {
        long q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    return t < 0 ? t + p : t;
}

PPoly pmul(const PPoly& a, const PPoly& b, long p) {
    if (a.empty() || b.empty()) return {};
    PPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    ptrim(r);
    return r;
}

// remainder of a by b (b nonzero); also used for monic division
PPoly pmod(PPoly a, const PPoly& b, long p) {
    long inv = pinv(b.back(), p);
    while (pdeg(a) >= pdeg(b) && !a.empty()) {
        long c = (a.back() * inv) % p;
        int shift = pdeg(a) - pdeg(b);
        for (std::size_t i = 0; i < b.size(); ++i) {
            a[static_cast<std::size_t>(shift) + i] =
                ((a[static_cast<std::size_t>(shift) + i] - c * b[i]) % p + p) % p;
        }
        ptrim(a);
    }
    return a;
}

PPoly pmonic(PPoly a, long p) {
    if (a.empty()) return a;
    long inv = pinv(a.back(), p);
    for (long& c : a) c = (c * inv) % p;
    return a;
}

PPoly pgcd(PPoly a, PPoly b, long p) {
    ptrim(a);
    ptrim(b);
    while (!b.empty()) {
        PPoly r = pmod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return pmonic(a, p);
}

// exact quotient of monic polynomials over F_p
PPoly pquot_monic(const PPoly& num_in, const PPoly& den, long p) {
    PPoly num = num_in;
    PPoly quot(num.size(), 0);
    long inv = pinv(den.back(), p);
    while (pdeg(num) >= pdeg(den) && !num.empty()) {
        long c = (num.back() * inv) % p;
        int shift = pdeg(num) - pdeg(den);
        quot[static_cast<std::size_t>(shift)] = c;
        for (std::size_t i = 0; i < den.size(); ++i)
            num[static_cast<std::size_t>(shift) + i] =
                ((num[static_cast<std::size_t>(shift) + i] - c * den[i]) % p + p) % p;
        ptrim(num);
    }
    ptrim(quot);
    return pmonic(quot, p);
}

PPoly pderiv(const PPoly& a, long p) {
    PPoly r;
    for (std::size_t i = 1; i < a.size(); ++i)
        r.push_back((a[i] * static_cast<long>(i % static_cast<std::size_t>(p))) % p);
    ptrim(r);
    return r;
}

// x^e mod w
PPoly ppow_x(const Int& e, const PPoly& w, long p) {
    PPoly base = pmod(PPoly{0, 1}, w, p);
    PPoly result{1};
    Int k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) result = pmod(pmul(result, base, p), w, p);
        k >>= 1;
        if (k > 0) base = pmod(pmul(base, base, p), w, p);
    }
    return result;
}

// Berlekamp factorization of a monic squarefree polynomial over F_p.
std::vector<PPoly> berlekamp(const PPoly& w, long p) {
    int n = pdeg(w);
    if (n <= 1) return {w};
    // columns of Q are x^(jp) mod w
    std::vector<PPoly> cols(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) cols[static_cast<std::size_t>(j)] = ppow_x(Int(j) * p, w, p);
    // nullspace of (Q - I): build matrix rows m[i][j] = Q[i][j] - delta_ij
    std::vector<std::vector<long>> m(static_cast<std::size_t>(n),
                                     std::vector<long>(static_cast<std::size_t>(n), 0));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            long v = i < static_cast<int>(cols[static_cast<std::size_t>(j)].size())
                         ? cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]
                         : 0;
            if (i == j) v = ((v - 1) % p + p) % p;
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
        }
    // Gauss-Jordan; record pivot column per row
    std::vector<int> pivot_col(static_cast<std::size_t>(n), -1);
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int pr = -1;
        for (int r = rank; r < n; ++r)
            if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        std::swap(m[static_cast<std::size_t>(pr)], m[static_cast<std::size_t>(rank)]);
        long inv = pinv(m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)], p);
        for (int j = 0; j < n; ++j)
            m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)] =
                (m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)] * inv) % p;
        for (int r = 0; r < n; ++r) {
            if (r == rank) continue;
            long c = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
            if (c == 0) continue;
            for (int j = 0; j < n; ++j)
                m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] =
                    ((m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] -
                      c * m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)]) %
                         p +
                     p) %
                    p;
        }
        pivot_col[static_cast<std::size_t>(rank)] = col;
        ++rank;
    }
    // nullspace basis from free columns
    std::vector<PPoly> basis;
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (int r = 0; r < rank; ++r) is_pivot[static_cast<std::size_t>(pivot_col[static_cast<std::size_t>(r)])] = true;
    for (int col = 0; col < n; ++col) {
        if (is_pivot[static_cast<std::size_t>(col)]) continue;
        PPoly v(static_cast<std::size_t>(n), 0);
        v[static_cast<std::size_t>(col)] = 1;
        for (int r = 0; r < rank; ++r) {
            long c = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
            if (c != 0)
                v[static_cast<std::size_t>(pivot_col[static_cast<std::size_t>(r)])] = (p - c) % p;
        }
        ptrim(v);
        basis.push_back(std::move(v));
    }
    std::size_t r_factors = basis.size();  // includes the constant vector
    std::vector<PPoly> factors{pmonic(w, p)};
    if (r_factors <= 1) return factors;
    for (const PPoly& v : basis) {
        if (factors.size() >= r_factors) break;
        if (pdeg(v) < 1) continue;  // skip the constant kernel vector
        std::vector<PPoly> next;
        for (const PPoly& u : factors) {
            if (pdeg(u) <= 1) {
                next.push_back(u);
                continue;
            }
            PPoly rest = u;
            for (long c = 0; c < p && pdeg(rest) > 0; ++c) {
                PPoly shifted = v;
                shifted[0] = ((shifted[0] - c) % p + p) % p;
                PPoly g = pgcd(rest, shifted, p);
                if (pdeg(g) > 0 && pdeg(g) < pdeg(rest)) {
                    next.push_back(g);
                    rest = pquot_monic(rest, g, p);
                }
            }
            next.push_back(rest);
        }
        factors = std::move(next);
    }
    return factors;
}

// ---------------------------------------------------------------------------
// Hensel lifting (monic, quadratic, factor tree)
// ---------------------------------------------------------------------------

Int centered(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    if (2 * r > m) r -= m;
    return r;
}

ZPoly zmod(const ZPoly& a, const Int& m) {
    ZPoly r = a;
    for (Int& c : r) {
        c %= m;
        if (c < 0) c += m;
    }
    ztrim(r);
    return r;
}

ZPoly zcentered(const ZPoly& a, const Int& m) {
    ZPoly r = a;
    for (Int& c : r) c = centered(c, m);
    ztrim(r);
    return r;
}

// division with remainder by a monic divisor, coefficients mod m
std::pair<ZPoly, ZPoly> zdivmod_monic_mod(const ZPoly& a, const ZPoly& b, const Int& m) {
    ZPoly rem = zmod(a, m);
    ZPoly quot;
    if (zdeg(rem) >= zdeg(b)) quot.assign(rem.size() - b.size() + 1, Int(0));
    while (zdeg(rem) >= zdeg(b) && !rem.empty()) {
        Int c = rem.back();
        int shift = zdeg(rem) - zdeg(b);
        quot[static_cast<std::size_t>(shift)] = c;
        for (std::size_t i = 0; i < b.size(); ++i) {
            Int& x = rem[static_cast<std::size_t>(shift) + i];
            x = (x - c * b[i]) % m;
            if (x < 0) x += m;
        }
        ztrim(rem);
    }
    ztrim(quot);
    return {quot, rem};
}

ZPoly zmul_mod(const ZPoly& a, const ZPoly& b, const Int& m) { return zmod(zmul(a, b), m); }
ZPoly zadd_mod(const ZPoly& a, const ZPoly& b, const Int& m) {
    ZPoly r = a;
    if (b.size() > r.size()) r.resize(b.size(), Int(0));
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return zmod(r, m);
}
ZPoly zsub_mod(const ZPoly& a, const ZPoly& b, const Int& m) {
    ZPoly r = a;
    if (b.size() > r.size()) r.resize(b.size(), Int(0));
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return zmod(r, m);
}

// extended euclid over F_p for polynomials: s*a + t*b == 1 (a, b coprime mod p)
void pbezout(const PPoly& a, const PPoly& b, long p, PPoly& s, PPoly& t) {
    PPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        // r0 = q*r1 + r
        PPoly q;
        {
            PPoly num = r0;
            q.assign(num.size(), 0);
            long inv = pinv(r1.back(), p);
            while (pdeg(num) >= pdeg(r1) && !num.empty()) {
                long c = (num.back() * inv) % p;
                int shift = pdeg(num) - pdeg(r1);
                q[static_cast<std::size_t>(shift)] = c;
                for (std::size_t i = 0; i < r1.size(); ++i)
                    num[static_cast<std::size_t>(shift) + i] =
                        ((num[static_cast<std::size_t>(shift) + i] - c * r1[i]) % p + p) % p;
                ptrim(num);
            }
            ptrim(q);
            r0 = std::move(num);
        }
        std::swap(r0, r1);
        PPoly qs = pmul(q, s1, p), qt = pmul(q, t1, p);
        PPoly ns = s0, nt = t0;
        if (qs.size() > ns.size()) ns.resize(qs.size(), 0);
        for (std::size_t i = 0; i < qs.size(); ++i) ns[i] = ((ns[i] - qs[i]) % p + p) % p;
        ptrim(ns);
        if (qt.size() > nt.size()) nt.resize(qt.size(), 0);
        for (std::size_t i = 0; i < qt.size(); ++i) nt[i] = ((nt[i] - qt[i]) % p + p) % p;
        ptrim(nt);
        s0 = std::move(s1); s1 = std::move(ns);
        t0 = std::move(t1); t1 = std::move(nt);
    }
    // r0 is a nonzero constant gcd; normalize to 1
    long inv = pinv(r0.empty() ? 1 : r0[0], p);
    for (long& c : s0) c = (c * inv) % p;
    for (long& c : t0) c = (c * inv) % p;
    s = std::move(s0);
    t = std::move(t0);
}

ZPoly from_ppoly(const PPoly& a) {
    ZPoly r;
    r.reserve(a.size());
    for (long c : a) r.emplace_back(c);
    return r;
}

// lift f == g*h (mod p) with s*g + t*h == 1 (mod p) to modulus >= target;
// all of f, g, h monic
void hensel_pair(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const Int& p,
                 const Int& target) {
    Int m = p;
    while (m < target) {
        Int m2 = m * m;
        ZPoly e = zsub_mod(zmod(f, m2), zmul_mod(g, h, m2), m2);
        auto [q, r] = zdivmod_monic_mod(zmul_mod(s, e, m2), h, m2);
        ZPoly g2 = zadd_mod(zadd_mod(g, zmul_mod(t, e, m2), m2), zmul_mod(q, g, m2), m2);
        ZPoly h2 = zadd_mod(h, r, m2);
        ZPoly b = zsub_mod(zadd_mod(zmul_mod(s, g2, m2), zmul_mod(t, h2, m2), m2),
                           ZPoly{Int(1)}, m2);
        auto [c, d] = zdivmod_monic_mod(zmul_mod(s, b, m2), h2, m2);
        ZPoly s2 = zsub_mod(s, d, m2);
        ZPoly t2 = zsub_mod(zsub_mod(t, zmul_mod(t, b, m2), m2), zmul_mod(c, g2, m2), m2);
        g = std::move(g2);
        h = std::move(h2);
        s = std::move(s2);
        t = std::move(t2);
        m = m2;
    }
}

// lift a list of pairwise-coprime monic mod-p factors of monic f to mod >= target
std::vector<ZPoly> hensel_tree(const ZPoly& f, const std::vector<PPoly>& modular, long p,
                               const Int& target) {
    if (modular.size() == 1) return {zmod(f, target)};
    std::size_t half = modular.size() / 2;
    PPoly gp{1}, hp{1};
    for (std::size_t i = 0; i < half; ++i) gp = pmul(gp, modular[i], p);
    for (std::size_t i = half; i < modular.size(); ++i) hp = pmul(hp, modular[i], p);
    PPoly sp, tp;
    pbezout(gp, hp, p, sp, tp);
    ZPoly g = from_ppoly(gp), h = from_ppoly(hp), s = from_ppoly(sp), t = from_ppoly(tp);
    hensel_pair(zmod(f, target), g, h, s, t, Int(p), target);
    std::vector<PPoly> left(modular.begin(), modular.begin() + static_cast<std::ptrdiff_t>(half));
    std::vector<PPoly> right(modular.begin() + static_cast<std::ptrdiff_t>(half), modular.end());
    std::vector<ZPoly> out = hensel_tree(g, left, p, target);
    std::vector<ZPoly> rest = hensel_tree(h, right, p, target);
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

// ---------------------------------------------------------------------------
// Zassenhaus: factor a primitive squarefree polynomial over Z
// ---------------------------------------------------------------------------

constexpr long kPrimes[] = {3,   5,   7,   11,  13,  17,  19,  23,  29,  31,  37,  41,
                            43,  47,  53,  59,  61,  67,  71,  73,  79,  83,  89,  97,
                            101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157};

// factors of a monic squarefree integer polynomial (monic output)
std::vector<ZPoly> factor_monic_squarefree(const ZPoly& w) {
    int n = zdeg(w);
    if (n <= 1) return {w};
    long p = 0;
    PPoly wp;
    for (long cand : kPrimes) {
        wp.clear();
        for (const Int& c : w) {
            Int r = c % cand;
            if (r < 0) r += cand;
            wp.push_back(r.get_si());
        }
        ptrim(wp);
        if (pdeg(wp) != n) continue;  // lc vanished (cannot happen: monic)
        PPoly g = pgcd(wp, pderiv(wp, cand), cand);
        if (pdeg(g) == 0) {
            p = cand;
            break;
        }
    }
    if (p == 0) throw std::logic_error("no squarefree prime found");

    std::vector<PPoly> modular = berlekamp(pmonic(wp, p), p);
    if (modular.size() == 1) return {w};
    std::sort(modular.begin(), modular.end());

    // coefficient bound for monic divisors: 2^n * ||w||_2
    Int norm2(0);
    for (const Int& c : w) norm2 += c * c;
    Int bound = sqrt(norm2) + 1;
    bound <<= static_cast<unsigned>(n + 1);  // 2^n * ||w|| and the factor 2 for signs
    Int target(p);
    while (target <= 2 * bound) target *= target;

    std::vector<ZPoly> lifted = hensel_tree(w, modular, p, target);
    Int modulus = target;

    std::vector<ZPoly> result;
    ZPoly rest = w;
    std::vector<bool> used(lifted.size(), false);
    std::size_t remaining = lifted.size();

    // try subsets by increasing cardinality; first divisor found is irreducible
    for (std::size_t card = 1; card <= lifted.size(); ++card) {
        if (card > remaining / 2) break;
        bool progress = true;
        while (progress) {
            progress = false;
            std::vector<std::size_t> avail;
            for (std::size_t i = 0; i < lifted.size(); ++i)
                if (!used[i]) avail.push_back(i);
            if (card > avail.size() / 2) break;
            std::vector<std::size_t> idx(card);
            std::iota(idx.begin(), idx.end(), 0);
            while (true) {
                ZPoly cand{Int(1)};
                for (std::size_t k : idx) cand = zmul_mod(cand, lifted[avail[k]], modulus);
                cand = zcentered(cand, modulus);
                auto quo = zdivide_exact(rest, cand);
                if (quo) {
                    result.push_back(cand);
                    rest = *quo;
                    for (std::size_t k : idx) used[avail[k]] = true;
                    remaining -= card;
                    progress = true;
                    break;
                }
                // next combination
                std::size_t i = card;
                while (i > 0) {
                    --i;
                    if (idx[i] != i + avail.size() - card) {
                        ++idx[i];
                        for (std::size_t j = i + 1; j < card; ++j) idx[j] = idx[j - 1] + 1;
                        break;
                    }
                    if (i == 0) {
                        i = card + 1;
                        break;
                    }
                }
                if (i == card + 1) break;
            }
        }
    }
    if (zdeg(rest) > 0) result.push_back(rest);
    return result;
}

// full integer factorization: returns (irreducible primitive factor, multiplicity);
// input primitive with positive lc, degree >= 1
std::vector<std::pair<ZPoly, int>> factor_integer_poly(const ZPoly& u) {
    // radical = u / gcd(u, u'): squarefree in characteristic 0
    ZPoly radical;
    {
        ZPoly g = zgcd(u, zderiv(u));
        auto q = zdivide_exact(u, g);
        if (!q) throw std::logic_error("radical division failed");
        radical = zprimitive(*q);
    }
    // monic transform W(x) = lc^(n-1) * w(x/lc), i.e. W_i = w_i * lc^(n-1-i)
    Int lc = radical.back();
    int n = zdeg(radical);
    ZPoly W(radical.size(), Int(0));
    {
        W[static_cast<std::size_t>(n)] = 1;
        Int power(1);
        for (int i = n - 1; i >= 0; --i) {
            W[static_cast<std::size_t>(i)] = radical[static_cast<std::size_t>(i)] * power;
            power *= lc;
        }
    }
    std::vector<ZPoly> monic_factors = factor_monic_squarefree(W);
    std::vector<std::pair<ZPoly, int>> out;
    for (const ZPoly& G : monic_factors) {
        // back-transform: primitive part of G(lc * x)
        ZPoly g = G;
        Int power(1);
        for (std::size_t i = 0; i < g.size(); ++i) {
            g[i] *= power;
            power *= lc;
        }
        g = zprimitive(g);
        int mult = 0;
        ZPoly rest = u;
        while (true) {
            auto q = zdivide_exact(rest, g);
            if (!q) break;
            rest = *q;
            ++mult;
        }
        if (mult == 0) throw std::logic_error("factor does not divide input");
        out.emplace_back(std::move(g), mult);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// conversions between Polynomial and dense univariate form
// ---------------------------------------------------------------------------

// index of the single variable occurring in p, or -1 when constant
int single_variable(const Polynomial& p) {
    int var = -1;
    for (std::size_t i = 0; i < p.nvars(); ++i) {
        if (p.degree_in(i) > 0) {
            if (var >= 0) return -2;
            var = static_cast<int>(i);
        }
    }
    return var;
}

ZPoly to_unipoly(const Polynomial& p, int var) {
    ZPoly r(static_cast<std::size_t>(p.degree_in(static_cast<std::size_t>(var))) + 1, Int(0));
    for (const auto& [m, c] : p.terms()) {
        if (!is_integer(c)) throw std::logic_error("to_unipoly: non-integer coefficient");
        r[static_cast<std::size_t>(m.exp(static_cast<std::size_t>(var)))] += rat_num(c);
    }
    ztrim(r);
    return r;
}

Polynomial from_unipoly(const ZPoly& u, const VarsPtr& vars, int var) {
    Polynomial p = Polynomial::zero(vars);
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] == 0) continue;
        std::vector<int> e(vars->size(), 0);
        e[static_cast<std::size_t>(var)] = static_cast<int>(i);
        p += Polynomial::term(vars, Monomial(std::move(e)), Rat(u[i]));
    }
    return p;
}

Rat lead_coeff_degrevlex(const Polynomial& p) {
    return p.leading_term(OrderKind::GlobalDegRevLex)->second;
}

// primitive, positive degrevlex-leading coefficient; returns the scaling
Polynomial normalize_factor(const Polynomial& p, Rat& unit_accum) {
    Polynomial prim = p.primitive_part();
    Rat scale = p.content();
    if (lead_coeff_degrevlex(prim) < 0) {
        prim = -prim;
        scale = -scale;
    }
    unit_accum *= scale;
    return prim;
}

}  // namespace

std::optional<Polynomial> try_divide(const Polynomial& numerator, const Polynomial& divisor) {
    if (divisor.is_zero()) throw std::invalid_argument("try_divide: zero divisor");
    Polynomial rem = numerator;
    Polynomial quot = Polynomial::zero(numerator.vars());
    const auto* ld = divisor.leading_term(OrderKind::GlobalDegRevLex);
    while (!rem.is_zero()) {
        const auto* lt = rem.leading_term(OrderKind::GlobalDegRevLex);
        if (!ld->first.divides(lt->first)) return std::nullopt;
        Rat c = lt->second / ld->second;
        Monomial m = lt->first.quotient(ld->first);
        quot += Polynomial::term(numerator.vars(), m, c);
        rem.add_scaled(-c, m, divisor);
    }
    return quot;
}

UnivariateFactorization univariate_factor(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("univariate_factor: zero polynomial");
    int var = single_variable(p);
    if (var == -2)
        throw std::invalid_argument("univariate_factor: polynomial is not univariate");
    UnivariateFactorization out;
    if (var == -1) {  // nonzero constant
        out.content = p.constant_term();
        return out;
    }
    Polynomial prim = p.primitive_part();
    Rat content = p.content();
    if (lead_coeff_degrevlex(prim) < 0) {
        prim = -prim;
        content = -content;
    }
    out.content = content;
    ZPoly u = to_unipoly(prim, var);
    for (auto& [zf, mult] : factor_integer_poly(u))
        out.factors.emplace_back(from_unipoly(zf, p.vars(), var), mult);
    return out;
}

namespace {

// Kronecker split of a primitive multivariate polynomial (>= 2 variables
// used). Returns an irreducible divisor, or nullopt when q is irreducible
// (certified) -- `certified` reports which.
std::optional<Polynomial> kronecker_factor(const Polynomial& q, const FactorLimits& limits,
                                           bool& certified) {
    certified = false;
    std::vector<std::size_t> used;
    std::vector<int> degs;
    for (std::size_t i = 0; i < q.nvars(); ++i)
        if (q.degree_in(i) > 0) {
            used.push_back(i);
            degs.push_back(q.degree_in(i));
        }
    // mixed-radix weights
    std::vector<long> radix(used.size());
    long w = 1;
    for (std::size_t k = 0; k < used.size(); ++k) {
        radix[k] = w;
        w *= degs[k] + 1;
        if (w > 4 * limits.max_image_degree) break;
    }
    long image_deg = 0;
    for (std::size_t k = 0; k < used.size(); ++k) image_deg += degs[k] * radix[k];
    if (w > 4 * limits.max_image_degree || image_deg > limits.max_image_degree) return std::nullopt;

    ZPoly image(static_cast<std::size_t>(image_deg) + 1, Int(0));
    for (const auto& [m, c] : q.terms()) {
        long e = 0;
        for (std::size_t k = 0; k < used.size(); ++k) e += m.exp(used[k]) * radix[k];
        if (!is_integer(c)) throw std::logic_error("kronecker: non-integer coefficient");
        image[static_cast<std::size_t>(e)] += rat_num(c);
    }
    ztrim(image);
    if (image.back() < 0)  // sign lands in the caller's unit reconciliation
        for (Int& c : image) c = -c;

    std::vector<std::pair<ZPoly, int>> ufactors = factor_integer_poly(image);
    // enumerate sub-multisets by ascending image degree
    std::vector<int> maxmult;
    std::vector<int> fdeg;
    for (const auto& [f, m] : ufactors) {
        maxmult.push_back(m);
        fdeg.push_back(zdeg(f));
    }
    struct Cand {
        long deg;
        std::vector<int> mult;
    };
    std::vector<Cand> cands;
    std::vector<int> cur(ufactors.size(), 0);
    long count = 0;
    while (true) {
        long d = 0;
        for (std::size_t i = 0; i < cur.size(); ++i) d += cur[i] * fdeg[i];
        if (d > 0 && 2 * d <= image_deg) cands.push_back({d, cur});
        if (++count > limits.max_candidates) return std::nullopt;
        std::size_t i = 0;
        while (i < cur.size()) {
            if (++cur[i] <= maxmult[i]) break;
            cur[i] = 0;
            ++i;
        }
        if (i == cur.size()) break;
    }
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
        return a.deg != b.deg ? a.deg < b.deg : a.mult < b.mult;
    });

    bool skipped_by_degree_bound = false;
    for (const Cand& cand : cands) {
        ZPoly prod{Int(1)};
        for (std::size_t i = 0; i < cand.mult.size(); ++i)
            for (int k = 0; k < cand.mult[i]; ++k) prod = zmul(prod, ufactors[i].first);
        // decode to a multivariate candidate
        Polynomial g = Polynomial::zero(q.vars());
        for (std::size_t e = 0; e < prod.size(); ++e) {
            if (prod[e] == 0) continue;
            std::vector<int> exps(q.nvars(), 0);
            long rem = static_cast<long>(e);
            for (std::size_t k = used.size(); k-- > 0;) {
                exps[used[k]] = static_cast<int>(rem / radix[k]);
                rem %= radix[k];
            }
            g += Polynomial::term(q.vars(), Monomial(std::move(exps)), Rat(prod[e]));
        }
        if (g.degree() > limits.max_factor_degree) {
            skipped_by_degree_bound = true;
            continue;
        }
        if (g.is_constant()) continue;
        if (try_divide(q, g)) {
            certified = true;
            return g;
        }
    }
    certified = !skipped_by_degree_bound;
    return std::nullopt;
}

void factor_primitive(Polynomial q, const FactorLimits& limits, Factorization& out) {
    while (true) {
        if (q.is_constant()) {
            out.unit *= q.constant_term();
            return;
        }
        int var = single_variable(q);
        if (var >= 0) {
            ZPoly u = to_unipoly(q, var);
            for (auto& [zf, mult] : factor_integer_poly(u))
                out.factors.emplace_back(from_unipoly(zf, q.vars(), var), mult);
            // unit accounting happens in the caller via exact division
            return;
        }
        bool certified = false;
        std::optional<Polynomial> g = kronecker_factor(q, limits, certified);
        if (!g) {
            out.factors.emplace_back(q, 1);
            if (!certified) out.complete = false;
            return;
        }
        int mult = 0;
        while (auto quo = try_divide(q, *g)) {
            q = *quo;
            ++mult;
        }
        out.factors.emplace_back(*g, mult);
    }
}

}  // namespace

Factorization factor_polynomial(const Polynomial& p, const FactorLimits& limits) {
    if (p.is_zero()) throw std::invalid_argument("factor_polynomial: zero polynomial");
    Factorization out;
    out.unit = Rat(1);
    Polynomial q = normalize_factor(p, out.unit);

    // monomial content: each variable dividing every term splits off
    for (std::size_t v = 0; v < p.nvars(); ++v) {
        int mine = -1;
        for (const auto& [m, c] : q.terms())
            mine = mine < 0 ? m.exp(v) : std::min(mine, m.exp(v));
        if (mine > 0) {
            std::vector<int> e(p.nvars(), 0);
            e[v] = 1;
            Polynomial xv = Polynomial::term(p.vars(), Monomial(std::move(e)), Rat(1));
            out.factors.emplace_back(xv, mine);
            for (int k = 0; k < mine; ++k) q = *try_divide(q, xv);
        }
    }

    factor_primitive(q, limits, out);

    // normalize every factor and account the product into the unit
    Rat unit_fix(1);
    for (auto& [f, e] : out.factors) {
        Rat scale(1);
        Polynomial norm = normalize_factor(f, scale);
        for (int k = 0; k < e; ++k) unit_fix *= scale;
        f = norm;
    }
    out.unit *= unit_fix;
    // verify: unit * prod == p
    Polynomial check = Polynomial::constant(p.vars(), out.unit);
    for (const auto& [f, e] : out.factors) check = check * f.pow(static_cast<unsigned>(e));
    if (check != p) {
        // the primitive-part split above already accounted content once; fix
        // the residual constant exactly
        auto ratio = try_divide(p, check);
        if (!ratio || !ratio->is_constant())
            throw std::logic_error("factor_polynomial: unit reconciliation failed");
        out.unit *= ratio->constant_term();
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return a.first.str() < b.first.str(); });
    return out;
}

}  // namespace lecycles
