#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "lecycles/ideal.hpp"
#include "lecycles/parse.hpp"
#include "test_util.hpp"

using namespace lecycles;
using testutil::parse_all;
using testutil::random_polynomial;

namespace {

const VarsPtr xy = make_vars({"x", "y"});
const VarsPtr xyz = make_vars({"x", "y", "z"});
const VarsPtr z012 = make_vars({"z0", "z1", "z2"});

// independent staircase counter: count standard monomials level by level;
// levels are downward closed, so the first empty level ends the staircase
Colength count_by_levels(const std::vector<Monomial>& lms, std::size_t nvars, int cap = 64) {
    long long total = 0;
    for (int d = 0; d <= cap; ++d) {
        long long level = 0;
        std::vector<int> e(nvars, 0);
        e[0] = d;
        // enumerate compositions of d into nvars parts
        while (true) {
            Monomial m{std::vector<int>(e)};
            if (!std::any_of(lms.begin(), lms.end(),
                             [&](const Monomial& l) { return l.divides(m); }))
                ++level;
            // next composition
            if (nvars == 1) break;
            std::size_t i = 0;
            while (i + 1 < nvars && e[i] == 0) ++i;
            if (i + 1 == nvars) break;
            int v = e[i];
            e[i] = 0;
            e[0] = v - 1;
            e[i + 1] += 1;
        }
        if (level == 0) return Colength::of(total);
        total += level;
    }
    return Colength::inf();
}

}  // namespace

TEST_CASE("buchberger: hand-computed S-polynomial oracle") {
    auto gens = parse_all({"x^2", "x*y + y^2"}, xy);
    IdealBasis gb = buchberger(gens);
    REQUIRE(gb.gens.size() == 3);
    auto expected = parse_all({"x^2", "x*y + y^2", "y^3"}, xy);
    for (const auto& e : expected)
        CHECK(std::count(gb.gens.begin(), gb.gens.end(), e) == 1);
    CHECK(gb.reduced);
}

TEST_CASE("buchberger: single generator is normalized") {
    auto gens = parse_all({"3*x^2 - 6*y"}, xy);
    IdealBasis gb = buchberger(gens);
    REQUIRE(gb.gens.size() == 1);
    CHECK(gb.gens[0] == parse_polynomial("x^2 - 2*y", xy));
}

TEST_CASE("buchberger: already-reduced linear system") {
    auto gens = parse_all({"x", "y", "z"}, xyz);
    IdealBasis gb = buchberger(gens);
    REQUIRE(gb.gens.size() == 3);
    auto expected = parse_all({"x", "y", "z"}, xyz);
    for (const auto& e : expected)
        CHECK(std::count(gb.gens.begin(), gb.gens.end(), e) == 1);
}

TEST_CASE("buchberger: output invariant under permutation and duplication") {
    auto gens = parse_all({"x^2 + y*z", "x*z - y^2", "y^3 - x"}, xyz);
    IdealBasis a = buchberger(gens);
    std::vector<Polynomial> shuffled = {gens[2], gens[0], gens[1], gens[0]};
    IdealBasis b = buchberger(shuffled);
    CHECK(a.gens == b.gens);
}

TEST_CASE("buchberger: random ideals satisfy the Groebner property") {
    SplitMix64 rng(31337);
    for (int round = 0; round < 15; ++round) {
        std::vector<Polynomial> gens;
        int k = static_cast<int>(rng.range(2, 3));
        for (int i = 0; i < k; ++i) gens.push_back(random_polynomial(rng, xy, 3, 4, 5));
        IdealBasis gb = buchberger(gens);
        // inputs reduce to zero
        for (const auto& g : gens) CHECK(normal_form(g, gb.gens).is_zero());
        // every S-polynomial of the basis reduces to zero
        for (std::size_t i = 0; i < gb.gens.size(); ++i)
            for (std::size_t j = i + 1; j < gb.gens.size(); ++j) {
                const auto& f = gb.gens[i];
                const auto& g = gb.gens[j];
                Monomial l = Monomial::lcm(f.leading_monomial(OrderKind::GlobalDegRevLex),
                                           g.leading_monomial(OrderKind::GlobalDegRevLex));
                Polynomial s = Polynomial::zero(xy);
                s.add_scaled(Rat(1), l.quotient(f.leading_monomial(OrderKind::GlobalDegRevLex)), f);
                s.add_scaled(Rat(-1), l.quotient(g.leading_monomial(OrderKind::GlobalDegRevLex)), g);
                CHECK(normal_form(s, gb.gens).is_zero());
            }
        // random combinations reduce to zero
        for (int t = 0; t < 3; ++t) {
            Polynomial combo = Polynomial::zero(xy);
            for (const auto& g : gens)
                combo += random_polynomial(rng, xy, 2, 3, 4) * g;
            CHECK(normal_form(combo, gb.gens).is_zero());
        }
        // reduced-basis shape: monic, pairwise non-divisible leading monomials
        for (const auto& g : gb.gens) {
            CHECK(g.leading_term(OrderKind::GlobalDegRevLex)->second == 1);
            for (const auto& h : gb.gens) {
                if (&g == &h) continue;
                for (const auto& [m, c] : h.terms())
                    CHECK(!g.leading_monomial(OrderKind::GlobalDegRevLex).divides(m));
            }
        }
    }
}

TEST_CASE("mora: unit-deformed point") {
    auto gens = parse_all({"x - x^2", "y"}, xy);
    IdealBasis sb = mora_standard_basis(gens);
    auto lms = leading_monomials(sb);
    REQUIRE(lms.size() == 2);
    CHECK(std::count(lms.begin(), lms.end(), Monomial{std::vector<int>{1, 0}}) == 1);
    CHECK(std::count(lms.begin(), lms.end(), Monomial{std::vector<int>{0, 1}}) == 1);
    CHECK(local_colength(gens) == Colength::of(1));
}

TEST_CASE("mora: monomial generators already standard") {
    auto gens = parse_all({"x^2", "y^3"}, xy);
    IdealBasis sb = mora_standard_basis(gens);
    auto lms = leading_monomials(sb);
    REQUIRE(lms.size() == 2);
    CHECK(std::count(lms.begin(), lms.end(), Monomial{std::vector<int>{2, 0}}) == 1);
    CHECK(std::count(lms.begin(), lms.end(), Monomial{std::vector<int>{0, 3}}) == 1);
}

TEST_CASE("mora: linear form leads with its lowest-degree part") {
    auto gens = parse_all({"3*z1 + 2*z0", "z2", "z1^2"}, z012);
    IdealBasis sb = mora_standard_basis(gens);
    auto lms = leading_monomials(sb);
    CHECK(std::count(lms.begin(), lms.end(), Monomial{std::vector<int>{1, 0, 0}}) == 1);
    CHECK(std::count(lms.begin(), lms.end(), Monomial{std::vector<int>{0, 0, 1}}) == 1);
    CHECK(std::count(lms.begin(), lms.end(), Monomial{std::vector<int>{0, 2, 0}}) == 1);
}

TEST_CASE("local_colength examples") {
    CHECK(local_colength(parse_all({"x", "y", "z"}, xyz)) == Colength::of(1));
    CHECK(local_colength(parse_all({"3*z1 + 2*z0", "z2", "z1^2"}, z012)) == Colength::of(2));
    CHECK(local_colength(parse_all({"z1", "2*z2 - z0^3", "z0^5"}, z012)) == Colength::of(5));
    CHECK(local_colength(parse_all({"x^2", "y^3"}, xy)) == Colength::of(6));
    CHECK(local_colength(parse_all({"x"}, xy)) == Colength::inf());
    CHECK(local_colength(parse_all({"1"}, xy)) == Colength::of(0));
}

TEST_CASE("local_dimension examples") {
    CHECK(local_dimension(parse_all({"z1*(3*z1 + 2*z0)", "z2"}, z012)) == LocalDimension(1));
    CHECK(local_dimension(parse_all({"x", "y", "z"}, xyz)) == LocalDimension(0));
    CHECK(local_dimension(parse_all({"1"}, xyz)) == std::nullopt);
    CHECK(local_dimension(parse_all({"x - x^2", "y"}, xy)) == LocalDimension(0));
    CHECK(local_dimension(parse_all({"z2"}, z012)) == LocalDimension(2));
}

TEST_CASE("ideal_quotient and saturation examples") {
    IdealBasis I = buchberger(parse_all({"x*y"}, xy));
    IdealBasis Q = ideal_quotient(I, parse_polynomial("x", xy));
    CHECK(Q.gens == parse_all({"y"}, xy));

    IdealBasis J = buchberger(parse_all({"z1^2*(4*z1 + 3*z0)", "z2"}, z012));
    IdealBasis S = saturate(J, parse_polynomial("z1", z012));
    CHECK(testutil::same_ideal(S.gens, parse_all({"4*z1 + 3*z0", "z2"}, z012)));

    IdealBasis S1 = saturate(J, parse_polynomial("1", z012));
    CHECK(S1.gens == J.gens);

    CHECK_THROWS_AS(saturate(J, Polynomial::zero(z012)), std::invalid_argument);
    CHECK_THROWS_AS(ideal_quotient(J, Polynomial::zero(z012)), std::invalid_argument);
}

TEST_CASE("saturation is idempotent") {
    IdealBasis J = buchberger(parse_all({"z1^2*(4*z1 + 3*z0)", "z1*z2", "z2^2"}, z012));
    Polynomial g = parse_polynomial("z1", z012);
    IdealBasis S1 = saturate(J, g);
    IdealBasis S2 = saturate(S1, g);
    CHECK(S1.gens == S2.gens);
}

TEST_CASE("radical membership examples") {
    IdealBasis I = buchberger(parse_all({"z1", "z2"}, z012));
    CHECK(radical_membership(parse_polynomial("0 - z1^2", z012), I));

    IdealBasis J = buchberger(parse_all({"3*z1 + 2*z0", "z2"}, z012));
    CHECK(!radical_membership(parse_polynomial("0 - z1^2", z012), J));

    IdealBasis K = buchberger(parse_all({"x^2"}, xyz));
    CHECK(radical_membership(parse_polynomial("x", xyz), K));

    CHECK(radical_membership(Polynomial::zero(z012), J));
}

TEST_CASE("colength agrees with level-count oracle on random monomial ideals") {
    SplitMix64 rng(424242);
    int checked = 0;
    while (checked < 200) {
        std::size_t nvars = static_cast<std::size_t>(rng.range(2, 3));
        VarsPtr vars = nvars == 2 ? xy : z012;
        std::vector<Polynomial> gens;
        std::vector<Monomial> lms;
        int k = static_cast<int>(rng.range(1, 4));
        for (int i = 0; i < k; ++i) {
            Monomial m = testutil::random_monomial(rng, nvars, 5);
            lms.push_back(m);
            gens.push_back(Polynomial::term(vars, m, Rat(1)));
        }
        Colength expected = count_by_levels(lms, nvars);
        CHECK(local_colength(gens) == expected);
        ++checked;
    }
}

TEST_CASE("basis completion preserves the ideal (two-sided membership)") {
    SplitMix64 rng(5150);
    for (int round = 0; round < 10; ++round) {
        std::vector<Polynomial> gens;
        for (int i = 0; i < 2; ++i) gens.push_back(random_polynomial(rng, xy, 3, 4, 5));
        IdealBasis gb = buchberger(gens);
        IdealBasis joint = buchberger([&] {
            std::vector<Polynomial> all = gens;
            all.insert(all.end(), gb.gens.begin(), gb.gens.end());
            return all;
        }());
        CHECK(joint.gens == gb.gens);
    }
}

TEST_CASE("mora weak normal form decides local membership") {
    // x belongs to (x - x^2) in the localization at the origin
    auto gens = parse_all({"x - x^2", "y"}, xy);
    IdealBasis sb = mora_standard_basis(gens);
    CHECK(mora_weak_normal_form(parse_polynomial("x", xy), sb.gens).is_zero());
    CHECK(mora_weak_normal_form(parse_polynomial("y", xy), sb.gens).is_zero());
    CHECK(!mora_weak_normal_form(parse_polynomial("x + 1", xy), sb.gens).is_zero());
}

TEST_CASE("zero ideal edge cases") {
    IdealBasis empty = buchberger({Polynomial::zero(xy)});
    CHECK(empty.gens.empty());
    CHECK(local_colength({Polynomial::zero(xy)}) == Colength::inf());
}
