#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "lecycles/components.hpp"
#include "lecycles/parse.hpp"
#include "test_util.hpp"

using namespace lecycles;
using testutil::parse_all;

namespace {
const VarsPtr xyz = make_vars({"x", "y", "z"});
const VarsPtr z012 = make_vars({"z0", "z1", "z2"});

const CurveComponent* find_component(const CycleDecomposition& d,
                                     const std::vector<Polynomial>& prime_gens) {
    IdealBasis expected = buchberger(prime_gens);
    for (const auto& c : d.components)
        if (c.prime.gens == expected.gens) return &c;
    return nullptr;
}

long long reconstruct(const CycleDecomposition& d, const Polynomial& l) {
    long long sum = 0;
    for (const auto& c : d.components) {
        std::vector<Polynomial> gens = c.prime.gens;
        gens.push_back(l);
        Colength cl = local_colength(gens);
        REQUIRE(cl.finite);
        sum += c.length * cl.value;
    }
    return sum;
}
}  // namespace

TEST_CASE("split: flagship jacobian scheme") {
    // d/dy and d/dz of (z^2-x^2-y^2)(z-x)
    auto gens = parse_all({"0 - 2*y*(z - x)", "2*z*(z - x) + z^2 - x^2 - y^2"}, xyz);
    CycleDecomposition d = split_components(gens);
    CHECK(d.complete);
    REQUIRE(d.components.size() == 2);
    const auto* polar = find_component(d, parse_all({"y", "3*z + x"}, xyz));
    const auto* le = find_component(d, parse_all({"y", "z - x"}, xyz));
    REQUIRE(polar != nullptr);
    REQUIRE(le != nullptr);
    CHECK(polar->length == 1);
    CHECK(le->length == 3);
    CHECK(polar->mult_origin == 1);
    CHECK(le->mult_origin == 1);
}

TEST_CASE("split: doubled line plus transversal line") {
    auto gens = parse_all({"z1^2*(4*z1 + 3*z0)", "z2"}, z012);
    CycleDecomposition d = split_components(gens);
    CHECK(d.complete);
    REQUIRE(d.components.size() == 2);
    const auto* axis = find_component(d, parse_all({"z1", "z2"}, z012));
    const auto* line = find_component(d, parse_all({"4*z1 + 3*z0", "z2"}, z012));
    REQUIRE(axis != nullptr);
    REQUIRE(line != nullptr);
    CHECK(axis->length == 2);
    CHECK(line->length == 1);
}

TEST_CASE("split: smooth curve and cusp") {
    auto gens = parse_all({"z1*z2", "z1^2 - z0^3 + 2*z2"}, z012);
    CycleDecomposition d = split_components(gens);
    CHECK(d.complete);
    REQUIRE(d.components.size() == 2);
    const auto* graph = find_component(d, parse_all({"z1", "2*z2 - z0^3"}, z012));
    const auto* cusp = find_component(d, parse_all({"z2", "z1^2 - z0^3"}, z012));
    REQUIRE(graph != nullptr);
    REQUIRE(cusp != nullptr);
    CHECK(graph->length == 1);
    CHECK(cusp->length == 1);
    CHECK(graph->mult_origin == 1);
    CHECK(cusp->mult_origin == 2);
}

TEST_CASE("split: branches away from the origin are discarded") {
    auto gens = parse_all({"z1*(z1 - 1)", "z2"}, z012);
    CycleDecomposition d = split_components(gens);
    REQUIRE(d.components.size() == 1);
    CHECK(find_component(d, parse_all({"z1", "z2"}, z012)) != nullptr);
    CHECK(!d.discarded.empty());
}

TEST_CASE("split: non-curve input rejected") {
    CHECK_THROWS_AS(split_components(parse_all({"z0", "z1", "z2"}, z012)), SplitError);
    try {
        split_components(parse_all({"z0", "z1", "z2"}, z012));
    } catch (const SplitError& e) {
        CHECK(e.code == SplitError::Code::NotCurve);
    }
}

TEST_CASE("multiplicity at origin") {
    CHECK(multiplicity_at_origin(buchberger(parse_all({"y", "z - x"}, xyz))) == 1);
    CHECK(multiplicity_at_origin(buchberger(parse_all({"z2", "z1^2 - z0^3"}, z012))) == 2);
    CHECK(multiplicity_at_origin(buchberger(parse_all({"z1", "2*z2 - z0^3"}, z012))) == 1);
}

TEST_CASE("geometric branch count") {
    CHECK(geometric_branch_count(buchberger(parse_all({"z1", "z0^2 + 3*z2^2"}, z012))) ==
          std::optional<int>(2));
    CHECK(geometric_branch_count(buchberger(parse_all({"y", "3*z + x"}, xyz))) ==
          std::optional<int>(1));
    CHECK(geometric_branch_count(buchberger(parse_all({"z2", "z1^2 - z0^3"}, z012))) ==
          std::optional<int>(1));
    CHECK(geometric_branch_count(buchberger(parse_all({"z1", "2*z2 - z0^3"}, z012))) ==
          std::optional<int>(1));
}

TEST_CASE("branch soundness: conjugate factors over the quadratic extension") {
    // z0^2 + 3 z2^2 = (z0 - a z2)(z0 + a z2) modulo a^2 + 3
    auto vars = make_vars({"z0", "z1", "z2", "a"});
    Polynomial form = parse_polynomial("z0^2 + 3*z2^2", vars);
    Polynomial split = parse_polynomial("(z0 - a*z2)*(z0 + a*z2)", vars);
    Polynomial rel = parse_polynomial("a^2 + 3", vars);
    CHECK(normal_form(form - split, {rel}).is_zero());
}

TEST_CASE("reconstruction: cycle decomposition matches the scheme") {
    std::vector<std::vector<Polynomial>> inputs = {
        parse_all({"0 - 2*y*(z - x)", "2*z*(z - x) + z^2 - x^2 - y^2"}, xyz),
        parse_all({"z1^2*(4*z1 + 3*z0)", "z2"}, z012),
        parse_all({"z1*z2", "z1^2 - z0^3 + 2*z2"}, z012),
    };
    SplitMix64 rng(1234);
    for (const auto& gens : inputs) {
        CycleDecomposition d = split_components(gens);
        int checked = 0;
        for (int attempt = 0; attempt < 12 && checked < 3; ++attempt) {
            Polynomial l = Polynomial::zero(gens.front().vars());
            for (std::size_t v = 0; v < gens.front().nvars(); ++v)
                l += Polynomial::variable(gens.front().vars(), v) * Rat(rng.nonzero(9));
            std::vector<Polynomial> cut = gens;
            cut.push_back(l);
            Colength total = local_colength(cut);
            if (!total.finite) continue;
            CHECK(reconstruct(d, l) == total.value);
            ++checked;
        }
        CHECK(checked == 3);
    }
}

TEST_CASE("idempotence: splitting a prime returns it with length 1") {
    for (const auto& gens :
         {parse_all({"y", "z - x"}, xyz), parse_all({"z2", "z1^2 - z0^3"}, z012)}) {
        CycleDecomposition d = split_components(gens);
        CHECK(d.complete);
        REQUIRE(d.components.size() == 1);
        CHECK(d.components[0].length == 1);
        CHECK(d.components[0].prime.gens == buchberger(gens).gens);
    }
}

TEST_CASE("primality spot check: components separate each other") {
    auto gens = parse_all({"0 - 2*y*(z - x)", "2*z*(z - x) + z^2 - x^2 - y^2"}, xyz);
    CycleDecomposition d = split_components(gens);
    for (const auto& a : d.components)
        for (const auto& b : d.components) {
            if (&a == &b) continue;
            bool some_outside = false;
            for (const auto& g : b.prime.gens)
                if (!radical_membership(g, a.prime)) some_outside = true;
            CHECK(some_outside);
        }
}

TEST_CASE("determinism: equal seeds give equal decompositions") {
    auto gens = parse_all({"z1*z2", "z1^2 - z0^3 + 2*z2"}, z012);
    SplitConfig cfg;
    cfg.seed = 99;
    CycleDecomposition a = split_components(gens, cfg);
    CycleDecomposition b = split_components(gens, cfg);
    REQUIRE(a.components.size() == b.components.size());
    for (std::size_t i = 0; i < a.components.size(); ++i) {
        CHECK(a.components[i].prime.gens == b.components[i].prime.gens);
        CHECK(a.components[i].length == b.components[i].length);
        CHECK(a.components[i].mult_origin == b.components[i].mult_origin);
    }
}
