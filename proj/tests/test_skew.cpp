#include "doctest.h"

#include <random>

#include "coact/fixtures.hpp"
#include "coact/skew.hpp"

using namespace coact;
namespace fx = coact::fixtures;

namespace {

const Field Q = Field::rationals();

SkewElement mono(const SkewAlgebraPtr& a, Expo e, long num = 1, long den = 1) {
    return SkewElement::monomial(a, std::move(e), Scalar(num, den));
}

SkewElement random_element(const SkewAlgebraPtr& a, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> terms(1, 3), coef(-3, 3), pos(0, 2), any(-2, 2);
    SkewElement r = SkewElement::zero(a);
    for (int t = terms(rng); t-- > 0;) {
        Expo e(a->arity());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = a->inv_mask()[i] ? any(rng) : pos(rng);
        long c = coef(rng);
        if (c == 0) c = 1;
        r = r + SkewElement::monomial(a, e, Scalar(c));
    }
    return r;
}

} // namespace

TEST_CASE("normal-form multiplication applies the declared q-factors") {
    SkewAlgebraPtr qp = fx::qplane();
    SkewElement x = SkewElement::generator(qp, 0), y = SkewElement::generator(qp, 1);

    CHECK(SkewElement::one(qp) * y == y);
    CHECK(y * x == mono(qp, {1, 1}, 2));          // y·x = 2 xy
    CHECK((y * y) * x == mono(qp, {1, 2}, 4));    // y²·x = 4 x y²
    CHECK((y * y) * x == y * (y * x));
    CHECK((y * x).str() == "2 x y");
}

TEST_CASE("multiplication is associative on random triples") {
    SkewLocalization loc = localize_at_generators(fx::qplane(), {"x"});
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 500; ++trial) {
        SkewElement a = random_element(loc.localized, rng);
        SkewElement b = random_element(loc.localized, rng);
        SkewElement c = random_element(loc.localized, rng);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("is_unit recognizes exactly the invertible monomials") {
    SkewAlgebraPtr qp = fx::qplane();
    CHECK(is_unit(SkewElement::one(qp)).has_value());
    CHECK(!is_unit(SkewElement::generator(qp, 0)).has_value()); // x not yet inverted

    SkewLocalization loc = localize_at_generators(qp, {"x"});
    SkewElement a = mono(loc.localized, {1, 0}, 3); // 3x
    auto inv = is_unit(a);
    REQUIRE(inv.has_value());
    CHECK(*inv == mono(loc.localized, {-1, 0}, 1, 3));
    CHECK(a * *inv == SkewElement::one(loc.localized));
    CHECK(*inv * a == SkewElement::one(loc.localized));

    // two-term elements of a graded domain are never units: x⊗1 + 1⊗t
    SkewTensor t = tensor_skew(localize_at_generators(fx::poly_line(), {"x"}).localized,
                               fx::poly_line(Q, "t", GenTag::primitive));
    SkewElement sum = SkewElement::generator(t.algebra, 0) + SkewElement::generator(t.algebra, 1);
    CHECK(!is_unit(sum).has_value());
}

TEST_CASE("units satisfy a·inv = inv·a = 1 on random invertible monomials") {
    SkewLocalization loc = localize_at_generators(fx::qplane(), {"x", "y"});
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> e(-3, 3), coef(1, 5);
    for (int trial = 0; trial < 100; ++trial) {
        SkewElement a = mono(loc.localized, {e(rng), e(rng)}, coef(rng));
        auto inv = is_unit(a);
        REQUIRE(inv.has_value());
        CHECK(a * *inv == SkewElement::one(loc.localized));
        CHECK(*inv * a == SkewElement::one(loc.localized));
    }
}

TEST_CASE("tensor_skew concatenates with cross-commuting factors") {
    SkewTensor kb = tensor_skew(skew_ground_field(Q), fx::laurent_line());
    CHECK(kb.algebra->arity() == 1); // k⊗B has B's presentation

    SkewTensor t = tensor_skew(fx::qplane(), fx::laurent_line());
    REQUIRE(t.algebra->arity() == 3);
    CHECK(t.algebra->q_at(0, 1) == Scalar(2));
    CHECK(t.algebra->q_at(0, 2) == Scalar(1));
    CHECK(t.algebra->q_at(1, 2) == Scalar(1));

    SkewElement xg = t.embed_left(SkewElement::generator(fx::qplane(), 0)) *
                     t.embed_right(SkewElement::generator(fx::laurent_line(), 0));
    CHECK(xg * xg == SkewElement::monomial(t.algebra, {2, 0, 2}, Scalar(1)));
}

TEST_CASE("tensor_skew renames clashing generator names") {
    SkewTensor t = tensor_skew(fx::poly_line(), fx::poly_line());
    CHECK(t.algebra->gens() == std::vector<std::string>{"x", "x'"});
}

TEST_CASE("extend_algebra_map verifies relations and reports violations") {
    SkewAlgebraPtr qp = fx::qplane();
    auto id = identity_skew_hom(qp);
    CHECK(id.apply(mono(qp, {2, 1}, 5)) == mono(qp, {2, 1}, 5));

    // x -> x⊗g, y -> y⊗g respects y x = 2 x y
    fx::SkewCoactionFixture grading = fx::qplane_grading();
    CHECK(grading.rho.apply(SkewElement::generator(qp, 0)) ==
          SkewElement::monomial(grading.eb.algebra, {1, 0, 1}, Scalar(1)));

    // x -> x⊗g, y -> y⊗1 also respects the relation
    SkewElement xg = grading.eb.embed_left(SkewElement::generator(qp, 0)) *
                     grading.eb.embed_right(SkewElement::generator(fx::laurent_line(), 0));
    SkewElement y1 = grading.eb.embed_left(SkewElement::generator(qp, 1));
    CHECK(extend_algebra_map("mixed", qp, grading.eb.algebra, {xg, y1}).hom.has_value());

    // swapping x and y violates the relation, with a witness pair
    auto bad = extend_algebra_map("swap", qp, qp,
                                  {SkewElement::generator(qp, 1), SkewElement::generator(qp, 0)});
    CHECK(!bad.hom.has_value());
    REQUIRE(!bad.report.witnesses.empty());
    CHECK(bad.report.witnesses[0].indices == std::vector<std::string>{"y", "x"});
}

TEST_CASE("localize_at_generators flips the mask and keeps relations") {
    SkewAlgebraPtr qp = fx::qplane();
    SkewLocalization trivial = localize_at_generators(qp, {});
    CHECK(trivial.localized->same_presentation(*qp));

    SkewLocalization at_x = localize_at_generators(qp, {"x"});
    CHECK(at_x.localized->inv_mask() == std::vector<bool>{true, false});
    SkewElement y = SkewElement::generator(at_x.localized, 1);
    SkewElement xinv = mono(at_x.localized, {-1, 0});
    CHECK(y * xinv == mono(at_x.localized, {-1, 1}, 1, 2)); // y x^{-1} = (1/2) x^{-1} y

    // commutative polynomial line localizes to Laurent polynomials
    SkewLocalization kx = localize_at_generators(fx::poly_line(), {"x"});
    CHECK(kx.localized->inv_mask() == std::vector<bool>{true});
    CHECK(is_unit(SkewElement::generator(kx.localized, 0)).has_value());

    // localizing twice at the same subset is idempotent
    SkewLocalization again = localize_at_generators(at_x.localized, {"x"});
    CHECK(again.localized->same_presentation(*at_x.localized));
}

TEST_CASE("iota is a unital multiplicative inclusion") {
    SkewLocalization at_x = localize_at_generators(fx::qplane(), {"x"});
    std::mt19937_64 rng(17);
    CHECK(at_x.iota.apply(SkewElement::one(at_x.source)) == SkewElement::one(at_x.localized));
    for (int trial = 0; trial < 50; ++trial) {
        SkewElement a = random_element(at_x.source, rng), b = random_element(at_x.source, rng);
        CHECK(at_x.iota.apply(a * b) == at_x.iota.apply(a) * at_x.iota.apply(b));
    }
}

TEST_CASE("check_ore_generated records exact witnesses") {
    SkewAlgebraPtr qp = fx::qplane();
    OreReport rep = check_ore_generated(qp, {"x"});
    CHECK(rep.report.passed());
    REQUIRE(rep.witnesses.size() == 2);
    // s = x, e = y: s' = x, e' = (1/2) y
    const OreWitness& w = rep.witnesses[1];
    CHECK(w.s == "x");
    CHECK(w.e == "y");
    CHECK(w.e_prime == mono(qp, {0, 1}, 1, 2));

    OreReport comm = check_ore_generated(fx::poly_line(), {"x"});
    CHECK(comm.report.passed());
    CHECK(comm.witnesses[0].e_prime == SkewElement::generator(fx::poly_line(), 0));

    CHECK(check_ore_generated(qp, {}).report.passed()); // vacuous
}

TEST_CASE("coaction evaluation commutes with multiplication on random pairs") {
    fx::SkewCoactionFixture grading = fx::qplane_grading();
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        SkewElement a = random_element(grading.e, rng), b = random_element(grading.e, rng);
        CHECK(grading.rho.apply(a * b) == grading.rho.apply(a) * grading.rho.apply(b));
    }
}

TEST_CASE("skew coactions satisfy the comodule axioms on generators") {
    fx::SkewCoactionFixture grading = fx::qplane_grading();
    CHECK(check_skew_coaction(grading.rho, grading.eb, grading.e, grading.b).passed());

    fx::SkewCoactionFixture prim = fx::kx_primitive();
    CHECK(check_skew_coaction(prim.rho, prim.eb, prim.e, prim.b).passed());

    // rho(x) = 2·x⊗g is a valid algebra map but violates both comodule axioms
    SkewElement xg2 = grading.rho.images()[0].scaled(Scalar(2));
    SkewElement yg = grading.rho.images()[1];
    auto bad = extend_algebra_map("bad", grading.e, grading.eb.algebra, {xg2, yg});
    REQUIRE(bad.hom.has_value());
    CheckReport rep = check_skew_coaction(*bad.hom, grading.eb, grading.e, grading.b);
    CHECK(!rep.passed());
    CHECK(rep.witnesses.size() >= 2);
}
