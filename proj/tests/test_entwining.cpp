#include "doctest.h"

#include "coact/entwining.hpp"
#include "coact/fixtures.hpp"
#include "perturb.hpp"

using namespace coact;
namespace fx = coact::fixtures;

namespace {

const Field Q = Field::rationals();

FindimLocalization loc_at(const StructureConstantAlgebra& e, const Vec& idem) {
    auto res = localize_central_idempotent(e, idem);
    REQUIRE(res.loc.has_value());
    return *res.loc;
}

} // namespace

TEST_CASE("the flip is an entwining for any algebra-coalgebra pair") {
    CHECK(check_entwining(flip_entwining(fx::two_point(), fx::kc2().coalgebra)).passed());
    CHECK(check_entwining(flip_entwining(fx::kc2().algebra, fx::kc2().coalgebra)).passed());
    CHECK(check_entwining(flip_entwining(fx::prod().source, fx::kc2().coalgebra)).passed());
}

TEST_CASE("a scaled flip violates the unit axiom") {
    EntwiningData bad = flip_entwining(fx::two_point(), fx::kc2().coalgebra);
    bad.psi = bad.psi.scaled(Scalar(2));
    CheckReport rep = check_entwining(bad);
    CHECK(!rep.passed());
    bool unit = false;
    for (const auto& w : rep.witnesses) unit |= w.object == "unit axiom";
    CHECK(unit);
}

TEST_CASE("canonical entwining of the KC2 self-coaction") {
    CoactionData rho = fx::kc2_self();
    EntwiningData psi = canonical_entwining_from_coaction(rho);
    CHECK(check_entwining(psi).passed());

    // psi(g⊗g) = g·g ⊗ g = 1⊗g: column (g,g) = index 3, row (1,g)... = index 1
    Vec col = psi.psi.column_at(3);
    Vec expect = zero_vec(4, Q);
    expect[0 * 2 + 1] = Scalar(1); // 1⊗g at index (c=1?, a=?) -- row space is C⊗A
    CHECK(col == expect);

    // trivial coaction gives the flip
    EntwiningData triv = canonical_entwining_from_coaction(trivial_coaction(fx::two_point(), fx::kc2()));
    CHECK(triv.psi == flip_map(2, 2, Q));
}

TEST_CASE("canonical entwining of FX-PROD passes and matches the Hopf comonad") {
    CoactionData rho = fx::prod();
    CHECK(check_entwining(canonical_entwining_from_coaction(rho)).passed());
    CHECK(compare_entwining_comonad(rho, default_probe(rho.source)).passed());
    CHECK(compare_entwining_comonad(fx::kc2_self(), default_probe(fx::kc2().algebra)).passed());
}

TEST_CASE("compatible pairs: flips always, canonical pair for FX-PROD") {
    CoactionData rho = fx::prod();
    FindimLocalization loc = loc_at(rho.source, unit_vec(4, 0, Q));
    FindimCompatibility compat = check_compatibility(rho, loc);
    REQUIRE(compat.compatible());

    EntwiningData f1 = flip_entwining(rho.source, rho.target.coalgebra);
    EntwiningData f2 = flip_entwining(loc.localized, rho.target.coalgebra);
    CHECK(check_compatible_pair(f1, f2, loc.iota).passed());

    EntwiningData psi = canonical_entwining_from_coaction(rho);
    EntwiningData psi_mu = canonical_entwining_from_coaction(*compat.localized_coaction);
    CHECK(check_entwining(psi_mu).passed());
    CHECK(check_compatible_pair(psi, psi_mu, loc.iota).passed());

    // the flip against the canonical entwining of a nontrivial coaction fails
    CheckReport rep = check_compatible_pair(psi, f2, loc.iota);
    CHECK(!rep.passed());
    CHECK(!rep.witnesses.empty());
}

TEST_CASE("induced l: trivial localization gives an isomorphism") {
    CoactionData rho = fx::kc2_self();
    FindimLocalization triv = loc_at(rho.source, rho.source.unit);
    EntwiningData psi = canonical_entwining_from_coaction(rho);
    InducedLaw il = induced_l(psi, psi, triv, regular_module(rho.source));
    REQUIRE(il.l.has_value());
    CHECK(is_invertible(*il.l));
}

TEST_CASE("induced l for the FX-PROD pair is A-linear and descends") {
    CoactionData rho = fx::prod();
    FindimLocalization loc = loc_at(rho.source, unit_vec(4, 0, Q));
    FindimCompatibility compat = check_compatibility(rho, loc);
    EntwiningData psi = canonical_entwining_from_coaction(rho);
    EntwiningData psi_mu = canonical_entwining_from_coaction(*compat.localized_coaction);
    InducedLaw il = induced_l(psi, psi_mu, loc, regular_module(rho.source));
    CHECK(il.report.passed());
    CHECK(il.l.has_value());
}

TEST_CASE("descent fails for an incompatible pair, with a witness") {
    CoactionData rho = fx::prod();
    FindimLocalization loc = loc_at(rho.source, unit_vec(4, 0, Q));
    EntwiningData psi = canonical_entwining_from_coaction(rho);
    EntwiningData bad_mu = flip_entwining(loc.localized, rho.target.coalgebra);
    CHECK(!check_compatible_pair(psi, bad_mu, loc.iota).passed());
    InducedLaw il = induced_l(psi, bad_mu, loc, regular_module(rho.source));
    CHECK(!il.report.passed());
    CHECK(!il.report.witnesses.empty());
}

TEST_CASE("entwined distributive law on the FX-PROD pair") {
    CoactionData rho = fx::prod();
    FunctorProbe probe = default_probe(rho.source);
    FindimLocalization loc = loc_at(rho.source, unit_vec(4, 0, Q));
    FindimCompatibility compat = check_compatibility(rho, loc);
    EntwiningData psi = canonical_entwining_from_coaction(rho);
    EntwiningData psi_mu = canonical_entwining_from_coaction(*compat.localized_coaction);
    CHECK(check_entwined_distributivity(psi, psi_mu, loc, probe).passed());

    // trivial localization
    FindimLocalization triv = loc_at(rho.source, rho.source.unit);
    CHECK(check_entwined_distributivity(psi, psi, triv, probe).passed());

    // perturbed psi_mu fails
    std::mt19937_64 rng(7);
    EntwiningData bad = psi_mu;
    bad.psi = testing::perturb_entry(bad.psi, rng);
    CHECK(!check_entwined_distributivity(psi, bad, loc, probe).passed());
}

TEST_CASE("entwined modules: E with its canonical coaction, lifted along the localization") {
    CoactionData rho = fx::prod();
    FindimLocalization loc = loc_at(rho.source, unit_vec(4, 0, Q));
    FindimCompatibility compat = check_compatibility(rho, loc);
    EntwiningData psi = canonical_entwining_from_coaction(rho);
    EntwiningData psi_mu = canonical_entwining_from_coaction(*compat.localized_coaction);

    // lambda = flip ∘ rho: E -> B⊗E
    ModuleData reg = regular_module(rho.source);
    LinearMap lambda = flip_map(reg.dim, rho.target.dim(), Q).compose(rho.rho);
    EntwinedModuleData em{reg, lambda};
    CHECK(check_entwined_module(psi, em).passed());

    CHECK(lift_entwined_localization(psi, psi_mu, loc, {em}).passed());

    // a broken coaction is rejected
    EntwinedModuleData bad{reg, flip_map(reg.dim, rho.target.dim(), Q)
                                    .compose(trivial_coaction(rho.source, rho.target).rho)};
    CheckReport rep = check_entwined_module(psi, bad);
    CHECK(!rep.passed());
}

TEST_CASE("skew canonical entwining: quantum plane grading") {
    fx::SkewCoactionFixture g = fx::qplane_grading();
    SkewEntwining psi = canonical_skew_entwining(g.e, g.b, g.eb, g.rho);
    CHECK(check_skew_entwining(psi, 2).passed());

    SkewLocalization loc = localize_at_generators(g.e, {"x"});
    SkewCompatibility compat = check_compatibility(g.rho, g.eb, loc, g.b);
    REQUIRE(compat.compatible());
    SkewEntwining psi_mu =
        canonical_skew_entwining(loc.localized, g.b, compat.localized_tensor, *compat.localized_coaction);
    CHECK(check_skew_entwining(psi_mu, 2).passed());
    CHECK(check_skew_compatible_pair(psi, psi_mu, loc.iota, 2).passed());
}

TEST_CASE("skew canonical entwining with a primitive generator") {
    fx::SkewCoactionFixture g = fx::kx_primitive();
    SkewEntwining psi = canonical_skew_entwining(g.e, g.b, g.eb, g.rho);
    CHECK(check_skew_entwining(psi, 2).passed());
}
