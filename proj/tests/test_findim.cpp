#include "doctest.h"

#include "coact/findim.hpp"
#include "coact/fixtures.hpp"
#include "perturb.hpp"

using namespace coact;
namespace fx = coact::fixtures;

namespace {
const Field Q = Field::rationals();
}

TEST_CASE("check_algebra accepts the stock fixtures") {
    CHECK(check_algebra(fx::kc2().algebra).passed());
    CHECK(check_algebra(fx::two_point()).passed());
    CHECK(check_algebra(fx::c2c2().algebra).passed());
    CHECK(check_algebra(tensor_algebra(fx::kc2().algebra, fx::two_point())).passed());
}

TEST_CASE("check_algebra reports a unit-law violation with its witness") {
    StructureConstantAlgebra a = fx::kc2().algebra;
    a.mult.at(0, 0) = Scalar(0); // now 1*1 = 0
    CheckReport rep = check_algebra(a);
    CHECK(!rep.passed());
    bool unit_violation = false;
    for (const auto& w : rep.witnesses) unit_violation |= w.object.find("unit") != std::string::npos;
    CHECK(unit_violation);
}

TEST_CASE("check_bialgebra: KC2 passes, broken comultiplication is caught") {
    CHECK(check_bialgebra(fx::kc2()).passed());
    CHECK(check_bialgebra(fx::unit_bialgebra()).passed());

    BialgebraData b = fx::kc2();
    // Delta(g) = g⊗1 breaks the counit law with witness g
    b.coalgebra.comult = LinearMap(4, 2, Q);
    b.coalgebra.comult.at(0, 0) = Scalar(1);
    b.coalgebra.comult.at(2, 1) = Scalar(1);
    CheckReport rep = check_bialgebra(b);
    REQUIRE(!rep.passed());
    bool counit_at_g = false;
    for (const auto& w : rep.witnesses)
        if (w.object.find("counit law") != std::string::npos && w.indices == std::vector<std::string>{"g"})
            counit_at_g = true;
    CHECK(counit_at_g);
}

TEST_CASE("check_comodule_algebra on the stock coactions") {
    CHECK(check_comodule_algebra(fx::kc2_self()).passed());
    CHECK(check_comodule_algebra(trivial_coaction(fx::two_point(), fx::kc2())).passed());
    CHECK(check_comodule_algebra(fx::prod()).passed());

    // rho(e1) = e1⊗1, rho(e2) = e2⊗g is not multiplicative: rho(e2*e2) != rho(e2)rho(e2)
    CoactionData bad{"bad", fx::two_point(), fx::kc2(), LinearMap(4, 2, Q)};
    bad.rho.at(0, 0) = Scalar(1);
    bad.rho.at(3, 1) = Scalar(1);
    CheckReport rep = check_comodule_algebra(bad);
    REQUIRE(!rep.passed());
    bool witness_e2 = false;
    for (const auto& w : rep.witnesses)
        if (w.object.find("multiplicative") != std::string::npos &&
            w.indices == std::vector<std::string>{"e2", "e2"})
            witness_e2 = true;
    CHECK(witness_e2);
}

TEST_CASE("check_hopf_module: E over itself passes, trivial coaction fails at (g,1)") {
    CoactionData rho = fx::kc2_self();
    HopfModuleData n{regular_module(rho.source), rho.target, rho.rho};
    CHECK(check_hopf_module(n, rho).passed());

    HopfModuleData broken = n;
    broken.coact = trivial_coaction(rho.source, rho.target).rho;
    CheckReport rep = check_hopf_module(broken, rho);
    REQUIRE(!rep.passed());
    bool at_g1 = false;
    for (const auto& w : rep.witnesses)
        if (w.object.find("Hopf compatibility") != std::string::npos &&
            w.indices == std::vector<std::string>{"g", "n0"})
            at_g1 = true;
    CHECK(at_g1);
}

TEST_CASE("extend_scalars along the identity preserves the module") {
    ModuleData m = regular_module(fx::kc2().algebra);
    ScalarExtension ext = extend_scalars(identity_hom(m.algebra), m);
    CHECK(ext.module.dim == m.dim);
    CHECK(is_invertible(ext.canonical));
    CHECK(check_module(ext.module).passed());
    CHECK(check_module_morphism(m, ext.module, ext.canonical).passed());
}

TEST_CASE("extend_scalars along the unit map k -> E gives the regular module") {
    BialgebraData kb = fx::unit_bialgebra();
    StructureConstantAlgebra e = fx::kc2().algebra;
    AlgebraHomFD unit_hom{"unit", kb.algebra, e, LinearMap::column(e.unit, Q)};
    CHECK(check_algebra_hom(unit_hom).passed());
    ModuleData m = regular_module(kb.algebra); // M = k
    ScalarExtension ext = extend_scalars(unit_hom, m);
    CHECK(ext.module.dim == e.dim);
    CHECK(check_module(ext.module).passed());
}

TEST_CASE("extend_scalars along the counit collapses the regular module to k") {
    BialgebraData b = fx::kc2();
    BialgebraData kb = fx::unit_bialgebra();
    AlgebraHomFD eps{"eps", b.algebra, kb.algebra, b.coalgebra.counit};
    CHECK(check_algebra_hom(eps).passed());
    ScalarExtension ext = extend_scalars(eps, regular_module(b.algebra));
    CHECK(ext.module.dim == 1); // relations identify g⊗1 with 1⊗1
}

TEST_CASE("extension of scalars is functorial up to the canonical comparison") {
    BialgebraData b = fx::kc2();
    BialgebraData kb = fx::unit_bialgebra();
    AlgebraHomFD f{"unit", kb.algebra, b.algebra, LinearMap::column(b.algebra.unit, Q)};
    AlgebraHomFD g{"eps", b.algebra, kb.algebra, b.coalgebra.counit};
    ModuleData m = regular_module(kb.algebra);

    ExtensionComparison cmp = compare_extension_composite(g, f, m);
    CHECK(is_invertible(cmp.comparison));
    // comparison ∘ canonical_{gf} = canonical_g ∘ canonical_f
    LinearMap lhs = cmp.comparison.compose(cmp.gf_ext.canonical);
    LinearMap rhs = cmp.gf_star.canonical.compose(cmp.f_ext.canonical);
    CHECK(lhs == rhs);
    CHECK(check_module_morphism(cmp.gf_ext.module, cmp.gf_star.module, cmp.comparison).passed());
}

TEST_CASE("coinvariants of the stock coactions") {
    BialgebraData b = fx::kc2();
    StructureConstantAlgebra e2 = fx::two_point();

    Subspace all = coinvariants(trivial_coaction(e2, b).rho, 2, b);
    CHECK(all.dim() == 2);

    Subspace unit_line = coinvariants(fx::kc2_self().rho, 2, b);
    REQUIRE(unit_line.dim() == 1);
    CHECK(unit_line.contains(b.algebra.unit));

    CoactionData p = fx::prod();
    Subspace co = coinvariants(p.rho, p.source.dim, p.target);
    CHECK(co.dim() == 2);
    CHECK(co.contains(unit_vec(4, 0, Q)));
    CHECK(co.contains(unit_vec(4, 1, Q)));
}

TEST_CASE("verifiers reject random single-entry perturbations") {
    std::mt19937_64 rng(321);
    BialgebraData b = fx::kc2();
    for (int trial = 0; trial < 100; ++trial) {
        BialgebraData mutant = b;
        switch (trial % 3) {
            case 0: mutant.algebra.mult = testing::perturb_entry(mutant.algebra.mult, rng); break;
            case 1: mutant.coalgebra.comult = testing::perturb_entry(mutant.coalgebra.comult, rng); break;
            case 2: mutant.coalgebra.counit = testing::perturb_entry(mutant.coalgebra.counit, rng); break;
        }
        CheckReport rep = check_bialgebra(mutant);
        CHECK(!rep.passed());
        CHECK(!rep.witnesses.empty());
    }
}

TEST_CASE("findim structures work verbatim over a prime field") {
    Field f5 = Field::prime(5);
    CHECK(check_bialgebra(fx::kc2(f5)).passed());
    CHECK(check_comodule_algebra(fx::prod(f5)).passed());
    Subspace co = coinvariants(fx::kc2_self(f5).rho, 2, fx::kc2(f5));
    CHECK(co.dim() == 1);
}
