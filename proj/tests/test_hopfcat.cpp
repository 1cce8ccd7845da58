#include "doctest.h"

#include "coact/fixtures.hpp"
#include "coact/hopfcat.hpp"
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

HopfActionData trivial_action(const BialgebraData& h, const StructureConstantAlgebra& a) {
    LinearMap act = tensor_map(h.coalgebra.counit, LinearMap::identity(a.dim, a.field()));
    return HopfActionData{"trivial", h, a, act};
}

} // namespace

TEST_CASE("Hopf comonad over B = k is the identity functor") {
    StructureConstantAlgebra e = fx::two_point();
    CoactionData rho = trivial_coaction(e, fx::unit_bialgebra());
    FunctorProbe probe = default_probe(e);
    CHECK(verify_hopf_comonad(rho, probe).passed());
    ComonadInstance g = build_hopf_comonad(rho);
    ModuleData gm = g.functor.on_object(probe.modules[0]);
    CHECK(gm.dim == probe.modules[0].dim);
    CHECK(gm.act == probe.modules[0].act);
}

TEST_CASE("Hopf comonad laws hold for KC2 and FX-PROD, exactly") {
    CoactionData rho = fx::kc2_self();
    CHECK(verify_hopf_comonad(rho, default_probe(rho.source)).passed());

    CoactionData prod = fx::prod();
    CHECK(verify_hopf_comonad(prod, default_probe(prod.source)).passed());
}

TEST_CASE("a non-coassociative comultiplication breaks the comonad, with witness") {
    CoactionData rho = fx::kc2_self();
    FunctorProbe probe = default_probe(rho.source);
    ComonadInstance g = build_hopf_comonad(rho);

    BialgebraData broken = rho.target;
    broken.coalgebra.comult.at(1, 1) = Scalar(1); // Delta(g) = g⊗g + 1⊗g
    ComonadInstance bad = g;
    bad.delta.component = [broken](const ModuleData& m) {
        return tensor_map(LinearMap::identity(m.dim, m.field()), broken.coalgebra.comult);
    };
    CheckReport rep = check_comonad_laws(bad, probe);
    CHECK(!rep.passed());
    CHECK(!rep.witnesses.empty());
}

TEST_CASE("G-comodules on the probe coincide with relative Hopf modules") {
    CoactionData rho = fx::kc2_self();
    ComonadInstance g = build_hopf_comonad(rho);

    auto g_comodule_ok = [&](const ModuleData& m, const LinearMap& chi) {
        ModuleData gm = g.functor.on_object(m);
        if (!check_module_morphism(m, gm, chi, "structure map").passed()) return false;
        LinearMap coassoc_l = g.functor.on_morphism(m, gm, chi).compose(chi);
        LinearMap coassoc_r = g.delta.component(m).compose(chi);
        LinearMap counit = g.epsilon.component(m).compose(chi);
        return coassoc_l == coassoc_r && counit == LinearMap::identity(m.dim, m.field());
    };

    ModuleData reg = regular_module(rho.source);
    HopfModuleData good{reg, rho.target, rho.rho};
    CHECK(check_hopf_module(good, rho).passed());
    CHECK(g_comodule_ok(reg, rho.rho));

    HopfModuleData bad{reg, rho.target, trivial_coaction(rho.source, rho.target).rho};
    CHECK(!check_hopf_module(bad, rho).passed());
    CHECK(!g_comodule_ok(reg, bad.coact));
}

TEST_CASE("the cofree Hopf module G(k) passes check_hopf_module") {
    CoactionData rho = fx::kc2_self();
    // k as an E-module through the counit
    ModuleData k_mod{"k", rho.source, 1, rho.target.coalgebra.counit};
    CHECK(check_module(k_mod).passed());
    ComonadInstance g = build_hopf_comonad(rho);
    ModuleData gk = g.functor.on_object(k_mod);
    HopfModuleData cofree{gk, rho.target, g.delta.component(k_mod)};
    CHECK(check_hopf_module(cofree, rho).passed());
}

TEST_CASE("extension monad laws on probes") {
    CoactionData prod = fx::prod();
    FunctorProbe probe = default_probe(prod.source);
    FindimLocalization loc = loc_at(prod.source, unit_vec(4, 0, Q));
    CHECK(check_monad_laws(extension_monad(loc), probe).passed());

    FindimLocalization trivial = loc_at(prod.source, prod.source.unit);
    CHECK(check_monad_laws(extension_monad(trivial), probe).passed());
}

TEST_CASE("mixed distributive law for the localization monad and the Hopf comonad") {
    CoactionData rho = fx::prod();
    FunctorProbe probe = default_probe(rho.source);
    FindimLocalization loc = loc_at(rho.source, unit_vec(4, 0, Q));
    FindimCompatibility compat = check_compatibility(rho, loc);
    REQUIRE(compat.compatible());

    MixedLawFamily l = hopf_mixed_law(loc, rho, *compat.localized_coaction, probe);
    CHECK(l.report.passed());
    MonadInstance t = extension_monad(loc);
    ComonadInstance g = build_hopf_comonad(rho);
    CHECK(check_mixed_distributive_law(l.family, t, g, probe).passed());
}

TEST_CASE("trivial localization: the identity-shaped mixed law passes") {
    CoactionData rho = fx::kc2_self();
    FunctorProbe probe = default_probe(rho.source);
    FindimLocalization loc = loc_at(rho.source, rho.source.unit);
    FindimCompatibility compat = check_compatibility(rho, loc);
    MixedLawFamily l = hopf_mixed_law(loc, rho, *compat.localized_coaction, probe);
    CHECK(check_mixed_distributive_law(l.family, extension_monad(loc), build_hopf_comonad(rho), probe).passed());
}

TEST_CASE("dropping the e_(1) factor destroys well-definedness of the law") {
    CoactionData rho = fx::prod();
    FunctorProbe probe = default_probe(rho.source);
    FindimLocalization loc = loc_at(rho.source, unit_vec(4, 0, Q));
    MixedLawFamily broken = hopf_mixed_law_broken(loc, rho, probe);
    CHECK(!broken.report.passed());
    CHECK(!broken.report.witnesses.empty());
}

TEST_CASE("a perturbed law component breaks the mixed-law diagrams") {
    CoactionData rho = fx::prod();
    FunctorProbe probe = default_probe(rho.source);
    FindimLocalization loc = loc_at(rho.source, unit_vec(4, 0, Q));
    FindimCompatibility compat = check_compatibility(rho, loc);
    MixedLawFamily l = hopf_mixed_law(loc, rho, *compat.localized_coaction, probe);
    NatFamily tweaked{"l-tweaked", [base = l.family.component](const ModuleData& m) {
                          LinearMap c = base(m);
                          if (c.rows() > 0 && c.cols() > 0) c.at(0, 0) = c.at(0, 0) + Scalar(1);
                          return c;
                      }};
    CheckReport rep = check_mixed_distributive_law(tweaked, extension_monad(loc), build_hopf_comonad(rho), probe);
    CHECK(!rep.passed());
    CHECK(!rep.witnesses.empty());
}

TEST_CASE("action-flavored mixed law with varying B-modules") {
    CoactionData rho = fx::prod();
    FunctorProbe probe = default_probe(rho.source);
    FindimLocalization loc = loc_at(rho.source, unit_vec(4, 0, Q));
    FindimCompatibility compat = check_compatibility(rho, loc);
    REQUIRE(compat.compatible());
    std::vector<ModuleData> b_modules{regular_module(rho.target.algebra)};
    CHECK(check_action_distributive_law(loc, rho, *compat.localized_coaction, probe, b_modules).passed());
}

TEST_CASE("alpha at the identity pair is invertible") {
    CoactionData rho = fx::kc2_self();
    ModuleData m = regular_module(rho.source);
    ModuleData q = regular_module(rho.target.algebra);
    AlphaComponent a = alpha_component(identity_hom(rho.source), identity_bialgebra_hom(rho.target), rho, rho, m, q);
    REQUIRE(a.alpha.has_value());
    CHECK(is_invertible(*a.alpha));
}

TEST_CASE("alpha along the FX-PROD localization is well defined and E_mu-linear") {
    CoactionData rho = fx::prod();
    FindimLocalization loc = loc_at(rho.source, unit_vec(4, 0, Q));
    FindimCompatibility compat = check_compatibility(rho, loc);
    REQUIRE(compat.compatible());
    ModuleData m = regular_module(rho.source);
    ModuleData q = regular_module(rho.target.algebra);
    AlphaComponent a =
        alpha_component(loc.iota, identity_bialgebra_hom(rho.target), rho, *compat.localized_coaction, m, q);
    CHECK(a.report.passed());
    CHECK(a.alpha.has_value());
}

TEST_CASE("alpha is natural in both arguments on probe maps") {
    CoactionData rho = fx::prod();
    FindimLocalization loc = loc_at(rho.source, unit_vec(4, 0, Q));
    FindimCompatibility compat = check_compatibility(rho, loc);
    REQUIRE(compat.compatible());
    const CoactionData& rho_s = *compat.localized_coaction;
    BialgebraHom idb = identity_bialgebra_hom(rho.target);
    ExtensionFunctor ext{loc};

    FunctorProbe probe = default_probe(rho.source);
    const ModuleData& m = probe.modules[0];
    const ModuleData& m2 = probe.modules[1];
    const LinearMap& h = probe.maps[0].matrix; // M -> M'
    ModuleData q = regular_module(rho.target.algebra);

    AlphaComponent am = alpha_component(loc.iota, idb, rho, rho_s, m, q);
    AlphaComponent am2 = alpha_component(loc.iota, idb, rho, rho_s, m2, q);
    REQUIRE((am.alpha && am2.alpha));

    // naturality in M: alpha_{M',Q} ∘ iota*(h⊗id_Q) = (iota*(h)⊗id)∘alpha_{M,Q}
    LinearMap h_q = tensor_map(h, LinearMap::identity(q.dim, Q));
    LinearMap lhs = am2.alpha->compose(
        ext.on_morphism(action_module(rho, m, q), action_module(rho, m2, q), h_q));
    LinearMap rhs = tensor_map(ext.on_morphism(m, m2, h), LinearMap::identity(am.q_ext.module.dim, Q))
                        .compose(*am.alpha);
    CHECK(lhs == rhs);

    // naturality in Q: the counit B -> k is a map of B-modules
    ModuleData k_mod{"k", rho.target.algebra, 1, rho.target.coalgebra.counit};
    REQUIRE(check_module_morphism(q, k_mod, rho.target.coalgebra.counit).passed());
    AlphaComponent ak = alpha_component(loc.iota, idb, rho, rho_s, m, k_mod);
    REQUIRE(ak.alpha.has_value());
    AlgebraHomFD id_b_alg{"id", rho.target.algebra, rho.target.algebra, LinearMap::identity(2, Q)};
    ScalarExtension q_ext = extend_scalars(id_b_alg, q);
    ScalarExtension k_ext = extend_scalars(id_b_alg, k_mod);
    LinearMap phi_q = k_ext.carrier.projection
                          .compose(tensor_map(LinearMap::identity(2, Q), rho.target.coalgebra.counit))
                          .compose(q_ext.carrier.section); // phi*(counit)
    LinearMap id_q_counit = tensor_map(LinearMap::identity(m.dim, Q), rho.target.coalgebra.counit);
    LinearMap lhs_q = ak.alpha->compose(
        ext.on_morphism(action_module(rho, m, q), action_module(rho, m, k_mod), id_q_counit));
    LinearMap rhs_q = tensor_map(LinearMap::identity(am.m_ext.module.dim, Q), phi_q).compose(*am.alpha);
    CHECK(lhs_q == rhs_q);
}

TEST_CASE("alpha rejects a pair that is not a comodule-algebra map") {
    CoactionData rho = fx::kc2_self();
    ModuleData m = regular_module(rho.source);
    ModuleData q = regular_module(rho.target.algebra);
    // phi = counit-as-endomorphism is multiplicative but not a coalgebra map fit:
    // rho'∘f != (f⊗phi)∘rho for f = id
    BialgebraHom bad_phi = identity_bialgebra_hom(rho.target);
    bad_phi.matrix = LinearMap::column(rho.target.algebra.unit, Q).compose(rho.target.coalgebra.counit);
    AlphaComponent a = alpha_component(identity_hom(rho.source), bad_phi, rho, rho, m, q);
    CHECK(!a.alpha.has_value());
    CHECK(a.report.status == CheckStatus::error);
    CHECK(!a.report.witnesses.empty());
}

TEST_CASE("the B-component of alpha is a morphism of comonads") {
    CoactionData rho = fx::prod();
    FunctorProbe probe = default_probe(rho.source);

    CHECK(check_comonad_morphism_along(identity_hom(rho.source), identity_bialgebra_hom(rho.target), rho, rho,
                                       probe)
              .passed());

    FindimLocalization loc = loc_at(rho.source, unit_vec(4, 0, Q));
    FindimCompatibility compat = check_compatibility(rho, loc);
    REQUIRE(compat.compatible());
    CHECK(check_comonad_morphism_along(loc.iota, identity_bialgebra_hom(rho.target), rho,
                                       *compat.localized_coaction, probe)
              .passed());
}

TEST_CASE("pasting along identities is exact") {
    CoactionData rho = fx::kc2_self();
    std::vector<ModuleData> ms{regular_module(rho.source)};
    std::vector<ModuleData> qs{regular_module(rho.target.algebra)};
    CHECK(check_pasting(identity_hom(rho.source), identity_bialgebra_hom(rho.target), identity_hom(rho.source),
                        identity_bialgebra_hom(rho.target), rho, rho, rho, ms, qs)
              .passed());
}

TEST_CASE("pasting along two successive localizations of FX-PROD⊗k^2") {
    CoactionData rho8 = fx::prod_k2();
    // first invert 1⊗1⊗e1 (kills the last k^2 factor), then the image of
    // 1⊗e1⊗1 (kills the remaining one)
    Vec e_first = kron_vec(kron_vec(unit_vec(2, 0, Q), fx::two_point().unit), unit_vec(2, 0, Q));
    FindimLocalization loc1 = loc_at(rho8.source, e_first);
    FindimCompatibility compat1 = check_compatibility(rho8, loc1);
    REQUIRE(compat1.compatible());
    CHECK(loc1.localized.dim == 4);

    CoactionData rho4 = *compat1.localized_coaction;
    Vec e_second = loc1.iota.apply(kron_vec(kron_vec(unit_vec(2, 0, Q), unit_vec(2, 0, Q)), fx::two_point().unit));
    FindimLocalization loc2 = loc_at(rho4.source, e_second);
    FindimCompatibility compat2 = check_compatibility(rho4, loc2);
    REQUIRE(compat2.compatible());
    CHECK(loc2.localized.dim == 2);

    std::vector<ModuleData> ms{regular_module(rho8.source)};
    std::vector<ModuleData> qs{regular_module(rho8.target.algebra)};
    BialgebraHom idb = identity_bialgebra_hom(rho8.target);
    CHECK(check_pasting(loc1.iota, idb, loc2.iota, idb, rho8, rho4, *compat2.localized_coaction, ms, qs).passed());
}

TEST_CASE("omitting the canonical comparison breaks pasting (regression guard)") {
    CoactionData rho8 = fx::prod_k2();
    Vec e_first = kron_vec(kron_vec(unit_vec(2, 0, Q), fx::two_point().unit), unit_vec(2, 0, Q));
    FindimLocalization loc1 = loc_at(rho8.source, e_first);
    FindimCompatibility compat1 = check_compatibility(rho8, loc1);
    CoactionData rho4 = *compat1.localized_coaction;
    Vec e_second = loc1.iota.apply(kron_vec(kron_vec(unit_vec(2, 0, Q), unit_vec(2, 0, Q)), fx::two_point().unit));
    FindimLocalization loc2 = loc_at(rho4.source, e_second);
    FindimCompatibility compat2 = check_compatibility(rho4, loc2);
    REQUIRE(compat2.compatible());

    ModuleData m = regular_module(rho8.source);
    ModuleData q = regular_module(rho8.target.algebra);
    BialgebraHom idb = identity_bialgebra_hom(rho8.target);
    AlgebraHomFD gf = compose_homs(loc2.iota, loc1.iota);

    AlphaComponent a1 = alpha_component(loc1.iota, idb, rho8, rho4, m, q);
    AlphaComponent a2 = alpha_component(loc2.iota, idb, rho4, *compat2.localized_coaction, a1.m_ext.module,
                                        a1.q_ext.module);
    AlphaComponent a12 = alpha_component(gf, idb, rho8, *compat2.localized_coaction, m, q);
    REQUIRE((a1.alpha && a2.alpha && a12.alpha));

    ScalarExtension g_dom = extend_scalars(loc2.iota, a1.domain_ext.module);
    ScalarExtension g_cod = extend_scalars(loc2.iota, a1.codomain);
    LinearMap g_alpha1 = g_cod.carrier.projection
                             .compose(tensor_map(LinearMap::identity(2, Q), *a1.alpha))
                             .compose(g_dom.carrier.section);

    ExtensionComparison kw = compare_extension_composite(loc2.iota, loc1.iota, action_module(rho8, m, q));
    ExtensionComparison km = compare_extension_composite(loc2.iota, loc1.iota, m);
    ExtensionComparison kq = compare_extension_composite(
        AlgebraHomFD{"id", rho8.target.algebra, rho8.target.algebra, LinearMap::identity(2, Q)},
        AlgebraHomFD{"id", rho8.target.algebra, rho8.target.algebra, LinearMap::identity(2, Q)}, q);

    // with the canonical comparisons in place the pasting equality holds...
    LinearMap lhs = tensor_map(km.comparison, kq.comparison).compose(*a12.alpha);
    LinearMap rhs = a2.alpha->compose(g_alpha1).compose(kw.comparison);
    CHECK(lhs == rhs);
    // ...and it is genuinely sensitive to them: a rescaled comparison breaks it
    LinearMap bad_rhs = a2.alpha->compose(g_alpha1).compose(kw.comparison.scaled(Scalar(2)));
    CHECK(lhs != bad_rhs);
}

TEST_CASE("lift_inverse_image along the identity is an isomorphism of Hopf modules") {
    CoactionData rho = fx::kc2_self();
    HopfModuleData n{regular_module(rho.source), rho.target, rho.rho};
    HopfLift lift = lift_inverse_image(identity_hom(rho.source), identity_bialgebra_hom(rho.target), rho, rho, n);
    REQUIRE(lift.lifted.has_value());
    ScalarExtension ext = extend_scalars(identity_hom(rho.source), n.module);
    CHECK(is_invertible(ext.canonical));
    // canonical map intertwines the coactions
    LinearMap lhs = lift.lifted->coact.compose(ext.canonical);
    LinearMap rhs = tensor_map(ext.canonical, LinearMap::identity(2, Q)).compose(n.coact);
    CHECK(lhs == rhs);
}

TEST_CASE("lift_inverse_image rejects a broken Hopf module") {
    CoactionData rho = fx::kc2_self();
    HopfModuleData bad{regular_module(rho.source), rho.target, trivial_coaction(rho.source, rho.target).rho};
    HopfLift lift = lift_inverse_image(identity_hom(rho.source), identity_bialgebra_hom(rho.target), rho, rho, bad);
    CHECK(!lift.lifted.has_value());
    CHECK(lift.report.status == CheckStatus::error);
}

TEST_CASE("Q^{B*} reproduces the localized coaction and the forgetful square") {
    CoactionData rho = fx::prod();
    FindimLocalization loc = loc_at(rho.source, unit_vec(4, 0, Q));
    FindimCompatibility compat = check_compatibility(rho, loc);
    REQUIRE(compat.compatible());

    HopfModuleData e_as_hopf{regular_module(rho.source), rho.target, rho.rho};
    CHECK(lift_localization_hopf(loc, rho, compat, {e_as_hopf}).passed());

    // through iota* E ≅ E_mu, the lifted coaction equals rho_S
    HopfLift lift = lift_inverse_image(loc.iota, identity_bialgebra_hom(rho.target), rho,
                                       *compat.localized_coaction, e_as_hopf);
    REQUIRE(lift.lifted.has_value());
    ScalarExtension ext = extend_scalars(loc.iota, e_as_hopf.module);
    LinearMap collapse = loc.localized.mult
                             .compose(tensor_map(LinearMap::identity(loc.localized.dim, Q), loc.iota.matrix))
                             .compose(ext.carrier.section);
    REQUIRE(is_invertible(collapse));
    LinearMap lhs = compat.localized_coaction->rho.compose(collapse);
    LinearMap rhs = tensor_map(collapse, LinearMap::identity(2, Q)).compose(lift.lifted->coact);
    CHECK(lhs == rhs);
}

TEST_CASE("Q^{B*} is refused for the incompatible KC2 localization") {
    CoactionData rho = fx::kc2_self();
    Vec e = zero_vec(2, Q);
    e[0] = Scalar(1, 2);
    e[1] = Scalar(1, 2);
    FindimLocalization loc = loc_at(rho.source, e);
    FindimCompatibility compat = check_compatibility(rho, loc);
    REQUIRE(!compat.compatible());
    HopfModuleData n{regular_module(rho.source), rho.target, rho.rho};
    CheckReport rep = lift_localization_hopf(loc, rho, compat, {n});
    CHECK(rep.status == CheckStatus::error);
}

TEST_CASE("localized comonad: trivial localization reproduces G") {
    CoactionData rho = fx::kc2_self();
    FunctorProbe probe = default_probe(rho.source);
    FindimLocalization loc = loc_at(rho.source, rho.source.unit);
    FindimCompatibility compat = check_compatibility(rho, loc);
    MixedLawFamily l = hopf_mixed_law(loc, rho, *compat.localized_coaction, probe);
    LocalizedComonad lc = build_localized_comonad(loc, build_hopf_comonad(rho), l.family, probe);
    CHECK(lc.report.passed());
}

TEST_CASE("localized comonad for FX-PROD: laws, pentagon, and comparison with rho_S") {
    CoactionData rho = fx::prod();
    FunctorProbe probe = default_probe(rho.source);
    FindimLocalization loc = loc_at(rho.source, unit_vec(4, 0, Q));
    FindimCompatibility compat = check_compatibility(rho, loc);
    REQUIRE(compat.compatible());

    MixedLawFamily l = hopf_mixed_law(loc, rho, *compat.localized_coaction, probe);
    LocalizedComonad lc = build_localized_comonad(loc, build_hopf_comonad(rho), l.family, probe);
    CHECK(lc.report.passed());

    CHECK(compare_localized_comonad(loc, rho, compat, probe).passed());
}

TEST_CASE("a perturbed mixed law breaks the pentagon") {
    CoactionData rho = fx::prod();
    FunctorProbe probe = default_probe(rho.source);
    FindimLocalization loc = loc_at(rho.source, unit_vec(4, 0, Q));
    FindimCompatibility compat = check_compatibility(rho, loc);
    MixedLawFamily l = hopf_mixed_law(loc, rho, *compat.localized_coaction, probe);
    NatFamily tweaked{"l-tweaked", [base = l.family.component](const ModuleData& m) {
                          LinearMap c = base(m);
                          if (c.rows() > 0 && c.cols() > 0) c.at(0, 0) = c.at(0, 0) + Scalar(1);
                          return c;
                      }};
    LocalizedComonad lc = build_localized_comonad(loc, build_hopf_comonad(rho), tweaked, probe);
    CHECK(!lc.report.passed());
    bool pentagon_witness = false;
    for (const auto& w : lc.report.witnesses) pentagon_witness |= w.object.find("pentagon") != std::string::npos;
    CHECK(pentagon_witness);
}

TEST_CASE("check_hopf_action on the stock fixtures") {
    fx::SwapAction swap = fx::swap_action();
    CHECK(check_hopf_action(trivial_action(swap.h, swap.a)).passed());
    CHECK(check_hopf_action(HopfActionData{"swap", swap.h, swap.a, swap.act}).passed());

    // redefining g|>1 breaks the unit axiom
    HopfActionData bad{"bad", swap.h, swap.a, swap.act};
    bad.act.at(0, 3) = Scalar(0); // g |> e2 = 0, so g |> 1 = e2
    CheckReport rep = check_hopf_action(bad);
    CHECK(!rep.passed());
    bool unit_violation = false;
    for (const auto& w : rep.witnesses) unit_violation |= w.object.find("|> 1") != std::string::npos;
    CHECK(unit_violation);
}

TEST_CASE("Hopf monad laws: H = k is the identity monad; FX-SWAP passes") {
    StructureConstantAlgebra a = fx::two_point();
    FunctorProbe probe = default_probe(a);
    CHECK(verify_hopf_monad(trivial_action(fx::unit_bialgebra(), a), probe).passed());

    fx::SwapAction swap = fx::swap_action();
    CHECK(verify_hopf_monad(HopfActionData{"swap", swap.h, swap.a, swap.act}, probe).passed());
}

TEST_CASE("a perturbed comultiplication breaks the Hopf monad action") {
    fx::SwapAction swap = fx::swap_action();
    HopfActionData act{"swap", swap.h, swap.a, swap.act};
    FunctorProbe probe = default_probe(swap.a);
    std::mt19937_64 rng(17);
    bool found_witness = false;
    for (int trial = 0; trial < 20; ++trial) {
        HopfActionData mutant = act;
        mutant.h.coalgebra.comult = testing::perturb_entry(mutant.h.coalgebra.comult, rng);
        CheckReport rep = verify_hopf_monad(mutant, probe);
        if (!rep.passed() && !rep.witnesses.empty()) found_witness = true;
        CHECK(!rep.passed());
    }
    CHECK(found_witness);
}

TEST_CASE("action compatibility: FX-SWAP at e1 is refused with witness (g, e1)") {
    fx::SwapAction swap = fx::swap_action();
    HopfActionData act{"swap", swap.h, swap.a, swap.act};
    FindimLocalization loc = loc_at(swap.a, unit_vec(2, 0, Q));
    ActionCompatibility compat = check_action_compat(act, loc);
    CHECK(!compat.compatible());
    CHECK(compat.report.status == CheckStatus::incompatible);
    REQUIRE(!compat.report.witnesses.empty());
    CHECK(compat.report.witnesses[0].indices == std::vector<std::string>{"g", "e1"});
}

TEST_CASE("action compatibility: trivial action and trivial localization succeed") {
    fx::SwapAction swap = fx::swap_action();
    HopfActionData act{"swap", swap.h, swap.a, swap.act};
    FindimLocalization trivial = loc_at(swap.a, swap.a.unit);
    CHECK(check_action_compat(act, trivial).compatible());

    HopfActionData triv = trivial_action(swap.h, swap.a);
    FindimLocalization at_e1 = loc_at(swap.a, unit_vec(2, 0, Q));
    CHECK(check_action_compat(triv, at_e1).compatible());
    CHECK(check_action_compat(triv, trivial).compatible());
}

TEST_CASE("the categorical layer runs verbatim over a prime field") {
    Field f5 = Field::prime(5);
    CoactionData rho = fx::prod(f5);
    FunctorProbe probe = default_probe(rho.source);
    CHECK(verify_hopf_comonad(rho, probe).passed());

    FindimLocalization loc = loc_at(rho.source, unit_vec(4, 0, f5));
    FindimCompatibility compat = check_compatibility(rho, loc);
    REQUIRE(compat.compatible());
    MixedLawFamily l = hopf_mixed_law(loc, rho, *compat.localized_coaction, probe);
    CHECK(check_mixed_distributive_law(l.family, extension_monad(loc), build_hopf_comonad(rho), probe).passed());
    CHECK(compare_localized_comonad(loc, rho, compat, probe).passed());

    fx::SwapAction sw = fx::swap_action(f5);
    CHECK(verify_hopf_monad(HopfActionData{"swap", sw.h, sw.a, sw.act}, default_probe(sw.a)).passed());
}

TEST_CASE("monad-localization distributive law on the compatible cases") {
    fx::SwapAction swap = fx::swap_action();
    FunctorProbe probe = default_probe(swap.a);

    // trivial action, nontrivial localization
    HopfActionData triv = trivial_action(swap.h, swap.a);
    FindimLocalization at_e1 = loc_at(swap.a, unit_vec(2, 0, Q));
    CHECK(monad_loc_distributive(triv, at_e1, probe).passed());

    // nontrivial action, trivial localization
    HopfActionData act{"swap", swap.h, swap.a, swap.act};
    FindimLocalization trivial = loc_at(swap.a, swap.a.unit);
    CHECK(monad_loc_distributive(act, trivial, probe).passed());

    // H = k sub-case at e1
    HopfActionData sub = trivial_action(fx::unit_bialgebra(), swap.a);
    CHECK(monad_loc_distributive(sub, at_e1, probe).passed());

    // incompatible case is refused
    CHECK(monad_loc_distributive(act, at_e1, probe).status == CheckStatus::error);
}
