#pragma once

#include <functional>

#include "coact/findim.hpp"
#include "coact/localization.hpp"
#include "coact/probes.hpp"

namespace coact {

/// Concrete endofunctor on modules over a fixed algebra, given by its object
/// and morphism assignments.  All assignments are pure functions of the
/// module data, so repeated evaluation yields identical matrices.
struct Endofunctor {
    std::string name;
    std::function<ModuleData(const ModuleData&)> on_object;
    std::function<LinearMap(const ModuleData& src, const ModuleData& dst, const LinearMap&)> on_morphism;
};

Endofunctor identity_endofunctor();
Endofunctor compose_endofunctors(const Endofunctor& outer, const Endofunctor& inner);

/// F(id) = id and F(g∘f) = F(g)∘F(f) on the probe, plus F of every probe
/// map is a module morphism between valid modules.
CheckReport check_functoriality(const Endofunctor& f, const FunctorProbe& probe);

/// Natural family indexed by objects (components computed from the object).
struct NatFamily {
    std::string name;
    std::function<LinearMap(const ModuleData&)> component;
};

/// Components are module morphisms F(M) -> G(M) and the naturality squares
/// commute for every probe map.
CheckReport check_naturality(const NatFamily& alpha, const Endofunctor& f, const Endofunctor& g,
                             const FunctorProbe& probe);

struct ComonadInstance {
    Endofunctor functor;
    NatFamily delta;   // F => FF
    NatFamily epsilon; // F => Id
};
CheckReport check_comonad_laws(const ComonadInstance& c, const FunctorProbe& probe);

struct MonadInstance {
    Endofunctor functor;
    NatFamily mu;  // FF => F
    NatFamily eta; // Id => F
};
CheckReport check_monad_laws(const MonadInstance& t, const FunctorProbe& probe);

// -- the comonad for relative Hopf modules ----------------------------------

/// G: M |-> M⊗B with e(m⊗b) = Σ e_(0)m ⊗ e_(1)b, δ = id⊗Δ, ε = id⊗ε_B.
ComonadInstance build_hopf_comonad(const CoactionData& rho);
/// Builds the comonad and verifies all its laws on the probe.
CheckReport verify_hopf_comonad(const CoactionData& rho, const FunctorProbe& probe);

/// M ◁ Q = M⊗Q with e(m⊗q) = Σ e_(0)m ⊗ e_(1)q for a left B-module Q.
ModuleData action_module(const CoactionData& rho, const ModuleData& m, const ModuleData& q);

// -- localization monad (tensor realization) ---------------------------------

/// Q_*Q* with Q*M = E_mu ⊗_E M realized by extend_scalars along iota; the
/// monad lives on E-modules.
MonadInstance extension_monad(const FindimLocalization& loc);

/// Q* as a functor to E_mu-modules, with access to the quotient carriers.
struct ExtensionFunctor {
    FindimLocalization loc;
    ScalarExtension at(const ModuleData& m) const;
    ModuleData on_object(const ModuleData& m) const;
    LinearMap on_morphism(const ModuleData& src, const ModuleData& dst, const LinearMap& f) const;
};

// -- mixed distributive laws --------------------------------------------------

/// Four mixed-law diagrams for a monad T over a comonad G with l: TG => GT,
/// plus naturality and module-morphism checks for the components.
CheckReport check_mixed_distributive_law(const NatFamily& l, const MonadInstance& t, const ComonadInstance& g,
                                         const FunctorProbe& probe);

/// Mixed law between the localization monad and the action -◁P: unit and
/// multiplication compatibility for each supplied B-module P, the tensor
/// coherence l_{M,P⊗P'} = (l_{M,P}◁P')∘l_{M◁P,P'}, and l_{M,k} = id.
CheckReport check_action_distributive_law(const FindimLocalization& loc, const CoactionData& rho,
                                          const CoactionData& rho_s, const FunctorProbe& probe,
                                          const std::vector<ModuleData>& b_modules);

/// The canonical family l_{M,P}: Q_*Q*(M⊗P) -> (Q_*Q*M)⊗P sending
/// [e⊗(m⊗p)] to Σ (e_(0)⊗m) ⊗ e_(1)p, for P = B it intertwines the
/// localization monad with the Hopf comonad.  Components carry a
/// well-definedness check absorbed into `report`.
struct MixedLawFamily {
    NatFamily family;
    CheckReport report; // per-probe-object descent checks
};
MixedLawFamily hopf_mixed_law(const FindimLocalization& loc, const CoactionData& rho, const CoactionData& rho_s,
                              const FunctorProbe& probe);
/// Same shape with the e_(1)-action dropped (negative control): the raw map
/// no longer descends to the quotient, which the report witnesses.
MixedLawFamily hopf_mixed_law_broken(const FindimLocalization& loc, const CoactionData& rho,
                                     const FunctorProbe& probe);

// -- maps of comodule algebras over varying bialgebras ------------------------

struct BialgebraHom {
    std::string name;
    BialgebraData source, target;
    LinearMap matrix;
};
CheckReport check_bialgebra_hom(const BialgebraHom& phi);
BialgebraHom identity_bialgebra_hom(const BialgebraData& b);

/// rho' ∘ f = (f⊗phi) ∘ rho.
CheckReport check_comodule_algebra_map(const AlgebraHomFD& f, const BialgebraHom& phi, const CoactionData& rho,
                                       const CoactionData& rho2);

/// The canonical 2-cell alpha_{M,Q}: f*(M◁Q) -> (f*M) ◁' (phi*Q) given by
/// e'⊗(m⊗q) |-> Σ (e'_(0)⊗m)⊗(e'_(1)⊗q), with well-definedness and
/// E'-linearity verified.
struct AlphaComponent {
    CheckReport report;
    ScalarExtension domain_ext; // f*(M◁Q)
    ScalarExtension m_ext;      // f*M
    ScalarExtension q_ext;      // phi*Q
    ModuleData codomain;        // (f*M) ◁' (phi*Q)
    std::optional<LinearMap> alpha;
};
AlphaComponent alpha_component(const AlgebraHomFD& f, const BialgebraHom& phi, const CoactionData& rho,
                               const CoactionData& rho2, const ModuleData& m, const ModuleData& q);

/// Pasting: modulo the canonical comparisons g*f* ≅ (gf)*, the composite of
/// the two alphas equals the alpha of the composite, exactly.
CheckReport check_pasting(const AlgebraHomFD& f, const BialgebraHom& phi, const AlgebraHomFD& g,
                          const BialgebraHom& phi2, const CoactionData& rho, const CoactionData& rho_mid,
                          const CoactionData& rho_end, const std::vector<ModuleData>& ms,
                          const std::vector<ModuleData>& qs);

/// The B-component of alpha, collapsed along phi*B ≅ B', is a morphism of
/// comonads f*∘G ⇒ G'∘f*: it intertwines the comultiplications and counits
/// on every probe object, exactly.
CheckReport check_comonad_morphism_along(const AlgebraHomFD& f, const BialgebraHom& phi, const CoactionData& rho,
                                         const CoactionData& rho2, const FunctorProbe& probe);

/// f^{*B}: (N, rho_N) |-> (f*N, alpha_N ∘ f*(rho_N)) with the canonical
/// collapse B'⊗_B B ≅ B'.
struct HopfLift {
    CheckReport report;
    std::optional<HopfModuleData> lifted;
};
HopfLift lift_inverse_image(const AlgebraHomFD& f, const BialgebraHom& phi, const CoactionData& rho,
                            const CoactionData& rho2, const HopfModuleData& n);

/// Q^{B*} for a compatible localization: lift along iota over id_B.  Verifies
/// the forgetful square U_mu ∘ Q^{B*} = Q* ∘ U on the nose per probe object.
CheckReport lift_localization_hopf(const FindimLocalization& loc, const CoactionData& rho,
                                   const FindimCompatibility& compat, const std::vector<HopfModuleData>& probes);

// -- the localized comonad G_mu ----------------------------------------------

struct LocalizedComonad {
    ComonadInstance g_mu; // on E_mu-modules
    /// alpha_l at an E-module M: Q*GM -> G_mu Q*M.
    std::function<LinearMap(const ModuleData&)> alpha;
    CheckReport report; // comonad laws, mixed pentagon, counit triangle
};
LocalizedComonad build_localized_comonad(const FindimLocalization& loc, const ComonadInstance& g,
                                         const NatFamily& l, const FunctorProbe& probe_over_e);

/// Comparison of G_mu with the comonad of the localized coaction: a natural
/// isomorphism commuting with both comonad structures.
CheckReport compare_localized_comonad(const FindimLocalization& loc, const CoactionData& rho,
                                      const FindimCompatibility& compat, const FunctorProbe& probe_over_e);

// -- module algebras (Hopf actions) -------------------------------------------

struct HopfActionData {
    std::string name;
    BialgebraData h;
    StructureConstantAlgebra a;
    LinearMap act; // dim(A) x (dim(H)*dim(A))
};
/// H-module axioms, h |> (ab) = Σ (h_(1)|>a)(h_(2)|>b), and h |> 1 = ε(h)1.
CheckReport check_hopf_action(const HopfActionData& act);

/// T(M) = M⊗H with a |> (m⊗h) = Σ ((h_(2)|>a) |> m) ⊗ h_(1),
/// mu = id⊗mult, eta = id⊗unit.
MonadInstance build_hopf_monad(const HopfActionData& act);
/// Assembles the monad and verifies actionhood, functoriality, that mu and
/// eta are module maps, and the monad laws on the probe.
CheckReport verify_hopf_monad(const HopfActionData& act, const FunctorProbe& probe);

struct ActionCompatibility {
    CheckReport report;
    std::optional<HopfActionData> localized; // the induced action on A_mu
    bool compatible() const { return report.passed(); }
};
/// Attempts |>' (h, iota(a)) := iota(h |> a); incompatibility witnesses follow
/// the forced-unit values first, then kernel stability, then the Hopf-action
/// axioms of the candidate, then the full square.
ActionCompatibility check_action_compat(const HopfActionData& act, const FindimLocalization& loc);

/// Monad-monad distributive law Q_*Q*T => TQ_*Q* induced by a compatible
/// action, verified on the probe.
CheckReport monad_loc_distributive(const HopfActionData& act, const FindimLocalization& loc,
                                   const FunctorProbe& probe);

} // namespace coact
