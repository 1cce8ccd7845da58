#pragma once

#include "coact/hopfcat.hpp"
#include "coact/localization.hpp"
#include "coact/skew.hpp"

namespace coact {

/// Entwining psi: A⊗C -> C⊗A between an algebra and a coalgebra, as a matrix
/// in the findim backend.  Nothing is assumed; check_entwining verifies the
/// four axioms.
struct EntwiningData {
    std::string name;
    StructureConstantAlgebra a;
    CoalgebraData c;
    LinearMap psi; // (dim C * dim A) x (dim A * dim C)
};

CheckReport check_entwining(const EntwiningData& e);

/// psi = flip: a⊗c |-> c⊗a.
EntwiningData flip_entwining(const StructureConstantAlgebra& a, const CoalgebraData& c);

/// psi(e⊗b) = Σ e_(1)b ⊗ e_(0), with C the underlying coalgebra of B.
EntwiningData canonical_entwining_from_coaction(const CoactionData& rho);

/// Commutation of (C⊗iota)∘psi = psi_mu∘(iota⊗C) on basis pairs.
CheckReport check_compatible_pair(const EntwiningData& psi, const EntwiningData& psi_mu, const AlgebraHomFD& iota);

/// The psi-comonad G(M) = (C⊗M, (C⊗act)∘(psi⊗M)).
ComonadInstance entwining_comonad(const EntwiningData& e);

/// The canonical entwining's comonad agrees with the Hopf comonad through
/// the flip M⊗B ≅ B⊗M, as modules, comonads, and naturally in M.
CheckReport compare_entwining_comonad(const CoactionData& rho, const FunctorProbe& probe);

/// l_M: A_mu⊗_A GM -> G(A_mu⊗_A M), the descent of psi_mu⊗M to the
/// tensor-relation quotients, with the descent and linearity checks.
struct InducedLaw {
    CheckReport report;
    std::optional<LinearMap> l;
};
InducedLaw induced_l(const EntwiningData& psi, const EntwiningData& psi_mu, const FindimLocalization& loc,
                     const ModuleData& m);

/// All l_M together form a mixed distributive law between the localization
/// monad and the psi-comonad; verified on the probe.
CheckReport check_entwined_distributivity(const EntwiningData& psi, const EntwiningData& psi_mu,
                                          const FindimLocalization& loc, const FunctorProbe& probe);

/// Entwined module: left A-module with a left C-coaction on the same space,
/// A-linear with respect to the psi-twisted action on C⊗M.
struct EntwinedModuleData {
    ModuleData module;
    LinearMap coact; // (dim C * dim M) x dim M
};
CheckReport check_entwined_module(const EntwiningData& e, const EntwinedModuleData& m);

/// Q*_psi on entwined-module probes, with U_mu∘Q*_psi = Q*∘U on the nose.
CheckReport lift_entwined_localization(const EntwiningData& psi, const EntwiningData& psi_mu,
                                       const FindimLocalization& loc,
                                       const std::vector<EntwinedModuleData>& probes);

// -- skew backend -------------------------------------------------------------
// The coalgebra side is the monomial coalgebra of a fully tagged commutative
// skew algebra B; psi is given by substitution from a coaction.  Axioms are
// checked on generator x window-monomial pairs (the module-category
// operations above remain findim-only, where finite probes exist).

struct SkewEntwining {
    std::string name;
    SkewAlgebraPtr a; // E
    SkewAlgebraPtr b; // tagged, commutative
    SkewTensor eb;    // E⊗B (domain side)
    SkewTensor be;    // B⊗E (codomain side)
    SkewAlgebraHom rho;

    /// psi on an element of E and an element of B, valued in B⊗E.
    SkewElement apply(const SkewElement& e_elem, const SkewElement& b_elem) const;
};

SkewEntwining canonical_skew_entwining(const SkewAlgebraPtr& a, const SkewAlgebraPtr& b, const SkewTensor& eb,
                                       const SkewAlgebraHom& rho);
CheckReport check_skew_entwining(const SkewEntwining& e, long window);
CheckReport check_skew_compatible_pair(const SkewEntwining& psi, const SkewEntwining& psi_mu,
                                       const SkewAlgebraHom& iota, long window);

} // namespace coact
