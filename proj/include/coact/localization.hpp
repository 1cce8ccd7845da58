#pragma once

#include <variant>

#include "coact/findim.hpp"
#include "coact/probes.hpp"
#include "coact/skew.hpp"

namespace coact {

/// Perfect localization of a finite-dimensional algebra at a central
/// idempotent e: E_mu = E/(1-e)E with iota the projection.  Carries the
/// inverse image Q* (quotient by (1-e)M) and direct image Q_* (restriction
/// along iota) on modules.
struct FindimLocalization {
    StructureConstantAlgebra source; // E
    Vec idempotent;                  // e
    StructureConstantAlgebra localized;
    AlgebraHomFD iota;
    QuotientSpace carrier; // on E itself
    Subspace kernel;       // (1-e)E

    struct LocalizedModule {
        ModuleData module;     // Q*M over E_mu
        QuotientSpace carrier; // on M
        LinearMap eta;         // M -> Q*M (the unit of the adjunction)
    };
    LocalizedModule inverse_image(const ModuleData& m) const;
    /// Q*f on the localized carriers.
    LinearMap inverse_image_map(const LocalizedModule& src, const LocalizedModule& dst, const LinearMap& f) const;
    /// Restriction along iota: an E_mu-module viewed as an E-module.
    ModuleData direct_image(const ModuleData& n) const;

    /// Adjunction counit Q*Q_*N -> N for N over E_mu, with the localized
    /// carrier it is defined on.
    struct CounitData {
        LocalizedModule qq;
        LinearMap counit;
    };
    CounitData counit_map(const ModuleData& n) const;

    FunctorProbe localize_probe(const FunctorProbe& p) const;
};

struct FindimLocalizationResult {
    std::optional<FindimLocalization> loc;
    CheckReport report;
};
/// Errors (reported, not thrown): e not idempotent, e not central (with the
/// witnessing basis element).
FindimLocalizationResult localize_central_idempotent(const StructureConstantAlgebra& e, const Vec& idem);

/// Counit invertibility of Q*Q_* on all probe objects over E_mu, and
/// invertibility of the induced monad multiplication on all probe objects
/// over E.
CheckReport check_idempotent_monad(const FindimLocalization& loc, const FunctorProbe& probe_over_e);

/// Windowed substitute in the skew backend: certifies that multiplication
/// S^-1 E ⊗_E S^-1 E -> S^-1 E is bijective on window monomials by exhibiting
/// the Ore rewriting a⊗b ~ a s^-1 ⊗ e ~ ab⊗1 with exact q-factors, and that
/// localization is idempotent on presentations.
CheckReport check_idempotent_monad_windowed(const SkewLocalization& loc, long window);

// -- the compatibility criterion --------------------------------------------

struct FindimCompatibility {
    CheckReport report; // status pass = compatible, incompatible otherwise
    std::optional<CoactionData> localized_coaction; // rho_S on E_mu
    bool compatible() const { return report.passed(); }
};
/// Decides rho-compatibility of the localization by invertibility of
/// (iota⊗id)rho(e) in E_mu⊗B, and on success constructs the localized
/// coaction, verifies it is a comodule algebra, and verifies the square
/// rho_S∘iota = (iota⊗id)∘rho exactly.
FindimCompatibility check_compatibility(const CoactionData& rho, const FindimLocalization& loc);

/// Uniqueness: any candidate coaction closing the square equals the
/// canonical one (iota is surjective).
CheckReport verify_unique_localized_coaction(const CoactionData& rho, const FindimLocalization& loc,
                                             const CoactionData& candidate);

struct SkewCompatibility {
    CheckReport report;
    SkewTensor localized_tensor; // E_mu⊗B
    std::optional<SkewAlgebraHom> localized_coaction; // rho_S: E_mu -> E_mu⊗B
    bool compatible() const { return report.passed(); }
};
/// Skew criterion: each inverted generator s must have (iota⊗id)rho(s) a
/// unit of E_mu⊗B (graded-domain unit test); on success rho_S maps g to
/// (iota⊗id)rho(g) with stored inverses on the inverted set.
SkewCompatibility check_compatibility(const SkewAlgebraHom& rho, const SkewTensor& eb,
                                      const SkewLocalization& loc, const SkewAlgebraPtr& b);

// -- coinvariants under the localized coaction -------------------------------

struct CoinvariantsComparison {
    Subspace image;     // iota(coinvariants(rho)) inside E_mu
    Subspace localized; // coinvariants(rho_S)
    bool inclusion_holds = false;
    bool strict = false;
};
CoinvariantsComparison localized_coinvariants_compare(const CoactionData& rho, const FindimLocalization& loc,
                                                      const FindimCompatibility& compat);

struct SkewCoinvariantsComparison {
    std::size_t image_dim = 0, localized_dim = 0;
    bool inclusion_holds = false;
    bool strict = false;
    std::vector<std::string> localized_basis; // rendered combinations
};
/// Both sides intersected with the span of monomials whose exponents have
/// magnitude <= window, componentwise.
SkewCoinvariantsComparison localized_coinvariants_compare(const SkewAlgebraHom& rho, const SkewTensor& eb,
                                                          const SkewLocalization& loc, const SkewAlgebraPtr& b,
                                                          const SkewAlgebraHom& rho_s, const SkewTensor& loc_tensor,
                                                          long window);

// -- idempotent enumeration (triviality corollary instances) -----------------

struct IdempotentEnumeration {
    std::vector<Vec> idempotents;
    bool complete = false; // true when the center split into one-dimensional components
};
/// All central idempotents of a finite-dimensional algebra whose center is
/// split semisimple over the field (the 2^r subset sums of the primitive
/// ones); complete=false flags an unsplit component.
IdempotentEnumeration enumerate_central_idempotents(const StructureConstantAlgebra& a);

using LocalizationData = std::variant<FindimLocalization, SkewLocalization>;

} // namespace coact
