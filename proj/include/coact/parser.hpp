#pragma once

#include <map>
#include <set>
#include <variant>

#include "coact/entwining.hpp"
#include "coact/findim.hpp"
#include "coact/hopfcat.hpp"
#include "coact/localization.hpp"
#include "coact/probes.hpp"
#include "coact/skew.hpp"

namespace coact {

struct SourceLoc {
    std::size_t line = 1, col = 1;
};

/// Every diagnostic carries its source location.
class parse_error : public std::runtime_error {
public:
    parse_error(SourceLoc loc, const std::string& msg);
    const SourceLoc& where() const { return loc_; }

private:
    SourceLoc loc_;
};

/// Linear combination over named basis elements.
using LinComb = std::map<std::string, Scalar>;
/// Coefficients of simple tensors over pairs of named basis elements.
using TensorComb = std::map<std::pair<std::string, std::string>, Scalar>;
/// Commutative-word monomial: generator name -> nonzero exponent.
using MonomialExpr = std::map<std::string, long>;
/// Sum of scalar multiples of monomial⊗monomial, shared by the findim and
/// skew right-hand sides (findim lowers to single-name factors).
using MonoTensorComb = std::map<std::pair<MonomialExpr, MonomialExpr>, Scalar>;

struct AlgebraDecl {
    std::vector<std::string> basis;
    std::map<std::pair<std::string, std::string>, LinComb> mult; // absent products are zero
    LinComb unit;
    bool operator==(const AlgebraDecl&) const = default;
};

struct CoalgebraDecl {
    std::vector<std::string> basis;
    std::map<std::string, TensorComb> comult;
    std::map<std::string, Scalar> counit;
    bool operator==(const CoalgebraDecl&) const = default;
};

struct BialgebraDecl {
    AlgebraDecl alg;
    CoalgebraDecl co; // shares the basis
    bool operator==(const BialgebraDecl&) const = default;
};

struct SkewDecl {
    std::vector<std::string> gens;
    std::vector<std::string> inv;
    std::vector<std::string> grouplike, primitive;
    std::map<std::pair<std::string, std::string>, Scalar> q; // (x,y): y·x = q·x·y
    bool operator==(const SkewDecl&) const = default;
};

struct CoactionDecl {
    std::string source, target;
    std::map<std::string, MonoTensorComb> rho; // per basis element / generator
    bool operator==(const CoactionDecl&) const = default;
};

struct ActionDecl {
    std::string h, a;
    std::map<std::pair<std::string, std::string>, LinComb> act;
    bool operator==(const ActionDecl&) const = default;
};

struct ModuleDecl {
    std::string over;
    std::vector<std::string> basis;
    std::map<std::pair<std::string, std::string>, LinComb> act;
    bool operator==(const ModuleDecl&) const = default;
};

struct HopfModuleDecl {
    std::string over; // a declared coaction, fixing E and B
    std::vector<std::string> basis;
    std::map<std::pair<std::string, std::string>, LinComb> act;
    std::map<std::string, TensorComb> coact; // n -> Σ n'⊗b
    bool operator==(const HopfModuleDecl&) const = default;
};

struct LocalizeDecl {
    std::string target;
    bool skew_form = false;
    std::vector<std::pair<Scalar, MonomialExpr>> expr; // findim idempotent
    std::vector<std::string> gens;                     // skew generator set
    bool operator==(const LocalizeDecl&) const = default;
};

struct EntwiningDecl {
    std::string alg, coalg;
    std::map<std::pair<std::string, std::string>, TensorComb> psi; // (a,c) -> Σ c'⊗a'
    bool operator==(const EntwiningDecl&) const = default;
};

struct EntwinedModuleDecl {
    std::string over; // a declared entwining
    std::vector<std::string> basis;
    std::map<std::pair<std::string, std::string>, LinComb> act;
    std::map<std::string, TensorComb> coact; // m -> Σ c⊗m'
    bool operator==(const EntwinedModuleDecl&) const = default;
};

struct ProbeDecl {
    std::vector<std::string> modules;
    struct MapDecl {
        std::string name, src, dst;
        std::vector<std::vector<Scalar>> matrix;
        bool operator==(const MapDecl&) const = default;
    };
    std::vector<MapDecl> maps;
    bool operator==(const ProbeDecl&) const = default;
};

using DeclBody = std::variant<AlgebraDecl, CoalgebraDecl, BialgebraDecl, SkewDecl, CoactionDecl, ActionDecl,
                              ModuleDecl, HopfModuleDecl, LocalizeDecl, EntwiningDecl, EntwinedModuleDecl,
                              ProbeDecl>;

struct Declaration {
    std::string name;
    SourceLoc loc; // metadata, not part of structural equality
    DeclBody body;
    bool operator==(const Declaration& o) const { return name == o.name && body == o.body; }
};

struct PresentationBundle {
    Field field = Field::rationals();
    std::vector<Declaration> decls;
    bool operator==(const PresentationBundle& o) const { return field == o.field && decls == o.decls; }
};

/// Parses a presentation, resolving names and checking dimensions; throws
/// parse_error with a source location on any failure.
PresentationBundle parse(const std::string& text);

/// Canonical text; parse∘print is the identity on bundles.
std::string print(const PresentationBundle& bundle);

/// Typed objects built from a bundle.  Structural axioms are not checked
/// here; checking is an explicit verb in the other modules.
struct Environment {
    Field field = Field::rationals();
    std::vector<std::pair<std::string, std::string>> order; // (kind, name)

    std::map<std::string, StructureConstantAlgebra> algebras;
    std::map<std::string, CoalgebraData> coalgebras;
    std::map<std::string, BialgebraData> bialgebras;
    std::map<std::string, SkewAlgebraPtr> skews;
    std::map<std::string, CoactionData> coactions;
    struct SkewCoaction {
        SkewAlgebraPtr e, b;
        SkewTensor eb;
        std::vector<SkewElement> images; // per generator; hom is built by checks
    };
    std::map<std::string, SkewCoaction> skew_coactions;
    std::map<std::string, HopfActionData> actions;
    std::map<std::string, ModuleData> modules;
    struct HopfModule {
        HopfModuleData data;
        std::string coaction;
    };
    std::map<std::string, HopfModule> hopf_modules;
    struct LocalizeRequest {
        std::string target;
        bool skew = false;
        Vec idempotent;
        std::vector<std::string> gens;
    };
    std::map<std::string, LocalizeRequest> localizations;
    std::map<std::string, EntwiningData> entwinings;
    struct EntwinedModule {
        EntwinedModuleData data;
        std::string entwining;
    };
    std::map<std::string, EntwinedModule> entwined_modules;
    struct Probe {
        FunctorProbe probe;
        std::string algebra;
    };
    std::map<std::string, Probe> probes;
};

Environment elaborate(const PresentationBundle& bundle);

} // namespace coact
