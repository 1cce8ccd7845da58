#pragma once

#include "coact/findim.hpp"

namespace coact {

/// Finite test diagram: modules over a fixed algebra and verified module
/// morphisms between them.  Categorical identities are checked on probes by
/// exact matrix equality.
struct ProbeMap {
    std::string name;
    std::size_t src = 0, dst = 0;
    LinearMap matrix;
};

struct FunctorProbe {
    std::vector<ModuleData> modules;
    std::vector<ProbeMap> maps;
};

CheckReport check_probe(const FunctorProbe& p);

/// Regular module, one proper quotient, a further quotient, and the two
/// projections (a composable pair of non-identity morphisms).
FunctorProbe default_probe(const StructureConstantAlgebra& e);

/// Left-module structure on E/I for a left ideal I = E·v.
struct QuotientModule {
    ModuleData module;
    QuotientSpace carrier;
};
QuotientModule quotient_module(const StructureConstantAlgebra& e, const Subspace& left_ideal);

/// Quotient of a module by a submodule, with the projection.
QuotientModule quotient_of_module(const ModuleData& m, const Subspace& submodule);

} // namespace coact
