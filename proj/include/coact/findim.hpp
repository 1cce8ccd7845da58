#pragma once

#include <string>
#include <vector>

#include "coact/linalg.hpp"
#include "coact/report.hpp"

namespace coact {

/// Finite-dimensional algebra as structure constants: mult is a linear map
/// A⊗A -> A on the lexicographic tensor basis, unit a distinguished vector.
/// Nothing is assumed; check_algebra verifies the axioms.
struct StructureConstantAlgebra {
    std::string name;
    std::size_t dim = 0;
    LinearMap mult; // dim x dim^2
    Vec unit;       // dim
    std::vector<std::string> basis;

    const Field& field() const { return mult.field(); }
    Vec multiply(const Vec& a, const Vec& b) const { return mult.apply(kron_vec(a, b)); }
    Vec basis_vec(std::size_t i) const { return unit_vec(dim, i, field()); }
    /// Left multiplication by a as a dim x dim matrix.
    LinearMap left_mult(const Vec& a) const;
    LinearMap right_mult(const Vec& a) const;

    bool operator==(const StructureConstantAlgebra& o) const {
        return dim == o.dim && mult == o.mult && unit == o.unit;
    }
};

struct CoalgebraData {
    std::string name;
    std::size_t dim = 0;
    LinearMap comult; // dim^2 x dim
    LinearMap counit; // 1 x dim
    std::vector<std::string> basis;

    const Field& field() const { return comult.field(); }
};

struct BialgebraData {
    StructureConstantAlgebra algebra;
    CoalgebraData coalgebra;

    const std::string& name() const { return algebra.name; }
    std::size_t dim() const { return algebra.dim; }
    const Field& field() const { return algebra.field(); }
    const std::vector<std::string>& basis() const { return algebra.basis; }
};

/// Right coaction rho: E -> E⊗B, expected to be an algebra map.
struct CoactionData {
    std::string name;
    StructureConstantAlgebra source;
    BialgebraData target;
    LinearMap rho; // dim(E)*dim(B) x dim(E)
};

struct ModuleData {
    std::string name;
    StructureConstantAlgebra algebra;
    std::size_t dim = 0;
    LinearMap act; // dim x (dim(E)*dim)

    const Field& field() const { return act.field(); }
    Vec apply(const Vec& a, const Vec& m) const { return act.apply(kron_vec(a, m)); }
    /// Action of a fixed algebra element as a dim x dim matrix.
    LinearMap act_by(const Vec& a) const;
};

/// Relative Hopf module: left E-module with a right B-coaction on the same
/// space, compatible through the coaction of E.
struct HopfModuleData {
    ModuleData module;
    BialgebraData over; // B
    LinearMap coact;    // dim(N)*dim(B) x dim(N)
};

struct AlgebraHomFD {
    std::string name;
    StructureConstantAlgebra source;
    StructureConstantAlgebra target;
    LinearMap matrix; // dim(target) x dim(source)

    Vec apply(const Vec& a) const { return matrix.apply(a); }
};

/// Result of extension of scalars along f: E -> E': the module
/// f*M = E'⊗_E M realized as an explicit quotient of E'⊗M.
struct ScalarExtension {
    ModuleData module;    // over f.target
    LinearMap canonical;  // M -> f*M, m |-> class of 1⊗m
    QuotientSpace carrier; // projection/section for the ambient E'⊗M
};

// -- verifiers -------------------------------------------------------------

CheckReport check_algebra(const StructureConstantAlgebra& a);
CheckReport check_coalgebra(const CoalgebraData& c);
CheckReport check_bialgebra(const BialgebraData& b);
/// Comodule axioms for a coaction on a plain space (no multiplicativity).
CheckReport check_comodule(const LinearMap& coaction, std::size_t dim, const BialgebraData& b,
                           const std::vector<std::string>& labels, const std::string& check_name = "comodule");
CheckReport check_comodule_algebra(const CoactionData& rho);
CheckReport check_module(const ModuleData& m);
CheckReport check_module_morphism(const ModuleData& src, const ModuleData& dst, const LinearMap& f,
                                  const std::string& tag = "module morphism");
CheckReport check_algebra_hom(const AlgebraHomFD& f);
CheckReport check_hopf_module(const HopfModuleData& n, const CoactionData& rho_e);

// -- constructions ----------------------------------------------------------

/// Multiplication of A⊗B as a structure-constant algebra (componentwise).
StructureConstantAlgebra tensor_algebra(const StructureConstantAlgebra& a, const StructureConstantAlgebra& b);
/// E as a left module over itself.
ModuleData regular_module(const StructureConstantAlgebra& a);
/// rho(a) = a⊗1.
CoactionData trivial_coaction(const StructureConstantAlgebra& e, const BialgebraData& b);
AlgebraHomFD identity_hom(const StructureConstantAlgebra& a);
AlgebraHomFD compose_homs(const AlgebraHomFD& g, const AlgebraHomFD& f);

ScalarExtension extend_scalars(const AlgebraHomFD& f, const ModuleData& m);
/// Canonical comparison (gf)*M -> g*(f*M); invertible exactly when the
/// pasting data is consistent.  Returned with the two extensions used.
struct ExtensionComparison {
    ScalarExtension gf_ext;  // (gf)*M
    ScalarExtension f_ext;   // f*M
    ScalarExtension gf_star; // g*(f*M)
    LinearMap comparison;    // (gf)*M -> g*(f*M)
};
ExtensionComparison compare_extension_composite(const AlgebraHomFD& g, const AlgebraHomFD& f, const ModuleData& m);

/// Basis of {u : coaction(u) = u⊗1}.
Subspace coinvariants(const LinearMap& coaction, std::size_t dim, const BialgebraData& b);

/// Multiplication of the tensor-product algebra carried by E⊗B, as a map
/// (E⊗B)⊗(E⊗B) -> E⊗B.
LinearMap tensor_product_mult(const StructureConstantAlgebra& e, const StructureConstantAlgebra& b);

} // namespace coact
