#pragma once

#include <functional>

#include "coact/findim.hpp"
#include "coact/skew.hpp"

namespace coact::fixtures {

/// Group bialgebra k[G]: basis indexed by group elements, group-like
/// comultiplication.  table(i,j) is the index of the product element.
BialgebraData group_bialgebra(const std::string& name, const std::vector<std::string>& element_names,
                              const std::function<std::size_t(std::size_t, std::size_t)>& table, const Field& f);

/// k[C2] = span{1, g}, g^2 = 1.
BialgebraData kc2(const Field& f = Field::rationals());
/// k[C2 x C2] = span{1, g, h, gh}.
BialgebraData c2c2(const Field& f = Field::rationals());
/// k x k with componentwise product, basis {e1, e2}.
StructureConstantAlgebra two_point(const Field& f = Field::rationals());
/// One-dimensional bialgebra B = k.
BialgebraData unit_bialgebra(const Field& f = Field::rationals());

/// E = B = k[C2] coacting on itself by the comultiplication.
CoactionData kc2_self(const Field& f = Field::rationals());
/// E = k[C2]⊗k^2 over B = k[C2]: Delta on the first factor, trivial on the second.
CoactionData prod(const Field& f = Field::rationals());
/// E = k[C2]⊗k^2⊗k^2, same grading coaction; carrier for the two-step
/// localization chain.
CoactionData prod_k2(const Field& f = Field::rationals());

/// H = k[C2] acting on k x k by swapping the idempotents.
struct SwapAction {
    BialgebraData h;
    StructureConstantAlgebra a;
    LinearMap act; // dim(A) x (dim(H)*dim(A))
};
SwapAction swap_action(const Field& f = Field::rationals());

/// Quantum plane: gens x, y with y·x = q·x·y.
SkewAlgebraPtr qplane(const Field& f = Field::rationals(), long q = 2);
/// k[g^{±1}] with g group-like.
SkewAlgebraPtr laurent_line(const Field& f = Field::rationals());
/// k[x] (commutative polynomial line); tag for the tagged variants below.
SkewAlgebraPtr poly_line(const Field& f = Field::rationals(), const std::string& gen = "x",
                         GenTag tag = GenTag::none);

struct SkewCoactionFixture {
    SkewAlgebraPtr e;
    SkewAlgebraPtr b;
    SkewTensor eb;
    SkewAlgebraHom rho;
};
/// Grading coaction of the Laurent line on the quantum plane:
/// rho(x) = x⊗g, rho(y) = y⊗g.
SkewCoactionFixture qplane_grading(const Field& f = Field::rationals(), long q = 2);
/// k[x] coacting on itself with x primitive: rho(x) = x⊗1 + 1⊗t.
SkewCoactionFixture kx_primitive(const Field& f = Field::rationals());

} // namespace coact::fixtures
