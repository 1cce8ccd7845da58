#include "coact/fixtures.hpp"

namespace coact::fixtures {

BialgebraData group_bialgebra(const std::string& name, const std::vector<std::string>& element_names,
                              const std::function<std::size_t(std::size_t, std::size_t)>& table, const Field& f) {
    const std::size_t n = element_names.size();
    StructureConstantAlgebra alg;
    alg.name = name;
    alg.dim = n;
    alg.basis = element_names;
    alg.mult = LinearMap(n, n * n, f);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) alg.mult.at(table(i, j), i * n + j) = Scalar::one(f);
    alg.unit = unit_vec(n, 0, f); // element 0 must be the group identity

    CoalgebraData co;
    co.name = name;
    co.dim = n;
    co.basis = element_names;
    co.comult = LinearMap(n * n, n, f);
    co.counit = LinearMap(1, n, f);
    for (std::size_t i = 0; i < n; ++i) {
        co.comult.at(i * n + i, i) = Scalar::one(f); // group-likes
        co.counit.at(0, i) = Scalar::one(f);
    }
    return BialgebraData{std::move(alg), std::move(co)};
}

BialgebraData kc2(const Field& f) {
    return group_bialgebra("KC2", {"1", "g"}, [](std::size_t i, std::size_t j) { return i ^ j; }, f);
}

BialgebraData c2c2(const Field& f) {
    return group_bialgebra("C2C2", {"1", "g", "h", "gh"}, [](std::size_t i, std::size_t j) { return i ^ j; }, f);
}

StructureConstantAlgebra two_point(const Field& f) {
    StructureConstantAlgebra a;
    a.name = "TwoPoint";
    a.dim = 2;
    a.basis = {"e1", "e2"};
    a.mult = LinearMap(2, 4, f);
    a.mult.at(0, 0) = Scalar::one(f); // e1*e1 = e1
    a.mult.at(1, 3) = Scalar::one(f); // e2*e2 = e2
    a.unit = Vec{Scalar::one(f), Scalar::one(f)};
    return a;
}

BialgebraData unit_bialgebra(const Field& f) {
    return group_bialgebra("k", {"1"}, [](std::size_t, std::size_t) { return std::size_t{0}; }, f);
}

CoactionData kc2_self(const Field& f) {
    BialgebraData b = kc2(f);
    return CoactionData{"delta", b.algebra, b, b.coalgebra.comult};
}

namespace {

/// Coaction on k[C2]⊗V (V with trivial grading): (g^i⊗v) |-> (g^i⊗v)⊗g^i.
CoactionData graded_by_first_factor(const std::string& name, const StructureConstantAlgebra& e,
                                    std::size_t trivial_dim, const BialgebraData& b, const Field& f) {
    LinearMap rho(e.dim * b.dim(), e.dim, f);
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = 0; j < trivial_dim; ++j) {
            std::size_t col = i * trivial_dim + j;
            rho.at(col * b.dim() + i, col) = Scalar::one(f);
        }
    return CoactionData{name, e, b, rho};
}

} // namespace

CoactionData prod(const Field& f) {
    BialgebraData b = kc2(f);
    StructureConstantAlgebra e = tensor_algebra(b.algebra, two_point(f));
    e.name = "Prod";
    return graded_by_first_factor("prod-grading", e, 2, b, f);
}

CoactionData prod_k2(const Field& f) {
    BialgebraData b = kc2(f);
    StructureConstantAlgebra e = tensor_algebra(tensor_algebra(b.algebra, two_point(f)), two_point(f));
    e.name = "ProdK2";
    return graded_by_first_factor("prodk2-grading", e, 4, b, f);
}

SwapAction swap_action(const Field& f) {
    SwapAction s{kc2(f), two_point(f), LinearMap(2, 4, f)};
    s.act.at(0, 0) = Scalar::one(f); // 1 |> e1 = e1
    s.act.at(1, 1) = Scalar::one(f); // 1 |> e2 = e2
    s.act.at(1, 2) = Scalar::one(f); // g |> e1 = e2
    s.act.at(0, 3) = Scalar::one(f); // g |> e2 = e1
    return s;
}

SkewAlgebraPtr qplane(const Field& f, long q) {
    return make_skew_algebra("QPlane", {"x", "y"}, {{0, 1, Scalar::from_long(q, f)}}, {false, false}, f);
}

SkewAlgebraPtr laurent_line(const Field& f) {
    return make_skew_algebra("Laurent", {"g"}, {}, {true}, f, {GenTag::grouplike});
}

SkewAlgebraPtr poly_line(const Field& f, const std::string& gen, GenTag tag) {
    return make_skew_algebra("Poly[" + gen + "]", {gen}, {}, {false}, f, {tag});
}

SkewCoactionFixture qplane_grading(const Field& f, long q) {
    SkewCoactionFixture fx{qplane(f, q), laurent_line(f), {}, {}};
    fx.eb = tensor_skew(fx.e, fx.b);
    SkewElement g = fx.eb.embed_right(SkewElement::generator(fx.b, 0));
    std::vector<SkewElement> images{fx.eb.embed_left(SkewElement::generator(fx.e, 0)) * g,
                                    fx.eb.embed_left(SkewElement::generator(fx.e, 1)) * g};
    fx.rho = *extend_algebra_map("grading", fx.e, fx.eb.algebra, std::move(images)).hom;
    return fx;
}

SkewCoactionFixture kx_primitive(const Field& f) {
    SkewCoactionFixture fx{poly_line(f, "x"), poly_line(f, "t", GenTag::primitive), {}, {}};
    fx.eb = tensor_skew(fx.e, fx.b);
    SkewElement x1 = fx.eb.embed_left(SkewElement::generator(fx.e, 0));
    SkewElement t1 = fx.eb.embed_right(SkewElement::generator(fx.b, 0));
    fx.rho = *extend_algebra_map("delta", fx.e, fx.eb.algebra, {x1 + t1}).hom;
    return fx;
}

} // namespace coact::fixtures
