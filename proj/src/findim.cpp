#include "coact/findim.hpp"

#include <stdexcept>

namespace coact {

namespace {

std::vector<std::string> labels_for(const std::vector<std::string>& names, std::size_t dim, const std::string& stem) {
    if (names.size() == dim) return names;
    return default_labels(dim, stem);
}

void require(bool cond, const std::string& what) {
    if (!cond) throw std::invalid_argument(what);
}

} // namespace

LinearMap StructureConstantAlgebra::left_mult(const Vec& a) const {
    return mult.compose(tensor_map(LinearMap::column(a, field()), LinearMap::identity(dim, field())));
}

LinearMap StructureConstantAlgebra::right_mult(const Vec& a) const {
    return mult.compose(tensor_map(LinearMap::identity(dim, field()), LinearMap::column(a, field())));
}

LinearMap ModuleData::act_by(const Vec& a) const {
    return act.compose(tensor_map(LinearMap::column(a, field()), LinearMap::identity(dim, field())));
}

CheckReport check_algebra(const StructureConstantAlgebra& a) {
    require(a.mult.rows() == a.dim && a.mult.cols() == a.dim * a.dim, "mult tensor has wrong shape");
    require(a.unit.size() == a.dim, "unit vector has wrong dimension");
    CheckReport rep;
    rep.check_name = "algebra(" + a.name + ")";
    const auto lab = labels_for(a.basis, a.dim, "e");
    const Field& f = a.field();
    const LinearMap id = LinearMap::identity(a.dim, f);

    LinearMap assoc_l = a.mult.compose(tensor_map(a.mult, id));
    LinearMap assoc_r = a.mult.compose(tensor_map(id, a.mult));
    compare_columns(rep, "associativity", assoc_l, assoc_r, {lab, lab, lab}, lab);

    LinearMap unit_l = a.mult.compose(tensor_map(LinearMap::column(a.unit, f), id));
    LinearMap unit_r = a.mult.compose(tensor_map(id, LinearMap::column(a.unit, f)));
    compare_columns(rep, "left unit law", unit_l, id, {lab}, lab);
    compare_columns(rep, "right unit law", unit_r, id, {lab}, lab);
    return rep;
}

CheckReport check_coalgebra(const CoalgebraData& c) {
    require(c.comult.rows() == c.dim * c.dim && c.comult.cols() == c.dim, "comult tensor has wrong shape");
    require(c.counit.rows() == 1 && c.counit.cols() == c.dim, "counit has wrong shape");
    CheckReport rep;
    rep.check_name = "coalgebra(" + c.name + ")";
    const auto lab = labels_for(c.basis, c.dim, "e");
    const Field& f = c.field();
    const LinearMap id = LinearMap::identity(c.dim, f);

    LinearMap co_l = tensor_map(c.comult, id).compose(c.comult);
    LinearMap co_r = tensor_map(id, c.comult).compose(c.comult);
    compare_columns(rep, "coassociativity", co_l, co_r, {lab}, kron_labels(kron_labels(lab, lab), lab));

    LinearMap cu_l = tensor_map(c.counit, id).compose(c.comult);
    LinearMap cu_r = tensor_map(id, c.counit).compose(c.comult);
    compare_columns(rep, "left counit law", cu_l, id, {lab}, lab);
    compare_columns(rep, "right counit law", cu_r, id, {lab}, lab);
    return rep;
}

LinearMap tensor_product_mult(const StructureConstantAlgebra& e, const StructureConstantAlgebra& b) {
    const Field& f = e.field();
    LinearMap mm = tensor_map(e.mult, b.mult);
    LinearMap shuffle = permute_factors({e.dim, b.dim, e.dim, b.dim}, {0, 2, 1, 3}, f);
    return mm.compose(shuffle);
}

StructureConstantAlgebra tensor_algebra(const StructureConstantAlgebra& a, const StructureConstantAlgebra& b) {
    StructureConstantAlgebra t;
    t.name = a.name + "(x)" + b.name;
    t.dim = a.dim * b.dim;
    t.mult = tensor_product_mult(a, b);
    t.unit = kron_vec(a.unit, b.unit);
    t.basis = kron_labels(labels_for(a.basis, a.dim, "a"), labels_for(b.basis, b.dim, "b"));
    return t;
}

CheckReport check_bialgebra(const BialgebraData& b) {
    require(b.algebra.dim == b.coalgebra.dim, "bialgebra: algebra and coalgebra dimensions differ");
    CheckReport rep;
    rep.check_name = "bialgebra(" + b.name() + ")";
    rep.absorb(check_algebra(b.algebra), "algebra");
    rep.absorb(check_coalgebra(b.coalgebra), "coalgebra");

    const auto lab = labels_for(b.basis(), b.dim(), "e");
    const Field& f = b.field();
    const LinearMap& mult = b.algebra.mult;
    const LinearMap& comult = b.coalgebra.comult;
    const LinearMap& counit = b.coalgebra.counit;

    LinearMap mult2 = tensor_product_mult(b.algebra, b.algebra);
    LinearMap lhs = comult.compose(mult);
    LinearMap rhs = mult2.compose(tensor_map(comult, comult));
    compare_columns(rep, "comultiplication is multiplicative", lhs, rhs, {lab, lab}, kron_labels(lab, lab));

    Vec d_unit = comult.apply(b.algebra.unit);
    Vec unit_unit = kron_vec(b.algebra.unit, b.algebra.unit);
    if (d_unit != unit_unit)
        rep.add_witness({"comultiplication is unital", {"1"},
                         combo_str(d_unit, kron_labels(lab, lab)), combo_str(unit_unit, kron_labels(lab, lab))});

    LinearMap eps_lhs = counit.compose(mult);
    LinearMap eps_rhs = tensor_map(counit, counit);
    compare_columns(rep, "counit is multiplicative", eps_lhs, eps_rhs, {lab, lab}, {"1"});

    Vec eps_unit = counit.apply(b.algebra.unit);
    if (!eps_unit[0].is_one())
        rep.add_witness({"counit is unital", {"1"}, eps_unit[0].str(), "1"});
    return rep;
}

CheckReport check_comodule(const LinearMap& coaction, std::size_t dim, const BialgebraData& b,
                           const std::vector<std::string>& labels, const std::string& check_name) {
    require(coaction.rows() == dim * b.dim() && coaction.cols() == dim, "coaction has wrong shape");
    CheckReport rep;
    rep.check_name = check_name;
    const Field& f = coaction.field();
    const auto lab = labels_for(labels, dim, "m");
    const auto blab = labels_for(b.basis(), b.dim(), "b");
    const LinearMap id_m = LinearMap::identity(dim, f);
    const LinearMap id_b = LinearMap::identity(b.dim(), f);

    LinearMap lhs = tensor_map(coaction, id_b).compose(coaction);
    LinearMap rhs = tensor_map(id_m, b.coalgebra.comult).compose(coaction);
    compare_columns(rep, "coaction coassociativity", lhs, rhs, {lab},
                    kron_labels(kron_labels(lab, blab), blab));

    LinearMap counit_side = tensor_map(id_m, b.coalgebra.counit).compose(coaction);
    compare_columns(rep, "coaction counit law", counit_side, id_m, {lab}, lab);
    return rep;
}

CheckReport check_comodule_algebra(const CoactionData& rho) {
    const StructureConstantAlgebra& e = rho.source;
    const BialgebraData& b = rho.target;
    CheckReport rep;
    rep.check_name = "comodule-algebra(" + rho.name + ")";
    const auto elab = labels_for(e.basis, e.dim, "e");
    const auto blab = labels_for(b.basis(), b.dim(), "b");
    rep.absorb(check_comodule(rho.rho, e.dim, b, elab, "comodule"), "");

    LinearMap lhs = rho.rho.compose(e.mult);
    LinearMap mult_eb = tensor_product_mult(e, b.algebra);
    LinearMap rhs = mult_eb.compose(tensor_map(rho.rho, rho.rho));
    compare_columns(rep, "coaction is multiplicative", lhs, rhs, {elab, elab}, kron_labels(elab, blab));

    Vec r_unit = rho.rho.apply(e.unit);
    Vec expect = kron_vec(e.unit, b.algebra.unit);
    if (r_unit != expect)
        rep.add_witness({"coaction is unital", {"1"},
                         combo_str(r_unit, kron_labels(elab, blab)), combo_str(expect, kron_labels(elab, blab))});
    return rep;
}

CheckReport check_module(const ModuleData& m) {
    const StructureConstantAlgebra& e = m.algebra;
    require(m.act.rows() == m.dim && m.act.cols() == e.dim * m.dim, "action has wrong shape");
    CheckReport rep;
    rep.check_name = "module(" + m.name + ")";
    const Field& f = m.field();
    const auto elab = labels_for(e.basis, e.dim, "e");
    const auto mlab = default_labels(m.dim, "m");
    const LinearMap id_m = LinearMap::identity(m.dim, f);
    const LinearMap id_e = LinearMap::identity(e.dim, f);

    LinearMap unit_act = m.act.compose(tensor_map(LinearMap::column(e.unit, f), id_m));
    compare_columns(rep, "unit acts as identity", unit_act, id_m, {mlab}, mlab);

    LinearMap lhs = m.act.compose(tensor_map(id_e, m.act));
    LinearMap rhs = m.act.compose(tensor_map(e.mult, id_m));
    compare_columns(rep, "action associativity", lhs, rhs, {elab, elab, mlab}, mlab);
    return rep;
}

CheckReport check_module_morphism(const ModuleData& src, const ModuleData& dst, const LinearMap& f,
                                  const std::string& tag) {
    require(f.rows() == dst.dim && f.cols() == src.dim, "morphism matrix has wrong shape");
    require(src.algebra.dim == dst.algebra.dim, "modules over different algebras");
    CheckReport rep;
    rep.check_name = tag;
    const auto elab = labels_for(src.algebra.basis, src.algebra.dim, "e");
    const auto mlab = default_labels(src.dim, "m");
    LinearMap lhs = f.compose(src.act);
    LinearMap rhs = dst.act.compose(tensor_map(LinearMap::identity(src.algebra.dim, f.field()), f));
    compare_columns(rep, "equivariance", lhs, rhs, {elab, mlab}, default_labels(dst.dim, "n"));
    return rep;
}

CheckReport check_algebra_hom(const AlgebraHomFD& h) {
    require(h.matrix.rows() == h.target.dim && h.matrix.cols() == h.source.dim, "hom matrix has wrong shape");
    CheckReport rep;
    rep.check_name = "algebra-hom(" + h.name + ")";
    const auto slab = labels_for(h.source.basis, h.source.dim, "e");
    const auto tlab = labels_for(h.target.basis, h.target.dim, "e'");

    LinearMap lhs = h.matrix.compose(h.source.mult);
    LinearMap rhs = h.target.mult.compose(tensor_map(h.matrix, h.matrix));
    compare_columns(rep, "multiplicative", lhs, rhs, {slab, slab}, tlab);

    Vec img_unit = h.matrix.apply(h.source.unit);
    if (img_unit != h.target.unit)
        rep.add_witness({"unital", {"1"}, combo_str(img_unit, tlab), combo_str(h.target.unit, tlab)});
    return rep;
}

CheckReport check_hopf_module(const HopfModuleData& n, const CoactionData& rho_e) {
    const ModuleData& m = n.module;
    const StructureConstantAlgebra& e = m.algebra;
    const BialgebraData& b = n.over;
    require(rho_e.source.dim == e.dim, "Hopf module: base coaction is over a different algebra");
    require(n.coact.rows() == m.dim * b.dim() && n.coact.cols() == m.dim, "Hopf module coaction has wrong shape");
    CheckReport rep;
    rep.check_name = "hopf-module(" + m.name + ")";
    rep.absorb(check_module(m), "module");
    const auto nlab = default_labels(m.dim, "n");
    rep.absorb(check_comodule(n.coact, m.dim, b, nlab, "comodule"), "comodule");

    const Field& f = m.field();
    const auto elab = labels_for(e.basis, e.dim, "e");
    const auto blab = labels_for(b.basis(), b.dim(), "b");
    // rho_N(e n) = (act⊗mult_B)(id_E⊗flip_{B,N}⊗id_B)(rho_E(e)⊗rho_N(n))
    LinearMap lhs = n.coact.compose(m.act);
    LinearMap shuffle = permute_factors({e.dim, b.dim(), m.dim, b.dim()}, {0, 2, 1, 3}, f);
    LinearMap rhs = tensor_map(m.act, b.algebra.mult).compose(shuffle).compose(tensor_map(rho_e.rho, n.coact));
    compare_columns(rep, "Hopf compatibility", lhs, rhs, {elab, nlab}, kron_labels(nlab, blab));
    return rep;
}

ModuleData regular_module(const StructureConstantAlgebra& a) {
    return ModuleData{a.name, a, a.dim, a.mult};
}

CoactionData trivial_coaction(const StructureConstantAlgebra& e, const BialgebraData& b) {
    LinearMap rho = tensor_map(LinearMap::identity(e.dim, e.field()), LinearMap::column(b.algebra.unit, e.field()));
    return CoactionData{"trivial", e, b, rho};
}

AlgebraHomFD identity_hom(const StructureConstantAlgebra& a) {
    return AlgebraHomFD{"id", a, a, LinearMap::identity(a.dim, a.field())};
}

AlgebraHomFD compose_homs(const AlgebraHomFD& g, const AlgebraHomFD& f) {
    require(g.source.dim == f.target.dim, "homs not composable");
    return AlgebraHomFD{g.name + "∘" + f.name, f.source, g.target, g.matrix.compose(f.matrix)};
}

ScalarExtension extend_scalars(const AlgebraHomFD& f, const ModuleData& m) {
    require(f.source.dim == m.algebra.dim, "extend_scalars: module is not over the hom source");
    const StructureConstantAlgebra& tgt = f.target;
    const Field& fld = m.field();
    const std::size_t ambient = tgt.dim * m.dim;

    std::vector<Vec> relations;
    relations.reserve(tgt.dim * f.source.dim * m.dim);
    for (std::size_t i = 0; i < tgt.dim; ++i) {
        Vec ei = unit_vec(tgt.dim, i, fld);
        for (std::size_t j = 0; j < f.source.dim; ++j) {
            Vec fj = f.matrix.column_at(j);
            Vec prod = tgt.multiply(ei, fj);
            for (std::size_t k = 0; k < m.dim; ++k) {
                Vec mk = unit_vec(m.dim, k, fld);
                Vec left = kron_vec(prod, mk);
                Vec right = kron_vec(ei, m.apply(unit_vec(f.source.dim, j, fld), mk));
                relations.push_back(sub_vec(left, right));
            }
        }
    }
    QuotientSpace qs = quotient_space(ambient, Subspace::span(ambient, relations, fld));

    ModuleData out;
    out.name = f.name + "*" + m.name;
    out.algebra = tgt;
    out.dim = qs.dim();
    LinearMap mult_id = tensor_map(tgt.mult, LinearMap::identity(m.dim, fld));
    out.act = qs.projection.compose(mult_id).compose(
        tensor_map(LinearMap::identity(tgt.dim, fld), qs.section));

    LinearMap canonical = qs.projection.compose(
        tensor_map(LinearMap::column(tgt.unit, fld), LinearMap::identity(m.dim, fld)));
    return ScalarExtension{std::move(out), std::move(canonical), std::move(qs)};
}

ExtensionComparison compare_extension_composite(const AlgebraHomFD& g, const AlgebraHomFD& f, const ModuleData& m) {
    AlgebraHomFD gf = compose_homs(g, f);
    ExtensionComparison cmp{extend_scalars(gf, m), extend_scalars(f, m), ScalarExtension{}, LinearMap{}};
    cmp.gf_star = extend_scalars(g, cmp.f_ext.module);
    LinearMap raw = tensor_map(LinearMap::identity(g.target.dim, m.field()), cmp.f_ext.canonical);
    cmp.comparison = cmp.gf_star.carrier.projection.compose(raw).compose(cmp.gf_ext.carrier.section);
    return cmp;
}

Subspace coinvariants(const LinearMap& coaction, std::size_t dim, const BialgebraData& b) {
    require(coaction.rows() == dim * b.dim() && coaction.cols() == dim, "coaction has wrong shape");
    const Field& f = coaction.field();
    LinearMap unit_insert = tensor_map(LinearMap::identity(dim, f), LinearMap::column(b.algebra.unit, f));
    return kernel_basis(coaction - unit_insert);
}

} // namespace coact
