#include "coact/probes.hpp"

namespace coact {

CheckReport check_probe(const FunctorProbe& p) {
    CheckReport rep;
    rep.check_name = "probe";
    for (const auto& m : p.modules) rep.absorb(check_module(m), m.name);
    for (const auto& f : p.maps) {
        if (f.src >= p.modules.size() || f.dst >= p.modules.size())
            throw std::invalid_argument("probe map endpoints out of range");
        rep.absorb(check_module_morphism(p.modules[f.src], p.modules[f.dst], f.matrix, f.name), f.name);
    }
    return rep;
}

QuotientModule quotient_of_module(const ModuleData& m, const Subspace& submodule) {
    QuotientSpace qs = quotient_space(m.dim, submodule);
    ModuleData out;
    out.name = m.name + "/N";
    out.algebra = m.algebra;
    out.dim = qs.dim();
    out.act = qs.projection.compose(m.act).compose(
        tensor_map(LinearMap::identity(m.algebra.dim, m.field()), qs.section));
    return QuotientModule{std::move(out), std::move(qs)};
}

QuotientModule quotient_module(const StructureConstantAlgebra& e, const Subspace& left_ideal) {
    QuotientModule qm = quotient_of_module(regular_module(e), left_ideal);
    qm.module.name = e.name + "/I";
    return qm;
}

namespace {

/// Cyclic submodule generated by a vector.
Subspace cyclic_submodule(const ModuleData& m, const Vec& v) {
    std::vector<Vec> gens;
    for (std::size_t j = 0; j < m.algebra.dim; ++j) gens.push_back(m.apply(m.algebra.basis_vec(j), v));
    return Subspace::span(m.dim, gens, m.field());
}

} // namespace

FunctorProbe default_probe(const StructureConstantAlgebra& e) {
    const Field& f = e.field();
    FunctorProbe p;
    p.modules.push_back(regular_module(e));

    // candidate generators for a proper left ideal, tried in order
    std::vector<Vec> candidates;
    for (std::size_t i = e.dim; i-- > 1;) candidates.push_back(unit_vec(e.dim, i, f));
    for (std::size_t i = 1; i < e.dim; ++i)
        candidates.push_back(sub_vec(unit_vec(e.dim, i, f), unit_vec(e.dim, 0, f)));

    bool found = false;
    for (const auto& v : candidates) {
        Subspace ideal = cyclic_submodule(p.modules[0], v);
        if (ideal.dim() == 0 || ideal.dim() == e.dim) continue;
        QuotientModule qm = quotient_module(e, ideal);
        p.maps.push_back(ProbeMap{"proj", 0, 1, qm.carrier.projection});
        p.modules.push_back(std::move(qm.module));
        found = true;
        break;
    }
    if (!found) {
        // no proper nonzero ideal (e.g. E = k): fall back to the zero quotient
        std::vector<Vec> all;
        for (std::size_t i = 0; i < e.dim; ++i) all.push_back(unit_vec(e.dim, i, f));
        QuotientModule zero = quotient_module(e, Subspace::span(e.dim, all, f));
        p.maps.push_back(ProbeMap{"proj", 0, 1, zero.carrier.projection});
        p.modules.push_back(std::move(zero.module));
    }

    // a further quotient gives a composable pair of non-identity morphisms
    const ModuleData& m1 = p.modules[1];
    Subspace sub(m1.dim, f);
    for (std::size_t k = 0; k < m1.dim; ++k) {
        Subspace cand = cyclic_submodule(m1, unit_vec(m1.dim, k, f));
        if (cand.dim() > 0 && cand.dim() < m1.dim) {
            sub = cand;
            break;
        }
    }
    if (sub.dim() == 0 && m1.dim > 0) {
        std::vector<Vec> all;
        for (std::size_t i = 0; i < m1.dim; ++i) all.push_back(unit_vec(m1.dim, i, f));
        sub = Subspace::span(m1.dim, all, f);
    }
    QuotientModule qm2 = quotient_of_module(m1, sub);
    p.maps.push_back(ProbeMap{"proj2", 1, 2, qm2.carrier.projection});
    p.modules.push_back(std::move(qm2.module));
    return p;
}

} // namespace coact
