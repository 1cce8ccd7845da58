#include "coact/entwining.hpp"

#include <functional>

namespace coact {

namespace {

void cmp(CheckReport& rep, const std::string& object, const LinearMap& lhs, const LinearMap& rhs) {
    compare_columns(rep, object, lhs, rhs, {default_labels(lhs.cols(), "i")}, {});
}

std::vector<std::string> alg_labels(const StructureConstantAlgebra& a) {
    return a.basis.size() == a.dim ? a.basis : default_labels(a.dim, "a");
}

std::vector<std::string> co_labels(const CoalgebraData& c) {
    return c.basis.size() == c.dim ? c.basis : default_labels(c.dim, "c");
}

} // namespace

CheckReport check_entwining(const EntwiningData& e) {
    CheckReport rep;
    rep.check_name = "entwining(" + e.name + ")";
    const Field& f = e.psi.field();
    const std::size_t da = e.a.dim, dc = e.c.dim;
    if (e.psi.rows() != dc * da || e.psi.cols() != da * dc)
        throw std::invalid_argument("psi has wrong shape");
    const auto alab = alg_labels(e.a);
    const auto clab = co_labels(e.c);
    const LinearMap id_a = LinearMap::identity(da, f), id_c = LinearMap::identity(dc, f);

    // (i) psi∘(mult⊗C) = (C⊗mult)∘(psi⊗A)∘(A⊗psi)
    LinearMap lhs1 = e.psi.compose(tensor_map(e.a.mult, id_c));
    LinearMap rhs1 = tensor_map(id_c, e.a.mult).compose(tensor_map(e.psi, id_a)).compose(tensor_map(id_a, e.psi));
    compare_columns(rep, "multiplication axiom", lhs1, rhs1, {alab, alab, clab}, kron_labels(clab, alab));

    // (ii) psi∘(unit⊗C) = C⊗unit
    LinearMap lhs2 = e.psi.compose(tensor_map(LinearMap::column(e.a.unit, f), id_c));
    LinearMap rhs2 = tensor_map(id_c, LinearMap::column(e.a.unit, f));
    compare_columns(rep, "unit axiom", lhs2, rhs2, {clab}, kron_labels(clab, alab));

    // (iii) (Delta⊗A)∘psi = (C⊗psi)∘(psi⊗C)∘(A⊗Delta)
    LinearMap lhs3 = tensor_map(e.c.comult, id_a).compose(e.psi);
    LinearMap rhs3 = tensor_map(id_c, e.psi).compose(tensor_map(e.psi, id_c)).compose(tensor_map(id_a, e.c.comult));
    compare_columns(rep, "comultiplication axiom", lhs3, rhs3, {alab, clab},
                    kron_labels(kron_labels(clab, clab), alab));

    // (iv) (eps⊗A)∘psi = A⊗eps
    LinearMap lhs4 = tensor_map(e.c.counit, id_a).compose(e.psi);
    LinearMap rhs4 = tensor_map(id_a, e.c.counit);
    compare_columns(rep, "counit axiom", lhs4, rhs4, {alab, clab}, alab);
    return rep;
}

EntwiningData flip_entwining(const StructureConstantAlgebra& a, const CoalgebraData& c) {
    return EntwiningData{"flip", a, c, flip_map(a.dim, c.dim, a.field())};
}

EntwiningData canonical_entwining_from_coaction(const CoactionData& rho) {
    const Field& f = rho.rho.field();
    const std::size_t de = rho.source.dim, nb = rho.target.dim();
    // e⊗b |-> Σ e_(1)·b ⊗ e_(0)
    LinearMap psi = tensor_map(rho.target.algebra.mult, LinearMap::identity(de, f))
                        .compose(permute_factors({de, nb, nb}, {1, 2, 0}, f))
                        .compose(tensor_map(rho.rho, LinearMap::identity(nb, f)));
    return EntwiningData{"psi(" + rho.name + ")", rho.source, rho.target.coalgebra, psi};
}

CheckReport check_compatible_pair(const EntwiningData& psi, const EntwiningData& psi_mu, const AlgebraHomFD& iota) {
    CheckReport rep;
    rep.check_name = "compatible-pair(" + psi.name + ", " + psi_mu.name + ")";
    if (psi.c.dim != psi_mu.c.dim) throw std::invalid_argument("entwinings over different coalgebras");
    const Field& f = psi.psi.field();
    LinearMap lhs = tensor_map(LinearMap::identity(psi.c.dim, f), iota.matrix).compose(psi.psi);
    LinearMap rhs = psi_mu.psi.compose(tensor_map(iota.matrix, LinearMap::identity(psi.c.dim, f)));
    compare_columns(rep, "(C⊗iota)∘psi = psi_mu∘(iota⊗C)", lhs, rhs, {alg_labels(psi.a), co_labels(psi.c)},
                    kron_labels(co_labels(psi_mu.c), alg_labels(psi_mu.a)));
    return rep;
}

ComonadInstance entwining_comonad(const EntwiningData& e) {
    ComonadInstance g;
    const EntwiningData ew = e;
    g.functor.name = "G_psi";
    g.functor.on_object = [ew](const ModuleData& m) {
        const Field& f = m.field();
        ModuleData out;
        out.name = ew.c.name + "⊗" + m.name;
        out.algebra = m.algebra;
        out.dim = ew.c.dim * m.dim;
        out.act = tensor_map(LinearMap::identity(ew.c.dim, f), m.act)
                      .compose(tensor_map(ew.psi, LinearMap::identity(m.dim, f)));
        return out;
    };
    g.functor.on_morphism = [ew](const ModuleData&, const ModuleData&, const LinearMap& h) {
        return tensor_map(LinearMap::identity(ew.c.dim, h.field()), h);
    };
    g.delta.name = "delta_psi";
    g.delta.component = [ew](const ModuleData& m) {
        return tensor_map(ew.c.comult, LinearMap::identity(m.dim, m.field()));
    };
    g.epsilon.name = "epsilon_psi";
    g.epsilon.component = [ew](const ModuleData& m) {
        return tensor_map(ew.c.counit, LinearMap::identity(m.dim, m.field()));
    };
    return g;
}

CheckReport compare_entwining_comonad(const CoactionData& rho, const FunctorProbe& probe) {
    CheckReport rep;
    rep.check_name = "entwining-comonad-comparison(" + rho.name + ")";
    const Field& f = rho.rho.field();
    const std::size_t nb = rho.target.dim();
    EntwiningData psi = canonical_entwining_from_coaction(rho);
    rep.absorb(check_entwining(psi), "canonical entwining");
    ComonadInstance gh = build_hopf_comonad(rho);
    ComonadInstance gp = entwining_comonad(psi);

    for (const auto& m : probe.modules) {
        LinearMap tau = flip_map(m.dim, nb, f);
        rep.absorb(check_module_morphism(gh.functor.on_object(m), gp.functor.on_object(m), tau,
                                         "flip at " + m.name),
                   "");
        LinearMap delta_lhs = gp.delta.component(m).compose(tau);
        LinearMap delta_rhs = permute_factors({m.dim, nb, nb}, {1, 2, 0}, f).compose(gh.delta.component(m));
        cmp(rep, "comultiplications agree through the flip at " + m.name, delta_lhs, delta_rhs);
        cmp(rep, "counits agree through the flip at " + m.name, gp.epsilon.component(m).compose(tau),
            gh.epsilon.component(m));
    }
    for (const auto& h : probe.maps) {
        const ModuleData& a = probe.modules[h.src];
        const ModuleData& b = probe.modules[h.dst];
        LinearMap lhs = gp.functor.on_morphism(a, b, h.matrix).compose(flip_map(a.dim, nb, f));
        LinearMap rhs = flip_map(b.dim, nb, f).compose(gh.functor.on_morphism(a, b, h.matrix));
        cmp(rep, "flip natural at " + h.name, lhs, rhs);
    }
    return rep;
}

InducedLaw induced_l(const EntwiningData& psi, const EntwiningData& psi_mu, const FindimLocalization& loc,
                     const ModuleData& m) {
    InducedLaw out;
    out.report.check_name = "induced-l(" + m.name + ")";
    const Field& f = m.field();
    ComonadInstance g = entwining_comonad(psi);
    ComonadInstance g_mu = entwining_comonad(psi_mu);
    ModuleData gm = g.functor.on_object(m);
    ScalarExtension ext_gm = extend_scalars(loc.iota, gm);
    ScalarExtension ext_m = extend_scalars(loc.iota, m);
    ModuleData target = g_mu.functor.on_object(ext_m.module);

    // psi_mu⊗M, then quotient the right factor: C⊗A_mu⊗M -> C⊗(iota*M)
    LinearMap raw = tensor_map(LinearMap::identity(psi.c.dim, f), ext_m.carrier.projection)
                        .compose(tensor_map(psi_mu.psi, LinearMap::identity(m.dim, f)));
    LinearMap l = raw.compose(ext_gm.carrier.section);

    // the two left squares of the defining diagram, as one descent condition
    cmp(out.report, "descent to the quotient", l.compose(ext_gm.carrier.projection), raw);
    // A-linearity (A acts through iota on both sides)
    out.report.absorb(
        check_module_morphism(loc.direct_image(ext_gm.module), loc.direct_image(target), l, "A-linearity"), "");
    out.report.absorb(check_module_morphism(ext_gm.module, target, l, "A_mu-linearity"), "");
    if (out.report.passed()) out.l = std::move(l);
    return out;
}

CheckReport check_entwined_distributivity(const EntwiningData& psi, const EntwiningData& psi_mu,
                                          const FindimLocalization& loc, const FunctorProbe& probe) {
    CheckReport rep;
    rep.check_name = "entwined-distributivity(" + psi.name + ")";
    for (const auto& m : probe.modules) {
        InducedLaw il = induced_l(psi, psi_mu, loc, m);
        rep.absorb(il.report, m.name);
    }
    if (!rep.passed()) return rep;

    EntwiningData psi_copy = psi, psi_mu_copy = psi_mu;
    FindimLocalization loc_copy = loc;
    NatFamily family{"l", [psi_copy, psi_mu_copy, loc_copy](const ModuleData& m) {
                         InducedLaw il = induced_l(psi_copy, psi_mu_copy, loc_copy, m);
                         if (!il.l) throw std::logic_error("induced law failed to descend at " + m.name);
                         return *il.l;
                     }};
    rep.absorb(check_mixed_distributive_law(family, extension_monad(loc), entwining_comonad(psi), probe), "");
    return rep;
}

CheckReport check_entwined_module(const EntwiningData& e, const EntwinedModuleData& m) {
    CheckReport rep;
    rep.check_name = "entwined-module(" + m.module.name + ")";
    rep.absorb(check_module(m.module), "module");
    const Field& f = m.coact.field();
    const std::size_t dc = e.c.dim, dm = m.module.dim, da = e.a.dim;
    if (m.coact.rows() != dc * dm || m.coact.cols() != dm)
        throw std::invalid_argument("coaction has wrong shape");
    const LinearMap id_m = LinearMap::identity(dm, f), id_c = LinearMap::identity(dc, f);

    LinearMap co_l = tensor_map(e.c.comult, id_m).compose(m.coact);
    LinearMap co_r = tensor_map(id_c, m.coact).compose(m.coact);
    cmp(rep, "coaction coassociativity", co_l, co_r);
    cmp(rep, "coaction counit law", tensor_map(e.c.counit, id_m).compose(m.coact), id_m);

    // lambda(a·m) = psi-twisted action of a on lambda(m)
    LinearMap lhs = m.coact.compose(m.module.act);
    LinearMap rhs = tensor_map(id_c, m.module.act)
                        .compose(tensor_map(e.psi, id_m))
                        .compose(tensor_map(LinearMap::identity(da, f), m.coact));
    cmp(rep, "psi-compatibility", lhs, rhs);
    return rep;
}

CheckReport lift_entwined_localization(const EntwiningData& psi, const EntwiningData& psi_mu,
                                       const FindimLocalization& loc,
                                       const std::vector<EntwinedModuleData>& probes) {
    CheckReport rep;
    rep.check_name = "entwined-lift(" + psi.name + ")";
    ExtensionFunctor ext{loc};
    ComonadInstance g = entwining_comonad(psi);
    for (const auto& em : probes) {
        rep.absorb(check_entwined_module(psi, em), "input " + em.module.name);
        if (!rep.passed()) return rep;

        InducedLaw il = induced_l(psi, psi_mu, loc, em.module);
        rep.absorb(il.report, "l at " + em.module.name);
        if (!il.l) continue;

        ModuleData gm = g.functor.on_object(em.module);
        ScalarExtension ext_m = ext.at(em.module);
        LinearMap q_lambda = ext.on_morphism(em.module, gm, em.coact); // Q*M -> Q*(GM)
        EntwinedModuleData lifted{ext_m.module, il.l->compose(q_lambda)};
        rep.absorb(check_entwined_module(psi_mu, lifted), "output " + em.module.name);

        // the forgetful square on the nose
        ModuleData qstar = ext.on_object(em.module);
        if (lifted.module.dim != qstar.dim || lifted.module.act != qstar.act)
            rep.add_witness({"forgetful square U_mu∘Q*_psi = Q*∘U violated", {em.module.name},
                             lifted.module.act.str(), qstar.act.str()});
    }
    return rep;
}

// -- skew backend --------------------------------------------------------------

SkewElement SkewEntwining::apply(const SkewElement& e_elem, const SkewElement& b_elem) const {
    SkewElement out = SkewElement::zero(be.algebra);
    SkewElement img = rho.apply(e_elem); // in E⊗B
    const std::size_t ke = eb.left_arity;
    for (const auto& [expo, c] : img.terms()) {
        Expo alpha(expo.begin(), expo.begin() + ke);
        Expo beta(expo.begin() + ke, expo.end());
        SkewElement e_part = SkewElement::monomial(a, alpha, Scalar::one(a->field()));
        SkewElement b_part = SkewElement::monomial(b, beta, Scalar::one(b->field()));
        SkewElement left = be.embed_left(b_part * b_elem).scaled(c);
        out = out + left * be.embed_right(e_part);
    }
    return out;
}

SkewEntwining canonical_skew_entwining(const SkewAlgebraPtr& a, const SkewAlgebraPtr& b, const SkewTensor& eb,
                                       const SkewAlgebraHom& rho) {
    SkewEntwining e;
    e.name = "psi(" + rho.name() + ")";
    e.a = a;
    e.b = b;
    e.eb = eb;
    e.be = tensor_skew(b, a);
    e.rho = rho;
    return e;
}

namespace {

std::vector<Expo> b_window(const SkewAlgebraPtr& b, long window) {
    std::vector<Expo> mons;
    Expo cur(b->arity(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == b->arity()) {
            mons.push_back(cur);
            return;
        }
        long lo = b->inv_mask()[i] ? -window : 0;
        for (long v = lo; v <= window; ++v) {
            cur[i] = v;
            rec(i + 1);
        }
        cur[i] = 0;
    };
    rec(0);
    return mons;
}

} // namespace

CheckReport check_skew_entwining(const SkewEntwining& e, long window) {
    CheckReport rep;
    rep.check_name = "skew-entwining(" + e.name + ")";
    SkewBialgebraMaps bi = skew_bialgebra_maps(e.b);
    const std::size_t ke = e.a->arity(), kb = e.b->arity();
    std::vector<Expo> cs = b_window(e.b, window);

    // B⊗B⊗E for axiom (iii)
    SkewTensor bbe = tensor_skew(bi.square.algebra, e.a);
    std::vector<std::size_t> first_two(2 * kb);
    for (std::size_t i = 0; i < 2 * kb; ++i) first_two[i] = i;

    auto split_be = [&](const Expo& expo) {
        Expo beta(expo.begin(), expo.begin() + kb);
        Expo alpha(expo.begin() + kb, expo.end());
        return std::pair<Expo, Expo>(beta, alpha);
    };

    for (const auto& ce : cs) {
        SkewElement c_elem = SkewElement::monomial(e.b, ce, Scalar::one(e.b->field()));
        std::string c_str = c_elem.str();

        // (ii) psi(1⊗c) = c⊗1
        SkewElement unit_lhs = e.apply(SkewElement::one(e.a), c_elem);
        SkewElement unit_rhs = e.be.embed_left(c_elem);
        if (unit_lhs != unit_rhs)
            rep.add_witness({"unit axiom", {c_str}, unit_lhs.str(), unit_rhs.str()});

        for (std::size_t i = 0; i < ke; ++i) {
            SkewElement gi = SkewElement::generator(e.a, i);

            // (iv) (eps⊗A)∘psi = A⊗eps
            SkewElement psi_ic = e.apply(gi, c_elem);
            SkewElement eps_side = SkewElement::zero(e.a);
            for (const auto& [expo, coef] : psi_ic.terms()) {
                auto [beta, alpha] = split_be(expo);
                SkewElement eps_b = bi.counit.apply(SkewElement::monomial(e.b, beta, Scalar::one(e.b->field())));
                Scalar s = eps_b.is_zero() ? Scalar::zero(e.b->field()) : eps_b.terms().begin()->second;
                eps_side = eps_side + SkewElement::monomial(e.a, alpha, coef * s);
            }
            SkewElement eps_c = bi.counit.apply(c_elem);
            Scalar sc = eps_c.is_zero() ? Scalar::zero(e.b->field()) : eps_c.terms().begin()->second;
            if (eps_side != gi.scaled(sc))
                rep.add_witness({"counit axiom", {e.a->gens()[i], c_str}, eps_side.str(), gi.scaled(sc).str()});

            // (i) psi(g_i g_j ⊗ c) agrees with the two-step evaluation
            for (std::size_t j = 0; j < ke; ++j) {
                SkewElement gj = SkewElement::generator(e.a, j);
                SkewElement lhs = e.apply(gi * gj, c_elem);
                SkewElement rhs = SkewElement::zero(e.be.algebra);
                SkewElement psi_jc = e.apply(gj, c_elem);
                for (const auto& [expo, coef] : psi_jc.terms()) {
                    auto [beta, alpha] = split_be(expo);
                    SkewElement mid = e.apply(gi, SkewElement::monomial(e.b, beta, Scalar::one(e.b->field())));
                    rhs = rhs + (mid * e.be.embed_right(SkewElement::monomial(e.a, alpha, Scalar::one(e.a->field()))))
                                    .scaled(coef);
                }
                if (lhs != rhs)
                    rep.add_witness({"multiplication axiom",
                                     {e.a->gens()[i], e.a->gens()[j], c_str},
                                     lhs.str(),
                                     rhs.str()});
            }

            // (iii) (Delta⊗A)∘psi = (C⊗psi)∘(psi⊗C)∘(A⊗Delta)
            SkewElement lhs3 = SkewElement::zero(bbe.algebra);
            for (const auto& [expo, coef] : psi_ic.terms()) {
                auto [beta, alpha] = split_be(expo);
                SkewElement db = bi.comult.apply(SkewElement::monomial(e.b, beta, Scalar::one(e.b->field())));
                lhs3 = lhs3 + (reindex(db, bbe.algebra, first_two) *
                               bbe.embed_right(SkewElement::monomial(e.a, alpha, Scalar::one(e.a->field()))))
                                  .scaled(coef);
            }
            SkewElement rhs3 = SkewElement::zero(bbe.algebra);
            SkewElement delta_c = bi.comult.apply(c_elem);
            for (const auto& [dexpo, dcoef] : delta_c.terms()) {
                Expo c1(dexpo.begin(), dexpo.begin() + kb);
                Expo c2(dexpo.begin() + kb, dexpo.end());
                SkewElement psi_i_c1 = e.apply(gi, SkewElement::monomial(e.b, c1, Scalar::one(e.b->field())));
                for (const auto& [expo, coef] : psi_i_c1.terms()) {
                    auto [beta1, alpha1] = split_be(expo);
                    SkewElement inner =
                        e.apply(SkewElement::monomial(e.a, alpha1, Scalar::one(e.a->field())),
                                SkewElement::monomial(e.b, c2, Scalar::one(e.b->field())));
                    // assemble beta1 ⊗ inner in B⊗(B⊗E)
                    std::vector<std::size_t> last_two(kb + ke);
                    for (std::size_t t = 0; t < kb + ke; ++t) last_two[t] = kb + t;
                    SkewElement part =
                        reindex(SkewElement::monomial(e.b, beta1, Scalar::one(e.b->field())), bbe.algebra,
                                [&] {
                                    std::vector<std::size_t> s(kb);
                                    for (std::size_t t = 0; t < kb; ++t) s[t] = t;
                                    return s;
                                }()) *
                        reindex(inner, bbe.algebra, last_two);
                    rhs3 = rhs3 + part.scaled(dcoef * coef);
                }
            }
            if (lhs3 != rhs3)
                rep.add_witness({"comultiplication axiom", {e.a->gens()[i], c_str}, lhs3.str(), rhs3.str()});
        }
    }
    return rep;
}

CheckReport check_skew_compatible_pair(const SkewEntwining& psi, const SkewEntwining& psi_mu,
                                       const SkewAlgebraHom& iota, long window) {
    CheckReport rep;
    rep.check_name = "skew-compatible-pair(" + psi.name + ", " + psi_mu.name + ")";
    std::vector<Expo> cs = b_window(psi.b, window);
    const std::size_t kb = psi.b->arity();
    for (const auto& ce : cs) {
        SkewElement c_elem = SkewElement::monomial(psi.b, ce, Scalar::one(psi.b->field()));
        for (std::size_t i = 0; i < psi.a->arity(); ++i) {
            SkewElement lhs_raw = psi.apply(SkewElement::generator(psi.a, i), c_elem);
            // (C⊗iota): push the E-part through iota
            SkewElement lhs = SkewElement::zero(psi_mu.be.algebra);
            for (const auto& [expo, coef] : lhs_raw.terms()) {
                Expo beta(expo.begin(), expo.begin() + kb);
                Expo alpha(expo.begin() + kb, expo.end());
                SkewElement moved = iota.apply(SkewElement::monomial(psi.a, alpha, Scalar::one(psi.a->field())));
                lhs = lhs + (psi_mu.be.embed_left(SkewElement::monomial(psi.b, beta, Scalar::one(psi.b->field()))) *
                             psi_mu.be.embed_right(moved))
                                .scaled(coef);
            }
            SkewElement rhs = psi_mu.apply(iota.apply(SkewElement::generator(psi.a, i)), c_elem);
            if (lhs != rhs)
                rep.add_witness({"(C⊗iota)∘psi = psi_mu∘(iota⊗C)", {psi.a->gens()[i], c_elem.str()},
                                 lhs.str(), rhs.str()});
        }
    }
    return rep;
}

} // namespace coact
