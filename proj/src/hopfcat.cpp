#include "coact/hopfcat.hpp"

#include <stdexcept>

namespace coact {

namespace {

void cmp(CheckReport& rep, const std::string& object, const LinearMap& lhs, const LinearMap& rhs) {
    compare_columns(rep, object, lhs, rhs, {default_labels(lhs.cols(), "i")}, {});
}

} // namespace

Endofunctor identity_endofunctor() {
    Endofunctor f;
    f.name = "Id";
    f.on_object = [](const ModuleData& m) { return m; };
    f.on_morphism = [](const ModuleData&, const ModuleData&, const LinearMap& h) { return h; };
    return f;
}

Endofunctor compose_endofunctors(const Endofunctor& outer, const Endofunctor& inner) {
    Endofunctor f;
    f.name = outer.name + inner.name;
    f.on_object = [outer, inner](const ModuleData& m) { return outer.on_object(inner.on_object(m)); };
    f.on_morphism = [outer, inner](const ModuleData& src, const ModuleData& dst, const LinearMap& h) {
        return outer.on_morphism(inner.on_object(src), inner.on_object(dst), inner.on_morphism(src, dst, h));
    };
    return f;
}

CheckReport check_functoriality(const Endofunctor& f, const FunctorProbe& probe) {
    CheckReport rep;
    rep.check_name = "functoriality(" + f.name + ")";
    for (const auto& m : probe.modules) {
        ModuleData fm = f.on_object(m);
        rep.absorb(check_module(fm), f.name + "(" + m.name + ")");
        LinearMap fid = f.on_morphism(m, m, LinearMap::identity(m.dim, m.field()));
        cmp(rep, f.name + " preserves id at " + m.name, fid, LinearMap::identity(fm.dim, fm.field()));
    }
    for (const auto& h : probe.maps) {
        LinearMap fh = f.on_morphism(probe.modules[h.src], probe.modules[h.dst], h.matrix);
        rep.absorb(check_module_morphism(f.on_object(probe.modules[h.src]), f.on_object(probe.modules[h.dst]), fh,
                                         f.name + "(" + h.name + ")"),
                   "");
    }
    for (const auto& h1 : probe.maps)
        for (const auto& h2 : probe.maps) {
            if (h1.dst != h2.src) continue;
            const ModuleData& a = probe.modules[h1.src];
            const ModuleData& b = probe.modules[h1.dst];
            const ModuleData& c = probe.modules[h2.dst];
            LinearMap lhs = f.on_morphism(a, c, h2.matrix.compose(h1.matrix));
            LinearMap rhs = f.on_morphism(b, c, h2.matrix).compose(f.on_morphism(a, b, h1.matrix));
            cmp(rep, f.name + " preserves " + h2.name + "∘" + h1.name, lhs, rhs);
        }
    return rep;
}

CheckReport check_naturality(const NatFamily& alpha, const Endofunctor& f, const Endofunctor& g,
                             const FunctorProbe& probe) {
    CheckReport rep;
    rep.check_name = "naturality(" + alpha.name + ")";
    for (const auto& m : probe.modules) {
        LinearMap comp = alpha.component(m);
        rep.absorb(check_module_morphism(f.on_object(m), g.on_object(m), comp, alpha.name + "_" + m.name), "");
    }
    for (const auto& h : probe.maps) {
        const ModuleData& a = probe.modules[h.src];
        const ModuleData& b = probe.modules[h.dst];
        LinearMap lhs = g.on_morphism(a, b, h.matrix).compose(alpha.component(a));
        LinearMap rhs = alpha.component(b).compose(f.on_morphism(a, b, h.matrix));
        cmp(rep, "naturality of " + alpha.name + " at " + h.name, lhs, rhs);
    }
    return rep;
}

CheckReport check_comonad_laws(const ComonadInstance& c, const FunctorProbe& probe) {
    CheckReport rep;
    rep.check_name = "comonad(" + c.functor.name + ")";
    rep.absorb(check_functoriality(c.functor, probe), "");
    Endofunctor ff = compose_endofunctors(c.functor, c.functor);
    rep.absorb(check_naturality(c.delta, c.functor, ff, probe), "delta");
    rep.absorb(check_naturality(c.epsilon, c.functor, identity_endofunctor(), probe), "epsilon");

    for (const auto& m : probe.modules) {
        ModuleData fm = c.functor.on_object(m);
        ModuleData ffm = c.functor.on_object(fm);
        LinearMap delta_m = c.delta.component(m);
        LinearMap coassoc_l = c.delta.component(fm).compose(delta_m);
        LinearMap coassoc_r = c.functor.on_morphism(fm, ffm, delta_m).compose(delta_m);
        cmp(rep, "coassociativity at " + m.name, coassoc_l, coassoc_r);

        LinearMap id_fm = LinearMap::identity(fm.dim, fm.field());
        cmp(rep, "left counit law at " + m.name, c.epsilon.component(fm).compose(delta_m), id_fm);
        cmp(rep, "right counit law at " + m.name,
            c.functor.on_morphism(fm, m, c.epsilon.component(m)).compose(delta_m), id_fm);
    }
    return rep;
}

CheckReport check_monad_laws(const MonadInstance& t, const FunctorProbe& probe) {
    CheckReport rep;
    rep.check_name = "monad(" + t.functor.name + ")";
    rep.absorb(check_functoriality(t.functor, probe), "");
    Endofunctor tt = compose_endofunctors(t.functor, t.functor);
    rep.absorb(check_naturality(t.mu, tt, t.functor, probe), "mu");
    rep.absorb(check_naturality(t.eta, identity_endofunctor(), t.functor, probe), "eta");

    for (const auto& m : probe.modules) {
        ModuleData tm = t.functor.on_object(m);
        ModuleData ttm = t.functor.on_object(tm);
        LinearMap mu_m = t.mu.component(m);
        LinearMap assoc_l = mu_m.compose(t.mu.component(tm));
        LinearMap assoc_r = mu_m.compose(t.functor.on_morphism(ttm, tm, mu_m));
        cmp(rep, "associativity at " + m.name, assoc_l, assoc_r);

        LinearMap id_tm = LinearMap::identity(tm.dim, tm.field());
        cmp(rep, "left unit law at " + m.name, mu_m.compose(t.eta.component(tm)), id_tm);
        cmp(rep, "right unit law at " + m.name,
            mu_m.compose(t.functor.on_morphism(m, tm, t.eta.component(m))), id_tm);
    }
    return rep;
}

ComonadInstance build_hopf_comonad(const CoactionData& rho) {
    ComonadInstance g;
    const BialgebraData b = rho.target;
    const LinearMap rho_mat = rho.rho;
    const StructureConstantAlgebra e = rho.source;

    g.functor.name = "G";
    g.functor.on_object = [e, b, rho_mat](const ModuleData& m) {
        const Field& f = m.field();
        ModuleData out;
        out.name = m.name + "⊗" + b.name();
        out.algebra = m.algebra;
        out.dim = m.dim * b.dim();
        LinearMap shuffle = permute_factors({e.dim, b.dim(), m.dim, b.dim()}, {0, 2, 1, 3}, f);
        out.act = tensor_map(m.act, b.algebra.mult)
                      .compose(shuffle)
                      .compose(tensor_map(rho_mat, LinearMap::identity(m.dim * b.dim(), f)));
        return out;
    };
    g.functor.on_morphism = [b](const ModuleData&, const ModuleData&, const LinearMap& h) {
        return tensor_map(h, LinearMap::identity(b.dim(), h.field()));
    };
    g.delta.name = "delta";
    g.delta.component = [b](const ModuleData& m) {
        return tensor_map(LinearMap::identity(m.dim, m.field()), b.coalgebra.comult);
    };
    g.epsilon.name = "epsilon";
    g.epsilon.component = [b](const ModuleData& m) {
        return tensor_map(LinearMap::identity(m.dim, m.field()), b.coalgebra.counit);
    };
    return g;
}

CheckReport verify_hopf_comonad(const CoactionData& rho, const FunctorProbe& probe) {
    CheckReport rep = check_comonad_laws(build_hopf_comonad(rho), probe);
    rep.check_name = "hopf-comonad(" + rho.name + ")";
    return rep;
}

ModuleData action_module(const CoactionData& rho, const ModuleData& m, const ModuleData& q) {
    const Field& f = m.field();
    const StructureConstantAlgebra& e = rho.source;
    const BialgebraData& b = rho.target;
    if (q.algebra.dim != b.dim()) throw std::invalid_argument("Q must be a module over the bialgebra");
    ModuleData out;
    out.name = m.name + "◁" + q.name;
    out.algebra = m.algebra;
    out.dim = m.dim * q.dim;
    LinearMap shuffle = permute_factors({e.dim, b.dim(), m.dim, q.dim}, {0, 2, 1, 3}, f);
    out.act = tensor_map(m.act, q.act)
                  .compose(shuffle)
                  .compose(tensor_map(rho.rho, LinearMap::identity(m.dim * q.dim, f)));
    return out;
}

ScalarExtension ExtensionFunctor::at(const ModuleData& m) const { return extend_scalars(loc.iota, m); }

ModuleData ExtensionFunctor::on_object(const ModuleData& m) const { return at(m).module; }

LinearMap ExtensionFunctor::on_morphism(const ModuleData& src, const ModuleData& dst, const LinearMap& f) const {
    ScalarExtension s = at(src), d = at(dst);
    LinearMap id_mu = LinearMap::identity(loc.localized.dim, f.field());
    return d.carrier.projection.compose(tensor_map(id_mu, f)).compose(s.carrier.section);
}

MonadInstance extension_monad(const FindimLocalization& loc) {
    MonadInstance t;
    ExtensionFunctor ext{loc};
    t.functor.name = "Q_*Q*";
    t.functor.on_object = [ext](const ModuleData& m) { return ext.loc.direct_image(ext.at(m).module); };
    t.functor.on_morphism = [ext](const ModuleData& src, const ModuleData& dst, const LinearMap& f) {
        return ext.on_morphism(src, dst, f);
    };
    t.eta.name = "eta";
    t.eta.component = [ext](const ModuleData& m) { return ext.at(m).canonical; };
    t.mu.name = "mu";
    t.mu.component = [ext](const ModuleData& m) {
        ScalarExtension e1 = ext.at(m);
        ModuleData tm = ext.loc.direct_image(e1.module);
        ScalarExtension e2 = ext.at(tm);
        // [x⊗w] -> x·w through the E_mu-action of Q*M
        return e1.module.act.compose(e2.carrier.section);
    };
    return t;
}

CheckReport check_mixed_distributive_law(const NatFamily& l, const MonadInstance& t, const ComonadInstance& g,
                                         const FunctorProbe& probe) {
    CheckReport rep;
    rep.check_name = "mixed-law(" + l.name + ")";
    Endofunctor tg = compose_endofunctors(t.functor, g.functor);
    Endofunctor gt = compose_endofunctors(g.functor, t.functor);
    rep.absorb(check_naturality(l, tg, gt, probe), "");

    for (const auto& m : probe.modules) {
        ModuleData gm = g.functor.on_object(m);
        ModuleData tm = t.functor.on_object(m);
        ModuleData tgm = t.functor.on_object(gm);
        ModuleData gtm = g.functor.on_object(tm);
        ModuleData ttm = t.functor.on_object(tm);
        LinearMap l_m = l.component(m);

        // eta compatibility: l ∘ eta_G = G(eta)
        cmp(rep, "eta compatibility at " + m.name, l_m.compose(t.eta.component(gm)),
            g.functor.on_morphism(m, tm, t.eta.component(m)));

        // mu compatibility: l ∘ mu_G = G(mu) ∘ l_T ∘ T(l)
        LinearMap lhs_mu = l_m.compose(t.mu.component(gm));
        LinearMap rhs_mu = g.functor.on_morphism(ttm, tm, t.mu.component(m))
                               .compose(l.component(tm))
                               .compose(t.functor.on_morphism(tgm, gtm, l_m));
        cmp(rep, "mu compatibility at " + m.name, lhs_mu, rhs_mu);

        // delta compatibility: delta_T ∘ l = G(l) ∘ l_G ∘ T(delta)
        LinearMap lhs_delta = g.delta.component(tm).compose(l_m);
        LinearMap rhs_delta = g.functor.on_morphism(tgm, gtm, l_m)
                                  .compose(l.component(gm))
                                  .compose(t.functor.on_morphism(gm, g.functor.on_object(gm), g.delta.component(m)));
        cmp(rep, "delta compatibility at " + m.name, lhs_delta, rhs_delta);

        // epsilon compatibility: epsilon_T ∘ l = T(epsilon)
        cmp(rep, "epsilon compatibility at " + m.name, g.epsilon.component(tm).compose(l_m),
            t.functor.on_morphism(gm, m, g.epsilon.component(m)));
    }
    return rep;
}

namespace {

/// Raw l_{M,P} on the unquotiented carrier E_mu⊗(M⊗P) -> (Q*M)⊗P.
LinearMap mixed_law_raw(const FindimLocalization& loc, const CoactionData& rho_s, const ScalarExtension& m_ext,
                        std::size_t m_dim, const LinearMap& p_act, std::size_t p_dim) {
    const Field& f = rho_s.rho.field();
    const std::size_t q = loc.localized.dim, nb = rho_s.target.dim();
    LinearMap step1 = tensor_map(rho_s.rho, LinearMap::identity(m_dim * p_dim, f));
    LinearMap step2 = permute_factors({q, nb, m_dim, p_dim}, {0, 2, 1, 3}, f);
    LinearMap step3 = tensor_map(m_ext.carrier.projection, p_act);
    return step3.compose(step2).compose(step1);
}

} // namespace

MixedLawFamily hopf_mixed_law(const FindimLocalization& loc, const CoactionData& rho, const CoactionData& rho_s,
                              const FunctorProbe& probe) {
    MixedLawFamily out;
    out.report.check_name = "mixed-law-descent(" + rho.name + ")";
    ComonadInstance g = build_hopf_comonad(rho);
    ExtensionFunctor ext{loc};
    const BialgebraData b = rho.target;

    out.family.name = "l";
    out.family.component = [loc, rho_s, g, ext, b](const ModuleData& m) {
        ModuleData gm = g.functor.on_object(m);
        ScalarExtension ext_gm = ext.at(gm);
        ScalarExtension ext_m = ext.at(m);
        LinearMap raw = mixed_law_raw(loc, rho_s, ext_m, m.dim, b.algebra.mult, b.dim());
        return raw.compose(ext_gm.carrier.section);
    };

    for (const auto& m : probe.modules) {
        ModuleData gm = g.functor.on_object(m);
        ScalarExtension ext_gm = ext.at(gm);
        ScalarExtension ext_m = ext.at(m);
        LinearMap raw = mixed_law_raw(loc, rho_s, ext_m, m.dim, b.algebra.mult, b.dim());
        LinearMap l = raw.compose(ext_gm.carrier.section);
        cmp(out.report, "descent of l at " + m.name, l.compose(ext_gm.carrier.projection), raw);
    }
    return out;
}

MixedLawFamily hopf_mixed_law_broken(const FindimLocalization& loc, const CoactionData& rho,
                                     const FunctorProbe& probe) {
    ComonadInstance g = build_hopf_comonad(rho);
    ExtensionFunctor ext{loc};
    const std::size_t nb = rho.target.dim();
    MixedLawFamily out;
    out.report.check_name = "mixed-law-descent(broken)";
    // e⊗(m⊗b) |-> (e⊗m)⊗b, dropping the e_(1) action
    auto raw_at = [loc, g, ext, nb](const ModuleData& m) {
        ScalarExtension ext_m = ext.at(m);
        return tensor_map(ext_m.carrier.projection, LinearMap::identity(nb, m.field()));
    };
    out.family.name = "l-broken";
    out.family.component = [g, ext, raw_at](const ModuleData& m) {
        ModuleData gm = g.functor.on_object(m);
        ScalarExtension ext_gm = ext.at(gm);
        return raw_at(m).compose(ext_gm.carrier.section);
    };
    for (const auto& m : probe.modules) {
        ModuleData gm = g.functor.on_object(m);
        ScalarExtension ext_gm = ext.at(gm);
        LinearMap raw = raw_at(m);
        LinearMap l = raw.compose(ext_gm.carrier.section);
        cmp(out.report, "descent of l at " + m.name, l.compose(ext_gm.carrier.projection), raw);
    }
    return out;
}

CheckReport check_action_distributive_law(const FindimLocalization& loc, const CoactionData& rho,
                                          const CoactionData& rho_s, const FunctorProbe& probe,
                                          const std::vector<ModuleData>& b_modules) {
    CheckReport rep;
    rep.check_name = "action-mixed-law(" + rho.name + ")";
    ExtensionFunctor ext{loc};
    MonadInstance t = extension_monad(loc);
    const BialgebraData& b = rho.target;
    const Field& f = rho.rho.field();

    auto law_at = [&](const ModuleData& m, const ModuleData& p) {
        ModuleData mp = action_module(rho, m, p);
        ScalarExtension ext_mp = ext.at(mp);
        ScalarExtension ext_m = ext.at(m);
        LinearMap raw = mixed_law_raw(loc, rho_s, ext_m, m.dim, p.act, p.dim);
        LinearMap l = raw.compose(ext_mp.carrier.section);
        // descent: raw factors through the quotient
        cmp(rep, "descent of l at (" + m.name + "," + p.name + ")", l.compose(ext_mp.carrier.projection), raw);
        return l;
    };

    for (const auto& p : b_modules) {
        for (const auto& m : probe.modules) {
            ModuleData mp = action_module(rho, m, p);
            ModuleData tm = t.functor.on_object(m);
            LinearMap l = law_at(m, p);

            // eta: l ∘ eta_{M◁P} = eta_M ◁ P
            cmp(rep, "eta compatibility at (" + m.name + "," + p.name + ")",
                l.compose(t.eta.component(mp)),
                tensor_map(t.eta.component(m), LinearMap::identity(p.dim, f)));

            // mu: l ∘ mu_{M◁P} = (mu_M ◁ P) ∘ l_{TM,P} ∘ T(l)
            ModuleData tmp = t.functor.on_object(mp);
            ModuleData tm_p = action_module(rho, tm, p);
            LinearMap lhs = l.compose(t.mu.component(mp));
            LinearMap rhs = tensor_map(t.mu.component(m), LinearMap::identity(p.dim, f))
                                .compose(law_at(tm, p))
                                .compose(t.functor.on_morphism(tmp, tm_p, l));
            cmp(rep, "mu compatibility at (" + m.name + "," + p.name + ")", lhs, rhs);
        }
    }

    // tensor coherence and the unit object
    if (!b_modules.empty()) {
        const ModuleData& p = b_modules.front();
        const ModuleData& p2 = b_modules.back();
        // P⊗P' with the Delta-twisted action
        ModuleData pp;
        pp.name = p.name + "⊗" + p2.name;
        pp.algebra = b.algebra;
        pp.dim = p.dim * p2.dim;
        pp.act = tensor_map(p.act, p2.act)
                     .compose(permute_factors({b.dim(), b.dim(), p.dim, p2.dim}, {0, 2, 1, 3}, f))
                     .compose(tensor_map(b.coalgebra.comult, LinearMap::identity(p.dim * p2.dim, f)));
        for (const auto& m : probe.modules) {
            ModuleData mp = action_module(rho, m, p);
            LinearMap lhs = law_at(m, pp);
            LinearMap rhs = tensor_map(law_at(m, p), LinearMap::identity(p2.dim, f)).compose(law_at(mp, p2));
            cmp(rep, "tensor coherence at (" + m.name + "," + p.name + "," + p2.name + ")", lhs, rhs);
        }
    }
    {
        // unit object: P = k via the counit
        ModuleData unit_p;
        unit_p.name = "k";
        unit_p.algebra = b.algebra;
        unit_p.dim = 1;
        unit_p.act = b.coalgebra.counit;
        for (const auto& m : probe.modules) {
            LinearMap l = law_at(m, unit_p);
            cmp(rep, "unit coherence at " + m.name, l, LinearMap::identity(l.rows(), f));
        }
    }
    return rep;
}

CheckReport check_bialgebra_hom(const BialgebraHom& phi) {
    CheckReport rep;
    rep.check_name = "bialgebra-hom(" + phi.name + ")";
    rep.absorb(check_algebra_hom(AlgebraHomFD{phi.name, phi.source.algebra, phi.target.algebra, phi.matrix}), "");
    const auto slab = phi.source.basis();
    LinearMap lhs = phi.target.coalgebra.comult.compose(phi.matrix);
    LinearMap rhs = tensor_map(phi.matrix, phi.matrix).compose(phi.source.coalgebra.comult);
    compare_columns(rep, "comultiplicative", lhs, rhs, {slab}, kron_labels(phi.target.basis(), phi.target.basis()));
    compare_columns(rep, "counital", phi.source.coalgebra.counit,
                    phi.target.coalgebra.counit.compose(phi.matrix), {slab}, {"1"});
    return rep;
}

BialgebraHom identity_bialgebra_hom(const BialgebraData& b) {
    return BialgebraHom{"id", b, b, LinearMap::identity(b.dim(), b.field())};
}

CheckReport check_comodule_algebra_map(const AlgebraHomFD& f, const BialgebraHom& phi, const CoactionData& rho,
                                       const CoactionData& rho2) {
    CheckReport rep;
    rep.check_name = "comodule-algebra-map(" + f.name + "," + phi.name + ")";
    LinearMap lhs = rho2.rho.compose(f.matrix);
    LinearMap rhs = tensor_map(f.matrix, phi.matrix).compose(rho.rho);
    compare_columns(rep, "rho'∘f = (f⊗phi)∘rho", lhs, rhs, {rho.source.basis},
                    kron_labels(rho2.source.basis, rho2.target.basis()));
    return rep;
}

AlphaComponent alpha_component(const AlgebraHomFD& f, const BialgebraHom& phi, const CoactionData& rho,
                               const CoactionData& rho2, const ModuleData& m, const ModuleData& q) {
    AlphaComponent out;
    out.report.check_name = "alpha(" + m.name + "," + q.name + ")";
    out.report.absorb(check_comodule_algebra_map(f, phi, rho, rho2), "precondition");
    if (!out.report.passed()) {
        out.report.status = CheckStatus::error;
        return out;
    }
    const Field& fl = m.field();
    AlgebraHomFD phi_alg{phi.name, phi.source.algebra, phi.target.algebra, phi.matrix};

    out.domain_ext = extend_scalars(f, action_module(rho, m, q));
    out.m_ext = extend_scalars(f, m);
    out.q_ext = extend_scalars(phi_alg, q);
    out.codomain = action_module(rho2, out.m_ext.module, out.q_ext.module);

    // raw on the ambient E'⊗M⊗Q: e'⊗m⊗q |-> Σ (e'_(0)⊗m)⊗(e'_(1)⊗q)
    const std::size_t de = rho2.source.dim, nb2 = rho2.target.dim();
    LinearMap step1 = tensor_map(rho2.rho, LinearMap::identity(m.dim * q.dim, fl));
    LinearMap step2 = permute_factors({de, nb2, m.dim, q.dim}, {0, 2, 1, 3}, fl);
    LinearMap step3 = tensor_map(out.m_ext.carrier.projection, out.q_ext.carrier.projection);
    LinearMap raw = step3.compose(step2).compose(step1);

    LinearMap alpha = raw.compose(out.domain_ext.carrier.section);
    // well-definedness: raw must factor through the quotient
    cmp(out.report, "well-definedness", alpha.compose(out.domain_ext.carrier.projection), raw);
    out.report.absorb(check_module_morphism(out.domain_ext.module, out.codomain, alpha, "E'-linearity"), "");
    if (out.report.passed()) out.alpha = std::move(alpha);
    return out;
}

CheckReport check_pasting(const AlgebraHomFD& f, const BialgebraHom& phi, const AlgebraHomFD& g,
                          const BialgebraHom& phi2, const CoactionData& rho, const CoactionData& rho_mid,
                          const CoactionData& rho_end, const std::vector<ModuleData>& ms,
                          const std::vector<ModuleData>& qs) {
    CheckReport rep;
    rep.check_name = "pasting(" + g.name + "∘" + f.name + ")";
    AlgebraHomFD gf = compose_homs(g, f);
    BialgebraHom phi21{phi2.name + "∘" + phi.name, phi.source, phi2.target, phi2.matrix.compose(phi.matrix)};
    AlgebraHomFD phi_alg{phi.name, phi.source.algebra, phi.target.algebra, phi.matrix};
    AlgebraHomFD phi2_alg{phi2.name, phi2.source.algebra, phi2.target.algebra, phi2.matrix};

    for (const auto& m : ms)
        for (const auto& q : qs) {
            AlphaComponent a1 = alpha_component(f, phi, rho, rho_mid, m, q);
            rep.absorb(a1.report, "alpha^f at (" + m.name + "," + q.name + ")");
            if (!a1.alpha) continue;
            AlphaComponent a2 = alpha_component(g, phi2, rho_mid, rho_end, a1.m_ext.module, a1.q_ext.module);
            rep.absorb(a2.report, "alpha^g at (" + m.name + "," + q.name + ")");
            if (!a2.alpha) continue;
            AlphaComponent a12 = alpha_component(gf, phi21, rho, rho_end, m, q);
            rep.absorb(a12.report, "alpha^{gf} at (" + m.name + "," + q.name + ")");
            if (!a12.alpha) continue;

            // g*(alpha^f): g*(f*(M◁Q)) -> g*((f*M)◁'(phi*Q))
            ScalarExtension g_dom = extend_scalars(g, a1.domain_ext.module);
            ScalarExtension g_cod = extend_scalars(g, a1.codomain);
            LinearMap id_e2 = LinearMap::identity(g.target.dim, m.field());
            LinearMap g_alpha1 = g_cod.carrier.projection.compose(tensor_map(id_e2, *a1.alpha))
                                     .compose(g_dom.carrier.section);

            // canonical comparisons (gf)* ≅ g*f*
            ExtensionComparison kw = compare_extension_composite(g, f, action_module(rho, m, q));
            ExtensionComparison km = compare_extension_composite(g, f, m);
            ExtensionComparison kq = compare_extension_composite(phi2_alg, phi_alg, q);
            if (!is_invertible(kw.comparison) || !is_invertible(km.comparison) || !is_invertible(kq.comparison)) {
                rep.add_witness({"canonical comparison not invertible", {m.name, q.name}, "", ""});
                continue;
            }

            LinearMap lhs = tensor_map(km.comparison, kq.comparison).compose(*a12.alpha);
            LinearMap rhs = a2.alpha->compose(g_alpha1).compose(kw.comparison);
            cmp(rep, "pasting equality at (" + m.name + "," + q.name + ")", lhs, rhs);
        }
    return rep;
}

CheckReport check_comonad_morphism_along(const AlgebraHomFD& f, const BialgebraHom& phi, const CoactionData& rho,
                                         const CoactionData& rho2, const FunctorProbe& probe) {
    CheckReport rep;
    rep.check_name = "comonad-morphism(alpha_B along " + f.name + ")";
    const Field& fl = rho.rho.field();
    ComonadInstance g = build_hopf_comonad(rho);
    ComonadInstance g2 = build_hopf_comonad(rho2);
    ModuleData b_reg = regular_module(rho.target.algebra);
    LinearMap id_e2 = LinearMap::identity(f.target.dim, fl);

    auto ext_map = [&](const ModuleData& src, const ModuleData& dst, const LinearMap& h) {
        ScalarExtension s = extend_scalars(f, src), d = extend_scalars(f, dst);
        return d.carrier.projection.compose(tensor_map(id_e2, h)).compose(s.carrier.section);
    };
    // abar_M = (id ⊗ collapse) ∘ alpha_{M,B}: f*(GM) -> G'(f*M)
    auto abar_at = [&](const ModuleData& m) -> std::optional<LinearMap> {
        AlphaComponent a = alpha_component(f, phi, rho, rho2, m, b_reg);
        rep.absorb(a.report, "alpha at " + m.name);
        if (!a.alpha) return std::nullopt;
        LinearMap collapse = phi.target.algebra.mult
                                 .compose(tensor_map(LinearMap::identity(phi.target.dim(), fl), phi.matrix))
                                 .compose(a.q_ext.carrier.section);
        return tensor_map(LinearMap::identity(a.m_ext.module.dim, fl), collapse).compose(*a.alpha);
    };

    for (const auto& m : probe.modules) {
        auto abar = abar_at(m);
        if (!abar) continue;
        ModuleData gm = g.functor.on_object(m);
        ModuleData fgm = extend_scalars(f, gm).module;
        ModuleData fm = extend_scalars(f, m).module;
        ModuleData g2fm = g2.functor.on_object(fm);
        rep.absorb(check_module_morphism(fgm, g2fm, *abar, "abar at " + m.name), "");

        // counits: f*(eps_M) = eps'_{f*M} ∘ abar_M
        cmp(rep, "counit intertwined at " + m.name, ext_map(gm, m, g.epsilon.component(m)),
            g2.epsilon.component(fm).compose(*abar));

        // comultiplications: delta'_{f*M} ∘ abar_M = G'(abar_M) ∘ abar_{GM} ∘ f*(delta_M)
        auto abar_gm = abar_at(gm);
        if (!abar_gm) continue;
        ModuleData ggm = g.functor.on_object(gm);
        LinearMap lhs = g2.delta.component(fm).compose(*abar);
        LinearMap rhs = g2.functor.on_morphism(fgm, g2fm, *abar)
                            .compose(*abar_gm)
                            .compose(ext_map(gm, ggm, g.delta.component(m)));
        cmp(rep, "comultiplication intertwined at " + m.name, lhs, rhs);
    }
    return rep;
}

HopfLift lift_inverse_image(const AlgebraHomFD& f, const BialgebraHom& phi, const CoactionData& rho,
                            const CoactionData& rho2, const HopfModuleData& n) {
    HopfLift out;
    out.report.check_name = "lift(" + n.module.name + ")";
    out.report.absorb(check_hopf_module(n, rho), "input");
    if (!out.report.passed()) {
        out.report.status = CheckStatus::error;
        return out;
    }
    const Field& fl = n.module.field();
    ModuleData b_reg = regular_module(rho.target.algebra);
    AlphaComponent a = alpha_component(f, phi, rho, rho2, n.module, b_reg);
    out.report.absorb(a.report, "alpha");
    if (!a.alpha) return out;

    // f*(rho_N): f*N -> f*(N◁B)
    ScalarExtension ext_n = extend_scalars(f, n.module);
    LinearMap f_rho = a.domain_ext.carrier.projection
                          .compose(tensor_map(LinearMap::identity(f.target.dim, fl), n.coact))
                          .compose(ext_n.carrier.section);

    // collapse phi*B ≅ B' as left B'-modules: [b'⊗b] |-> b'·phi(b)
    LinearMap collapse = phi.target.algebra.mult
                             .compose(tensor_map(LinearMap::identity(phi.target.dim(), fl), phi.matrix))
                             .compose(a.q_ext.carrier.section);
    if (!is_invertible(collapse)) {
        out.report.add_witness({"canonical collapse phi*B -> B' not invertible", {}, "", ""});
        return out;
    }
    out.report.absorb(
        check_module_morphism(a.q_ext.module, regular_module(phi.target.algebra), collapse, "collapse"), "");

    LinearMap lifted_coact = tensor_map(LinearMap::identity(ext_n.module.dim, fl), collapse)
                                 .compose(*a.alpha)
                                 .compose(f_rho);
    HopfModuleData lifted{ext_n.module, rho2.target, lifted_coact};
    out.report.absorb(check_hopf_module(lifted, rho2), "output");
    if (out.report.passed()) out.lifted = std::move(lifted);
    return out;
}

CheckReport lift_localization_hopf(const FindimLocalization& loc, const CoactionData& rho,
                                   const FindimCompatibility& compat, const std::vector<HopfModuleData>& probes) {
    CheckReport rep;
    rep.check_name = "Q^{B*}(" + rho.name + ")";
    if (!compat.compatible()) {
        rep.add_witness({"incompatible localization", {}, "", ""}, CheckStatus::error);
        return rep;
    }
    BialgebraHom id_b = identity_bialgebra_hom(rho.target);
    ExtensionFunctor ext{loc};
    for (const auto& n : probes) {
        HopfLift lift = lift_inverse_image(loc.iota, id_b, rho, *compat.localized_coaction, n);
        rep.absorb(lift.report, n.module.name);
        if (!lift.lifted) continue;
        // forgetful square on the nose: U_mu Q^{B*} N = Q* U N
        ModuleData qstar = ext.on_object(n.module);
        if (lift.lifted->module.dim != qstar.dim || lift.lifted->module.act != qstar.act)
            rep.add_witness({"forgetful square U_mu∘Q^{B*} = Q*∘U violated", {n.module.name},
                             lift.lifted->module.act.str(), qstar.act.str()});
    }
    return rep;
}

LocalizedComonad build_localized_comonad(const FindimLocalization& loc, const ComonadInstance& g,
                                         const NatFamily& l, const FunctorProbe& probe_over_e) {
    LocalizedComonad out;
    out.report.check_name = "localized-comonad";
    ExtensionFunctor ext{loc};
    FindimLocalization loc_copy = loc;
    ComonadInstance g_copy = g;

    out.g_mu.functor.name = "G_mu";
    out.g_mu.functor.on_object = [ext, g_copy, loc_copy](const ModuleData& n) {
        return ext.at(g_copy.functor.on_object(loc_copy.direct_image(n))).module;
    };
    out.g_mu.functor.on_morphism = [ext, g_copy, loc_copy](const ModuleData& src, const ModuleData& dst,
                                                           const LinearMap& h) {
        ModuleData s0 = loc_copy.direct_image(src), d0 = loc_copy.direct_image(dst);
        LinearMap gh = g_copy.functor.on_morphism(s0, d0, h);
        return ext.on_morphism(g_copy.functor.on_object(s0), g_copy.functor.on_object(d0), gh);
    };
    out.g_mu.delta.name = "delta_mu";
    out.g_mu.delta.component = [ext, g_copy, loc_copy](const ModuleData& n) {
        ModuleData n0 = loc_copy.direct_image(n);
        ModuleData gn0 = g_copy.functor.on_object(n0);
        ScalarExtension ext_gn0 = ext.at(gn0);
        ModuleData t_gn0 = loc_copy.direct_image(ext_gn0.module);
        LinearMap g_eta = g_copy.functor.on_morphism(gn0, t_gn0, ext_gn0.canonical);
        LinearMap inner = g_eta.compose(g_copy.delta.component(n0)); // GN0 -> G T GN0
        return ext.on_morphism(gn0, g_copy.functor.on_object(t_gn0), inner);
    };
    out.g_mu.epsilon.name = "epsilon_mu";
    out.g_mu.epsilon.component = [ext, g_copy, loc_copy](const ModuleData& n) {
        ModuleData n0 = loc_copy.direct_image(n);
        ModuleData gn0 = g_copy.functor.on_object(n0);
        LinearMap q_eps = ext.on_morphism(gn0, n0, g_copy.epsilon.component(n0));
        ScalarExtension e2 = ext.at(n0);
        LinearMap counit = n.act.compose(e2.carrier.section); // [x⊗v] -> x·v
        return counit.compose(q_eps);
    };

    out.alpha = [ext, g_copy, loc_copy, l](const ModuleData& m) {
        ModuleData gm = g_copy.functor.on_object(m);
        ScalarExtension ext_gm = ext.at(gm);
        ModuleData tm = loc_copy.direct_image(ext.at(m).module);
        LinearMap comp = l.component(m).compose(ext_gm.canonical); // GM -> T GM -> G TM
        return ext.on_morphism(gm, g_copy.functor.on_object(tm), comp);
    };

    // comonad laws on the localized probe
    FunctorProbe loc_probe;
    for (const auto& m : probe_over_e.modules) loc_probe.modules.push_back(ext.on_object(m));
    for (const auto& h : probe_over_e.maps)
        loc_probe.maps.push_back(ProbeMap{
            "Q*" + h.name, h.src, h.dst,
            ext.on_morphism(probe_over_e.modules[h.src], probe_over_e.modules[h.dst], h.matrix)});
    out.report.absorb(check_comonad_laws(out.g_mu, loc_probe), "G_mu");

    // mixed pentagon and the counit triangle for alpha_l
    for (std::size_t i = 0; i < probe_over_e.modules.size(); ++i) {
        const ModuleData& m = probe_over_e.modules[i];
        const ModuleData& qm = loc_probe.modules[i];
        ModuleData gm = g.functor.on_object(m);
        ModuleData ggm = g.functor.on_object(gm);
        LinearMap alpha_m = out.alpha(m);

        LinearMap lhs = out.g_mu.delta.component(qm).compose(alpha_m);
        LinearMap rhs = out.g_mu.functor
                            .on_morphism(ext.on_object(gm), out.g_mu.functor.on_object(qm), alpha_m)
                            .compose(out.alpha(gm))
                            .compose(ext.on_morphism(gm, ggm, g.delta.component(m)));
        cmp(out.report, "mixed pentagon at " + m.name, lhs, rhs);

        LinearMap tri_l = out.g_mu.epsilon.component(qm).compose(alpha_m);
        LinearMap tri_r = ext.on_morphism(gm, m, g.epsilon.component(m));
        cmp(out.report, "counit triangle at " + m.name, tri_l, tri_r);
    }
    return out;
}

CheckReport compare_localized_comonad(const FindimLocalization& loc, const CoactionData& rho,
                                      const FindimCompatibility& compat, const FunctorProbe& probe_over_e) {
    CheckReport rep;
    rep.check_name = "G_mu-comparison(" + rho.name + ")";
    if (!compat.compatible()) {
        rep.add_witness({"incompatible localization", {}, "", ""}, CheckStatus::error);
        return rep;
    }
    ComonadInstance g = build_hopf_comonad(rho);
    MixedLawFamily l = hopf_mixed_law(loc, rho, *compat.localized_coaction, probe_over_e);
    LocalizedComonad lc = build_localized_comonad(loc, g, l.family, probe_over_e);
    rep.absorb(lc.report, "construction");
    ComonadInstance g_prime = build_hopf_comonad(*compat.localized_coaction);
    ExtensionFunctor ext{loc};

    // Phi_N: G_mu N -> N⊗B, [x⊗(v⊗b)] -> x·(v⊗b) through the rho_S-twisted action
    auto phi_at = [&](const ModuleData& n) {
        ModuleData n0 = loc.direct_image(n);
        ModuleData gn0 = g.functor.on_object(n0);
        ModuleData gpn = g_prime.functor.on_object(n);
        ScalarExtension e = ext.at(gn0);
        return gpn.act.compose(e.carrier.section);
    };

    std::vector<ModuleData> loc_mods;
    for (const auto& m : probe_over_e.modules) loc_mods.push_back(ext.on_object(m));

    for (const auto& n : loc_mods) {
        ModuleData gmun = lc.g_mu.functor.on_object(n);
        ModuleData gpn = g_prime.functor.on_object(n);
        LinearMap phi = phi_at(n);
        if (!is_invertible(phi)) {
            rep.add_witness({"comparison not invertible", {n.name}, "rank " + std::to_string(rank(phi)),
                             std::to_string(gpn.dim)});
            continue;
        }
        rep.absorb(check_module_morphism(gmun, gpn, phi, "comparison at " + n.name), "");

        // comonad morphism: delta' ∘ Phi = (Phi_{G'N} ∘ G_mu(Phi)) ∘ delta_mu
        LinearMap lhs = g_prime.delta.component(n).compose(phi);
        LinearMap rhs = phi_at(gpn)
                            .compose(lc.g_mu.functor.on_morphism(gmun, gpn, phi))
                            .compose(lc.g_mu.delta.component(n));
        cmp(rep, "comultiplication comparison at " + n.name, lhs, rhs);
        cmp(rep, "counit comparison at " + n.name, g_prime.epsilon.component(n).compose(phi),
            lc.g_mu.epsilon.component(n));
    }

    // naturality of Phi on localized probe maps
    for (const auto& h : probe_over_e.maps) {
        const ModuleData& a = loc_mods[h.src];
        const ModuleData& b = loc_mods[h.dst];
        LinearMap qh = ext.on_morphism(probe_over_e.modules[h.src], probe_over_e.modules[h.dst], h.matrix);
        LinearMap lhs = g_prime.functor.on_morphism(a, b, qh).compose(phi_at(a));
        LinearMap rhs = phi_at(b).compose(lc.g_mu.functor.on_morphism(a, b, qh));
        cmp(rep, "comparison natural at " + h.name, lhs, rhs);
    }
    return rep;
}

CheckReport check_hopf_action(const HopfActionData& act) {
    CheckReport rep;
    rep.check_name = "hopf-action(" + act.name + ")";
    const Field& f = act.act.field();
    const BialgebraData& h = act.h;
    const StructureConstantAlgebra& a = act.a;
    ModuleData as_module{act.name, h.algebra, a.dim, act.act};
    rep.absorb(check_module(as_module), "H-module");

    const auto hlab = h.basis();
    const auto alab = a.basis.size() == a.dim ? a.basis : default_labels(a.dim, "a");
    LinearMap lhs = act.act.compose(tensor_map(LinearMap::identity(h.dim(), f), a.mult));
    LinearMap rhs = a.mult.compose(tensor_map(act.act, act.act))
                        .compose(permute_factors({h.dim(), h.dim(), a.dim, a.dim}, {0, 2, 1, 3}, f))
                        .compose(tensor_map(h.coalgebra.comult, LinearMap::identity(a.dim * a.dim, f)));
    compare_columns(rep, "h |> (ab) = Σ (h_(1)|>a)(h_(2)|>b)", lhs, rhs, {hlab, alab, alab}, alab);

    LinearMap unit_lhs = act.act.compose(tensor_map(LinearMap::identity(h.dim(), f), LinearMap::column(a.unit, f)));
    LinearMap unit_rhs = LinearMap::column(a.unit, f).compose(h.coalgebra.counit);
    compare_columns(rep, "h |> 1 = eps(h) 1", unit_lhs, unit_rhs, {hlab}, alab);
    return rep;
}

MonadInstance build_hopf_monad(const HopfActionData& act) {
    MonadInstance t;
    const BialgebraData h = act.h;
    const LinearMap act_a = act.act;
    t.functor.name = "T";
    t.functor.on_object = [h, act_a](const ModuleData& m) {
        const Field& f = m.field();
        ModuleData out;
        out.name = m.name + "⊗" + h.name();
        out.algebra = m.algebra;
        out.dim = m.dim * h.dim();
        // a |> (m⊗h) = Σ ((h_(2) |> a) |> m) ⊗ h_(1)
        const std::size_t da = m.algebra.dim, dm = m.dim, dh = h.dim();
        LinearMap step1 = tensor_map(LinearMap::identity(da * dm, f), h.coalgebra.comult);
        LinearMap step2 = permute_factors({da, dm, dh, dh}, {3, 0, 1, 2}, f);
        LinearMap step3 = tensor_map(act_a, LinearMap::identity(dm * dh, f));
        LinearMap step4 = tensor_map(m.act, LinearMap::identity(dh, f));
        out.act = step4.compose(step3).compose(step2).compose(step1);
        return out;
    };
    t.functor.on_morphism = [h](const ModuleData&, const ModuleData&, const LinearMap& f) {
        return tensor_map(f, LinearMap::identity(h.dim(), f.field()));
    };
    t.mu.name = "mu";
    t.mu.component = [h](const ModuleData& m) {
        return tensor_map(LinearMap::identity(m.dim, m.field()), h.algebra.mult);
    };
    t.eta.name = "eta";
    t.eta.component = [h](const ModuleData& m) {
        return tensor_map(LinearMap::identity(m.dim, m.field()),
                          LinearMap::column(h.algebra.unit, m.field()));
    };
    return t;
}

CheckReport verify_hopf_monad(const HopfActionData& act, const FunctorProbe& probe) {
    CheckReport rep;
    rep.check_name = "hopf-monad(" + act.name + ")";
    rep.absorb(check_hopf_action(act), "action");
    rep.absorb(check_monad_laws(build_hopf_monad(act), probe), "monad");
    return rep;
}

ActionCompatibility check_action_compat(const HopfActionData& act, const FindimLocalization& loc) {
    ActionCompatibility out;
    out.report.check_name = "action-compat(" + act.name + ", " + loc.source.name + ")";
    if (loc.source.dim != act.a.dim) throw std::invalid_argument("localization is over a different algebra");
    const Field& f = act.act.field();
    const BialgebraData& h = act.h;
    const auto hlab = h.basis();
    const auto alab = act.a.basis.size() == act.a.dim ? act.a.basis : default_labels(act.a.dim, "a");

    LinearMap act_prime = loc.iota.matrix.compose(act.act).compose(
        tensor_map(LinearMap::identity(h.dim(), f), loc.carrier.section));

    // forced unit values: if iota(a) = 1 then any Hopf action must send
    // (h, iota(a)) to eps(h)·1
    for (std::size_t i = 0; i < h.dim(); ++i)
        for (std::size_t j = 0; j < act.a.dim; ++j) {
            Vec ia = loc.iota.apply(unit_vec(act.a.dim, j, f));
            if (ia != loc.localized.unit) continue;
            Vec actual = loc.iota.apply(act.act.apply(kron_vec(unit_vec(h.dim(), i, f), unit_vec(act.a.dim, j, f))));
            Vec forced = scale_vec(h.coalgebra.counit.apply(unit_vec(h.dim(), i, f))[0], loc.localized.unit);
            if (actual != forced)
                out.report.add_witness({"forced unit value violated: iota(a) = 1 requires h|>'1 = eps(h)1",
                                        {hlab[i], alab[j]},
                                        combo_str(actual, loc.localized.basis),
                                        combo_str(forced, loc.localized.basis)},
                                       CheckStatus::incompatible);
        }
    if (!out.report.passed()) return out;

    // kernel stability: ker iota must be |>-stable
    for (std::size_t i = 0; i < h.dim(); ++i)
        for (const auto& r : loc.kernel.basis()) {
            Vec img = loc.iota.apply(act.act.apply(kron_vec(unit_vec(h.dim(), i, f), r)));
            if (!is_zero_vec(img))
                out.report.add_witness({"kernel of iota is not stable under the action",
                                        {hlab[i], combo_str(r, alab)},
                                        combo_str(img, loc.localized.basis),
                                        "0"},
                                       CheckStatus::incompatible);
        }
    if (!out.report.passed()) return out;

    HopfActionData localized{act.name + "_mu", h, loc.localized, act_prime};
    CheckReport hopf = check_hopf_action(localized);
    if (!hopf.passed()) {
        out.report.absorb(hopf, "induced action");
        out.report.status = CheckStatus::incompatible;
        return out;
    }

    LinearMap sq_lhs = loc.iota.matrix.compose(act.act);
    LinearMap sq_rhs = act_prime.compose(tensor_map(LinearMap::identity(h.dim(), f), loc.iota.matrix));
    compare_columns(out.report, "compatibility square iota∘|> = |>'∘(H⊗iota)", sq_lhs, sq_rhs, {hlab, alab},
                    loc.localized.basis);
    if (!out.report.passed()) {
        out.report.status = CheckStatus::incompatible;
        return out;
    }
    out.localized = std::move(localized);
    return out;
}

CheckReport monad_loc_distributive(const HopfActionData& act, const FindimLocalization& loc,
                                   const FunctorProbe& probe) {
    CheckReport rep;
    rep.check_name = "monad-loc-law(" + act.name + ")";
    ActionCompatibility compat = check_action_compat(act, loc);
    if (!compat.compatible()) {
        rep.add_witness({"incompatible action", {}, "", ""}, CheckStatus::error);
        return rep;
    }
    const Field& f = act.act.field();
    const BialgebraData& h = act.h;
    MonadInstance t = build_hopf_monad(act);
    MonadInstance lmonad = extension_monad(loc);
    ExtensionFunctor ext{loc};
    const LinearMap act_prime = compat.localized->act;

    // Lambda_M: L(TM) -> T(LM), [x⊗(m⊗h)] -> Σ (h_(2)|>'x ⊗ m) ⊗ h_(1)
    auto lambda_at = [&](const ModuleData& m) {
        ModuleData tm = t.functor.on_object(m);
        ScalarExtension ext_tm = ext.at(tm);
        ScalarExtension ext_m = ext.at(m);
        const std::size_t q = loc.localized.dim, dm = m.dim, dh = h.dim();
        LinearMap step1 = tensor_map(LinearMap::identity(q * dm, f), h.coalgebra.comult);
        LinearMap step2 = permute_factors({q, dm, dh, dh}, {3, 0, 1, 2}, f);
        LinearMap step3 = tensor_map(act_prime, LinearMap::identity(dm * dh, f));
        LinearMap step4 = tensor_map(ext_m.carrier.projection, LinearMap::identity(dh, f));
        LinearMap raw = step4.compose(step3).compose(step2).compose(step1);
        LinearMap lambda = raw.compose(ext_tm.carrier.section);
        cmp(rep, "descent of Lambda at " + m.name, lambda.compose(ext_tm.carrier.projection), raw);
        return lambda;
    };

    NatFamily lambda{"Lambda", [&](const ModuleData& m) { return lambda_at(m); }};
    Endofunctor lt = compose_endofunctors(lmonad.functor, t.functor);
    Endofunctor tl = compose_endofunctors(t.functor, lmonad.functor);
    rep.absorb(check_naturality(lambda, lt, tl, probe), "");

    for (const auto& m : probe.modules) {
        ModuleData tm = t.functor.on_object(m);
        ModuleData lm = lmonad.functor.on_object(m);
        ModuleData ltm = lmonad.functor.on_object(tm);
        ModuleData tlm = t.functor.on_object(lm);
        ModuleData lltm = lmonad.functor.on_object(ltm);
        ModuleData ltlm = lmonad.functor.on_object(tlm);
        ModuleData ttm = t.functor.on_object(tm);
        LinearMap lam = lambda_at(m);

        // eta^L: Lambda ∘ eta^L_{TM} = T(eta^L_M)
        cmp(rep, "eta^L compatibility at " + m.name, lam.compose(lmonad.eta.component(tm)),
            t.functor.on_morphism(m, lm, lmonad.eta.component(m)));

        // eta^T: Lambda ∘ L(eta^T_M) = eta^T_{LM}
        cmp(rep, "eta^T compatibility at " + m.name,
            lam.compose(lmonad.functor.on_morphism(m, tm, t.eta.component(m))), t.eta.component(lm));

        // mu^L: Lambda ∘ mu^L_{TM} = T(mu^L_M) ∘ Lambda_{LM} ∘ L(Lambda_M)
        LinearMap lhs_mul = lam.compose(lmonad.mu.component(tm));
        LinearMap rhs_mul = t.functor.on_morphism(lmonad.functor.on_object(lm), lm, lmonad.mu.component(m))
                                .compose(lambda_at(lm))
                                .compose(lmonad.functor.on_morphism(ltm, tlm, lam));
        cmp(rep, "mu^L compatibility at " + m.name, lhs_mul, rhs_mul);

        // mu^T: Lambda ∘ L(mu^T_M) = mu^T_{LM} ∘ T(Lambda_M) ∘ Lambda_{TM}
        LinearMap lhs_mut = lam.compose(lmonad.functor.on_morphism(ttm, tm, t.mu.component(m)));
        LinearMap rhs_mut = t.mu.component(lm)
                                .compose(t.functor.on_morphism(ltm, tlm, lam))
                                .compose(lambda_at(tm));
        cmp(rep, "mu^T compatibility at " + m.name, lhs_mut, rhs_mut);
    }
    return rep;
}

} // namespace coact
