#include <algorithm>

#include "coact/parser.hpp"

namespace coact {

namespace {

struct Elaborator {
    const PresentationBundle& bundle;
    Environment env;
    std::map<std::string, std::string> module_over; // module name -> algebra name

    std::size_t index_of(const std::vector<std::string>& basis, const std::string& name, SourceLoc loc) const {
        auto it = std::find(basis.begin(), basis.end(), name);
        if (it == basis.end()) throw parse_error(loc, "unknown basis element '" + name + "'");
        return static_cast<std::size_t>(it - basis.begin());
    }

    Scalar field_scalar(const Scalar& lit, SourceLoc loc) const {
        try {
            return lit.into_field(env.field);
        } catch (const division_by_zero&) {
            throw parse_error(loc, "scalar " + lit.str() + " does not exist in " + env.field.name());
        }
    }

    Vec lower_lincomb(const LinComb& comb, const std::vector<std::string>& basis, SourceLoc loc) const {
        Vec v = zero_vec(basis.size(), env.field);
        for (const auto& [name, c] : comb) v[index_of(basis, name, loc)] += field_scalar(c, loc);
        return v;
    }

    StructureConstantAlgebra lower_algebra(const std::string& name, const AlgebraDecl& a, SourceLoc loc) const {
        StructureConstantAlgebra out;
        out.name = name;
        out.dim = a.basis.size();
        out.basis = a.basis;
        out.mult = LinearMap(out.dim, out.dim * out.dim, env.field);
        for (const auto& [pair, comb] : a.mult) {
            std::size_t i = index_of(a.basis, pair.first, loc), j = index_of(a.basis, pair.second, loc);
            Vec v = lower_lincomb(comb, a.basis, loc);
            for (std::size_t k = 0; k < out.dim; ++k) out.mult.at(k, i * out.dim + j) = v[k];
        }
        out.unit = lower_lincomb(a.unit, a.basis, loc);
        return out;
    }

    CoalgebraData lower_coalgebra(const std::string& name, const CoalgebraDecl& c, SourceLoc loc) const {
        CoalgebraData out;
        out.name = name;
        out.dim = c.basis.size();
        out.basis = c.basis;
        out.comult = LinearMap(out.dim * out.dim, out.dim, env.field);
        out.counit = LinearMap(1, out.dim, env.field);
        for (const auto& [src, comb] : c.comult) {
            std::size_t j = index_of(c.basis, src, loc);
            for (const auto& [pair, s] : comb) {
                std::size_t k = index_of(c.basis, pair.first, loc), l = index_of(c.basis, pair.second, loc);
                out.comult.at(k * out.dim + l, j) += field_scalar(s, loc);
            }
        }
        for (const auto& [src, s] : c.counit) out.counit.at(0, index_of(c.basis, src, loc)) = field_scalar(s, loc);
        return out;
    }

    const StructureConstantAlgebra& algebra_of(const std::string& name, SourceLoc loc) const {
        if (auto it = env.algebras.find(name); it != env.algebras.end()) return it->second;
        if (auto it = env.bialgebras.find(name); it != env.bialgebras.end()) return it->second.algebra;
        throw parse_error(loc, "'" + name + "' is not a findim algebra");
    }

    const CoalgebraData& coalgebra_of(const std::string& name, SourceLoc loc) const {
        if (auto it = env.coalgebras.find(name); it != env.coalgebras.end()) return it->second;
        if (auto it = env.bialgebras.find(name); it != env.bialgebras.end()) return it->second.coalgebra;
        throw parse_error(loc, "'" + name + "' is not a findim coalgebra");
    }

    /// Monomial as a vector of a findim space: a single basis name, or the
    /// empty monomial standing for the unit of an algebra.
    Vec lower_findim_mono(const MonomialExpr& mono, const std::vector<std::string>& basis, const Vec* unit,
                          SourceLoc loc) const {
        if (mono.empty()) {
            if (!unit) throw parse_error(loc, "the empty monomial needs an algebra unit");
            return *unit;
        }
        if (mono.size() != 1 || mono.begin()->second != 1)
            throw parse_error(loc, "expected a single basis element in the findim backend");
        return unit_vec(basis.size(), index_of(basis, mono.begin()->first, loc), env.field);
    }

    SkewElement lower_skew_mono(const MonomialExpr& mono, const SkewAlgebraPtr& alg, SourceLoc loc) const {
        Expo e(alg->arity(), 0);
        for (const auto& [g, exp] : mono) {
            auto idx = alg->gen_index(g);
            if (!idx) throw parse_error(loc, "unknown generator '" + g + "'");
            e[*idx] = exp;
        }
        try {
            return SkewElement::monomial(alg, e, Scalar::one(env.field));
        } catch (const std::invalid_argument& err) {
            throw parse_error(loc, err.what());
        }
    }

    void run() {
        env.field = bundle.field;
        for (const auto& d : bundle.decls) std::visit([&](const auto& body) { lower(d, body); }, d.body);
    }

    void lower(const Declaration& d, const AlgebraDecl& a) {
        env.algebras.emplace(d.name, lower_algebra(d.name, a, d.loc));
        env.order.emplace_back("algebra", d.name);
    }

    void lower(const Declaration& d, const CoalgebraDecl& c) {
        env.coalgebras.emplace(d.name, lower_coalgebra(d.name, c, d.loc));
        env.order.emplace_back("coalgebra", d.name);
    }

    void lower(const Declaration& d, const BialgebraDecl& b) {
        env.bialgebras.emplace(d.name,
                               BialgebraData{lower_algebra(d.name, b.alg, d.loc), lower_coalgebra(d.name, b.co, d.loc)});
        env.order.emplace_back("bialgebra", d.name);
    }

    void lower(const Declaration& d, const SkewDecl& s) {
        std::vector<std::tuple<std::size_t, std::size_t, Scalar>> q_pairs;
        auto gen_idx = [&](const std::string& g) {
            return static_cast<std::size_t>(std::find(s.gens.begin(), s.gens.end(), g) - s.gens.begin());
        };
        for (const auto& [pair, q] : s.q) {
            std::size_t i = gen_idx(pair.first), j = gen_idx(pair.second);
            Scalar qf = field_scalar(q, d.loc);
            if (qf.is_zero()) throw parse_error(d.loc, "q factor vanishes in " + env.field.name());
            // declared pair (x,y) means y·x = q·x·y; normalize to i < j
            if (i < j)
                q_pairs.emplace_back(i, j, qf);
            else
                q_pairs.emplace_back(j, i, qf.inverse());
        }
        std::vector<bool> inv(s.gens.size(), false);
        for (const auto& g : s.inv) inv[gen_idx(g)] = true;
        std::vector<GenTag> tags(s.gens.size(), GenTag::none);
        for (const auto& g : s.grouplike) tags[gen_idx(g)] = GenTag::grouplike;
        for (const auto& g : s.primitive) {
            if (tags[gen_idx(g)] != GenTag::none) throw parse_error(d.loc, "generator '" + g + "' tagged twice");
            tags[gen_idx(g)] = GenTag::primitive;
        }
        env.skews.emplace(d.name, make_skew_algebra(d.name, s.gens, std::move(q_pairs), std::move(inv),
                                                    env.field, std::move(tags)));
        env.order.emplace_back("skew", d.name);
    }

    void lower(const Declaration& d, const CoactionDecl& c) {
        if (env.skews.count(c.source)) {
            const SkewAlgebraPtr& e = env.skews.at(c.source);
            const SkewAlgebraPtr& b = env.skews.at(c.target);
            Environment::SkewCoaction sc{e, b, tensor_skew(e, b), {}};
            for (std::size_t i = 0; i < e->arity(); ++i) {
                SkewElement img = SkewElement::zero(sc.eb.algebra);
                auto it = c.rho.find(e->gens()[i]);
                if (it != c.rho.end())
                    for (const auto& [pair, s] : it->second) {
                        SkewElement le = sc.eb.embed_left(lower_skew_mono(pair.first, e, d.loc));
                        SkewElement re = sc.eb.embed_right(lower_skew_mono(pair.second, b, d.loc));
                        img = img + (le * re).scaled(field_scalar(s, d.loc));
                    }
                sc.images.push_back(std::move(img));
            }
            env.skew_coactions.emplace(d.name, std::move(sc));
            env.order.emplace_back("coaction", d.name);
            return;
        }
        const StructureConstantAlgebra& e = algebra_of(c.source, d.loc);
        auto bit = env.bialgebras.find(c.target);
        if (bit == env.bialgebras.end()) throw parse_error(d.loc, "'" + c.target + "' is not a bialgebra");
        const BialgebraData& b = bit->second;
        LinearMap rho(e.dim * b.dim(), e.dim, env.field);
        for (const auto& [src, comb] : c.rho) {
            std::size_t j = index_of(e.basis, src, d.loc);
            for (const auto& [pair, s] : comb) {
                Vec lv = lower_findim_mono(pair.first, e.basis, &e.unit, d.loc);
                Vec rv = lower_findim_mono(pair.second, b.basis(), &b.algebra.unit, d.loc);
                Vec kron = kron_vec(lv, rv);
                Scalar c0 = field_scalar(s, d.loc);
                for (std::size_t r = 0; r < kron.size(); ++r) rho.at(r, j) += c0 * kron[r];
            }
        }
        env.coactions.emplace(d.name, CoactionData{d.name, e, b, std::move(rho)});
        env.order.emplace_back("coaction", d.name);
    }

    void lower(const Declaration& d, const ActionDecl& a) {
        auto hit = env.bialgebras.find(a.h);
        if (hit == env.bialgebras.end()) throw parse_error(d.loc, "'" + a.h + "' is not a bialgebra");
        const BialgebraData& h = hit->second;
        const StructureConstantAlgebra& alg = algebra_of(a.a, d.loc);
        LinearMap act(alg.dim, h.dim() * alg.dim, env.field);
        for (const auto& [pair, comb] : a.act) {
            std::size_t i = index_of(h.basis(), pair.first, d.loc), j = index_of(alg.basis, pair.second, d.loc);
            Vec v = lower_lincomb(comb, alg.basis, d.loc);
            for (std::size_t r = 0; r < alg.dim; ++r) act.at(r, i * alg.dim + j) = v[r];
        }
        env.actions.emplace(d.name, HopfActionData{d.name, h, alg, std::move(act)});
        env.order.emplace_back("action", d.name);
    }

    ModuleData lower_module(const std::string& name, const StructureConstantAlgebra& alg,
                            const std::vector<std::string>& basis,
                            const std::map<std::pair<std::string, std::string>, LinComb>& act,
                            SourceLoc loc) const {
        ModuleData m;
        m.name = name;
        m.algebra = alg;
        m.dim = basis.size();
        m.act = LinearMap(m.dim, alg.dim * m.dim, env.field);
        for (const auto& [pair, comb] : act) {
            std::size_t i = index_of(alg.basis, pair.first, loc), j = index_of(basis, pair.second, loc);
            Vec v = lower_lincomb(comb, basis, loc);
            for (std::size_t r = 0; r < m.dim; ++r) m.act.at(r, i * m.dim + j) = v[r];
        }
        return m;
    }

    LinearMap lower_coact_matrix(const std::map<std::string, TensorComb>& coact,
                                 const std::vector<std::string>& basis, const std::vector<std::string>& left,
                                 const std::vector<std::string>& right, SourceLoc loc) const {
        // Hopf modules: m -> Σ m'⊗b (module on the left); entwined: m -> Σ c⊗m'
        LinearMap out(left.size() * right.size(), basis.size(), env.field);
        for (const auto& [src, comb] : coact) {
            std::size_t j = index_of(basis, src, loc);
            for (const auto& [pair, s] : comb) {
                std::size_t k = index_of(left, pair.first, loc), l = index_of(right, pair.second, loc);
                out.at(k * right.size() + l, j) += field_scalar(s, loc);
            }
        }
        return out;
    }

    void lower(const Declaration& d, const ModuleDecl& m) {
        const StructureConstantAlgebra& alg = algebra_of(m.over, d.loc);
        env.modules.emplace(d.name, lower_module(d.name, alg, m.basis, m.act, d.loc));
        module_over[d.name] = m.over;
        env.order.emplace_back("module", d.name);
    }

    void lower(const Declaration& d, const HopfModuleDecl& m) {
        auto cit = env.coactions.find(m.over);
        if (cit == env.coactions.end()) throw parse_error(d.loc, "'" + m.over + "' is not a findim coaction");
        const CoactionData& rho = cit->second;
        ModuleData mod = lower_module(d.name, rho.source, m.basis, m.act, d.loc);
        LinearMap coact = lower_coact_matrix(m.coact, m.basis, m.basis, rho.target.basis(), d.loc);
        env.hopf_modules.emplace(d.name,
                                 Environment::HopfModule{HopfModuleData{std::move(mod), rho.target, std::move(coact)},
                                                         m.over});
        env.order.emplace_back("hopfmodule", d.name);
    }

    void lower(const Declaration& d, const LocalizeDecl& l) {
        Environment::LocalizeRequest req;
        req.target = l.target;
        if (l.skew_form) {
            if (!env.skews.count(l.target)) throw parse_error(d.loc, "'" + l.target + "' is not a skew algebra");
            req.skew = true;
            req.gens = l.gens;
        } else {
            const StructureConstantAlgebra& e = algebra_of(l.target, d.loc);
            req.idempotent = zero_vec(e.dim, env.field);
            for (const auto& [c, mono] : l.expr) {
                Vec v = lower_findim_mono(mono, e.basis, &e.unit, d.loc);
                req.idempotent = add_vec(req.idempotent, scale_vec(field_scalar(c, d.loc), v));
            }
        }
        env.localizations.emplace(d.name, std::move(req));
        env.order.emplace_back("localize", d.name);
    }

    void lower(const Declaration& d, const EntwiningDecl& e) {
        const StructureConstantAlgebra& a = algebra_of(e.alg, d.loc);
        const CoalgebraData& c = coalgebra_of(e.coalg, d.loc);
        LinearMap psi(c.dim * a.dim, a.dim * c.dim, env.field);
        for (const auto& [pair, comb] : e.psi) {
            std::size_t i = index_of(a.basis, pair.first, d.loc), j = index_of(c.basis, pair.second, d.loc);
            for (const auto& [cpair, s] : comb) {
                std::size_t k = index_of(c.basis, cpair.first, d.loc), l = index_of(a.basis, cpair.second, d.loc);
                psi.at(k * a.dim + l, i * c.dim + j) += field_scalar(s, d.loc);
            }
        }
        env.entwinings.emplace(d.name, EntwiningData{d.name, a, c, std::move(psi)});
        env.order.emplace_back("entwining", d.name);
    }

    void lower(const Declaration& d, const EntwinedModuleDecl& m) {
        auto eit = env.entwinings.find(m.over);
        if (eit == env.entwinings.end()) throw parse_error(d.loc, "'" + m.over + "' is not an entwining");
        const EntwiningData& psi = eit->second;
        ModuleData mod = lower_module(d.name, psi.a, m.basis, m.act, d.loc);
        LinearMap coact = lower_coact_matrix(m.coact, m.basis, psi.c.basis, m.basis, d.loc);
        env.entwined_modules.emplace(
            d.name, Environment::EntwinedModule{EntwinedModuleData{std::move(mod), std::move(coact)}, m.over});
        env.order.emplace_back("entwined", d.name);
    }

    void lower(const Declaration& d, const ProbeDecl& p) {
        Environment::Probe probe;
        for (const auto& mname : p.modules) {
            auto it = env.modules.find(mname);
            if (it == env.modules.end()) throw parse_error(d.loc, "'" + mname + "' is not a module");
            if (probe.algebra.empty())
                probe.algebra = module_over.at(mname);
            else if (probe.algebra != module_over.at(mname))
                throw parse_error(d.loc, "probe modules lie over different algebras");
            probe.probe.modules.push_back(it->second);
        }
        for (const auto& md : p.maps) {
            std::size_t src = static_cast<std::size_t>(
                std::find(p.modules.begin(), p.modules.end(), md.src) - p.modules.begin());
            std::size_t dst = static_cast<std::size_t>(
                std::find(p.modules.begin(), p.modules.end(), md.dst) - p.modules.begin());
            LinearMap mat(md.matrix.size(), md.matrix.empty() ? 0 : md.matrix[0].size(), env.field);
            for (std::size_t i = 0; i < md.matrix.size(); ++i)
                for (std::size_t j = 0; j < md.matrix[i].size(); ++j)
                    mat.at(i, j) = field_scalar(md.matrix[i][j], d.loc);
            probe.probe.maps.push_back(ProbeMap{md.name, src, dst, std::move(mat)});
        }
        env.probes.emplace(d.name, std::move(probe));
        env.order.emplace_back("probe", d.name);
    }
};

} // namespace

Environment elaborate(const PresentationBundle& bundle) {
    Elaborator e{bundle, {}, {}};
    e.run();
    return std::move(e.env);
}

} // namespace coact
