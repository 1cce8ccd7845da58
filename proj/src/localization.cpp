#include "coact/localization.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace coact {

namespace {

std::vector<std::string> quotient_labels(const QuotientSpace& qs, const std::vector<std::string>& src) {
    std::vector<std::string> out;
    for (std::size_t k = 0; k < qs.dim(); ++k) {
        std::size_t row = 0;
        for (std::size_t i = 0; i < qs.section.rows(); ++i)
            if (qs.section.at(i, k).is_one()) row = i;
        out.push_back("[" + (row < src.size() ? src[row] : "e" + std::to_string(row)) + "]");
    }
    return out;
}

} // namespace

FindimLocalization::LocalizedModule FindimLocalization::inverse_image(const ModuleData& m) const {
    const Field& f = m.field();
    Vec one_minus_e = sub_vec(source.unit, idempotent);
    LinearMap act_1me = m.act_by(one_minus_e);
    std::vector<Vec> rels;
    for (std::size_t k = 0; k < m.dim; ++k) rels.push_back(act_1me.column_at(k));
    QuotientSpace qs = quotient_space(m.dim, Subspace::span(m.dim, rels, f));

    LocalizedModule out;
    out.module.name = "Q*" + m.name;
    out.module.algebra = localized;
    out.module.dim = qs.dim();
    out.module.act = qs.projection.compose(m.act).compose(tensor_map(carrier.section, qs.section));
    out.eta = qs.projection;
    out.carrier = std::move(qs);
    return out;
}

LinearMap FindimLocalization::inverse_image_map(const LocalizedModule& src, const LocalizedModule& dst,
                                                const LinearMap& f) const {
    return dst.carrier.projection.compose(f).compose(src.carrier.section);
}

ModuleData FindimLocalization::direct_image(const ModuleData& n) const {
    ModuleData out;
    out.name = "Q_*" + n.name;
    out.algebra = source;
    out.dim = n.dim;
    out.act = n.act.compose(tensor_map(iota.matrix, LinearMap::identity(n.dim, n.field())));
    return out;
}

FindimLocalization::CounitData FindimLocalization::counit_map(const ModuleData& n) const {
    CounitData out{inverse_image(direct_image(n)), LinearMap()};
    // the counit collapses [x] to e·x; on a genuine E_mu-module e acts as 1
    LinearMap act_e = n.act_by(iota.apply(idempotent));
    out.counit = act_e.compose(out.qq.carrier.section);
    return out;
}

FunctorProbe FindimLocalization::localize_probe(const FunctorProbe& p) const {
    FunctorProbe out;
    std::vector<LocalizedModule> locs;
    for (const auto& m : p.modules) {
        locs.push_back(inverse_image(m));
        out.modules.push_back(locs.back().module);
    }
    for (const auto& f : p.maps)
        out.maps.push_back(ProbeMap{"Q*" + f.name, f.src, f.dst, inverse_image_map(locs[f.src], locs[f.dst], f.matrix)});
    return out;
}

FindimLocalizationResult localize_central_idempotent(const StructureConstantAlgebra& e, const Vec& idem) {
    FindimLocalizationResult res;
    res.report.check_name = "localize(" + e.name + ")";
    if (idem.size() != e.dim) throw std::invalid_argument("idempotent has wrong dimension");
    const Field& f = e.field();
    const auto lab = e.basis.size() == e.dim ? e.basis : default_labels(e.dim, "e");

    Vec ee = e.multiply(idem, idem);
    if (ee != idem) {
        res.report.add_witness({"not idempotent", {}, combo_str(ee, lab), combo_str(idem, lab)},
                               CheckStatus::error);
        return res;
    }
    for (std::size_t i = 0; i < e.dim; ++i) {
        Vec x = e.basis_vec(i);
        Vec lhs = e.multiply(idem, x), rhs = e.multiply(x, idem);
        if (lhs != rhs) {
            res.report.add_witness({"not central", {lab[i]}, combo_str(lhs, lab), combo_str(rhs, lab)},
                                   CheckStatus::error);
            return res;
        }
    }

    FindimLocalization loc;
    loc.source = e;
    loc.idempotent = idem;
    Vec one_minus_e = sub_vec(e.unit, idem);
    std::vector<Vec> rels;
    LinearMap left_1me = e.left_mult(one_minus_e);
    for (std::size_t i = 0; i < e.dim; ++i) rels.push_back(left_1me.column_at(i));
    loc.kernel = Subspace::span(e.dim, rels, f);
    loc.carrier = quotient_space(e.dim, loc.kernel);

    loc.localized.name = e.name + "_loc";
    loc.localized.dim = loc.carrier.dim();
    loc.localized.mult = loc.carrier.projection.compose(e.mult).compose(
        tensor_map(loc.carrier.section, loc.carrier.section));
    loc.localized.unit = loc.carrier.projection.apply(e.unit);
    loc.localized.basis = quotient_labels(loc.carrier, lab);
    loc.iota = AlgebraHomFD{"iota", e, loc.localized, loc.carrier.projection};
    res.loc = std::move(loc);
    return res;
}

CheckReport check_idempotent_monad(const FindimLocalization& loc, const FunctorProbe& probe_over_e) {
    CheckReport rep;
    rep.check_name = "idempotent-monad(" + loc.source.name + ")";

    // counit on every localized probe object
    for (const auto& m : probe_over_e.modules) {
        FindimLocalization::LocalizedModule n = loc.inverse_image(m);
        FindimLocalization::CounitData c = loc.counit_map(n.module);
        if (!is_invertible(c.counit))
            rep.add_witness({"counit Q*Q_* -> id not invertible", {n.module.name},
                             "rank " + std::to_string(rank(c.counit)), "rank " + std::to_string(n.module.dim)});
        else
            rep.absorb(check_module_morphism(c.qq.module, n.module, c.counit, "counit"), n.module.name);
    }

    // monad multiplication Q_*Q*Q_*Q*M -> Q_*Q*M is the counit at Q*M
    for (const auto& m : probe_over_e.modules) {
        FindimLocalization::LocalizedModule n = loc.inverse_image(m);
        FindimLocalization::CounitData c = loc.counit_map(n.module);
        if (!is_invertible(c.counit))
            rep.add_witness({"monad multiplication not invertible", {m.name},
                             "rank " + std::to_string(rank(c.counit)), "rank " + std::to_string(n.module.dim)});
    }
    return rep;
}

CheckReport check_idempotent_monad_windowed(const SkewLocalization& loc, long window) {
    CheckReport rep;
    rep.check_name = "idempotent-monad-windowed(" + loc.source->name() + ")";

    // localization is idempotent on presentations
    std::vector<std::string> subset;
    for (auto i : loc.inverted) subset.push_back(loc.source->gens()[i]);
    SkewLocalization again = localize_at_generators(loc.localized, subset);
    if (!again.localized->same_presentation(*loc.localized))
        rep.add_witness({"localizing twice changes the presentation", {}, again.localized->name(),
                         loc.localized->name()});

    for (auto i : loc.inverted)
        if (!is_unit(SkewElement::generator(loc.localized, i)))
            rep.add_witness({"inverted generator is not a unit", {loc.localized->gens()[i]}, "non-unit", "unit"});

    // window monomials of E_mu
    const auto& alg = loc.localized;
    std::vector<Expo> mons;
    Expo cur(alg->arity(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == alg->arity()) {
            mons.push_back(cur);
            return;
        }
        long lo = alg->inv_mask()[i] ? -window : 0;
        for (long v = lo; v <= window; ++v) {
            cur[i] = v;
            rec(i + 1);
        }
        cur[i] = 0;
    };
    rec(0);

    const auto& src_mask = loc.source->inv_mask();
    for (const auto& ae : mons) {
        SkewElement a = SkewElement::monomial(alg, ae, Scalar::one(alg->field()));
        for (const auto& be : mons) {
            SkewElement b = SkewElement::monomial(alg, be, Scalar::one(alg->field()));
            // b = s^{-1} e with s a monomial in the inverted set and e from E
            Expo se(alg->arity(), 0), inv_se(alg->arity(), 0);
            for (std::size_t i = 0; i < se.size(); ++i) {
                se[i] = (!src_mask[i] && be[i] < 0) ? -be[i] : 0;
                inv_se[i] = -se[i];
            }
            SkewElement s = SkewElement::monomial(alg, se, Scalar::one(alg->field()));
            SkewElement s_inv = *is_unit(s);
            SkewElement e_part = s * b;
            SkewElement as_inv = a * s_inv;
            if (as_inv * s != a)
                rep.add_witness({"Ore rewriting (a s^-1) s = a fails", {a.str(), b.str()},
                                 (as_inv * s).str(), a.str()});
            if (s * (s_inv * e_part) != e_part)
                rep.add_witness({"Ore rewriting s (s^-1 e) = e fails", {a.str(), b.str()},
                                 (s * (s_inv * e_part)).str(), e_part.str()});
            if (as_inv * e_part != a * b)
                rep.add_witness({"Ore rewriting (a s^-1) e = a b fails", {a.str(), b.str()},
                                 (as_inv * e_part).str(), (a * b).str()});
        }
    }
    return rep;
}

FindimCompatibility check_compatibility(const CoactionData& rho, const FindimLocalization& loc) {
    FindimCompatibility out;
    out.report.check_name = "compatibility(" + rho.name + ", " + loc.source.name + ")";
    if (rho.source.dim != loc.source.dim) throw std::invalid_argument("localization is over a different algebra");
    const Field& f = rho.rho.field();
    const BialgebraData& b = rho.target;
    const std::size_t nb = b.dim();

    // the degenerate localization inverting 0 is excluded: every statement
    // about S^{-1}E would hold vacuously in the zero ring
    if (loc.localized.dim == 0) {
        out.report.add_witness({"zero localization excluded (0 ∈ S)", {}, "E_mu = 0", "a nonzero localization"},
                               CheckStatus::incompatible);
        return out;
    }

    StructureConstantAlgebra emub = tensor_algebra(loc.localized, b.algebra);
    LinearMap iota_b = tensor_map(loc.iota.matrix, LinearMap::identity(nb, f));

    // the effective criterion at the generator s = e of S = {1, e}
    Vec u = iota_b.apply(rho.rho.apply(loc.idempotent));
    LinearMap left_u = emub.left_mult(u);
    auto v = solve_linear(left_u, emub.unit);
    const auto elab = loc.source.basis.size() == loc.source.dim ? loc.source.basis : default_labels(loc.source.dim);
    if (!v) {
        out.report.add_witness({"(iota⊗id)rho(s) is not invertible in E_mu⊗B",
                                {"s = " + combo_str(loc.idempotent, elab)},
                                combo_str(u, emub.basis),
                                "a unit of " + emub.name},
                               CheckStatus::incompatible);
        return out;
    }
    if (emub.multiply(*v, u) != emub.unit) {
        out.report.add_witness({"left inverse of (iota⊗id)rho(s) is not a right inverse",
                                {"s = " + combo_str(loc.idempotent, elab)},
                                combo_str(emub.multiply(*v, u), emub.basis),
                                combo_str(emub.unit, emub.basis)},
                               CheckStatus::incompatible);
        return out;
    }

    // rho_S is forced by the square; verify it descends along iota
    LinearMap rho_s_raw = tensor_map(loc.iota.matrix, LinearMap::identity(nb, f)).compose(rho.rho);
    for (const auto& r : loc.kernel.basis()) {
        Vec img = rho_s_raw.apply(r);
        if (!is_zero_vec(img))
            out.report.add_witness({"localized coaction is not well defined on ker iota",
                                    {combo_str(r, elab)},
                                    combo_str(img, emub.basis),
                                    "0"},
                                   CheckStatus::incompatible);
    }
    if (!out.report.passed()) return out;

    CoactionData rho_s{rho.name + "_S", loc.localized, b, rho_s_raw.compose(loc.carrier.section)};

    // the compatibility square commutes exactly
    LinearMap square_lhs = rho_s.rho.compose(loc.iota.matrix);
    compare_columns(out.report, "localization square rho_S∘iota = (iota⊗id)∘rho", square_lhs, rho_s_raw, {elab},
                    kron_labels(loc.localized.basis, b.basis()));
    out.report.absorb(check_comodule_algebra(rho_s), "rho_S");
    if (out.report.passed()) out.localized_coaction = std::move(rho_s);
    return out;
}

CheckReport verify_unique_localized_coaction(const CoactionData& rho, const FindimLocalization& loc,
                                             const CoactionData& candidate) {
    CheckReport rep;
    rep.check_name = "uniqueness(" + rho.name + ")";
    FindimCompatibility compat = check_compatibility(rho, loc);
    if (!compat.compatible()) {
        rep.add_witness({"localization is not compatible; no coaction closes the square", {}, "", ""},
                        CheckStatus::error);
        return rep;
    }
    const auto elab = loc.source.basis;
    LinearMap cand_square = candidate.rho.compose(loc.iota.matrix);
    LinearMap forced = tensor_map(loc.iota.matrix, LinearMap::identity(rho.target.dim(), rho.rho.field()))
                           .compose(rho.rho);
    compare_columns(rep, "candidate closes the square", cand_square, forced, {elab},
                    kron_labels(loc.localized.basis, rho.target.basis()));
    compare_columns(rep, "candidate equals the canonical localized coaction", candidate.rho,
                    compat.localized_coaction->rho, {loc.localized.basis},
                    kron_labels(loc.localized.basis, rho.target.basis()));
    return rep;
}

SkewCompatibility check_compatibility(const SkewAlgebraHom& rho, const SkewTensor& eb,
                                      const SkewLocalization& loc, const SkewAlgebraPtr& b) {
    SkewCompatibility out;
    out.report.check_name = "compatibility(" + rho.name() + ", " + loc.source->name() + ")";
    const std::size_t ke = loc.source->arity(), kb = b->arity();
    out.localized_tensor = tensor_skew(loc.localized, b);

    std::vector<SkewElement> iota_images;
    for (std::size_t i = 0; i < ke + kb; ++i)
        iota_images.push_back(SkewElement::generator(out.localized_tensor.algebra, i));
    auto iota_tensor = extend_algebra_map("iota⊗id", eb.algebra, out.localized_tensor.algebra,
                                          std::move(iota_images));
    if (!iota_tensor.hom) {
        out.report.absorb(iota_tensor.report, "iota⊗id");
        return out;
    }

    std::vector<SkewElement> images;
    for (std::size_t i = 0; i < ke; ++i) images.push_back(iota_tensor.hom->apply(rho.images()[i]));

    std::set<std::size_t> inverted(loc.inverted.begin(), loc.inverted.end());
    for (auto s : inverted) {
        if (!is_unit(images[s]))
            out.report.add_witness({"(iota⊗id)rho(s) is not invertible in E_mu⊗B",
                                    {loc.source->gens()[s]},
                                    images[s].str(),
                                    "a unit of " + out.localized_tensor.algebra->name()},
                                   CheckStatus::incompatible);
    }
    if (!out.report.passed()) return out;

    auto rho_s = extend_algebra_map(rho.name() + "_S", loc.localized, out.localized_tensor.algebra,
                                    std::move(images));
    if (!rho_s.hom) {
        out.report.absorb(rho_s.report, "rho_S");
        return out;
    }

    // square on generators: rho_S(iota(g)) = (iota⊗id)(rho(g))
    SkewAlgebraHom via_iota = compose_skew_homs(*rho_s.hom, loc.iota);
    for (std::size_t i = 0; i < ke; ++i) {
        SkewElement lhs = via_iota.images()[i];
        SkewElement rhs = iota_tensor.hom->apply(rho.images()[i]);
        if (lhs != rhs)
            out.report.add_witness({"localization square rho_S∘iota = (iota⊗id)∘rho",
                                    {loc.source->gens()[i]}, lhs.str(), rhs.str()});
    }

    // comodule axioms when B carries tags
    bool tagged = true;
    for (auto t : b->tags()) tagged &= t != GenTag::none;
    if (tagged)
        out.report.absorb(check_skew_coaction(*rho_s.hom, out.localized_tensor, loc.localized, b), "rho_S");

    if (out.report.passed()) out.localized_coaction = std::move(*rho_s.hom);
    return out;
}

CoinvariantsComparison localized_coinvariants_compare(const CoactionData& rho, const FindimLocalization& loc,
                                                      const FindimCompatibility& compat) {
    if (!compat.compatible()) throw std::invalid_argument("localization is not compatible with the coaction");
    CoinvariantsComparison out{Subspace(loc.localized.dim, rho.rho.field()),
                               Subspace(loc.localized.dim, rho.rho.field())};
    Subspace co = coinvariants(rho.rho, rho.source.dim, rho.target);
    std::vector<Vec> mapped;
    for (const auto& v : co.basis()) mapped.push_back(loc.iota.apply(v));
    out.image = Subspace::span(loc.localized.dim, mapped, rho.rho.field());
    out.localized = coinvariants(compat.localized_coaction->rho, loc.localized.dim, rho.target);
    out.inclusion_holds = out.localized.contains(out.image);
    out.strict = out.inclusion_holds && out.image.dim() < out.localized.dim();
    return out;
}

namespace {

std::vector<Expo> window_monomials(const SkewAlgebraPtr& a, long window) {
    std::vector<Expo> mons;
    Expo cur(a->arity(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == a->arity()) {
            mons.push_back(cur);
            return;
        }
        long lo = a->inv_mask()[i] ? -window : 0;
        for (long v = lo; v <= window; ++v) {
            cur[i] = v;
            rec(i + 1);
        }
        cur[i] = 0;
    };
    rec(0);
    if (mons.size() > 100000) throw std::invalid_argument("window too large");
    return mons;
}

/// Coinvariants of a skew coaction within the span of window monomials,
/// returned as coefficient vectors over that monomial list.
std::vector<Vec> windowed_coinvariants(const SkewAlgebraPtr& e, const SkewTensor& t, const SkewAlgebraHom& rho,
                                       const std::vector<Expo>& mons) {
    const Field& f = e->field();
    std::vector<SkewElement> deltas;
    std::map<Expo, std::size_t> codomain;
    for (const auto& m : mons) {
        SkewElement elem = SkewElement::monomial(e, m, Scalar::one(f));
        SkewElement d = rho.apply(elem) - t.embed_left(elem);
        for (const auto& [ex, c] : d.terms()) codomain.emplace(ex, codomain.size());
        deltas.push_back(std::move(d));
    }
    LinearMap k(codomain.size(), mons.size(), f);
    for (std::size_t j = 0; j < deltas.size(); ++j)
        for (const auto& [ex, c] : deltas[j].terms()) k.at(codomain.at(ex), j) = c;
    return kernel_basis(k).basis();
}

} // namespace

SkewCoinvariantsComparison localized_coinvariants_compare(const SkewAlgebraHom& rho, const SkewTensor& eb,
                                                          const SkewLocalization& loc, const SkewAlgebraPtr& b,
                                                          const SkewAlgebraHom& rho_s, const SkewTensor& loc_tensor,
                                                          long window) {
    SkewCoinvariantsComparison out;
    const Field& f = loc.source->field();
    std::vector<Expo> src_mons = window_monomials(loc.source, window);
    std::vector<Expo> loc_mons = window_monomials(loc.localized, window);
    std::map<Expo, std::size_t> loc_index;
    for (std::size_t i = 0; i < loc_mons.size(); ++i) loc_index.emplace(loc_mons[i], i);

    std::vector<Vec> src_co = windowed_coinvariants(loc.source, eb, rho, src_mons);
    std::vector<Vec> loc_co = windowed_coinvariants(loc.localized, loc_tensor, rho_s, loc_mons);

    // express iota(coinvariants) in the localized window coordinates
    std::vector<Vec> image;
    for (const auto& v : src_co) {
        Vec w = zero_vec(loc_mons.size(), f);
        for (std::size_t j = 0; j < src_mons.size(); ++j) w[loc_index.at(src_mons[j])] = v[j];
        image.push_back(std::move(w));
    }
    Subspace img = Subspace::span(loc_mons.size(), image, f);
    Subspace lc = Subspace::span(loc_mons.size(), loc_co, f);
    out.image_dim = img.dim();
    out.localized_dim = lc.dim();
    out.inclusion_holds = lc.contains(img);
    out.strict = out.inclusion_holds && img.dim() < lc.dim();

    std::vector<std::string> labels;
    for (const auto& m : loc_mons)
        labels.push_back(SkewElement::monomial(loc.localized, m, Scalar::one(f)).str());
    for (const auto& v : lc.basis()) out.localized_basis.push_back(combo_str(v, labels));
    return out;
}

namespace {

std::vector<mpz_class> divisors_capped(const mpz_class& n0, std::size_t cap) {
    mpz_class n = abs(n0);
    std::vector<mpz_class> out;
    if (n == 0) return out;
    for (mpz_class d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            out.push_back(n / d);
        }
        if (out.size() > cap) return {};
    }
    return out;
}

} // namespace

IdempotentEnumeration enumerate_central_idempotents(const StructureConstantAlgebra& a) {
    const Field& f = a.field();
    if (!f.is_rational())
        throw std::invalid_argument("idempotent enumeration is implemented over the rationals");
    IdempotentEnumeration out;

    // center of A
    std::vector<Vec> stacked;
    for (std::size_t i = 0; i < a.dim; ++i) {
        LinearMap d = a.left_mult(a.basis_vec(i)) - a.right_mult(a.basis_vec(i));
        for (std::size_t r = 0; r < d.rows(); ++r) {
            Vec row(a.dim, Scalar::zero(f));
            for (std::size_t c = 0; c < a.dim; ++c) row[c] = d.at(r, c);
            stacked.push_back(std::move(row));
        }
    }
    LinearMap big = LinearMap::from_rows(stacked, a.dim, f);
    Subspace center = kernel_basis(big);

    std::vector<Vec> components{a.unit};
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& z : center.basis()) {
            std::vector<Vec> next;
            for (const auto& u : components) {
                Vec c = a.multiply(u, z);
                // minimal polynomial of c over u·Z: powers u, c, c^2, ...
                std::vector<Vec> powers{u};
                Vec p = c;
                std::vector<Scalar> minpoly; // p(t) = t^k - sum gamma_j t^j
                while (true) {
                    LinearMap span = LinearMap::from_columns(powers, a.dim, f);
                    auto gamma = solve_linear(span, p);
                    if (gamma) {
                        minpoly = *gamma;
                        break;
                    }
                    powers.push_back(p);
                    p = a.multiply(p, c);
                    if (powers.size() > a.dim) throw std::logic_error("minimal polynomial search overran");
                }
                const std::size_t deg = minpoly.size();
                if (deg <= 1) {
                    next.push_back(u);
                    continue;
                }
                // rational roots of t^deg - sum gamma_j t^j
                mpz_class lcm_den(1);
                for (const auto& g : minpoly) lcm_den = lcm(lcm_den, g.rational().get_den());
                std::vector<mpz_class> coeffs; // integer coefficients, degree ascending
                for (const auto& g : minpoly) {
                    mpq_class scaled = -g.rational() * mpq_class(lcm_den);
                    coeffs.push_back(scaled.get_num());
                }
                coeffs.push_back(lcm_den);
                std::vector<Scalar> roots;
                // deflate a power of t; a repeated zero root keeps the count
                // short of deg, which correctly blocks the split
                std::size_t shift = 0;
                while (shift + 1 < coeffs.size() && coeffs[shift] == 0) ++shift;
                if (shift > 0) roots.push_back(Scalar(0));
                auto rs = divisors_capped(coeffs[shift], 4096);
                auto ss = divisors_capped(coeffs.back(), 4096);
                for (const auto& r : rs)
                    for (const auto& s : ss)
                        for (int sign = -1; sign <= 1; sign += 2) {
                            mpq_class cand(mpz_class(sign) * r, s);
                            cand.canonicalize();
                            Scalar lambda = Scalar::parse(cand.get_str(), f);
                            // evaluate the monic minimal polynomial at lambda
                            Scalar val = lambda.pow(static_cast<long>(deg));
                            for (std::size_t j = 0; j < deg; ++j) val = val - minpoly[j] * lambda.pow(static_cast<long>(j));
                            if (val.is_zero() &&
                                std::find(roots.begin(), roots.end(), lambda) == roots.end())
                                roots.push_back(lambda);
                        }
                if (roots.size() != deg) {
                    next.push_back(u); // not split by this element
                    continue;
                }
                // Lagrange idempotents of c inside uZ
                for (const auto& lambda : roots) {
                    Vec idem = u;
                    for (const auto& mu : roots) {
                        if (mu == lambda) continue;
                        Vec cm = sub_vec(c, scale_vec(mu, u));
                        idem = scale_vec((lambda - mu).inverse(), a.multiply(idem, cm));
                    }
                    next.push_back(idem);
                }
                changed = true;
            }
            components = std::move(next);
        }
    }

    // completeness: all components are one-dimensional slices of the center
    out.complete = true;
    for (const auto& u : components) {
        std::vector<Vec> uz;
        for (const auto& z : center.basis()) uz.push_back(a.multiply(u, z));
        if (Subspace::span(a.dim, uz, f).dim() > 1) out.complete = false;
    }

    if (components.size() > 20) throw std::invalid_argument("too many components to enumerate");
    const std::size_t r = components.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << r); ++mask) {
        Vec e = zero_vec(a.dim, f);
        for (std::size_t i = 0; i < r; ++i)
            if (mask & (std::size_t{1} << i)) e = add_vec(e, components[i]);
        if (a.multiply(e, e) == e) out.idempotents.push_back(std::move(e));
    }
    return out;
}

} // namespace coact
