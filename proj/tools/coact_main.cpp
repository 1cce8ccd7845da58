#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "coact/entwining.hpp"
#include "coact/fixtures.hpp"
#include "coact/hopfcat.hpp"
#include "coact/localization.hpp"
#include "coact/parser.hpp"

using namespace coact;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in.good()) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

/// Tensor element of a two-block skew algebra rendered as a (x) b.
std::string tensor_str(const SkewElement& el, std::size_t left_arity) {
    if (el.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [expo, c] : el.terms()) {
        if (!first) os << " + ";
        first = false;
        if (!c.is_one()) os << c.str() << " ";
        auto part = [&](std::size_t from, std::size_t to) {
            std::ostringstream p;
            bool any = false;
            for (std::size_t i = from; i < to; ++i) {
                if (expo[i] == 0) continue;
                if (any) p << " ";
                p << el.parent()->gens()[i];
                if (expo[i] != 1) p << "^" << expo[i];
                any = true;
            }
            return any ? p.str() : std::string("1");
        };
        os << part(0, left_arity) << " (x) " << part(left_arity, expo.size());
    }
    return os.str();
}

struct Runner {
    std::vector<CheckReport> reports;
    std::ostream* out = &std::cout;

    template <class F>
    CheckReport& run(F&& f) {
        auto t0 = std::chrono::steady_clock::now();
        CheckReport rep = f();
        auto t1 = std::chrono::steady_clock::now();
        rep.timing_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        reports.push_back(std::move(rep));
        print_last();
        return reports.back();
    }

    void print_last() const {
        std::ostream& os = *out;
        const CheckReport& r = reports.back();
        os << "[" << status_name(r.status) << "] " << r.check_name << "  ("
                  << static_cast<long>(r.timing_ms * 1000) / 1000.0 << " ms)\n";
        for (const auto& w : r.witnesses) {
            os << "    " << w.object;
            if (!w.indices.empty()) {
                os << " at (";
                for (std::size_t i = 0; i < w.indices.size(); ++i) os << (i ? ", " : "") << w.indices[i];
                os << ")";
            }
            if (!w.lhs.empty() || !w.rhs.empty()) os << ": " << w.lhs << "  !=  " << w.rhs;
            os << "\n";
        }
    }

    int exit_code() const {
        for (const auto& r : reports)
            if (!r.passed()) return 1;
        return 0;
    }

    void write_json(const std::string& path) const {
        if (path.empty()) return;
        std::string body = emit_json(reports);
        if (path == "-") {
            std::cout << body;
        } else {
            std::ofstream out(path);
            out << body;
        }
    }
};

FunctorProbe probe_for(const Environment& env, const std::string& probe_name,
                       const StructureConstantAlgebra& alg) {
    if (!probe_name.empty()) {
        auto it = env.probes.find(probe_name);
        if (it == env.probes.end()) throw std::runtime_error("unknown probe '" + probe_name + "'");
        if (!(env.algebras.count(it->second.algebra) &&
              env.algebras.at(it->second.algebra).mult == alg.mult))
            throw std::runtime_error("probe '" + probe_name + "' is over a different algebra");
        return it->second.probe;
    }
    return default_probe(alg);
}

/// Localization requests resolved into concrete localizations.
struct ResolvedLoc {
    bool skew = false;
    std::optional<FindimLocalization> findim;
    std::optional<SkewLocalization> skew_loc;
    CheckReport build_report;
};

ResolvedLoc resolve_loc(const Environment& env, const std::string& name) {
    auto it = env.localizations.find(name);
    if (it == env.localizations.end()) throw std::runtime_error("unknown localization '" + name + "'");
    const auto& req = it->second;
    ResolvedLoc out;
    if (req.skew) {
        out.skew = true;
        out.skew_loc = localize_at_generators(env.skews.at(req.target), req.gens);
        out.build_report.check_name = "localize(" + name + ")";
        return out;
    }
    const StructureConstantAlgebra& e =
        env.algebras.count(req.target) ? env.algebras.at(req.target) : env.bialgebras.at(req.target).algebra;
    FindimLocalizationResult res = localize_central_idempotent(e, req.idempotent);
    out.build_report = res.report;
    if (res.loc) out.findim = std::move(*res.loc);
    return out;
}

void run_named_check(Runner& r, const Environment& env, const std::string& what, const std::string& probe_name,
                     long window) {
    bool matched = false;
    auto want = [&](const char* name) {
        bool hit = what == name || what == "all";
        matched |= hit;
        return hit;
    };

    if (want("algebra")) {
        for (const auto& [n, a] : env.algebras) r.run([&] { return check_algebra(a); });
        for (const auto& [n, b] : env.bialgebras) r.run([&] { return check_algebra(b.algebra); });
    }
    if (want("coalgebra")) {
        for (const auto& [n, c] : env.coalgebras) r.run([&] { return check_coalgebra(c); });
        for (const auto& [n, b] : env.bialgebras) r.run([&] { return check_coalgebra(b.coalgebra); });
    }
    if (want("bialgebra"))
        for (const auto& [n, b] : env.bialgebras) r.run([&] { return check_bialgebra(b); });
    if (want("comodule-algebra")) {
        for (const auto& [n, c] : env.coactions) r.run([&] { return check_comodule_algebra(c); });
        for (const auto& [n, sc] : env.skew_coactions)
            r.run([&] {
                auto hom = extend_algebra_map(n, sc.e, sc.eb.algebra, sc.images);
                if (!hom.hom) return hom.report;
                return check_skew_coaction(*hom.hom, sc.eb, sc.e, sc.b);
            });
    }
    if (want("module"))
        for (const auto& [n, m] : env.modules) r.run([&] { return check_module(m); });
    if (want("hopf-module"))
        for (const auto& [n, hm] : env.hopf_modules)
            r.run([&] { return check_hopf_module(hm.data, env.coactions.at(hm.coaction)); });
    if (want("hopf-action"))
        for (const auto& [n, a] : env.actions) r.run([&] { return check_hopf_action(a); });
    if (want("entwining"))
        for (const auto& [n, e] : env.entwinings) r.run([&] { return check_entwining(e); });
    if (want("entwined-module"))
        for (const auto& [n, em] : env.entwined_modules)
            r.run([&] { return check_entwined_module(env.entwinings.at(em.entwining), em.data); });
    if (want("probe"))
        for (const auto& [n, p] : env.probes) r.run([&] { return check_probe(p.probe); });
    if (want("ore"))
        for (const auto& [n, req] : env.localizations) {
            if (!req.skew) continue;
            r.run([&] {
                OreReport ore = check_ore_generated(env.skews.at(req.target), req.gens);
                return ore.report;
            });
        }
    if (want("idempotent-monad"))
        for (const auto& [n, req] : env.localizations)
            r.run([&]() -> CheckReport {
                ResolvedLoc loc = resolve_loc(env, n);
                CheckReport rep;
                if (loc.skew) {
                    rep = check_idempotent_monad_windowed(*loc.skew_loc, std::min(window, 2L));
                } else if (!loc.findim) {
                    rep = loc.build_report;
                } else {
                    const StructureConstantAlgebra& e = loc.findim->source;
                    rep = check_idempotent_monad(*loc.findim, probe_for(env, probe_name, e));
                }
                rep.check_name += " [" + n + "]";
                return rep;
            });
    if (want("comonad"))
        for (const auto& [n, c] : env.coactions)
            r.run([&] { return verify_hopf_comonad(c, probe_for(env, probe_name, c.source)); });
    if (want("monad"))
        for (const auto& [n, a] : env.actions)
            r.run([&] { return verify_hopf_monad(a, probe_for(env, probe_name, a.a)); });
    if (want("mixed-law"))
        for (const auto& [cn, c] : env.coactions)
            for (const auto& [ln, req] : env.localizations) {
                if (req.skew || req.target != c.source.name) continue;
                r.run([&]() -> CheckReport {
                    ResolvedLoc loc = resolve_loc(env, ln);
                    if (!loc.findim) return loc.build_report;
                    FindimCompatibility compat = check_compatibility(c, *loc.findim);
                    if (!compat.compatible()) return compat.report;
                    FunctorProbe probe = probe_for(env, probe_name, c.source);
                    MixedLawFamily l = hopf_mixed_law(*loc.findim, c, *compat.localized_coaction, probe);
                    CheckReport rep = check_mixed_distributive_law(l.family, extension_monad(*loc.findim),
                                                                   build_hopf_comonad(c), probe);
                    rep.check_name = "mixed-law(" + cn + ", " + ln + ")";
                    rep.absorb(l.report, "descent");
                    return rep;
                });
            }
    if (!matched) throw CLI::ValidationError("check", "unknown check '" + what + "'");
}

int cmd_compat(Runner& r, const Environment& env, const std::string& coaction, const std::string& loc_name,
               long window) {
    std::ostream& os = *r.out;
    ResolvedLoc loc = resolve_loc(env, loc_name);
    if (env.coactions.count(coaction)) {
        const CoactionData& rho = env.coactions.at(coaction);
        if (!loc.findim) {
            r.run([&] { return loc.build_report; });
            return 1;
        }
        FindimCompatibility compat = check_compatibility(rho, *loc.findim);
        r.run([&] { return compat.report; });
        if (compat.compatible()) {
            CoinvariantsComparison cmp = localized_coinvariants_compare(rho, *loc.findim, compat);
            os << "coinvariants: image dim " << cmp.image.dim() << ", localized dim "
                      << cmp.localized.dim() << ", strict containment: " << (cmp.strict ? "yes" : "no") << "\n";
        }
        return r.exit_code();
    }
    if (env.skew_coactions.count(coaction)) {
        const auto& sc = env.skew_coactions.at(coaction);
        if (!loc.skew) throw std::runtime_error("localization '" + loc_name + "' is not over the skew backend");
        auto hom = extend_algebra_map(coaction, sc.e, sc.eb.algebra, sc.images);
        if (!hom.hom) {
            r.run([&] { return hom.report; });
            return 1;
        }
        SkewCompatibility compat = check_compatibility(*hom.hom, sc.eb, *loc.skew_loc, sc.b);
        r.run([&] { return compat.report; });
        if (compat.compatible()) {
            const auto& rho_s = *compat.localized_coaction;
            for (std::size_t i = 0; i < rho_s.source()->arity(); ++i)
                os << "rho_S(" << rho_s.source()->gens()[i]
                          << ") = " << tensor_str(rho_s.images()[i], loc.skew_loc->localized->arity()) << "\n";
            for (auto gi : loc.skew_loc->inverted) {
                Expo e(loc.skew_loc->localized->arity(), 0);
                e[gi] = -1;
                SkewElement ginv =
                    SkewElement::monomial(loc.skew_loc->localized, e, Scalar::one(sc.e->field()));
                os << "rho_S(" << loc.skew_loc->localized->gens()[gi]
                          << "^-1) = " << tensor_str(rho_s.apply(ginv), loc.skew_loc->localized->arity())
                          << "\n";
            }
            SkewCoinvariantsComparison cmp = localized_coinvariants_compare(
                *hom.hom, sc.eb, *loc.skew_loc, sc.b, rho_s, compat.localized_tensor, window);
            os << "coinvariants (window " << window << "): image dim " << cmp.image_dim
                      << ", localized dim " << cmp.localized_dim
                      << ", strict containment: " << (cmp.strict ? "yes" : "no") << "\n";
            for (const auto& b : cmp.localized_basis) os << "  localized coinvariant: " << b << "\n";
        }
        return r.exit_code();
    }
    throw std::runtime_error("unknown coaction '" + coaction + "'");
}

int cmd_demo(Runner& r, const std::string& which, long window) {
    std::ostream& os = *r.out;
    const Field q = Field::rationals();
    if (which == "qplane-compat") {
        auto fx = fixtures::qplane_grading();
        SkewLocalization loc = localize_at_generators(fx.e, {"x"});
        SkewCompatibility compat = check_compatibility(fx.rho, fx.eb, loc, fx.b);
        r.run([&] { return compat.report; });
        if (compat.compatible()) {
            SkewElement xinv = SkewElement::monomial(loc.localized, {-1, 0}, Scalar::one(q));
            os << "rho_S(x^-1) = " << tensor_str(compat.localized_coaction->apply(xinv), 2) << "\n";
            SkewCoinvariantsComparison cmp = localized_coinvariants_compare(
                fx.rho, fx.eb, loc, fx.b, *compat.localized_coaction, compat.localized_tensor, window);
            os << "coinvariants (window " << window << "): image dim " << cmp.image_dim
                      << ", localized dim " << cmp.localized_dim << ", strict: " << (cmp.strict ? "yes" : "no")
                      << "\n";
        }
        return r.exit_code();
    }
    if (which == "kx-incompat") {
        auto fx = fixtures::kx_primitive();
        SkewLocalization loc = localize_at_generators(fx.e, {"x"});
        r.run([&] { return check_compatibility(fx.rho, fx.eb, loc, fx.b).report; });
        return r.exit_code();
    }
    if (which == "kc2-idempotents" || which == "c2c2-idempotents") {
        BialgebraData b = which == "kc2-idempotents" ? fixtures::kc2() : fixtures::c2c2();
        CoactionData rho{"delta", b.algebra, b, b.coalgebra.comult};
        r.run([&]() -> CheckReport {
            CheckReport out;
            out.check_name = "triviality(" + b.name() + ")";
            IdempotentEnumeration idems = enumerate_central_idempotents(b.algebra);
            std::size_t compatible = 0;
            for (const auto& e : idems.idempotents) {
                auto loc = localize_central_idempotent(b.algebra, e);
                bool ok = loc.loc && check_compatibility(rho, *loc.loc).compatible();
                os << "  e = " << combo_str(e, b.basis()) << "  -> "
                          << (ok ? "compatible" : "incompatible") << "\n";
                if (ok) {
                    ++compatible;
                    if (e != b.algebra.unit)
                        out.add_witness({"nontrivial compatible idempotent", {}, combo_str(e, b.basis()), "1"});
                }
            }
            os << "  " << idems.idempotents.size() << " idempotents, " << compatible << " compatible\n";
            if (compatible != 1) out.add_witness({"expected exactly the trivial localization", {},
                                                  std::to_string(compatible), "1"});
            return out;
        });
        return r.exit_code();
    }
    if (which == "swap-action") {
        auto fx = fixtures::swap_action();
        HopfActionData act{"swap", fx.h, fx.a, fx.act};
        auto loc = localize_central_idempotent(fx.a, unit_vec(2, 0, q));
        r.run([&] { return check_action_compat(act, *loc.loc).report; });
        return r.exit_code();
    }
    if (which == "prod-localization") {
        CoactionData rho = fixtures::prod();
        auto loc = localize_central_idempotent(rho.source, unit_vec(4, 0, q));
        r.run([&] { return check_idempotent_monad(*loc.loc, default_probe(rho.source)); });
        FindimCompatibility compat = check_compatibility(rho, *loc.loc);
        r.run([&] { return compat.report; });
        if (compat.compatible()) {
            r.run([&] {
                return compare_localized_comonad(*loc.loc, rho, compat, default_probe(rho.source));
            });
        }
        return r.exit_code();
    }
    if (which == "prod-pasting") {
        CoactionData rho8 = fixtures::prod_k2();
        Vec e1 = kron_vec(kron_vec(unit_vec(2, 0, q), fixtures::two_point().unit), unit_vec(2, 0, q));
        auto loc1 = localize_central_idempotent(rho8.source, e1);
        FindimCompatibility c1 = check_compatibility(rho8, *loc1.loc);
        CoactionData rho4 = *c1.localized_coaction;
        Vec e2 = loc1.loc->iota.apply(
            kron_vec(kron_vec(unit_vec(2, 0, q), unit_vec(2, 0, q)), fixtures::two_point().unit));
        auto loc2 = localize_central_idempotent(rho4.source, e2);
        FindimCompatibility c2 = check_compatibility(rho4, *loc2.loc);
        BialgebraHom idb = identity_bialgebra_hom(rho8.target);
        std::vector<ModuleData> ms{regular_module(rho8.source)};
        std::vector<ModuleData> qs{regular_module(rho8.target.algebra)};
        r.run([&] {
            return check_pasting(loc1.loc->iota, idb, loc2.loc->iota, idb, rho8, rho4, *c2.localized_coaction,
                                 ms, qs);
        });
        return r.exit_code();
    }
    throw CLI::ValidationError("demo", "unknown fixture '" + which + "'");
}

Environment load(const std::string& path, const std::string& field_override) {
    std::string text = slurp(path);
    if (!field_override.empty()) text = "field " + field_override + "\n" + text;
    return elaborate(parse(text));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verifier for coactions, localizations, and their compatibility"};
    app.require_subcommand(1);

    std::string file, check_name, probe_name, json_path, field_override, at_name, coaction_name, loc_name,
        demo_name;
    long window = 3;

    auto* parse_cmd = app.add_subcommand("parse", "parse a presentation and report its declarations");
    parse_cmd->add_option("file", file)->required();

    auto* check_cmd = app.add_subcommand("check", "run a named check on every applicable declaration");
    check_cmd->add_option("check", check_name)->required();
    check_cmd->add_option("file", file)->required();
    check_cmd->add_option("--probe", probe_name);
    check_cmd->add_option("--window", window);
    check_cmd->add_option("--field", field_override);
    check_cmd->add_option("--json", json_path);

    auto* loc_cmd = app.add_subcommand("localize", "build a declared localization and verify it");
    loc_cmd->add_option("file", file)->required();
    loc_cmd->add_option("--at", at_name)->required();
    loc_cmd->add_option("--window", window);
    loc_cmd->add_option("--json", json_path);

    auto* compat_cmd = app.add_subcommand("compat", "decide rho-compatibility of a localization");
    compat_cmd->add_option("file", file)->required();
    compat_cmd->add_option("--coaction", coaction_name)->required();
    compat_cmd->add_option("--loc", loc_name)->required();
    compat_cmd->add_option("--window", window);
    compat_cmd->add_option("--json", json_path);

    auto* demo_cmd = app.add_subcommand("demo", "run a built-in fixture end to end");
    demo_cmd->add_option("fixture", demo_name)->required();
    demo_cmd->add_option("--window", window);
    demo_cmd->add_option("--json", json_path);

    auto* report_cmd = app.add_subcommand("report", "run all checks on a file and emit JSON");
    report_cmd->add_option("file", file)->required();
    report_cmd->add_option("--probe", probe_name);
    report_cmd->add_option("--window", window);
    report_cmd->add_option("--field", field_override);
    report_cmd->add_option("--json", json_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    Runner runner;
    if (json_path == "-") runner.out = &std::cerr;
    std::ostream& os = *runner.out;
    try {
        if (parse_cmd->parsed()) {
            Environment env = load(file, field_override);
            for (const auto& [kind, name] : env.order) os << kind << " " << name << "\n";
            os << "ok: " << env.order.size() << " declaration" << (env.order.size() == 1 ? "" : "s")
                      << " over " << env.field.name() << "\n";
            return 0;
        }
        if (check_cmd->parsed()) {
            Environment env = load(file, field_override);
            run_named_check(runner, env, check_name, probe_name, window);
            runner.write_json(json_path);
            return runner.exit_code();
        }
        if (loc_cmd->parsed()) {
            Environment env = load(file, field_override);
            ResolvedLoc loc = resolve_loc(env, at_name);
            if (loc.skew) {
                const auto& req = env.localizations.at(at_name);
                OreReport ore = check_ore_generated(env.skews.at(req.target), req.gens);
                runner.run([&] { return ore.report; });
                for (const auto& w : ore.witnesses)
                    os << "    ore witness: s' = " << w.s_prime.str() << ", e' = " << w.e_prime.str()
                       << " with s = " << w.s << ", e = " << w.e << "\n";
                if (!ore.note.empty()) os << "    note: " << ore.note << "\n";
                // the pairwise rewriting certificate is quartic in the window
                runner.run([&] { return check_idempotent_monad_windowed(*loc.skew_loc, std::min(window, 2L)); });
                os << "localized: " << loc.skew_loc->localized->name() << "\n";
            } else {
                runner.run([&] { return loc.build_report; });
                if (loc.findim) {
                    os << "localized: dim " << loc.findim->localized.dim << " with iota surjective\n";
                    runner.run([&] {
                        return check_idempotent_monad(*loc.findim,
                                                      probe_for(env, probe_name, loc.findim->source));
                    });
                }
            }
            runner.write_json(json_path);
            return runner.exit_code();
        }
        if (compat_cmd->parsed()) {
            Environment env = load(file, field_override);
            int code = cmd_compat(runner, env, coaction_name, loc_name, window);
            runner.write_json(json_path);
            return code;
        }
        if (demo_cmd->parsed()) {
            int code = cmd_demo(runner, demo_name, window);
            runner.write_json(json_path);
            return code;
        }
        if (report_cmd->parsed()) {
            Environment env = load(file, field_override);
            run_named_check(runner, env, "all", probe_name, window);
            runner.write_json(json_path);
            return runner.exit_code();
        }
    } catch (const parse_error& e) {
        std::cerr << file << ": " << e.what() << "\n";
        return 3;
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
