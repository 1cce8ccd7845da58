#include <sstream>

#include "coact/parser.hpp"

namespace coact {

namespace {

std::string mono_str(const MonomialExpr& m) {
    if (m.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [g, e] : m) {
        if (!first) os << " ";
        os << g;
        if (e != 1) os << "^" << e;
        first = false;
    }
    return os.str();
}

std::string coef_prefix(const Scalar& c) {
    if (c.is_one()) return "";
    if (c == -Scalar(1)) return "-";
    return c.str() + " ";
}

std::string lincomb_str(const LinComb& comb, const std::vector<std::string>& basis_order) {
    if (comb.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& b : basis_order) {
        auto it = comb.find(b);
        if (it == comb.end()) continue;
        if (!first) os << " + ";
        os << coef_prefix(it->second) << b;
        first = false;
    }
    return os.str();
}

std::string tensor_comb_str(const TensorComb& comb) {
    if (comb.empty()) return "0 (x) 0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [pair, c] : comb) {
        if (!first) os << " + ";
        os << coef_prefix(c) << pair.first << " (x) " << pair.second;
        first = false;
    }
    return os.str();
}

std::string mono_tensor_comb_str(const MonoTensorComb& comb) {
    if (comb.empty()) return "0 1 (x) 1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [pair, c] : comb) {
        if (!first) os << " + ";
        os << coef_prefix(c) << mono_str(pair.first) << " (x) " << mono_str(pair.second);
        first = false;
    }
    return os.str();
}

std::string matrix_str(const std::vector<std::vector<Scalar>>& m) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < m.size(); ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < m[i].size(); ++j) os << (j ? "," : "") << m[i][j].str();
        os << "]";
    }
    os << "]";
    return os.str();
}

struct DeclPrinter {
    std::ostringstream& os;
    const std::string& name;

    void join(const std::vector<std::string>& stmts) {
        os << " { ";
        for (std::size_t i = 0; i < stmts.size(); ++i) os << (i ? "; " : "") << stmts[i];
        os << " }";
    }

    std::vector<std::string> algebra_stmts(const AlgebraDecl& a) {
        std::vector<std::string> out;
        std::ostringstream b;
        b << "basis";
        for (const auto& x : a.basis) b << " " << x;
        out.push_back(b.str());
        for (const auto& [pair, comb] : a.mult)
            out.push_back("mult " + pair.first + "*" + pair.second + " = " + lincomb_str(comb, a.basis));
        out.push_back("unit = " + lincomb_str(a.unit, a.basis));
        return out;
    }

    std::vector<std::string> coalgebra_stmts(const CoalgebraDecl& c, bool with_basis) {
        std::vector<std::string> out;
        if (with_basis) {
            std::ostringstream b;
            b << "basis";
            for (const auto& x : c.basis) b << " " << x;
            out.push_back(b.str());
        }
        for (const auto& [src, comb] : c.comult) out.push_back("comult " + src + " = " + tensor_comb_str(comb));
        for (const auto& [src, s] : c.counit) out.push_back("counit " + src + " = " + s.str());
        return out;
    }

    void operator()(const AlgebraDecl& a) {
        os << "algebra " << name;
        join(algebra_stmts(a));
    }
    void operator()(const CoalgebraDecl& c) {
        os << "coalgebra " << name;
        join(coalgebra_stmts(c, true));
    }
    void operator()(const BialgebraDecl& b) {
        os << "bialgebra " << name;
        std::vector<std::string> stmts = algebra_stmts(b.alg);
        for (auto& s : coalgebra_stmts(b.co, false)) stmts.push_back(std::move(s));
        join(stmts);
    }
    void operator()(const SkewDecl& s) {
        os << "skew " << name;
        std::vector<std::string> stmts;
        std::ostringstream g;
        g << "gens";
        for (const auto& x : s.gens) g << " " << x;
        stmts.push_back(g.str());
        auto list_stmt = [&](const char* kw, const std::vector<std::string>& xs) {
            if (xs.empty()) return;
            std::ostringstream o;
            o << kw;
            for (const auto& x : xs) o << " " << x;
            stmts.push_back(o.str());
        };
        list_stmt("inv", s.inv);
        list_stmt("grouplike", s.grouplike);
        list_stmt("primitive", s.primitive);
        for (const auto& [pair, q] : s.q)
            stmts.push_back("q " + pair.first + " " + pair.second + " = " + q.str());
        join(stmts);
    }
    void operator()(const CoactionDecl& c) {
        os << "coaction " << name << " : " << c.source << " -> " << c.source << " (x) " << c.target;
        std::vector<std::string> stmts;
        for (const auto& [src, comb] : c.rho) stmts.push_back("rho " + src + " = " + mono_tensor_comb_str(comb));
        join(stmts);
    }
    void operator()(const ActionDecl& a) {
        os << "action " << name << " : " << a.h << " on " << a.a;
        std::vector<std::string> stmts;
        // need the target basis order for printing; fall back to map order
        for (const auto& [pair, comb] : a.act) {
            std::vector<std::string> order;
            for (const auto& [n, s] : comb) order.push_back(n);
            stmts.push_back("act " + pair.first + " " + pair.second + " = " + lincomb_str(comb, order));
        }
        join(stmts);
    }
    void module_like(const char* kw, const std::string& over, const std::vector<std::string>& basis,
                     const std::map<std::pair<std::string, std::string>, LinComb>& act,
                     const std::map<std::string, TensorComb>* coact) {
        os << kw << " " << name << " over " << over;
        std::vector<std::string> stmts;
        std::ostringstream b;
        b << "basis";
        for (const auto& x : basis) b << " " << x;
        stmts.push_back(b.str());
        for (const auto& [pair, comb] : act)
            stmts.push_back("act " + pair.first + " " + pair.second + " = " + lincomb_str(comb, basis));
        if (coact)
            for (const auto& [src, comb] : *coact) stmts.push_back("coact " + src + " = " + tensor_comb_str(comb));
        join(stmts);
    }
    void operator()(const ModuleDecl& m) { module_like("module", m.over, m.basis, m.act, nullptr); }
    void operator()(const HopfModuleDecl& m) { module_like("hopfmodule", m.over, m.basis, m.act, &m.coact); }
    void operator()(const EntwinedModuleDecl& m) { module_like("entwined", m.over, m.basis, m.act, &m.coact); }
    void operator()(const LocalizeDecl& l) {
        os << "localize " << name << " of " << l.target << " at { ";
        if (l.skew_form) {
            for (std::size_t i = 0; i < l.gens.size(); ++i) os << (i ? " " : "") << l.gens[i];
        } else {
            for (std::size_t i = 0; i < l.expr.size(); ++i) {
                if (i) os << " + ";
                const auto& [c, mono] = l.expr[i];
                if (mono.empty())
                    os << c.str();
                else
                    os << coef_prefix(c) << mono_str(mono);
            }
        }
        os << " }";
    }
    void operator()(const EntwiningDecl& e) {
        os << "entwining " << name << " : " << e.alg << " (x) " << e.coalg << " -> " << e.coalg << " (x) "
           << e.alg;
        std::vector<std::string> stmts;
        for (const auto& [pair, comb] : e.psi)
            stmts.push_back("psi " + pair.first + " " + pair.second + " = " + tensor_comb_str(comb));
        join(stmts);
    }
    void operator()(const ProbeDecl& p) {
        os << "probe " << name;
        std::vector<std::string> stmts;
        std::ostringstream m;
        m << "modules";
        for (const auto& x : p.modules) m << " " << x;
        stmts.push_back(m.str());
        for (const auto& md : p.maps)
            stmts.push_back("maps " + md.name + " : " + md.src + " -> " + md.dst + " = " + matrix_str(md.matrix));
        join(stmts);
    }
};

} // namespace

std::string print(const PresentationBundle& bundle) {
    std::ostringstream os;
    if (!bundle.field.is_rational() || !bundle.decls.empty()) os << "field " << bundle.field.name() << "\n";
    for (const auto& d : bundle.decls) {
        DeclPrinter p{os, d.name};
        std::visit(p, d.body);
        os << "\n";
    }
    return os.str();
}

} // namespace coact
