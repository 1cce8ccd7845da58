#include "coact/report.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace coact {

std::string status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::incompatible: return "incompatible";
        case CheckStatus::error: return "error";
    }
    return "?";
}

void CheckReport::add_witness(Witness w, CheckStatus worst) {
    witnesses.push_back(std::move(w));
    if (status == CheckStatus::pass) status = worst;
}

void CheckReport::absorb(const CheckReport& sub, const std::string& prefix) {
    for (Witness w : sub.witnesses) {
        w.object = prefix.empty() ? w.object : prefix + ": " + w.object;
        add_witness(std::move(w), sub.status == CheckStatus::pass ? CheckStatus::fail : sub.status);
    }
}

std::string CheckReport::summary() const {
    std::ostringstream os;
    os << check_name << ": " << status_name(status);
    if (!witnesses.empty()) os << " (" << witnesses.size() << " witness" << (witnesses.size() == 1 ? "" : "es") << ")";
    return os.str();
}

std::string combo_str(const Vec& v, const std::vector<std::string>& labels) {
    if (labels.size() != v.size()) throw std::invalid_argument("label count mismatch");
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        if (!first) os << " + ";
        if (!v[i].is_one()) os << v[i].str() << " ";
        os << labels[i];
        first = false;
    }
    return first ? "0" : os.str();
}

std::vector<std::string> default_labels(std::size_t n, const std::string& stem) {
    std::vector<std::string> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(stem + std::to_string(i));
    return out;
}

std::vector<std::string> kron_labels(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    std::vector<std::string> out;
    out.reserve(a.size() * b.size());
    for (const auto& x : a)
        for (const auto& y : b) out.push_back(x + "(x)" + y);
    return out;
}

namespace {

nlohmann::ordered_json report_json(const CheckReport& r) {
    nlohmann::ordered_json j;
    j["check"] = r.check_name;
    j["status"] = status_name(r.status);
    j["witnesses"] = nlohmann::ordered_json::array();
    for (const auto& w : r.witnesses) {
        nlohmann::ordered_json wj;
        wj["object"] = w.object;
        wj["indices"] = w.indices;
        wj["lhs"] = w.lhs;
        wj["rhs"] = w.rhs;
        j["witnesses"].push_back(std::move(wj));
    }
    j["timing_ms"] = r.timing_ms;
    return j;
}

} // namespace

std::string emit_json(const CheckReport& report) { return report_json(report).dump(2) + "\n"; }

std::string emit_json(const std::vector<CheckReport>& reports) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) arr.push_back(report_json(r));
    return arr.dump(2) + "\n";
}

void compare_columns(CheckReport& rep, const std::string& object, const LinearMap& lhs, const LinearMap& rhs,
                     const std::vector<std::vector<std::string>>& column_factors,
                     const std::vector<std::string>& target_labels) {
    if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols())
        throw std::invalid_argument("compare_columns: shape mismatch in " + object);
    std::size_t expect = 1;
    for (const auto& fac : column_factors) expect *= fac.size();
    if (expect != lhs.cols()) throw std::invalid_argument("compare_columns: label space mismatch in " + object);

    for (std::size_t c = 0; c < lhs.cols(); ++c) {
        Vec l = lhs.column_at(c), r = rhs.column_at(c);
        bool equal = true;
        for (std::size_t i = 0; i < l.size() && equal; ++i) equal = (l[i] == r[i]);
        if (equal) continue;
        Witness w;
        w.object = object;
        std::size_t rest = c;
        std::vector<std::string> idx(column_factors.size());
        for (std::size_t t = column_factors.size(); t-- > 0;) {
            idx[t] = column_factors[t][rest % column_factors[t].size()];
            rest /= column_factors[t].size();
        }
        w.indices = std::move(idx);
        w.lhs = target_labels.empty() ? LinearMap::column(l, lhs.field()).str() : combo_str(l, target_labels);
        w.rhs = target_labels.empty() ? LinearMap::column(r, rhs.field()).str() : combo_str(r, target_labels);
        rep.add_witness(std::move(w));
    }
}

} // namespace coact
