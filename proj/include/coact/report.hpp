#pragma once

#include <string>
#include <vector>

#include "coact/linalg.hpp"

namespace coact {

/// A located counterexample: which law, at which basis indices, and the two
/// sides of the violated equation as exact values.
struct Witness {
    std::string object;
    std::vector<std::string> indices;
    std::string lhs;
    std::string rhs;
};

enum class CheckStatus { pass, fail, incompatible, error };

std::string status_name(CheckStatus s);

struct CheckReport {
    std::string check_name;
    CheckStatus status = CheckStatus::pass;
    std::vector<Witness> witnesses;
    double timing_ms = 0.0;

    bool passed() const { return status == CheckStatus::pass; }

    void add_witness(Witness w, CheckStatus worst = CheckStatus::fail);
    /// Appends the sub-report's witnesses, prefixing their object tags.
    void absorb(const CheckReport& sub, const std::string& prefix);

    std::string summary() const;
};

/// Rendering helpers shared by the verifiers: exact vectors as linear
/// combinations over named basis elements.
std::string combo_str(const Vec& v, const std::vector<std::string>& labels);
std::vector<std::string> default_labels(std::size_t n, const std::string& stem = "e");
std::vector<std::string> kron_labels(const std::vector<std::string>& a, const std::vector<std::string>& b);

/// Compares two maps out of a (tensor) index space column by column and
/// records a witness for every differing column.
void compare_columns(CheckReport& rep, const std::string& object, const LinearMap& lhs, const LinearMap& rhs,
                     const std::vector<std::vector<std::string>>& column_factors,
                     const std::vector<std::string>& target_labels);

/// Stable JSON rendering:
/// {"check","status","witnesses":[{"object","indices","lhs","rhs"}],"timing_ms"}
/// with scalars serialized as "p/q" strings.
std::string emit_json(const CheckReport& report);
std::string emit_json(const std::vector<CheckReport>& reports);

} // namespace coact
