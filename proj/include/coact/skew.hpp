#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "coact/report.hpp"
#include "coact/scalar.hpp"

namespace coact {

/// Optional coalgebra tag for a generator, used when a skew algebra doubles
/// as a desk-scale bialgebra (Laurent/polynomial type).
enum class GenTag { none, grouplike, primitive };

/// Quantum-affine presentation: ordered generators g_1..g_k with relations
/// g_j g_i = q_ij g_i g_j for i < j, and a per-generator invertibility mask.
/// Elements are finite maps from integer exponent vectors to nonzero scalars,
/// in the normal order given by the generator list.
class SkewLaurentAlgebra {
public:
    SkewLaurentAlgebra(std::string name, std::vector<std::string> gens,
                       const std::vector<std::tuple<std::size_t, std::size_t, Scalar>>& q_pairs,
                       std::vector<bool> inv_mask, const Field& field,
                       std::vector<GenTag> tags = {});

    const std::string& name() const { return name_; }
    std::size_t arity() const { return gens_.size(); }
    const std::vector<std::string>& gens() const { return gens_; }
    const std::vector<bool>& inv_mask() const { return inv_mask_; }
    const Field& field() const { return field_; }
    const std::vector<GenTag>& tags() const { return tags_; }
    std::optional<std::size_t> gen_index(const std::string& name) const;

    /// q with g_j g_i = q(i,j) g_i g_j for i < j; q(j,i) = q(i,j)^-1.
    const Scalar& q_at(std::size_t i, std::size_t j) const { return q_[i * arity() + j]; }

    /// Same ring presentation (tags are metadata and not compared).
    bool same_presentation(const SkewLaurentAlgebra& o) const;

private:
    std::string name_;
    std::vector<std::string> gens_;
    std::vector<Scalar> q_;
    std::vector<bool> inv_mask_;
    Field field_;
    std::vector<GenTag> tags_;
};

using SkewAlgebraPtr = std::shared_ptr<const SkewLaurentAlgebra>;

SkewAlgebraPtr make_skew_algebra(std::string name, std::vector<std::string> gens,
                                 std::vector<std::tuple<std::size_t, std::size_t, Scalar>> q_pairs,
                                 std::vector<bool> inv_mask, const Field& field,
                                 std::vector<GenTag> tags = {});
/// The ground field as a 0-generator skew algebra.
SkewAlgebraPtr skew_ground_field(const Field& f);

using Expo = std::vector<long>;

class SkewElement {
public:
    explicit SkewElement(SkewAlgebraPtr parent) : parent_(std::move(parent)) {}
    static SkewElement zero(SkewAlgebraPtr parent) { return SkewElement(std::move(parent)); }
    static SkewElement scalar(SkewAlgebraPtr parent, const Scalar& c);
    static SkewElement one(SkewAlgebraPtr parent);
    static SkewElement monomial(SkewAlgebraPtr parent, Expo e, const Scalar& c);
    static SkewElement generator(SkewAlgebraPtr parent, std::size_t i);

    const SkewAlgebraPtr& parent() const { return parent_; }
    const std::map<Expo, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    SkewElement operator+(const SkewElement& o) const;
    SkewElement operator-(const SkewElement& o) const;
    SkewElement operator-() const;
    SkewElement operator*(const SkewElement& o) const;
    SkewElement scaled(const Scalar& c) const;
    /// Integer power; negative exponents require the element to be a unit.
    SkewElement pow(long e) const;

    bool operator==(const SkewElement& o) const;
    bool operator!=(const SkewElement& o) const { return !(*this == o); }

    std::string str() const;

private:
    SkewAlgebraPtr parent_;
    std::map<Expo, Scalar> terms_;
    void add_term(const Expo& e, const Scalar& c);
    friend SkewElement reindex(const SkewElement&, SkewAlgebraPtr, const std::vector<std::size_t>&);
    friend std::optional<SkewElement> is_unit(const SkewElement&);
    friend class SkewAlgebraHom;
};

/// Units of a graded domain are the nonzero scalar multiples of invertible
/// monomials; returns the two-sided inverse, or nullopt.
std::optional<SkewElement> is_unit(const SkewElement& a);

/// Transplants an element along an injective generator reindexing; the
/// caller guarantees the target relations restrict to the source ones.
SkewElement reindex(const SkewElement& a, SkewAlgebraPtr target, const std::vector<std::size_t>& slot);

/// A⊗B with cross-commuting factors; generator name clashes in the right
/// factor are renamed by appending a prime.
struct SkewTensor {
    SkewAlgebraPtr algebra;
    std::size_t left_arity = 0;

    SkewElement embed_left(const SkewElement& a) const;
    SkewElement embed_right(const SkewElement& b) const;
};
SkewTensor tensor_skew(const SkewAlgebraPtr& a, const SkewAlgebraPtr& b);

/// Algebra map determined by generator images.  Build through
/// extend_algebra_map, which verifies relation preservation and that
/// invertible generators map to units (their inverses are stored so that
/// evaluation covers negative exponents).
struct SkewAlgebraHom {
    std::string name_;
    SkewAlgebraPtr source_, target_;
    std::vector<SkewElement> images_;
    std::vector<std::optional<SkewElement>> inverse_images_;

    const std::string& name() const { return name_; }
    const SkewAlgebraPtr& source() const { return source_; }
    const SkewAlgebraPtr& target() const { return target_; }
    const std::vector<SkewElement>& images() const { return images_; }

    SkewElement apply(const SkewElement& a) const;
};

struct SkewHomResult {
    std::optional<SkewAlgebraHom> hom;
    CheckReport report;
};

SkewHomResult extend_algebra_map(const std::string& name, const SkewAlgebraPtr& source,
                                 const SkewAlgebraPtr& target, std::vector<SkewElement> images);
SkewAlgebraHom identity_skew_hom(const SkewAlgebraPtr& a);
SkewAlgebraHom compose_skew_homs(const SkewAlgebraHom& g, const SkewAlgebraHom& f);

/// Ore localization at a subset of generators: same presentation with the
/// mask enabled on the subset, together with the canonical inclusion.
struct SkewLocalization {
    SkewAlgebraPtr source;
    SkewAlgebraPtr localized;
    SkewAlgebraHom iota;
    std::vector<std::size_t> inverted; // generator indices
};
SkewLocalization localize_at_generators(const SkewAlgebraPtr& a, const std::vector<std::string>& subset);

/// Left Ore condition witnesses: for s in the subset and e a generator,
/// s' e = e' s with the exact q-factor.
struct OreWitness {
    std::string s, e;
    SkewElement s_prime, e_prime;
};
struct OreReport {
    CheckReport report;
    std::vector<OreWitness> witnesses;
    std::string note;
};
OreReport check_ore_generated(const SkewAlgebraPtr& a, const std::vector<std::string>& subset);

/// Desk-scale bialgebra structure on a tagged skew algebra: Delta and epsilon
/// as algebra maps determined by the generator tags.
struct SkewBialgebraMaps {
    SkewTensor square;      // B⊗B
    SkewAlgebraHom comult;  // B -> B⊗B
    SkewAlgebraHom counit;  // B -> k
};
/// Requires every generator to be tagged; primitive generators must not be
/// invertible (their counit vanishes).
SkewBialgebraMaps skew_bialgebra_maps(const SkewAlgebraPtr& b);

/// Comodule-algebra axioms for rho: E -> E⊗B given on generators; val B must
/// be fully tagged.  Multiplicativity holds by construction (rho is a hom);
/// the report covers coassociativity and the counit law on generators.
CheckReport check_skew_coaction(const SkewAlgebraHom& rho, const SkewTensor& eb, const SkewAlgebraPtr& e,
                                const SkewAlgebraPtr& b);

} // namespace coact
