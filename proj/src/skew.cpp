#include "coact/skew.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace coact {

SkewLaurentAlgebra::SkewLaurentAlgebra(std::string name, std::vector<std::string> gens,
                                       const std::vector<std::tuple<std::size_t, std::size_t, Scalar>>& q_pairs,
                                       std::vector<bool> inv_mask, const Field& field, std::vector<GenTag> tags)
    : name_(std::move(name)), gens_(std::move(gens)), inv_mask_(std::move(inv_mask)), field_(field),
      tags_(std::move(tags)) {
    const std::size_t k = gens_.size();
    if (inv_mask_.size() != k) throw std::invalid_argument("inv mask length mismatch");
    if (tags_.empty()) tags_.assign(k, GenTag::none);
    if (tags_.size() != k) throw std::invalid_argument("tag list length mismatch");
    std::set<std::string> seen(gens_.begin(), gens_.end());
    if (seen.size() != k) throw std::invalid_argument("duplicate generator names");
    q_.assign(k * k, Scalar::one(field_));
    for (const auto& [i, j, q] : q_pairs) {
        if (i >= j || j >= k) throw std::invalid_argument("q pair must have i < j < arity");
        if (q.is_zero()) throw std::invalid_argument("q factors must be nonzero");
        q_[i * k + j] = q;
        q_[j * k + i] = q.inverse();
    }
}

std::optional<std::size_t> SkewLaurentAlgebra::gen_index(const std::string& name) const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i] == name) return i;
    return std::nullopt;
}

bool SkewLaurentAlgebra::same_presentation(const SkewLaurentAlgebra& o) const {
    if (gens_ != o.gens_ || inv_mask_ != o.inv_mask_ || !(field_ == o.field_)) return false;
    for (std::size_t i = 0; i < q_.size(); ++i)
        if (q_[i] != o.q_[i]) return false;
    return true;
}

SkewAlgebraPtr make_skew_algebra(std::string name, std::vector<std::string> gens,
                                 std::vector<std::tuple<std::size_t, std::size_t, Scalar>> q_pairs,
                                 std::vector<bool> inv_mask, const Field& field, std::vector<GenTag> tags) {
    return std::make_shared<const SkewLaurentAlgebra>(std::move(name), std::move(gens), q_pairs,
                                                      std::move(inv_mask), field, std::move(tags));
}

SkewAlgebraPtr skew_ground_field(const Field& f) {
    return make_skew_algebra("k", {}, {}, {}, f);
}

namespace {

bool same_parent(const SkewAlgebraPtr& a, const SkewAlgebraPtr& b) {
    return a == b || a->same_presentation(*b);
}

void check_expo(const SkewLaurentAlgebra& alg, const Expo& e) {
    if (e.size() != alg.arity()) throw std::invalid_argument("exponent vector has wrong arity");
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] < 0 && !alg.inv_mask()[i])
            throw std::invalid_argument("negative exponent on non-invertible generator " + alg.gens()[i]);
}

/// Reordering factor for x^a · x^b: each g_j in a passes each g_i in b (i<j).
Scalar reorder_factor(const SkewLaurentAlgebra& alg, const Expo& a, const Expo& b) {
    Scalar f = Scalar::one(alg.field());
    for (std::size_t i = 0; i + 1 < alg.arity(); ++i)
        for (std::size_t j = i + 1; j < alg.arity(); ++j) {
            long count = a[j] * b[i];
            if (count == 0) continue;
            const Scalar& q = alg.q_at(i, j);
            if (q.is_one()) continue;
            f = f * q.pow(count);
        }
    return f;
}

} // namespace

void SkewElement::add_term(const Expo& e, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    Scalar sum = it->second + c;
    if (sum.is_zero())
        terms_.erase(it);
    else
        it->second = sum;
}

SkewElement SkewElement::scalar(SkewAlgebraPtr parent, const Scalar& c) {
    SkewElement r(std::move(parent));
    r.add_term(Expo(r.parent_->arity(), 0), c);
    return r;
}

SkewElement SkewElement::one(SkewAlgebraPtr parent) {
    const Field f = parent->field();
    return scalar(std::move(parent), Scalar::one(f));
}

SkewElement SkewElement::monomial(SkewAlgebraPtr parent, Expo e, const Scalar& c) {
    check_expo(*parent, e);
    SkewElement r(std::move(parent));
    r.add_term(e, c);
    return r;
}

SkewElement SkewElement::generator(SkewAlgebraPtr parent, std::size_t i) {
    if (i >= parent->arity()) throw std::invalid_argument("generator index out of range");
    Expo e(parent->arity(), 0);
    e[i] = 1;
    const Field f = parent->field();
    return monomial(std::move(parent), std::move(e), Scalar::one(f));
}

SkewElement SkewElement::operator+(const SkewElement& o) const {
    if (!same_parent(parent_, o.parent_)) throw std::invalid_argument("elements of different skew algebras");
    SkewElement r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

SkewElement SkewElement::operator-() const {
    SkewElement r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

SkewElement SkewElement::operator-(const SkewElement& o) const { return *this + (-o); }

SkewElement SkewElement::operator*(const SkewElement& o) const {
    if (!same_parent(parent_, o.parent_)) throw std::invalid_argument("elements of different skew algebras");
    SkewElement r(parent_);
    const auto& alg = *parent_;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            Expo e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb * reorder_factor(alg, ea, eb));
        }
    return r;
}

SkewElement SkewElement::scaled(const Scalar& c) const {
    SkewElement r(parent_);
    for (const auto& [e, t] : terms_) r.add_term(e, t * c);
    return r;
}

SkewElement SkewElement::pow(long e) const {
    if (e < 0) {
        auto inv = is_unit(*this);
        if (!inv) throw std::invalid_argument("negative power of a non-unit");
        return inv->pow(-e);
    }
    SkewElement r = one(parent_);
    SkewElement base = *this;
    while (e) {
        if (e & 1) r = r * base;
        if (e >>= 1) base = base * base;
    }
    return r;
}

bool SkewElement::operator==(const SkewElement& o) const {
    if (!same_parent(parent_, o.parent_)) return false;
    return terms_ == o.terms_;
}

std::string SkewElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        bool constant = std::all_of(e.begin(), e.end(), [](long x) { return x == 0; });
        if (constant) {
            os << c.str();
            continue;
        }
        bool printed = false;
        if (!c.is_one()) {
            os << c.str() << " ";
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (printed) os << " ";
            os << parent_->gens()[i];
            if (e[i] != 1) os << "^" << e[i];
            printed = true;
        }
    }
    return os.str();
}

std::optional<SkewElement> is_unit(const SkewElement& a) {
    if (a.terms_.size() != 1) return std::nullopt;
    const auto& [e, c] = *a.terms_.begin();
    const auto& alg = *a.parent_;
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] != 0 && !alg.inv_mask()[i]) return std::nullopt;
    Expo ne(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) ne[i] = -e[i];
    // c x^e · d x^{-e} = c d q-factor; solve for d
    Scalar phi = reorder_factor(alg, e, ne);
    return SkewElement::monomial(a.parent_, ne, (c * phi).inverse());
}

SkewElement reindex(const SkewElement& a, SkewAlgebraPtr target, const std::vector<std::size_t>& slot) {
    const auto& src = *a.parent_;
    if (slot.size() != src.arity()) throw std::logic_error("reindex: slot map arity mismatch");
    for (std::size_t i = 0; i + 1 < slot.size(); ++i)
        if (slot[i] >= slot[i + 1]) throw std::logic_error("reindex: slot map must be strictly increasing");
    for (std::size_t i = 0; i < slot.size(); ++i) {
        if (slot[i] >= target->arity()) throw std::logic_error("reindex: slot out of range");
        if (src.inv_mask()[i] && !target->inv_mask()[slot[i]]) throw std::logic_error("reindex: loses invertibility");
        for (std::size_t j = i + 1; j < slot.size(); ++j)
            if (src.q_at(i, j) != target->q_at(slot[i], slot[j])) throw std::logic_error("reindex: q mismatch");
    }
    SkewElement r(target);
    for (const auto& [e, c] : a.terms_) {
        Expo ne(target->arity(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) ne[slot[i]] = e[i];
        r.add_term(ne, c);
    }
    return r;
}

SkewTensor tensor_skew(const SkewAlgebraPtr& a, const SkewAlgebraPtr& b) {
    if (!(a->field() == b->field())) throw field_mismatch("tensor of skew algebras over different fields");
    std::vector<std::string> gens = a->gens();
    std::set<std::string> used(gens.begin(), gens.end());
    for (const auto& g : b->gens()) {
        std::string name = g;
        while (used.count(name)) name += "'";
        used.insert(name);
        gens.push_back(name);
    }
    const std::size_t ka = a->arity(), kb = b->arity();
    std::vector<std::tuple<std::size_t, std::size_t, Scalar>> q_pairs;
    for (std::size_t i = 0; i < ka; ++i)
        for (std::size_t j = i + 1; j < ka; ++j)
            if (!a->q_at(i, j).is_one()) q_pairs.emplace_back(i, j, a->q_at(i, j));
    for (std::size_t i = 0; i < kb; ++i)
        for (std::size_t j = i + 1; j < kb; ++j)
            if (!b->q_at(i, j).is_one()) q_pairs.emplace_back(ka + i, ka + j, b->q_at(i, j));
    std::vector<bool> inv = a->inv_mask();
    inv.insert(inv.end(), b->inv_mask().begin(), b->inv_mask().end());
    std::vector<GenTag> tags = a->tags();
    tags.insert(tags.end(), b->tags().begin(), b->tags().end());
    SkewTensor t;
    t.algebra = make_skew_algebra(a->name() + "(x)" + b->name(), std::move(gens), std::move(q_pairs),
                                  std::move(inv), a->field(), std::move(tags));
    t.left_arity = ka;
    return t;
}

SkewElement SkewTensor::embed_left(const SkewElement& a) const {
    std::vector<std::size_t> slot(left_arity);
    for (std::size_t i = 0; i < left_arity; ++i) slot[i] = i;
    return reindex(a, algebra, slot);
}

SkewElement SkewTensor::embed_right(const SkewElement& b) const {
    std::vector<std::size_t> slot(algebra->arity() - left_arity);
    for (std::size_t i = 0; i < slot.size(); ++i) slot[i] = left_arity + i;
    return reindex(b, algebra, slot);
}

SkewElement SkewAlgebraHom::apply(const SkewElement& a) const {
    if (!same_parent(a.parent(), source_)) throw std::invalid_argument("hom applied to element of wrong algebra");
    SkewElement r = SkewElement::zero(target_);
    for (const auto& [e, c] : a.terms()) {
        SkewElement prod = SkewElement::scalar(target_, c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (e[i] > 0) {
                prod = prod * images_[i].pow(e[i]);
            } else {
                if (!inverse_images_[i])
                    throw std::logic_error("hom has no inverse image for generator " + source_->gens()[i]);
                prod = prod * inverse_images_[i]->pow(-e[i]);
            }
        }
        r = r + prod;
    }
    return r;
}

SkewHomResult extend_algebra_map(const std::string& name, const SkewAlgebraPtr& source,
                                 const SkewAlgebraPtr& target, std::vector<SkewElement> images) {
    SkewHomResult res;
    res.report.check_name = "skew-hom(" + name + ")";
    if (images.size() != source->arity()) throw std::invalid_argument("one image per generator required");
    for (const auto& img : images)
        if (!same_parent(img.parent(), target)) throw std::invalid_argument("image lies in the wrong algebra");

    const std::size_t k = source->arity();
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            SkewElement lhs = images[j] * images[i];
            SkewElement rhs = (images[i] * images[j]).scaled(source->q_at(i, j));
            if (lhs != rhs)
                res.report.add_witness({"relation " + source->gens()[j] + "·" + source->gens()[i] + " = " +
                                            source->q_at(i, j).str() + "·" + source->gens()[i] + "·" +
                                            source->gens()[j],
                                        {source->gens()[j], source->gens()[i]},
                                        lhs.str(),
                                        rhs.str()});
        }

    std::vector<std::optional<SkewElement>> inverses(k);
    for (std::size_t i = 0; i < k; ++i) {
        if (!source->inv_mask()[i]) continue;
        inverses[i] = is_unit(images[i]);
        if (!inverses[i])
            res.report.add_witness({"image of invertible generator is not a unit",
                                    {source->gens()[i]},
                                    images[i].str(),
                                    "a unit of " + target->name()});
    }
    if (!res.report.passed()) return res;

    SkewAlgebraHom hom;
    hom.name_ = name;
    hom.source_ = source;
    hom.target_ = target;
    hom.images_ = std::move(images);
    hom.inverse_images_ = std::move(inverses);
    res.hom = std::move(hom);
    return res;
}

SkewAlgebraHom identity_skew_hom(const SkewAlgebraPtr& a) {
    std::vector<SkewElement> images;
    for (std::size_t i = 0; i < a->arity(); ++i) images.push_back(SkewElement::generator(a, i));
    auto res = extend_algebra_map("id", a, a, std::move(images));
    return *res.hom;
}

SkewAlgebraHom compose_skew_homs(const SkewAlgebraHom& g, const SkewAlgebraHom& f) {
    if (!same_parent(g.source(), f.target())) throw std::invalid_argument("skew homs not composable");
    std::vector<SkewElement> images;
    for (const auto& img : f.images()) images.push_back(g.apply(img));
    auto res = extend_algebra_map(g.name() + "∘" + f.name(), f.source(), g.target(), std::move(images));
    if (!res.hom) throw std::logic_error("composite of valid homs failed relation check");
    return *res.hom;
}

SkewLocalization localize_at_generators(const SkewAlgebraPtr& a, const std::vector<std::string>& subset) {
    std::vector<std::size_t> inverted;
    std::vector<bool> inv = a->inv_mask();
    for (const auto& s : subset) {
        auto idx = a->gen_index(s);
        if (!idx) throw std::invalid_argument("unknown generator '" + s + "'");
        inverted.push_back(*idx);
        inv[*idx] = true;
    }
    std::vector<std::tuple<std::size_t, std::size_t, Scalar>> q_pairs;
    for (std::size_t i = 0; i < a->arity(); ++i)
        for (std::size_t j = i + 1; j < a->arity(); ++j)
            if (!a->q_at(i, j).is_one()) q_pairs.emplace_back(i, j, a->q_at(i, j));
    SkewAlgebraPtr localized = inverted.empty()
        ? a
        : make_skew_algebra(a->name() + "_loc", a->gens(), std::move(q_pairs), std::move(inv), a->field(), a->tags());
    std::vector<SkewElement> images;
    for (std::size_t i = 0; i < a->arity(); ++i) images.push_back(SkewElement::generator(localized, i));
    auto res = extend_algebra_map("iota", a, localized, std::move(images));
    return SkewLocalization{a, localized, *res.hom, std::move(inverted)};
}

OreReport check_ore_generated(const SkewAlgebraPtr& a, const std::vector<std::string>& subset) {
    OreReport out;
    out.report.check_name = "ore(" + a->name() + ")";
    out.note = "left Ore condition verified per generator pair; it extends to the "
               "multiplicative closure of the subset q-monomial by q-monomial";
    for (const auto& s : subset) {
        auto si = a->gen_index(s);
        if (!si) throw std::invalid_argument("unknown generator '" + s + "'");
        for (std::size_t ei = 0; ei < a->arity(); ++ei) {
            // find s', e' with s'·e = e'·s
            SkewElement sp = SkewElement::generator(a, *si);
            Scalar c = *si == ei ? Scalar::one(a->field())
                                 : (*si < ei ? a->q_at(*si, ei).inverse() : a->q_at(ei, *si));
            SkewElement ep = SkewElement::generator(a, ei).scaled(c);
            SkewElement lhs = sp * SkewElement::generator(a, ei);
            SkewElement rhs = ep * SkewElement::generator(a, *si);
            if (lhs != rhs) {
                out.report.add_witness({"left Ore condition", {s, a->gens()[ei]}, lhs.str(), rhs.str()});
                continue;
            }
            out.witnesses.push_back(OreWitness{s, a->gens()[ei], sp, ep});
        }
    }
    return out;
}

SkewBialgebraMaps skew_bialgebra_maps(const SkewAlgebraPtr& b) {
    for (std::size_t i = 0; i < b->arity(); ++i) {
        if (b->tags()[i] == GenTag::none)
            throw std::invalid_argument("generator " + b->gens()[i] + " carries no grouplike/primitive tag");
        if (b->tags()[i] == GenTag::primitive && b->inv_mask()[i])
            throw std::invalid_argument("primitive generator " + b->gens()[i] + " cannot be invertible");
        for (std::size_t j = i + 1; j < b->arity(); ++j)
            if (!b->q_at(i, j).is_one())
                throw std::invalid_argument("skew bialgebras must be commutative (polynomial or Laurent type)");
    }
    SkewBialgebraMaps maps{tensor_skew(b, b), {}, {}};
    std::vector<SkewElement> delta_images;
    std::vector<SkewElement> eps_images;
    SkewAlgebraPtr ground = skew_ground_field(b->field());
    for (std::size_t i = 0; i < b->arity(); ++i) {
        SkewElement l = maps.square.embed_left(SkewElement::generator(b, i));
        SkewElement r = maps.square.embed_right(SkewElement::generator(b, i));
        if (b->tags()[i] == GenTag::grouplike) {
            delta_images.push_back(l * r);
            eps_images.push_back(SkewElement::one(ground));
        } else {
            delta_images.push_back(l + r);
            eps_images.push_back(SkewElement::zero(ground));
        }
    }
    auto dres = extend_algebra_map("Delta", b, maps.square.algebra, std::move(delta_images));
    auto eres = extend_algebra_map("epsilon", b, ground, std::move(eps_images));
    if (!dres.hom || !eres.hom) throw std::logic_error("tagged bialgebra maps failed to extend");
    maps.comult = *dres.hom;
    maps.counit = *eres.hom;
    return maps;
}

CheckReport check_skew_coaction(const SkewAlgebraHom& rho, const SkewTensor& eb, const SkewAlgebraPtr& e,
                                const SkewAlgebraPtr& b) {
    CheckReport rep;
    rep.check_name = "skew-coaction(" + rho.name() + ")";
    if (!same_parent(rho.source(), e) || !same_parent(rho.target(), eb.algebra))
        throw std::invalid_argument("coaction endpoints do not match E -> E⊗B");

    SkewBialgebraMaps bi = skew_bialgebra_maps(b);
    const std::size_t ke = e->arity(), kb = b->arity();

    // E⊗B⊗B, with (E⊗B)⊗B and E⊗(B⊗B) sharing the presentation
    SkewTensor ebb = tensor_skew(eb.algebra, b);

    // rho⊗id: E-gens feed through rho into the first two blocks, B-gens copy
    // into the third
    std::vector<SkewElement> rho_id_images;
    {
        std::vector<std::size_t> first_two(ke + kb);
        for (std::size_t i = 0; i < ke + kb; ++i) first_two[i] = i;
        for (std::size_t i = 0; i < ke; ++i)
            rho_id_images.push_back(reindex(rho.images()[i], ebb.algebra, first_two));
        for (std::size_t j = 0; j < kb; ++j)
            rho_id_images.push_back(SkewElement::generator(ebb.algebra, ke + kb + j));
    }
    auto rho_id = extend_algebra_map("rho⊗id", eb.algebra, ebb.algebra, std::move(rho_id_images));

    // id⊗Delta: E-gens copy, B-gens comultiply into blocks two and three
    std::vector<SkewElement> id_delta_images;
    {
        std::vector<std::size_t> last_two(2 * kb);
        for (std::size_t i = 0; i < 2 * kb; ++i) last_two[i] = ke + i;
        for (std::size_t i = 0; i < ke; ++i) id_delta_images.push_back(SkewElement::generator(ebb.algebra, i));
        for (std::size_t j = 0; j < kb; ++j)
            id_delta_images.push_back(reindex(bi.comult.images()[j], ebb.algebra, last_two));
    }
    auto id_delta = extend_algebra_map("id⊗Delta", eb.algebra, ebb.algebra, std::move(id_delta_images));

    // id⊗epsilon: E-gens copy, B-gens collapse to scalars
    std::vector<SkewElement> id_eps_images;
    for (std::size_t i = 0; i < ke; ++i) id_eps_images.push_back(SkewElement::generator(e, i));
    for (std::size_t j = 0; j < kb; ++j) {
        const auto& eps_j = bi.counit.images()[j];
        Scalar c = eps_j.is_zero() ? Scalar::zero(b->field()) : eps_j.terms().begin()->second;
        id_eps_images.push_back(SkewElement::scalar(e, c));
    }
    auto id_eps = extend_algebra_map("id⊗epsilon", eb.algebra, e, std::move(id_eps_images));

    if (!rho_id.hom || !id_delta.hom || !id_eps.hom) {
        rep.absorb(rho_id.report, "rho⊗id");
        rep.absorb(id_delta.report, "id⊗Delta");
        rep.absorb(id_eps.report, "id⊗epsilon");
        return rep;
    }

    for (std::size_t i = 0; i < ke; ++i) {
        SkewElement lhs = rho_id.hom->apply(rho.images()[i]);
        SkewElement rhs = id_delta.hom->apply(rho.images()[i]);
        if (lhs != rhs) rep.add_witness({"coaction coassociativity", {e->gens()[i]}, lhs.str(), rhs.str()});

        SkewElement counit_side = id_eps.hom->apply(rho.images()[i]);
        SkewElement expect = SkewElement::generator(e, i);
        if (counit_side != expect)
            rep.add_witness({"coaction counit law", {e->gens()[i]}, counit_side.str(), expect.str()});
    }
    return rep;
}

} // namespace coact
