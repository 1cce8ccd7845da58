#include "coact/scalar.hpp"

namespace coact {

namespace {

bool is_prime_u32(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return (a * b) % p; // p < 2^32, so a*b < 2^64
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t reduce_long(long n, std::uint32_t p) {
    long r = n % static_cast<long>(p);
    if (r < 0) r += p;
    return static_cast<std::uint64_t>(r);
}

} // namespace

Field Field::prime(std::uint32_t p) {
    if (!is_prime_u32(p)) throw std::invalid_argument("field characteristic must be prime: " + std::to_string(p));
    return Field{p};
}

Scalar::Scalar(long num, long den) {
    if (den == 0) throw division_by_zero("rational with zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    rep_ = std::move(q);
}

Scalar Scalar::from_long(long n, const Field& f) {
    if (f.is_rational()) return Scalar(mpq_class(n));
    return Scalar(detail::FpElem{reduce_long(n, f.characteristic()), f.characteristic()});
}

Scalar Scalar::into_field(const Field& f) const {
    const auto* q = std::get_if<mpq_class>(&rep_);
    if (!q) {
        if (field() == f) return *this;
        throw field_mismatch("cannot move a prime-field residue into " + f.name());
    }
    if (f.is_rational()) return *this;
    const std::uint32_t p = f.characteristic();
    mpz_class num = q->get_num(), den = q->get_den();
    mpz_class pz(static_cast<unsigned long>(p));
    mpz_class nr = num % pz, dr = den % pz;
    if (nr < 0) nr += pz;
    if (dr < 0) dr += pz;
    std::uint64_t n = nr.get_ui(), d = dr.get_ui();
    if (d == 0) throw division_by_zero("denominator divisible by " + std::to_string(p));
    std::uint64_t inv = powmod(d, p - 2, p);
    return Scalar(detail::FpElem{mulmod(n, inv, p), p});
}

Scalar Scalar::parse(const std::string& text, const Field& f) {
    auto slash = text.find('/');
    mpq_class q;
    try {
        if (slash == std::string::npos) {
            q = mpq_class(mpz_class(text));
        } else {
            mpz_class num(text.substr(0, slash)), den(text.substr(slash + 1));
            if (den == 0) throw division_by_zero("zero denominator in '" + text + "'");
            q = mpq_class(num) / mpq_class(den);
        }
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed scalar literal '" + text + "'");
    }
    return Scalar(std::move(q)).into_field(f);
}

Field Scalar::field() const {
    if (const auto* e = std::get_if<detail::FpElem>(&rep_)) return Field::prime(e->p);
    return Field::rationals();
}

bool Scalar::is_zero() const {
    if (const auto* q = std::get_if<mpq_class>(&rep_)) return *q == 0;
    return std::get<detail::FpElem>(rep_).v == 0;
}

bool Scalar::is_one() const {
    if (const auto* q = std::get_if<mpq_class>(&rep_)) return *q == 1;
    return std::get<detail::FpElem>(rep_).v == 1;
}

namespace {
const detail::FpElem& same_prime(const detail::FpElem& a, const detail::FpElem& b) {
    if (a.p != b.p) throw field_mismatch("mixing F" + std::to_string(a.p) + " and F" + std::to_string(b.p));
    return b;
}
} // namespace

Scalar Scalar::operator-() const {
    if (const auto* q = std::get_if<mpq_class>(&rep_)) return Scalar(mpq_class(-*q));
    auto e = std::get<detail::FpElem>(rep_);
    return Scalar(detail::FpElem{e.v == 0 ? 0 : e.p - e.v, e.p});
}

Scalar Scalar::operator+(const Scalar& o) const {
    if (const auto* a = std::get_if<mpq_class>(&rep_)) {
        const auto* b = std::get_if<mpq_class>(&o.rep_);
        if (!b) throw field_mismatch("mixing Q and a prime field");
        return Scalar(mpq_class(*a + *b));
    }
    const auto& a = std::get<detail::FpElem>(rep_);
    const auto* b = std::get_if<detail::FpElem>(&o.rep_);
    if (!b) throw field_mismatch("mixing a prime field and Q");
    same_prime(a, *b);
    return Scalar(detail::FpElem{(a.v + b->v) % a.p, a.p});
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    if (const auto* a = std::get_if<mpq_class>(&rep_)) {
        const auto* b = std::get_if<mpq_class>(&o.rep_);
        if (!b) throw field_mismatch("mixing Q and a prime field");
        return Scalar(mpq_class(*a * *b));
    }
    const auto& a = std::get<detail::FpElem>(rep_);
    const auto* b = std::get_if<detail::FpElem>(&o.rep_);
    if (!b) throw field_mismatch("mixing a prime field and Q");
    same_prime(a, *b);
    return Scalar(detail::FpElem{mulmod(a.v, b->v, a.p), a.p});
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw division_by_zero("inverse of zero");
    if (const auto* q = std::get_if<mpq_class>(&rep_)) return Scalar(mpq_class(1 / *q));
    auto e = std::get<detail::FpElem>(rep_);
    return Scalar(detail::FpElem{powmod(e.v, e.p - 2, e.p), e.p});
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar r = Scalar::one(field());
    Scalar base = *this;
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

bool Scalar::operator==(const Scalar& o) const {
    if (const auto* a = std::get_if<mpq_class>(&rep_)) {
        const auto* b = std::get_if<mpq_class>(&o.rep_);
        if (!b) throw field_mismatch("comparing Q with a prime field");
        return *a == *b;
    }
    const auto& a = std::get<detail::FpElem>(rep_);
    const auto* b = std::get_if<detail::FpElem>(&o.rep_);
    if (!b) throw field_mismatch("comparing a prime field with Q");
    same_prime(a, *b);
    return a.v == b->v;
}

std::string Scalar::str() const {
    if (const auto* q = std::get_if<mpq_class>(&rep_)) return q->get_str();
    return std::to_string(std::get<detail::FpElem>(rep_).v);
}

const mpq_class& Scalar::rational() const {
    if (const auto* q = std::get_if<mpq_class>(&rep_)) return *q;
    throw field_mismatch("scalar is not rational");
}

} // namespace coact
