#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace coact {

/// Thrown when an operation mixes elements of different ground fields.
struct field_mismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Thrown on division by zero; exact arithmetic never approximates it away.
struct division_by_zero : std::domain_error {
    using std::domain_error::domain_error;
};

/// Ground field descriptor: the rationals, or a prime field F_p.
class Field {
public:
    static Field rationals() { return Field{0}; }
    static Field prime(std::uint32_t p);

    bool is_rational() const { return p_ == 0; }
    std::uint32_t characteristic() const { return p_; }

    bool operator==(const Field&) const = default;

    std::string name() const { return p_ == 0 ? "Q" : "F" + std::to_string(p_); }

private:
    explicit Field(std::uint32_t p) : p_(p) {}
    std::uint32_t p_ = 0; // 0 = rationals
};

namespace detail {
struct FpElem {
    std::uint64_t v;
    std::uint32_t p;
    bool operator==(const FpElem&) const = default;
};
} // namespace detail

/// Element of an exact field: a rational with unbounded integers, or a
/// residue mod a prime.  All arithmetic is exact; equality is literal.
class Scalar {
public:
    Scalar() : rep_(mpq_class(0)) {}
    Scalar(long n) : rep_(mpq_class(n)) {} // implicit: integer literals are scalars
    Scalar(long num, long den);

    static Scalar zero(const Field& f) { return from_long(0, f); }
    static Scalar one(const Field& f) { return from_long(1, f); }
    static Scalar from_long(long n, const Field& f);
    /// Parses "p", "-p" or "p/q" in the given field.
    static Scalar parse(const std::string& text, const Field& f);
    /// Rational literal reinterpreted in the field f (mod p if prime).
    Scalar into_field(const Field& f) const;

    Field field() const;

    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    Scalar inverse() const;
    /// Integer power; negative exponents invert (and reject zero base).
    Scalar pow(long e) const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Canonical "p/q" form (plain integer when q = 1); residues print 0..p-1.
    std::string str() const;

    /// Rational value of a rational scalar (throws for F_p).
    const mpq_class& rational() const;

private:
    std::variant<mpq_class, detail::FpElem> rep_;
    explicit Scalar(mpq_class q) : rep_(std::move(q)) {}
    explicit Scalar(detail::FpElem e) : rep_(e) {}
};

} // namespace coact
