#pragma once

// Exact scalars: the base field k (Q or F_p), univariate polynomials k[t],
// and the local ring O = k[t] localized at (t - s0).

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "semieuler/error.hpp"

namespace semieuler {

class BaseField {
public:
    BaseField() = default;

    static BaseField rationals() { return BaseField{}; }
    /// Prime field F_p. Requires p prime and p < 2^31.
    static BaseField prime(std::uint64_t p);

    bool is_rationals() const noexcept { return p_ == 0; }
    /// 0 for Q.
    std::uint32_t characteristic() const noexcept { return p_; }
    bool two_is_unit() const noexcept { return p_ != 2; }

    /// "Q" or "F<p>".
    std::string descriptor() const;

    bool operator==(const BaseField&) const = default;

private:
    std::uint32_t p_ = 0;
};

/// An element of Q or F_p. Elements of F_p are kept as residues in [0, p).
class FieldElem {
public:
    FieldElem() = default;  // zero of Q
    FieldElem(BaseField field, long value);
    /// Rationals are reduced modulo p for prime fields; a denominator divisible
    /// by p raises DivisionByNonUnit.
    FieldElem(BaseField field, const mpq_class& value);

    static FieldElem zero(BaseField f) { return FieldElem(f, 0L); }
    static FieldElem one(BaseField f) { return FieldElem(f, 1L); }

    const BaseField& field() const noexcept { return field_; }
    bool is_zero() const;
    bool is_one() const;

    /// Exact rational value (the residue in [0, p) for prime fields).
    mpq_class value() const;
    std::uint64_t residue() const noexcept { return residue_; }

    FieldElem zero_like() const { return zero(field_); }
    FieldElem one_like() const { return one(field_); }

    FieldElem operator-() const;
    FieldElem operator+(const FieldElem& rhs) const;
    FieldElem operator-(const FieldElem& rhs) const;
    FieldElem operator*(const FieldElem& rhs) const;
    /// Throws DivisionByNonUnit on a zero divisor.
    FieldElem operator/(const FieldElem& rhs) const;
    FieldElem& operator+=(const FieldElem& rhs) { return *this = *this + rhs; }
    FieldElem& operator-=(const FieldElem& rhs) { return *this = *this - rhs; }
    FieldElem& operator*=(const FieldElem& rhs) { return *this = *this * rhs; }
    FieldElem& operator/=(const FieldElem& rhs) { return *this = *this / rhs; }
    FieldElem inverse() const;

    bool operator==(const FieldElem& rhs) const;

    std::string to_string() const;

private:
    void check_same_field(const FieldElem& rhs) const;

    BaseField field_;
    mpq_class q_;                // used for Q
    std::uint64_t residue_ = 0;  // used for F_p
};

/// Univariate polynomial over the base field, coefficients lowest degree first,
/// trimmed so that the leading coefficient is nonzero.
class Poly {
public:
    explicit Poly(BaseField field = BaseField::rationals()) : field_(field) {}
    explicit Poly(const FieldElem& constant);
    Poly(BaseField field, std::vector<FieldElem> coeffs);

    static Poly variable(BaseField field);
    /// (t - a)
    static Poly linear(const FieldElem& root);
    static Poly constant(BaseField field, long c) { return Poly(FieldElem(field, c)); }

    const BaseField& field() const noexcept { return field_; }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    const std::vector<FieldElem>& coeffs() const noexcept { return c_; }
    FieldElem coeff(std::size_t i) const;
    FieldElem leading() const;

    Poly zero_like() const { return Poly(field_); }
    Poly one_like() const { return constant(field_, 1); }

    FieldElem eval(const FieldElem& x) const;
    Poly monic() const;

    Poly operator-() const;
    Poly operator+(const Poly& rhs) const;
    Poly operator-(const Poly& rhs) const;
    Poly operator*(const Poly& rhs) const;
    Poly operator*(const FieldElem& rhs) const;
    Poly& operator+=(const Poly& rhs) { return *this = *this + rhs; }
    Poly& operator-=(const Poly& rhs) { return *this = *this - rhs; }
    Poly& operator*=(const Poly& rhs) { return *this = *this * rhs; }
    /// Exact quotient; throws Internal when rhs does not divide *this.
    Poly operator/(const Poly& rhs) const;

    /// Euclidean division: *this = q * divisor + r with deg r < deg divisor.
    void divmod(const Poly& divisor, Poly& quotient, Poly& remainder) const;
    Poly pow(unsigned e) const;

    bool operator==(const Poly& rhs) const;

    /// Canonical expression in `t`, highest degree first, e.g. "t^2-3/2*t+1".
    std::string to_string() const;

private:
    void trim();

    BaseField field_;
    std::vector<FieldElem> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

inline constexpr std::size_t kInfiniteValuation = std::numeric_limits<std::size_t>::max();

/// Context of the local ring O: the base field and the distinguished point s0.
class LocalRing {
public:
    LocalRing(BaseField field, FieldElem base_point);

    static std::shared_ptr<const LocalRing> make(BaseField field, const FieldElem& base_point);
    static std::shared_ptr<const LocalRing> make(BaseField field, long base_point);

    const BaseField& field() const noexcept { return field_; }
    const FieldElem& base_point() const noexcept { return s0_; }
    /// Coerce an integer into the base field.
    FieldElem elem(long v) const { return FieldElem(field_, v); }

    bool operator==(const LocalRing& rhs) const { return field_ == rhs.field_ && s0_ == rhs.s0_; }

private:
    BaseField field_;
    FieldElem s0_;
};

using RingPtr = std::shared_ptr<const LocalRing>;

/// p(t)/q(t) with q(s0) != 0, gcd(p, q) = 1 and q monic.
class LocalScalar {
public:
    /// Throws DivisionByNonUnit if den vanishes at s0 after reduction.
    LocalScalar(RingPtr ring, Poly num, Poly den);
    LocalScalar(RingPtr ring, Poly num);
    LocalScalar(RingPtr ring, long value);

    static LocalScalar zero(const RingPtr& ring) { return LocalScalar(ring, 0L); }
    static LocalScalar one(const RingPtr& ring) { return LocalScalar(ring, 1L); }
    static LocalScalar variable(const RingPtr& ring);
    /// pi = t - s0
    static LocalScalar uniformizer(const RingPtr& ring);

    const RingPtr& ring() const noexcept { return ring_; }
    const Poly& num() const noexcept { return num_; }
    const Poly& den() const noexcept { return den_; }

    LocalScalar zero_like() const { return zero(ring_); }
    LocalScalar one_like() const { return one(ring_); }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_unit() const;
    /// Order of vanishing at s0; kInfiniteValuation for zero.
    std::size_t valuation() const;
    /// num(s)/den(s); throws PoleAtPoint when den(s) = 0.
    FieldElem eval_at(const FieldElem& s) const;

    LocalScalar operator-() const;
    LocalScalar operator+(const LocalScalar& rhs) const;
    LocalScalar operator-(const LocalScalar& rhs) const;
    LocalScalar operator*(const LocalScalar& rhs) const;
    /// Throws DivisionByNonUnit unless rhs is a unit of O.
    LocalScalar operator/(const LocalScalar& rhs) const;
    LocalScalar& operator+=(const LocalScalar& rhs) { return *this = *this + rhs; }
    LocalScalar& operator-=(const LocalScalar& rhs) { return *this = *this - rhs; }
    LocalScalar& operator*=(const LocalScalar& rhs) { return *this = *this * rhs; }
    LocalScalar& operator/=(const LocalScalar& rhs) { return *this = *this / rhs; }
    LocalScalar inverse() const;
    LocalScalar pow(unsigned e) const;

    bool operator==(const LocalScalar& rhs) const;

    /// Canonical expression string, e.g. "t", "(t^2-1)/(t-2)". Parses back to
    /// the same value.
    std::string to_string() const;

private:
    LocalScalar(RingPtr ring, Poly num, Poly den, bool already_reduced);
    void check_same_ring(const LocalScalar& rhs) const;
    void normalize();

    RingPtr ring_;
    Poly num_;
    Poly den_;
};

/// a / b for b not necessarily a unit; requires valuation(a) >= valuation(b)
/// and b != 0, otherwise DivisionByNonUnit.
LocalScalar quotient(const LocalScalar& a, const LocalScalar& b);

/// Parse a scalar expression: integer and fraction literals, the variable
/// `t`, operators + - * / ^ and parentheses. Throws ParseError (with the
/// 1-based column in the message) on malformed input or when the value's
/// denominator vanishes at s0.
LocalScalar parse_scalar(const RingPtr& ring, std::string_view text);

/// Parse a base-field element ("3", "-1/2"); same grammar without `t`.
FieldElem parse_field_elem(BaseField field, std::string_view text);

}  // namespace semieuler
