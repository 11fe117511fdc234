#include "semieuler/scalars.hpp"

#include <utility>

namespace semieuler {

namespace {

bool is_prime(std::uint64_t p)
{
    if (p < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod)
{
    std::uint64_t result = 1 % mod;
    base %= mod;
    while (exp > 0) {
        if (exp & 1)
            result = result * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return result;
}

std::uint64_t reduce_mpz(const mpz_class& z, std::uint32_t p)
{
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
    return r.get_ui();
}

}  // namespace

// ---------------------------------------------------------------- BaseField

BaseField BaseField::prime(std::uint64_t p)
{
    if (p >= (std::uint64_t{1} << 31) || !is_prime(p))
        throw Error(ErrorCode::InvalidField, "characteristic " + std::to_string(p) + " is not a prime below 2^31");
    BaseField f;
    f.p_ = static_cast<std::uint32_t>(p);
    return f;
}

std::string BaseField::descriptor() const
{
    return is_rationals() ? std::string("Q") : "F" + std::to_string(p_);
}

// ---------------------------------------------------------------- FieldElem

FieldElem::FieldElem(BaseField field, long value) : field_(field)
{
    if (field_.is_rationals()) {
        q_ = value;
    } else {
        const auto p = static_cast<long>(field_.characteristic());
        residue_ = static_cast<std::uint64_t>(((value % p) + p) % p);
    }
}

FieldElem::FieldElem(BaseField field, const mpq_class& value) : field_(field)
{
    if (field_.is_rationals()) {
        q_ = value;
        q_.canonicalize();
        return;
    }
    const auto p = field_.characteristic();
    const std::uint64_t den = reduce_mpz(value.get_den(), p);
    if (den == 0)
        throw Error(ErrorCode::DivisionByNonUnit, "denominator divisible by the characteristic");
    residue_ = reduce_mpz(value.get_num(), p) * pow_mod(den, p - 2, p) % p;
}

bool FieldElem::is_zero() const
{
    return field_.is_rationals() ? sgn(q_) == 0 : residue_ == 0;
}

bool FieldElem::is_one() const
{
    return field_.is_rationals() ? q_ == 1 : residue_ == 1;
}

mpq_class FieldElem::value() const
{
    if (field_.is_rationals())
        return q_;
    return mpq_class(static_cast<unsigned long>(residue_));
}

void FieldElem::check_same_field(const FieldElem& rhs) const
{
    if (!(field_ == rhs.field_))
        throw Error(ErrorCode::FieldMismatch, field_.descriptor() + " vs " + rhs.field_.descriptor());
}

FieldElem FieldElem::operator-() const
{
    FieldElem r = *this;
    if (field_.is_rationals())
        r.q_ = -q_;
    else
        r.residue_ = residue_ == 0 ? 0 : field_.characteristic() - residue_;
    return r;
}

FieldElem FieldElem::operator+(const FieldElem& rhs) const
{
    check_same_field(rhs);
    FieldElem r = *this;
    if (field_.is_rationals())
        r.q_ = q_ + rhs.q_;
    else
        r.residue_ = (residue_ + rhs.residue_) % field_.characteristic();
    return r;
}

FieldElem FieldElem::operator-(const FieldElem& rhs) const
{
    return *this + (-rhs);
}

FieldElem FieldElem::operator*(const FieldElem& rhs) const
{
    check_same_field(rhs);
    FieldElem r = *this;
    if (field_.is_rationals())
        r.q_ = q_ * rhs.q_;
    else
        r.residue_ = residue_ * rhs.residue_ % field_.characteristic();
    return r;
}

FieldElem FieldElem::inverse() const
{
    if (is_zero())
        throw Error(ErrorCode::DivisionByNonUnit, "inverse of zero");
    FieldElem r = *this;
    if (field_.is_rationals()) {
        r.q_ = 1 / q_;
    } else {
        const auto p = field_.characteristic();
        r.residue_ = pow_mod(residue_, p - 2, p);
    }
    return r;
}

FieldElem FieldElem::operator/(const FieldElem& rhs) const
{
    check_same_field(rhs);
    return *this * rhs.inverse();
}

bool FieldElem::operator==(const FieldElem& rhs) const
{
    if (!(field_ == rhs.field_))
        return false;
    return field_.is_rationals() ? q_ == rhs.q_ : residue_ == rhs.residue_;
}

std::string FieldElem::to_string() const
{
    return field_.is_rationals() ? q_.get_str() : std::to_string(residue_);
}

// ---------------------------------------------------------------- Poly

Poly::Poly(const FieldElem& constant) : field_(constant.field())
{
    if (!constant.is_zero())
        c_.push_back(constant);
}

Poly::Poly(BaseField field, std::vector<FieldElem> coeffs) : field_(field), c_(std::move(coeffs))
{
    for (const auto& c : c_)
        if (!(c.field() == field_))
            throw Error(ErrorCode::FieldMismatch, "polynomial coefficient from another field");
    trim();
}

Poly Poly::variable(BaseField field)
{
    return Poly(field, {FieldElem::zero(field), FieldElem::one(field)});
}

Poly Poly::linear(const FieldElem& root)
{
    const auto f = root.field();
    return Poly(f, {-root, FieldElem::one(f)});
}

void Poly::trim()
{
    while (!c_.empty() && c_.back().is_zero())
        c_.pop_back();
}

FieldElem Poly::coeff(std::size_t i) const
{
    return i < c_.size() ? c_[i] : FieldElem::zero(field_);
}

FieldElem Poly::leading() const
{
    return c_.empty() ? FieldElem::zero(field_) : c_.back();
}

FieldElem Poly::eval(const FieldElem& x) const
{
    FieldElem acc = FieldElem::zero(field_);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

Poly Poly::monic() const
{
    if (is_zero() || leading().is_one())
        return *this;
    return *this * leading().inverse();
}

Poly Poly::operator-() const
{
    Poly r = *this;
    for (auto& c : r.c_)
        c = -c;
    return r;
}

Poly Poly::operator+(const Poly& rhs) const
{
    if (!(field_ == rhs.field_))
        throw Error(ErrorCode::FieldMismatch, "polynomial addition across fields");
    Poly r = c_.size() >= rhs.c_.size() ? *this : rhs;
    const Poly& other = c_.size() >= rhs.c_.size() ? rhs : *this;
    for (std::size_t i = 0; i < other.c_.size(); ++i)
        r.c_[i] += other.c_[i];
    r.trim();
    return r;
}

Poly Poly::operator-(const Poly& rhs) const
{
    return *this + (-rhs);
}

Poly Poly::operator*(const Poly& rhs) const
{
    if (!(field_ == rhs.field_))
        throw Error(ErrorCode::FieldMismatch, "polynomial product across fields");
    if (is_zero() || rhs.is_zero())
        return Poly(field_);
    std::vector<FieldElem> out(c_.size() + rhs.c_.size() - 1, FieldElem::zero(field_));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero())
            continue;
        for (std::size_t j = 0; j < rhs.c_.size(); ++j)
            out[i + j] += c_[i] * rhs.c_[j];
    }
    return Poly(field_, std::move(out));
}

Poly Poly::operator*(const FieldElem& rhs) const
{
    if (rhs.is_zero())
        return Poly(field_);
    Poly r = *this;
    for (auto& c : r.c_)
        c *= rhs;
    return r;
}

void Poly::divmod(const Poly& divisor, Poly& quotient, Poly& remainder) const
{
    if (divisor.is_zero())
        throw Error(ErrorCode::DivisionByNonUnit, "polynomial division by zero");
    remainder = *this;
    if (degree() < divisor.degree()) {
        quotient = Poly(field_);
        return;
    }
    const auto ddeg = static_cast<std::size_t>(divisor.degree());
    const FieldElem inv_lead = divisor.leading().inverse();
    std::vector<FieldElem> q(static_cast<std::size_t>(degree() - divisor.degree()) + 1, FieldElem::zero(field_));
    auto& r = remainder.c_;
    for (std::size_t k = q.size(); k-- > 0;) {
        const FieldElem coef = r[k + ddeg] * inv_lead;
        q[k] = coef;
        if (coef.is_zero())
            continue;
        for (std::size_t j = 0; j <= ddeg; ++j)
            r[k + j] -= coef * divisor.c_[j];
    }
    remainder.trim();
    quotient = Poly(field_, std::move(q));
}

Poly Poly::operator/(const Poly& rhs) const
{
    if (rhs.is_constant() && !rhs.is_zero())
        return *this * rhs.c_[0].inverse();
    Poly q(field_), r(field_);
    divmod(rhs, q, r);
    if (!r.is_zero())
        throw Error(ErrorCode::Internal, "inexact polynomial division");
    return q;
}

Poly Poly::pow(unsigned e) const
{
    Poly result = one_like();
    Poly base = *this;
    while (e > 0) {
        if (e & 1u)
            result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

bool Poly::operator==(const Poly& rhs) const
{
    return field_ == rhs.field_ && c_ == rhs.c_;
}

std::string Poly::to_string() const
{
    if (is_zero())
        return "0";
    std::string out;
    for (std::size_t k = c_.size(); k-- > 0;) {
        const FieldElem& c = c_[k];
        if (c.is_zero())
            continue;
        std::string term;
        const std::string mono = k == 0 ? "" : (k == 1 ? "t" : "t^" + std::to_string(k));
        if (k == 0) {
            term = c.to_string();
        } else if (c.is_one()) {
            term = mono;
        } else if (field_.is_rationals() && c.value() == -1) {
            term = "-" + mono;
        } else {
            term = c.to_string() + "*" + mono;
        }
        if (!out.empty() && term.front() != '-')
            out += '+';
        out += term;
    }
    return out;
}

Poly gcd(const Poly& a, const Poly& b)
{
    Poly x = a, y = b;
    Poly q(a.field()), r(a.field());
    while (!y.is_zero()) {
        x.divmod(y, q, r);
        x = std::move(y);
        y = std::move(r);
        r = Poly(a.field());
    }
    return x.monic();
}

// ---------------------------------------------------------------- LocalRing

LocalRing::LocalRing(BaseField field, FieldElem base_point) : field_(field), s0_(std::move(base_point))
{
    if (!(s0_.field() == field_))
        throw Error(ErrorCode::FieldMismatch, "base point outside the base field");
}

std::shared_ptr<const LocalRing> LocalRing::make(BaseField field, const FieldElem& base_point)
{
    return std::make_shared<const LocalRing>(field, base_point);
}

std::shared_ptr<const LocalRing> LocalRing::make(BaseField field, long base_point)
{
    return make(field, FieldElem(field, base_point));
}

// ---------------------------------------------------------------- LocalScalar

LocalScalar::LocalScalar(RingPtr ring, Poly num, Poly den)
    : ring_(std::move(ring)), num_(std::move(num)), den_(std::move(den))
{
    normalize();
}

LocalScalar::LocalScalar(RingPtr ring, Poly num, Poly den, bool)
    : ring_(std::move(ring)), num_(std::move(num)), den_(std::move(den))
{
}

LocalScalar::LocalScalar(RingPtr ring, Poly num)
    : ring_(std::move(ring)), num_(std::move(num)), den_(Poly::constant(ring_->field(), 1))
{
    if (!(num_.field() == ring_->field()))
        throw Error(ErrorCode::FieldMismatch, "numerator outside the base field");
}

LocalScalar::LocalScalar(RingPtr ring, long value)
    : ring_(std::move(ring)), num_(Poly::constant(ring_->field(), value)),
      den_(Poly::constant(ring_->field(), 1))
{
}

LocalScalar LocalScalar::variable(const RingPtr& ring)
{
    return LocalScalar(ring, Poly::variable(ring->field()));
}

LocalScalar LocalScalar::uniformizer(const RingPtr& ring)
{
    return LocalScalar(ring, Poly::linear(ring->base_point()));
}

void LocalScalar::normalize()
{
    if (!(num_.field() == ring_->field()) || !(den_.field() == ring_->field()))
        throw Error(ErrorCode::FieldMismatch, "fraction outside the base field");
    if (den_.is_zero())
        throw Error(ErrorCode::DivisionByNonUnit, "zero denominator");
    if (num_.is_zero()) {
        den_ = Poly::constant(ring_->field(), 1);
        return;
    }
    if (!den_.is_constant()) {
        const Poly g = gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
    }
    const FieldElem lead = den_.leading();
    if (!lead.is_one()) {
        const FieldElem inv = lead.inverse();
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
    if (den_.eval(ring_->base_point()).is_zero())
        throw Error(ErrorCode::DivisionByNonUnit, "denominator vanishes at the base point");
}

void LocalScalar::check_same_ring(const LocalScalar& rhs) const
{
    if (ring_ != rhs.ring_ && !(*ring_ == *rhs.ring_))
        throw Error(ErrorCode::FieldMismatch, "scalars from different local rings");
}

bool LocalScalar::is_unit() const
{
    return !is_zero() && !num_.eval(ring_->base_point()).is_zero();
}

std::size_t LocalScalar::valuation() const
{
    if (is_zero())
        return kInfiniteValuation;
    const Poly pi = Poly::linear(ring_->base_point());
    Poly rest = num_;
    Poly q(rest.field()), r(rest.field());
    std::size_t v = 0;
    while (true) {
        rest.divmod(pi, q, r);
        if (!r.is_zero())
            return v;
        rest = std::move(q);
        ++v;
    }
}

FieldElem LocalScalar::eval_at(const FieldElem& s) const
{
    const FieldElem d = den_.eval(s);
    if (d.is_zero())
        throw Error(ErrorCode::PoleAtPoint, to_string() + " has a pole at t=" + s.to_string());
    return num_.eval(s) / d;
}

LocalScalar LocalScalar::operator-() const
{
    return LocalScalar(ring_, -num_, den_, true);
}

LocalScalar LocalScalar::operator+(const LocalScalar& rhs) const
{
    check_same_ring(rhs);
    if (rhs.is_zero())
        return *this;
    if (is_zero())
        return rhs;
    if (den_ == rhs.den_) {
        if (den_.is_one())
            return LocalScalar(ring_, num_ + rhs.num_, den_, true);
        return LocalScalar(ring_, num_ + rhs.num_, den_);
    }
    return LocalScalar(ring_, num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

LocalScalar LocalScalar::operator-(const LocalScalar& rhs) const
{
    return *this + (-rhs);
}

LocalScalar LocalScalar::operator*(const LocalScalar& rhs) const
{
    check_same_ring(rhs);
    if (is_zero() || rhs.is_zero())
        return zero(ring_);
    if (den_.is_one() && rhs.den_.is_one())
        return LocalScalar(ring_, num_ * rhs.num_, den_, true);
    return LocalScalar(ring_, num_ * rhs.num_, den_ * rhs.den_);
}

LocalScalar LocalScalar::inverse() const
{
    if (!is_unit())
        throw Error(ErrorCode::DivisionByNonUnit, to_string() + " is not a unit at the base point");
    return LocalScalar(ring_, den_, num_);
}

LocalScalar LocalScalar::operator/(const LocalScalar& rhs) const
{
    check_same_ring(rhs);
    return *this * rhs.inverse();
}

LocalScalar LocalScalar::pow(unsigned e) const
{
    LocalScalar result = one(ring_);
    LocalScalar base = *this;
    while (e > 0) {
        if (e & 1u)
            result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

LocalScalar quotient(const LocalScalar& a, const LocalScalar& b)
{
    if (b.is_zero())
        throw Error(ErrorCode::DivisionByNonUnit, "division by zero");
    if (a.is_zero())
        return a;
    return LocalScalar(a.ring(), a.num() * b.den(), a.den() * b.num());
}

bool LocalScalar::operator==(const LocalScalar& rhs) const
{
    if (ring_ != rhs.ring_ && !(*ring_ == *rhs.ring_))
        return false;
    return num_ == rhs.num_ && den_ == rhs.den_;
}

std::string LocalScalar::to_string() const
{
    if (den_.is_one())
        return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace semieuler
