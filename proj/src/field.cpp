#include "dorroh/field.hpp"

namespace dorroh {

namespace {

std::uint32_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

std::uint32_t reduce(const mpz_class& z, std::uint32_t p) {
  mpz_class r = z % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (p >= (1u << 31)) throw FieldError("field characteristic must be below 2^31");
  if (!is_prime(p)) throw FieldError("GF(" + std::to_string(p) + "): modulus is not prime");
  return FieldSpec{p};
}

Scalar FieldSpec::zero() const { return from_int(0); }
Scalar FieldSpec::one() const { return from_int(1); }

Scalar FieldSpec::from_int(long value) const {
  if (p_ == 0) return Scalar::rational(mpq_class(value));
  return Scalar::residue(value, p_);
}

Scalar FieldSpec::from_fraction(const mpz_class& num, const mpz_class& den) const {
  if (p_ == 0) {
    if (den == 0) throw FieldError("zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar::rational(q);
  }
  std::uint32_t d = reduce(den, p_);
  if (d == 0) throw FieldError("denominator vanishes in " + name());
  std::uint64_t n = reduce(num, p_);
  std::uint64_t inv = mod_pow(d, p_ - 2, p_);
  return Scalar::residue(static_cast<std::int64_t>(n * inv % p_), p_);
}

std::string FieldSpec::name() const {
  return p_ == 0 ? std::string("Q") : "GF(" + std::to_string(p_) + ")";
}

Scalar Scalar::rational(mpq_class q) {
  q.canonicalize();
  return Scalar(std::move(q));
}

Scalar Scalar::residue(std::int64_t value, std::uint32_t p) {
  std::int64_t r = value % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return Scalar(Residue{static_cast<std::uint32_t>(r), p});
}

FieldSpec Scalar::field() const {
  if (auto* r = std::get_if<Residue>(&v_)) return FieldSpec{r->p};
  return FieldSpec::rationals();
}

bool Scalar::is_zero() const {
  if (auto* r = std::get_if<Residue>(&v_)) return r->value == 0;
  return sgn(std::get<mpq_class>(v_)) == 0;
}

bool Scalar::is_one() const {
  if (auto* r = std::get_if<Residue>(&v_)) return r->value == 1 % r->p;
  return std::get<mpq_class>(v_) == 1;
}

void Scalar::require_same_field(const Scalar& o) const {
  if (v_.index() != o.v_.index() ||
      (v_.index() == 0 && std::get<Residue>(v_).p != std::get<Residue>(o.v_).p))
    throw FieldError("scalars from different fields: " + field().name() + " vs " + o.field().name());
}

Scalar Scalar::operator-() const {
  if (auto* r = std::get_if<Residue>(&v_)) return Scalar(Residue{r->value == 0 ? 0 : r->p - r->value, r->p});
  return Scalar(mpq_class(-std::get<mpq_class>(v_)));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same_field(o);
  if (auto* r = std::get_if<Residue>(&v_)) {
    std::uint64_t s = std::uint64_t{r->value} + std::get<Residue>(o.v_).value;
    r->value = static_cast<std::uint32_t>(s % r->p);
  } else {
    std::get<mpq_class>(v_) += std::get<mpq_class>(o.v_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same_field(o);
  if (auto* r = std::get_if<Residue>(&v_)) {
    std::uint64_t m = std::uint64_t{r->value} * std::get<Residue>(o.v_).value;
    r->value = static_cast<std::uint32_t>(m % r->p);
  } else {
    std::get<mpq_class>(v_) *= std::get<mpq_class>(o.v_);
  }
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw FieldError("division by zero");
  if (auto* r = std::get_if<Residue>(&v_)) return Scalar(Residue{mod_pow(r->value, r->p - 2, r->p), r->p});
  return Scalar(mpq_class(1 / std::get<mpq_class>(v_)));
}

Scalar& Scalar::operator/=(const Scalar& o) {
  require_same_field(o);
  return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }

std::string Scalar::to_string() const {
  if (auto* r = std::get_if<Residue>(&v_)) return std::to_string(r->value);
  return std::get<mpq_class>(v_).get_str();
}

std::string Scalar::to_report_string() const {
  if (auto* r = std::get_if<Residue>(&v_)) return std::to_string(r->value) + " mod " + std::to_string(r->p);
  return std::get<mpq_class>(v_).get_str();
}

const mpq_class& Scalar::rational_value() const {
  if (auto* q = std::get_if<mpq_class>(&v_)) return *q;
  throw FieldError("not a rational scalar");
}

std::uint32_t Scalar::residue_value() const {
  if (auto* r = std::get_if<Residue>(&v_)) return r->value;
  throw FieldError("not a residue scalar");
}

}  // namespace dorroh
