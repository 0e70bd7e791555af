#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace dorroh {

/// Thrown when two scalars from different fields meet, or a value is not in the field.
class FieldError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Scalar;

/// The ground field: the rationals, or GF(p) for a prime p < 2^31.
class FieldSpec {
 public:
  static FieldSpec rationals() { return FieldSpec{0}; }
  static FieldSpec prime(std::uint32_t p);

  bool is_rational() const { return p_ == 0; }
  bool is_finite() const { return p_ != 0; }
  /// 0 for the rationals.
  std::uint32_t characteristic() const { return p_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long value) const;
  /// num/den reduced into the field; throws FieldError when den vanishes in the field.
  Scalar from_fraction(const mpz_class& num, const mpz_class& den) const;

  /// "Q" or "GF(p)".
  std::string name() const;

  friend bool operator==(FieldSpec a, FieldSpec b) { return a.p_ == b.p_; }

 private:
  friend class Scalar;
  explicit FieldSpec(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

/// An exact field element. Rationals are kept in lowest terms with positive
/// denominator (mpq canonical form); residues live in [0, p).
class Scalar {
 public:
  static Scalar rational(mpq_class q);
  static Scalar residue(std::int64_t value, std::uint32_t p);

  FieldSpec field() const;
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Plain exact rendering: "-3/2", "7", or the residue "2".
  std::string to_string() const;
  /// Report rendering: "-3/2" for rationals, "2 mod 3" for residues.
  std::string to_report_string() const;

  const mpq_class& rational_value() const;
  std::uint32_t residue_value() const;

 private:
  struct Residue {
    std::uint32_t value;
    std::uint32_t p;
    bool operator==(const Residue&) const = default;
  };
  explicit Scalar(Residue r) : v_(r) {}
  explicit Scalar(mpq_class q) : v_(std::move(q)) {}

  void require_same_field(const Scalar& o) const;

  std::variant<Residue, mpq_class> v_;
};

}  // namespace dorroh
