#pragma once

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <string>
#include <vector>

#include "rcurves/errors.hpp"

namespace rcurves {

/// Field contexts bundle the arithmetic of a coefficient field. Elements are
/// plain value types; every operation goes through the context so that
/// parameters such as a prime modulus live in one place instead of inside
/// each element.
template <class K>
concept FieldContext = requires(const K& f, typename K::Element a, long long n) {
  typename K::Element;
  { f.zero() } -> std::same_as<typename K::Element>;
  { f.one() } -> std::same_as<typename K::Element>;
  { f.from_int(n) } -> std::same_as<typename K::Element>;
  { f.add(a, a) } -> std::same_as<typename K::Element>;
  { f.sub(a, a) } -> std::same_as<typename K::Element>;
  { f.mul(a, a) } -> std::same_as<typename K::Element>;
  { f.neg(a) } -> std::same_as<typename K::Element>;
  { f.inv(a) } -> std::same_as<typename K::Element>;
  { f.is_zero(a) } -> std::same_as<bool>;
  { f.eq(a, a) } -> std::same_as<bool>;
  { f.to_string(a) } -> std::same_as<std::string>;
};

/// Exact rational arithmetic backed by GMP. Elements are kept in canonical
/// form: lowest terms, positive denominator.
class RationalField {
 public:
  using Element = mpq_class;

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }

  Element from_int(long long v) const {
    return Element(mpz_class(static_cast<long>(v)));
  }

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element neg(const Element& a) const { return -a; }

  Element inv(const Element& a) const {
    if (a == 0) throw PreconditionError("DivisionByZero", "inverse of zero");
    return Element(1) / a;
  }

  Element div(const Element& a, const Element& b) const {
    if (b == 0) throw PreconditionError("DivisionByZero", "division by zero");
    return a / b;
  }

  bool is_zero(const Element& a) const { return a == 0; }
  bool eq(const Element& a, const Element& b) const { return a == b; }

  std::string to_string(const Element& a) const { return a.get_str(); }

  /// Parses "p" or "p/q" with arbitrary-precision integers.
  Element parse(const std::string& text) const {
    mpq_class v;
    if (v.set_str(text, 10) != 0)
      throw ValidationError("BadNumber", "cannot parse rational '" + text + "'");
    if (v.get_den() == 0)
      throw ValidationError("BadNumber", "zero denominator in '" + text + "'");
    v.canonicalize();
    return v;
  }

  /// Scales a row to a primitive integer vector: multiplies by the lcm of
  /// denominators, divides by the gcd of numerators. Exact operation used to
  /// keep fraction-free elimination integral.
  void make_primitive(std::vector<Element>& row) const {
    mpz_class den_lcm = 1;
    for (const Element& e : row)
      if (e != 0) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), e.get_den().get_mpz_t());
    mpz_class num_gcd = 0;
    for (Element& e : row) {
      e *= den_lcm;
      if (e != 0) mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), e.get_num().get_mpz_t());
    }
    if (num_gcd > 1)
      for (Element& e : row) e /= mpq_class(num_gcd);
  }

  std::string describe() const { return "Q"; }
};

/// Prime field GF(p). Elements are residues in [0, p). The modulus is
/// restricted to p < 2^31 so that products fit in 64 bits.
class PrimeField {
 public:
  using Element = std::uint64_t;

  explicit PrimeField(std::uint64_t p) : p_(p) {
    if (p < 2 || p >= (std::uint64_t{1} << 31))
      throw ValidationError("BadField", "modulus out of range: " + std::to_string(p));
    if (!is_prime(p))
      throw ValidationError("BadField", "modulus " + std::to_string(p) + " is not prime");
  }

  std::uint64_t modulus() const { return p_; }

  Element zero() const { return 0; }
  Element one() const { return 1 % p_; }

  Element from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += static_cast<long long>(p_);
    return static_cast<Element>(r);
  }

  Element add(Element a, Element b) const {
    Element s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
  Element mul(Element a, Element b) const { return (a * b) % p_; }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }

  Element inv(Element a) const {
    if (a == 0) throw PreconditionError("DivisionByZero", "inverse of zero");
    // Extended Euclid on (a, p); p prime so the gcd is 1.
    long long t = 0, new_t = 1;
    long long r = static_cast<long long>(p_), new_r = static_cast<long long>(a);
    while (new_r != 0) {
      long long q = r / new_r;
      long long tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    if (t < 0) t += static_cast<long long>(p_);
    return static_cast<Element>(t);
  }

  Element div(Element a, Element b) const { return mul(a, inv(b)); }

  bool is_zero(Element a) const { return a == 0; }
  bool eq(Element a, Element b) const { return a == b; }

  std::string to_string(Element a) const { return std::to_string(a); }

  Element parse(const std::string& text) const {
    std::size_t pos = 0;
    long long v;
    try {
      v = std::stoll(text, &pos);
    } catch (const std::exception&) {
      throw ValidationError("BadNumber", "cannot parse integer '" + text + "'");
    }
    if (pos != text.size())
      throw ValidationError("BadNumber", "trailing characters in '" + text + "'");
    return from_int(v);
  }

  void make_primitive(std::vector<Element>&) const {}

  std::string describe() const { return "Fp:" + std::to_string(p_); }

  static bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

 private:
  std::uint64_t p_;
};

static_assert(FieldContext<RationalField>);
static_assert(FieldContext<PrimeField>);

}  // namespace rcurves
