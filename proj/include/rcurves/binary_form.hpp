#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rcurves/errors.hpp"
#include "rcurves/field.hpp"
#include "rcurves/unipoly.hpp"

namespace rcurves {

/// Homogeneous form of fixed degree d in two variables s, t over a field K.
/// Dense representation: coeffs()[i] is the coefficient of s^(d-i) t^i, so
/// index equals the power of t. The zero form of each degree is a valid
/// value; degree is part of the type's data, not inferred from coefficients.
template <FieldContext K>
class BinaryForm {
 public:
  using Elem = typename K::Element;

  BinaryForm() : degree_(0), c_(1) {}

  BinaryForm(int degree, std::vector<Elem> coeffs) : degree_(degree), c_(std::move(coeffs)) {
    if (degree_ < 0 || c_.size() != static_cast<std::size_t>(degree_) + 1)
      throw ValidationError("DegreeMismatch", "binary form needs degree+1 coefficients");
  }

  static BinaryForm zero(const K& F, int degree) {
    if (degree < 0) throw ValidationError("DegreeMismatch", "negative form degree");
    return BinaryForm(degree, std::vector<Elem>(degree + 1, F.zero()));
  }

  static BinaryForm constant(const K& F, Elem c) {
    (void)F;
    return BinaryForm(0, {std::move(c)});
  }

  /// c * s^(degree - t_power) * t^t_power.
  static BinaryForm monomial(const K& F, int degree, int t_power, Elem c) {
    if (t_power < 0 || t_power > degree)
      throw ValidationError("DegreeMismatch", "monomial exponent out of range");
    auto f = zero(F, degree);
    f.c_[t_power] = std::move(c);
    return f;
  }

  int degree() const { return degree_; }
  const std::vector<Elem>& coeffs() const { return c_; }
  const Elem& coeff(int t_power) const { return c_.at(t_power); }
  void set_coeff(int t_power, Elem v) { c_.at(t_power) = std::move(v); }

  bool is_zero(const K& F) const {
    for (const Elem& e : c_)
      if (!F.is_zero(e)) return false;
    return true;
  }

  /// Largest k with t^k dividing the form; -1 for the zero form.
  int t_valuation(const K& F) const {
    for (int i = 0; i <= degree_; ++i)
      if (!F.is_zero(c_[i])) return i;
    return -1;
  }

  /// Largest k with s^k dividing the form; -1 for the zero form.
  int s_valuation(const K& F) const {
    for (int i = degree_; i >= 0; --i)
      if (!F.is_zero(c_[i])) return degree_ - i;
    return -1;
  }

 private:
  int degree_;
  std::vector<Elem> c_;
};

template <FieldContext K>
bool form_eq(const K& F, const BinaryForm<K>& a, const BinaryForm<K>& b) {
  if (a.degree() != b.degree()) return false;
  for (int i = 0; i <= a.degree(); ++i)
    if (!F.eq(a.coeff(i), b.coeff(i))) return false;
  return true;
}

template <FieldContext K>
BinaryForm<K> form_add(const K& F, const BinaryForm<K>& a, const BinaryForm<K>& b) {
  if (a.degree() != b.degree())
    throw ValidationError("DegreeMismatch", "adding forms of different degrees");
  std::vector<typename K::Element> c(a.degree() + 1);
  for (int i = 0; i <= a.degree(); ++i) c[i] = F.add(a.coeff(i), b.coeff(i));
  return BinaryForm<K>(a.degree(), std::move(c));
}

template <FieldContext K>
BinaryForm<K> form_scale(const K& F, const typename K::Element& s, const BinaryForm<K>& a) {
  std::vector<typename K::Element> c(a.degree() + 1);
  for (int i = 0; i <= a.degree(); ++i) c[i] = F.mul(s, a.coeff(i));
  return BinaryForm<K>(a.degree(), std::move(c));
}

template <FieldContext K>
BinaryForm<K> form_neg(const K& F, const BinaryForm<K>& a) {
  return form_scale(F, F.neg(F.one()), a);
}

template <FieldContext K>
BinaryForm<K> form_sub(const K& F, const BinaryForm<K>& a, const BinaryForm<K>& b) {
  return form_add(F, a, form_neg(F, b));
}

/// Product of forms; degrees add, so the zero form keeps degree bookkeeping.
template <FieldContext K>
BinaryForm<K> form_mul(const K& F, const BinaryForm<K>& a, const BinaryForm<K>& b) {
  auto r = BinaryForm<K>::zero(F, a.degree() + b.degree());
  for (int i = 0; i <= a.degree(); ++i) {
    if (F.is_zero(a.coeff(i))) continue;
    for (int j = 0; j <= b.degree(); ++j)
      r.set_coeff(i + j, F.add(r.coeff(i + j), F.mul(a.coeff(i), b.coeff(j))));
  }
  return r;
}

template <FieldContext K>
BinaryForm<K> form_pow(const K& F, const BinaryForm<K>& a, int e) {
  if (e < 0) throw ValidationError("DegreeMismatch", "negative power of a form");
  auto r = BinaryForm<K>::constant(F, F.one());
  for (int i = 0; i < e; ++i) r = form_mul(F, r, a);
  return r;
}

/// Multiplication by s (degree rises by one, t-powers unchanged).
template <FieldContext K>
BinaryForm<K> form_times_s(const K& F, const BinaryForm<K>& a) {
  auto r = BinaryForm<K>::zero(F, a.degree() + 1);
  for (int i = 0; i <= a.degree(); ++i) r.set_coeff(i, a.coeff(i));
  return r;
}

/// Multiplication by t (degree rises by one, t-powers shift up).
template <FieldContext K>
BinaryForm<K> form_times_t(const K& F, const BinaryForm<K>& a) {
  auto r = BinaryForm<K>::zero(F, a.degree() + 1);
  for (int i = 0; i <= a.degree(); ++i) r.set_coeff(i + 1, a.coeff(i));
  return r;
}

/// Substitution t = 1: returns the univariate polynomial f(x, 1) in x = s.
template <FieldContext K>
UniPoly<K> form_dehomogenize_t(const K& F, const BinaryForm<K>& a) {
  std::vector<typename K::Element> c(a.degree() + 1, F.zero());
  for (int i = 0; i <= a.degree(); ++i) c[a.degree() - i] = a.coeff(i);
  return unipoly_from(F, std::move(c));
}

/// Inverse of dehomogenization: degree-m form t^m p(s/t) times an extra
/// power of t. The result has degree deg(p) + t_power.
template <FieldContext K>
BinaryForm<K> form_homogenize(const K& F, const UniPoly<K>& p, int t_power = 0) {
  if (p.is_zero())
    throw ValidationError("DegreeMismatch", "cannot homogenize the zero polynomial");
  int m = p.degree();
  auto f = BinaryForm<K>::zero(F, m + t_power);
  for (int r = 0; r <= m; ++r) f.set_coeff(m - r + t_power, p.c[r]);
  return f;
}

/// Monic gcd of a family of forms (leading coefficient in s equal to one).
/// Zero forms are ignored; an all-zero family is rejected. Works through the
/// factorization f = t^v g with t not dividing g, where g is faithfully
/// represented by its dehomogenization g(x, 1).
template <FieldContext K>
BinaryForm<K> gcd_forms(const K& F, std::span<const BinaryForm<K>> forms) {
  int t_val = -1;
  UniPoly<K> g;
  for (const auto& f : forms) {
    int v = f.t_valuation(F);
    if (v < 0) continue;
    t_val = t_val < 0 ? v : std::min(t_val, v);
    g = unipoly_gcd(F, g, form_dehomogenize_t(F, f));
  }
  if (t_val < 0)
    throw PreconditionError("AllFormsZero", "gcd of an all-zero family of forms");
  return form_homogenize(F, g, t_val);
}

template <FieldContext K>
BinaryForm<K> gcd_forms(const K& F, const std::vector<BinaryForm<K>>& forms) {
  return gcd_forms(F, std::span<const BinaryForm<K>>(forms.data(), forms.size()));
}

/// Substitution (s, t) -> (u, v) for a pair of forms of common degree c:
/// the reparametrization f(u, v), of degree deg(f) * c.
template <FieldContext K>
BinaryForm<K> form_compose(const K& F, const BinaryForm<K>& f, const BinaryForm<K>& u,
                           const BinaryForm<K>& v) {
  if (u.degree() != v.degree())
    throw ValidationError("DegreeMismatch", "reparametrization pair must share a degree");
  const int d = f.degree();
  auto acc = BinaryForm<K>::zero(F, d * u.degree());
  auto upow = BinaryForm<K>::constant(F, F.one());
  std::vector<BinaryForm<K>> us{upow};
  for (int i = 0; i < d; ++i) us.push_back(form_mul(F, us.back(), u));
  auto vpow = BinaryForm<K>::constant(F, F.one());
  for (int i = 0; i <= d; ++i) {
    if (!F.is_zero(f.coeff(i)))
      acc = form_add(F, acc, form_scale(F, f.coeff(i), form_mul(F, us[d - i], vpow)));
    if (i < d) vpow = form_mul(F, vpow, v);
  }
  return acc;
}

/// Exact quotient a / b; nullopt when b does not divide a.
template <FieldContext K>
std::optional<BinaryForm<K>> form_divide_exact(const K& F, const BinaryForm<K>& a,
                                               const BinaryForm<K>& b) {
  if (b.is_zero(F)) throw PreconditionError("DivisionByZero", "form division by zero");
  if (a.is_zero(F)) return BinaryForm<K>::zero(F, std::max(0, a.degree() - b.degree()));
  int va = a.t_valuation(F), vb = b.t_valuation(F);
  if (va < vb || a.degree() < b.degree()) return std::nullopt;
  auto [q, r] = unipoly_divmod(F, form_dehomogenize_t(F, a), form_dehomogenize_t(F, b));
  if (!r.is_zero()) return std::nullopt;
  // deg q = deg a(x,1) - deg b(x,1), so the homogenized quotient lands at
  // degree (deg a - deg b) once the t-power va - vb is restored.
  return form_homogenize(F, q, va - vb);
}

template <FieldContext K>
std::string form_to_string(const K& F, const BinaryForm<K>& f) {
  std::string out = "[";
  for (int i = 0; i <= f.degree(); ++i) {
    if (i) out += ", ";
    out += F.to_string(f.coeff(i));
  }
  return out + "]";
}

}  // namespace rcurves
