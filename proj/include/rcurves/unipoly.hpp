#pragma once

#include <vector>

#include "rcurves/errors.hpp"
#include "rcurves/field.hpp"

namespace rcurves {

/// Dense univariate polynomial over a field, lowest degree first.
/// Normal form: empty coefficient vector for zero, nonzero leading
/// coefficient otherwise. Helper type behind binary-form gcds and
/// function-field rank computations.
template <FieldContext K>
struct UniPoly {
  using Elem = typename K::Element;
  std::vector<Elem> c;

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
};

template <FieldContext K>
void unipoly_normalize(const K& F, UniPoly<K>& p) {
  while (!p.c.empty() && F.is_zero(p.c.back())) p.c.pop_back();
}

template <FieldContext K>
UniPoly<K> unipoly_from(const K& F, std::vector<typename K::Element> coeffs) {
  UniPoly<K> p{std::move(coeffs)};
  unipoly_normalize(F, p);
  return p;
}

template <FieldContext K>
UniPoly<K> unipoly_add(const K& F, const UniPoly<K>& a, const UniPoly<K>& b) {
  UniPoly<K> r;
  r.c.resize(std::max(a.c.size(), b.c.size()), F.zero());
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = F.add(r.c[i], b.c[i]);
  unipoly_normalize(F, r);
  return r;
}

template <FieldContext K>
UniPoly<K> unipoly_scale(const K& F, const typename K::Element& s, const UniPoly<K>& a) {
  UniPoly<K> r = a;
  for (auto& e : r.c) e = F.mul(s, e);
  unipoly_normalize(F, r);
  return r;
}

template <FieldContext K>
UniPoly<K> unipoly_sub(const K& F, const UniPoly<K>& a, const UniPoly<K>& b) {
  return unipoly_add(F, a, unipoly_scale(F, F.neg(F.one()), b));
}

template <FieldContext K>
UniPoly<K> unipoly_mul(const K& F, const UniPoly<K>& a, const UniPoly<K>& b) {
  if (a.is_zero() || b.is_zero()) return {};
  UniPoly<K> r;
  r.c.assign(a.c.size() + b.c.size() - 1, F.zero());
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j)
      r.c[i + j] = F.add(r.c[i + j], F.mul(a.c[i], b.c[j]));
  unipoly_normalize(F, r);
  return r;
}

/// Euclidean division: a = q*b + r with deg r < deg b. Requires b nonzero.
template <FieldContext K>
std::pair<UniPoly<K>, UniPoly<K>> unipoly_divmod(const K& F, const UniPoly<K>& a,
                                                 const UniPoly<K>& b) {
  if (b.is_zero()) throw PreconditionError("DivisionByZero", "polynomial division by zero");
  UniPoly<K> r = a;
  UniPoly<K> q;
  if (a.degree() >= b.degree()) q.c.assign(a.degree() - b.degree() + 1, F.zero());
  auto lead_inv = F.inv(b.c.back());
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int shift = r.degree() - b.degree();
    auto factor = F.mul(r.c.back(), lead_inv);
    q.c[shift] = factor;
    for (std::size_t i = 0; i < b.c.size(); ++i)
      r.c[i + shift] = F.sub(r.c[i + shift], F.mul(factor, b.c[i]));
    unipoly_normalize(F, r);
  }
  unipoly_normalize(F, q);
  return {q, r};
}

/// Exact quotient; throws if the division leaves a remainder.
template <FieldContext K>
UniPoly<K> unipoly_divexact(const K& F, const UniPoly<K>& a, const UniPoly<K>& b) {
  auto [q, r] = unipoly_divmod(F, a, b);
  if (!r.is_zero())
    throw PreconditionError("InexactDivision", "polynomial division left a remainder");
  return q;
}

/// Monic gcd via the Euclidean algorithm; gcd(0, 0) = 0.
template <FieldContext K>
UniPoly<K> unipoly_gcd(const K& F, UniPoly<K> a, UniPoly<K> b) {
  while (!b.is_zero()) {
    auto [q, r] = unipoly_divmod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero()) a = unipoly_scale(F, F.inv(a.c.back()), a);
  return a;
}

}  // namespace rcurves
