#pragma once

#include <map>
#include <numeric>
#include <vector>

#include "rcurves/binary_form.hpp"
#include "rcurves/errors.hpp"
#include "rcurves/field.hpp"

namespace rcurves {

/// Sparse multihomogeneous polynomial: one or two blocks of variables, each
/// block homogeneous of its own degree. Terms map an exponent vector (blocks
/// concatenated) to a nonzero coefficient; std::map keys give a canonical
/// term order. Degrees are declared, so zero polynomials of any multidegree
/// are representable.
template <FieldContext K>
class MultiForm {
 public:
  using Elem = typename K::Element;
  using Exponents = std::vector<int>;

  MultiForm(std::vector<int> block_sizes, std::vector<int> block_degrees)
      : sizes_(std::move(block_sizes)), degrees_(std::move(block_degrees)) {
    if (sizes_.empty() || sizes_.size() > 2 || sizes_.size() != degrees_.size())
      throw ValidationError("ArityMismatch", "expected one or two variable blocks");
    for (int s : sizes_)
      if (s < 1) throw ValidationError("ArityMismatch", "empty variable block");
    for (int d : degrees_)
      if (d < 0) throw ValidationError("DegreeMismatch", "negative block degree");
  }

  int blocks() const { return static_cast<int>(sizes_.size()); }
  int block_size(int b) const { return sizes_.at(b); }
  int block_degree(int b) const { return degrees_.at(b); }
  const std::vector<int>& block_sizes() const { return sizes_; }
  const std::vector<int>& block_degrees() const { return degrees_; }

  int total_vars() const { return std::accumulate(sizes_.begin(), sizes_.end(), 0); }
  int total_degree() const { return std::accumulate(degrees_.begin(), degrees_.end(), 0); }

  /// Block index owning flat variable index v.
  int block_of(int v) const {
    return v < sizes_[0] ? 0 : 1;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponents, Elem>& terms() const { return terms_; }

  /// Adds c * x^exp; merges with an existing term and drops zeros.
  void add_term(const K& F, const Exponents& exp, Elem c) {
    check_exponents(exp);
    if (F.is_zero(c)) return;
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
      terms_.emplace(exp, std::move(c));
    } else {
      it->second = F.add(it->second, c);
      if (F.is_zero(it->second)) terms_.erase(it);
    }
  }

  /// Derivative with respect to flat variable v; the owning block's degree
  /// drops by one (clamped at zero when the result is identically zero).
  MultiForm partial(const K& F, int v) const {
    if (v < 0 || v >= total_vars())
      throw ValidationError("ArityMismatch", "variable index out of range");
    int b = block_of(v);
    std::vector<int> degs = degrees_;
    degs[b] = std::max(0, degs[b] - 1);
    MultiForm out(sizes_, degs);
    for (const auto& [exp, c] : terms_) {
      if (exp[v] == 0) continue;
      Exponents e = exp;
      e[v] -= 1;
      out.add_term(F, e, F.mul(F.from_int(exp[v]), c));
    }
    return out;
  }

 private:
  void check_exponents(const Exponents& exp) const {
    if (exp.size() != static_cast<std::size_t>(total_vars()))
      throw ValidationError("ArityMismatch", "exponent vector has wrong length");
    int v = 0;
    for (int b = 0; b < blocks(); ++b) {
      int sum = 0;
      for (int i = 0; i < sizes_[b]; ++i, ++v) {
        if (exp[v] < 0) throw ValidationError("DegreeMismatch", "negative exponent");
        sum += exp[v];
      }
      if (sum != degrees_[b])
        throw ValidationError("DegreeMismatch", "term degree does not match declared degree");
    }
  }

  std::vector<int> sizes_;
  std::vector<int> degrees_;
  std::map<Exponents, Elem> terms_;
};

template <FieldContext K>
MultiForm<K> multi_add(const K& F, const MultiForm<K>& a, const MultiForm<K>& b) {
  if (a.block_sizes() != b.block_sizes() || a.block_degrees() != b.block_degrees())
    throw ValidationError("DegreeMismatch", "adding polynomials of different multidegrees");
  MultiForm<K> r = a;
  for (const auto& [exp, c] : b.terms()) r.add_term(F, exp, c);
  return r;
}

template <FieldContext K>
MultiForm<K> multi_mul(const K& F, const MultiForm<K>& a, const MultiForm<K>& b) {
  if (a.block_sizes() != b.block_sizes())
    throw ValidationError("ArityMismatch", "multiplying polynomials over different blocks");
  std::vector<int> degs(a.block_degrees());
  for (int i = 0; i < a.blocks(); ++i) degs[i] += b.block_degree(i);
  MultiForm<K> r(a.block_sizes(), degs);
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) {
      std::vector<int> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(F, e, F.mul(ca, cb));
    }
  return r;
}

template <FieldContext K>
MultiForm<K> multi_scale(const K& F, const typename K::Element& s, const MultiForm<K>& a) {
  MultiForm<K> r(a.block_sizes(), a.block_degrees());
  for (const auto& [exp, c] : a.terms()) r.add_term(F, exp, F.mul(s, c));
  return r;
}

/// Substitutes one binary form per variable, block b receiving forms of a
/// common degree d_b. The result is a binary form of degree
/// sum_b block_degree(b) * d_b; substitution is a ring homomorphism.
template <FieldContext K>
BinaryForm<K> substitute(const K& F, const MultiForm<K>& G,
                         const std::vector<std::vector<BinaryForm<K>>>& blocks) {
  if (static_cast<int>(blocks.size()) != G.blocks())
    throw ValidationError("ArityMismatch", "substitution block count mismatch");
  std::vector<const BinaryForm<K>*> flat;
  std::vector<int> var_form_degree;
  int out_degree = 0;
  for (int b = 0; b < G.blocks(); ++b) {
    if (static_cast<int>(blocks[b].size()) != G.block_size(b))
      throw ValidationError("ArityMismatch", "substitution block size mismatch");
    int d = blocks[b].empty() ? 0 : blocks[b][0].degree();
    for (const auto& f : blocks[b]) {
      if (f.degree() != d)
        throw ValidationError("DegreeMismatch", "forms within a block must share a degree");
      flat.push_back(&f);
      var_form_degree.push_back(d);
    }
    out_degree += G.block_degree(b) * d;
  }

  // Power cache per variable, built on demand.
  std::vector<std::vector<BinaryForm<K>>> powers(flat.size());
  auto power = [&](int v, int e) -> const BinaryForm<K>& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(BinaryForm<K>::constant(F, F.one()));
    while (static_cast<int>(cache.size()) <= e)
      cache.push_back(form_mul(F, cache.back(), *flat[v]));
    return cache[e];
  };

  auto result = BinaryForm<K>::zero(F, out_degree);
  for (const auto& [exp, c] : G.terms()) {
    auto term = BinaryForm<K>::constant(F, c);
    for (std::size_t v = 0; v < exp.size(); ++v)
      if (exp[v] > 0) term = form_mul(F, term, power(static_cast<int>(v), exp[v]));
    result = form_add(F, result, term);
  }
  return result;
}

}  // namespace rcurves
