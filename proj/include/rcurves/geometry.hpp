#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rcurves/binary_form.hpp"
#include "rcurves/errors.hpp"
#include "rcurves/field.hpp"
#include "rcurves/multi_form.hpp"

namespace rcurves {

/// Projective space P^N or a product of two projective spaces P^a x P^b.
struct AmbientSpace {
  enum class Kind { projective, biprojective };

  Kind kind = Kind::projective;
  int n = 1;         // projective: P^n
  int a = 1, b = 1;  // biprojective: P^a x P^b

  static AmbientSpace projective(int n) {
    if (n < 1) throw ValidationError("ArityMismatch", "projective space needs dimension >= 1");
    AmbientSpace s;
    s.kind = Kind::projective;
    s.n = n;
    return s;
  }

  static AmbientSpace biprojective(int a, int b) {
    if (a < 1 || b < 1)
      throw ValidationError("ArityMismatch", "product factors need dimension >= 1");
    AmbientSpace s;
    s.kind = Kind::biprojective;
    s.a = a;
    s.b = b;
    return s;
  }

  bool is_projective() const { return kind == Kind::projective; }
  int dim() const { return is_projective() ? n : a + b; }
  int blocks() const { return is_projective() ? 1 : 2; }

  std::vector<int> block_sizes() const {
    return is_projective() ? std::vector<int>{n + 1} : std::vector<int>{a + 1, b + 1};
  }

  bool operator==(const AmbientSpace& o) const {
    if (kind != o.kind) return false;
    return is_projective() ? n == o.n : (a == o.a && b == o.b);
  }

  std::string to_string() const {
    if (is_projective()) return "P^" + std::to_string(n);
    return "P^" + std::to_string(a) + " x P^" + std::to_string(b);
  }
};

/// A hypersurface X = {G = 0} in an ambient space, or the ambient space
/// itself when no equation is given. G is (bi)homogeneous of degree >= 1.
template <FieldContext K>
struct Hypersurface {
  AmbientSpace ambient;
  std::optional<MultiForm<K>> equation;

  static Hypersurface ambient_only(AmbientSpace space) { return {space, std::nullopt}; }

  static Hypersurface cut_out(const AmbientSpace& space, MultiForm<K> G) {
    if (G.block_sizes() != space.block_sizes())
      throw ValidationError("ArityMismatch", "equation variables do not match the ambient space");
    if (G.is_zero())
      throw ValidationError("DegreeMismatch", "hypersurface equation must be nonzero");
    if (G.total_degree() < 1)
      throw ValidationError("DegreeMismatch", "hypersurface equation must have degree >= 1");
    return {space, std::move(G)};
  }

  int dim() const { return ambient.dim() - (equation ? 1 : 0); }

  /// First Chern number of X paired with a curve class of the given block
  /// degrees: for X_e in P^n the value (n + 1 - e) d, and the two-factor
  /// analogue in a product.
  long long c1_pairing(const std::vector<int>& degrees) const {
    if (ambient.is_projective()) {
      long long e = equation ? equation->block_degree(0) : 0;
      return (ambient.n + 1 - e) * static_cast<long long>(degrees.at(0));
    }
    long long e1 = equation ? equation->block_degree(0) : 0;
    long long e2 = equation ? equation->block_degree(1) : 0;
    return (ambient.a + 1 - e1) * static_cast<long long>(degrees.at(0)) +
           (ambient.b + 1 - e2) * static_cast<long long>(degrees.at(1));
  }
};

/// Morphism from the projective line to an ambient space, given by one
/// block of forms per projective factor. Within a block all forms share a
/// degree and have no common root (checked per block); constants and the
/// zero form are fine as individual components.
template <FieldContext K>
class RationalCurve {
 public:
  RationalCurve(const K& F, const AmbientSpace& space,
                std::vector<std::vector<BinaryForm<K>>> blocks)
      : ambient_(space), blocks_(std::move(blocks)) {
    auto sizes = space.block_sizes();
    if (blocks_.size() != sizes.size())
      throw ValidationError("ArityMismatch", "curve block count does not match the ambient space");
    degrees_.resize(blocks_.size());
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      if (static_cast<int>(blocks_[b].size()) != sizes[b])
        throw ValidationError("ArityMismatch", "curve block has wrong number of coordinates");
      int d = blocks_[b][0].degree();
      for (const auto& f : blocks_[b])
        if (f.degree() != d)
          throw ValidationError("DegreeMismatch", "coordinates within a block must share a degree");
      degrees_[b] = d;
      auto g = [&] {
        try {
          return gcd_forms(F, blocks_[b]);
        } catch (const PreconditionError&) {
          throw PreconditionError("NotBasepointFree", "curve block is identically zero");
        }
      }();
      if (g.degree() != 0)
        throw PreconditionError("NotBasepointFree",
                                "curve block has the common root factor " + form_to_string(F, g));
    }
  }

  const AmbientSpace& ambient() const { return ambient_; }
  const std::vector<std::vector<BinaryForm<K>>>& blocks() const { return blocks_; }
  const std::vector<int>& degrees() const { return degrees_; }

  /// Coordinates flattened across blocks.
  std::vector<BinaryForm<K>> flat() const {
    std::vector<BinaryForm<K>> out;
    for (const auto& b : blocks_) out.insert(out.end(), b.begin(), b.end());
    return out;
  }

 private:
  AmbientSpace ambient_;
  std::vector<std::vector<BinaryForm<K>>> blocks_;
  std::vector<int> degrees_;
};

/// Whether the image of the curve lies on the hypersurface, i.e. G
/// pulls back to the zero form. True when X is the whole ambient space.
template <FieldContext K>
bool on_hypersurface(const K& F, const RationalCurve<K>& f, const Hypersurface<K>& X) {
  if (!(f.ambient() == X.ambient))
    throw ValidationError("ArityMismatch", "curve and hypersurface live in different spaces");
  if (!X.equation) return true;
  return substitute(F, *X.equation, f.blocks()).is_zero(F);
}

}  // namespace rcurves
