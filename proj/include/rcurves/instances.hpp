#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "rcurves/binary_form.hpp"
#include "rcurves/field.hpp"
#include "rcurves/geometry.hpp"
#include "rcurves/matrix.hpp"
#include "rcurves/multi_form.hpp"
#include "rcurves/rng.hpp"
#include "rcurves/tangent.hpp"

namespace rcurves {

/// A valid test instance: a curve lying on a hypersurface that is smooth
/// along its image.
template <FieldContext K>
struct Instance {
  Hypersurface<K> X;
  RationalCurve<K> f;
};

namespace detail {

template <FieldContext K>
typename K::Element random_element(const K& F, CounterRng& rng) {
  return F.from_int(rng.next_in(0, 100));
}

template <FieldContext K>
BinaryForm<K> random_form(const K& F, CounterRng& rng, int degree) {
  auto f = BinaryForm<K>::zero(F, degree);
  for (int i = 0; i <= degree; ++i) f.set_coeff(i, random_element(F, rng));
  return f;
}

/// Random tuple of forms of common degree with no common root; bounded
/// retries, then failure (practically unreachable for size >= 2).
template <FieldContext K>
std::optional<std::vector<BinaryForm<K>>> random_basepoint_free(const K& F, CounterRng& rng,
                                                                int size, int degree) {
  for (int attempt = 0; attempt < 32; ++attempt) {
    std::vector<BinaryForm<K>> block;
    block.reserve(size);
    for (int i = 0; i < size; ++i) block.push_back(random_form(F, rng, degree));
    try {
      if (gcd_forms(F, block).degree() == 0) return block;
    } catch (const PreconditionError&) {
    }
  }
  return std::nullopt;
}

/// All exponent vectors of the given block sizes and degrees, in a fixed
/// lexicographic order.
inline std::vector<std::vector<int>> enumerate_exponents(const std::vector<int>& sizes,
                                                         const std::vector<int>& degrees) {
  std::vector<std::vector<int>> block_exps{{}};
  std::vector<std::vector<int>> result;
  // Exponents for one block of `size` variables summing to `deg`.
  auto one_block = [](int size, int deg) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(size, 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
      if (pos == size - 1) {
        cur[pos] = left;
        out.push_back(cur);
        return;
      }
      for (int e = left; e >= 0; --e) {
        cur[pos] = e;
        self(self, pos + 1, left - e);
      }
    };
    rec(rec, 0, deg);
    return out;
  };
  for (std::size_t b = 0; b < sizes.size(); ++b) {
    auto exps = one_block(sizes[b], degrees[b]);
    std::vector<std::vector<int>> next;
    for (const auto& head : block_exps)
      for (const auto& tail : exps) {
        auto e = head;
        e.insert(e.end(), tail.begin(), tail.end());
        next.push_back(std::move(e));
      }
    block_exps = std::move(next);
  }
  return block_exps;
}

/// Random equation of the given multidegree vanishing along f, smooth along
/// the image: a random element of the kernel of the substitution map on the
/// space of all monomials. Fails when the curve lies on no such
/// hypersurface or smoothness keeps failing.
template <FieldContext K>
std::optional<MultiForm<K>> random_equation_through(const K& F, CounterRng& rng,
                                                    const RationalCurve<K>& f,
                                                    const std::vector<int>& eq_degrees) {
  auto sizes = f.ambient().block_sizes();
  auto exps = enumerate_exponents(sizes, eq_degrees);
  int out_degree = 0;
  for (std::size_t b = 0; b < sizes.size(); ++b) out_degree += eq_degrees[b] * f.degrees()[b];

  Matrix<K> A = Matrix<K>::zero(F, out_degree + 1, static_cast<int>(exps.size()));
  for (std::size_t c = 0; c < exps.size(); ++c) {
    MultiForm<K> mono(sizes, eq_degrees);
    mono.add_term(F, exps[c], F.one());
    auto col = substitute(F, mono, f.blocks());
    for (int r = 0; r <= out_degree; ++r) A.at(r, static_cast<int>(c)) = col.coeff(r);
  }
  auto basis = kernel_basis(F, A);
  if (basis.empty()) return std::nullopt;

  for (int attempt = 0; attempt < 16; ++attempt) {
    std::vector<typename K::Element> v(exps.size(), F.zero());
    for (const auto& kvec : basis) {
      auto r = random_element(F, rng);
      for (std::size_t i = 0; i < v.size(); ++i) v[i] = F.add(v[i], F.mul(r, kvec[i]));
    }
    MultiForm<K> G(sizes, eq_degrees);
    for (std::size_t i = 0; i < v.size(); ++i) G.add_term(F, exps[i], v[i]);
    if (G.is_zero()) continue;
    auto X = Hypersurface<K>::cut_out(f.ambient(), G);
    try {
      require_smooth_along(F, jacobian_row(F, f, X));
      return G;
    } catch (const PreconditionError&) {
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Shape of one random test instance; the generator cycles through a fixed
/// list that exercises projective and biprojective ambients, equations of
/// degree up to 3, curve degrees up to 4, constant blocks, and multiple
/// covers (which produce negative summands and nonzero h^1).
struct InstanceCombo {
  enum class Strategy {
    ambient_only,      // X = P^n, random curve of degree d
    hyperplane,        // e = 1: random hyperplane, curve inside it
    kernel,            // random equation through a random curve
    conic_cover,       // n = 1, e = 2: degree-2 cover of a conic (d = 4)
    bi_ambient_only,   // X = P^a x P^b, random bidegree (d1, d2) curve
    bi_kernel,         // bidegree (1,1) equation through a random curve
    bi_diagonal        // (1,1) curve locus x0 y1 - x1 y0, f = (g, g)
  };
  Strategy strategy;
  int n = 0, e = 0, d = 0;       // projective parameters
  int a = 0, b = 0;              // biprojective ambient
  int d1 = 0, d2 = 0;            // biprojective curve degrees
};

inline std::vector<InstanceCombo> instance_combos() {
  using S = InstanceCombo::Strategy;
  std::vector<InstanceCombo> cs;
  for (int n = 1; n <= 3; ++n)
    for (int d = 0; d <= 4; ++d) cs.push_back({S::ambient_only, n, 0, d});
  for (int n = 1; n <= 3; ++n)
    for (int d = 0; d <= 4; ++d) cs.push_back({S::hyperplane, n, 1, d});
  // Plane conics and their point degenerations; higher d on a plane conic
  // only exists through covers.
  cs.push_back({S::kernel, 1, 2, 0});
  cs.push_back({S::kernel, 1, 2, 2});
  cs.push_back({S::conic_cover, 1, 2, 4});
  cs.push_back({S::kernel, 1, 3, 0});
  for (int n = 2; n <= 3; ++n)
    for (int e = 2; e <= 3; ++e)
      for (int d = 0; d <= 4; ++d) cs.push_back({S::kernel, n, e, d});
  const std::vector<std::pair<int, int>> small_bidegrees{{0, 1}, {1, 1}, {2, 2}};
  for (auto [d1, d2] : small_bidegrees) cs.push_back({S::bi_ambient_only, 0, 0, 0, 1, 1, d1, d2});
  const std::vector<std::pair<int, int>> p2p1_bidegrees{{1, 1}, {2, 1}};
  for (auto [d1, d2] : p2p1_bidegrees) cs.push_back({S::bi_ambient_only, 0, 0, 0, 2, 1, d1, d2});
  for (int d = 1; d <= 2; ++d) cs.push_back({S::bi_diagonal, 0, 0, 0, 1, 1, d, d});
  const std::vector<std::pair<int, int>> bi_kernel_bidegrees{{0, 1}, {0, 2}, {1, 1}, {2, 1}, {1, 2}};
  for (auto [d1, d2] : bi_kernel_bidegrees) cs.push_back({S::bi_kernel, 0, 0, 0, 2, 1, d1, d2});
  return cs;
}

/// Attempts to realize one combo; nullopt when the sampled data fails its
/// bounded retries (the caller then moves on to the next combo).
template <FieldContext K>
std::optional<Instance<K>> try_make_instance(const K& F, const InstanceCombo& c, CounterRng& rng) {
  using S = InstanceCombo::Strategy;
  switch (c.strategy) {
    case S::ambient_only: {
      auto space = AmbientSpace::projective(c.n);
      auto block = detail::random_basepoint_free(F, rng, c.n + 1, c.d);
      if (!block) return std::nullopt;
      return Instance<K>{Hypersurface<K>::ambient_only(space),
                         RationalCurve<K>(F, space, {*block})};
    }
    case S::hyperplane: {
      // Curve inside a hyperplane of P^(n+1): f = B g for a basis B of the
      // hyperplane's coordinate kernel. Smoothness is automatic, the
      // jacobian row being the nonzero constant normal vector.
      auto space = AmbientSpace::projective(c.n + 1);
      Matrix<K> lambda = Matrix<K>::zero(F, 1, c.n + 2);
      bool nonzero = false;
      while (!nonzero) {
        for (int j = 0; j < c.n + 2; ++j) {
          lambda.at(0, j) = detail::random_element(F, rng);
          nonzero = nonzero || !F.is_zero(lambda.at(0, j));
        }
      }
      auto basis = kernel_basis(F, lambda);
      auto g = detail::random_basepoint_free(F, rng, c.n + 1, c.d);
      if (!g) return std::nullopt;
      std::vector<BinaryForm<K>> f;
      for (int v = 0; v < c.n + 2; ++v) {
        auto acc = BinaryForm<K>::zero(F, c.d);
        for (std::size_t i = 0; i < basis.size(); ++i)
          acc = form_add(F, acc, form_scale(F, basis[i][v], (*g)[i]));
        f.push_back(std::move(acc));
      }
      MultiForm<K> G({c.n + 2}, {1});
      for (int v = 0; v < c.n + 2; ++v) {
        std::vector<int> exp(c.n + 2, 0);
        exp[v] = 1;
        G.add_term(F, exp, lambda.at(0, v));
      }
      return Instance<K>{Hypersurface<K>::cut_out(space, G),
                         RationalCurve<K>(F, space, {std::move(f)})};
    }
    case S::kernel: {
      auto space = AmbientSpace::projective(c.n + 1);
      for (int attempt = 0; attempt < 8; ++attempt) {
        auto block = detail::random_basepoint_free(F, rng, c.n + 2, c.d);
        if (!block) return std::nullopt;
        RationalCurve<K> f(F, space, {*block});
        if (auto G = detail::random_equation_through(F, rng, f, {c.e}))
          return Instance<K>{Hypersurface<K>::cut_out(space, *G), f};
      }
      return std::nullopt;
    }
    case S::conic_cover: {
      auto base = try_make_instance(F, {S::kernel, 1, 2, 2}, rng);
      if (!base) return std::nullopt;
      auto cover = detail::random_basepoint_free(F, rng, 2, 2);
      if (!cover) return std::nullopt;
      std::vector<BinaryForm<K>> f;
      for (const auto& g : base->f.blocks()[0])
        f.push_back(form_compose(F, g, (*cover)[0], (*cover)[1]));
      return Instance<K>{base->X, RationalCurve<K>(F, base->X.ambient, {std::move(f)})};
    }
    case S::bi_ambient_only: {
      auto space = AmbientSpace::biprojective(c.a, c.b);
      auto b1 = detail::random_basepoint_free(F, rng, c.a + 1, c.d1);
      auto b2 = detail::random_basepoint_free(F, rng, c.b + 1, c.d2);
      if (!b1 || !b2) return std::nullopt;
      return Instance<K>{Hypersurface<K>::ambient_only(space),
                         RationalCurve<K>(F, space, {*b1, *b2})};
    }
    case S::bi_kernel: {
      auto space = AmbientSpace::biprojective(c.a, c.b);
      for (int attempt = 0; attempt < 8; ++attempt) {
        auto b1 = detail::random_basepoint_free(F, rng, c.a + 1, c.d1);
        auto b2 = detail::random_basepoint_free(F, rng, c.b + 1, c.d2);
        if (!b1 || !b2) return std::nullopt;
        RationalCurve<K> f(F, space, {*b1, *b2});
        if (auto G = detail::random_equation_through(F, rng, f, {1, 1}))
          return Instance<K>{Hypersurface<K>::cut_out(space, *G), f};
      }
      return std::nullopt;
    }
    case S::bi_diagonal: {
      // f = (g, g) lands on the diagonal x0 y1 - x1 y0 of P^1 x P^1, whose
      // jacobian pulls back to (g1, -g0, -g1, g0): coprime by construction.
      auto space = AmbientSpace::biprojective(1, 1);
      auto g = detail::random_basepoint_free(F, rng, 2, c.d1);
      if (!g) return std::nullopt;
      MultiForm<K> G({2, 2}, {1, 1});
      G.add_term(F, {1, 0, 0, 1}, F.one());
      G.add_term(F, {0, 1, 1, 0}, F.neg(F.one()));
      return Instance<K>{Hypersurface<K>::cut_out(space, G),
                         RationalCurve<K>(F, space, {*g, *g})};
    }
  }
  return std::nullopt;
}

/// Single deterministic instance, independent of any other index.
template <FieldContext K>
Instance<K> random_instance(const K& F, std::uint64_t seed, int index,
                            const std::vector<InstanceCombo>& combos) {
  CounterRng rng(seed, static_cast<std::uint64_t>(index));
  for (std::size_t step = 0; step < combos.size(); ++step) {
    const auto& combo = combos[(static_cast<std::size_t>(index) + step) % combos.size()];
    if (auto inst = try_make_instance(F, combo, rng)) return *inst;
  }
  throw Error("Internal", "no realizable instance combo");
}

/// Deterministic batch of valid instances: instance i draws from stream i
/// of the seed and takes the first realizable combo starting at position i
/// of the cycle. Identical (seed, count) yield identical instances, however
/// the work is scheduled.
template <FieldContext K>
std::vector<Instance<K>> random_instances(const K& F, std::uint64_t seed, int count) {
  auto combos = instance_combos();
  std::vector<Instance<K>> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) out.push_back(random_instance(F, seed, i, combos));
  return out;
}

}  // namespace rcurves
