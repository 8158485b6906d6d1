#include <vector>

#include "doctest.h"
#include "rcurves/geometry.hpp"

using namespace rcurves;

namespace {

using QF = RationalField;
using Form = BinaryForm<QF>;

Form qform(const QF& F, int degree, std::vector<long long> c) {
  std::vector<mpq_class> e;
  for (auto v : c) e.push_back(F.from_int(v));
  return Form(degree, std::move(e));
}

MultiForm<QF> quadric_p3(const QF& F) {
  // x0 x3 - x1 x2.
  MultiForm<QF> G({4}, {2});
  G.add_term(F, {1, 0, 0, 1}, F.one());
  G.add_term(F, {0, 1, 1, 0}, F.neg(F.one()));
  return G;
}

}  // namespace

TEST_CASE("ambient spaces") {
  auto p3 = AmbientSpace::projective(3);
  CHECK(p3.dim() == 3);
  CHECK(p3.blocks() == 1);
  CHECK(p3.block_sizes() == std::vector<int>{4});
  CHECK(p3.to_string() == "P^3");
  auto prod = AmbientSpace::biprojective(2, 1);
  CHECK(prod.dim() == 3);
  CHECK(prod.block_sizes() == std::vector<int>{3, 2});
  CHECK(prod.to_string() == "P^2 x P^1");
  CHECK(!(p3 == prod));
  CHECK_THROWS_AS(AmbientSpace::projective(0), ValidationError);
  CHECK_THROWS_AS(AmbientSpace::biprojective(1, 0), ValidationError);
}

TEST_CASE("hypersurface constructors and dimensions") {
  QF F;
  auto p3 = AmbientSpace::projective(3);
  auto X = Hypersurface<QF>::cut_out(p3, quadric_p3(F));
  CHECK(X.dim() == 2);
  CHECK(Hypersurface<QF>::ambient_only(p3).dim() == 3);

  MultiForm<QF> wrong({3}, {2});
  wrong.add_term(F, {2, 0, 0}, F.one());
  CHECK_THROWS_AS(Hypersurface<QF>::cut_out(p3, wrong), ValidationError);
  MultiForm<QF> zero({4}, {2});
  CHECK_THROWS_AS(Hypersurface<QF>::cut_out(p3, zero), ValidationError);
  MultiForm<QF> constant({4}, {0});
  constant.add_term(F, {0, 0, 0, 0}, F.one());
  CHECK_THROWS_AS(Hypersurface<QF>::cut_out(p3, constant), ValidationError);
}

TEST_CASE("pairing of the anticanonical degree against curve classes") {
  QF F;
  auto p3 = AmbientSpace::projective(3);
  CHECK(Hypersurface<QF>::ambient_only(p3).c1_pairing({2}) == 8);     // (3+1) * 2
  CHECK(Hypersurface<QF>::cut_out(p3, quadric_p3(F)).c1_pairing({1}) == 2);

  auto prod = AmbientSpace::biprojective(2, 1);
  CHECK(Hypersurface<QF>::ambient_only(prod).c1_pairing({1, 2}) == 7);  // 3*1 + 2*2
  MultiForm<QF> G({3, 2}, {1, 1});
  G.add_term(F, {1, 0, 0, 0, 1}, F.one());
  G.add_term(F, {0, 1, 0, 1, 0}, F.neg(F.one()));
  CHECK(Hypersurface<QF>::cut_out(prod, G).c1_pairing({0, 1}) == 1);   // 2*0 + 1*1
}

TEST_CASE("curves must be basepoint-free per block") {
  QF F;
  auto p1 = AmbientSpace::projective(1);
  auto s = qform(F, 1, {1, 0});
  auto t = qform(F, 1, {0, 1});
  RationalCurve<QF> ok(F, p1, {{s, t}});
  CHECK(ok.degrees() == std::vector<int>{1});
  CHECK(ok.flat().size() == 2);

  auto s2 = qform(F, 2, {1, 0, 0});
  auto st = qform(F, 2, {0, 1, 0});
  CHECK_THROWS_AS(RationalCurve<QF>(F, p1, {{s2, st}}), PreconditionError);
  auto z = Form::zero(F, 1);
  CHECK_THROWS_AS(RationalCurve<QF>(F, p1, {{z, z}}), PreconditionError);
  CHECK_THROWS_AS(RationalCurve<QF>(F, p1, {{s, qform(F, 2, {0, 1, 0})}}), ValidationError);
  CHECK_THROWS_AS(RationalCurve<QF>(F, p1, {{s, t, t}}), ValidationError);
  CHECK_THROWS_AS(RationalCurve<QF>(F, AmbientSpace::biprojective(1, 1), {{s, t}}),
                  ValidationError);

  // Zero components and constants are fine as long as the block has no
  // common root.
  auto p2 = AmbientSpace::projective(2);
  RationalCurve<QF> point(F, p2,
                          {{Form::constant(F, F.one()), Form::zero(F, 0), Form::zero(F, 0)}});
  CHECK(point.degrees() == std::vector<int>{0});
}

TEST_CASE("incidence of curves and hypersurfaces") {
  QF F;
  auto p3 = AmbientSpace::projective(3);
  auto X = Hypersurface<QF>::cut_out(p3, quadric_p3(F));
  auto s = qform(F, 1, {1, 0});
  auto t = qform(F, 1, {0, 1});
  auto z = Form::zero(F, 1);
  RationalCurve<QF> on(F, p3, {{s, t, z, z}});
  RationalCurve<QF> off(F, p3, {{s, z, z, t}});
  CHECK(on_hypersurface(F, on, X));
  CHECK(!on_hypersurface(F, off, X));
  CHECK(on_hypersurface(F, off, Hypersurface<QF>::ambient_only(p3)));
  auto p2 = AmbientSpace::projective(2);
  RationalCurve<QF> elsewhere(F, p2, {{s, t, z}});
  CHECK_THROWS_AS(on_hypersurface(F, elsewhere, X), ValidationError);
}
