#include <vector>

#include "doctest.h"
#include "rcurves/syzygy.hpp"

using namespace rcurves;

namespace {

using QF = RationalField;
using Form = BinaryForm<QF>;

Form qform(const QF& F, int degree, std::vector<long long> c) {
  std::vector<mpq_class> e;
  for (auto v : c) e.push_back(F.from_int(v));
  return Form(degree, std::move(e));
}

// The row (s, t): O(0)^2 -> O(1).
GradedMatrix<QF> row_s_t(const QF& F) {
  GradedMatrix<QF> phi(F, GradedFreeModule{{0, 0}}, GradedFreeModule{{1}});
  phi.set_entry(F, 0, 0, qform(F, 1, {1, 0}));
  phi.set_entry(F, 0, 1, qform(F, 1, {0, 1}));
  return phi;
}

// The row (s^2, st, t^2): O(0)^3 -> O(2).
GradedMatrix<QF> row_veronese(const QF& F) {
  GradedMatrix<QF> phi(F, GradedFreeModule{{0, 0, 0}}, GradedFreeModule{{2}});
  phi.set_entry(F, 0, 0, qform(F, 2, {1, 0, 0}));
  phi.set_entry(F, 0, 1, qform(F, 2, {0, 1, 0}));
  phi.set_entry(F, 0, 2, qform(F, 2, {0, 0, 1}));
  return phi;
}

}  // namespace

TEST_CASE("graded matrix enforces entry degrees") {
  QF F;
  GradedMatrix<QF> phi(F, GradedFreeModule{{0, 2}}, GradedFreeModule{{1}});
  CHECK(phi.entry_degree(0, 0) == 1);
  CHECK(phi.entry_degree(0, 1) == -1);
  CHECK_THROWS_AS(phi.set_entry(F, 0, 0, qform(F, 2, {1, 0, 0})), ValidationError);
  CHECK_THROWS_AS(phi.set_entry(F, 0, 1, qform(F, 1, {1, 0})), ValidationError);
  phi.set_entry(F, 0, 1, Form::zero(F, 0));  // forced zero entries accept zero
  CHECK(phi.is_zero(F));
}

TEST_CASE("composition respects grading and kills kernel inclusions") {
  QF F;
  auto phi = row_s_t(F);
  GradedMatrix<QF> psi(F, GradedFreeModule{{-1}}, GradedFreeModule{{0, 0}});
  psi.set_entry(F, 0, 0, qform(F, 1, {0, 1}));                // t
  psi.set_entry(F, 1, 0, qform(F, 1, {-1, 0}));               // -s
  auto c = compose(F, phi, psi);
  CHECK(c.source().twists == std::vector<int>{-1});
  CHECK(c.target().twists == std::vector<int>{1});
  CHECK(c.is_zero(F));
  CHECK_THROWS_AS(compose(F, phi, phi), ValidationError);
}

TEST_CASE("section spaces of a kernel sheaf at a fixed twist") {
  QF F;
  auto phi = row_veronese(F);
  auto [l0, b0] = sections_at_twist(F, phi, 0);
  CHECK(b0.empty());
  auto [l1, b1] = sections_at_twist(F, phi, 1);
  CHECK(l1.total == 6);
  CHECK(b1.size() == 2);
  auto [l2, b2] = sections_at_twist(F, phi, 2);
  CHECK(b2.size() == 4);  // h0(O(1)^2) after the kernel splits off
}

TEST_CASE("kernel of (s, t) is O(-1) embedded by (t, -s)") {
  QF F;
  auto kb = kernel_bundle(F, row_s_t(F));
  CHECK(kb.splitting == SplittingType({-1}));
  CHECK(kb.inclusion.source().twists == std::vector<int>{-1});
  CHECK(form_eq(F, kb.inclusion.entry(0, 0), qform(F, 1, {0, 1})));
  CHECK(form_eq(F, kb.inclusion.entry(1, 0), qform(F, 1, {-1, 0})));
  CHECK(compose(F, row_s_t(F), kb.inclusion).is_zero(F));
}

TEST_CASE("kernel of the veronese row is O(-1)^2 with the standard syzygies") {
  QF F;
  auto kb = kernel_bundle(F, row_veronese(F));
  CHECK(kb.splitting == SplittingType({-1, -1}));
  // Column 0: (t, -s, 0); column 1: (0, t, -s).
  CHECK(form_eq(F, kb.inclusion.entry(0, 0), qform(F, 1, {0, 1})));
  CHECK(form_eq(F, kb.inclusion.entry(1, 0), qform(F, 1, {-1, 0})));
  CHECK(kb.inclusion.entry(2, 0).is_zero(F));
  CHECK(kb.inclusion.entry(0, 1).is_zero(F));
  CHECK(form_eq(F, kb.inclusion.entry(1, 1), qform(F, 1, {0, 1})));
  CHECK(form_eq(F, kb.inclusion.entry(2, 1), qform(F, 1, {-1, 0})));
  CHECK(compose(F, row_veronese(F), kb.inclusion).is_zero(F));
}

TEST_CASE("kernel of a two-row map") {
  QF F;
  // [s t 0; 0 s t]: O(1)^3 -> O(2)^2 has kernel O(-1) via (t^2, -st, s^2).
  GradedMatrix<QF> phi(F, GradedFreeModule{{1, 1, 1}}, GradedFreeModule{{2, 2}});
  phi.set_entry(F, 0, 0, qform(F, 1, {1, 0}));
  phi.set_entry(F, 0, 1, qform(F, 1, {0, 1}));
  phi.set_entry(F, 1, 1, qform(F, 1, {1, 0}));
  phi.set_entry(F, 1, 2, qform(F, 1, {0, 1}));
  auto kb = kernel_bundle(F, phi);
  CHECK(kb.splitting == SplittingType({-1}));
  CHECK(form_eq(F, kb.inclusion.entry(0, 0), qform(F, 2, {0, 0, 1})));
  CHECK(form_eq(F, kb.inclusion.entry(1, 0), qform(F, 2, {0, -1, 0})));
  CHECK(form_eq(F, kb.inclusion.entry(2, 0), qform(F, 2, {1, 0, 0})));
  CHECK(compose(F, phi, kb.inclusion).is_zero(F));
}

TEST_CASE("kernel of an isomorphism is the zero module") {
  QF F;
  GradedMatrix<QF> id(F, GradedFreeModule{{0, 3}}, GradedFreeModule{{0, 3}});
  id.set_entry(F, 0, 0, Form::constant(F, F.one()));
  id.set_entry(F, 1, 1, Form::constant(F, F.one()));
  auto kb = kernel_bundle(F, id);
  CHECK(kb.splitting.rank() == 0);
  CHECK(kb.inclusion.source().rank() == 0);
}

TEST_CASE("maps that drop rank on the line are rejected") {
  QF F;
  // (s^2, st) shares the factor s.
  GradedMatrix<QF> phi(F, GradedFreeModule{{0, 0}}, GradedFreeModule{{2}});
  phi.set_entry(F, 0, 0, qform(F, 2, {1, 0, 0}));
  phi.set_entry(F, 0, 1, qform(F, 2, {0, 1, 0}));
  CHECK_THROWS_WITH_AS(kernel_bundle(F, phi), doctest::Contains("common factor"),
                       PreconditionError);

  // [s t; t s] is generically invertible but degenerates where s^2 = t^2.
  GradedMatrix<QF> sq(F, GradedFreeModule{{0, 0}}, GradedFreeModule{{1, 1}});
  sq.set_entry(F, 0, 0, qform(F, 1, {1, 0}));
  sq.set_entry(F, 0, 1, qform(F, 1, {0, 1}));
  sq.set_entry(F, 1, 0, qform(F, 1, {0, 1}));
  sq.set_entry(F, 1, 1, qform(F, 1, {1, 0}));
  CHECK_THROWS_AS(kernel_bundle(F, sq), PreconditionError);

  // A row of rank zero over the function field.
  GradedMatrix<QF> more_rows(F, GradedFreeModule{{0}}, GradedFreeModule{{1, 1}});
  more_rows.set_entry(F, 0, 0, qform(F, 1, {1, 0}));
  more_rows.set_entry(F, 1, 0, qform(F, 1, {0, 1}));
  CHECK_THROWS_AS(kernel_bundle(F, more_rows), PreconditionError);
}

TEST_CASE("graded minors expand with signs and degree bookkeeping") {
  QF F;
  GradedMatrix<QF> sq(F, GradedFreeModule{{0, 0}}, GradedFreeModule{{1, 1}});
  sq.set_entry(F, 0, 0, qform(F, 1, {1, 0}));
  sq.set_entry(F, 0, 1, qform(F, 1, {0, 1}));
  sq.set_entry(F, 1, 0, qform(F, 1, {0, 1}));
  sq.set_entry(F, 1, 1, qform(F, 1, {1, 0}));
  CHECK(form_eq(F, detail::graded_minor(F, sq, {0, 1}), qform(F, 2, {1, 0, -1})));

  GradedMatrix<QF> anti(F, GradedFreeModule{{0, 0}}, GradedFreeModule{{0, 0}});
  anti.set_entry(F, 0, 1, Form::constant(F, F.one()));
  anti.set_entry(F, 1, 0, Form::constant(F, F.one()));
  CHECK(form_eq(F, detail::graded_minor(F, anti, {0, 1}), Form::constant(F, F.from_int(-1))));
}

TEST_CASE("coordinates of sections in the kernel generators") {
  QF F;
  auto kb = kernel_bundle(F, row_s_t(F));
  const auto& psi = kb.inclusion;

  auto w1 = express_in_kernel(F, psi, {qform(F, 1, {0, 1}), qform(F, 1, {-1, 0})}, 1);
  REQUIRE(w1.size() == 1);
  CHECK(form_eq(F, w1[0], Form::constant(F, F.one())));

  auto w2 = express_in_kernel(F, psi, {qform(F, 2, {0, 1, 0}), qform(F, 2, {-1, 0, 0})}, 2);
  REQUIRE(w2.size() == 1);
  CHECK(form_eq(F, w2[0], qform(F, 1, {1, 0})));

  CHECK_THROWS_AS(express_in_kernel(F, psi, {qform(F, 1, {1, 0}), qform(F, 1, {0, 1})}, 1),
                  PreconditionError);
  CHECK_THROWS_AS(express_in_kernel(F, psi, {qform(F, 2, {0, 1, 0}), qform(F, 1, {-1, 0})}, 1),
                  ValidationError);
  CHECK_THROWS_AS(express_in_kernel(F, psi, {qform(F, 1, {0, 1})}, 1), ValidationError);
}

TEST_CASE("section counts of the kernel match its splitting at every twist") {
  QF F;
  auto check_profile = [&](const GradedMatrix<QF>& phi) {
    auto kb = kernel_bundle(F, phi);
    for (int k = -3; k <= 4; ++k) {
      auto [layout, basis] = sections_at_twist(F, phi, k);
      CHECK(static_cast<long long>(basis.size()) == kb.splitting.h0(k));
    }
  };
  check_profile(row_s_t(F));
  check_profile(row_veronese(F));
}

TEST_CASE("twist layouts skip components with no sections") {
  QF F;
  auto L = TwistLayout::build(GradedFreeModule{{1, -2, 0}}, 0);
  CHECK(L.total == 3);
  CHECK(L.component_degree == std::vector<int>{1, -1, 0});
  CHECK(L.offset == std::vector<int>{0, -1, 2});
  std::vector<mpq_class> flat{F.from_int(3), F.from_int(5), F.from_int(7)};
  auto forms = unflatten_section(F, L, flat);
  REQUIRE(forms.size() == 3);
  CHECK(form_eq(F, forms[0], qform(F, 1, {3, 5})));
  CHECK(forms[1].is_zero(F));
  CHECK(form_eq(F, forms[2], Form::constant(F, F.from_int(7))));
}
