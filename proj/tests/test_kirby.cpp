#include <doctest.h>

#include <algorithm>

#include "lbkit/homology.hpp"
#include "lbkit/kirby.hpp"
#include "support/seed.hpp"

using namespace lbkit;

namespace {

std::vector<std::int64_t> sorted(std::vector<std::int64_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Alternating count straight from the handle lists.
int chi_by_hand(const KirbyDiagram& d) {
  return 1 - static_cast<int>(d.dotted().size()) + static_cast<int>(d.two_handles().size()) - d.three_handles() +
         d.four_handles();
}

}  // namespace

TEST_CASE("X_{p,q} handle data") {
  const auto d = build_xpq(0, 0);
  CHECK(sorted(d.framings()) == std::vector<std::int64_t>{0, 0, 0});
  CHECK(d.handle_counts() == std::vector<int>{1, 1, 3, 0, 0});
  const auto x = build_xpq(3, -1);
  CHECK(x.winding_matrix() == (IntMatrix(1, 3) << 2, 2, 0).finished());
  CHECK(x.framing(x.handle_index(kGammaPlus)) == 3);
  CHECK(x.framing(x.handle_index(kGammaMinus)) == -1);
  CHECK(h1(build_xpq(7, -4)) == AbelianGroup::cyclic(2));
  CHECK(euler_characteristic(d) == 3);
  CHECK(euler_characteristic(d) == chi_by_hand(d));
}

TEST_CASE("diagram validation") {
  IntMatrix asym(2, 2);
  asym << 0, 1, 2, 0;
  CHECK_THROWS_AS(KirbyDiagram({"U"}, {{"h", std::nullopt}}, asym, 0, 0), KirbyError);
  IntMatrix dotted_framed(2, 2);
  dotted_framed << 1, 1, 1, 0;
  CHECK_THROWS_AS(KirbyDiagram({"U"}, {{"h", std::nullopt}}, dotted_framed, 0, 0), KirbyError);
  CHECK_THROWS_AS(KirbyDiagram({}, {{"h", std::nullopt}}, IntMatrix::Zero(2, 2), 0, 0), KirbyError);
  CHECK_THROWS_AS(KirbyDiagram({}, {{"h", std::nullopt}, {"h", std::nullopt}}, IntMatrix::Zero(2, 2), 0, 0), KirbyError);
  CHECK_THROWS_AS(KirbyDiagram({}, {}, IntMatrix::Zero(0, 0), -1, 0), KirbyError);
}

TEST_CASE("tracked curves must agree with the matrix") {
  const auto link = xpq_attaching_link(1, 2);
  IntMatrix lk(3, 3);
  lk << 0, 2, 2, 2, 5, 0, 2, 0, 2;  // framing of gamma+ disagrees
  CHECK_THROWS_AS(KirbyDiagram({"U"}, {{"gamma+", "gamma+"}, {"gamma-", "gamma-"}}, lk, 0, 0, link), KirbyError);
  lk(1, 1) = 1;
  CHECK_NOTHROW(KirbyDiagram({"U"}, {{"gamma+", "gamma+"}, {"gamma-", "gamma-"}}, lk, 0, 0, link));
  lk(0, 1) = lk(1, 0) = 4;  // winding disagrees
  CHECK_THROWS_AS(KirbyDiagram({"U"}, {{"gamma+", "gamma+"}, {"gamma-", "gamma-"}}, lk, 0, 0, link), KirbyError);
}

TEST_CASE("slides of the q-handle over mu") {
  const auto d = build_xpq(1, 5);
  const auto once = handle_slide(d, kGammaMinus, kMu, -1);
  CHECK(once.framing(once.handle_index(kGammaMinus)) == 3);
  const auto twice = handle_slide(once, kGammaMinus, kMu, -1);
  CHECK(twice.framing(twice.handle_index(kGammaMinus)) == 1);
  // On the nose: the matrix of X_{p,q-2}.
  CHECK(once.linking() == build_xpq(1, 3).linking());
  CHECK(handle_slide(d, kGammaMinus, kMu, 1).linking() == build_xpq(1, 7).linking());
}

TEST_CASE("slide over a split handle") {
  const auto d = double_of(build_xpq(2, 2));
  const auto s = handle_slide(d, kGammaPlus, meridian_id(kMu), 1);
  CHECK(s.framing(s.handle_index(kGammaPlus)) == 2);
}

TEST_CASE("slide rejects bad handles") {
  const auto d = build_xpq(0, 0);
  CHECK_THROWS_AS(handle_slide(d, kDottedCircle, kMu, 1), KirbyError);
  CHECK_THROWS_AS(handle_slide(d, kMu, kDottedCircle, 1), KirbyError);
  CHECK_THROWS_AS(handle_slide(d, kMu, kMu, 1), KirbyError);
  CHECK_THROWS_AS(handle_slide(d, kMu, kGammaPlus, 2), KirbyError);
  CHECK_THROWS_AS(handle_slide(d, "nope", kGammaPlus, 1), KirbyError);
}

TEST_CASE("slide changes framing by f_a + f_b + 2 lk") {
  auto g = lbkit::testing::rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    auto d = build_xpq(lbkit::testing::uniform(g, -5, 5), lbkit::testing::uniform(g, -5, 5));
    const std::vector<std::string> ids{std::string(kGammaPlus), std::string(kGammaMinus), std::string(kMu)};
    const auto a = ids[static_cast<std::size_t>(lbkit::testing::uniform(g, 0, 2))];
    auto b = a;
    while (b == a) b = ids[static_cast<std::size_t>(lbkit::testing::uniform(g, 0, 2))];
    const int eps = lbkit::testing::uniform(g, 0, 1) ? 1 : -1;
    const auto ia = d.handle_index(a), ib = d.handle_index(b);
    const auto expected = d.framing(ia) + d.framing(ib) + 2 * eps * d.two_handle_linking()(ia, ib);
    const auto s = handle_slide(d, a, b, eps);
    CHECK(s.framing(ia) == expected);
    CHECK(s.winding(ia) == d.winding(ia) + eps * d.winding(ib));
    CHECK(h1(s) == h1(d));
    CHECK(boundary_h1(s) == boundary_h1(d));
  }
}

TEST_CASE("doubling") {
  for (int p = -3; p <= 3; ++p) {
    for (int q = -3; q <= 3; ++q) {
      const auto x = build_xpq(p, q);
      const auto d = double_of(x);
      CHECK(sorted(d.framings()) == sorted({p, q, 0, 0, 0, 0}));
      CHECK(d.three_handles() == 1);
      CHECK(d.four_handles() == 1);
      CHECK(h1(d) == AbelianGroup::cyclic(2));
      CHECK(euler_characteristic(d) == 2 * euler_characteristic(x));
      CHECK(euler_characteristic(d) == chi_by_hand(d));
    }
  }
  // The handle count gives 1 - 1 + 6 - 1 + 1.
  CHECK(euler_characteristic(double_of(build_xpq(0, 0))) == 6);
  const auto d = double_of(build_xpq(0, 0));
  const auto m = d.handle_index(meridian_id(kGammaPlus));
  CHECK(d.two_handle_linking()(m, d.handle_index(kGammaPlus)) == 1);
  CHECK(d.two_handle_linking()(m, d.handle_index(kGammaMinus)) == 0);
}

TEST_CASE("sphere classes") {
  const auto x = build_xpq(3, -1);
  CHECK(sphere_square(sigma(x, 0)) == 2);
  CHECK(sphere_square(sigma(x, 7)) == 2);
  CHECK(sphere_square(sigma(build_xpq(0, 0), 4)) == 0);
  CHECK(sphere_square(sigma(x, 5)) == sphere_square(sigma(x, 0)));
  CHECK(sigma(x, 5).class_vector == sigma(x, 0).class_vector);
  // mu and its spanning disk meet the sphere once.
  const auto s = sigma(x, 0);
  CHECK(s.class_vector.dot(x.two_handle_linking().col(x.handle_index(kMu))) == 1);
  CHECK(sphere_square(sigma(double_of(x), 1)) == 2);
}

TEST_CASE("sphere tangles") {
  const auto x = build_xpq(0, 0);
  CHECK(sphere_tangle(sigma(x, 0)) == half_twist_tangle_uncolored(0));
  CHECK(sphere_tangle(sigma(x, 2)) == half_twist_tangle_uncolored(2));
  CHECK(sphere_tangle(sigma(x, -1)) == half_twist_tangle_uncolored(-1));
}
