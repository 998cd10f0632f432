#include <gtest/gtest.h>

#include <random>

#include "gds/corpus.hpp"
#include "gds/derivations.hpp"
#include "gds/error.hpp"
#include "test_trees.hpp"

namespace gds {
namespace {

using testing::P;

TEST(Derivations, BmlImages) {
  const auto lt = testing::bml();
  const auto& t = lt.tree;
  const auto d = build_derivation(lt, 2);
  EXPECT_EQ(d.image(VarId::x0()), P(t, "h^2"));
  EXPECT_EQ(d.image(node_var(t, "e0")), P(t, "h*(3*X_0^2 - 1)"));
  EXPECT_EQ(d.image(node_var(t, "e1")),
            P(t, "2*h*X_0*(X_e0^2 - 1) + 2*(X_0^2 - 1)*(3*X_0^2 - 1)*X_e0"));
  EXPECT_TRUE(d.image(VarId::h()).is_zero());
}

TEST(Derivations, TrivialTree) {
  const auto lt = testing::trivial_labelled();
  const auto d = build_derivation(lt, 0);
  EXPECT_EQ(d.image(VarId::x0()), Poly(1));
  const auto p = build_presentation(lt);
  const auto r = verify_kernel(d, p);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.checked, 0U);
}

TEST(Derivations, Errors) {
  const auto lt = testing::bml();
  EXPECT_THROW(
      {
        try {
          build_derivation(lt, 1);
        } catch (const Error& e) {
          EXPECT_EQ(e.code(), ErrorCode::kMTooSmall);
          throw;
        }
      },
      Error);
  try {
    build_derivation(lt, 2, P(lt.tree, "h + h^2"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kHDividesG);
  }
  try {
    build_derivation(lt, 2, P(lt.tree, "1 + X_0"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
  }
}

TEST(Derivations, ApplyBasics) {
  const auto lt = testing::bml();
  const auto d = build_derivation(lt, 2);
  EXPECT_TRUE(apply(d, Poly::var(VarId::h())).is_zero());
  EXPECT_TRUE(apply(d, Poly(Rat(7, 3))).is_zero());
}

TEST(Derivations, Leibniz) {
  const auto lt = testing::bml();
  const auto& t = lt.tree;
  const auto d = build_derivation(lt, 3);
  const std::vector<VarId> vars = {VarId::h(), VarId::x0(), node_var(t, "e0"), node_var(t, "e1")};
  std::mt19937_64 rng(5);
  auto rand_poly = [&] {
    Poly out;
    for (int i = 0; i < 4; ++i) {
      Monomial m;
      for (const auto& v : vars) m = m * Monomial::of(v, static_cast<std::uint32_t>(rng() % 3));
      out += Poly::term(Rat(static_cast<std::int64_t>(rng() % 11) - 5, 1 + static_cast<std::int64_t>(rng() % 3)), m);
    }
    return out;
  };
  for (int i = 0; i < 50; ++i) {
    const Poly a = rand_poly();
    const Poly b = rand_poly();
    EXPECT_EQ(apply(d, a * b), apply(d, a) * b + a * apply(d, b));
  }
}

TEST(Derivations, BmlChecks) {
  const auto lt = testing::bml();
  const auto p = build_presentation(lt);
  const auto d = build_derivation(lt, 2);
  EXPECT_TRUE(verify_kernel(d, p).ok());
  const auto c = stability_certificate(d, p, "e0", "e1");
  EXPECT_TRUE(c.verified);
  EXPECT_EQ(c.c1, P(lt.tree, "h"));
  EXPECT_TRUE(triangularity_check(d, p).ok());
  EXPECT_TRUE(h_order_check(d, p).ok());
  EXPECT_EQ(nilpotency_trace(d, Poly::var(VarId::x0()), 5), 2);
  for (const auto& [e, delta] : p.gens0) EXPECT_EQ(nilpotency_trace(d, delta, 1), 1);
  const Poly xe1 = Poly::var(node_var(lt.tree, "e1"));
  const int k = nilpotency_trace(d, xe1, nilpotency_bound(d, xe1));
  EXPECT_GT(k, 2);
  EXPECT_LE(k, nilpotency_bound(d, xe1));
  EXPECT_THROW(nilpotency_trace(d, xe1, 2), Error);
  EXPECT_TRUE(nilpotency_check(d, p).ok());
}

TEST(Derivations, BmlFixedPointOrders) {
  const auto lt = testing::bml();
  const auto p = build_presentation(lt);
  const auto comps = fiber_components(p);
  const auto d = build_derivation(lt, 2);
  for (const auto& c : comps) {
    if (c.leaf == "e11") EXPECT_EQ(fixed_point_order(d, c), 1);
    if (c.leaf == "e21") EXPECT_EQ(fixed_point_order(d, c), 0);
  }
  EXPECT_TRUE(fixed_point_check(d, p, comps).ok());
  EXPECT_TRUE(fixed_point_check(build_derivation(lt, 4), p, comps).ok());
}

TEST(Derivations, Strange) {
  const auto lt = testing::strange_labelled();
  const auto p = build_presentation(lt);
  const auto d = build_derivation(lt, 2);
  EXPECT_TRUE(stability_certificate(d, p, "e0", "e1").verified);
  EXPECT_TRUE(stability_certificate(d, p, "e0", "e2").verified);
  for (const auto& r : derivation_suite(d, p, fiber_components(p))) EXPECT_TRUE(r.ok()) << r.name;
}

TEST(Derivations, MultiplierScalesImages) {
  const auto lt = testing::bml();
  const auto p = build_presentation(lt);
  const Poly g = P(lt.tree, "2 - h^2");
  const auto d1 = build_derivation(lt, 2);
  const auto dg = build_derivation(lt, 2, g);
  for (const auto& [v, img] : d1.images) EXPECT_EQ(dg.image(v), g * img);
  EXPECT_TRUE(verify_kernel(dg, p).ok());
  EXPECT_TRUE(stability_check(dg, p).ok());
}

TEST(Derivations, RandomCorpus) {
  TreeGenerator gen(23);
  for (int i = 0; i < 30; ++i) {
    const auto lt = gen.labelled();
    const auto p = build_presentation(lt);
    const auto comps = fiber_components(p);
    for (int m = lt.tree.height(); m <= lt.tree.height() + 2; ++m) {
      const auto d = build_derivation(lt, m);
      for (const auto& r : derivation_suite(d, p, comps)) {
        EXPECT_TRUE(r.ok()) << r.name << " m=" << m << " " << (r.ok() ? "" : r.failures.front());
      }
    }
  }
}

}  // namespace
}  // namespace gds
