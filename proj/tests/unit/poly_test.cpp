#include <gtest/gtest.h>

#include <array>
#include <map>
#include <random>

#include "gds/error.hpp"
#include "gds/poly.hpp"

namespace gds {
namespace {

const VarId kH = VarId::h();
const VarId kX0 = VarId::x0();
const VarId kXa = VarId::node("a", 1);
const VarId kXb = VarId::node("b", 2);

Poly P(std::string_view text) {
  return parse_poly(text, [](std::string_view id) -> VarId {
    if (id == "X_a") return kXa;
    if (id == "X_b") return kXb;
    return default_resolve(id);
  });
}

// Dense exponent vectors over (h, X_0, X_a) for the convolution oracle.
using Dense = std::map<std::array<int, 3>, Rat>;

struct RandomPoly {
  Poly sparse;
  Dense dense;
};

RandomPoly random_poly(std::mt19937_64& rng, int terms) {
  RandomPoly out;
  const std::array<VarId, 3> vars = {kH, kX0, kXa};
  for (int i = 0; i < terms; ++i) {
    std::array<int, 3> e{};
    Monomial m;
    for (int k = 0; k < 3; ++k) {
      e[k] = static_cast<int>(rng() % 4);
      m = m * Monomial::of(vars[k], e[k]);
    }
    const Rat c(static_cast<std::int64_t>(rng() % 19) - 9, static_cast<std::int64_t>(rng() % 4) + 1);
    out.sparse += Poly::term(c, m);
    out.dense[e] += c;
  }
  return out;
}

Poly from_dense(const Dense& d) {
  const std::array<VarId, 3> vars = {kH, kX0, kXa};
  Poly out;
  for (const auto& [e, c] : d) {
    Monomial m;
    for (int k = 0; k < 3; ++k) m = m * Monomial::of(vars[k], e[k]);
    out += Poly::term(c, m);
  }
  return out;
}

TEST(Rat, NormalizesAndParses) {
  EXPECT_EQ(Rat(6, -4).to_string(), "-3/2");
  EXPECT_EQ(Rat::parse("-10/4"), Rat(-5, 2));
  EXPECT_EQ(Rat::parse("+7"), Rat(7));
  EXPECT_EQ(Rat(0, 5).denominator(), 1);
  EXPECT_THROW(Rat::parse("1.5"), Error);
  EXPECT_THROW(Rat::parse("1/0"), Error);
  EXPECT_THROW(Rat(1) / Rat(0), Error);
}

TEST(Poly, AdditiveIdentityAndCancellation) {
  const Poly p = P("h*X_0 - 3/2*X_a^2 + 1");
  EXPECT_EQ(add(p, Poly()), p);
  EXPECT_TRUE(sub(p, p).is_zero());
  EXPECT_TRUE((p - p).terms().empty());
}

TEST(Poly, DifferenceOfSquares) {
  EXPECT_EQ(mul(P("X_0 - 1"), P("X_0 + 1")), P("X_0^2 - 1"));
}

TEST(Poly, MultiplicationMatchesConvolutionOracle) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const RandomPoly a = random_poly(rng, 5);
    const RandomPoly b = random_poly(rng, 5);
    Dense conv;
    for (const auto& [ea, ca] : a.dense) {
      for (const auto& [eb, cb] : b.dense) {
        conv[{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}] += ca * cb;
      }
    }
    EXPECT_EQ(mul(a.sparse, b.sparse), from_dense(conv));
  }
}

TEST(Poly, RingAxioms) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    const Poly a = random_poly(rng, 4).sparse;
    const Poly b = random_poly(rng, 4).sparse;
    const Poly c = random_poly(rng, 4).sparse;
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
  }
}

TEST(Poly, ExactDivision) {
  const Poly num = P("X_0*(X_0^2-1)*X_b - X_a*(X_0^2-1)*(X_a^2-1)");
  EXPECT_EQ(divide_exact(num, P("X_0^2 - 1")), P("X_0*X_b - X_a*(X_a^2 - 1)"));
  try {
    divide_exact(P("X_0^2 - 1"), P("h"));
    FAIL() << "expected NotDivisible";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotDivisible);
  }
  EXPECT_FALSE(try_divide_exact(P("X_0^2 + 1"), P("X_0 - 1")));
  EXPECT_FALSE(try_divide_exact(P("X_a*X_0 + h"), P("X_0 + X_a")));
  EXPECT_THROW(divide_exact(P("X_0"), Poly()), Error);
  EXPECT_EQ(divide_by_var_power(P("h^3*X_0 + h^2"), kH, 2), P("h*X_0 + 1"));
}

TEST(Poly, DivisionInvertsMultiplication) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const Poly a = random_poly(rng, 5).sparse;
    Poly b = random_poly(rng, 4).sparse;
    if (b.is_zero()) b = Poly(1);
    EXPECT_EQ(divide_exact(a * b, b), a);
    EXPECT_EQ(divide_exact(P("h") * a, P("h")), a);
  }
}

TEST(Poly, Substitution) {
  const Poly p = P("X_0^2 - 1");
  EXPECT_TRUE(substitute(p, {{kX0, Poly(1)}}).is_zero());
  EXPECT_EQ(substitute(p, {}), p);
  EXPECT_EQ(substitute(p, {{kX0, Poly::var(kX0)}}), p);
  EXPECT_EQ(substitute(P("h*X_a - X_0"), {{kXa, P("X_0 + 2")}}), P("h*X_0 + 2*h - X_0"));
}

TEST(Poly, SubstitutionIsAHomomorphism) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 30; ++trial) {
    const Poly a = random_poly(rng, 4).sparse;
    const Poly b = random_poly(rng, 4).sparse;
    const Poly c = random_poly(rng, 4).sparse;
    const Substitution s = {{kX0, P("h*T + 1")}, {kXa, P("T^2 - h")}};
    EXPECT_EQ(substitute(a * b + c, s), substitute(a, s) * substitute(b, s) + substitute(c, s));
  }
}

TEST(Poly, PartialDerivative) {
  EXPECT_EQ(partial(P("X_0^3 - X_0"), kX0), P("3*X_0^2 - 1"));
  EXPECT_TRUE(partial(P("7/3"), kX0).is_zero());
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 50; ++trial) {
    const Poly a = random_poly(rng, 5).sparse;
    const Poly b = random_poly(rng, 5).sparse;
    for (VarId v : {kH, kX0, kXa}) {
      EXPECT_EQ(partial(a * b, v), partial(a, v) * b + a * partial(b, v));
    }
  }
}

TEST(Poly, OrderIn) {
  EXPECT_EQ(order_in(P("h^2*X_0 + h*X_a^2"), {kH}), 1U);
  EXPECT_FALSE(order_in(Poly(), {kH, kX0}).has_value());
  EXPECT_EQ(order_in(P("h^2*X_0 + X_0^3"), {kH, kX0}), 3U);
  EXPECT_EQ(order_in(P("5"), {kH}), 0U);
}

TEST(Poly, PrintingFollowsVariableOrder) {
  EXPECT_EQ(P("X_0 - X_0^3 + h*X_a").to_string(), "h*X_a - X_0^3 + X_0");
  EXPECT_EQ(P("-1/2*X_0^2 + 3").to_string(), "-1/2*X_0^2 + 3");
  EXPECT_EQ(Poly().to_string(), "0");
  EXPECT_EQ(P("X_b + X_a + T").to_string(), "X_a + X_b + T");
  EXPECT_EQ(P("-3/2*h*X_a^2").to_latex(), "-\\frac{3}{2} h X_{a}^{2}");
}

TEST(Poly, TextRoundTrip) {
  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 50; ++trial) {
    const Poly a = random_poly(rng, 6).sparse;
    EXPECT_EQ(P(a.to_string()), a);
  }
}

TEST(Poly, ReaderRejectsMalformedInput) {
  EXPECT_THROW(P("X_0 +"), Error);
  EXPECT_THROW(P("(X_0"), Error);
  EXPECT_THROW(P("1.5*X_0"), Error);
  EXPECT_THROW(P("X_0 ^"), Error);
}

TEST(VarOrder, PresentationOrder) {
  std::vector<VarId> vs = {VarId::w(), kXb, VarId::t(), kXa, kX0, kH};
  sort_vars(vs);
  EXPECT_EQ(vs, (std::vector<VarId>{kH, kX0, kXa, kXb, VarId::t(), VarId::w()}));
  EXPECT_TRUE(var_order_less(VarId::node("z", 1), VarId::node("a", 2)));
}

}  // namespace
}  // namespace gds
