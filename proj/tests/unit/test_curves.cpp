#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "discop/curves.hpp"
#include "discop/error.hpp"
#include "discop/specimens.hpp"

using namespace discop;

namespace {

constexpr double kPi = std::numbers::pi;

Curve line_curve(std::function<double(double)> f) {
  return Curve(Interval{0.0, 1.0}, 1, [f](double t, std::span<double> out) { out[0] = f(t); }, false);
}

Curve circle() {
  return Curve(Interval{0.0, 1.0}, 2,
               [](double t, std::span<double> out) {
                 out[0] = std::cos(2 * kPi * t);
                 out[1] = std::sin(2 * kPi * t);
               },
               true);
}

}  // namespace

TEST(Curve, Validation) {
  EXPECT_THROW(Curve(Interval{1.0, 1.0}, 1, [](double, std::span<double> o) { o[0] = 0; }, false), DomainError);
  EXPECT_THROW(Curve(Interval{0.0, kInf}, 1, [](double, std::span<double> o) { o[0] = 0; }, false), DomainError);
  EXPECT_THROW(Curve(Interval{0.0, 1.0}, 0, [](double, std::span<double>) {}, false), DomainError);
  EXPECT_THROW(Curve(Interval{0.0, 1.0}, 1, [](double t, std::span<double> o) { o[0] = 1.0 / (t - 0.5); }, false),
               DomainError);
  // Open segment flagged as closed.
  EXPECT_THROW(Curve(Interval{0.0, 1.0}, 1, [](double t, std::span<double> o) { o[0] = t; }, true), DomainError);
  EXPECT_NO_THROW(circle());
  EXPECT_LT(circle().closure_defect(), 1e-9);
}

TEST(Curve, Components) {
  const Curve c = Curve::from_components(Interval{0.0, 2.0}, {[](double t) { return t; }, [](double t) { return t * t; }}, false);
  EXPECT_EQ(c.dimension(), 2u);
  EXPECT_EQ(c(1.5)[1], 2.25);
  EXPECT_EQ(c.component(0, 0.5), 0.5);
  EXPECT_EQ(c.component_function(1)(1.5), 2.25);
  EXPECT_THROW(c(2.5), DomainError);
}

TEST(Specimens, Shapes) {
  const Curve s = specimens::spiral();
  EXPECT_NEAR(s(1.0)[0], -1.0, 1e-15);
  EXPECT_NEAR(s(0.5)[1], 0.5, 1e-15);
  EXPECT_FALSE(s.closed());
  const Curve h = specimens::helix();
  EXPECT_EQ(h.dimension(), 3u);
  EXPECT_EQ(h.domain().hi, 2.0);
  EXPECT_NEAR(h(0.25)[1], 1.0, 1e-15);
  const Curve c = specimens::closed_figure();
  EXPECT_TRUE(c.closed());
  EXPECT_NEAR(c(0.0)[0], 3.0, 1e-15);
  EXPECT_NEAR(c(0.25)[0], -1.0, 1e-15);
  EXPECT_THROW(specimens::by_name("nope"), DomainError);
  for (const auto& name : specimens::names()) EXPECT_NO_THROW(specimens::by_name(name));
}

TEST(Strategy, Names) {
  for (auto s : {ExtensionStrategy::ConstantPad, ExtensionStrategy::TranslateAndPad, ExtensionStrategy::Periodic,
                 ExtensionStrategy::AffineRemap})
    EXPECT_EQ(parse_strategy(to_string(s)), s);
  EXPECT_THROW(parse_strategy("mirror"), DomainError);
  EXPECT_EQ(default_strategy(make_bernstein(), false), ExtensionStrategy::AffineRemap);
  EXPECT_EQ(default_strategy(make_szasz_mirakjan(), false), ExtensionStrategy::TranslateAndPad);
  EXPECT_EQ(default_strategy(make_generalized_sampling(bspline_kernel(3)), true), ExtensionStrategy::Periodic);
  EXPECT_EQ(default_strategy(make_generalized_sampling(bspline_kernel(3)), false), ExtensionStrategy::ConstantPad);
}

TEST(ExtendScalar, Examples) {
  const auto pad = extend_scalar([](double t) { return t; }, Interval{2.0, 3.0}, ExtensionStrategy::ConstantPad);
  EXPECT_EQ(pad(0.0), 2.0);
  EXPECT_EQ(pad(10.0), 3.0);
  EXPECT_EQ(pad(2.5), 2.5);
  const auto tr = extend_scalar([](double t) { return t * t; }, Interval{1.0, 2.0}, ExtensionStrategy::TranslateAndPad);
  EXPECT_EQ(tr(0.5), 2.25);
  EXPECT_EQ(tr(5.0), 4.0);
  const auto per = extend_scalar([](double t) { return t * (1 - t); }, Interval{0.0, 1.0}, ExtensionStrategy::Periodic);
  EXPECT_NEAR(per(2.25), 0.1875, 1e-15);
  EXPECT_NEAR(per(-0.75), 0.1875, 1e-15);
  EXPECT_THROW(extend_scalar([](double t) { return t; }, Interval{0.0, 1.0}, ExtensionStrategy::AffineRemap), DomainError);
}

TEST(SupError, Examples) {
  const Curve g = line_curve([](double t) { return t; });
  EXPECT_EQ(sup_error(g, g, 50), 0.0);
  EXPECT_NEAR(sup_error(g, line_curve([](double t) { return t + 0.5; }), 11), 0.5, 1e-15);
  EXPECT_NEAR(sup_error(line_curve([](double t) { return t * t; }), g, 101), 0.25, 1e-15);
  EXPECT_THROW(sup_error(g, circle(), 10), DomainError);
}

TEST(AffineTransform, Examples) {
  const Curve c = circle();
  const double id[] = {1, 0, 0, 1}, zero[] = {0, 0};
  EXPECT_EQ(sup_error(c, affine_transform(c, id, zero), 37), 0.0);
  const Curve big = scale(c, 2.0);
  for (double t : {0.0, 0.1, 0.6}) EXPECT_NEAR(std::hypot(big(t)[0], big(t)[1]), 2.0, 1e-12);
  const double rot[] = {0, -1, 1, 0};
  const Curve r = affine_transform(c, rot, zero);
  EXPECT_NEAR(r(0.0)[0], 0.0, 1e-12);
  EXPECT_NEAR(r(0.0)[1], 1.0, 1e-12);
  EXPECT_TRUE(r.closed());
  const double bad[] = {1, 0, 0};
  EXPECT_THROW(affine_transform(c, bad, zero), DomainError);
}

TEST(ApplyOperator, ConstantCurveIsPreserved) {
  const Curve c = specimens::constant();
  std::vector<std::pair<OperatorFamily, ExtensionStrategy>> cases{
      {make_generalized_sampling(bspline_kernel(3)), ExtensionStrategy::ConstantPad},
      {make_generalized_sampling(bspline_kernel(3)), ExtensionStrategy::Periodic},
      {make_generalized_sampling(fejer_kernel()), ExtensionStrategy::ConstantPad},
      {make_szasz_mirakjan(), ExtensionStrategy::TranslateAndPad},
      {make_baskakov(), ExtensionStrategy::TranslateAndPad},
      {make_bernstein(), ExtensionStrategy::AffineRemap},
  };
  for (const auto& [fam, st] : cases) {
    const Curve a = apply_operator(fam, c, 13, st);
    EXPECT_LT(sup_error(c, a, 60), 3.0 * fam.default_tolerance() + 1e-12) << fam.name() << ' ' << to_string(st);
  }
}

TEST(ApplyOperator, Compatibility) {
  const Curve s = specimens::spiral();
  EXPECT_THROW(apply_operator(make_bernstein(), s, 5, ExtensionStrategy::ConstantPad), DomainError);
  EXPECT_THROW(apply_operator(make_szasz_mirakjan(), s, 5, ExtensionStrategy::Periodic), DomainError);
  EXPECT_THROW(apply_operator(make_generalized_sampling(bspline_kernel(3)), s, 5, ExtensionStrategy::Periodic),
               DomainError);
  EXPECT_THROW(apply_operator(make_generalized_sampling(bspline_kernel(3)), s, 0, ExtensionStrategy::ConstantPad),
               DomainError);
  // A bijection onto a half-line or the whole line cannot be affine.
  EXPECT_THROW(apply_operator(make_szasz_mirakjan(), s, 5, ExtensionStrategy::AffineRemap), DomainError);
  EXPECT_THROW(apply_operator(make_generalized_sampling(bspline_kernel(3)), s, 5, ExtensionStrategy::AffineRemap),
               DomainError);
}

TEST(ApplyOperator, BernsteinSpiralConverges) {
  const Curve s = specimens::spiral();
  const auto b = make_bernstein();
  double prev = kInf;
  for (int n : {30, 50, 100}) {
    const double e = sup_error(s, apply_operator(b, s, n, ExtensionStrategy::AffineRemap), 400);
    EXPECT_LT(e, prev);
    prev = e;
  }
}

TEST(ApplyOperator, PeriodicClosure) {
  const Curve c = specimens::closed_figure();
  const auto m3 = make_generalized_sampling(bspline_kernel(3));
  for (int n : {10, 15}) {
    const Curve a = apply_operator(m3, c, n, ExtensionStrategy::Periodic);
    EXPECT_LT(a.closure_defect(), 1e-9);
    EXPECT_TRUE(a.closed());
  }
  const auto fej = make_generalized_sampling(fejer_kernel(), 1e-6);
  EXPECT_LT(apply_operator(fej, c, 8, ExtensionStrategy::Periodic).closure_defect(), 2e-6);
}

TEST(ApplyOperator, PeriodicityInT) {
  const Curve c = specimens::closed_figure();
  const auto m3 = make_generalized_sampling(bspline_kernel(3));
  auto x1 = extend_scalar(c.component_function(0), c.domain(), ExtensionStrategy::Periodic);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> td(-3.0, 3.0);
  for (int i = 0; i < 20; ++i) {
    const double t = td(rng);
    EXPECT_NEAR(evaluate(m3, x1, 10, t).value, evaluate(m3, x1, 10, t + 1.0).value, 1e-10);
  }
}

TEST(ApplyOperator, BernsteinKeepsEndpoints) {
  const Curve c = specimens::closed_figure();
  const Curve a = apply_operator(make_bernstein(), c, 12, ExtensionStrategy::AffineRemap);
  EXPECT_EQ(a(0.0), c(0.0));
  EXPECT_EQ(a(1.0)[0], c(1.0)[0]);
  EXPECT_TRUE(a.closed());
}

TEST(ApplyOperator, ComponentwiseConsistency) {
  const Curve s = specimens::helix();
  const auto m3 = make_generalized_sampling(bspline_kernel(3));
  const Curve a = apply_operator(m3, s, 10, ExtensionStrategy::ConstantPad);
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> td(0.0, 2.0);
  for (std::size_t i = 0; i < 3; ++i) {
    auto xi = extend_scalar(s.component_function(i), s.domain(), ExtensionStrategy::ConstantPad);
    for (int j = 0; j < 10; ++j) {
      const double t = td(rng);
      EXPECT_NEAR(a.component(i, t), evaluate(m3, xi, 10, t).value, 1e-12);
    }
  }
}

TEST(ApplyOperator, RemapConvergesForSmoothCurve) {
  for (const Curve& c : {specimens::spiral(), specimens::helix()}) {
    double prev = kInf;
    for (int n : {10, 40, 160}) {
      const double e = sup_error(c, apply_operator(make_bernstein(), c, n, ExtensionStrategy::AffineRemap), 200);
      EXPECT_LT(e, prev);
      prev = e;
    }
  }
}

TEST(ApplyOperator, CommutesWithAffineMaps) {
  const Curve s = specimens::spiral();
  const double A[] = {0.5, -2.0, 1.25, 3.0}, b[] = {7.0, -1.0};
  for (const auto& [fam, st] : std::vector<std::pair<OperatorFamily, ExtensionStrategy>>{
           {make_bernstein(), ExtensionStrategy::AffineRemap},
           {make_generalized_sampling(bspline_kernel(3)), ExtensionStrategy::ConstantPad},
           {make_szasz_mirakjan(), ExtensionStrategy::TranslateAndPad}}) {
    const Curve one = affine_transform(apply_operator(fam, s, 20, st), A, b);
    const Curve two = apply_operator(fam, affine_transform(s, A, b), 20, st);
    EXPECT_LT(sup_error(one, two, 101), 1e-9) << fam.name();
  }
}

TEST(ApplyOperator, HalfLineOnShiftedDomain) {
  const Curve h = specimens::helix();
  const Curve a = apply_operator(make_szasz_mirakjan(), h, 60, ExtensionStrategy::TranslateAndPad);
  EXPECT_EQ(a.domain().lo, 0.0);
  EXPECT_EQ(a.domain().hi, 2.0);
  EXPECT_LT(sup_error(h, a, 100), 0.5);
}

TEST(Export, CsvAndJson) {
  std::ostringstream s;
  write_csv(s, specimens::helix(), 3);
  std::istringstream in(s.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "t,x_1,x_2,x_3");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 3);

  const auto doc = nlohmann::json::parse(to_json(specimens::closed_figure(), 5));
  EXPECT_EQ(doc["dimension"], 2);
  EXPECT_EQ(doc["closed"], true);
  EXPECT_EQ(doc["samples"].size(), 5u);
  EXPECT_EQ(doc["domain"][1], 1.0);
}
