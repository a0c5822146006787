/*
 * Copyright 2026 The ESS Engine Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "ess/scoring.hpp"

#include <gtest/gtest.h>

#include <random>

#include "ess/numeric.hpp"

namespace ess {
namespace {

constexpr double kTol = 1e-9;
const std::string kData = ESS_TEST_DATA_DIR;

void ExpectTriple(const AxisTriple& t, double c, double u, double d, double tol = kTol) {
  EXPECT_NEAR(t.c, c, tol);
  EXPECT_NEAR(t.u, u, tol);
  EXPECT_NEAR(t.d, d, tol);
}

TEST(AggregateAxes, WorkedComputations) {
  const AxisWeights w;
  ExpectTriple(AggregateAxes({3, 4, 3, 3, 5, 4.5, 4}, w), 3.40, 3.00, 4.70);
  // The all-integer SHAP vector: 0.5*5 + 0.4*5 + 0.1*4.
  ExpectTriple(AggregateAxes({3, 4, 3, 3, 5, 5, 4}, w), 3.40, 3.00, 4.90);
  ExpectTriple(AggregateAxes({2, 2, 5, 4, 3, 3, 3}, w), 2.00, 4.60, 3.00);
  ExpectTriple(AggregateAxes({2, 3, 4, 4, 4, 3, 3}, w), 2.40, 4.00, 3.50);
  ExpectTriple(AggregateAxes({5, 5, 3, 2, 4, 4, 2}, w), 5.00, 2.60, 3.80);
  ExpectTriple(AggregateAxes({1, 1, 1, 1, 1, 1, 1}, w), 1.0, 1.0, 1.0);
}

TEST(ApplyContext, SubstitutionMultipliersAndClipping) {
  const ScenarioContext sub = SubstitutionScenario();
  ExpectTriple(ApplyContext({3.40, 3.00, 4.70}, sub), 3.91, 3.30, 4.70);
  ExpectTriple(ApplyContext({5.00, 2.60, 3.80}, sub), 5.00, 2.86, 3.80);
  ExpectTriple(ApplyContext({2.00, 4.60, 3.00}, sub), 2.30, 5.00, 3.00);

  ScenarioContext identity = sub;
  identity.gamma_c = identity.gamma_u = identity.gamma_d = 1.0;
  ExpectTriple(ApplyContext({2.2, 3.3, 4.4}, identity), 2.2, 3.3, 4.4, 0.0);
}

TEST(ApplyContext, LowerClipBinds) {
  ScenarioContext ctx;
  ctx.gamma_c = 0.5;
  ctx.gamma_u = 0.0;
  ExpectTriple(ApplyContext({1.6, 4.0, 2.0}, ctx), 1.0, 1.0, 2.0);
}

TEST(Discretise, BandEdges) {
  EXPECT_EQ(Discretise(2.30), Level::kLow);
  EXPECT_EQ(Discretise(3.50), Level::kHigh);
  EXPECT_EQ(Discretise(2.86), Level::kMedium);
  EXPECT_EQ(Discretise(1.00), Level::kLow);
  EXPECT_EQ(Discretise(2.45), Level::kLow);
  EXPECT_EQ(Discretise(2.50), Level::kMedium);
  EXPECT_EQ(Discretise(3.45), Level::kMedium);
  EXPECT_EQ(Discretise(5.00), Level::kHigh);
  // Rounding noise just under an edge still lands in the upper band.
  EXPECT_EQ(Discretise(std::nextafter(3.5, 0.0)), Level::kHigh);
}

TEST(ScoreTechnique, LimeAndCounterfactuals) {
  const Catalog c = BuiltinPaperCatalog();
  const ScenarioContext sub = SubstitutionScenario();
  const EssCoordinates lime = ScoreTechnique(c[1], AxisWeights{}, sub);
  EXPECT_EQ(lime.technique_id, "LIME");
  ExpectTriple(lime.adjusted, 2.76, 4.40, 3.50);
  EXPECT_EQ(lime.levels, (std::array{Level::kMedium, Level::kHigh, Level::kHigh}));
  const EssCoordinates cf = ScoreTechnique(c[2], AxisWeights{}, sub);
  ExpectTriple(cf.adjusted, 2.76, 5.00, 3.50);
  EXPECT_EQ(cf.levels, (std::array{Level::kMedium, Level::kHigh, Level::kHigh}));

  Technique ones = c[0];
  ones.properties = {1, 1, 1, 1, 1, 1, 1};
  ScenarioContext identity;
  identity.gamma_c = identity.gamma_u = identity.gamma_d = 1.0;
  const EssCoordinates low = ScoreTechnique(ones, AxisWeights{}, identity);
  ExpectTriple(low.adjusted, 1, 1, 1);
  EXPECT_EQ(low.levels, (std::array{Level::kLow, Level::kLow, Level::kLow}));
}

TEST(ScoreCatalog, UsesScenarioAxisWeightOverride) {
  ScenarioContext ctx;
  ctx.gamma_c = ctx.gamma_u = ctx.gamma_d = 1.0;
  ctx.axis_weights = AxisWeights{1.0, 0.0, 0.0, 1.0, 0.0, 0.0, 1.0};
  const auto scores = ScoreCatalog(BuiltinPaperCatalog(), ctx);
  ExpectTriple(scores[0].raw, 3, 3, 4);  // audit, action, eff of SHAP
}

TEST(Scenario, SubstitutionPreset) {
  const ScenarioContext s = SubstitutionScenario();
  EXPECT_EQ(s.name, "substitution");
  EXPECT_DOUBLE_EQ(s.gamma_c, 1.15);
  EXPECT_DOUBLE_EQ(s.gamma_u, 1.10);
  EXPECT_DOUBLE_EQ(s.gamma_d, 1.00);
  EXPECT_DOUBLE_EQ(s.latency_budget_ms, 200);
  EXPECT_DOUBLE_EQ(s.reserved_overhead_ms, 100);
  EXPECT_DOUBLE_EQ(s.fit_fraction, 0.8);
  EXPECT_EQ(s.selection_weights, (SelectionWeights{0.4, 0.4, 0.2}));
  EXPECT_TRUE(s.Check().empty());
}

TEST(Scenario, LoadsFileWithAxisOverride) {
  const ScenarioContext s = LoadScenarioFile(kData + "/lenient_scenario.json");
  EXPECT_EQ(s.name, "assistance");
  EXPECT_DOUBLE_EQ(s.gamma_d, 0.9);
  ASSERT_TRUE(s.axis_weights.has_value());
  EXPECT_DOUBLE_EQ(s.axis_weights->compr, 0.7);
  EXPECT_DOUBLE_EQ(s.ExplanationBudgetMs(), 400);
}

TEST(Scenario, RejectsBadSelectionWeights) {
  try {
    LoadScenarioFile(kData + "/bad_weights_scenario.json");
    FAIL();
  } catch (const ValidationError& e) {
    ASSERT_EQ(e.findings().size(), 1u);
    EXPECT_EQ(e.findings()[0].subject, "scenario:broken");
    EXPECT_EQ(e.findings()[0].field, "selection_weights");
  }
}

TEST(Scenario, InvariantViolations) {
  ScenarioContext s;
  s.reserved_overhead_ms = 200;
  EXPECT_EQ(s.Check().size(), 1u);
  s = {};
  s.fit_fraction = 0.0;
  EXPECT_EQ(s.Check().size(), 1u);
  s.fit_fraction = 1.0;
  EXPECT_TRUE(s.Check().empty());
  s.gamma_u = -0.1;
  EXPECT_EQ(s.Check().size(), 1u);
  EXPECT_THROW(s.Validate(), ValidationError);
  EXPECT_THROW(LoadScenario("{\"name\": \"x\"}"), ValidationError);
  EXPECT_THROW(LoadScenario("not json"), ParseError);
}

// ---- properties ---------------------------------------------------------

class ScoringProperty : public ::testing::Test {
 protected:
  std::mt19937_64 rng_{424242};
  std::uniform_real_distribution<double> rating_{1.0, 5.0};

  PropertyVector RandomVector() {
    PropertyVector p;
    for (std::size_t k = 0; k < kPropertyNames.size(); ++k) PropertyAt(p, k) = rating_(rng_);
    return p;
  }

  AxisWeights RandomWeights() {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    AxisWeights w;
    w.audit = u(rng_);
    w.trace = 1.0 - w.audit;
    w.compr = u(rng_);
    w.action = 1.0 - w.compr;
    double a = u(rng_), b = u(rng_), c = u(rng_);
    const double s = a + b + c;
    w.fidelity = a / s;
    w.debug = b / s;
    w.eff = 1.0 - w.fidelity - w.debug;
    if (w.eff < 0) w.eff = 0;
    return w;
  }
};

TEST_F(ScoringProperty, AggregationMonotoneAndLocal) {
  // Axis membership of each property: 0 = C, 1 = U, 2 = D.
  constexpr int kAxisOf[] = {0, 0, 1, 1, 2, 2, 2};
  auto axis = [](const AxisTriple& t, int a) { return a == 0 ? t.c : (a == 1 ? t.u : t.d); };
  for (int i = 0; i < 2000; ++i) {
    const AxisWeights w = RandomWeights();
    const PropertyVector p = RandomVector();
    const std::size_t k = static_cast<std::size_t>(i % 7);
    PropertyVector q = p;
    PropertyAt(q, k) = std::uniform_real_distribution<double>(PropertyAt(p, k), 5.0)(rng_);
    const AxisTriple before = AggregateAxes(p, w);
    const AxisTriple after = AggregateAxes(q, w);
    for (int a = 0; a < 3; ++a) {
      if (a == kAxisOf[k]) {
        EXPECT_GE(axis(after, a), axis(before, a));
      } else {
        EXPECT_EQ(axis(after, a), axis(before, a));
      }
    }
    for (int a = 0; a < 3; ++a) {
      EXPECT_GE(axis(before, a), 1.0 - kTol);
      EXPECT_LE(axis(before, a), 5.0 + kTol);
    }
  }
}

TEST_F(ScoringProperty, ClipBoundsAndIdentity) {
  std::uniform_real_distribution<double> gamma(0.0, 3.0);
  for (int i = 0; i < 2000; ++i) {
    const AxisTriple raw{rating_(rng_), rating_(rng_), rating_(rng_)};
    ScenarioContext ctx;
    ctx.gamma_c = gamma(rng_);
    ctx.gamma_u = gamma(rng_);
    ctx.gamma_d = gamma(rng_);
    const AxisTriple adj = ApplyContext(raw, ctx);
    for (double v : {adj.c, adj.u, adj.d}) {
      EXPECT_GE(v, 1.0);
      EXPECT_LE(v, 5.0);
    }
    ScenarioContext id = ctx;
    id.gamma_c = id.gamma_u = id.gamma_d = 1.0;
    EXPECT_EQ(ApplyContext(raw, id), raw);
    EXPECT_EQ(ApplyContext(ApplyContext(raw, id), id), raw);

    ScenarioContext amplify = ctx;
    amplify.gamma_c = 1.0 + gamma(rng_);
    amplify.gamma_u = 1.0 + gamma(rng_);
    amplify.gamma_d = 1.0 + gamma(rng_);
    const AxisTriple up = ApplyContext(raw, amplify);
    EXPECT_GE(up.c, raw.c);
    EXPECT_GE(up.u, raw.u);
    EXPECT_GE(up.d, raw.d);
  }
}

TEST_F(ScoringProperty, DiscretisationPartitionsAndIsMonotone) {
  std::vector<double> xs;
  for (int i = 0; i < 5000; ++i) xs.push_back(rating_(rng_));
  for (double edge : {1.0, 2.5, 3.5, 5.0}) {
    xs.push_back(edge);
    xs.push_back(std::nextafter(edge, 0.0));
    xs.push_back(std::nextafter(edge, 6.0));
  }
  std::sort(xs.begin(), xs.end());
  Level prev = Level::kLow;
  for (double x : xs) {
    const Level l = Discretise(x);
    const int count = (x >= 1.0 - kTol && x < 2.5 - kTol) + (x >= 2.5 - kTol && x < 3.5 - kTol) +
                      (x >= 3.5 - kTol);
    if (x >= 1.0 && x <= 5.0) EXPECT_EQ(count, 1) << x;
    EXPECT_GE(static_cast<int>(l), static_cast<int>(prev)) << x;
    prev = l;
  }
}

TEST_F(ScoringProperty, WeightSumValidationRejects) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_real_distribution<double> skew(1e-6, 0.5);
  for (int i = 0; i < 2000; ++i) {
    AxisWeights w = RandomWeights();
    EXPECT_TRUE(w.Check("t").empty());
    AxisWeights bad = w;
    const double delta = (i % 2 ? 1 : -1) * skew(rng_);
    switch (i % 3) {
      case 0: bad.trace += delta; break;
      case 1: bad.action += delta; break;
      default: bad.eff += delta; break;
    }
    EXPECT_FALSE(bad.Check("t").empty());

    ScenarioContext ctx;
    const double a = u(rng_), b = u(rng_) * (1.0 - a);
    ctx.selection_weights = {a, b, 1.0 - a - b};
    EXPECT_TRUE(ctx.Check().empty());
    ctx.selection_weights.d += delta;
    EXPECT_FALSE(ctx.Check().empty());
  }
}

TEST_F(ScoringProperty, ScalingOneAxisPreservesOrderOnOthers) {
  std::uniform_real_distribution<double> g(1.0, 1.2);
  for (int i = 0; i < 500; ++i) {
    std::vector<PropertyVector> ps;
    for (int k = 0; k < 6; ++k) ps.push_back(RandomVector());
    ScenarioContext base;
    base.gamma_c = base.gamma_u = base.gamma_d = 1.0;
    ScenarioContext scaled = base;
    scaled.gamma_c = g(rng_);
    for (std::size_t a = 0; a < ps.size(); ++a) {
      for (std::size_t b = 0; b < ps.size(); ++b) {
        const AxisTriple ra = ApplyContext(AggregateAxes(ps[a], {}), base);
        const AxisTriple rb = ApplyContext(AggregateAxes(ps[b], {}), base);
        const AxisTriple sa = ApplyContext(AggregateAxes(ps[a], {}), scaled);
        const AxisTriple sb = ApplyContext(AggregateAxes(ps[b], {}), scaled);
        EXPECT_EQ(ra.u < rb.u, sa.u < sb.u);
        EXPECT_EQ(ra.d < rb.d, sa.d < sb.d);
      }
    }
  }
}

TEST(Numeric, HalfUpRoundingAndFormatting) {
  EXPECT_EQ(FormatFixed(3.824, 2), "3.82");
  EXPECT_EQ(FormatFixed(3.904, 2), "3.90");
  EXPECT_EQ(FormatFixed(1.15 * 3.4, 2), "3.91");
  EXPECT_EQ(FormatFixed(2.855, 2), "2.86");
  EXPECT_EQ(FormatFixed(0.125, 2), "0.13");
  EXPECT_EQ(FormatFixed(15.28, 1), "15.3");
  EXPECT_EQ(FormatFixed(10.692, 1), "10.7");
  EXPECT_EQ(FormatFixed(1.0 / 3.0, 2), "0.33");
  EXPECT_EQ(FormatFixed(-0.001, 2), "0.00");
  EXPECT_EQ(FormatFixed(-2.5, 0), "-3");
}

}  // namespace
}  // namespace ess
