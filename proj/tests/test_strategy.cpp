#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coopnet/engine.hpp"
#include "coopnet/strategy.hpp"

using namespace coopnet;

namespace {

NodeState with_history(double cur, double prev, bool flag, int completed) {
  NodeState s;
  s.is_cooperator = flag;
  s.iter_fitness_change = cur;
  s.prev_iter_fitness_change = prev;
  s.iterations_completed = completed;
  return s;
}

StrategyKind kind_of(StrategyVariant v, ImprovementMode m, bool tie) {
  return StrategyKind{v, m, tie};
}

}  // namespace

TEST_CASE("improvement signal examples") {
  const auto diff = kind_of(StrategyVariant::Tft, ImprovementMode::Differential, false);
  const auto lit = kind_of(StrategyVariant::Tft, ImprovementMode::Literal, false);

  CHECK(improved(with_history(-0.1, -0.4, false, 2), diff) == true);
  CHECK(improved(with_history(-0.4, -0.1, false, 2), diff) == false);
  CHECK(improved(with_history(-0.1, 0.0, true, 3), lit) == false);

  // exact ties resolved by the tie policy
  CHECK(improved(with_history(-0.2, -0.2, false, 2), diff) == false);
  const auto diff_tie =
      kind_of(StrategyVariant::Tft, ImprovementMode::Differential, true);
  CHECK(improved(with_history(-0.2, -0.2, false, 2), diff_tie) == true);
  const auto lit_tie = kind_of(StrategyVariant::Tft, ImprovementMode::Literal, true);
  CHECK(improved(with_history(0.0, -0.5, false, 2), lit) == false);
  CHECK(improved(with_history(0.0, -0.5, false, 2), lit_tie) == true);
}

TEST_CASE("insufficient history defers the decision") {
  const auto diff = kind_of(StrategyVariant::Wsls, ImprovementMode::Differential, false);
  const auto lit = kind_of(StrategyVariant::Wsls, ImprovementMode::Literal, false);
  CHECK_FALSE(improved(with_history(-0.1, 0.0, false, 1), diff).has_value());
  CHECK(improved(with_history(-0.1, -0.2, false, 2), diff).has_value());
  CHECK_FALSE(improved(with_history(-0.1, 0.0, false, 0), lit).has_value());
  CHECK(improved(with_history(-0.1, 0.0, false, 1), lit).has_value());

  CHECK_FALSE(decide(with_history(-0.1, 0.0, false, 1), diff).has_value());
  // fixed strategies never consult history
  CHECK(decide(with_history(0.0, 0.0, true, 0),
               kind_of(StrategyVariant::Def, ImprovementMode::Differential, false)) ==
        false);
  CHECK(decide(with_history(0.0, 0.0, false, 0),
               kind_of(StrategyVariant::Coop, ImprovementMode::Differential, false)) ==
        true);
}

TEST_CASE("decision examples") {
  const auto wsls = kind_of(StrategyVariant::Wsls, ImprovementMode::Differential, false);
  const auto tft = kind_of(StrategyVariant::Tft, ImprovementMode::Differential, false);

  // cooperator that did not improve flips to defector
  CHECK(decide(with_history(-0.5, -0.1, true, 2), wsls) == false);
  // defector that observed improvement turns cooperator
  CHECK(decide(with_history(-0.1, -0.5, false, 2), tft) == true);
  CHECK(decide(with_history(-0.1, -0.5, true, 5),
               kind_of(StrategyVariant::Def, ImprovementMode::Differential, false)) ==
        false);
}

TEST_CASE("decision truth table is exhaustive") {
  const StrategyVariant variants[] = {StrategyVariant::Def, StrategyVariant::Coop,
                                      StrategyVariant::Tft, StrategyVariant::Wsls};
  for (StrategyVariant v : variants) {
    for (bool flag : {false, true}) {
      for (bool imp : {false, true}) {
        const bool out = decide_from(flag, imp, v);
        switch (v) {
          case StrategyVariant::Def: CHECK(out == false); break;
          case StrategyVariant::Coop: CHECK(out == true); break;
          case StrategyVariant::Tft: CHECK(out == imp); break;
          case StrategyVariant::Wsls: CHECK(out == (imp ? flag : !flag)); break;
        }
      }
    }
  }
}

TEST_CASE("decisions depend on fitness only through the improvement bit") {
  // scaling every change by a positive constant flips nothing
  const auto wsls = kind_of(StrategyVariant::Wsls, ImprovementMode::Differential, false);
  for (double scale : {0.5, 3.0, 1e6}) {
    for (bool flag : {false, true}) {
      const auto base = decide(with_history(-0.2, -0.7, flag, 4), wsls);
      const auto scaled =
          decide(with_history(-0.2 * scale, -0.7 * scale, flag, 4), wsls);
      CHECK(base == scaled);
    }
  }
}

TEST_CASE("strategy token parsing") {
  CHECK(parse_strategy("def") == StrategyVariant::Def);
  CHECK(parse_strategy("COOP") == StrategyVariant::Coop);
  CHECK(parse_strategy("TfT") == StrategyVariant::Tft);
  CHECK(parse_strategy("wsls") == StrategyVariant::Wsls);
  CHECK_THROWS_AS(parse_strategy("alld"), std::invalid_argument);
  CHECK(strategy_name(StrategyVariant::Wsls) == "wsls");

  CHECK(parse_improvement_mode("LITERAL") == ImprovementMode::Literal);
  CHECK(parse_improvement_mode("differential") == ImprovementMode::Differential);
  CHECK_THROWS_AS(parse_improvement_mode("delta"), std::invalid_argument);
}
