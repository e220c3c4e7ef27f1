#include "coopnet/strategy.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "coopnet/engine.hpp"

namespace coopnet {

std::optional<bool> improved(const NodeState& state, const StrategyKind& kind) {
  if (kind.improvement_mode == ImprovementMode::Literal) {
    if (state.iterations_completed < 1) return std::nullopt;
    const double df = state.iter_fitness_change;
    if (df == 0.0) return kind.tie_is_improvement;
    return df > 0.0;
  }
  if (state.iterations_completed < 2) return std::nullopt;
  const double cur = state.iter_fitness_change;
  const double prev = state.prev_iter_fitness_change;
  if (cur == prev) return kind.tie_is_improvement;
  return cur > prev;
}

bool decide_from(bool current_flag, bool improved, StrategyVariant variant) {
  switch (variant) {
    case StrategyVariant::Def:
      return false;
    case StrategyVariant::Coop:
      return true;
    case StrategyVariant::Wsls:
      return improved ? current_flag : !current_flag;
    case StrategyVariant::Tft:
      return improved;
  }
  throw std::logic_error("decide_from: unknown strategy variant");
}

std::optional<bool> decide(const NodeState& state, const StrategyKind& kind) {
  if (kind.variant == StrategyVariant::Def) return false;
  if (kind.variant == StrategyVariant::Coop) return true;
  const std::optional<bool> imp = improved(state, kind);
  if (!imp) return std::nullopt;
  return decide_from(state.is_cooperator, *imp, kind.variant);
}

namespace {
std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}
}  // namespace

StrategyVariant parse_strategy(std::string_view token) {
  const std::string t = lower(token);
  if (t == "def") return StrategyVariant::Def;
  if (t == "coop") return StrategyVariant::Coop;
  if (t == "tft") return StrategyVariant::Tft;
  if (t == "wsls") return StrategyVariant::Wsls;
  throw std::invalid_argument("unknown strategy '" + std::string(token) +
                              "' (expected def|coop|tft|wsls)");
}

std::string strategy_name(StrategyVariant variant) {
  switch (variant) {
    case StrategyVariant::Def:
      return "def";
    case StrategyVariant::Coop:
      return "coop";
    case StrategyVariant::Tft:
      return "tft";
    case StrategyVariant::Wsls:
      return "wsls";
  }
  throw std::logic_error("strategy_name: unknown strategy variant");
}

ImprovementMode parse_improvement_mode(std::string_view token) {
  const std::string t = lower(token);
  if (t == "literal") return ImprovementMode::Literal;
  if (t == "differential") return ImprovementMode::Differential;
  throw std::invalid_argument("unknown improvement mode '" +
                              std::string(token) +
                              "' (expected literal|differential)");
}

std::string improvement_mode_name(ImprovementMode mode) {
  return mode == ImprovementMode::Literal ? "literal" : "differential";
}

}  // namespace coopnet
