#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace coopnet {

struct NodeState;  // engine.hpp

enum class StrategyVariant { Def, Coop, Tft, Wsls };

// The improvement signal driving TFT/WSLS. The per-slot fitness deltas are
// never positive, so a literal "fitness increased" test degenerates; the
// differential reading (this iteration lost less than the previous one) is
// the default. Both are selectable.
enum class ImprovementMode { Literal, Differential };

struct StrategyKind {
  StrategyVariant variant = StrategyVariant::Def;
  ImprovementMode improvement_mode = ImprovementMode::Differential;
  bool tie_is_improvement = false;
};

// Whether the node saw an improvement over the finished iteration.
// Literal: dF(n) > 0. Differential: dF(n) > dF(n-1). Exact ties count as
// improvement only when tie_is_improvement is set. Returns nullopt while
// the node has not completed enough iterations (one in literal mode, two
// in differential mode); callers defer decisions until then.
std::optional<bool> improved(const NodeState& state, const StrategyKind& kind);

// Truth-table core: next-iteration cooperator flag from the current flag
// and the improvement signal.
bool decide_from(bool current_flag, bool improved, StrategyVariant variant);

// Next-iteration cooperator flag for the node, or nullopt when the history
// is still insufficient. DEF and COOP never consult the history.
std::optional<bool> decide(const NodeState& state, const StrategyKind& kind);

// Exact tokens def|coop|tft|wsls, case-insensitive.
StrategyVariant parse_strategy(std::string_view token);
std::string strategy_name(StrategyVariant variant);

ImprovementMode parse_improvement_mode(std::string_view token);
std::string improvement_mode_name(ImprovementMode mode);

}  // namespace coopnet
