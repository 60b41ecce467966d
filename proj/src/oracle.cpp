#include "cgames/oracle.hpp"

#include <algorithm>
#include <thread>

namespace cgames {

namespace {

std::uint64_t checked_profile_count(const Game& game, const OracleConfig& config) {
  Int total = profile_count(game);
  if (total > Int(config.budget))
    throw BudgetExceededError("profile space of size " + total.str() +
                              " exceeds budget " + std::to_string(config.budget));
  return total.convert_to<std::uint64_t>();
}

StrategyProfile profile_at(const Game& game, std::uint64_t index) {
  int n = game.num_players();
  StrategyProfile profile(n, 0);
  for (int i = n - 1; i >= 0; --i) {
    auto radix = game.player(i).strategies.size();
    profile[i] = static_cast<int>(index % radix);
    index /= radix;
  }
  return profile;
}

// Odometer step in lexicographic order (player 0 most significant).
bool advance(const Game& game, StrategyProfile& profile) {
  for (int i = game.num_players() - 1; i >= 0; --i) {
    if (++profile[i] < static_cast<int>(game.player(i).strategies.size())) return true;
    profile[i] = 0;
  }
  return false;
}

// Runs fn over the contiguous index range [begin, end).
template <typename Fn>
void scan_range(const Game& game, std::uint64_t begin, std::uint64_t end, Fn&& fn) {
  if (begin >= end) return;
  StrategyProfile profile = profile_at(game, begin);
  ProfileEvaluator eval(game);
  for (std::uint64_t idx = begin; idx < end; ++idx) {
    eval.set_profile(profile);
    fn(profile, eval);
    if (idx + 1 < end) advance(game, profile);
  }
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> partition(std::uint64_t total, int workers) {
  workers = std::max(1, workers);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> ranges;
  std::uint64_t chunk = total / workers, rest = total % workers, begin = 0;
  for (int w = 0; w < workers; ++w) {
    std::uint64_t size = chunk + (static_cast<std::uint64_t>(w) < rest ? 1 : 0);
    ranges.emplace_back(begin, begin + size);
    begin += size;
  }
  return ranges;
}

}  // namespace

OracleReport enumerate_pne(const Game& game, const Rational& alpha, const OracleConfig& config) {
  std::uint64_t total = checked_profile_count(game, config);
  auto ranges = partition(total, config.workers);

  std::vector<std::vector<StrategyProfile>> found(ranges.size());
  auto work = [&](size_t w) {
    scan_range(game, ranges[w].first, ranges[w].second,
               [&](const StrategyProfile& profile, const ProfileEvaluator& eval) {
                 auto [factor, witness] = eval.best_improvement();
                 if (factor <= alpha) found[w].push_back(profile);
               });
  };

  if (ranges.size() == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (size_t w = 0; w < ranges.size(); ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }

  OracleReport report{alpha, {}};
  for (auto& part : found)
    report.pne.insert(report.pne.end(), std::make_move_iterator(part.begin()),
                      std::make_move_iterator(part.end()));
  return report;
}

ThresholdReport nonexistence_threshold(const Game& game, const OracleConfig& config) {
  std::uint64_t total = checked_profile_count(game, config);
  auto ranges = partition(total, config.workers);

  struct PartialResult {
    bool any = false;
    Factor best;
    StrategyProfile argmin;
    DeviationWitness witness;
  };
  std::vector<PartialResult> partial(ranges.size());

  auto work = [&](size_t w) {
    auto& out = partial[w];
    scan_range(game, ranges[w].first, ranges[w].second,
               [&](const StrategyProfile& profile, const ProfileEvaluator& eval) {
                 auto [factor, witness] = eval.best_improvement();
                 if (!out.any || factor < out.best) {
                   out = PartialResult{true, factor, profile, witness};
                 }
               });
  };

  if (ranges.size() == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (size_t w = 0; w < ranges.size(); ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }

  // Merge in worker order; strict < keeps the lexicographically first argmin.
  ThresholdReport report{Factor::infinity(), {}, std::nullopt};
  bool any = false;
  for (const auto& part : partial) {
    if (!part.any) continue;
    if (!any || part.best < report.threshold) {
      any = true;
      report.threshold = part.best;
      report.argmin = part.argmin;
      report.witness = part.witness.player >= 0 ? std::optional(part.witness) : std::nullopt;
    }
  }
  if (!any) throw std::invalid_argument("game has no strategy profiles");
  return report;
}

DynamicsTrace improving_dynamics(const Game& game, StrategyProfile start, const Rational& alpha,
                                 std::uint64_t max_steps) {
  DynamicsTrace trace;
  StrategyProfile current = std::move(start);
  for (std::uint64_t step = 0; step < max_steps; ++step) {
    auto violation = find_alpha_violation(game, current, alpha);
    if (!violation) {
      trace.terminal = current;
      trace.reached_pne = true;
      return trace;
    }
    trace.steps.push_back(DynamicsStep{current, violation->player, violation->to_strategy,
                                       violation->ratio});
    current[violation->player] = violation->to_strategy;
  }
  trace.terminal = current;
  trace.reached_pne = is_alpha_pne(game, current, alpha);
  return trace;
}

}  // namespace cgames
