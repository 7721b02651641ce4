#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "serialize.hpp"

namespace zaman {

struct EvalCounts {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;

  // 0 when the denominator is 0; f1 is 0 when both P and R are.
  double precision() const;
  double recall() const;
  double f1() const;

  friend bool operator==(const EvalCounts&, const EvalCounts&) = default;
};

struct EvalBucket {
  std::size_t gold = 0;    // gold annotations considered
  std::size_t system = 0;  // system annotations considered
  EvalCounts strict;
  EvalCounts relaxed;
};

struct EvalReport {
  std::size_t documents = 0;
  EvalBucket overall;
  std::array<EvalBucket, 4> by_type;  // indexed by TimexType

  EvalBucket& bucket(TimexType type) { return by_type[static_cast<int>(type)]; }
  const EvalBucket& bucket(TimexType type) const {
    return by_type[static_cast<int>(type)];
  }
};

// Scores one document pair into the report (micro-average accumulation).
// Both lists must be in textual order and non-overlapping, as produced by
// the tagger and the gold parser. Strict credit needs identical spans and
// identical type/value/quant/freq; relaxed credit needs overlapping spans
// and the same type. Per-type rows compare the two lists filtered to that
// type.
void eval_add(EvalReport& report, const std::vector<Timex3>& gold,
              const std::vector<Timex3>& system);

// Fixed-width table for terminals / JSON object, both newline-terminated.
std::string to_text(const EvalReport& report);
std::string to_json(const EvalReport& report);

}  // namespace zaman
