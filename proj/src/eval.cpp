#include "eval.hpp"

#include <cstdio>

#include <json.hpp>

namespace zaman {

double EvalCounts::precision() const {
  return tp + fp == 0 ? 0.0 : static_cast<double>(tp) / static_cast<double>(tp + fp);
}

double EvalCounts::recall() const {
  return tp + fn == 0 ? 0.0 : static_cast<double>(tp) / static_cast<double>(tp + fn);
}

double EvalCounts::f1() const {
  double p = precision();
  double r = recall();
  return p + r == 0.0 ? 0.0 : 2.0 * p * r / (p + r);
}

namespace {

bool strict_equal(const Timex3& a, const Timex3& b) {
  return a.begin == b.begin && a.end == b.end && a.type == b.type &&
         a.value == b.value && a.quant == b.quant && a.freq == b.freq;
}

// Both lists are span-ordered, so identical spans can only meet in lockstep.
EvalCounts score_strict(const std::vector<Timex3>& gold,
                        const std::vector<Timex3>& system) {
  EvalCounts counts;
  std::size_t g = 0;
  std::size_t s = 0;
  while (g < gold.size() && s < system.size()) {
    const Timex3& gt = gold[g];
    const Timex3& st = system[s];
    if (gt.begin == st.begin && gt.end == st.end) {
      if (strict_equal(gt, st)) {
        ++counts.tp;
      } else {
        ++counts.fp;
        ++counts.fn;
      }
      ++g;
      ++s;
    } else if (st.begin < gt.begin || (st.begin == gt.begin && st.end < gt.end)) {
      ++counts.fp;
      ++s;
    } else {
      ++counts.fn;
      ++g;
    }
  }
  counts.fn += gold.size() - g;
  counts.fp += system.size() - s;
  return counts;
}

bool spans_overlap(const Timex3& a, const Timex3& b) {
  return a.begin < b.end && b.begin < a.end;
}

// Greedy alignment: overlapping same-type pairs count once each; on an
// overlap with a type mismatch the earlier-ending side moves on, since
// nothing later on the other side can reach back past it.
EvalCounts score_relaxed(const std::vector<Timex3>& gold,
                         const std::vector<Timex3>& system) {
  EvalCounts counts;
  std::size_t g = 0;
  std::size_t s = 0;
  while (g < gold.size() && s < system.size()) {
    const Timex3& gt = gold[g];
    const Timex3& st = system[s];
    if (spans_overlap(gt, st)) {
      if (gt.type == st.type) {
        ++counts.tp;
        ++g;
        ++s;
      } else if (st.end < gt.end) {
        ++counts.fp;
        ++s;
      } else if (gt.end < st.end) {
        ++counts.fn;
        ++g;
      } else {
        ++counts.fp;
        ++counts.fn;
        ++g;
        ++s;
      }
    } else if (st.end <= gt.begin) {
      ++counts.fp;
      ++s;
    } else {
      ++counts.fn;
      ++g;
    }
  }
  counts.fn += gold.size() - g;
  counts.fp += system.size() - s;
  return counts;
}

void accumulate(EvalBucket& bucket, const std::vector<Timex3>& gold,
                const std::vector<Timex3>& system) {
  bucket.gold += gold.size();
  bucket.system += system.size();
  EvalCounts strict = score_strict(gold, system);
  EvalCounts relaxed = score_relaxed(gold, system);
  bucket.strict.tp += strict.tp;
  bucket.strict.fp += strict.fp;
  bucket.strict.fn += strict.fn;
  bucket.relaxed.tp += relaxed.tp;
  bucket.relaxed.fp += relaxed.fp;
  bucket.relaxed.fn += relaxed.fn;
}

std::vector<Timex3> of_type(const std::vector<Timex3>& timexes, TimexType type) {
  std::vector<Timex3> out;
  for (const Timex3& t : timexes) {
    if (t.type == type) out.push_back(t);
  }
  return out;
}

constexpr std::array<TimexType, 4> kTypeOrder = {
    TimexType::DATE, TimexType::TIME, TimexType::DURATION, TimexType::SET};

}  // namespace

void eval_add(EvalReport& report, const std::vector<Timex3>& gold,
              const std::vector<Timex3>& system) {
  ++report.documents;
  accumulate(report.overall, gold, system);
  for (TimexType type : kTypeOrder) {
    accumulate(report.bucket(type), of_type(gold, type), of_type(system, type));
  }
}

std::string to_text(const EvalReport& report) {
  std::string out;
  char line[160];
  std::snprintf(line, sizeof line, "%-10s %6s %6s  %8s %8s %8s  %9s %9s %9s\n",
                "type", "gold", "sys", "strict-P", "strict-R", "strict-F1",
                "relaxed-P", "relaxed-R", "relaxed-F1");
  out += line;
  auto row = [&](const char* name, const EvalBucket& b) {
    std::snprintf(line, sizeof line,
                  "%-10s %6zu %6zu  %8.3f %8.3f %8.3f  %9.3f %9.3f %9.3f\n", name,
                  b.gold, b.system, b.strict.precision(), b.strict.recall(),
                  b.strict.f1(), b.relaxed.precision(), b.relaxed.recall(),
                  b.relaxed.f1());
    out += line;
  };
  for (TimexType type : kTypeOrder) {
    row(timex_type_name(type), report.bucket(type));
  }
  row("overall", report.overall);
  std::snprintf(line, sizeof line, "documents: %zu\n", report.documents);
  out += line;
  return out;
}

namespace {

nlohmann::ordered_json counts_json(const EvalCounts& counts) {
  nlohmann::ordered_json j;
  j["tp"] = counts.tp;
  j["fp"] = counts.fp;
  j["fn"] = counts.fn;
  j["precision"] = counts.precision();
  j["recall"] = counts.recall();
  j["f1"] = counts.f1();
  return j;
}

nlohmann::ordered_json bucket_json(const EvalBucket& bucket) {
  nlohmann::ordered_json j;
  j["gold"] = bucket.gold;
  j["system"] = bucket.system;
  j["strict"] = counts_json(bucket.strict);
  j["relaxed"] = counts_json(bucket.relaxed);
  return j;
}

}  // namespace

std::string to_json(const EvalReport& report) {
  nlohmann::ordered_json j;
  j["documents"] = report.documents;
  j["overall"] = bucket_json(report.overall);
  nlohmann::ordered_json types;
  for (TimexType type : kTypeOrder) {
    types[timex_type_name(type)] = bucket_json(report.bucket(type));
  }
  j["by_type"] = std::move(types);
  return j.dump(2) + "\n";
}

}  // namespace zaman
