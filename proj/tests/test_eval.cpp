#include <doctest.h>

#include "eval.hpp"
#include "normalize.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

using namespace zaman;

namespace {

Timex3 make(TimexType type, const std::string& value, std::size_t begin, std::size_t end) {
    Timex3 t;
    t.type = type;
    t.value = value;
    t.begin = begin;
    t.end = end;
    t.text = "x";
    return t;
}

}  // namespace

TEST_CASE("zero denominators stay zero") {
    EvalCounts c;
    CHECK(c.precision() == 0.0);
    CHECK(c.recall() == 0.0);
    CHECK(c.f1() == 0.0);

    EvalReport report;
    eval_add(report, {}, {});
    CHECK(report.documents == 1);
    CHECK(report.overall.strict == EvalCounts{});
}

TEST_CASE("exact match scores strict and relaxed") {
    EvalReport report;
    auto g = make(TimexType::DATE, "2015-03-23", 0, 10);
    eval_add(report, {g}, {g});
    CHECK(report.overall.strict.tp == 1);
    CHECK(report.overall.strict.fp == 0);
    CHECK(report.overall.strict.fn == 0);
    CHECK(report.overall.relaxed.tp == 1);
    CHECK(report.overall.gold == 1);
    CHECK(report.overall.system == 1);
    CHECK(report.bucket(TimexType::DATE).strict.tp == 1);
    CHECK(report.bucket(TimexType::TIME).gold == 0);
}

TEST_CASE("one exact plus one spurious gives precision half, recall one") {
    EvalReport report;
    auto g = make(TimexType::DATE, "2015-03-23", 0, 10);
    auto spurious = make(TimexType::DATE, "2016", 20, 24);
    eval_add(report, {g}, {g, spurious});
    CHECK(report.overall.strict.tp == 1);
    CHECK(report.overall.strict.fp == 1);
    CHECK(report.overall.strict.fn == 0);
    CHECK(report.overall.strict.precision() == doctest::Approx(0.5));
    CHECK(report.overall.strict.recall() == doctest::Approx(1.0));
    CHECK(report.overall.strict.f1() == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("same span with different attributes is strict fp+fn but relaxed tp") {
    EvalReport report;
    auto gold = make(TimexType::DATE, "2015-03-23", 0, 10);
    auto sys = make(TimexType::DATE, "2015-03-24", 0, 10);
    eval_add(report, {gold}, {sys});
    CHECK(report.overall.strict.tp == 0);
    CHECK(report.overall.strict.fp == 1);
    CHECK(report.overall.strict.fn == 1);
    CHECK(report.overall.relaxed.tp == 1);
    CHECK(report.overall.relaxed.fp == 0);
    CHECK(report.overall.relaxed.fn == 0);

    // quant differences also break strict credit.
    EvalReport r2;
    auto gset = make(TimexType::SET, "P1D", 0, 10);
    gset.quant = "EVERY";
    auto sset = make(TimexType::SET, "P1D", 0, 10);
    eval_add(r2, {gset}, {sset});
    CHECK(r2.overall.strict.tp == 0);
    CHECK(r2.overall.relaxed.tp == 1);
}

TEST_CASE("overlap with same type earns relaxed credit only") {
    EvalReport report;
    auto gold = make(TimexType::TIME, "T14:00", 5, 20);
    auto sys = make(TimexType::TIME, "T15:00", 10, 25);
    eval_add(report, {gold}, {sys});
    CHECK(report.overall.strict.tp == 0);
    CHECK(report.overall.relaxed.tp == 1);

    // Overlap with a different type is no credit at all.
    EvalReport r2;
    auto gdate = make(TimexType::DATE, "2015", 5, 20);
    auto stime = make(TimexType::TIME, "T14:00", 10, 25);
    eval_add(r2, {gdate}, {stime});
    CHECK(r2.overall.relaxed.tp == 0);
    CHECK(r2.overall.relaxed.fp == 1);
    CHECK(r2.overall.relaxed.fn == 1);

    // Adjacent (touching) spans do not overlap.
    EvalReport r3;
    auto a = make(TimexType::DATE, "2015", 0, 10);
    auto b = make(TimexType::DATE, "2015", 10, 20);
    eval_add(r3, {a}, {b});
    CHECK(r3.overall.relaxed.tp == 0);
}

TEST_CASE("relaxed matching is one-to-one") {
    // Two system spans overlapping one gold: only one may claim it.
    EvalReport report;
    auto gold = make(TimexType::DATE, "2015", 0, 20);
    auto s1 = make(TimexType::DATE, "2015", 0, 8);
    auto s2 = make(TimexType::DATE, "2016", 9, 20);
    eval_add(report, {gold}, {s1, s2});
    CHECK(report.overall.relaxed.tp == 1);
    CHECK(report.overall.relaxed.fp == 1);
    CHECK(report.overall.relaxed.fn == 0);
}

TEST_CASE("per-type rows filter both sides") {
    EvalReport report;
    auto gdate = make(TimexType::DATE, "2015-03-23", 0, 10);
    auto gdur = make(TimexType::DURATION, "P2D", 20, 27);
    auto sdate = make(TimexType::DATE, "2015-03-23", 0, 10);
    auto sset = make(TimexType::SET, "P1W", 40, 47);
    eval_add(report, {gdate, gdur}, {sdate, sset});

    CHECK(report.bucket(TimexType::DATE).strict.tp == 1);
    CHECK(report.bucket(TimexType::DURATION).gold == 1);
    CHECK(report.bucket(TimexType::DURATION).strict.fn == 1);
    CHECK(report.bucket(TimexType::SET).system == 1);
    CHECK(report.bucket(TimexType::SET).strict.fp == 1);
    CHECK(report.overall.strict.tp == 1);
    CHECK(report.overall.strict.fp == 1);  // tp + fp covers both system spans
    CHECK(report.overall.strict.fn == 1);
}

TEST_CASE("micro average accumulates across documents") {
    EvalReport report;
    auto a = make(TimexType::DATE, "2015", 0, 4);
    auto b = make(TimexType::TIME, "T14:00", 0, 5);
    eval_add(report, {a}, {a});
    eval_add(report, {b}, {});
    eval_add(report, {}, {b});
    CHECK(report.documents == 3);
    CHECK(report.overall.strict.tp == 1);
    CHECK(report.overall.strict.fn == 1);
    CHECK(report.overall.strict.fp == 1);
    CHECK(report.overall.gold == 2);
    CHECK(report.overall.system == 2);
}

TEST_CASE("text report lists all four types and overall") {
    EvalReport report;
    auto a = make(TimexType::DATE, "2015", 0, 4);
    eval_add(report, {a}, {a});
    const std::string text = to_text(report);
    CHECK(text.find("DATE") != std::string::npos);
    CHECK(text.find("TIME") != std::string::npos);
    CHECK(text.find("DURATION") != std::string::npos);
    CHECK(text.find("SET") != std::string::npos);
    CHECK(text.find("overall") != std::string::npos);
    CHECK(text.find("documents: 1") != std::string::npos);
    CHECK(text.find("1.000") != std::string::npos);
}

TEST_CASE("json report carries the full structure") {
    EvalReport report;
    auto a = make(TimexType::DATE, "2015", 0, 4);
    auto miss = make(TimexType::TIME, "T14:00", 10, 15);
    eval_add(report, {a, miss}, {a});
    const std::string text = to_json(report);
    CHECK(text.back() == '\n');
    auto doc = nlohmann::json::parse(text);
    CHECK(doc["documents"] == 1);
    CHECK(doc["overall"]["gold"] == 2);
    CHECK(doc["overall"]["system"] == 1);
    CHECK(doc["overall"]["strict"]["tp"] == 1);
    CHECK(doc["overall"]["strict"]["fn"] == 1);
    CHECK(doc["overall"]["strict"]["precision"] == 1.0);
    CHECK(doc["overall"]["strict"]["recall"] == 0.5);
    CHECK(doc["by_type"].contains("DATE"));
    CHECK(doc["by_type"].contains("TIME"));
    CHECK(doc["by_type"]["TIME"]["strict"]["fn"] == 1);
}
