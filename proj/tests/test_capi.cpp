#include <doctest.h>

#include <zaman.h>

#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

struct LexiconHandle {
    zaman_lexicon* ptr = nullptr;
    ~LexiconHandle() { zaman_lexicon_free(ptr); }
};

struct TaggerHandle {
    zaman_tagger* ptr = nullptr;
    ~TaggerHandle() { zaman_tagger_free(ptr); }
};

struct DocumentHandle {
    zaman_document* ptr = nullptr;
    ~DocumentHandle() { zaman_document_free(ptr); }
};

struct EvaluatorHandle {
    zaman_evaluator* ptr = nullptr;
    ~EvaluatorHandle() { zaman_evaluator_free(ptr); }
};

struct StringHandle {
    char* ptr = nullptr;
    ~StringHandle() { zaman_string_free(ptr); }
};

void make_tagger(LexiconHandle& lex, TaggerHandle& tagger) {
    REQUIRE(zaman_lexicon_default(&lex.ptr) == ZAMAN_OK);
    REQUIRE(zaman_tagger_new(lex.ptr, &tagger.ptr) == ZAMAN_OK);
}

}  // namespace

TEST_CASE("version and initial error state") {
    REQUIRE(zaman_version() != nullptr);
    CHECK(std::string(zaman_version()) == "0.1.0");
    REQUIRE(zaman_last_error() != nullptr);
}

TEST_CASE("tagging a sentence end to end") {
    LexiconHandle lex;
    TaggerHandle tagger;
    make_tagger(lex, tagger);
    CHECK(zaman_lexicon_entry_count(lex.ptr) > 4000);  // generated numerals

    zaman_options opt{};
    opt.ref_date = "2015-03-24";
    DocumentHandle doc;
    REQUIRE(zaman_tag(tagger.ptr, "Toplantı dün akşam yapıldı.", &opt, &doc.ptr) ==
            ZAMAN_OK);
    CHECK(std::string(zaman_document_text(doc.ptr)) == "Toplantı dün akşam yapıldı.");
    REQUIRE(zaman_document_count(doc.ptr) == 1);

    zaman_timex t{};
    REQUIRE(zaman_document_timex(doc.ptr, 0, &t) == ZAMAN_OK);
    CHECK(std::string(t.tid) == "t1");
    CHECK(std::string(t.type) == "TIME");
    CHECK(std::string(t.value) == "2015-03-23TEV");
    CHECK(t.quant == nullptr);
    CHECK(t.freq == nullptr);
    CHECK(std::string(t.text) == "dün akşam");
    CHECK(std::string(zaman_document_text(doc.ptr)).substr(t.begin, t.end - t.begin) ==
          "dün akşam");

    CHECK(zaman_document_diagnostic_count(doc.ptr) == 0);
    CHECK(zaman_document_diagnostic(doc.ptr, 0) == nullptr);

    // Out-of-range timex index is an argument error.
    CHECK(zaman_document_timex(doc.ptr, 5, &t) == ZAMAN_ERR_INVALID_ARGUMENT);
    CHECK(std::strlen(zaman_last_error()) > 0);
}

TEST_CASE("set attributes cross the boundary") {
    LexiconHandle lex;
    TaggerHandle tagger;
    make_tagger(lex, tagger);
    DocumentHandle doc;
    REQUIRE(zaman_tag(tagger.ptr, "her ay ve haftada iki kez", nullptr, &doc.ptr) ==
            ZAMAN_OK);
    REQUIRE(zaman_document_count(doc.ptr) == 2);
    zaman_timex a{};
    zaman_timex b{};
    REQUIRE(zaman_document_timex(doc.ptr, 0, &a) == ZAMAN_OK);
    REQUIRE(zaman_document_timex(doc.ptr, 1, &b) == ZAMAN_OK);
    CHECK(std::string(a.type) == "SET");
    REQUIRE(a.quant != nullptr);
    CHECK(std::string(a.quant) == "EVERY");
    CHECK(a.freq == nullptr);
    REQUIRE(b.freq != nullptr);
    CHECK(std::string(b.freq) == "2X");
    CHECK(std::string(b.tid) == "t2");
}

TEST_CASE("diagnostics surface missing-reference fallbacks") {
    LexiconHandle lex;
    TaggerHandle tagger;
    make_tagger(lex, tagger);
    DocumentHandle doc;
    REQUIRE(zaman_tag(tagger.ptr, "dün geldi", nullptr, &doc.ptr) == ZAMAN_OK);
    REQUIRE(zaman_document_diagnostic_count(doc.ptr) == 1);
    const char* diag = zaman_document_diagnostic(doc.ptr, 0);
    REQUIRE(diag != nullptr);
    CHECK(std::string(diag).find("no reference date") != std::string::npos);
}

TEST_CASE("error paths set statuses and messages") {
    LexiconHandle lex;
    TaggerHandle tagger;
    make_tagger(lex, tagger);

    DocumentHandle doc;
    CHECK(zaman_tag(nullptr, "x", nullptr, &doc.ptr) == ZAMAN_ERR_INVALID_ARGUMENT);
    CHECK(zaman_tag(tagger.ptr, nullptr, nullptr, &doc.ptr) == ZAMAN_ERR_INVALID_ARGUMENT);
    CHECK(zaman_tag(tagger.ptr, "x", nullptr, nullptr) == ZAMAN_ERR_INVALID_ARGUMENT);

    CHECK(zaman_tag(tagger.ptr, "ge\xff\xfelen", nullptr, &doc.ptr) ==
          ZAMAN_ERR_BAD_INPUT);
    CHECK(std::string(zaman_last_error()).find("UTF-8") != std::string::npos);

    zaman_options opt{};
    opt.ref_date = "2015-13-01";
    CHECK(zaman_tag(tagger.ptr, "dün", &opt, &doc.ptr) == ZAMAN_ERR_BAD_INPUT);
    opt.ref_date = "yakında";
    CHECK(zaman_tag(tagger.ptr, "dün", &opt, &doc.ptr) == ZAMAN_ERR_BAD_INPUT);

    zaman_lexicon* out = nullptr;
    CHECK(zaman_lexicon_load("/nonexistent/lexicon.tsv", &out) == ZAMAN_ERR_IO);
    CHECK(zaman_lexicon_with_overrides(nullptr, &out) == ZAMAN_ERR_INVALID_ARGUMENT);

    const auto bad = std::filesystem::temp_directory_path() / "zaman_capi_bad.tsv";
    {
        std::ofstream f(bad);
        f << "BOGUS\tword\t1\n";
    }
    CHECK(zaman_lexicon_with_overrides(bad.string().c_str(), &out) == ZAMAN_ERR_PARSE);
    CHECK(std::string(zaman_last_error()).find(":1:") != std::string::npos);
    std::filesystem::remove(bad);

    zaman_document* gold = nullptr;
    CHECK(zaman_parse_gold("a < b", &gold) == ZAMAN_ERR_PARSE);
    CHECK(std::string(zaman_last_error()).find("offset") != std::string::npos);
}

TEST_CASE("custom lexicon changes tagging") {
    const auto path = std::filesystem::temp_directory_path() / "zaman_capi_extra.tsv";
    {
        std::ofstream f(path);
        f << "MON\tfoomoon\t6\n";
    }
    LexiconHandle lex;
    REQUIRE(zaman_lexicon_with_overrides(path.string().c_str(), &lex.ptr) == ZAMAN_OK);
    std::filesystem::remove(path);

    TaggerHandle tagger;
    REQUIRE(zaman_tagger_new(lex.ptr, &tagger.ptr) == ZAMAN_OK);
    DocumentHandle doc;
    REQUIRE(zaman_tag(tagger.ptr, "23 foomoon 2015", nullptr, &doc.ptr) == ZAMAN_OK);
    REQUIRE(zaman_document_count(doc.ptr) == 1);
    zaman_timex t{};
    REQUIRE(zaman_document_timex(doc.ptr, 0, &t) == ZAMAN_OK);
    CHECK(std::string(t.value) == "2015-06-23");
}

TEST_CASE("strict case option applies") {
    LexiconHandle lex;
    TaggerHandle tagger;
    make_tagger(lex, tagger);
    zaman_options opt{};
    opt.strict_case = 1;
    DocumentHandle doc;
    REQUIRE(zaman_tag(tagger.ptr, "23 mart 2015", &opt, &doc.ptr) == ZAMAN_OK);
    // The lowercase month is ignored; only the bare year still reads as a date.
    REQUIRE(zaman_document_count(doc.ptr) == 1);
    zaman_timex bare{};
    REQUIRE(zaman_document_timex(doc.ptr, 0, &bare) == ZAMAN_OK);
    CHECK(std::string(bare.value) == "2015");
    CHECK(std::string(bare.text) == "2015");
    DocumentHandle doc2;
    REQUIRE(zaman_tag(tagger.ptr, "23 Mart 2015", &opt, &doc2.ptr) == ZAMAN_OK);
    REQUIRE(zaman_document_count(doc2.ptr) == 1);
    zaman_timex full{};
    REQUIRE(zaman_document_timex(doc2.ptr, 0, &full) == ZAMAN_OK);
    CHECK(std::string(full.value) == "2015-03-23");
}

TEST_CASE("rendering round-trips through parse_gold") {
    LexiconHandle lex;
    TaggerHandle tagger;
    make_tagger(lex, tagger);
    zaman_options opt{};
    opt.ref_date = "2015-03-23";
    DocumentHandle doc;
    REQUIRE(zaman_tag(tagger.ptr, "Rapor 23 Mart 2015 tarihinde okundu.", &opt,
                      &doc.ptr) == ZAMAN_OK);

    StringHandle inline_out;
    REQUIRE(zaman_render_inline(doc.ptr, &inline_out.ptr) == ZAMAN_OK);
    const std::string rendered = inline_out.ptr;
    CHECK(rendered.find("<TIMEX3 tid=\"t1\" type=\"DATE\" value=\"2015-03-23\">") !=
          std::string::npos);

    DocumentHandle parsed;
    REQUIRE(zaman_parse_gold(rendered.c_str(), &parsed.ptr) == ZAMAN_OK);
    CHECK(zaman_document_count(parsed.ptr) == 1);
    CHECK(std::string(zaman_document_text(parsed.ptr)) ==
          std::string(zaman_document_text(doc.ptr)));

    StringHandle standoff;
    REQUIRE(zaman_render_standoff(doc.ptr, &standoff.ptr) == ZAMAN_OK);
    CHECK(std::string(standoff.ptr).find("\"type\": \"DATE\"") != std::string::npos);
}

TEST_CASE("evaluator aggregates documents") {
    LexiconHandle lex;
    TaggerHandle tagger;
    make_tagger(lex, tagger);
    zaman_options opt{};
    opt.ref_date = "2015-03-23";

    const char* gold_text =
        "Rapor <TIMEX3 tid=\"t1\" type=\"DATE\" value=\"2015-03-23\">23 Mart 2015"
        "</TIMEX3> tarihinde okundu.";
    DocumentHandle gold;
    REQUIRE(zaman_parse_gold(gold_text, &gold.ptr) == ZAMAN_OK);

    DocumentHandle sys;
    REQUIRE(zaman_tag(tagger.ptr, zaman_document_text(gold.ptr), &opt, &sys.ptr) ==
            ZAMAN_OK);

    EvaluatorHandle ev;
    REQUIRE(zaman_evaluator_new(&ev.ptr) == ZAMAN_OK);
    CHECK(zaman_evaluator_strict_f1(ev.ptr) == 0.0);
    REQUIRE(zaman_evaluator_add(ev.ptr, gold.ptr, sys.ptr) == ZAMAN_OK);
    CHECK(zaman_evaluator_strict_f1(ev.ptr) == 1.0);

    StringHandle text;
    REQUIRE(zaman_evaluator_report_text(ev.ptr, &text.ptr) == ZAMAN_OK);
    CHECK(std::string(text.ptr).find("overall") != std::string::npos);

    StringHandle json;
    REQUIRE(zaman_evaluator_report_json(ev.ptr, &json.ptr) == ZAMAN_OK);
    CHECK(std::string(json.ptr).find("\"documents\": 1") != std::string::npos);

    CHECK(zaman_evaluator_add(nullptr, gold.ptr, sys.ptr) == ZAMAN_ERR_INVALID_ARGUMENT);
}
