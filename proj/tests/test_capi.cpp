#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pexeq/pexeq.h"

#include "json.hpp"

#include <string>
#include <vector>

using nlohmann::json;

extern "C" int pexeq_c_smoke(void);

namespace {

std::string take(char* s) {
    REQUIRE(s != nullptr);
    std::string out(s);
    pexeq_string_free(s);
    return out;
}

std::vector<json> parse_jsonl(const std::string& text) {
    std::vector<json> rows;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string::npos) end = text.size();
        if (end > start) rows.push_back(json::parse(text.substr(start, end - start)));
        start = end + 1;
    }
    return rows;
}

} // namespace

TEST_CASE("the header works from plain C") {
    CHECK(pexeq_c_smoke() == 0);
}

TEST_CASE("version and error state") {
    CHECK(std::string(pexeq_version()) == "1.0.0");
    char* out = nullptr;
    CHECK(pexeq_solve("3", "5", "2", "1048576", &out) == PEXEQ_OK);
    take(out);
    CHECK(std::string(pexeq_last_error()).empty());
}

TEST_CASE("solve emits the three landmark rows") {
    char* out = nullptr;
    REQUIRE(pexeq_solve("3", "5", "2", "2^20", &out) == PEXEQ_OK);
    auto rows = parse_jsonl(take(out));
    REQUIRE(rows.size() == 3);
    CHECK(rows[0] == json::parse(R"({"x":1,"y":1,"z":3,"value":"8"})"));
    CHECK(rows[1]["z"] == 5);
    CHECK(rows[2]["z"] == 7);
}

TEST_CASE("solve rejects invalid triples with a useful message") {
    char* out = nullptr;
    CHECK(pexeq_solve("4", "6", "2", "100", &out) == PEXEQ_INVALID_ARGUMENT);
    CHECK(std::string(pexeq_last_error()).find("coprime") != std::string::npos);
    CHECK(pexeq_solve(nullptr, "6", "2", "100", &out) == PEXEQ_INVALID_ARGUMENT);
    CHECK(pexeq_solve("3", "5", "2", "junk", &out) == PEXEQ_INVALID_ARGUMENT);
}

TEST_CASE("count uses the triple-relative height form") {
    char* out = nullptr;
    REQUIRE(pexeq_count("2", "5", "133", "c^4", &out) == PEXEQ_OK);
    CHECK(take(out) == "{\"count\":2}\n");
}

TEST_CASE("exceptional verification succeeds in auto mode") {
    char* out = nullptr;
    REQUIRE(pexeq_exceptional_verify(5, "auto", &out) == PEXEQ_OK);
    auto rows = parse_jsonl(take(out));
    REQUIRE(rows.size() == 15);
    for (const json& row : rows) {
        CHECK(row["exceptional"] == true);
        CHECK(row["N"].get<int>() >= 2);
    }
    CHECK(pexeq_exceptional_verify(1, "auto", &out) == PEXEQ_INVALID_ARGUMENT);
}

TEST_CASE("system search returns the two known rows for c = 3") {
    char* out = nullptr;
    REQUIRE(pexeq_system_search("3", "10000", 40, &out) == PEXEQ_OK);
    auto rows = parse_jsonl(take(out));
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == json::parse(R"({"a":"2","b":"5","c":"3","z":2,"Z":3})"));
    CHECK(rows[1] == json::parse(R"({"a":"5","b":"2","c":"3","z":3,"Z":2})"));
}

TEST_CASE("certify produces a parsable certificate") {
    char* out = nullptr;
    REQUIRE(pexeq_certify(50, 12, &out) == PEXEQ_OK);
    json cert = json::parse(take(out));
    CHECK(cert["solutions"].size() == 2);
    CHECK(cert["oracle_agrees"] == true);
    CHECK(cert["traces"].size() == 52);
    CHECK(cert["traces"][0]["verdict"] == "solution");
    CHECK(cert["traces"][51]["branch"] == "f_ge_2_m_eq_2");
}

TEST_CASE("scan handles expose rows, checksum and serializations") {
    pexeq_report* whole = nullptr;
    REQUIRE(pexeq_scan(13, 13, 13, "1000000", 1, 2, &whole) == PEXEQ_OK);
    REQUIRE(whole != nullptr);
    CHECK(pexeq_report_row_count(whole) > 0);
    CHECK(pexeq_report_finding_count(whole) == 0);

    pexeq_report* low = nullptr;
    pexeq_report* high = nullptr;
    REQUIRE(pexeq_scan_shard(13, 13, 13, "1000000", 1, 1, 2, 7, &low) == PEXEQ_OK);
    REQUIRE(pexeq_scan_shard(13, 13, 13, "1000000", 1, 1, 8, 13, &high) == PEXEQ_OK);

    const pexeq_report* parts[] = {low, high};
    pexeq_report* merged = nullptr;
    REQUIRE(pexeq_report_merge(parts, 2, &merged) == PEXEQ_OK);
    CHECK(pexeq_report_checksum(merged) == pexeq_report_checksum(whole));
    CHECK(pexeq_report_row_count(merged) == pexeq_report_row_count(whole));

    char* out = nullptr;
    REQUIRE(pexeq_report_jsonl(whole, &out) == PEXEQ_OK);
    auto rows = parse_jsonl(take(out));
    CHECK(rows.size() == pexeq_report_row_count(whole));

    REQUIRE(pexeq_report_metadata_json(whole, &out) == PEXEQ_OK);
    json meta = json::parse(take(out));
    CHECK(meta["workers"] == 2);
    CHECK(meta["checksum"].is_string());

    REQUIRE(pexeq_report_tsv(whole, &out) == PEXEQ_OK);
    CHECK(take(out).rfind("a\tb\tc", 0) == 0);

    // overlapping shards are rejected
    const pexeq_report* bad[] = {whole, low};
    pexeq_report* dummy = nullptr;
    CHECK(pexeq_report_merge(bad, 2, &dummy) == PEXEQ_INVALID_ARGUMENT);

    pexeq_report_free(whole);
    pexeq_report_free(low);
    pexeq_report_free(high);
    pexeq_report_free(merged);
}

TEST_CASE("verification failures map to PEXEQ_VERIFY_FAILED") {
    // (2,5,7) is not in the set; a strict bound cannot find two solutions.
    char* out = nullptr;
    CHECK(pexeq_count("2", "5", "7", "7^12", &out) == PEXEQ_OK);
    CHECK(take(out) == "{\"count\":1}\n");
    // certify with a tiny r_scan still succeeds; force a failure through the
    // exceptional path instead by bounding the height too low.
    CHECK(pexeq_exceptional_verify(2, "10", &out) == PEXEQ_VERIFY_FAILED);
    CHECK(std::string(pexeq_last_error()).find("fewer than 2") != std::string::npos);
}
