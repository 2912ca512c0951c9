#include <doctest.h>

#include <natk/natk.h>

#include <json.hpp>
#include <string>
#include <vector>

namespace {

std::string fixture(const std::string& name) {
    return std::string(NATK_SOURCE_DIR) + "/fixtures/" + name;
}

struct SessionGuard {
    natk_session* s = natk_session_new();
    ~SessionGuard() { natk_session_free(s); }
};

natk_status run(natk_session* s, std::vector<std::string> args, natk_report** rep) {
    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    return natk_run(s, static_cast<int>(argv.size()), argv.data(), rep);
}

}  // namespace

TEST_CASE("session lifecycle and document loading") {
    SessionGuard g;
    REQUIRE(g.s != nullptr);
    CHECK(natk_session_load(g.s, fixture("z9.nat").c_str()) == 5);
    CHECK(std::string(natk_session_last_error(g.s)).empty());
    CHECK(natk_session_load(g.s, "missing.nat") == -1);
    CHECK_FALSE(std::string(natk_session_last_error(g.s)).empty());
}

TEST_CASE("property failure surfaces witnesses through the JSON report") {
    SessionGuard g;
    natk_report* rep = nullptr;
    natk_status st = run(g.s, {"check", "scalar-group", fixture("z9.nat") + ":M"}, &rep);
    REQUIRE(rep != nullptr);
    CHECK(st == NATK_PROPERTY_FAILED);
    CHECK(natk_report_ok(rep) == 0);
    CHECK(natk_report_exit_code(rep) == 1);

    auto j = nlohmann::json::parse(natk_report_json(rep));
    CHECK(j["command"] == "check scalar-group");
    CHECK(j["ok"] == false);
    CHECK(j["witnesses"][0]["label"] == "non-invertible");
    CHECK(j["witnesses"][0]["elements"][0] == 3);
    REQUIRE(j.contains("details"));
    REQUIRE(j.contains("elapsed_ms"));

    CHECK(std::string(natk_report_text(rep)).find("non-invertible") != std::string::npos);
    natk_report_free(rep);
}

TEST_CASE("success path and emitted documents") {
    SessionGuard g;
    natk_report* rep = nullptr;
    CHECK(run(g.s, {"check", "nvs", fixture("dickson.nat") + ":J2"}, &rep) == NATK_OK);
    CHECK(natk_report_ok(rep) == 1);
    CHECK(natk_report_document(rep) == nullptr);
    natk_report_free(rep);

    rep = nullptr;
    CHECK(run(g.s, {"enumerate", "nearrings", fixture("m3.nat") + ":M", "--no-json"}, &rep) ==
          NATK_OK);
    REQUIRE(rep != nullptr);
    CHECK(natk_report_wants_json(rep) == 0);
    REQUIRE(natk_report_document(rep) != nullptr);
    CHECK(std::string(natk_report_document(rep)).find("@nearring") != std::string::npos);
    natk_report_free(rep);
}

TEST_CASE("usage errors") {
    SessionGuard g;
    natk_report* rep = nullptr;
    CHECK(run(g.s, {"no-such-verb"}, &rep) == NATK_ERROR);
    REQUIRE(rep != nullptr);
    CHECK(natk_report_exit_code(rep) == 2);
    natk_report_free(rep);

    CHECK(run(g.s, {}, &rep) == NATK_ERROR);
    natk_report_free(rep);
}

TEST_CASE("version") {
    CHECK(std::string(natk_version()) == "1.0.0");
}
