#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "natk/catalog.hpp"
#include "natk/commands.hpp"
#include "support.hpp"

using namespace natk;
using natk_test::fixture_path;

namespace {

Json run(Session& session, std::vector<std::string> argv, int expect_exit) {
    CommandResult r = run_command(argv, session);
    CHECK(r.report.exit_code == expect_exit);
    CHECK(r.report.ok == (r.report.exit_code == 0));
    return r.report.to_json();
}

std::filesystem::path temp_dir(const std::string& tag) {
    auto p = std::filesystem::temp_directory_path() / ("natk-test-" + tag);
    std::filesystem::remove_all(p);
    std::filesystem::create_directories(p);
    return p;
}

}  // namespace

TEST_CASE("parsing") {
    NatDocument doc = parse_nat("@monoid M2\norder 2\ntable:\n0 0\n0 1\n");
    REQUIRE(doc.blocks.size() == 1);
    CHECK(doc.blocks[0].kind == "monoid");
    CHECK(doc.blocks[0].name == "M2");
    CHECK(*doc.blocks[0].header("order") == "2");
    REQUIRE(doc.blocks[0].tables.size() == 1);
    CHECK(doc.blocks[0].tables[0].rows.size() == 2);

    CHECK_THROWS_AS(parse_nat("order 2\n"), Error);             // content before a block
    CHECK_THROWS_AS(parse_nat("@monoid M\n"), Error);           // no tables
    CHECK_THROWS_AS(parse_nat("@widget W\norder 1\n"), Error);  // unknown kind
    CHECK_THROWS_AS(parse_nat("@monoid M\n@monoid M\n"), Error);

    SUBCASE("comments and blank lines are ignored") {
        NatDocument d = parse_nat("# header comment\n@monoid M\norder 1\n\ntable:\n0  # row\n");
        CHECK(d.blocks.size() == 1);
    }
}

TEST_CASE("session resolution and validation") {
    Session session;
    CHECK(session.load_all(fixture_path("m2.nat")) == 4);
    CHECK(session.load_all(fixture_path("z9.nat")) == 5);
    CHECK(session.load_all(fixture_path("dickson.nat")) == 3);
    CHECK(session.load_all(fixture_path("m3.nat")) == 6);

    MonoidPtr m = session.monoid(fixture_path("m3.nat") + ":M");
    CHECK(m->order == 3);
    ModulePtr v = session.module_of(fixture_path("z9.nat") + ":V");
    CHECK(v->order() == 81);
    CHECK(v->group.add == fixtures::z9_product_module()->group.add);
    MnrPtr rr = session.multinearring(fixture_path("z9.nat") + ":R");
    CHECK(rr->designated.size() == 2);
    MorphismPtr f = session.morphism(fixture_path("m3.nat") + ":proj21");
    CHECK(f->dom->order() == 9);

    // Near-ring references coerce to their self-modules where a module is due.
    CHECK(session.module_of(fixture_path("m2.nat") + ":F2")->order() == 2);

    CHECK_THROWS_AS(session.value(fixture_path("m2.nat") + ":Nope"), Error);
    CHECK_THROWS_AS(session.value("no-such-file.nat:X"), Error);
}

TEST_CASE("monoid annotations are cross-checked") {
    auto dir = temp_dir("annot");
    {
        std::ofstream out(dir / "ok.nat");
        out << "@monoid M\norder 3\nzero 0\nminus-one 2\ntable:\n0 0 0\n0 1 2\n0 2 1\n";
    }
    {
        std::ofstream out(dir / "bad.nat");
        out << "@monoid M\norder 3\nzero 1\ntable:\n0 0 0\n0 1 2\n0 2 1\n";
    }
    Session session;
    CHECK(session.load_all((dir / "ok.nat").string()) == 1);
    try {
        session.load_all((dir / "bad.nat").string());
        FAIL("expected a validation error");
    } catch (const Error& e) {
        CHECK(e.kind == "AnnotationMismatch");
    }
}

TEST_CASE("canonical emission round-trips byte-exactly") {
    for (const std::string name : {"m2.nat", "m3.nat", "z9.nat", "dickson.nat"}) {
        std::ifstream in(fixture_path(name));
        REQUIRE(in.good());
        std::string text((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
        NatDocument doc = parse_nat(text, name);
        std::string emitted = emit_nat(doc);
        CHECK(emitted == text);
        CHECK(emit_nat(parse_nat(emitted, name)) == emitted);
    }
}

TEST_CASE("check commands") {
    Session session;
    std::string z9 = fixture_path("z9.nat");

    SUBCASE("scalar-group failure carries the non-invertible witness") {
        Json j = run(session, {"check", "scalar-group", z9 + ":M"}, 1);
        CHECK(j["ok"] == false);
        REQUIRE(j["witnesses"].size() == 1);
        CHECK(j["witnesses"][0]["label"] == "non-invertible");
        CHECK(j["witnesses"][0]["elements"] == Json::array({3}));
    }

    SUBCASE("the mixed product fails the module decision with a witness") {
        Json j = run(session, {"check", "andre", z9 + ":V", z9 + ":R"}, 1);
        CHECK(j["ok"] == false);
        CHECK(j["witnesses"][0]["label"] == "not-recovered");
    }

    SUBCASE("valid structures check out") {
        run(session, {"check", "monoid", fixture_path("m3.nat") + ":M"}, 0);
        run(session, {"check", "nearring", fixture_path("m2.nat") + ":F2"}, 0);
        run(session, {"check", "module", fixture_path("m2.nat") + ":Z4"}, 0);
        run(session, {"check", "nvs", fixture_path("dickson.nat") + ":J2"}, 0);
        run(session, {"check", "scalar-group", fixture_path("dickson.nat") + ":M"}, 0);
    }

    SUBCASE("fa-sa") {
        Json j = run(session, {"check", "fa-sa", z9 + ":V"}, 1);
        CHECK(j["details"]["fa"] == false);
    }

    SUBCASE("a broken table is a failed check, not a usage error") {
        auto dir = temp_dir("broken");
        std::ofstream(dir / "bad.nat")
            << "@monoid M\norder 2\ntable:\n0 1\n1 1\n\n@group G\norder 3\nadd:\n0 0 0\n0 1 2\n0 2 1\n";
        Json j = run(session, {"check", "group", (dir / "bad.nat").string() + ":G"}, 1);
        CHECK(j["details"]["kind"] == "NoInverse");
    }

    SUBCASE("JSON reports carry exactly the five keys") {
        Json j = run(session, {"check", "monoid", fixture_path("m2.nat") + ":M"}, 0);
        REQUIRE(j.size() == 5);
        auto it = j.begin();
        CHECK(it.key() == "command");
        CHECK((++it).key() == "ok");
        CHECK((++it).key() == "witnesses");
        CHECK((++it).key() == "details");
        CHECK((++it).key() == "elapsed_ms");
    }
}

TEST_CASE("structure commands") {
    Session session;
    std::string m2 = fixture_path("m2.nat");
    std::string m3 = fixture_path("m3.nat");

    SUBCASE("quasikernel") {
        Json j = run(session, {"quasikernel", m2 + ":Z4"}, 0);
        CHECK(j["details"]["size"] == 2);
        CHECK(j["details"]["elements"] == Json::array({0, 2}));
    }

    SUBCASE("submodules") {
        Json j = run(session, {"submodules", m2 + ":Z4"}, 0);
        CHECK(j["details"]["count"] == 3);
    }

    SUBCASE("enumerate matches the library and emits a parseable catalog") {
        CommandResult r = run_command({"enumerate", "nearrings", m3 + ":M"}, session);
        CHECK(r.report.exit_code == 0);
        CHECK(r.report.details["count"] == 1);
        REQUIRE(r.document.has_value());
        NatDocument doc = parse_nat(*r.document);
        CHECK(doc.blocks.size() == 2);  // monoid + one addition
        CHECK(doc.blocks[1].kind == "nearring");
    }

    SUBCASE("product emits a document equal to the library product") {
        CommandResult r = run_command({"product", m3 + ":P1", m3 + ":P1"}, session);
        REQUIRE(r.document.has_value());
        NatDocument doc = parse_nat(*r.document);
        REQUIRE(doc.blocks.size() == 2);
        auto flat = doc.blocks[1].table("add");
        REQUIRE(flat != nullptr);
        CHECK(flat->rows.size() == 9);
    }

    SUBCASE("quotient of Z/4 by {0,2}") {
        CommandResult r = run_command({"quotient", m2 + ":Z4", "2"}, session);
        CHECK(r.report.exit_code == 0);
        CHECK(r.report.details["submodule_size"] == 2);
        CHECK(r.report.details["quotient_order"] == 2);
        REQUIRE(r.document.has_value());
        NatDocument doc = parse_nat(*r.document);
        CHECK(doc.blocks.size() == 4);  // monoid, ambient, quotient, projection

        // The emitted document revalidates as a whole.
        auto dir = temp_dir("quotient");
        std::ofstream(dir / "q.nat") << *r.document;
        Session fresh;
        CHECK(fresh.load_all((dir / "q.nat").string()) == 4);
    }

    SUBCASE("factorize the shipped projection") {
        Json j = run(session, {"factorize", m3 + ":proj21"}, 0);
        CHECK(j["details"]["kernel_size"] == 3);
        CHECK(j["details"]["image_size"] == 3);
        CHECK(j["details"]["cokernel_order"] == 1);
    }

    SUBCASE("decompose on a vector space") {
        Json j = run(session, {"decompose", m3 + ":P2", "4"}, 0);
        CHECK(j["details"]["m_v"] == 1);
        CHECK(j["details"]["parts"] == Json::array({4}));
    }

    SUBCASE("decompose reports the failed hypothesis on the mixed product") {
        std::string z9 = fixture_path("z9.nat");
        Json j = run(session, {"decompose", z9 + ":V", "10", z9 + ":R"}, 1);
        CHECK(j["witnesses"][0]["label"] == "QK3");
    }

    SUBCASE("tfae") {
        run(session, {"tfae", m3 + ":P2"}, 0);
        Json j = run(session, {"tfae", fixture_path("z9.nat") + ":V"}, 2);
        CHECK(j["details"]["kind"] == "NotNearVectorSpace");
    }
}

TEST_CASE("verify verbs") {
    Session session;
    Json j = run(session, {"verify", "hash"}, 0);
    CHECK(j["details"]["criteria"].size() > 5);
    for (const auto& c : j["details"]["criteria"]) CHECK(c["ok"] == true);

    run(session, {"verify", "singleR", "--seed", "7"}, 0);
}

TEST_CASE("usage errors exit with 2") {
    Session session;
    run(session, {"frobnicate"}, 2);
    run(session, {"check"}, 2);
    run(session, {"check", "monoid"}, 2);
    run(session, {"check", "monoid", "missing.nat:M"}, 2);
    run(session, {"enumerate", "nearrings", fixture_path("m3.nat") + ":M", "--badflag"}, 2);
    run(session, {"product", fixture_path("m3.nat") + ":P1",
                  fixture_path("m2.nat") + ":Z4"},
        2);
}

TEST_CASE("catalog scan") {
    auto dir = temp_dir("catalog");
    for (const std::string name : {"m2.nat", "m3.nat"})
        std::filesystem::copy_file(fixture_path(name), dir / name);

    CatalogResult r1 = catalog_scan(dir.string());
    CHECK(r1.files == 2);
    CHECK(r1.blocks == 10);

    std::ifstream in(r1.index_path);
    std::string first;
    std::getline(in, first);
    CHECK(first == "name\tkind\torder\thash\tfile");
    std::string body((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

    CatalogResult r2 = catalog_scan(dir.string());
    std::ifstream again(r2.index_path);
    std::string text2((std::istreambuf_iterator<char>(again)),
                      std::istreambuf_iterator<char>());
    CHECK(text2 == first + "\n" + body);

    Session session;
    Json j = run(session, {"catalog", "scan", dir.string()}, 0);
    CHECK(j["details"]["blocks"] == 10);
}

TEST_CASE("reports are deterministic across worker counts") {
    Session s1, s4;
    std::string z9 = fixture_path("z9.nat");
    Json a = run(s1, {"check", "fa-sa", z9 + ":V", "--threads", "1"}, 1);
    Json b = run(s4, {"check", "fa-sa", z9 + ":V", "--threads", "4"}, 1);
    a.erase("elapsed_ms");
    b.erase("elapsed_ms");
    CHECK(a == b);
}

TEST_CASE("emitted documents regenerate the shipped fixtures") {
    // Guards fixture drift: the committed files are exactly what the
    // generator produces today.
    Session session;
    MultiNearRing r = fixtures::z9_multi();
    NatDocument doc;
    doc.blocks.push_back(block_of_monoid("M", *r.monoid));
    doc.blocks.push_back(block_of_nearring("Nplus", "M", *r.designated[0]));
    doc.blocks.push_back(block_of_nearring("Nphi", "M", *r.designated[1]));
    doc.blocks.push_back(block_of_multinearring("R", "M", r));
    doc.blocks.push_back(block_of_module("V", "M", *fixtures::z9_product_module()));

    std::ifstream in(fixture_path("z9.nat"));
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(emit_nat(doc) == text);
}
