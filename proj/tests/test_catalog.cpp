#include "chx/catalog.hpp"

#include "chx/genus.hpp"
#include "chx/hodge.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>

using namespace chx;

namespace {

std::string message_of(const std::function<void()>& action) {
    try {
        action();
    } catch (const std::exception& e) {
        return e.what();
    }
    return "";
}

bool contains(const std::string& text, const std::string& needle) {
    return text.find(needle) != std::string::npos;
}

std::string replaced(std::string text, const std::string& from, const std::string& to) {
    const auto at = text.find(from);
    REQUIRE(at != std::string::npos);
    return text.replace(at, from.size(), to);
}

}  // namespace

TEST_CASE("every builtin validates cleanly") {
    for (const std::string& name : builtin_names()) {
        const ManifoldRecord r = build_builtin(name);
        CHECK(r.name == name);
        const auto problems = validate_record(r);
        CHECK_MESSAGE(problems.empty(), name, ": ",
                      problems.empty() ? "" : problems.front());
    }
    CHECK_THROWS_AS((void)build_builtin("no_such_space"), std::invalid_argument);
}

TEST_CASE("cubic fourfold record") {
    const ManifoldRecord r = build_cubic4();
    CHECK(r.dim == 4);
    CHECK(record_betti(r, 2) == 1);
    CHECK(record_betti(r, 4) == 23);
    CHECK(record_euler(r) == 27);
    CHECK(r.stored.at("signature") == 19);
    CHECK(r.stored.at("signature_reported") == 23);
    CHECK(r.tags.count("fano") == 1);
    REQUIRE(r.hodge.has_value());
    CHECK(signature_from_hodge_legacy(*r.hodge) == 23);
}

TEST_CASE("Hilbert square of K3 record") {
    const ManifoldRecord r = build_hilb2_k3();
    CHECK(r.dim == 4);
    CHECK(record_betti(r, 2) == 23);
    CHECK(record_betti(r, 3) == 0);
    CHECK(record_betti(r, 4) == 276);
    CHECK(record_euler(r) == 324);
    CHECK(r.stored.at("chi0") == 3);
    CHECK(r.stored.at("signature") == 156);
    CHECK(r.stored.at("degree") == 12);
    REQUIRE(r.fujiki.has_value());
    CHECK(r.fujiki->constant == 3);
    CHECK(r.fujiki->q_generator == 2);
    CHECK(r.tags.count("hyperkahler") == 1);
    CHECK(r.tags.count("K_trivial") == 1);

    REQUIRE(r.model.has_value());
    CHECK(r.model->canonical_index == 0);
    CHECK(pairing_number(*r.model, 2, Partition{2}) == 60);
    CHECK(pairing_number(*r.model, 4, Partition{}) == 12);
    CHECK(chern_number(*r.model, Partition{2, 2}) == 828);
    CHECK(hrr_chi(*r.model, 0) == 3);
    CHECK(l_genus_signature(*r.model) == 156);
}

TEST_CASE("Hilbert square bookkeeping for a formal surface") {
    ManifoldRecord surface;
    surface.name = "formal";
    surface.dim = 2;
    surface.stored["euler"] = Rational(0);
    const ManifoldRecord square = build_hilb2(surface);
    CHECK(square.dim == 4);
    CHECK(square.name == "formal^[2]");
    CHECK(square.stored.at("euler") == 0);
    CHECK(square.stored.count("b2") == 0);
    CHECK(!square.hodge.has_value());

    CHECK_THROWS_AS((void)build_hilb2(build_cubic4()), std::invalid_argument);
}

TEST_CASE("Hilbert square of the K3 matches the polarized record") {
    const ManifoldRecord plain = build_hilb2(build_k3());
    const ManifoldRecord polarized = build_hilb2_k3();
    REQUIRE(plain.hodge.has_value());
    CHECK(plain.hodge == polarized.hodge);
    CHECK(plain.stored.at("euler") == 324);
    CHECK(plain.stored.at("b2") == 23);
    CHECK(plain.stored.at("b4") == 276);
}

TEST_CASE("Betti lookups prefer the diamond and fall back to pins") {
    const ManifoldRecord kummer = build_kummer2();
    CHECK(record_betti(kummer, 2) == 7);
    CHECK_THROWS_AS((void)record_betti(kummer, 3), std::invalid_argument);
    CHECK_THROWS_AS((void)record_euler(kummer), std::invalid_argument);

    const ManifoldRecord k3 = build_k3();
    CHECK(record_betti(k3, 2) == 22);
    CHECK(record_betti(k3, 1) == 0);
}

TEST_CASE("the Kodaira surface pairs h-powers to zero but keeps c_2") {
    const ManifoldRecord r = build_kodaira_surface();
    REQUIRE(r.model.has_value());
    CHECK(r.model->canonical_index == -2);
    CHECK(degree(*r.model) == 0);
    CHECK(hrr_chi(*r.model, 0) == 2);
    CHECK(l_genus_signature(*r.model) == -16);
    CHECK(validate_record(r).empty());
}

TEST_CASE("validation catches a model-diamond mismatch") {
    ManifoldRecord r = build_quadric4();
    r.hodge->set(2, 2, 4);
    const auto problems = validate_record(r);
    CHECK(!problems.empty());
}

TEST_CASE("validation recomputes stored pins") {
    ManifoldRecord r = build_cubic4();
    r.stored["euler"] = Rational(28);
    const auto problems = validate_record(r);
    REQUIRE(!problems.empty());
    bool found = false;
    for (const auto& p : problems) {
        if (contains(p, "stored euler = 28 disagrees with recomputed 27")) {
            found = true;
        }
    }
    CHECK(found);
}

TEST_CASE("JSON round-trips every builtin byte for byte") {
    for (const std::string& name : builtin_names()) {
        const ManifoldRecord r = build_builtin(name);
        const std::string text = record_to_json(r);
        const ManifoldRecord back = record_from_json(text);
        CHECK(back == r);
        CHECK(record_to_json(back) == text);
    }
}

TEST_CASE("save and load through a file") {
    const std::string path = "chx_test_record.json";
    const ManifoldRecord r = build_hilb2_k3();
    save_record(r, path);
    const ManifoldRecord back = load_record(path);
    CHECK(back == r);
    std::remove(path.c_str());
}

TEST_CASE("loading rejects a corrupted stored value") {
    const std::string text = record_to_json(build_cubic4());
    const std::string corrupted = replaced(text, "\"euler\": \"27\"", "\"euler\": \"28\"");
    const std::string what =
        message_of([&] { (void)record_from_json(corrupted); });
    CHECK(contains(what, "stored euler = 28 disagrees with recomputed 27"));
}

TEST_CASE("loading names the offending field") {
    const std::string text = record_to_json(build_cubic4());

    const std::string unknown = replaced(text, "\"name\"", "\"nickname\"");
    CHECK(contains(message_of([&] { (void)record_from_json(unknown); }),
                   "record.nickname: unknown field"));

    const std::string bad_rational = replaced(text, "\"euler\": \"27\"", "\"euler\": \"2x7\"");
    CHECK(contains(message_of([&] { (void)record_from_json(bad_rational); }),
                   "record.stored.euler"));

    const std::string bad_version = replaced(text, "\"version\": 1", "\"version\": 2");
    CHECK(contains(message_of([&] { (void)record_from_json(bad_version); }),
                   "record.version: unsupported version 2"));

    CHECK(contains(message_of([] { (void)record_from_json("{"); }), "not valid JSON"));
}
