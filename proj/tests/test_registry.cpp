#include "spingw/registry.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace spingw;

namespace {

struct TempFile {
    std::filesystem::path path;
    explicit TempFile(const std::string& name) {
        path = std::filesystem::temp_directory_path() / name;
    }
    ~TempFile() { std::error_code ec; std::filesystem::remove(path, ec); }
    void write(const std::string& text) {
        std::ofstream out(path);
        out << text;
    }
};

} // namespace

TEST_CASE("registry round trips through its JSON file format") {
    Registry reg;
    SpinKey s(2, Parity::odd);
    reg.set(InvariantKey::loc_relative(s, 2, Partition({2})), Rational(-8));
    reg.set(InvariantKey::f0_relative2(2, Partition({2}), Partition({1, 1}), {1}),
            Rational(7, 3));

    TempFile f("spingw_registry_roundtrip.json");
    reg.save(f.path.string());
    Registry back = Registry::load(f.path.string());
    CHECK(back.entries() == reg.entries());
    CHECK(back.source_path() == f.path.string());
    CHECK(back.find(InvariantKey::loc_relative(s, 2, Partition({2}))) == Rational(-8));
    CHECK(!back.find(InvariantKey::absolute(s, 1)).has_value());
}

TEST_CASE("registry keys are normalized on insert") {
    Registry reg;
    SpinKey s(1, Parity::even);
    reg.set(InvariantKey::loc_relative2(s, 2, Partition({2}), Partition({1, 1})), Rational(5));
    // same invariant, contacts given in the other order
    CHECK(reg.find(InvariantKey::loc_relative2(s, 2, Partition({1, 1}), Partition({2}))) ==
          Rational(5));
}

TEST_CASE("loading validates keys and values") {
    TempFile f("spingw_registry_bad.json");

    f.write(R"json({"GT|loc|h=1|p=+|d=2|m1=(2)": "1/3"})json");
    CHECK_NOTHROW(Registry::load(f.path.string()));

    f.write(R"json({"not a key": "1/3"})json");
    CHECK_THROWS_AS(Registry::load(f.path.string()), std::invalid_argument);

    f.write(R"json({"GT|loc|h=1|p=+|d=2|m1=(2)": "0.5"})json");
    CHECK_THROWS_AS(Registry::load(f.path.string()), std::invalid_argument);

    f.write(R"json({"GT|loc|h=1|p=+|d=2|m1=(2)": 5})json");
    CHECK_THROWS_AS(Registry::load(f.path.string()), std::runtime_error);

    f.write(R"json([1,2,3])json");
    CHECK_THROWS_AS(Registry::load(f.path.string()), std::runtime_error);

    CHECK_THROWS_AS(Registry::load("/nonexistent/registry.json"), std::runtime_error);
}

TEST_CASE("missing entries raise a typed error carrying the key") {
    MissingRegistryEntry err("GT|F0|d=1|m1=(1)|m2=(1)|ins=phi:2");
    CHECK(err.key == "GT|F0|d=1|m1=(1)|m2=(1)|ins=phi:2");
    CHECK(std::string(err.what()).find(err.key) != std::string::npos);
}
