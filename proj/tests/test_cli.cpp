#include "doctest.h"

#include <cstdio>
#include <filesystem>

#include "benz/cli.hpp"
#include "benz/json_io.hpp"

using namespace benz;

namespace {

struct TempDir {
    std::filesystem::path dir;
    TempDir() {
        dir = std::filesystem::temp_directory_path() / "benzlab_test";
        std::filesystem::create_directories(dir);
    }
    std::string file(const std::string& name) const { return (dir / name).string(); }
};

} // namespace

TEST_CASE("geometry JSON round-trips bit-identically") {
    for (auto [type, q, phi] : std::vector<std::tuple<std::string, int64_t, int>>{
             {"mobius", 3, 0}, {"minkowski-phi", 5, 0}, {"laguerre-ext", 4, 0}}) {
        CircleGeometry g = build_geometry(type, q, phi);
        Json j = geometry_to_json(g);
        std::string once = j.dump(1);
        CircleGeometry g2 = geometry_from_json(Json::parse(once));
        std::string twice = geometry_to_json(g2).dump(1);
        CHECK(once == twice);
        CHECK(g2.num_points() == g.num_points());
        CHECK(g2.num_circles() == g.num_circles());
        CHECK(g2.circle_type == g.circle_type);
    }
}

TEST_CASE("construct, verify, scheme round trip through the CLI") {
    TempDir tmp;
    std::string file = tmp.file("m4.json");
    CHECK(cli_main({"construct", "--type", "mobius", "--q", "4", "--out", file}) == 0);
    CHECK(cli_main({"verify", "--in", file}) == 0);
    CHECK(cli_main({"scheme", "--in", file, "--expect", "reference"}) == 0);
    CHECK(cli_main({"scheme", "--in", file, "--expect", "paper"}) == 0);
    CHECK(cli_main({"gp", "--in", file, "--point", "0"}) == 0);
    CHECK(cli_main({"report", "--in", file, "--pencil", "0"}) == 0);
}

TEST_CASE("exit codes") {
    TempDir tmp;
    // usage: unknown type / missing geometry / bad phi
    CHECK(cli_main({"construct", "--type", "dodecahedron", "--q", "4"}) == 1);
    CHECK(cli_main({"construct", "--type", "minkowski-phi", "--q", "7", "--phi", "1"}) == 1);
    CHECK(cli_main({"verify", "--in", tmp.file("missing.json")}) == 1);

    // verification mismatch: unspliced odd Minkowski relations
    std::string mk5 = tmp.file("mk5.json");
    CHECK(cli_main({"construct", "--type", "minkowski", "--q", "5", "--out", mk5}) == 0);
    CHECK(cli_main({"scheme", "--in", mk5}) == 2);
    CHECK(cli_main({"scheme", "--in", mk5, "--splice", "--expect", "reference"}) == 0);

    // budget exceeded
    std::string m4 = tmp.file("m4.json");
    CHECK(cli_main({"construct", "--type", "mobius", "--q", "4", "--out", m4}) == 0);
    CHECK(cli_main({"search", "--in", m4, "--method", "exact", "--budget", "2"}) == 3);
    CHECK(cli_main({"search", "--in", m4, "--method", "exact"}) == 0);
    CHECK(cli_main({"search", "--in", m4, "--method", "ratio"}) == 0);
    CHECK(cli_main({"search", "--in", m4, "--method", "greedy"}) == 0);
    CHECK(cli_main({"search", "--in", m4, "--method", "simulated-annealing"}) == 1);
}

TEST_CASE("verify exits 2 on a tampered geometry") {
    TempDir tmp;
    std::string file = tmp.file("tampered.json");
    CHECK(cli_main({"construct", "--type", "laguerre", "--q", "3", "--out", file}) == 0);
    Json j = load_json(file);
    j["circles"].erase(j["circles"].size() - 1); // drop one circle
    save_json(j, file);
    CHECK(cli_main({"verify", "--in", file}) == 2);
}

TEST_CASE("search report JSON carries families and bounds") {
    TempDir tmp;
    std::string m3 = tmp.file("m3.json");
    std::string rep = tmp.file("m3_search.json");
    CHECK(cli_main({"construct", "--type", "mobius", "--q", "3", "--out", m3}) == 0);
    CHECK(cli_main({"search", "--in", m3, "--method", "exact", "--out", rep}) == 0);
    Json j = load_json(rep);
    CHECK(j["version"] == 1);
    CHECK(j["maximum"] == 15);
    CHECK(j["families"].size() == 2);
    CHECK(j["classifications"][0] == "TwoPointMobius3");
    CHECK(j["complete"] == true);
    for (const auto& b : j["bounds_reports"]) CHECK(b["mixing_all_hold"] == true);
}
