// Copyright 2026 The onto-symm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Drives the onto-symm binary end to end through a shell.

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "ontosymm/json_io.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

fs::path work_dir() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "ontosymm-cli-tests";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

RunResult run(const std::string &args) {
    fs::path out_file = work_dir() / "cmd-output.txt";
    std::string cmd = std::string(ONTOSYMM_BIN) + " " + args + " > " + out_file.string() + " 2>&1";
    int status = std::system(cmd.c_str());
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out_file);
    std::ostringstream buf;
    buf << in.rdbuf();
    return {code, buf.str()};
}

std::string write_temp(const std::string &name, const std::string &content) {
    fs::path p = work_dir() / name;
    std::ofstream out(p);
    out << content;
    return p.string();
}

}  // namespace

TEST_CASE("build maudlin emits canonical JSON, byte-stable") {
    auto first = run("build maudlin");
    REQUIRE(first.exit_code == 0);
    auto second = run("build maudlin");
    CHECK(first.out == second.out);
    CHECK(first.out.find("\"1/2 + 0/1*sqrt3\"") != std::string::npos);
    CHECK(first.out.find("\"ont_model\"") != std::string::npos);

    // Byte-for-byte the committed golden file.
    std::string golden = ontosymm::read_file(std::string(ONTOSYMM_SOURCE_DIR) + "/tests/golden/maudlin.json");
    CHECK(first.out == golden);

    // Round trip through a file: build, then check.
    std::string path = write_temp("maudlin.json", first.out);
    auto check = run("check " + path);
    CHECK(check.exit_code == 0);
    CHECK(check.out.find("all checks passed") != std::string::npos);
}

TEST_CASE("build classical and unknown builders") {
    auto ok = run("build classical --k 3");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("classical-3") != std::string::npos);

    auto bad = run("build toaster");
    CHECK(bad.exit_code == 1);
    CHECK(bad.out.find("unknown builder") != std::string::npos);
}

TEST_CASE("build bb from a directions file") {
    std::string dirs = write_temp("dirs.json", R"({"directions": [
        {"name": "z", "vector": ["0", "0", "1"]},
        {"name": "x", "vector": ["1", "0", "0"]}
    ]})");
    auto r = run("build bb --directions " + dirs);
    REQUIRE(r.exit_code == 0);
    // Orthogonal directions: every off-diagonal cell is 1/4.
    CHECK(r.out.find("\"1/4 + 0/1*sqrt3\"") != std::string::npos);

    std::string path = write_temp("bb.json", r.out);
    auto check = run("check " + path);
    CHECK(check.exit_code == 0);

    // Float-components file in exact mode is a precondition failure.
    std::string fdirs = write_temp("fdirs.json", R"({"directions": [
        {"name": "z", "vector": [0.0, 0.0, 1.0]}
    ]})");
    auto inexact = run("build bb --directions " + fdirs);
    CHECK(inexact.exit_code == 3);
    auto floated = run("--mode float build bb --directions " + fdirs);
    CHECK(floated.exit_code == 0);

    // The float pipeline round-trips: emitted numbers load and check clean,
    // and certify works on them within tolerance.
    std::string fpath = write_temp("bb-float.json", floated.out);
    CHECK(run("check " + fpath).exit_code == 0);
    auto fcert = run("certify --kind time-symmetry " + fpath);
    CHECK(fcert.exit_code == 0);
    // A single-direction set has no setting dependence to obstruct reversal,
    // so the identity is a witness.
    CHECK(fcert.out.find("SymmetryWitness") != std::string::npos);
}

TEST_CASE("float mode converts exact files explicitly") {
    std::string mpath = (work_dir() / "mf.json").string();
    run("build maudlin -o " + mpath);
    auto r = run("--mode float check " + mpath);
    CHECK(r.exit_code == 0);
    auto cert = run("--mode float --format json certify --kind chsh --settings 0,1,0,1 " + mpath);
    CHECK(cert.exit_code == 0);
    auto doc = nlohmann::json::parse(cert.out);
    CHECK(doc["scalars"]["chsh"].is_number());
    CHECK(doc["scalars"]["chsh"].get<double>() == doctest::Approx(2.2320508075688772));
}

TEST_CASE("check reports failures with exit code 2") {
    // Table summing to 5/4 in one column.
    ontosymm::OntModel m = ontosymm::build_classical_control(2);
    nlohmann::json doc = ontosymm::model_file_to_json(m.experiment(), nullptr);
    for (auto &cell : doc["experiment"]["table"]) {
        if (cell["a"] == "1" && cell["b"] == "1") {
            cell["p"] = "3/4";
        }
    }
    std::string path = write_temp("overweight.json", ontosymm::canonical_dump(doc));
    auto r = run("check " + path);
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("checks FAILED") != std::string::npos);

    // Missing cell: schema error, exit 1.
    nlohmann::json doc2 = ontosymm::model_file_to_json(m.experiment(), nullptr);
    doc2["experiment"]["table"].erase(0);
    std::string path2 = write_temp("missing.json", ontosymm::canonical_dump(doc2));
    auto r2 = run("check " + path2);
    CHECK(r2.exit_code == 1);
    CHECK(r2.out.find("missing table cell") != std::string::npos);

    auto r3 = run("check " + write_temp("garbage.json", "{not json"));
    CHECK(r3.exit_code == 1);
}

TEST_CASE("certify time-symmetry on maudlin and the classical control") {
    auto maudlin = run("build maudlin -o " + (work_dir() / "m.json").string());
    REQUIRE(maudlin.exit_code == 0);
    std::string mpath = (work_dir() / "m.json").string();

    auto r = run("certify --kind time-symmetry " + mpath);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("ViolationExhaustive") != std::string::npos);
    CHECK(r.out.find("24") != std::string::npos);

    auto rj = run("--format json certify --kind time-symmetry " + mpath + " -o " +
                  (work_dir() / "cert.json").string());
    CHECK(rj.exit_code == 0);
    auto cert = nlohmann::json::parse(ontosymm::read_file((work_dir() / "cert.json").string()));
    CHECK(cert["kind"] == "ViolationExhaustive");
    CHECK(cert["scalars"]["bijections_refuted"] == "24/1 + 0/1*sqrt3");

    run("build classical --k 2 -o " + (work_dir() / "c2.json").string());
    auto rc = run("certify --kind time-symmetry " + (work_dir() / "c2.json").string());
    CHECK(rc.exit_code == 0);
    CHECK(rc.out.find("SymmetryWitness") != std::string::npos);

    // Cap failures are precondition failures (exit 3); the env override
    // raises the cap.
    run("build classical --k 6 -o " + (work_dir() / "c6.json").string());
    auto capped = run("--cap 3 certify --kind time-symmetry " + (work_dir() / "c6.json").string());
    CHECK(capped.exit_code == 3);
    fs::path c6 = work_dir() / "c6.json";
    std::string env_cmd = "ONTOSYMM_CAP=8 " + std::string(ONTOSYMM_BIN) + " certify --kind time-symmetry " +
                          c6.string() + " > " + (work_dir() / "env-out.txt").string() + " 2>&1";
    int env_status = std::system(env_cmd.c_str());
    CHECK(WEXITSTATUS(env_status) == 0);
}

TEST_CASE("certify chsh prints the exact scalar") {
    std::string mpath = (work_dir() / "m2.json").string();
    run("build maudlin -o " + mpath);
    auto r = run("certify --kind chsh --settings 0,1,0,1 " + mpath);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("1/2 + 1/1*sqrt3") != std::string::npos);

    auto missing = run("certify --kind chsh " + mpath);
    CHECK(missing.exit_code == 1);
}

TEST_CASE("certify lemma and noncontextuality") {
    std::string cpath = (work_dir() / "c.json").string();
    run("build classical --k 2 -o " + cpath);
    auto lemma = run("certify --kind lemma " + cpath);
    CHECK(lemma.exit_code == 0);
    CHECK(lemma.out.find("LemmaVerified") != std::string::npos);

    auto lemma_explicit = run("certify --kind lemma --bijection '1=1;2=2' " + cpath);
    CHECK(lemma_explicit.exit_code == 0);

    std::string mpath = (work_dir() / "m3.json").string();
    run("build maudlin -o " + mpath);
    auto lemma_maudlin = run("certify --kind lemma " + mpath);
    CHECK(lemma_maudlin.exit_code == 3);

    auto nc = run("certify --kind noncontextuality " + mpath);
    CHECK(nc.exit_code == 0);
    CHECK(nc.out.find("Contextual") != std::string::npos);
    auto ncc = run("certify --kind noncontextuality " + cpath);
    CHECK(ncc.exit_code == 0);
    CHECK(ncc.out.find("Noncontextual") != std::string::npos);
}

TEST_CASE("reverse-search reports partners in a collection") {
    std::string mpath = (work_dir() / "rs-m.json").string();
    std::string cpath = (work_dir() / "rs-c.json").string();
    run("build maudlin -o " + mpath);
    run("build classical --k 2 -o " + cpath);

    auto r = run("reverse-search " + mpath + " " + cpath);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("maudlin vs maudlin: operational time reverses") != std::string::npos);
    CHECK(r.out.find("no ontological reverse (exhaustive)") != std::string::npos);
    CHECK(r.out.find("classical-2 vs classical-2: operational time reverses") != std::string::npos);
    CHECK(r.out.find("1->1, 2->2") != std::string::npos);

    auto rj = run("--format json reverse-search " + mpath);
    CHECK(rj.exit_code == 0);
    auto doc = nlohmann::json::parse(rj.out);
    REQUIRE(doc["pairs"].size() == 1);
    CHECK(doc["pairs"][0]["ontological_bijections"].empty());
}

TEST_CASE("reverse-search with label-bijection search") {
    // The same table with outcome labels renamed and one side's order
    // scrambled: positionally not a reverse, but an identification exists.
    ontosymm::OntModel m = ontosymm::build_maudlin();
    const ontosymm::Experiment &e = m.experiment();
    std::vector<ontosymm::Scalar> table(16, ontosymm::Scalar());
    for (size_t ia = 0; ia < 2; ++ia) {
        for (size_t ib = 0; ib < 2; ++ib) {
            for (size_t ix = 0; ix < 2; ++ix) {
                for (size_t iy = 0; iy < 2; ++iy) {
                    table[((ia * 2 + ib) * 2 + ix) * 2 + iy] = e.p(1 - ia, ib, ix, iy);
                }
            }
        }
    }
    ontosymm::Experiment renamed("maudlin-renamed", ontosymm::LabelSet({"down", "up"}),
                                 ontosymm::LabelSet({"u", "d"}), ontosymm::LabelSet({"L", "R"}),
                                 ontosymm::LabelSet({"S", "T"}), std::move(table));
    std::string rpath = write_temp("renamed.json",
                                   ontosymm::canonical_dump(ontosymm::model_file_to_json(renamed, nullptr)));
    std::string mpath = (work_dir() / "rs2-m.json").string();
    run("build maudlin -o " + mpath);

    auto positional = run("reverse-search " + mpath + " " + rpath);
    CHECK(positional.exit_code == 0);
    CHECK(positional.out.find("maudlin vs maudlin-renamed: not time reverses") != std::string::npos);

    auto searched = run("reverse-search --search-labels " + mpath + " " + rpath);
    CHECK(searched.exit_code == 0);
    CHECK(searched.out.find("maudlin vs maudlin-renamed: operational time reverses") != std::string::npos);
}

TEST_CASE("usage errors exit 1") {
    CHECK(run("").exit_code == 1);
    CHECK(run("frobnicate").exit_code == 1);
    CHECK(run("certify --kind bogus nonexistent.json").exit_code == 1);
    CHECK(run("check /nonexistent/path.json").exit_code == 1);
    CHECK(run("--help").exit_code == 0);
}
