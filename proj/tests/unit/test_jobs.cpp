/*
   Copyright 2026 the soag authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>

#include "soag/jobs.hpp"
#include "soag/serialize.hpp"

using namespace soag;
using nlohmann::json;

TEST_SUITE_BEGIN("jobs");

namespace {

JobSpec fa_a298() {
    JobSpec spec;
    spec.task = "fa";
    spec.curve_inline = R"({"family":"A","q":9,"n":2,"l":8})";
    return spec;
}

std::string tightness_json() {
    json j;
    j["field"] = {{"p", 3}, {"m", 6}};
    std::vector<int> f(28, 0);
    f[1] = 2;
    f[27] = 1;
    j["F"] = f;
    j["H"] = {0, 0, 1};
    return j.dump();
}

}  // namespace

TEST_CASE("curve source parsing") {
    ParsedCurve pc = parse_curve_source(R"({"family":"A","q":9,"n":2,"l":8})");
    REQUIRE(pc.curve.has_value());
    REQUIRE(pc.family.has_value());
    CHECK(pc.family->n_points == 153);

    ParsedCurve inline_curve = parse_curve_source(tightness_json());
    REQUIRE(inline_curve.curve.has_value());
    CHECK(inline_curve.curve->genus == 13);
    CHECK_FALSE(inline_curve.family.has_value());

    CHECK_THROWS_AS(parse_curve_source("{"), Error);
    CHECK_THROWS_AS(parse_curve_source(R"({"family":"Z","q":3})"), Error);
    CHECK_THROWS_AS(parse_curve_source(R"({"field":{"p":3,"m":2}})"), Error);

    // coefficients as element text and arrays
    ParsedCurve mixed = parse_curve_source(
        R"({"field":{"p":3,"m":2},"F":[0,"2,0",0,1],"H":[[0,0],[0,0],[1,0],[0,0],[0,0],[1,0]]})");
    CHECK(mixed.curve->deg_f == 3);
    CHECK(mixed.curve->deg_h == 5);
}

TEST_CASE("fa task records computed values") {
    ResultRecord rec = run_job(fa_a298());
    json out = json::parse(rec.outputs);
    CHECK(out["N"] == 153);
    CHECK(out["degM"] == 144);  // computed, not the Type-I guess
    CHECK(out["fA"] == "z^17 + 2*z");
    CHECK(out["deg_fA_prime"] == 16);
    CHECK(out["type"] == "II");
}

TEST_CASE("so-check task") {
    JobSpec spec;
    spec.task = "so-check";
    spec.curve_inline = tightness_json();
    spec.m = 26;
    ResultRecord rec = run_job(spec);
    json out = json::parse(rec.outputs);
    CHECK(out["so_euclidean"] == false);

    spec.m = 25;
    CHECK(json::parse(run_job(spec).outputs)["so_euclidean"] == true);

    spec.m.reset();
    spec.m_range = {{24, 26}};
    json ranged = json::parse(run_job(spec).outputs);
    REQUIRE(ranged.contains("results"));
    CHECK(ranged["results"].size() == 3);
    CHECK(ranged["results"][2]["so_euclidean"] == false);
}

TEST_CASE("quantum task: matrix-verified row") {
    JobSpec spec;
    spec.task = "quantum";
    spec.curve_inline = R"({"family":"A","q":9,"n":2,"l":8})";
    spec.m = 9;
    json row = json::parse(run_job(spec).outputs);
    CHECK(row["status"] == "matrix-verified");
    CHECK(row["N"] == 153);
    CHECK(row["k"] == 147);
    CHECK(row["d_certified"] == 3);
    CHECK(row["alphabet"] == 81);
    CHECK(row["so"] == true);
    CHECK(row["jx_bound"].is_null());  // odd field order: not applicable

    spec.flavor = InnerProductFlavor::hermitian;
    json hrow = json::parse(run_job(spec).outputs);
    CHECK(hrow["alphabet"] == 9);
    CHECK(hrow["k"] == 147);
    CHECK(hrow["gv"] == true);
}

TEST_CASE("quantum task: bounds-only row for a large family instance") {
    JobSpec spec;
    spec.task = "quantum";
    spec.curve_inline = R"({"family":"BHk","q":5,"k":3})";
    spec.m = 1955;
    json row = json::parse(run_job(spec).outputs);
    CHECK(row["status"] == "bounds-only");
    CHECK(row["N"] == 15750);
    CHECK(row["k"] == 12338);
    CHECK(row["d_lb"] == 1457);
    CHECK(row["pure"] == true);
    CHECK(row["so"] == true);
    CHECK(row["gv"] == true);

    // past the family bound the row refuses to claim self-orthogonality
    spec.m = 7812;
    json beyond = json::parse(run_job(spec).outputs);
    CHECK(beyond["so"] == false);
    CHECK(beyond.contains("error"));
}

TEST_CASE("deterministic outputs and job hashing") {
    JobSpec spec = fa_a298();
    ResultRecord r1 = run_job(spec);
    ResultRecord r2 = run_job(spec);
    CHECK(r1.outputs == r2.outputs);
    CHECK(job_hash(spec) == job_hash(spec));
    JobSpec other = spec;
    other.m = 9;
    CHECK(job_hash(spec) != job_hash(other));
}

TEST_CASE("result cache") {
    namespace fs = std::filesystem;
    const fs::path cache = fs::temp_directory_path() / "soag_cache_test.jsonl";
    std::error_code ec;
    fs::remove(cache, ec);

    JobSpec spec = fa_a298();
    spec.cache_enabled = true;
    spec.cache_path = cache.string();

    ResultRecord miss = run_job(spec);
    CHECK_FALSE(miss.from_cache);
    ResultRecord hit = run_job(spec);
    CHECK(hit.from_cache);
    CHECK(hit.outputs == miss.outputs);

    // disabled cache recomputes to an identical record
    JobSpec nocache = fa_a298();
    ResultRecord fresh = run_job(nocache);
    CHECK(fresh.outputs == miss.outputs);
    CHECK_FALSE(fresh.from_cache);

    // append-only: the file grew by exactly one line for the miss
    std::ifstream in(cache);
    int lines = 0;
    std::string line;
    while (std::getline(in, line)) lines += !line.empty();
    CHECK(lines == 1);
    fs::remove(cache, ec);
}

TEST_CASE("sweep includes the A_{2,9,8} row and skips hypothesis violations") {
    JobSpec spec;
    spec.task = "sweep";
    spec.sweep_family = "A";
    spec.q_list = {3, 9};
    spec.n_list = {2};
    for (std::uint64_t l = 2; l <= 13; ++l) spec.l_list.push_back(l);
    spec.m = 9;
    spec.jobs = 4;
    json out = json::parse(run_job(spec).outputs);
    const auto& rows = out["rows"];
    bool found = false;
    int skipped = 0;
    for (const auto& row : rows) {
        if (row["row_status"] == "SKIPPED") ++skipped;
        if (row["curve"]["q"] == 9 && row["curve"]["l"] == 8 && row["row_status"] == "OK") {
            CHECK(row["N"] == 153);
            CHECK(row["k"] == 147);
            found = true;
        }
    }
    CHECK(found);
    CHECK(skipped == 8);  // l in {3,6,9,12} for each q
    const std::string csv = out["csv"].get<std::string>();
    CHECK(csv.rfind("family,q,n,l,k,s,m,status,verify,", 0) == 0);

    // empty grid: an explicitly empty required axis yields only the header
    JobSpec empty = spec;
    empty.l_list.clear();
    json eout = json::parse(run_job(empty).outputs);
    CHECK(eout["rows"].empty());
    CHECK(eout["csv"].get<std::string>() ==
          "family,q,n,l,k,s,m,status,verify,N,dim,k_quantum,d_lb,d_certified,pure,gv,jx_floor,"
          "error\n");
}

TEST_CASE("paper suite passes and is deterministic") {
    // manifest path from SOAG_MANIFEST (set by ctest) or the repo default
    SuiteResult res = paper_suite("");
    CHECK(res.all_pass);
    CHECK(res.rows.size() >= 19);
    for (const auto& row : res.rows) {
        INFO(row.id, ": expected ", row.expected, " computed ", row.computed);
        CHECK(row.pass);
    }

    JobSpec spec;
    spec.task = "paper-suite";
    ResultRecord rec = run_job(spec);
    REQUIRE(rec.pass.has_value());
    CHECK(*rec.pass);
    json out = json::parse(rec.outputs);
    CHECK(out["all_pass"] == true);
}

TEST_SUITE_END();
