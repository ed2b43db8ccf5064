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

#ifndef SOAG_JOBS_HPP
#define SOAG_JOBS_HPP

#include <optional>
#include <string>
#include <vector>

#include "soag/quantum.hpp"

namespace soag {

/// A fully described unit of work for the CLI front end. Exactly one curve
/// source (inline JSON, family via JSON, or file path) for curve-bearing
/// tasks; m or m-range where the task needs one.
struct JobSpec {
    std::string task;  ///< info | points | fa | code | so-check | quantum | sweep | paper-suite

    std::string curve_inline;  ///< JSON object text
    std::string curve_file;    ///< path to a JSON file

    std::optional<long long> m;
    std::optional<std::pair<long long, long long>> m_range;
    InnerProductFlavor flavor = InnerProductFlavor::euclidean;
    int wmax = 3;

    // sweep grid (cartesian product, filtered by family hypotheses)
    std::string sweep_family;
    std::vector<std::uint64_t> q_list;
    std::vector<unsigned> n_list;
    std::vector<std::uint64_t> l_list;
    std::vector<unsigned> k_list;
    std::vector<unsigned> s_list;

    std::string manifest_path;  ///< paper-suite manifest (JSON)

    // execution details; not part of the job identity
    std::optional<std::string> out_path;
    bool cache_enabled = false;
    std::string cache_path;
    int jobs = 1;
    std::optional<std::string> dump_genmat_path;
};

/// Canonical serialization of the semantic fields; two JobSpecs describing
/// the same computation hash identically.
std::string canonical_job_json(const JobSpec& spec);
std::string job_hash(const JobSpec& spec);

struct ResultRecord {
    std::string hash;
    std::string job;      ///< canonical job JSON
    std::string outputs;  ///< per-task JSON (deterministic, no timestamps)
    std::string started_at;
    std::string finished_at;
    bool from_cache = false;
    std::optional<bool> pass;  ///< verdict for expectation-bearing tasks
};

/// Dispatches to the curve/agcode/quantum modules; caches keyed by job hash
/// when enabled (append-only JSON-lines file).
ResultRecord run_job(const JobSpec& spec);

/// One quantum-report row as JSON text (shared by `quantum` and `sweep`).
std::string quantum_row_json(const JobSpec& spec, long long m);

struct SuiteRow {
    std::string id;
    std::string expected;
    std::string computed;
    bool pass = false;
    std::string note;
};

struct SuiteResult {
    std::vector<SuiteRow> rows;
    bool all_pass = true;
};

/// Runs the curated paper-example corpus from a manifest file.
SuiteResult paper_suite(const std::string& manifest_path);

/// Renders the suite as an aligned text table.
std::string suite_table(const SuiteResult& res);

}  // namespace soag

#endif
