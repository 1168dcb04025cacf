// SPDX-License-Identifier: Apache-2.0
//
// hdsearch - hierarchical dictionary search for greedy sparse recovery
// Copyright (C) 2026 The hdsearch authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <catch_amalgamated.hpp>

#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace
{
    int run(const std::string &args)
    {
        const std::string cmd = std::string(HDS_EXECUTABLE) + " " + args + " >cli_stdout.txt 2>cli_stderr.txt";
        const int status = std::system(cmd.c_str());
        return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    }

    std::string slurp(const std::string &path)
    {
        std::ifstream in(path);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    void write(const std::string &path, const std::string &text)
    {
        std::ofstream(path) << text;
    }
}

TEST_CASE("hds exit codes")
{
    CHECK(run("--version") == 0);
    CHECK(run("") == 2);
    CHECK(run("no-such-command") == 2);
    CHECK(run("run-nmse-1d --config /nonexistent.json") == 2);

    write("bad_key.json", R"({"scenario": "delay_1d", "speed": 3})");
    CHECK(run("run-delay-est --config bad_key.json") == 2);
    CHECK(slurp("cli_stderr.txt").find("speed") != std::string::npos);

    write("wrong_scenario.json", R"({"scenario": "nmse_1d"})");
    CHECK(run("run-delay-est --config wrong_scenario.json") == 2);

    write("full_scale_omp.json",
          R"({"scenario": "nmse_3d", "dims": [256, 64, 32], "sweep": [{"method": "omp", "A": [2560, 640, 320]}]})");
    CHECK(run("run-nmse-3d --config full_scale_omp.json") == 3);
    CHECK(slurp("cli_stderr.txt").find("274877906944000") != std::string::npos);
}

TEST_CASE("hds run writes CSV and manifest")
{
    write("tiny.json", R"({"scenario": "delay_1d", "dims": [32], "trials": 8,
        "sweep": [{"method": "classical", "A": 32}, {"method": "hierarchical", "S": 5}]})");
    REQUIRE(run("run-delay-est --config tiny.json --seed 5 --out tiny.csv") == 0);
    const std::string csv = slurp("tiny.csv");
    CHECK(csv.rfind("method,scenario,n,S_or_A,sel_mults,total_mults,metric,trials,seed\n", 0) == 0);
    CHECK(csv.find("hierarchical,delay_1d,2,5,320,") != std::string::npos);

    const auto manifest = nlohmann::json::parse(slurp("tiny.csv.manifest.json"));
    CHECK(manifest["config"]["master_seed"] == 5);
    CHECK(manifest["rows"] == 2);
    CHECK(manifest.contains("wall_time_s"));
    CHECK(manifest.contains("library_version"));

    // same config and seed, same bytes
    REQUIRE(run("run-delay-est --config tiny.json --seed 5 --out tiny2.csv") == 0);
    CHECK(slurp("tiny2.csv") == csv);
}

TEST_CASE("hds auxiliary commands")
{
    write("tiny3d.json", R"({"scenario": "nmse_3d", "dims": [8, 4, 2], "trials": 3})");
    CHECK(run("gen-dataset --config tiny3d.json --out tiny3d.jsonl") == 0);
    const std::string ds = slurp("tiny3d.jsonl");
    CHECK(std::count(ds.begin(), ds.end(), '\n') == 3);

    REQUIRE(run("predict-complexity --method multidim_hier --dims 256,64,32 --sizes 12,10,9 -n 2") == 0);
    const auto pred = nlohmann::json::parse(slurp("cli_stdout.txt"));
    CHECK(pred[0]["selection_mults"] == 2ULL * (12 * 524288 + 10 * 2048 + 9 * 32));
    CHECK(run("predict-complexity --method hier_1d --dims 256 --sizes 10 -n 1") == 2);

    REQUIRE(run("response-profile --count 32 --center 0.25 --width 0.5 --samples 8 --out prof.csv") == 0);
    CHECK(slurp("prof.csv").rfind("u,magnitude\n", 0) == 0);
}
