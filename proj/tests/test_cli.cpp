#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "helpers.hpp"

namespace fs = std::filesystem;

static int run_cli(const std::string& args) {
    const std::string cmd = std::string(NLSCLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

static std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

static fs::path write_config(const std::string& name, const std::string& body) {
    const fs::path dir = fs::temp_directory_path() / "nlscli_test";
    fs::create_directories(dir);
    const fs::path p = dir / name;
    std::ofstream f(p);
    f << body;
    return p;
}

static const char* kStepConfig = R"({
  "params": {"alpha": 1.0, "beta": 0.0, "delta": 0.25},
  "datum": {"kind": "pure_step"},
  "grid": {"k_max": 4.0, "uniform_step": 0.1}
})";

TEST_CASE("selftest passes on a clean build") {
    CHECK(run_cli("selftest") == 0);
}

TEST_CASE("malformed configs exit 1 and write nothing") {
    const fs::path out = fs::temp_directory_path() / "nlscli_test" / "out_bad";
    fs::remove_all(out);

    const fs::path bad1 = write_config("bad1.json", R"({
      "params": {"alpha": 1.0, "beta": 0.0},
      "typo_key": 1
    })");
    CHECK(run_cli("--config " + bad1.string() + " --out " + out.string() + " scatter") ==
          1);
    CHECK_FALSE(fs::exists(out / "scattering.csv"));

    const fs::path bad2 = write_config("bad2.json", R"({
      "params": {"alpha": -1.0, "beta": 0.0}
    })");
    CHECK(run_cli("--config " + bad2.string() + " --out " + out.string() + " scatter") ==
          1);

    CHECK(run_cli("--config /nonexistent.json scatter") == 1);
}

TEST_CASE("scatter: exit 0, files written, byte-identical reruns") {
    const fs::path cfg = write_config("step.json", kStepConfig);
    const fs::path out1 = fs::temp_directory_path() / "nlscli_test" / "out1";
    const fs::path out2 = fs::temp_directory_path() / "nlscli_test" / "out2";
    CHECK(run_cli("--config " + cfg.string() + " --out " + out1.string() + " scatter") ==
          0);
    CHECK(run_cli("--config " + cfg.string() + " --out " + out2.string() + " scatter") ==
          0);
    REQUIRE(fs::exists(out1 / "scattering.csv"));
    REQUIRE(fs::exists(out1 / "scattering.json"));
    CHECK(slurp(out1 / "scattering.csv") == slurp(out2 / "scattering.csv"));

    // header and one data line sanity
    std::ifstream f(out1 / "scattering.csv");
    std::string header;
    std::getline(f, header);
    CHECK(header == "k,re_r,im_r,abs_r,re_a,im_a");
}

TEST_CASE("asymp: pure-step pipeline writes sweep, matching and J reports") {
    const fs::path cfg = write_config("step_asymp.json", R"({
      "params": {"alpha": 1.0, "beta": 0.0, "delta": 0.25},
      "datum": {"kind": "pure_step"},
      "grid": {"k_max": 24.0, "uniform_step": 0.1},
      "sweep": {"xi": [-6.0, 1.0, 6.0], "t": [10.0]}
    })");
    const fs::path out = fs::temp_directory_path() / "nlscli_test" / "out_asymp";
    CHECK(run_cli("--config " + cfg.string() + " --out " + out.string() + " asymp") == 0);
    CHECK(fs::exists(out / "sweep.csv"));
    CHECK(fs::exists(out / "asymp.json"));
    const std::string j = slurp(out / "asymp.json");
    CHECK(j.find("\"parity\"") != std::string::npos);
    CHECK(j.find("\"matching\"") != std::string::npos);
}

TEST_CASE("scatter: tanh datum passes the cut diagnostic with exit 0") {
    const fs::path cfg = write_config("tanh.json", R"({
      "params": {"alpha": 1.0, "beta": 0.6, "delta": 0.25},
      "datum": {"kind": "tanh_step", "width": 1.0},
      "grid": {"k_max": 4.0, "uniform_step": 0.1}
    })");
    const fs::path out = fs::temp_directory_path() / "nlscli_test" / "out_tanh";
    CHECK(run_cli("--config " + cfg.string() + " --out " + out.string() + " scatter") ==
          0);
    const std::string j = slurp(out / "scattering.json");
    CHECK(j.find("\"pass\": true") != std::string::npos);
}

TEST_CASE("compare: small geometry writes the error table") {
    const fs::path cfg = write_config("small_cmp.json", R"({
      "params": {"alpha": 1.0, "beta": 0.6, "delta": 0.25},
      "datum": {"kind": "tanh_step", "width": 1.0},
      "grid": {"k_max": 6.0, "uniform_step": 0.1},
      "evolution": {"L_left": 40.0, "L_right": 60.0, "dx": 0.05, "t_end": 4.0,
                    "record_times": [2.0, 4.0]},
      "sweep": {"xi": [-2.0, 3.0, 8.0]}
    })");
    const fs::path out = fs::temp_directory_path() / "nlscli_test" / "out_cmp";
    CHECK(run_cli("--config " + cfg.string() + " --out " + out.string() + " compare") ==
          0);
    REQUIRE(fs::exists(out / "compare.csv"));
    std::ifstream f(out / "compare.csv");
    std::string header;
    std::getline(f, header);
    CHECK(header == "xi,t,sector,re_unum,im_unum,abs_unum,res_lead,res_full");
    int rows = 0;
    for (std::string line; std::getline(f, line);) ++rows;
    CHECK(rows == 6);  // 3 xi x 2 times, none in a transition band
}

TEST_CASE("evolve: CFL-violating step exits 1 before writing a trajectory") {
    const fs::path cfg = write_config("bad_evo.json", R"({
      "params": {"alpha": 1.0, "beta": 0.0, "delta": 0.25},
      "datum": {"kind": "tanh_step", "width": 1.0},
      "evolution": {"L_left": 20.0, "L_right": 20.0, "dx": 0.05, "t_end": 0.2,
                    "dt_factor": 0.9}
    })");
    const fs::path out = fs::temp_directory_path() / "nlscli_test" / "out_evo_bad";
    fs::remove_all(out);
    CHECK(run_cli("--config " + cfg.string() + " --out " + out.string() + " evolve") == 1);
    CHECK_FALSE(fs::exists(out / "manifest.json"));
}

TEST_CASE("evolve: small run writes snapshots and manifest") {
    const fs::path cfg = write_config("small_evo.json", R"({
      "params": {"alpha": 1.0, "beta": 0.0, "delta": 0.25},
      "datum": {"kind": "tanh_step", "width": 1.0},
      "evolution": {"L_left": 20.0, "L_right": 20.0, "dx": 0.05, "t_end": 0.2,
                    "record_times": [0.1, 0.2]}
    })");
    const fs::path out = fs::temp_directory_path() / "nlscli_test" / "out_evo";
    CHECK(run_cli("--config " + cfg.string() + " --out " + out.string() + " evolve") == 0);
    CHECK(fs::exists(out / "manifest.json"));
    CHECK(fs::exists(out / "trajectory_000.csv"));
    CHECK(fs::exists(out / "trajectory_001.csv"));
}
