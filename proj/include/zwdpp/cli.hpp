#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "zwdpp/common.hpp"

namespace zwdpp::cli {

using nlohmann::json;

struct Config {
    double z_re = 0.3, z_im = 0.4;
    double w_re = 0.3, w_im = -0.4;
    int n = 2;
    std::vector<int> n_list;
    long long window = 10;
    std::uint64_t seed = 1;
    double tol = 1e-8;
    std::string out;            // empty: stdout
    std::string format = "json";
    bool timing = false;        // wall clock breaks byte-for-byte reproducibility

    // command-specific knobs
    std::string kernel_kind = "cd";  // cd | ph | hyp | scaled
    double grid_min = 0.6, grid_max = 2.0;
    int grid_count = 8;
    double s_min = 0.6, s_max = 3.0;
    int s_count = 21;
    int quad_n = 32;
    bool with_residual = false;
    long long samples = 10000;
    long long trials = 10000;
    long long burn_in = 10000;
    long long thinning = 10;
    std::string method = "exact";  // exact | mh

    Cplx z() const { return Cplx(z_re, z_im); }
    Cplx w() const { return Cplx(w_re, w_im); }
    json echo() const;
};

struct Report {
    json doc;
    bool pass = false;
    std::string render_csv;  // populated when a CSV view exists
};

Report cmd_measure_table(const Config& cfg);
Report cmd_correlations(const Config& cfg);
Report cmd_involution(const Config& cfg);
Report cmd_kernel(const Config& cfg);
Report cmd_gap(const Config& cfg);
Report cmd_converge(const Config& cfg);

// Parses argv, dispatches, writes the report. Returns the process exit code:
// 0 all checks passed, 1 a check failed, 2 configuration error.
int cli_main(int argc, char** argv);

}  // namespace zwdpp::cli
