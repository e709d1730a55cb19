#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "inertia/bipartite.hpp"

namespace inertia::cli {

struct InertiaCmd {
    std::filesystem::path input;
    std::optional<BipartiteDims> dims;  // defaults to the dims stored in the file
    double zero_tol = 1e-9;
    std::optional<std::filesystem::path> report;
};

struct SearchCmd {
    BipartiteDims dims;
    Inertia target;
    std::size_t restarts = 0;  // 0 = auto: 50 below order 12, 200 from order 12 up
    std::size_t max_iters = 400;
    std::uint64_t seed = 0;
    double zero_tol = 1e-9;
    double margin = 1e-4;
    double separation_ratio = 1e4;
    std::optional<std::filesystem::path> out;
    std::optional<std::filesystem::path> report;
};

struct CatalogCmd {
    BipartiteDims dims;
    std::optional<std::filesystem::path> report;
};

struct VerifyCmd {
    std::string lemma = "all";
    std::size_t trials = 500;
    std::uint64_t seed = 0;
    std::optional<std::filesystem::path> report;
};

struct CensusCmd {
    BipartiteDims dims;
    std::size_t samples = 10000;
    std::vector<std::size_t> ranks;  // cycled; empty -> {d, d-1, d-2}
    std::uint64_t seed = 0;
    double zero_tol = 1e-9;
    std::optional<std::filesystem::path> out;  // CSV path; stdout when absent
    std::optional<std::filesystem::path> report;
};

int run_inertia(const InertiaCmd& cmd, std::ostream& out);
int run_search(const SearchCmd& cmd, std::ostream& out);
int run_catalog(const CatalogCmd& cmd, std::ostream& out);
int run_verify(const VerifyCmd& cmd, std::ostream& out);
int run_census(const CensusCmd& cmd, std::ostream& out);

/// Exit code for a library error; see README for the table.
int exit_code_for(const std::exception& e);

/// Full command-line surface; used by main() and by the test-suite.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

BipartiteDims parse_dims(const std::string& text);
Inertia parse_target(const std::string& text);

}  // namespace inertia::cli
