#pragma once

#include <cstdint>
#include <string>

#include "rational.hpp"

namespace patternforge {

// Parsed command line. Exactly one command; paths are validated by dispatch.
struct RunConfig {
    std::string command;  // check | build | verify | hunt | edges | render | catalog

    std::string class_selector;          // check
    std::string graph_path;              // check | build | verify
    std::string rep_path;                // verify | render
    std::string rep_kind;                // build
    std::string ordering_path;           // build
    bool solve = false;                  // build: find the ordering first
    bool brute = false;                  // check: full factorial scan
    std::uint64_t budget = 0;            // 0 = environment override or default
    int max_n = 6;                       // hunt | edges
    std::string in_class, notin_class;   // hunt
    bool diagram = false;                // edges
    std::string out_path;                // main JSON artifact (empty = stdout)
    std::string svg_path;                // build | render
    std::string dot_path;                // edges
    Rational svg_scale = Rational(60);   // render
};

struct RunResult {
    int exit_code = 0;
    std::string output;  // main JSON document (already written to out_path when set)
};

// Exit codes: 0 success/member, 1 non-member/invalid/not-found, 2 unknown
// (budget exhausted), 3 usage error. Reports are deterministic byte-for-byte
// for identical inputs.
RunResult dispatch(const RunConfig& cfg);

}  // namespace patternforge
