#pragma once

// Verification suites run by `qhopf verify <suite>`.

#include "qhopf/serialize.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qhopf {

struct VerifyConfig {
    mpq_class p{1, 2};
    mpq_class q{1, 3};
    int N = 300;
    std::uint64_t seed = 7;
};

struct CheckRecord {
    std::string check_name;
    Json params = Json::object();
    double defect = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::string detail;  // first failing instance, empty on success
};

/// algebra, gluing, galois, chern, numeric, classical.
const std::vector<std::string>& suite_names();

/// "all" runs every suite in order. Throws std::invalid_argument for an unknown name.
std::vector<CheckRecord> run_suite(const std::string& name, const VerifyConfig& config);

Json to_json(const CheckRecord& r);

}  // namespace qhopf
