#pragma once

#include <string>

#include "maxclass/bigint.hpp"
#include "maxclass/census.hpp"
#include "maxclass/verify.hpp"

namespace maxclass {

enum class Format : std::uint8_t { Json, Csv, Text };

Format format_from_string(const std::string& name);

/// One subgroup census result for reporting.
struct SubgroupReport {
    std::string spec;
    int n = 0;
    BigInt order;
    bool empty = false;
    double elapsed_ms = 0.0;
};

/// All JSON objects carry "schema": "maxclass-units/1"; counts are emitted as
/// decimal strings (they exceed 64 bits at the configured cap). Output is
/// byte-stable for fixed inputs except for the informational elapsed_ms.
std::string emit(const CensusReport& report, Format format);
std::string emit(const SubgroupReport& report, Format format);
std::string emit(const VerifyReport& report, Format format);

}  // namespace maxclass
