#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "maxclass/census.hpp"

namespace maxclass {

/// Named verification suites, one per verified statement (the numbering
/// skips 9).
enum class Suite : std::uint8_t {
    Lemma1,
    Lemma3,
    Lemma4,
    Lemma5,
    Lemma6,
    Lemma7,
    Lemma8,
    Lemma10,
    Eq2,
    Eq13,
    Theorem,
    Corollary,
    All,
};

const char* to_string(Suite suite);
Suite suite_from_string(const std::string& name);

struct NRange {
    int lo = 0;
    int hi = 0;
};

/// The documented cap for each suite (enumerated suites stop at n = 4,
/// sampled closed-form suites reach n = 5, formula-only suites n = 6).
NRange default_range(Suite suite);

struct VerifyOptions {
    std::optional<NRange> range;   // defaults to the suite's cap
    int samples = 10000;           // randomized checks at large n
    std::uint64_t seed = 1;
    int workers = 1;
};

struct VerifyCheck {
    std::string name;
    int n = 0;
    std::string expected;
    std::string actual;
    bool pass = false;
};

struct VerifyReport {
    Suite suite = Suite::All;
    std::vector<VerifyCheck> checks;
    bool pass = false;
    double elapsed_ms = 0.0;
};

/// Deterministic for a fixed seed. Throws std::invalid_argument when the
/// requested range leaves the suite's cap ("All" intersects instead).
VerifyReport run_verify(Suite suite, const VerifyOptions& opts = {});

}  // namespace maxclass
