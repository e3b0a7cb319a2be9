// Gate registry shared by the `verify` subcommand and the acceptance runner.
//
// A gate is one named check with a measured value, a requirement, and a
// pass/fail verdict.  Suites ("exact", "rmt", "ffield", "nf") partition the
// gates by module; acceptance criteria group them by criterion number.
// `verify --suite all` runs exactly the union of the suites and nothing else.

#pragma once

#include "zetamoments/moments.hpp"
#include "zetamoments/sieve.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

namespace zm {
namespace verify {

struct GateResult {
    bool pass = false;
    std::string measured;
    std::string required;
};

class Context {
  public:
    Context(std::uint64_t seed, int workers);

    std::uint64_t seed() const { return seed_; }
    int workers() const { return workers_; }

    const moments::MomentPolyFamily& family(int k) const;
    // d_k table covering at least X (cached; the largest request wins)
    const nf::SieveTable& sieve(int k, std::uint64_t X) const;

  private:
    std::uint64_t seed_;
    int workers_;
    mutable std::map<int, moments::MomentPolyFamily> families_;
    mutable std::map<int, std::unique_ptr<nf::SieveTable>> sieves_;
};

struct Gate {
    std::string id;
    std::string suite;    // exact | rmt | ffield | nf
    int criterion = 0;    // acceptance criterion number, 0 if none
    std::string desc;
    std::function<GateResult(const Context&)> run;
};

const std::vector<Gate>& all_gates();

struct SuiteOutcome {
    int passed = 0;
    int failed = 0;
};

// Runs every gate of `suite` ("all" for the union), printing one line per
// gate to `os`.
SuiteOutcome run_suite(const std::string& suite, const Context& ctx, std::ostream& os);

bool known_suite(const std::string& suite);

}  // namespace verify
}  // namespace zm
