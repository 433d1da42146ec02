#ifndef SPECTRA_VERIFY_HPP
#define SPECTRA_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace spectra {

struct VerifyResult {
    std::string suite;
    std::uint64_t seed = 0;
    std::size_t count = 0;
    std::size_t passed = 0;
    std::vector<std::string> failures;

    bool ok() const { return passed == count && count > 0; }
};

/// Runs one of the named property suites: smt, projection, cone, les,
/// annihilation, serre, dh1, crosscheck.
VerifyResult run_verify_suite(const std::string& name, std::uint64_t seed, std::size_t count);

std::vector<std::string> verify_suite_names();

} // namespace spectra

#endif
