#ifndef POLYSTUFFLE_VERIFY_HPP
#define POLYSTUFFLE_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <polystuffle/harmonic.hpp>
#include <polystuffle/negindex.hpp>
#include <polystuffle/stars.hpp>

namespace polystuffle
{

/// A tabulated non-positive index: its rational function, the star
/// combination with the same Li, and the polynomial H when one is listed.
struct NegIndexExample {
    std::vector<int> index;
    RatFuncAtOne li;
    X1StarPoly stars;
    std::optional<NPoly> closed_form;
};

const std::vector<NegIndexExample> &negindex_examples();

struct CheckResult {
    std::string identity;
    bool pass;
    std::optional<std::size_t> first_failure_n;
};

enum class Suite { ex3, mixed, morphisms, stars, stirling, all };

Suite parse_suite(const std::string &name);
const char *suite_name(Suite s) noexcept;

/// Runs a suite. n_cap bounds every N range; seed drives the random cases.
/// Results come back in a fixed order, so equal arguments give equal reports.
std::vector<CheckResult> run_suite(Suite s, std::size_t n_cap, std::uint64_t seed);

inline constexpr std::size_t default_ncap = 30;
inline constexpr std::uint64_t default_seed = 20240601;

/// POLYLOG_NCAP_DEFAULT when set to a natural number, default_ncap otherwise.
std::size_t ncap_from_env();

} // namespace polystuffle

#endif
