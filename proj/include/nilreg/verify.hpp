#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nilreg/report.hpp"
#include "nilreg/rewrite.hpp"
#include "nilreg/scalar.hpp"

namespace nilreg {

struct RunConfig {
    PresentationKind presentation = PresentationKind::S;
    std::uint32_t n = 3;
    Field field = Field::prime(2);
    std::size_t max_len = 6;
    std::size_t max_word_len = 3;
    std::uint64_t seed = 1;
    unsigned workers = 1;
    std::optional<std::size_t> trials;  // per-check default when unset
    bool json = false;

    // S with x^n = 0, or R with a^(n-1) = 0.
    RewriteSystem system() const;
};

const std::vector<std::string>& check_names();

/// Runs a named check. Throws std::invalid_argument on an unknown name.
VerificationReport run_check(const std::string& name, const RunConfig& cfg);

/// Multi-line human-readable rendering of a report.
std::string render_text(const VerificationReport& rep);

}  // namespace nilreg
