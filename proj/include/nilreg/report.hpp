#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"

namespace nilreg {

enum class Status { pass, fail, exhausted };

std::string to_string(Status s);
Status status_from_string(const std::string& s);

/// Outcome of a bounded verification or search. `exhausted` means a search
/// covered its whole candidate space without finding a witness.
struct VerificationReport {
    std::string check;
    nlohmann::json parameters = nlohmann::json::object();
    Status status = Status::pass;
    std::optional<nlohmann::json> witness;
    std::uint64_t candidates_examined = 0;
    double elapsed_ms = 0.0;
    // Check-specific counters; kept out of the fixed schema fields.
    nlohmann::json details = nlohmann::json::object();

    bool ok() const noexcept { return status != Status::fail; }

    void fail_with(nlohmann::json w) {
        if (status != Status::fail) witness = std::move(w);
        status = Status::fail;
    }

    nlohmann::json to_json() const;
    static VerificationReport from_json(const nlohmann::json& j);
};

class Stopwatch {
  public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
            .count();
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace nilreg
