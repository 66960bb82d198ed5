#include "nilreg/report.hpp"

#include <stdexcept>

namespace nilreg {

std::string to_string(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::exhausted: return "exhausted";
    }
    return "fail";
}

Status status_from_string(const std::string& s) {
    if (s == "pass") return Status::pass;
    if (s == "fail") return Status::fail;
    if (s == "exhausted") return Status::exhausted;
    throw std::invalid_argument("unknown status '" + s + "'");
}

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json j;
    j["check"] = check;
    j["parameters"] = parameters;
    j["status"] = to_string(status);
    if (witness) j["witness"] = *witness;
    j["candidates_examined"] = candidates_examined;
    j["elapsed_ms"] = elapsed_ms;
    if (!details.empty()) j["details"] = details;
    return j;
}

VerificationReport VerificationReport::from_json(const nlohmann::json& j) {
    VerificationReport r;
    r.check = j.at("check").get<std::string>();
    r.parameters = j.at("parameters");
    r.status = status_from_string(j.at("status").get<std::string>());
    if (j.contains("witness")) r.witness = j.at("witness");
    r.candidates_examined = j.at("candidates_examined").get<std::uint64_t>();
    r.elapsed_ms = j.at("elapsed_ms").get<double>();
    if (j.contains("details")) r.details = j.at("details");
    return r;
}

}  // namespace nilreg
