#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

namespace polymean {

enum class Verdict { IdentityHolds, IdentityViolated, Info };

std::string to_string(Verdict v);
/// Throws ParameterError for an unknown name.
Verdict verdict_from_string(std::string_view name);

inline constexpr const char* kToolVersion = "0.1.0";

/// One document per invocation, emitted as indented JSON with stable key order.
struct Report {
    std::string command;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    Verdict verdict = Verdict::Info;
    nlohmann::ordered_json payload = nlohmann::ordered_json::object();
    std::string toolVersion = kToolVersion;
    std::uint64_t seed = 0;

    std::string serialize() const;
    /// Throws ParameterError on malformed input.
    static Report deserialize(std::string_view text);

    friend bool operator==(const Report&, const Report&) = default;
};

}  // namespace polymean
