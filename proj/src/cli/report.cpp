#include "polymean/report.hpp"

#include "polymean/errors.hpp"

namespace polymean {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::IdentityHolds: return "identity-holds";
        case Verdict::IdentityViolated: return "identity-violated";
        case Verdict::Info: return "info";
    }
    return "info";
}

Verdict verdict_from_string(std::string_view name) {
    if (name == "identity-holds") return Verdict::IdentityHolds;
    if (name == "identity-violated") return Verdict::IdentityViolated;
    if (name == "info") return Verdict::Info;
    throw ParameterError("unknown verdict '" + std::string(name) + "'");
}

std::string Report::serialize() const {
    nlohmann::ordered_json doc;
    doc["command"] = command;
    doc["params"] = params;
    doc["verdict"] = to_string(verdict);
    doc["payload"] = payload;
    doc["toolVersion"] = toolVersion;
    doc["seed"] = seed;
    return doc.dump(2) + "\n";
}

Report Report::deserialize(std::string_view text) {
    try {
        const auto doc = nlohmann::ordered_json::parse(text);
        Report r;
        r.command = doc.at("command").get<std::string>();
        r.params = doc.at("params");
        r.verdict = verdict_from_string(doc.at("verdict").get<std::string>());
        r.payload = doc.at("payload");
        r.toolVersion = doc.at("toolVersion").get<std::string>();
        r.seed = doc.at("seed").get<std::uint64_t>();
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw ParameterError(std::string("malformed report: ") + e.what());
    }
}

}  // namespace polymean
