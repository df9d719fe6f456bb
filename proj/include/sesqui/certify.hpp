#ifndef SESQUI_CERTIFY_HPP
#define SESQUI_CERTIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace sesqui {

inline constexpr const char* kToolVersion = "0.1.0";

/// One checked property: which module/operation produced it, the verdict,
/// and the parameters and tolerance it was checked at.
struct Claim {
    std::string module;
    std::string operation;
    std::string property;
    std::string verdict;  // "pass", "fail", "found", ...
    nlohmann::json parameters;
    double tolerance = 0.0;
};

/// Persisted record of claims about a subject, keyed by the content hash of
/// the subject's canonical JSON bytes. Verdicts are reproducible from the
/// subject alone; the timestamp is optional so runs can be byte-compared.
struct Certificate {
    std::string subject;
    std::vector<Claim> claims;
    std::string tool_version = kToolVersion;
    std::optional<std::string> timestamp;
};

/// FNV-1a 64-bit, hex encoded. Content addressing, not cryptography.
std::string content_hash(const std::string& bytes);

std::string iso8601_now();

nlohmann::json to_json(const Certificate& cert);

/// Writes <dir>/<subject>.json, creating the directory if needed.
void write_certificate(const std::string& dir, const Certificate& cert);

}  // namespace sesqui

#endif
