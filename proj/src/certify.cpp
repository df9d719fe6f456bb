#include "sesqui/certify.hpp"

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace sesqui {

std::string content_hash(const std::string& bytes) {
    std::uint64_t hash = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

std::string iso8601_now() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

nlohmann::json to_json(const Certificate& cert) {
    nlohmann::json claims = nlohmann::json::array();
    for (const auto& claim : cert.claims)
        claims.push_back({{"module", claim.module},
                          {"operation", claim.operation},
                          {"property", claim.property},
                          {"verdict", claim.verdict},
                          {"parameters", claim.parameters},
                          {"tolerance", claim.tolerance}});
    nlohmann::json out{{"subject", cert.subject},
                       {"claims", claims},
                       {"tool_version", cert.tool_version}};
    if (cert.timestamp) out["timestamp"] = *cert.timestamp;
    return out;
}

void write_certificate(const std::string& dir, const Certificate& cert) {
    std::filesystem::create_directories(dir);
    auto path = std::filesystem::path(dir) / (cert.subject + ".json");
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write certificate: " + path.string());
    out << to_json(cert).dump(2) << '\n';
}

}  // namespace sesqui
