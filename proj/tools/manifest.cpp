#include "manifest.hpp"

#include "fournet/error.hpp"

#include <fmt/chrono.h>
#include <fmt/format.h>
#include <openssl/evp.h>

#include <chrono>
#include <fstream>
#include <memory>
#include <sstream>
#include <system_error>
#include <unistd.h>

namespace fournet::cli {

std::string sha256_hex(std::string_view bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("sha256 digest failed");
    std::string hex;
    hex.reserve(2 * length);
    for (unsigned int i = 0; i < length; ++i)
        hex += fmt::format("{:02x}", digest[i]);
    return hex;
}

std::string utc_timestamp() {
    auto now = std::chrono::floor<std::chrono::seconds>(std::chrono::system_clock::now());
    return fmt::format("{:%Y-%m-%dT%H:%M:%SZ}", now);
}

Json to_json(const RunManifest& manifest) {
    Json inputs = Json::array();
    for (const auto& in : manifest.inputs)
        inputs.push_back(Json{{"path", in.path}, {"sha256", in.sha256}});
    return Json{{"tool", "fournet"},
                {"version", manifest.tool_version},
                {"command", manifest.command},
                {"config", fournet::to_json(manifest.config)},
                {"inputs", inputs},
                {"seed", manifest.seed},
                {"timestamp", manifest.timestamp}};
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ValidationError(fmt::format("cannot read {}", path.string()));
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
    auto tmp = path;
    tmp += fmt::format(".tmp{}", ::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw ValidationError(fmt::format("cannot write {}", path.string()));
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.close();
        if (!out) {
            std::error_code ignored;
            std::filesystem::remove(tmp, ignored);
            throw ValidationError(fmt::format("cannot write {}", path.string()));
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw ValidationError(fmt::format("cannot move output into place at {}", path.string()));
    }
}

} // namespace fournet::cli
