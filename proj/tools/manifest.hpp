#pragma once

#include "fournet/config.hpp"
#include "fournet/serialization.hpp"

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fournet::cli {

struct InputDigest {
    std::string path;
    std::string sha256;
};

// Everything needed to rerun a simulation or comparison exactly.
struct RunManifest {
    std::string tool_version;
    std::vector<std::string> command;
    Config config;
    std::vector<InputDigest> inputs;
    std::uint64_t seed = 0;
    std::string timestamp; // UTC, ISO 8601
};

std::string sha256_hex(std::string_view bytes);
std::string utc_timestamp();
Json to_json(const RunManifest& manifest);

std::string read_file(const std::filesystem::path& path);

// Writes to a sibling temporary file and renames it into place, so a failed
// run never leaves a partial output behind.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

} // namespace fournet::cli
