#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace oddref::cli {

enum class OutputFormat { json, table };

struct Config {
    int truncation_order = 8;
    std::uint64_t tableau_cap = 1'000'000;
    OutputFormat output_format = OutputFormat::json;
};

/// Environment variable naming a default config file.
inline constexpr const char* config_env = "ODDREF_CONFIG";

/// Parses a JSON config; absent keys keep their defaults. Throws io::FormatError.
Config config_from_text(const std::string& text);
Config load_config(const std::string& path);
/// The explicit path if given, else $ODDREF_CONFIG if set, else defaults.
Config resolve_config(const std::optional<std::string>& path);

OutputFormat parse_format(const std::string& name);

}  // namespace oddref::cli
