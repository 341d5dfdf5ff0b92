#include "oddref_cli/config.hpp"

#include "oddref_cli/json_io.hpp"

#include <cstdlib>

namespace oddref::cli {

OutputFormat parse_format(const std::string& name)
{
    if (name == "json")
        return OutputFormat::json;
    if (name == "table")
        return OutputFormat::table;
    throw io::FormatError("output_format must be \"json\" or \"table\", got \"" + name + "\"");
}

namespace {

Config config_from_json(const io::Json& j)
{
    if (!j.is_object())
        throw io::FormatError("config must be a JSON object");
    Config cfg;
    for (const auto& [key, value] : j.items()) {
        if (key == "truncation_order") {
            if (!value.is_number_integer() || value.get<long long>() < 0)
                throw io::FormatError("truncation_order must be a nonnegative integer");
            cfg.truncation_order = value.get<int>();
        } else if (key == "tableau_cap") {
            if (!value.is_number_integer() || value.get<long long>() < 1)
                throw io::FormatError("tableau_cap must be a positive integer");
            cfg.tableau_cap = value.get<std::uint64_t>();
        } else if (key == "output_format") {
            if (!value.is_string())
                throw io::FormatError("output_format must be a string");
            cfg.output_format = parse_format(value.get<std::string>());
        } else {
            throw io::FormatError("unknown config key \"" + key + "\"");
        }
    }
    return cfg;
}

}  // namespace

Config config_from_text(const std::string& text) { return config_from_json(io::parse_text(text)); }

Config load_config(const std::string& path) { return config_from_json(io::read_file(path)); }

Config resolve_config(const std::optional<std::string>& path)
{
    if (path)
        return load_config(*path);
    if (const char* env = std::getenv(config_env); env != nullptr && *env != '\0')
        return load_config(env);
    return {};
}

}  // namespace oddref::cli
