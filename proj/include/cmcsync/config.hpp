#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "cmcsync/sim.hpp"

namespace cmcsync::config {

/// Parse failure with the offending location; the CLI maps this to a usage
/// error (exit 2).
class ConfigError : public std::runtime_error {
public:
    ConfigError(const std::string& what, int line)
        : std::runtime_error(what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// The [analysis] section: parameters for the analytical engine and the
/// threshold search.
struct AnalysisSpec {
    std::int64_t levels = 1;    // R
    std::int64_t capacity = 1;  // N
    double delta_star_ns = 0;   // fixed threshold when not optimizing
    bool optimize = false;
    double search_lo_ns = 0;    // 0: derived from the hop laws
    double search_hi_ns = 0;
    int search_steps = 512;
    double bin_width_ns = 0;    // 0: delta*/64
    bool pure_exponential = false;
};

struct Config {
    sim::ScenarioSpec scenario;
    AnalysisSpec analysis;
    bool has_analysis = false;
};

/// Parse a sectioned key=value scenario file. Sections: [scenario],
/// [marking], [flows.N] (N = 1-based hop), [analysis].
Config parse_config_file(const std::string& path);
Config parse_config_text(const std::string& text,
                         const std::string& origin = "<text>");

/// Canonical round-trippable rendering: parse(echo(c)) == c.
std::string echo_config(const Config& config);

} // namespace cmcsync::config
