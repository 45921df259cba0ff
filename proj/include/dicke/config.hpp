// config.hpp — Run configuration for the command-line subcommands
//
// Accepted documents are flat `key = value` text (one pair per line, '#'
// comments) or a single JSON object with the same keys. Every key is checked
// against the subcommand's schema; unknown keys are errors.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dicke/model.hpp"
#include "dicke/phase_map.hpp"
#include "dicke/rk4.hpp"
#include "dicke/semiclassical.hpp"
#include "dicke/stability.hpp"

namespace dicke {

enum class Subcommand { eigmap, boundaries, moments, semiclassical, phasemap };

const char* to_string(Subcommand s);
std::optional<Subcommand> subcommand_from_string(std::string_view name);

enum class OutputFormat { csv, jsonl };

const char* to_string(OutputFormat f);
std::optional<OutputFormat> output_format_from_string(std::string_view name);

struct RunConfig {
    Subcommand subcommand{Subcommand::eigmap};
    // eigmap/boundaries: bec | closed | open; semiclassical: full | adiabatic.
    std::string model;
    ModelParams params;

    std::vector<double> q_axis;
    std::vector<double> omega0_axis;
    std::vector<double> lambda_plus_axis;
    std::vector<double> lambda_minus_axis;

    IntegrationSettings integration;
    FullState seed = default_seed();

    PhaseWindow window;
    PhaseThresholds thresholds;
    ChaosSettings chaos;

    std::optional<std::string> out_path;
    OutputFormat format{OutputFormat::csv};

    // Accepted keys and their values as written, in document order; emitted
    // as output metadata so a result file can be re-run on its own.
    std::vector<std::pair<std::string, std::string>> echo;

    LinearModel linear_model() const;
    SemiclassicalSystem semiclassical_system() const;
};

// `subcommand` may be omitted when the document names it with a
// `subcommand` key; when both are present they must agree. Throws ParseError
// for malformed syntax or numbers and ValidationError for schema violations.
RunConfig parse_config(std::string_view document, std::optional<Subcommand> subcommand = std::nullopt);

// Axis syntax: `linspace(a, b, n)` or a comma-separated list. Must be finite,
// nonempty and strictly monotone.
std::vector<double> parse_axis(std::string_view text);

} // namespace dicke
