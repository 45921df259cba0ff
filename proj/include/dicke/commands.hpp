// commands.hpp — Subcommand dispatch from a validated RunConfig to a ResultTable

#pragma once

#include "dicke/config.hpp"
#include "dicke/table.hpp"

namespace dicke {

// Deterministic for a given config. Integration divergence is reported in a
// status column, not thrown; module errors propagate with the subcommand
// name prefixed to the message.
ResultTable run_subcommand(const RunConfig& config);

} // namespace dicke
