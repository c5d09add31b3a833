#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "demon/device.hpp"
#include "demon/engine.hpp"
#include "demon/gates.hpp"

namespace demon::serialize {

/// Fixed 12-significant-digit formatting used for every CSV number.
std::string format_number(double v);

nlohmann::json matrix_to_json(const qmat::ComplexMatrix& m);

/// Ledger fields in natural units; an optional "si" block (joule/watt
/// figures from the device layer) is attached verbatim when present.
nlohmann::json ledger_to_json(const engine::CycleLedger& ledger,
                              const std::optional<nlohmann::json>& si = {});

nlohmann::json sequence_to_json(const gates::GateSequence& seq);
nlohmann::json report_to_json(const gates::DecompositionReport& report);

nlohmann::json schedule_to_json(const device::PulseSchedule& schedule);
std::string schedule_to_csv(const device::PulseSchedule& schedule);

} // namespace demon::serialize
