#include "demon/serialize.hpp"

#include <cstdio>

namespace demon::serialize {

using nlohmann::json;

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

json matrix_to_json(const qmat::ComplexMatrix& m) {
    json rows = json::array();
    for (int r = 0; r < m.dim(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.dim(); ++c)
            row.push_back({m(r, c).real(), m(r, c).imag()});
        rows.push_back(std::move(row));
    }
    return rows;
}

json ledger_to_json(const engine::CycleLedger& ledger,
                    const std::optional<json>& si) {
    json j;
    j["e_s"] = ledger.e_s;
    j["e_d"] = ledger.e_d;
    j["e_s_mid"] = ledger.e_s_mid;
    j["e_d_mid"] = ledger.e_d_mid;
    j["e_s_after"] = ledger.e_s_after;
    j["e_d_after"] = ledger.e_d_after;
    j["q_in"] = ledger.q_in;
    j["q_out"] = ledger.q_out;
    j["w"] = ledger.w;
    j["eta"] = ledger.eta ? json(*ledger.eta) : json(nullptr);
    j["entropies"] = ledger.entropies;
    j["rho1"] = matrix_to_json(ledger.rho1);
    j["rho2"] = matrix_to_json(ledger.rho2);
    j["rho3"] = matrix_to_json(ledger.rho3);
    if (si) j["si"] = *si;
    return j;
}

namespace {

const char* kind_name(gates::StepKind k) {
    switch (k) {
        case gates::StepKind::rot_x: return "rot_x";
        case gates::StepKind::rot_z: return "rot_z";
        case gates::StepKind::native_evolve: return "native_evolve";
        case gates::StepKind::barrier: return "barrier";
    }
    return "?";
}

const char* target_name(gates::StepTarget t) {
    switch (t) {
        case gates::StepTarget::S: return "S";
        case gates::StepTarget::D: return "D";
        case gates::StepTarget::Both: return "both";
    }
    return "?";
}

json assignment_to_json(const gates::SignAssignment& a) {
    return {{"control", name(a.control)},
            {"signs", a.signs}};
}

} // namespace

json sequence_to_json(const gates::GateSequence& seq) {
    json steps = json::array();
    int index = 0;
    for (const auto& step : seq.steps) {
        json s;
        s["index"] = index++;
        s["kind"] = kind_name(step.kind);
        s["target"] = target_name(step.target);
        if (step.kind == gates::StepKind::native_evolve)
            s["duration"] = step.value;
        else
            s["angle"] = step.value;
        steps.push_back(std::move(s));
    }
    return {{"steps", std::move(steps)},
            {"assignment", assignment_to_json(seq.assignment)},
            {"coupling", seq.coupling}};
}

json report_to_json(const gates::DecompositionReport& report) {
    return {{"best_signs", assignment_to_json(report.best_signs)},
            {"distance", report.distance},
            {"local_correction", report.local_correction},
            {"sequence", sequence_to_json(report.sequence)}};
}

json schedule_to_json(const device::PulseSchedule& schedule) {
    json entries = json::array();
    for (const auto& e : schedule.entries)
        entries.push_back({{"t_start", e.t_start},
                           {"t_end", e.t_end},
                           {"channel", e.channel},
                           {"value", e.value}});
    return {{"entries", std::move(entries)},
            {"thermalization_wait", schedule.thermalization_wait},
            {"total_gate_time", schedule.total_gate_time},
            {"timing_warning", schedule.timing_warning}};
}

std::string schedule_to_csv(const device::PulseSchedule& schedule) {
    std::string out = "t_start,t_end,channel,value\n";
    for (const auto& e : schedule.entries) {
        out += format_number(e.t_start);
        out += ',';
        out += format_number(e.t_end);
        out += ',';
        out += e.channel;
        out += ',';
        out += format_number(e.value);
        out += '\n';
    }
    return out;
}

} // namespace demon::serialize
