#pragma once

#include <filesystem>
#include <string>

#include "opam/coevolution.hpp"
#include "opam/task_model.hpp"

namespace opam {

// All readers throw std::runtime_error with the offending file/field named;
// unknown fields are rejected. Writers produce deterministic output for
// identical inputs.

TaskSet read_taskset(const std::filesystem::path& path);
void write_taskset(const TaskSet& ts, const std::filesystem::path& path);
std::string taskset_to_json(const TaskSet& ts);
TaskSet taskset_from_json(const std::string& text, const std::string& origin = "<string>");

PriorityAssignment read_priorities(const std::filesystem::path& path);
void write_priorities(const PriorityAssignment& pa, const std::filesystem::path& path);

ArrivalSequence read_arrivals(const std::filesystem::path& path, int task_count);
void write_arrivals(const ArrivalSequence& seq, const std::filesystem::path& path);

BestFront read_front(const std::filesystem::path& path);
void write_front(const BestFront& front, const std::filesystem::path& path,
                 const std::string& method = "", std::uint64_t seed = 0);
std::string front_to_json(const BestFront& front, const std::string& method = "",
                          std::uint64_t seed = 0);

// columns: task_id, arrival, end, deadline_abs, dist, complete
std::string scenario_to_csv(const ScheduleScenario& s);
void write_scenario_csv(const ScheduleScenario& s, const std::filesystem::path& path);

// columns: cycle, best_fs, best_fc, wall_ms
void write_cycle_csv(const std::vector<CycleRow>& rows, const std::filesystem::path& path);

}  // namespace opam
