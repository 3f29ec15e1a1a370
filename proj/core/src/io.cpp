#include "opam/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace opam {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& origin, const std::string& msg) {
    throw std::runtime_error(origin + ": " + msg);
}

json parse_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(path.string() + ": " + e.what());
    }
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
}

void reject_unknown(const json& obj, std::initializer_list<const char*> allowed,
                    const std::string& origin) {
    for (const auto& [key, value] : obj.items()) {
        bool known = false;
        for (const char* a : allowed)
            if (key == a) known = true;
        if (!known) fail(origin, "unknown field \"" + key + "\"");
    }
}

template <typename T>
T require(const json& obj, const char* key, const std::string& origin) {
    if (!obj.contains(key)) fail(origin, "missing field \"" + std::string(key) + "\"");
    try {
        return obj.at(key).get<T>();
    } catch (const json::exception&) {
        fail(origin, "field \"" + std::string(key) + "\" has the wrong type");
    }
}

template <typename T>
T optional_field(const json& obj, const char* key, T fallback, const std::string& origin) {
    if (!obj.contains(key)) return fallback;
    try {
        return obj.at(key).get<T>();
    } catch (const json::exception&) {
        fail(origin, "field \"" + std::string(key) + "\" has the wrong type");
    }
}

}  // namespace

TaskSet taskset_from_json(const std::string& text, const std::string& origin) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(origin, e.what());
    }
    if (!doc.is_object()) fail(origin, "top level must be an object");
    reject_unknown(doc, {"tasks", "dependencies", "triggers", "cores", "tick_unit"}, origin);

    TaskSet ts;
    ts.cores = optional_field<int>(doc, "cores", 1, origin);
    ts.tick_unit = optional_field<std::string>(doc, "tick_unit", "", origin);
    if (!doc.contains("tasks") || !doc["tasks"].is_array())
        fail(origin, "missing \"tasks\" array");

    int index = 0;
    for (const json& entry : doc["tasks"]) {
        const std::string where = origin + ", task entry " + std::to_string(index);
        reject_unknown(entry,
                       {"id", "kind", "wcet", "deadline", "period", "offset", "pmin", "pmax",
                        "deadline_class", "triggered"},
                       where);
        Task t;
        t.id = optional_field<int>(entry, "id", index, where);
        const auto kind = require<std::string>(entry, "kind", where);
        if (kind == "periodic") t.kind = TaskKind::Periodic;
        else if (kind == "aperiodic") t.kind = TaskKind::Aperiodic;
        else fail(where, "kind must be \"periodic\" or \"aperiodic\"");
        t.wcet = require<Tick>(entry, "wcet", where);
        t.deadline = require<Tick>(entry, "deadline", where);
        t.triggered = optional_field<bool>(entry, "triggered", false, where);
        const auto dc = optional_field<std::string>(entry, "deadline_class", "hard", where);
        if (dc == "hard") t.deadline_class = DeadlineClass::Hard;
        else if (dc == "soft") t.deadline_class = DeadlineClass::Soft;
        else fail(where, "deadline_class must be \"hard\" or \"soft\"");
        if (t.periodic() && !t.triggered) {
            t.period = require<Tick>(entry, "period", where);
            t.offset = optional_field<Tick>(entry, "offset", 0, where);
            t.pmin = t.period;
            t.pmax = t.period;
        } else if (t.aperiodic() && !t.triggered) {
            t.pmin = require<Tick>(entry, "pmin", where);
            t.pmax = require<Tick>(entry, "pmax", where);
        }
        ts.tasks.push_back(t);
        ++index;
    }
    for (const char* rel : {"dependencies", "triggers"}) {
        if (!doc.contains(rel)) continue;
        for (const json& pair : doc[rel]) {
            if (!pair.is_array() || pair.size() != 2)
                fail(origin, std::string("\"") + rel + "\" entries must be [from, to] pairs");
            const int a = pair[0].get<int>(), b = pair[1].get<int>();
            if (rel[0] == 'd')
                ts.dependencies.emplace_back(std::min(a, b), std::max(a, b));
            else
                ts.triggers.emplace_back(a, b);
        }
    }

    if (auto errs = validate_taskset(ts); !errs.empty())
        fail(origin, "invalid task set: " + errs.front());
    return ts;
}

std::string taskset_to_json(const TaskSet& ts) {
    json doc;
    doc["cores"] = ts.cores;
    if (!ts.tick_unit.empty()) doc["tick_unit"] = ts.tick_unit;
    doc["tasks"] = json::array();
    for (const Task& t : ts.tasks) {
        json entry;
        entry["id"] = t.id;
        entry["kind"] = t.periodic() ? "periodic" : "aperiodic";
        entry["wcet"] = t.wcet;
        entry["deadline"] = t.deadline;
        if (t.triggered) {
            entry["triggered"] = true;
        } else if (t.periodic()) {
            entry["period"] = t.period;
            entry["offset"] = t.offset;
        } else {
            entry["pmin"] = t.pmin;
            entry["pmax"] = t.pmax;
        }
        if (t.deadline_class == DeadlineClass::Soft) entry["deadline_class"] = "soft";
        doc["tasks"].push_back(entry);
    }
    doc["dependencies"] = json::array();
    for (auto [a, b] : ts.dependencies) doc["dependencies"].push_back({a, b});
    doc["triggers"] = json::array();
    for (auto [a, b] : ts.triggers) doc["triggers"].push_back({a, b});
    return doc.dump(2) + "\n";
}

TaskSet read_taskset(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open task set file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return taskset_from_json(buf.str(), path.string());
}

void write_taskset(const TaskSet& ts, const std::filesystem::path& path) {
    write_text(path, taskset_to_json(ts));
}

PriorityAssignment read_priorities(const std::filesystem::path& path) {
    const json doc = parse_file(path);
    const std::string origin = path.string();
    if (!doc.is_object()) fail(origin, "top level must be an object");
    reject_unknown(doc, {"priority"}, origin);
    PriorityAssignment pa;
    pa.priority = require<std::vector<int>>(doc, "priority", origin);
    if (!pa.is_permutation())
        fail(origin, "\"priority\" must be a permutation of 1..n");
    return pa;
}

void write_priorities(const PriorityAssignment& pa, const std::filesystem::path& path) {
    json doc;
    doc["priority"] = pa.priority;
    write_text(path, doc.dump(2) + "\n");
}

ArrivalSequence read_arrivals(const std::filesystem::path& path, int task_count) {
    const json doc = parse_file(path);
    const std::string origin = path.string();
    if (!doc.is_object()) fail(origin, "top level must be an object");
    reject_unknown(doc, {"horizon", "arrivals"}, origin);
    ArrivalSequence seq;
    seq.horizon = require<Tick>(doc, "horizon", origin);
    seq.arrivals = require<std::vector<std::vector<Tick>>>(doc, "arrivals", origin);
    if (static_cast<int>(seq.arrivals.size()) != task_count)
        fail(origin, "\"arrivals\" must hold one list per task");
    return seq;
}

void write_arrivals(const ArrivalSequence& seq, const std::filesystem::path& path) {
    json doc;
    doc["horizon"] = seq.horizon;
    doc["arrivals"] = seq.arrivals;
    write_text(path, doc.dump(2) + "\n");
}

BestFront read_front(const std::filesystem::path& path) {
    const json doc = parse_file(path);
    const std::string origin = path.string();
    reject_unknown(doc, {"method", "seed", "members"}, origin);
    BestFront front;
    for (const json& entry : doc.at("members")) {
        reject_unknown(entry, {"priority", "fs", "fc"}, origin);
        FrontMember m;
        m.assignment.priority = require<std::vector<int>>(entry, "priority", origin);
        m.fs = require<double>(entry, "fs", origin);
        m.fc = require<double>(entry, "fc", origin);
        if (!m.assignment.is_permutation())
            fail(origin, "front member priority list is not a permutation");
        front.members.push_back(std::move(m));
    }
    return front;
}

std::string front_to_json(const BestFront& front, const std::string& method, std::uint64_t seed) {
    json doc;
    doc["method"] = method;
    doc["seed"] = seed;
    doc["members"] = json::array();
    for (const FrontMember& m : front.members) {
        json entry;
        entry["priority"] = m.assignment.priority;
        entry["fs"] = m.fs;
        entry["fc"] = m.fc;
        doc["members"].push_back(entry);
    }
    return doc.dump(2) + "\n";
}

void write_front(const BestFront& front, const std::filesystem::path& path,
                 const std::string& method, std::uint64_t seed) {
    write_text(path, front_to_json(front, method, seed));
}

std::string scenario_to_csv(const ScheduleScenario& s) {
    std::ostringstream out;
    out << "task_id,arrival,end,deadline_abs,dist,complete\n";
    for (const Execution& e : s.executions)
        out << e.task << ',' << e.arrival << ',' << e.end << ',' << e.deadline_abs << ','
            << e.dist() << ',' << (e.complete ? 1 : 0) << '\n';
    return out.str();
}

void write_scenario_csv(const ScheduleScenario& s, const std::filesystem::path& path) {
    write_text(path, scenario_to_csv(s));
}

void write_cycle_csv(const std::vector<CycleRow>& rows, const std::filesystem::path& path) {
    std::ostringstream out;
    out << "cycle,best_fs,best_fc,wall_ms\n";
    for (const CycleRow& r : rows)
        out << r.cycle << ',' << r.best_fs << ',' << r.best_fc << ',' << r.wall_ms << '\n';
    write_text(path, out.str());
}

}  // namespace opam
