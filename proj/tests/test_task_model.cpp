#include <doctest.h>

#include "helpers.hpp"
#include "opam/task_model.hpp"

using namespace opam;
using namespace test_helpers;

TEST_CASE("validate_taskset accepts a well-formed set") {
    TaskSet ts = fig_taskset();
    CHECK(validate_taskset(ts).empty());
}

TEST_CASE("validate_taskset flags aperiodic pmax <= pmin") {
    TaskSet ts;
    ts.tasks = {aperiodic_task(0, 5, 5, 1, 4)};
    const auto errs = validate_taskset(ts);
    REQUIRE(errs.size() == 1);
    CHECK(errs.front().find("pmax must exceed pmin") != std::string::npos);
}

TEST_CASE("validate_taskset flags a triggering cycle") {
    TaskSet ts;
    ts.tasks = {periodic_task(0, 10, 0, 1, 10), periodic_task(1, 10, 0, 1, 10)};
    ts.tasks[0].triggered = true;
    ts.tasks[1].triggered = true;
    ts.triggers = {{0, 1}, {1, 0}};
    const auto errs = validate_taskset(ts);
    bool found = false;
    for (const auto& e : errs)
        if (e.find("circular triggering") != std::string::npos) found = true;
    CHECK(found);
}

TEST_CASE("validate_taskset flags multiple trigger sources and bad endpoints") {
    TaskSet ts;
    ts.tasks = {periodic_task(0, 10, 0, 1, 10), periodic_task(1, 10, 0, 1, 10),
                periodic_task(2, 10, 0, 1, 10)};
    ts.tasks[2].triggered = true;
    ts.triggers = {{0, 2}, {1, 2}};
    ts.dependencies = {{0, 0}, {0, 7}};
    const auto errs = validate_taskset(ts);
    auto has = [&](const char* needle) {
        for (const auto& e : errs)
            if (e.find(needle) != std::string::npos) return true;
        return false;
    };
    CHECK(has("more than one trigger source"));
    CHECK(has("self-loop"));
    CHECK(has("out of range"));
}

TEST_CASE("periodic_arrivals") {
    CHECK(periodic_arrivals(periodic_task(0, 8, 8, 3, 7), 23) == std::vector<Tick>{8, 16});
    CHECK(periodic_arrivals(periodic_task(0, 10, 0, 1, 10), 10) == std::vector<Tick>{0, 10});
    CHECK(periodic_arrivals(periodic_task(0, 100, 5, 1, 10), 4).empty());
    CHECK_THROWS(periodic_arrivals(aperiodic_task(0, 5, 13, 2, 4), 23));
}

TEST_CASE("periodic_arrivals length formula") {
    Rng rng(11);
    std::uniform_int_distribution<Tick> period(1, 50), offset(0, 80), horizon(0, 300);
    for (int i = 0; i < 500; ++i) {
        const Task t = periodic_task(0, period(rng), offset(rng), 1, 5);
        const Tick T = horizon(rng);
        const auto ats = periodic_arrivals(t, T);
        const std::size_t expected =
            t.offset <= T ? static_cast<std::size_t>((T - t.offset) / t.period) + 1 : 0;
        CHECK(ats.size() == expected);
    }
}

TEST_CASE("random_arrival_sequence is the unique sequence for all-periodic sets") {
    TaskSet ts;
    ts.tasks = {periodic_task(0, 10, 0, 1, 10), periodic_task(1, 7, 3, 2, 7)};
    Rng a(1), b(99);
    CHECK(random_arrival_sequence(ts, 50, a) == random_arrival_sequence(ts, 50, b));
}

TEST_CASE("random_arrival_sequence gap bounds over many seeds") {
    TaskSet ts;
    ts.tasks = {aperiodic_task(0, 5, 13, 2, 4)};
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        Rng rng(seed);
        const auto seq = random_arrival_sequence(ts, 23, rng);
        CHECK(validate_arrivals(ts, seq).empty());
        Tick prev = 0;
        for (Tick at : seq.arrivals[0]) {
            CHECK(at - prev >= 5);
            CHECK(at - prev <= 13);
            prev = at;
        }
    }
}

TEST_CASE("random_arrival_sequence is seed-deterministic") {
    Rng meta(5);
    const TaskSet ts = random_taskset(meta);
    Rng a(42), b(42);
    CHECK(random_arrival_sequence(ts, 100, a) == random_arrival_sequence(ts, 100, b));
}

TEST_CASE("triggered tasks never get autonomous arrivals") {
    TaskSet ts;
    ts.tasks = {periodic_task(0, 10, 0, 1, 10), periodic_task(1, 10, 0, 1, 10)};
    ts.tasks[1].triggered = true;
    ts.triggers = {{0, 1}};
    Rng rng(3);
    const auto seq = random_arrival_sequence(ts, 100, rng);
    CHECK(seq.arrivals[1].empty());
    CHECK(validate_arrivals(ts, seq).empty());
}

TEST_CASE("priority assignment permutation checks") {
    PriorityAssignment ok{{3, 1, 2}};
    CHECK(ok.is_permutation());
    CHECK_FALSE(PriorityAssignment{{1, 1, 3}}.is_permutation());
    CHECK_FALSE(PriorityAssignment{{0, 1, 2}}.is_permutation());
    Rng rng(7);
    for (int i = 0; i < 50; ++i) CHECK(random_priority_assignment(6, rng).is_permutation());
}
