#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "antsort/core.hpp"
#include "antsort/io.hpp"

namespace antsort {

// One run's knobs. Everything that can change the output is in here or in
// the instance file, so a (file, config) pair pins the output bytes.
struct RunConfig {
    enum class Mode { plain, optimal };

    Mode mode = Mode::plain;
    std::string explicit_order;  // inline hidden order; wins over the file
    std::string order_file;      // hidden order read from a file
    std::uint64_t seed = 0;      // drives the sampled order and check trials
    bool validate = true;        // wrap backends in the contract checker
    bool transcript = false;     // include queue snapshots in sort output
    int bf_limit = kBruteForceLimit;
    std::string out_path;        // also write the report here
};

// The hidden order a run sorts against: the explicit one, the order file,
// or a seeded walk of the instance choosing uniformly among available
// elements at each step (hits every admissible order, though not with
// equal probability).
Word resolve_order(const Instance& inst, const RunConfig& cfg);

// Each command writes its report to `console` (and to cfg.out_path when
// set) and returns the process exit code: 0 clean, 1 failed verdict or a
// surfaced stall/contract error. Usage and parse problems throw.
int cmd_sort(const Instance& inst, const RunConfig& cfg, std::ostream& console);
int cmd_enumerate(const Instance& inst, const RunConfig& cfg, std::ostream& console);
int cmd_check(const Instance& inst, const RunConfig& cfg, std::ostream& console);
int cmd_layers(const Instance& inst, const RunConfig& cfg, std::ostream& console);
int cmd_dijkstra(const Instance& inst, const RunConfig& cfg, std::ostream& console);
int cmd_bench(const RunConfig& cfg, std::ostream& console);

}  // namespace antsort
