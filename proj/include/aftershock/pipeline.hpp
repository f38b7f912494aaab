#ifndef AFTERSHOCK_PIPELINE_HPP
#define AFTERSHOCK_PIPELINE_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "aftershock/series.hpp"
#include "aftershock/simulate.hpp"

namespace aftershock {

enum class InputFormat { minute_bars, event_quotes };
enum class Aggregation { daily, minutely };
enum class SimKind { omori_events, planted_series };

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitDegenerate = 3;

// All pipeline parameters, with the defaults the analysis methodology
// prescribes. Parsed from `key = value` config files; unset keys keep
// their defaults.
struct PipelineConfig {
    std::string input;
    InputFormat format = InputFormat::minute_bars;
    Aggregation aggregation = Aggregation::daily;
    bool exclude_overnight = true;
    SigmaKind sigma_kind = SigmaKind::stddev;
    std::size_t top_k = 7;
    int min_gap = 30;
    int search_window = 60;
    std::vector<double> thresholds;  // sigma multiples; empty -> aggregation default
    std::string output_dir = ".";
    std::uint64_t seed = 42;

    // simulate subcommand
    SimKind sim_kind = SimKind::planted_series;
    SimSpec sim;
    PlantedSeriesSpec planted;

    std::vector<double> effective_thresholds() const;

    static PipelineConfig from_file(const std::string& path);
    static PipelineConfig from_text(std::string_view text);
    void set_key(const std::string& key, const std::string& value);  // throws on unknown key
    std::string serialize() const;
};

// Environment variable consulted for the default output directory.
inline constexpr const char* kOutputDirEnv = "AFTERSHOCK_OUTPUT_DIR";

int run_validate(const PipelineConfig& config, std::ostream& log);
int run_analyze(const PipelineConfig& config, std::ostream& log);
int run_simulate(const PipelineConfig& config, std::ostream& log);

}  // namespace aftershock

#endif
