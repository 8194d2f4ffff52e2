#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "dbb/record.hpp"

namespace dbb {

inline constexpr std::string_view kCsvHeader =
    "round,consensus_err,opt_err,ratio,grad_norm_avg,alpha_min,alpha_max,clamp_events,"
    "breach_events,bound_consensus,bound_ratio";

/// Shortest decimal that round-trips; "nan", "inf", "-inf" for non-finite values.
std::string format_double(double v);

/// Header plus one line per record, LF endings.
std::string render_csv(const std::vector<IterationRecord>& records);

/// Throws ConfigError on empty records and IoError when the file cannot be written.
void emit_csv(const std::vector<IterationRecord>& records, const std::filesystem::path& path);

void write_text(const std::filesystem::path& path, std::string_view text);

}  // namespace dbb
