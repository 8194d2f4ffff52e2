#include "dbb/csv.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>

#include "dbb/error.hpp"

namespace dbb {

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    std::array<char, 32> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

std::string render_csv(const std::vector<IterationRecord>& records) {
    std::string out(kCsvHeader);
    out += '\n';
    for (const auto& r : records) {
        out += std::to_string(r.round);
        for (double v : {r.consensus_err, r.opt_err, r.ratio, r.grad_norm_avg, r.alpha_min, r.alpha_max}) {
            out += ',';
            out += format_double(v);
        }
        out += ',' + std::to_string(r.clamp_events);
        out += ',' + std::to_string(r.breach_events);
        out += ',' + format_double(r.bound_consensus);
        out += ',' + format_double(r.bound_ratio);
        out += '\n';
    }
    return out;
}

void write_text(const std::filesystem::path& path, std::string_view text) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot open " + path.string() + " for writing");
    f.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!f) throw IoError("failed writing " + path.string());
}

void emit_csv(const std::vector<IterationRecord>& records, const std::filesystem::path& path) {
    if (records.empty()) throw ConfigError("no records to write");
    write_text(path, render_csv(records));
}

}  // namespace dbb
