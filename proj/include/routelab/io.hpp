#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace routelab {

// Shortest round-trip decimal form, '.' separator, locale independent.
std::string format_double(double x);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view content);

std::uint64_t fnv1a64(std::string_view s);
std::string hex64(std::uint64_t v);

inline std::string digest_of(std::string_view s) { return hex64(fnv1a64(s)); }

// Minimal CSV assembly. Data files must be byte-stable across reruns, so
// everything goes through format_double and is built in memory first.
class CsvBuilder {
  public:
    void comment(std::string_view text);
    void row(const std::vector<std::string>& fields);
    const std::string& str() const { return out_; }

  private:
    std::string out_;
};

// Reader side for our own files: '#' comment lines are skipped, fields
// have no embedded commas or quotes.
std::vector<std::string> split_csv_line(std::string_view line);
std::vector<std::vector<std::string>> read_csv(const std::string& path);

std::vector<std::string> split_lines(std::string_view text);

}  // namespace routelab
