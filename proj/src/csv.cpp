#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include "ptree/data.hpp"
#include "ptree/errors.hpp"

namespace ptree {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

TimeSeries read_csv(std::istream& in) {
  TimeSeries values;
  std::string line;
  std::size_t line_no = 0;
  bool seen_content = false;
  while (std::getline(in, line)) {
    ++line_no;
    auto text = trim(line);
    if (line_no == 1 && text.starts_with("\xEF\xBB\xBF")) text = trim(text.substr(3));
    if (text.empty() || text.front() == '#') continue;
    if (!seen_content) {
      seen_content = true;
      if (text == "value") continue;
    }
    double v = 0.0;
    const char* begin = text.data();
    if (*begin == '+') ++begin;
    const auto [ptr, ec] = std::from_chars(begin, text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(v))
      throw ParseError("line " + std::to_string(line_no) + ": cannot parse '" + std::string(text) + "' as a finite number",
                       line_no);
    values.push_back(v);
  }
  if (values.empty()) throw ContractError("CSV input contains no values");
  return values;
}

void write_csv(std::span<const double> series, std::ostream& out) {
  out << "value\n";
  char buf[32];
  for (double v : series) {
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    out.write(buf, ptr - buf);
    out.put('\n');
  }
}

TimeSeries load_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ContractError("cannot open " + path.string());
  return read_csv(in);
}

void save_csv(std::span<const double> series, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_csv(series, out);
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace ptree
