#include "msum/set_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "msum/errors.hpp"

namespace msum {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::optional<Value> parse_value(std::string_view s) {
  Value v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace

IntSet read_set_text(std::istream& in) {
  std::vector<Value> elements;
  std::optional<Value> horizon;
  std::string raw;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& what) {
    throw InputError("line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (line.front() == '!') {
      constexpr std::string_view kHeader = "!horizon";
      if (line.substr(0, kHeader.size()) != kHeader) fail("unknown directive '" + std::string(line) + "'");
      if (horizon) fail("duplicate !horizon header");
      const auto v = parse_value(trim(line.substr(kHeader.size())));
      if (!v || *v < 1) fail("horizon must be a positive integer");
      horizon = *v;
      continue;
    }
    const auto v = parse_value(line);
    if (!v) fail("not an integer: '" + std::string(line) + "'");
    if (*v < 1) fail("element " + std::to_string(*v) + " is not positive");
    if (!elements.empty() && *v <= elements.back()) {
      fail("element " + std::to_string(*v) + " is not strictly ascending");
    }
    elements.push_back(*v);
  }
  if (elements.empty()) throw InputError("set file has no elements");
  if (horizon && *horizon < elements.back()) {
    throw InputError("horizon " + std::to_string(*horizon) + " is below element " +
                     std::to_string(elements.back()));
  }
  return IntSet(std::move(elements), horizon.value_or(0));
}

IntSet read_set_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return read_set_text(in);
}

void write_set_text(std::ostream& out, const IntSet& s) {
  out << "!horizon " << s.horizon() << '\n';
  for (Value e : s.elements()) out << e << '\n';
}

std::string format_set_text(const IntSet& s) {
  std::ostringstream os;
  write_set_text(os, s);
  return os.str();
}

std::vector<Value> parse_seed_list(const std::string& text) {
  std::vector<Value> out;
  std::string_view rest = text;
  while (true) {
    const auto comma = rest.find(',');
    const std::string_view item = trim(rest.substr(0, comma));
    const auto v = parse_value(item);
    if (!v) throw InputError("seed item '" + std::string(item) + "' is not an integer");
    if (*v < 1) throw InputError("seed item " + std::to_string(*v) + " is not positive");
    if (!out.empty() && *v <= out.back()) {
      throw InputError("seed must be strictly ascending at " + std::to_string(*v));
    }
    out.push_back(*v);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace msum
