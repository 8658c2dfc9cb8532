#include "cli_support.hpp"

#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace trapzssq::cli {

namespace {

[[noreturn]] void bad(std::string_view what, std::string_view text) {
  throw Error(ErrorKind::InvalidConfig, std::string(what) + ": '" + std::string(text) + "'");
}

// strtod on a bounded copy; returns the number of characters consumed.
std::size_t read_double(const std::string& s, std::size_t pos, double& out) {
  const char* begin = s.c_str() + pos;
  char* end = nullptr;
  errno = 0;
  out = std::strtod(begin, &end);
  if (end == begin || errno == ERANGE || !std::isfinite(out)) return 0;
  return static_cast<std::size_t>(end - begin);
}

std::size_t parse_count(std::string_view part, std::string_view whole) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
  if (ec != std::errc() || ptr != part.data() + part.size()) bad("invalid node count", whole);
  return v;
}

}  // namespace

cplx parse_complex(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (c != ' ') s.push_back(c);
  }
  if (s.empty()) bad("empty complex number", text);

  if (const auto comma = s.find(','); comma != std::string::npos) {
    double re = 0, im = 0;
    const std::string a = s.substr(0, comma), b = s.substr(comma + 1);
    if (a.empty() || b.empty() || read_double(a, 0, re) != a.size() || read_double(b, 0, im) != b.size()) {
      bad("invalid complex number", text);
    }
    return {re, im};
  }

  if (s == "i" || s == "+i") return {0.0, 1.0};
  if (s == "-i") return {0.0, -1.0};

  double first = 0;
  const std::size_t n1 = read_double(s, 0, first);
  if (n1 == 0) bad("invalid complex number", text);
  if (n1 == s.size()) return {first, 0.0};
  if (s[n1] == 'i' && n1 + 1 == s.size()) return {0.0, first};

  if (s[n1] != '+' && s[n1] != '-') bad("invalid complex number", text);
  if (s.back() != 'i') bad("invalid complex number", text);
  const std::string rest = s.substr(n1, s.size() - n1 - 1);
  double second = 0;
  if (rest == "+" || rest == "-") {
    second = rest == "+" ? 1.0 : -1.0;
  } else if (read_double(rest, 0, second) != rest.size()) {
    bad("invalid complex number", text);
  }
  return {first, second};
}

std::vector<std::size_t> parse_n_values(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto colon = text.find(':', start);
    parts.push_back(text.substr(start, colon == std::string_view::npos ? std::string_view::npos : colon - start));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  std::vector<std::size_t> out;
  if (parts.size() == 1) {
    out.push_back(parse_count(parts[0], text));
  } else if (parts.size() == 3) {
    const std::size_t first = parse_count(parts[0], text);
    const std::size_t step = parse_count(parts[1], text);
    const std::size_t last = parse_count(parts[2], text);
    if (step == 0 || last < first) bad("empty node range", text);
    for (std::size_t n = first; n <= last; n += step) out.push_back(n);
  } else {
    bad("node counts must be N or start:step:stop", text);
  }
  for (std::size_t n : out) {
    if (n < 3) bad("node counts must be >= 3", text);
  }
  return out;
}

std::string format_real(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Assembly:
    case ErrorKind::Solver:
    case ErrorKind::ContractViolation:
      return kExitNumericalFailure;
    default:
      return kExitInvalidConfig;
  }
}

}  // namespace trapzssq::cli
