#include "affine321/text_format.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "affine321/errors.hpp"

namespace affine321 {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

template <typename T>
T parse_number(std::string_view token, std::string_view what) {
  token = trim(token);
  // from_chars rejects a leading '+', accept it for convenience.
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  T value{};
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (token.empty() || ec != std::errc{} || ptr != end) {
    throw InvalidArgument("malformed " + std::string(what) + " entry '" + std::string(token) +
                          "'");
  }
  return value;
}

template <typename Range, typename Fn>
std::string join(const Range& items, std::string_view sep, Fn&& fn) {
  std::ostringstream os;
  bool first = true;
  for (const auto& item : items) {
    if (!first) os << sep;
    os << fn(item);
    first = false;
  }
  return os.str();
}

}  // namespace

std::vector<Int> parse_integer_list(std::string_view text) {
  text = trim(text);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    throw InvalidArgument("window must be written as [v1,...,vn]");
  }
  text = trim(text.substr(1, text.size() - 2));
  std::vector<Int> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    out.push_back(parse_number<Int>(text.substr(start, comma - start), "window"));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

AffinePermutation parse_window(std::string_view text) {
  return AffinePermutation::from_window(parse_integer_list(text));
}

CoxeterWord parse_word(int n, std::string_view text) {
  text = trim(text);
  std::vector<int> letters;
  if (!text.empty()) {
    std::size_t start = 0;
    while (true) {
      const std::size_t dot = text.find('.', start);
      letters.push_back(parse_number<int>(text.substr(start, dot - start), "word"));
      if (dot == std::string_view::npos) break;
      start = dot + 1;
    }
  }
  return CoxeterWord(n, std::move(letters));
}

std::string format_window(std::span<const Int> window) {
  return "[" + join(window, ",", [](Int v) { return v; }) + "]";
}

std::string format_window(const AffinePermutation& w) { return format_window(w.window()); }

std::string format_word(const CoxeterWord& word) {
  return join(word.letters(), ".", [](int s) { return s; });
}

std::string format_root(const Root& r) {
  return "(" + join(r.coeffs(), ",", [](Int v) { return v; }) + ")";
}

std::string format_partition(const Partition& p) { return "(" + serialize_partition(p) + ")"; }

std::string serialize_partition(const Partition& p) {
  return join(p.parts(), ",", [](int v) { return v; });
}

std::string format_triple(const Triple& t) {
  std::ostringstream os;
  os << "(" << t.a << "," << t.b << "," << t.c << ")";
  return os.str();
}

std::string format_extended(const ExtendedAffinePermutation& w) {
  std::ostringstream os;
  os << "ρ^" << w.shift() << " · " << format_window(w.body());
  return os.str();
}

}  // namespace affine321
