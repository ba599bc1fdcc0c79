#include "dessins/passport.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dessins {

Passport::Passport(std::vector<int> black_parts, std::vector<int> white_parts)
    : black(std::move(black_parts)), white(std::move(white_parts)) {
  for (int part : black)
    if (part < 1) throw std::invalid_argument("partition parts must be positive");
  for (int part : white)
    if (part < 1) throw std::invalid_argument("partition parts must be positive");
  std::sort(black.rbegin(), black.rend());
  std::sort(white.rbegin(), white.rend());
  if (std::accumulate(black.begin(), black.end(), 0) !=
      std::accumulate(white.begin(), white.end(), 0))
    throw std::invalid_argument("black and white partitions must sum equally");
}

int Passport::edges() const {
  return std::accumulate(black.begin(), black.end(), 0);
}

namespace {

void print_partition(std::ostream& out, const std::vector<int>& parts) {
  bool first = true;
  size_t i = 0;
  while (i < parts.size()) {
    size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    if (!first) out << ',';
    first = false;
    out << parts[i];
    if (j - i > 1) out << '^' << (j - i);
    i = j;
  }
}

std::vector<int> parse_partition(const std::string& text) {
  std::vector<int> parts;
  size_t i = 0;
  auto read_int = [&]() {
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
      throw std::invalid_argument("expected integer in passport");
    int v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      v = v * 10 + (text[i++] - '0');
    return v;
  };
  while (i < text.size()) {
    while (i < text.size() && text[i] == ' ') ++i;
    if (i >= text.size()) break;
    int value = read_int();
    int count = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      count = read_int();
    }
    for (int k = 0; k < count; ++k) parts.push_back(value);
    while (i < text.size() && text[i] == ' ') ++i;
    if (i < text.size()) {
      if (text[i] != ',') throw std::invalid_argument("expected ',' in passport");
      ++i;
    }
  }
  return parts;
}

}  // namespace

std::string Passport::to_string() const {
  std::ostringstream out;
  out << '[';
  print_partition(out, black);
  out << ';';
  print_partition(out, white);
  out << ']';
  return out.str();
}

Passport Passport::parse(const std::string& text) {
  size_t open = text.find('[');
  size_t close = text.rfind(']');
  if (open == std::string::npos || close == std::string::npos || close <= open)
    throw std::invalid_argument("passport must be bracketed, e.g. [3^3,1^5;2^7]");
  std::string body = text.substr(open + 1, close - open - 1);
  size_t split = body.find(';');
  if (split == std::string::npos)
    throw std::invalid_argument("passport needs ';' between partitions");
  return Passport(parse_partition(body.substr(0, split)),
                  parse_partition(body.substr(split + 1)));
}

}  // namespace dessins
