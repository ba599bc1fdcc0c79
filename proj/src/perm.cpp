#include "dessins/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dessins {

Permutation::Permutation(int degree) {
  if (degree < 0) throw std::invalid_argument("permutation degree must be >= 0");
  images_.resize(degree);
  std::iota(images_.begin(), images_.end(), 1);
}

Permutation Permutation::from_images(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  std::vector<char> seen(n, 0);
  for (int v : images) {
    if (v < 1 || v > n) throw std::invalid_argument("image out of range 1..n");
    if (seen[v - 1]) throw std::invalid_argument("images are not a bijection");
    seen[v - 1] = 1;
  }
  Permutation p(0);
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::from_cycles(const std::vector<std::vector<int>>& cycles,
                                     int degree) {
  Permutation p(degree);
  std::vector<char> used(degree, 0);
  for (const auto& cycle : cycles) {
    for (int v : cycle) {
      if (v < 1 || v > degree)
        throw std::invalid_argument("cycle point out of range 1..n");
      if (used[v - 1]) throw std::invalid_argument("duplicate point in cycles");
      used[v - 1] = 1;
    }
    for (size_t i = 0; i < cycle.size(); ++i)
      p.images_[cycle[i] - 1] = cycle[(i + 1) % cycle.size()];
  }
  return p;
}

Permutation Permutation::parse_cycles(const std::string& text, int degree) {
  std::vector<std::vector<int>> cycles;
  std::vector<int> current;
  bool in_cycle = false;
  size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  skip_ws();
  while (i < text.size()) {
    char c = text[i];
    if (c == '(') {
      if (in_cycle) throw std::invalid_argument("nested '(' in cycle notation");
      in_cycle = true;
      current.clear();
      ++i;
    } else if (c == ')') {
      if (!in_cycle) throw std::invalid_argument("unmatched ')' in cycle notation");
      if (!current.empty()) cycles.push_back(current);
      in_cycle = false;
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      if (!in_cycle) throw std::invalid_argument("point outside cycle parentheses");
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        v = v * 10 + (text[i++] - '0');
      current.push_back(v);
    } else if (c == ',' || c == ' ') {
      ++i;
    } else {
      throw std::invalid_argument(std::string("unexpected character '") + c +
                                  "' in cycle notation");
    }
    skip_ws();
  }
  if (in_cycle) throw std::invalid_argument("unterminated cycle");
  return from_cycles(cycles, degree);
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i + 1) return false;
  return true;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree() != rhs.degree())
    throw std::invalid_argument("degree mismatch in permutation product");
  Permutation result(0);
  result.images_.resize(images_.size());
  for (size_t i = 0; i < images_.size(); ++i)
    result.images_[i] = rhs.images_[images_[i] - 1];
  return result;
}

Permutation Permutation::inverse() const {
  Permutation result(0);
  result.images_.resize(images_.size());
  for (size_t i = 0; i < images_.size(); ++i)
    result.images_[images_[i] - 1] = static_cast<int>(i) + 1;
  return result;
}

Permutation Permutation::conjugate(const Permutation& by) const {
  if (degree() != by.degree())
    throw std::invalid_argument("degree mismatch in conjugation");
  return by.inverse() * (*this) * by;
}

Permutation Permutation::power(long long k) const {
  Permutation base = *this;
  if (k < 0) {
    base = inverse();
    k = -k;
  }
  Permutation acc(degree());
  while (k > 0) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

std::vector<std::vector<int>> Permutation::cycles(bool include_fixed) const {
  std::vector<std::vector<int>> result;
  std::vector<char> seen(degree(), 0);
  for (int start = 1; start <= degree(); ++start) {
    if (seen[start - 1]) continue;
    std::vector<int> cycle;
    int cur = start;
    do {
      seen[cur - 1] = 1;
      cycle.push_back(cur);
      cur = images_[cur - 1];
    } while (cur != start);
    if (cycle.size() > 1 || include_fixed) result.push_back(std::move(cycle));
  }
  return result;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> lengths;
  for (const auto& c : cycles(true)) lengths.push_back(static_cast<int>(c.size()));
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

int Permutation::num_cycles() const {
  return static_cast<int>(cycles(true).size());
}

int Permutation::sign() const {
  return ((degree() - num_cycles()) % 2 == 0) ? 1 : -1;
}

long long Permutation::order() const {
  long long result = 1;
  for (int len : cycle_type()) result = std::lcm(result, static_cast<long long>(len));
  return result;
}

std::string Permutation::to_cycle_string() const {
  auto cs = cycles(false);
  if (cs.empty()) return "()";
  std::ostringstream out;
  for (const auto& c : cs) {
    out << '(';
    for (size_t i = 0; i < c.size(); ++i) {
      if (i) out << ',';
      out << c[i];
    }
    out << ')';
  }
  return out.str();
}

}  // namespace dessins
