#ifndef DESSINS_PASSPORT_HPP
#define DESSINS_PASSPORT_HPP

#include <string>
#include <vector>

namespace dessins {

/// The pair of degree partitions [black; white] of a dessin, both sorted
/// descending.  Printed in the usual exponential notation, e.g.
/// "[3^3,1^5;2^7]".
struct Passport {
  std::vector<int> black;
  std::vector<int> white;

  Passport() = default;
  Passport(std::vector<int> black_parts, std::vector<int> white_parts);

  int edges() const;
  std::string to_string() const;
  static Passport parse(const std::string& text);

  bool operator==(const Passport& rhs) const {
    return black == rhs.black && white == rhs.white;
  }
  bool operator!=(const Passport& rhs) const { return !(*this == rhs); }
};

}  // namespace dessins

#endif
