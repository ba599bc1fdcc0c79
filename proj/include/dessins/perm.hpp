#ifndef DESSINS_PERM_HPP
#define DESSINS_PERM_HPP

#include <string>
#include <vector>

namespace dessins {

/// A permutation of {1..n}. Immutable after construction.
///
/// Products are evaluated left to right: (p * q)(x) = q(p(x)). This is the
/// convention used by most group-theory systems but not by most textbooks,
/// so it is worth keeping in mind when transcribing formulas.
class Permutation {
 public:
  /// Identity on {1..degree}.  degree >= 0.
  explicit Permutation(int degree);

  /// images[i-1] is the image of point i (1-indexed values in 1..n).
  static Permutation from_images(std::vector<int> images);

  /// Build from disjoint cycles; points absent from every cycle are fixed.
  /// Throws std::invalid_argument on repeated or out-of-range points.
  static Permutation from_cycles(const std::vector<std::vector<int>>& cycles,
                                 int degree);

  /// Parse cycle notation, e.g. "(1,3,2)(4,7,5)". "()" is the identity.
  /// Singleton cycles like "(7)" are accepted (and fix the point).
  static Permutation parse_cycles(const std::string& text, int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[point - 1]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;

  /// Left-to-right product; throws on degree mismatch.
  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  /// by^{-1} * p * by, left to right.
  Permutation conjugate(const Permutation& by) const;
  Permutation power(long long k) const;

  /// Cycles sorted by smallest element; fixed points included only on request.
  std::vector<std::vector<int>> cycles(bool include_fixed = false) const;
  /// Cycle lengths, fixed points included, sorted descending.
  std::vector<int> cycle_type() const;
  int num_cycles() const;  // including fixed points
  int sign() const;        // (-1)^(n - #cycles)
  long long order() const; // lcm of cycle lengths

  std::string to_cycle_string() const;

  bool operator==(const Permutation& rhs) const { return images_ == rhs.images_; }
  bool operator!=(const Permutation& rhs) const { return images_ != rhs.images_; }
  bool operator<(const Permutation& rhs) const { return images_ < rhs.images_; }

 private:
  std::vector<int> images_;
};

}  // namespace dessins

#endif
