#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace polyforge {

// A permutation of {0,...,n-1}, stored as its image list. Composition is
// left-to-right: (a * b)(x) = b(a(x)), so a word g1 g2 acts by g1 first.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::uint32_t degree);  // identity

  // Validates that `images` is a bijection.
  static Permutation from_images(std::vector<std::uint32_t> images);

  std::uint32_t degree() const {
    return static_cast<std::uint32_t>(images_.size());
  }
  std::uint32_t operator()(std::uint32_t x) const { return images_[x]; }
  const std::vector<std::uint32_t>& images() const { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  Permutation pow(std::uint64_t e) const;

  bool is_identity() const;
  std::uint64_t order() const;

  // -1 when this is the identity.
  std::int64_t smallest_moved_point() const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<std::uint32_t> images_;
};

inline Permutation commutator(const Permutation& a, const Permutation& b) {
  return a.inverse() * b.inverse() * a * b;
}

inline Permutation conjugate(const Permutation& h, const Permutation& g) {
  return g.inverse() * h * g;
}

// One-line image list, e.g. "p: 0 2 1 3".
std::string serialize_permutation(const Permutation& p);

}  // namespace polyforge
