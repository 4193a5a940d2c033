#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace polyforge {

// A word in the free group on a presentation's generators.
//
// Letters are signed: +(k+1) is generator k, -(k+1) its inverse. All groups
// in this toolkit are generated by involutions, for which signs are
// normalized away, but the representation stays general so words can be
// inverted and concatenated freely.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<int> letters) : letters_(std::move(letters)) {}

  static Word generator(int index) { return Word({index + 1}); }

  const std::vector<int>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  // 0-based generator index of a letter.
  static int letter_index(int letter) {
    return (letter > 0 ? letter : -letter) - 1;
  }
  static bool letter_inverted(int letter) { return letter < 0; }

  // Largest generator index referenced, or -1 for the empty word.
  int max_index() const;

  Word inverse() const;
  Word& append(const Word& other);
  Word pow(int exponent) const;  // negative exponents invert

  // a^-1 b^-1 a b
  static Word commutator(const Word& a, const Word& b);

  // Cancels adjacent (x, x^-1) pairs until none remain.
  void freely_reduce();

  // Rewrites g^-1 -> g for every generator flagged as an involution, then
  // freely reduces. Adjacent equal involution letters are left alone: they
  // are trivial in the group but the word stays a faithful spelling.
  void normalize(const std::vector<bool>& involution);

  bool operator==(const Word&) const = default;

 private:
  std::vector<int> letters_;
};

}  // namespace polyforge
