#include "polyforge/word.hpp"

#include <algorithm>
#include <cstdlib>

namespace polyforge {

int Word::max_index() const {
  int m = -1;
  for (int l : letters_) m = std::max(m, letter_index(l));
  return m;
}

Word Word::inverse() const {
  std::vector<int> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.push_back(-*it);
  return Word(std::move(out));
}

Word& Word::append(const Word& other) {
  letters_.insert(letters_.end(), other.letters_.begin(),
                  other.letters_.end());
  return *this;
}

Word Word::pow(int exponent) const {
  const Word base = exponent >= 0 ? *this : inverse();
  const int reps = std::abs(exponent);
  Word out;
  out.letters_.reserve(letters_.size() * static_cast<std::size_t>(reps));
  for (int i = 0; i < reps; ++i) out.append(base);
  return out;
}

Word Word::commutator(const Word& a, const Word& b) {
  Word out = a.inverse();
  out.append(b.inverse());
  out.append(a);
  out.append(b);
  return out;
}

void Word::freely_reduce() {
  std::vector<int> out;
  out.reserve(letters_.size());
  for (int l : letters_) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  letters_ = std::move(out);
}

void Word::normalize(const std::vector<bool>& involution) {
  for (int& l : letters_) {
    const int idx = letter_index(l);
    if (l < 0 && idx < static_cast<int>(involution.size()) && involution[idx])
      l = -l;
  }
  freely_reduce();
}

}  // namespace polyforge
