#include "polyforge/coset_enumeration.hpp"

#include <deque>
#include <string>

#include "polyforge/errors.hpp"

namespace polyforge {

namespace {

constexpr std::int32_t kUndef = -1;

int col_of_letter(int letter) {
  return letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1;
}
int inv_col(int col) { return col ^ 1; }

class Enumerator {
 public:
  Enumerator(const Presentation& p, const std::vector<Word>& subgroup_gens,
             int max_cosets)
      : ncols_(2 * p.generator_count), max_cosets_(max_cosets) {
    if (max_cosets < 1)
      throw InvalidArgumentError("max_cosets must be at least 1");
    for (const Word& w : p.relators) relators_.push_back(columns_of(w));
    for (const Word& w : subgroup_gens) subgens_.push_back(columns_of(w));
  }

  CosetTable run(int generator_count) {
    new_coset();
    for (const auto& w : subgens_) scan(0, w);

    // Passes over all live cosets: trace every relator, then fill the row.
    // Coincidences can re-open entries of earlier rows, so repeat until a
    // pass changes nothing; a clean pass certifies the table is closed.
    while (true) {
      changed_ = false;
      for (int c = 0; c < defined_; ++c) {
        if (!alive(c)) continue;
        for (const auto& rel : relators_) {
          scan(c, rel);
          if (!alive(c)) break;
        }
        if (!alive(c)) continue;
        for (int col = 0; col < ncols_; ++col)
          if (entry(c, col) == kUndef) define(c, col);
      }
      if (!changed_) break;
    }
    return compress(generator_count);
  }

 private:
  std::vector<int> columns_of(const Word& w) {
    std::vector<int> cols;
    cols.reserve(w.size());
    for (int l : w.letters()) cols.push_back(col_of_letter(l));
    return cols;
  }

  std::int32_t& entry(int coset, int col) {
    return table_[static_cast<std::size_t>(coset) * ncols_ + col];
  }

  bool alive(int c) const { return parent_[static_cast<std::size_t>(c)] == c; }

  int rep(int c) {
    while (parent_[static_cast<std::size_t>(c)] != c) {
      parent_[static_cast<std::size_t>(c)] =
          parent_[parent_[static_cast<std::size_t>(c)]];
      c = parent_[static_cast<std::size_t>(c)];
    }
    return c;
  }

  int new_coset() {
    if (defined_ >= max_cosets_)
      throw ResourceLimitError(
          "coset enumeration exceeded " + std::to_string(max_cosets_) +
          " table rows (infinite index or max_cosets too small)");
    table_.resize(table_.size() + static_cast<std::size_t>(ncols_), kUndef);
    parent_.push_back(defined_);
    changed_ = true;
    return defined_++;
  }

  int define(int from, int col) {
    const int c = new_coset();
    entry(from, col) = c;
    entry(c, inv_col(col)) = from;
    return c;
  }

  void merge(int a, int b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
    queue_.push_back(b);
    changed_ = true;
  }

  void process_coincidences() {
    while (!queue_.empty()) {
      const int y = queue_.front();
      queue_.pop_front();
      for (int col = 0; col < ncols_; ++col) {
        const std::int32_t d = entry(y, col);
        if (d == kUndef) continue;
        entry(y, col) = kUndef;
        if (entry(d, inv_col(col)) == y) entry(d, inv_col(col)) = kUndef;
        const int mu = rep(y);
        const int nu = rep(d);
        if (const std::int32_t ex = entry(mu, col); ex != kUndef) {
          merge(nu, ex);
        } else if (const std::int32_t ex2 = entry(nu, inv_col(col));
                   ex2 != kUndef) {
          merge(mu, ex2);
        } else {
          entry(mu, col) = nu;
          entry(nu, inv_col(col)) = mu;
        }
      }
    }
  }

  // Traces `cols` from coset c, defining cosets to bridge interior gaps and
  // recording the deduction or coincidence that closes the cycle.
  void scan(int c, const std::vector<int>& cols) {
    int f = rep(c);
    int b = f;
    int i = 0;
    int j = static_cast<int>(cols.size()) - 1;
    while (true) {
      while (i <= j && entry(f, cols[static_cast<std::size_t>(i)]) != kUndef) {
        f = entry(f, cols[static_cast<std::size_t>(i)]);
        ++i;
      }
      if (i > j) {
        if (f != b) {
          merge(f, b);
          process_coincidences();
        }
        return;
      }
      while (j >= i &&
             entry(b, inv_col(cols[static_cast<std::size_t>(j)])) != kUndef) {
        b = entry(b, inv_col(cols[static_cast<std::size_t>(j)]));
        --j;
      }
      if (j < i) {
        merge(f, b);
        process_coincidences();
        return;
      }
      if (j == i) {
        entry(f, cols[static_cast<std::size_t>(i)]) = b;
        entry(b, inv_col(cols[static_cast<std::size_t>(i)])) = f;
        changed_ = true;
        return;
      }
      define(f, cols[static_cast<std::size_t>(i)]);
    }
  }

  CosetTable compress(int generator_count) {
    std::vector<std::int32_t> remap(static_cast<std::size_t>(defined_), -1);
    std::int32_t live = 0;
    for (int c = 0; c < defined_; ++c)
      if (alive(c)) remap[static_cast<std::size_t>(c)] = live++;
    std::vector<std::int32_t> rows(static_cast<std::size_t>(live) * ncols_,
                                   kUndef);
    for (int c = 0; c < defined_; ++c) {
      if (!alive(c)) continue;
      for (int col = 0; col < ncols_; ++col) {
        const std::int32_t t = entry(c, col);
        if (t == kUndef)
          throw ContractViolationError("coset table closed with a hole");
        rows[static_cast<std::size_t>(remap[static_cast<std::size_t>(c)]) *
                 ncols_ +
             col] = remap[static_cast<std::size_t>(rep(t))];
      }
    }
    return CosetTable(generator_count, live, std::move(rows));
  }

  int ncols_;
  int max_cosets_;
  std::vector<std::vector<int>> relators_;
  std::vector<std::vector<int>> subgens_;
  std::vector<std::int32_t> table_;
  std::vector<std::int32_t> parent_;
  std::deque<int> queue_;
  int defined_ = 0;
  bool changed_ = false;
};

}  // namespace

CosetTable::CosetTable(int generator_count, int coset_count,
                       std::vector<std::int32_t> rows)
    : generator_count_(generator_count),
      coset_count_(coset_count),
      rows_(std::move(rows)) {}

int CosetTable::apply(int coset, int letter) const {
  const int col = col_of_letter(letter);
  return rows_[static_cast<std::size_t>(coset) * (2 * generator_count_) + col];
}

int CosetTable::trace(int coset, const Word& w) const {
  for (int l : w.letters()) coset = apply(coset, l);
  return coset;
}

Permutation CosetTable::generator_action(int index) const {
  std::vector<std::uint32_t> images(static_cast<std::size_t>(coset_count_));
  for (int c = 0; c < coset_count_; ++c)
    images[static_cast<std::size_t>(c)] =
        static_cast<std::uint32_t>(apply(c, index + 1));
  return Permutation::from_images(std::move(images));
}

CosetTable coset_enumerate(const Presentation& p,
                           const std::vector<Word>& subgroup_gens,
                           int max_cosets) {
  p.check();
  std::vector<Word> normalized = subgroup_gens;
  const std::vector<bool> mask = p.involution_mask();
  for (Word& w : normalized) {
    if (w.max_index() >= p.generator_count)
      throw InvalidArgumentError("subgroup word references unknown generator");
    w.normalize(mask);
  }
  Enumerator e(p, normalized, max_cosets);
  return e.run(p.generator_count);
}

PermutationGroup regular_representation(const Presentation& p,
                                        int max_cosets) {
  const CosetTable table = coset_enumerate(p, {}, max_cosets);
  std::vector<Permutation> gens;
  gens.reserve(static_cast<std::size_t>(p.generator_count));
  for (int i = 0; i < p.generator_count; ++i)
    gens.push_back(table.generator_action(i));
  PermutationGroup g(static_cast<std::uint32_t>(table.coset_count()),
                     std::move(gens));
  if (g.order() != static_cast<std::uint64_t>(table.coset_count()))
    throw ContractViolationError(
        "regular representation order differs from coset count");
  return g;
}

}  // namespace polyforge
