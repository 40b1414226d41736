#include "envelope/graded.hpp"

#include <algorithm>
#include <numeric>

#include "envelope/error.hpp"

namespace envelope {

GradedBasis::GradedBasis(std::vector<BasisElement> elements) : elements_(std::move(elements)) {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (!index_.emplace(elements_[i].name, static_cast<int>(i)).second)
      throw Error(ErrorCode::MalformedPresentation, "duplicate basis name '" + elements_[i].name + "'");
  }
}

int GradedBasis::index_of(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? -1 : it->second;
}

std::vector<int> GradedBasis::degrees(int shift) const {
  std::vector<int> d;
  d.reserve(elements_.size());
  for (const auto& e : elements_) d.push_back(e.degree - shift);
  return d;
}

int word_degree(const Word& w) {
  int d = 0;
  for (int l : w.letters) d += w.basis->degree(static_cast<std::size_t>(l)) - w.shift;
  return d;
}

bool is_permutation(const Permutation& sigma) {
  std::vector<bool> seen(sigma.size(), false);
  for (int s : sigma) {
    if (s < 0 || static_cast<std::size_t>(s) >= sigma.size() || seen[static_cast<std::size_t>(s)]) return false;
    seen[static_cast<std::size_t>(s)] = true;
  }
  return true;
}

Permutation inverse(const Permutation& sigma) {
  if (!is_permutation(sigma)) throw Error(ErrorCode::NotAPermutation, "not a permutation");
  Permutation inv(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) inv[static_cast<std::size_t>(sigma[i])] = static_cast<int>(i);
  return inv;
}

Permutation compose(const Permutation& sigma, const Permutation& tau) {
  if (sigma.size() != tau.size() || !is_permutation(sigma) || !is_permutation(tau))
    throw Error(ErrorCode::NotAPermutation, "cannot compose");
  Permutation out(sigma.size());
  for (std::size_t i = 0; i < tau.size(); ++i) out[i] = sigma[static_cast<std::size_t>(tau[i])];
  return out;
}

int koszul_sign(const std::vector<int>& degrees, const Permutation& sigma) {
  if (degrees.size() != sigma.size()) throw Error(ErrorCode::NotAPermutation, "degree list and permutation differ in size");
  if (!is_permutation(sigma)) throw Error(ErrorCode::NotAPermutation, "not a permutation");
  // Bubble the target arrangement back to the identity by adjacent swaps.
  std::vector<int> cur(sigma.begin(), sigma.end());
  int sign = 1;
  for (std::size_t pass = 0; pass < cur.size(); ++pass) {
    bool swapped = false;
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      if (cur[i] > cur[i + 1]) {
        if (is_odd(degrees[static_cast<std::size_t>(cur[i])]) && is_odd(degrees[static_cast<std::size_t>(cur[i + 1])]))
          sign = -sign;
        std::swap(cur[i], cur[i + 1]);
        swapped = true;
      }
    }
    if (!swapped) break;
  }
  return sign;
}

std::vector<Permutation> enumerate_shuffles(int p, int q) {
  std::vector<Permutation> out;
  const int n = p + q;
  if (p < 0 || q < 0) return out;
  std::vector<bool> mask(static_cast<std::size_t>(n), false);
  std::fill(mask.begin(), mask.begin() + p, true);
  // prev_permutation on a sorted-descending mask enumerates subsets in lexicographic order.
  do {
    Permutation sigma(static_cast<std::size_t>(n));
    int a = 0, b = p;
    for (int pos = 0; pos < n; ++pos) {
      if (mask[static_cast<std::size_t>(pos)])
        sigma[static_cast<std::size_t>(a++)] = pos;
      else
        sigma[static_cast<std::size_t>(b++)] = pos;
    }
    out.push_back(std::move(sigma));
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return out;
}

int sort_graded(Letters& letters, const std::vector<int>& degree_of) {
  int sign = 1;
  // Insertion sort: every swap is adjacent, so the sign follows the transposition rule.
  for (std::size_t i = 1; i < letters.size(); ++i) {
    for (std::size_t j = i; j > 0 && letters[j - 1] > letters[j]; --j) {
      if (is_odd(degree_of[static_cast<std::size_t>(letters[j - 1])]) &&
          is_odd(degree_of[static_cast<std::size_t>(letters[j])]))
        sign = -sign;
      std::swap(letters[j - 1], letters[j]);
    }
  }
  for (std::size_t i = 0; i + 1 < letters.size(); ++i)
    if (letters[i] == letters[i + 1] && is_odd(degree_of[static_cast<std::size_t>(letters[i])])) return 0;
  return sign;
}

}  // namespace envelope
