#pragma once

#include <map>
#include <string>
#include <vector>

#include "envelope/linalg.hpp"

namespace envelope {

struct BasisElement {
  std::string name;
  int degree = 0;
};

class GradedBasis {
 public:
  GradedBasis() = default;
  explicit GradedBasis(std::vector<BasisElement> elements);

  std::size_t size() const { return elements_.size(); }
  const BasisElement& operator[](std::size_t i) const { return elements_.at(i); }
  const std::vector<BasisElement>& elements() const { return elements_; }
  int degree(std::size_t i) const { return elements_.at(i).degree; }
  const std::string& name(std::size_t i) const { return elements_.at(i).name; }
  // -1 when absent.
  int index_of(const std::string& name) const;
  // Degrees in the shifted space V[shift]: |a| - shift.
  std::vector<int> degrees(int shift = 0) const;

 private:
  std::vector<BasisElement> elements_;
  std::map<std::string, int> index_;
};

using Letters = std::vector<int>;

struct Word {
  const GradedBasis* basis = nullptr;
  Letters letters;
  int shift = 0;
};

// images[i] = sigma(i), 0-based.
using Permutation = std::vector<int>;

int word_degree(const Word& w);

bool is_permutation(const Permutation& sigma);
Permutation inverse(const Permutation& sigma);
// (sigma o tau)(i) = sigma(tau(i))
Permutation compose(const Permutation& sigma, const Permutation& tau);

// Sign picked up when x_0 ... x_{n-1} is rearranged into x_{sigma(0)} ... x_{sigma(n-1)},
// each adjacent swap of letters of degrees d, d' contributing (-1)^{d d'}.
int koszul_sign(const std::vector<int>& degrees, const Permutation& sigma);

// All sigma with sigma(0)<...<sigma(p-1) and sigma(p)<...<sigma(p+q-1); sigma sends a
// letter to its position in the shuffled word.
std::vector<Permutation> enumerate_shuffles(int p, int q);

inline int sign_of(long exponent) { return (exponent % 2 == 0) ? 1 : -1; }
inline bool is_odd(long x) { return x % 2 != 0; }

// Linear combinations keyed by basis objects.
template <class Key>
using Chain = std::map<Key, Scalar>;

template <class Key>
void accumulate(Chain<Key>& chain, const Key& key, const Scalar& c) {
  if (c == 0) return;
  auto it = chain.find(key);
  if (it == chain.end()) {
    chain.emplace(key, c);
  } else {
    it->second += c;
    if (it->second == 0) chain.erase(it);
  }
}

template <class Key>
void accumulate(Chain<Key>& chain, const Chain<Key>& other, const Scalar& c = 1) {
  for (const auto& [k, v] : other) accumulate(chain, k, v * c);
}

using WordChain = Chain<Letters>;
using LetterChain = Chain<int>;

// Graded-symmetric normal form: sorts letters (ascending index) and returns the
// Koszul sign for the given degrees; sign 0 when an odd letter repeats.
int sort_graded(Letters& letters, const std::vector<int>& degree_of);

}  // namespace envelope
