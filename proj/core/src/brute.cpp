#include "ccc/brute.hpp"

#include <functional>
#include <stdexcept>

namespace ccc {
namespace brute {

namespace {

// Letters 0..m-1 collect type i, letters m..2m-1 drop type i.
struct Walker {
  int m;
  Rational w_collect, w_drop;
  std::vector<int> word;
  std::function<void(const std::vector<int>&, const Rational&)> visit;

  void run(int max_len) {
    Rational weight(1);
    descend(max_len, weight);
  }

  void descend(int remaining, const Rational& weight) {
    visit(word, weight);
    if (remaining == 0) return;
    for (int letter = 0; letter < 2 * m; ++letter) {
      word.push_back(letter);
      descend(remaining - 1, weight * (letter < m ? w_collect : w_drop));
      word.pop_back();
    }
  }
};

bool member_h(const std::vector<int>& word, int m) {
  for (int i = 0; i < m; ++i) {
    int last_c = -1, last_d = -1;
    for (size_t k = 0; k < word.size(); ++k) {
      if (word[k] == i) last_c = static_cast<int>(k);
      if (word[k] == m + i) last_d = static_cast<int>(k);
    }
    if (last_c < 0 || last_d > last_c) return false;
  }
  return true;
}

bool member_g(const std::vector<int>& word, int m) {
  for (int i = 0; i < m; ++i) {
    int last_c = -1, last_d = -1;
    for (size_t k = 0; k < word.size(); ++k) {
      if (word[k] == i) last_c = static_cast<int>(k);
      if (word[k] == m + i) last_d = static_cast<int>(k);
    }
    if (last_d >= 0 && last_c < last_d) return false;
  }
  return true;
}

bool member_j(const std::vector<int>& word, int m) {
  if (!member_h(word, m)) return false;
  std::vector<int> prefix;
  prefix.reserve(word.size());
  for (size_t k = 0; k + 1 < word.size(); ++k) {
    prefix.push_back(word[k]);
    if (member_h(prefix, m)) return false;
  }
  return true;
}

int threshold_ok(const PrimitiveLangSpec& spec, int count) {
  return spec.direction == ThresholdDirection::below ? count < spec.threshold
                                                     : count >= spec.threshold;
}

}  // namespace

HgjWeights enumerate_hgj(int m, const Rational& p, int max_len) {
  if (m < 1 || m > 3 || max_len < 0 || max_len > 8)
    throw std::invalid_argument("enumerate_hgj: intended for m <= 3, len <= 8");
  HgjWeights out;
  out.h.assign(static_cast<size_t>(max_len) + 1, Rational(0));
  out.g = out.h;
  out.j = out.h;
  Walker walker{m, (Rational(1) - p) / Rational(m), p / Rational(m), {}, {}};
  walker.visit = [&](const std::vector<int>& word, const Rational& weight) {
    const size_t len = word.size();
    if (member_h(word, m)) {
      out.h[len] += weight;
      if (member_j(word, m)) out.j[len] += weight;
    }
    if (member_g(word, m)) out.g[len] += weight;
  };
  walker.run(max_len);
  return out;
}

std::vector<Rational> enumerate_shuffle_egf(int m, const Rational& p,
                                            const PrimitiveLangSpec& a, int type_a,
                                            const PrimitiveLangSpec& b, int type_b,
                                            int max_len) {
  if (m < 1 || m > 3 || max_len < 0 || max_len > 8)
    throw std::invalid_argument("enumerate_shuffle_egf: intended for m <= 3, len <= 8");
  const int letter_a = (a.letter_class == LetterClass::collect ? 0 : m) + type_a;
  const int letter_b = (b.letter_class == LetterClass::collect ? 0 : m) + type_b;
  if (letter_a == letter_b)
    throw std::invalid_argument("enumerate_shuffle_egf: letters must be distinct");

  std::vector<Rational> weights(static_cast<size_t>(max_len) + 1, Rational(0));
  Walker walker{m, (Rational(1) - p) / Rational(m), p / Rational(m), {}, {}};
  walker.visit = [&](const std::vector<int>& word, const Rational& weight) {
    int na = 0, nb = 0;
    for (int letter : word) {
      if (letter == letter_a)
        ++na;
      else if (letter == letter_b)
        ++nb;
      else
        return;  // any other letter leaves the shuffled language
    }
    if (threshold_ok(a, na) && threshold_ok(b, nb)) weights[word.size()] += weight;
  };
  walker.run(max_len);

  Rational factorial(1);
  for (size_t n = 0; n < weights.size(); ++n) {
    if (n > 0) factorial *= Rational(static_cast<long>(n));
    weights[n] /= factorial;
  }
  return weights;
}

}  // namespace brute
}  // namespace ccc
