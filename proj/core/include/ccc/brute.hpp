#pragma once

#include <vector>

#include "ccc/langgf.hpp"
#include "ccc/rational.hpp"

namespace ccc {

/// Exhaustive small-alphabet enumeration used to cross-validate the
/// generating-function machinery. Word counts grow as (2m)^len, so keep
/// m <= 3 and len <= 8.
namespace brute {

/// Total letter-probability weight, per word length, of the three key
/// languages over the 2m-letter alphabet:
///   h: every type collected and still standing at the end;
///   g: every dropped type later recovered;
///   j: words of h with no proper prefix in h (first completion at the end).
struct HgjWeights {
  std::vector<Rational> h, g, j;  // index = word length
};
HgjWeights enumerate_hgj(int m, const Rational& p, int max_len);

/// EGF coefficients (weight / len!) of the shuffle of two single-letter
/// repetition languages on distinct letters: letter a is (class_a, type_a),
/// letter b likewise, with thresholds from the specs.
std::vector<Rational> enumerate_shuffle_egf(int m, const Rational& p,
                                            const PrimitiveLangSpec& a, int type_a,
                                            const PrimitiveLangSpec& b, int type_b,
                                            int max_len);

}  // namespace brute
}  // namespace ccc
