/*
 * Copyright 2026 The comod Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


// Independent reference implementations used as test oracles. None of them
// reuses the sorted-permutation code paths of the library.

#ifndef COMOD_TESTS_ORACLES_HPP
#define COMOD_TESTS_ORACLES_HPP

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include <comod/comod.hpp>

namespace oracle {

using comod::Rational;
using comod::SetFunction;
using comod::Subset;

inline std::uint32_t at_least(const std::vector<Rational>& x, const Rational& t) {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] >= t) mask |= std::uint32_t{1} << i;
  return mask;
}

/// Level-set form: min(x)·v(X) + Σ_j (l_{j+1} − l_j)·v({x ≥ l_{j+1}}) over the
/// distinct values l_1 < … < l_m of x.
inline Rational choquet(const SetFunction<Rational>& v, const std::vector<Rational>& x) {
  std::set<Rational> levels(x.begin(), x.end());
  std::vector<Rational> l(levels.begin(), levels.end());
  Rational total = l.front() * v.at(at_least(x, l.front()));
  for (std::size_t j = 0; j + 1 < l.size(); ++j) total += (l[j + 1] - l[j]) * v.at(at_least(x, l[j + 1]));
  return total;
}

/// a ∨ ⋁_t (t ∧ μ({x ≥ t})) over thresholds t drawn from x.
inline Rational sugeno(const SetFunction<Rational>& mu, const std::vector<Rational>& x) {
  Rational best = mu.codomain()->lo();
  for (const Rational& t : x) best = std::max(best, std::min(t, mu.at(at_least(x, t))));
  return best;
}

/// Comonotonic iff some permutation sorts both tuples.
inline bool comonotonic(const std::vector<Rational>& x, const std::vector<Rational>& y) {
  std::vector<std::size_t> perm(x.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  do {
    bool ok = true;
    for (std::size_t k = 1; k < perm.size() && ok; ++k)
      ok = x[perm[k - 1]] <= x[perm[k]] && y[perm[k - 1]] <= y[perm[k]];
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline Rational q(const char* text) { return Rational::parse(text); }

inline std::vector<Rational> tuple(std::initializer_list<const char*> items) {
  std::vector<Rational> out;
  for (auto* s : items) out.push_back(Rational::parse(s));
  return out;
}

}  // namespace oracle

#endif  // COMOD_TESTS_ORACLES_HPP
