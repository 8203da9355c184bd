#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "vass/words.hpp"

namespace vass {

struct HandleReductionError : std::runtime_error {
  explicit HandleReductionError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

// cancel adjacent s_i s_i^{-1} pairs in place
inline void free_reduce_letters(std::vector<std::int32_t>& v) {
  std::size_t w = 0;
  for (std::size_t r = 0; r < v.size(); ++r) {
    if (w > 0 && v[w - 1] == -v[r])
      --w;
    else
      v[w++] = v[r];
  }
  v.resize(w);
}

}  // namespace detail

// Decides triviality of a braid word by handle reduction.
//
// A handle is a subword s_i^e ... s_i^{-e} whose interior uses only indices
// above i; eliminating it rewrites each interior s_(i+1)^d as
// s_(i+1)^{-e} s_i^d s_(i+1)^e. The leftmost-closing handle never contains
// another one, which keeps the elimination order inside the terminating
// regime. A word with no handle left repeats its lowest index with one sign
// only, and such a word is trivial exactly when it is empty.
//
// Unlike the automorphism route this never leaves the word itself, so cost
// tracks the rewriting length rather than the size of free group images.
inline bool handle_reduction_trivial(const BraidWord& w) {
  std::vector<std::int32_t> v;
  v.reserve(w.size());
  for (const auto& l : w.letters()) {
    std::int32_t x = l.sign > 0 ? l.index : -l.index;
    if (!v.empty() && v.back() == -x)
      v.pop_back();
    else
      v.push_back(x);
  }

  const std::size_t step_cap = 4'000'000;
  const std::size_t length_cap = 2'000'000;
  std::size_t top = static_cast<std::size_t>(w.strands());
  std::vector<std::size_t> last(top + 1);
  std::vector<char> broken(top + 1);  // a lower index appeared since last[i]
  std::vector<std::int32_t> out;

  for (std::size_t steps = 0;; ++steps) {
    if (steps > step_cap) throw HandleReductionError("handle reduction exceeded its step budget");
    if (v.size() > length_cap)
      throw HandleReductionError("handle reduction exceeded its length budget");
    if (v.empty()) return true;

    // leftmost closing position of a handle: the previous occurrence of the
    // same index has the opposite sign and nothing below it intervenes
    last.assign(last.size(), 0);  // 0 = unseen, else position + 1
    broken.assign(broken.size(), 0);
    std::size_t p = 0, q = 0;
    bool found = false;
    for (std::size_t t = 0; t < v.size(); ++t) {
      std::size_t i = static_cast<std::size_t>(std::abs(v[t]));
      if (std::size_t seen = last[i]; seen != 0 && !broken[i] && v[seen - 1] == -v[t]) {
        p = seen - 1;
        q = t;
        found = true;
        break;
      }
      last[i] = t + 1;
      broken[i] = 0;
      for (std::size_t j = i + 1; j <= top; ++j) broken[j] = 1;
    }
    if (!found) return false;

    std::int32_t i = std::abs(v[p]);
    std::int32_t e = v[p] > 0 ? 1 : -1;
    out.clear();
    out.reserve(v.size() + 2 * (q - p));
    out.insert(out.end(), v.begin(), v.begin() + static_cast<std::ptrdiff_t>(p));
    for (std::size_t s = p + 1; s < q; ++s) {
      if (std::abs(v[s]) == i + 1) {
        out.push_back(-e * (i + 1));
        out.push_back(v[s] > 0 ? i : -i);
        out.push_back(e * (i + 1));
      } else {
        out.push_back(v[s]);
      }
    }
    out.insert(out.end(), v.begin() + static_cast<std::ptrdiff_t>(q) + 1, v.end());
    detail::free_reduce_letters(out);
    v.swap(out);
  }
}

}  // namespace vass
