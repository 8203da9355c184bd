#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "vass/handle_reduction.hpp"
#include "vass/words.hpp"

namespace vass {

// Reduced word in a free group: +g is the generator x_g, -g its inverse (1-based).
using FreeWord = std::vector<std::int32_t>;

inline void append_reduced(FreeWord& w, std::int32_t letter) {
  if (!w.empty() && w.back() == -letter)
    w.pop_back();
  else
    w.push_back(letter);
}

inline FreeWord free_reduce(const FreeWord& w) {
  FreeWord r;
  r.reserve(w.size());
  for (auto l : w) append_reduced(r, l);
  return r;
}

inline FreeWord free_inverse(const FreeWord& w) {
  FreeWord r;
  r.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(-*it);
  return r;
}

inline std::string free_word_str(const FreeWord& w) {
  std::ostringstream os;
  for (auto l : w) os << (l > 0 ? " x" : " x") << (l > 0 ? l : -l) << (l > 0 ? "" : "^-1");
  return os.str();
}

// Automorphism of the free group on x1..xn, stored by generator images (reduced words).
// Composition reads left to right: a.then(b) applies a first.
class FreeAutomorphism {
 public:
  static FreeAutomorphism identity(int n) {
    FreeAutomorphism f;
    f.images_.resize(static_cast<std::size_t>(n));
    for (int g = 1; g <= n; ++g) f.images_[static_cast<std::size_t>(g - 1)] = {g};
    return f;
  }

  int rank() const { return static_cast<int>(images_.size()); }

  const FreeWord& image(int g) const { return images_.at(static_cast<std::size_t>(g - 1)); }

  FreeWord apply(const FreeWord& w) const {
    FreeWord out;
    out.reserve(w.size() * 2);
    for (auto l : w) {
      const FreeWord& img = image(l > 0 ? l : -l);
      if (l > 0)
        for (auto x : img) append_reduced(out, x);
      else
        for (auto it = img.rbegin(); it != img.rend(); ++it) append_reduced(out, -*it);
    }
    return out;
  }

  FreeAutomorphism then(const FreeAutomorphism& b) const {
    if (b.rank() != rank()) throw std::invalid_argument("automorphism rank mismatch");
    FreeAutomorphism r;
    r.images_.resize(images_.size());
    for (std::size_t g = 0; g < images_.size(); ++g) r.images_[g] = b.apply(images_[g]);
    return r;
  }

  // fast path: post-compose with the rule of a single crossing
  void compose_sigma(int i, int sign) {
    for (auto& img : images_) img = apply_sigma(img, i, sign);
  }

  bool is_identity() const {
    for (std::size_t g = 0; g < images_.size(); ++g)
      if (images_[g].size() != 1 || images_[g][0] != static_cast<std::int32_t>(g + 1)) return false;
    return true;
  }

  // every generator image of a braid automorphism is a conjugate W x_j W^{-1}
  bool images_are_conjugates() const {
    for (std::size_t g = 0; g < images_.size(); ++g) {
      const FreeWord& w = images_[g];
      if (w.size() % 2 == 0) return false;
      std::size_t t = w.size() / 2;
      if (w[t] <= 0) return false;
      for (std::size_t s = 0; s < t; ++s)
        if (w[s] != -w[w.size() - 1 - s]) return false;
    }
    return true;
  }

  std::size_t total_image_length() const {
    std::size_t s = 0;
    for (const auto& img : images_) s += img.size();
    return s;
  }

  friend bool operator==(const FreeAutomorphism&, const FreeAutomorphism&) = default;

 private:
  // image of a word under the rule of s_i^{sign}
  static FreeWord apply_sigma(const FreeWord& w, int i, int sign) {
    FreeWord out;
    out.reserve(w.size() + 8);
    for (auto l : w) {
      int g = l > 0 ? l : -l;
      if (sign > 0) {
        // x_i -> x_i x_{i+1} x_i^{-1}, x_{i+1} -> x_i
        if (g == i) {
          if (l > 0) {
            append_reduced(out, i);
            append_reduced(out, i + 1);
            append_reduced(out, -i);
          } else {
            append_reduced(out, i);
            append_reduced(out, -(i + 1));
            append_reduced(out, -i);
          }
        } else if (g == i + 1) {
          append_reduced(out, l > 0 ? i : -i);
        } else {
          append_reduced(out, l);
        }
      } else {
        // x_i -> x_{i+1}, x_{i+1} -> x_{i+1}^{-1} x_i x_{i+1}
        if (g == i) {
          append_reduced(out, l > 0 ? i + 1 : -(i + 1));
        } else if (g == i + 1) {
          if (l > 0) {
            append_reduced(out, -(i + 1));
            append_reduced(out, i);
            append_reduced(out, i + 1);
          } else {
            append_reduced(out, -(i + 1));
            append_reduced(out, -i);
            append_reduced(out, i + 1);
          }
        } else {
          append_reduced(out, l);
        }
      }
    }
    return out;
  }

  std::vector<FreeWord> images_;
};

inline FreeAutomorphism artin_automorphism(const BraidWord& w) {
  FreeAutomorphism f = FreeAutomorphism::identity(w.strands());
  for (const auto& l : w.letters()) f.compose_sigma(l.index, l.sign);
  if (!f.images_are_conjugates())
    throw std::logic_error("braid automorphism images lost conjugate shape");
  return f;
}

// exact equality of disc braids: compare permutations, then reduce the
// quotient word; handle reduction stays affordable on words far beyond what
// the free group action can absorb
inline bool braid_words_equal(const BraidWord& u, const BraidWord& v) {
  if (u.strands() != v.strands()) return false;
  if (!(permutation_of(u) == permutation_of(v))) return false;
  return handle_reduction_trivial((u * v.inverse()).reduced());
}

}  // namespace vass
