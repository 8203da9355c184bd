#pragma once

#include <compare>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace vass {

// Permutation of {1..n}. Products compose left to right: (p.then(q))(k) = q(p(k)).
class Permutation {
 public:
  explicit Permutation(int n) : img_(static_cast<std::size_t>(check_n(n))) {
    std::iota(img_.begin(), img_.end(), 1);
  }

  static Permutation from_images(std::vector<int> images) {
    Permutation p(static_cast<int>(images.size()));
    std::vector<char> seen(images.size(), 0);
    for (int v : images) {
      if (v < 1 || v > static_cast<int>(images.size()) || seen[static_cast<std::size_t>(v - 1)])
        throw std::invalid_argument("not a permutation");
      seen[static_cast<std::size_t>(v - 1)] = 1;
    }
    p.img_ = std::move(images);
    return p;
  }

  int size() const { return static_cast<int>(img_.size()); }

  int operator()(int k) const {
    if (k < 1 || k > size()) throw std::out_of_range("permutation index");
    return img_[static_cast<std::size_t>(k - 1)];
  }

  const std::vector<int>& images() const { return img_; }

  Permutation then(const Permutation& q) const {
    if (q.size() != size()) throw std::invalid_argument("permutation size mismatch");
    Permutation r(size());
    for (int k = 1; k <= size(); ++k) r.img_[static_cast<std::size_t>(k - 1)] = q((*this)(k));
    return r;
  }

  Permutation inverse() const {
    Permutation r(size());
    for (int k = 1; k <= size(); ++k) r.img_[static_cast<std::size_t>((*this)(k)-1)] = k;
    return r;
  }

  bool is_identity() const {
    for (int k = 1; k <= size(); ++k)
      if ((*this)(k) != k) return false;
    return true;
  }

  // post-compose with the transposition (i, i+1): one crossing appended on the right
  void cross(int i) {
    if (i < 1 || i >= size()) throw std::out_of_range("crossing index");
    for (auto& v : img_) {
      if (v == i)
        v = i + 1;
      else if (v == i + 1)
        v = i;
    }
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.img_ <=> b.img_;
  }

 private:
  static int check_n(int n) {
    if (n < 0) throw std::invalid_argument("negative permutation size");
    return n;
  }
  std::vector<int> img_;
};

}  // namespace vass
