#pragma once

#include <string>
#include <vector>

namespace paramsurf {

// Permutation on {0..n-1}. Cycle notation I/O is 1-based.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(size_t n);  // identity

  static Permutation from_images(std::vector<int> images);
  // "(1 2)(3)" style; letters not mentioned are fixed. Throws InputError on
  // malformed text or letters outside 1..n.
  static Permutation from_cycles(const std::string& text, int n);

  int n() const { return static_cast<int>(images_.size()); }
  int apply(int i) const { return images_[static_cast<size_t>(i)]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  // (a.then(b))(i) == b(a(i))
  Permutation then(const Permutation& b) const;
  // Conjugate by a relabeling r: result(r(i)) = r(apply(i)).
  Permutation relabel(const Permutation& r) const;

  std::vector<std::vector<int>> cycles() const;  // 0-based, each cycle starts at its least element
  int cycle_count() const;
  std::vector<int> cycle_type() const;  // lengths, descending
  std::string cycle_string() const;     // canonical "(1 2)(3)"
  std::string cycle_type_string() const;  // "(2 1)" style partition

  bool is_identity() const;
  bool operator==(const Permutation& o) const { return images_ == o.images_; }

 private:
  std::vector<int> images_;
};

}  // namespace paramsurf
