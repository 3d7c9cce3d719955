#include "paramsurf/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "paramsurf/errors.hpp"

namespace paramsurf {

Permutation::Permutation(size_t n) : images_(n) {
  for (size_t i = 0; i < n; ++i) images_[i] = static_cast<int>(i);
}

Permutation Permutation::from_images(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  std::vector<bool> seen(static_cast<size_t>(n), false);
  for (int v : images) {
    if (v < 0 || v >= n || seen[static_cast<size_t>(v)])
      throw InputError("invalid permutation: images are not a bijection");
    seen[static_cast<size_t>(v)] = true;
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::from_cycles(const std::string& text, int n) {
  if (n < 0) throw InputError("invalid permutation size");
  Permutation p(static_cast<size_t>(n));
  std::vector<bool> mentioned(static_cast<size_t>(n), false);
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw InputError("invalid cycle notation: expected '('");
    ++i;
    std::vector<int> cyc;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw InputError("invalid cycle notation: expected a letter 1.." + std::to_string(n));
      size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      const int v = std::stoi(text.substr(i, j - i));
      if (v < 1 || v > n)
        throw InputError("cycle letter " + std::to_string(v) + " outside 1.." + std::to_string(n));
      if (mentioned[static_cast<size_t>(v - 1)])
        throw InputError("cycle letter " + std::to_string(v) + " repeated");
      mentioned[static_cast<size_t>(v - 1)] = true;
      cyc.push_back(v - 1);
      i = j;
      skip_ws();
    }
    if (i >= text.size()) throw InputError("invalid cycle notation: missing ')'");
    ++i;  // ')'
    for (size_t k = 0; k < cyc.size(); ++k)
      p.images_[static_cast<size_t>(cyc[k])] = cyc[(k + 1) % cyc.size()];
    skip_ws();
  }
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (size_t i = 0; i < images_.size(); ++i) inv[static_cast<size_t>(images_[i])] = static_cast<int>(i);
  return from_images(std::move(inv));
}

Permutation Permutation::then(const Permutation& b) const {
  if (b.n() != n()) throw InputError("permutation size mismatch");
  std::vector<int> img(images_.size());
  for (size_t i = 0; i < images_.size(); ++i) img[i] = b.apply(images_[i]);
  return from_images(std::move(img));
}

Permutation Permutation::relabel(const Permutation& r) const {
  if (r.n() != n()) throw InputError("permutation size mismatch");
  std::vector<int> img(images_.size());
  for (size_t i = 0; i < images_.size(); ++i)
    img[static_cast<size_t>(r.apply(static_cast<int>(i)))] = r.apply(images_[i]);
  return from_images(std::move(img));
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size(), false);
  for (size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> cyc;
    int j = static_cast<int>(i);
    while (!seen[static_cast<size_t>(j)]) {
      seen[static_cast<size_t>(j)] = true;
      cyc.push_back(j);
      j = images_[static_cast<size_t>(j)];
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

int Permutation::cycle_count() const { return static_cast<int>(cycles().size()); }

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> t;
  for (const auto& c : cycles()) t.push_back(static_cast<int>(c.size()));
  std::sort(t.rbegin(), t.rend());
  return t;
}

std::string Permutation::cycle_string() const {
  std::ostringstream os;
  for (const auto& c : cycles()) {
    os << "(";
    for (size_t k = 0; k < c.size(); ++k) {
      if (k) os << " ";
      os << c[k] + 1;
    }
    os << ")";
  }
  return images_.empty() ? "()" : os.str();
}

std::string Permutation::cycle_type_string() const {
  std::ostringstream os;
  os << "(";
  const auto t = cycle_type();
  for (size_t k = 0; k < t.size(); ++k) {
    if (k) os << " ";
    os << t[k];
  }
  os << ")";
  return os.str();
}

bool Permutation::is_identity() const {
  for (size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i)) return false;
  return true;
}

}  // namespace paramsurf
