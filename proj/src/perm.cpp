#include "monoproj/perm.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace monoproj {

Permutation::Permutation(int d) : img_(static_cast<std::size_t>(d)) {
  std::iota(img_.begin(), img_.end(), 0);
}

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (int x : img_) {
    if (x < 0 || x >= degree() || seen[x])
      throw std::invalid_argument("image list is not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::from_cycles(std::string_view text, int d) {
  std::vector<int> img(static_cast<std::size_t>(d));
  std::iota(img.begin(), img.end(), 0);
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  // Each cycle is applied after the previous ones (left to right).
  Permutation acc(d);
  while (true) {
    skip();
    if (i == text.size())
      break;
    if (text[i] != '(')
      throw std::invalid_argument("cycle notation: expected '('");
    ++i;
    std::vector<int> cyc;
    while (true) {
      skip();
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      if (i == text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        throw std::invalid_argument("cycle notation: expected a point");
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        v = v * 10 + (text[i++] - '0');
      if (v < 1 || v > d)
        throw std::invalid_argument("cycle notation: point out of range");
      cyc.push_back(v - 1);
      skip();
      if (i < text.size() && text[i] == ',')
        ++i;
    }
    std::vector<int> c(static_cast<std::size_t>(d));
    std::iota(c.begin(), c.end(), 0);
    for (std::size_t k = 0; k < cyc.size(); ++k)
      c[cyc[k]] = cyc[(k + 1) % cyc.size()];
    acc = acc * Permutation(c);
  }
  return acc;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(img_.size());
  for (int i = 0; i < degree(); ++i)
    inv[img_[i]] = i;
  Permutation out;
  out.img_ = std::move(inv);
  return out;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i)
      return false;
  return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(img_.size(), false);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i] || img_[i] == i)
      continue;
    std::vector<int> cyc;
    for (int j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      cyc.push_back(j);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

bool Permutation::is_even() const {
  std::size_t transpositions = 0;
  for (const auto &c : cycles())
    transpositions += c.size() - 1;
  return transpositions % 2 == 0;
}

unsigned long long Permutation::order() const {
  unsigned long long o = 1;
  for (const auto &c : cycles())
    o = std::lcm(o, static_cast<unsigned long long>(c.size()));
  return o;
}

std::string Permutation::to_cycle_string() const {
  const auto cs = cycles();
  if (cs.empty())
    return "()";
  std::string s;
  for (const auto &c : cs) {
    s += '(';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k)
        s += ' ';
      s += std::to_string(c[k] + 1);
    }
    s += ')';
  }
  return s;
}

Permutation operator*(const Permutation &p, const Permutation &q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("permutation degree mismatch");
  std::vector<int> r(p.img_.size());
  for (int i = 0; i < p.degree(); ++i)
    r[i] = q.img_[p.img_[i]];
  Permutation out;
  out.img_ = std::move(r);
  return out;
}

std::vector<int> cycle_type(const Permutation &p) {
  std::vector<int> t;
  int moved = 0;
  for (const auto &c : p.cycles()) {
    t.push_back(static_cast<int>(c.size()));
    moved += static_cast<int>(c.size());
  }
  t.insert(t.end(), static_cast<std::size_t>(p.degree() - moved), 1);
  std::sort(t.begin(), t.end(), std::greater<>());
  return t;
}

} // namespace monoproj
