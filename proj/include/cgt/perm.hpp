#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cgt {

using Point = std::uint32_t;

struct Error : std::runtime_error {
  explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

// A permutation of {0..degree-1} stored as an image table. Immutable in
// practice: all operations return new values. Composition is apply-left-first
// throughout the library: (a*b)(x) == b(a(x)), i.e. x^(ab) = (x^a)^b.
class Perm {
public:
  explicit Perm(Point degree) : img_(degree) {
    std::iota(img_.begin(), img_.end(), Point{0});
  }

  static Perm from_images(std::vector<Point> images) {
    Perm p;
    p.img_ = std::move(images);
    p.check_bijection();
    return p;
  }

  // Parses cycle notation over 1-based points, e.g. "(1,2,3)(4,5)".
  // Cycles need not be disjoint; juxtaposed cycles multiply left-to-right.
  // "()" is the identity.
  static Perm from_cycles(std::string_view text, Point degree);

  Point degree() const { return static_cast<Point>(img_.size()); }
  Point operator()(Point x) const { return img_[x]; }
  const std::vector<Point> &images() const { return img_; }

  bool is_identity() const {
    for (Point x = 0; x < degree(); ++x)
      if (img_[x] != x) return false;
    return true;
  }

  // Apply *this first, then rhs.
  Perm operator*(const Perm &rhs) const {
    if (degree() != rhs.degree())
      throw Error("degree mismatch in permutation product: " +
                  std::to_string(degree()) + " vs " + std::to_string(rhs.degree()));
    Perm r;
    r.img_.resize(degree());
    for (Point x = 0; x < degree(); ++x) r.img_[x] = rhs.img_[img_[x]];
    return r;
  }

  Perm inverse() const {
    Perm r;
    r.img_.resize(degree());
    for (Point x = 0; x < degree(); ++x) r.img_[img_[x]] = x;
    return r;
  }

  bool operator==(const Perm &rhs) const { return img_ == rhs.img_; }
  bool operator!=(const Perm &rhs) const { return img_ != rhs.img_; }
  bool operator<(const Perm &rhs) const { return img_ < rhs.img_; }

  // Smallest point moved, or degree() for the identity.
  Point smallest_moved() const {
    for (Point x = 0; x < degree(); ++x)
      if (img_[x] != x) return x;
    return degree();
  }

  bool is_even() const {
    std::vector<bool> seen(degree(), false);
    bool even = true;
    for (Point s = 0; s < degree(); ++s) {
      if (seen[s]) continue;
      Point len = 0;
      for (Point x = s; !seen[x]; x = img_[x]) { seen[x] = true; ++len; }
      if (len % 2 == 0) even = !even;
    }
    return even;
  }

  // Element order as lcm of cycle lengths; throws on (absurd) u64 overflow.
  std::uint64_t order() const {
    std::vector<bool> seen(degree(), false);
    std::uint64_t ord = 1;
    for (Point s = 0; s < degree(); ++s) {
      if (seen[s]) continue;
      std::uint64_t len = 0;
      for (Point x = s; !seen[x]; x = img_[x]) { seen[x] = true; ++len; }
      std::uint64_t g = std::gcd(ord, len);
      if (ord / g > UINT64_MAX / len)
        throw Error("element order overflows 64 bits");
      ord = ord / g * len;
    }
    return ord;
  }

  // Canonical disjoint-cycle form: cycles sorted by smallest member, each
  // written from its smallest member, 1-based, fixed points omitted.
  std::string to_cycles() const {
    std::string out;
    std::vector<bool> seen(degree(), false);
    for (Point s = 0; s < degree(); ++s) {
      if (seen[s] || img_[s] == s) { seen[s] = true; continue; }
      out += '(';
      bool first = true;
      for (Point x = s; !seen[x]; x = img_[x]) {
        seen[x] = true;
        if (!first) out += ',';
        out += std::to_string(x + 1);
        first = false;
      }
      out += ')';
    }
    if (out.empty()) out = "()";
    return out;
  }

  std::size_t hash() const {
    std::size_t h = 0x9e3779b97f4a7c15ull ^ img_.size();
    for (Point v : img_) {
      h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }

private:
  Perm() = default;

  void check_bijection() const {
    std::vector<bool> seen(img_.size(), false);
    for (Point v : img_) {
      if (v >= img_.size() || seen[v])
        throw Error("image table is not a bijection");
      seen[v] = true;
    }
  }

  std::vector<Point> img_;
};

struct PermHash {
  std::size_t operator()(const Perm &p) const { return p.hash(); }
};

inline Perm Perm::from_cycles(std::string_view text, Point degree) {
  Perm result(degree);
  std::size_t i = 0;
  auto fail = [&](const std::string &what, std::size_t pos) -> void {
    throw Error("cycle parse error at position " + std::to_string(pos) + ": " + what);
  };
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' ||
                               text[i] == '\n' || text[i] == '\r'))
      ++i;
  };
  skip_ws();
  if (i == text.size()) fail("expected '('", i);
  bool any = false;
  while (true) {
    skip_ws();
    if (i == text.size()) {
      if (!any) fail("expected '('", i);
      break;
    }
    if (text[i] != '(') fail("expected '('", i);
    std::size_t open_pos = i;
    ++i;
    skip_ws();
    std::vector<Point> cycle;
    if (i < text.size() && text[i] == ')') {
      ++i;  // "()" empty cycle
    } else {
      while (true) {
        skip_ws();
        std::size_t tok = i;
        if (i >= text.size() || text[i] < '0' || text[i] > '9')
          fail("expected point", i);
        std::uint64_t v = 0;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
          v = v * 10 + static_cast<std::uint64_t>(text[i] - '0');
          if (v > degree) fail("point out of range (degree " + std::to_string(degree) + ")", tok);
          ++i;
        }
        if (v == 0) fail("points are 1-based", tok);
        Point p = static_cast<Point>(v - 1);
        if (std::find(cycle.begin(), cycle.end(), p) != cycle.end())
          fail("point repeated within cycle", tok);
        cycle.push_back(p);
        skip_ws();
        if (i >= text.size()) fail("unterminated cycle", open_pos);
        if (text[i] == ',') { ++i; continue; }
        if (text[i] == ')') { ++i; break; }
        fail("expected ',' or ')'", i);
      }
    }
    any = true;
    if (cycle.size() > 1) {
      // multiply on the right by this cycle (left-to-right product)
      Perm c(degree);
      for (std::size_t k = 0; k < cycle.size(); ++k)
        c.img_[cycle[k]] = cycle[(k + 1) % cycle.size()];
      result = result * c;
    }
    skip_ws();
    if (i == text.size()) break;
  }
  return result;
}

}  // namespace cgt
