#include "netrep/lattice.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace netrep {

LatticeFamily LatticeFamily::boolean() { return LatticeFamily(LatticeKind::Boolean, 1); }

LatticeFamily LatticeFamily::ksub(int k) {
  if (k < 1) throw std::invalid_argument("ksub family needs k >= 1");
  return LatticeFamily(LatticeKind::Ksub, k);
}

LatticeFamily LatticeFamily::diamond(int k) {
  if (k < 1) throw std::invalid_argument("diamond family needs k >= 1");
  return LatticeFamily(LatticeKind::Diamond, k);
}

int LatticeFamily::label_count() const {
  switch (kind_) {
    case LatticeKind::Boolean: return 2;
    case LatticeKind::Ksub: return k_ + 1;
    case LatticeKind::Diamond: return k_ + 2;
  }
  return 0;
}

void LatticeFamily::check_label(int a) const {
  if (a < 0 || a >= label_count()) throw std::out_of_range("label index out of range");
}

int LatticeFamily::meet(int a, int b) const {
  check_label(a);
  check_label(b);
  switch (kind_) {
    case LatticeKind::Boolean:
      return std::min(a, b);
    case LatticeKind::Ksub:
      return a == b ? a : 0;
    case LatticeKind::Diamond: {
      const int top = k_ + 1;
      if (a == b) return a;
      if (a == top) return b;
      if (b == top) return a;
      return 0;  // bot, or two distinct atoms
    }
  }
  return 0;
}

int LatticeFamily::join(int a, int b) const {
  check_label(a);
  check_label(b);
  switch (kind_) {
    case LatticeKind::Boolean:
      return std::max(a, b);
    case LatticeKind::Ksub:
      if (a == b) return a;
      if (a == 0) return b;
      if (b == 0) return a;
      return 0;  // distinct nonzero labels clash
    case LatticeKind::Diamond: {
      const int top = k_ + 1;
      if (a == b) return a;
      if (a == 0) return b;
      if (b == 0) return a;
      return top;
    }
  }
  return 0;
}

std::string LatticeFamily::label_name(int a) const {
  check_label(a);
  switch (kind_) {
    case LatticeKind::Boolean:
    case LatticeKind::Ksub:
      return std::to_string(a);
    case LatticeKind::Diamond:
      if (a == 0) return "bot";
      if (a == k_ + 1) return "top";
      return std::to_string(a);
  }
  return "";
}

int LatticeFamily::label_index(const std::string& name) const {
  for (int a = 0; a < label_count(); ++a) {
    if (label_name(a) == name) return a;
  }
  throw std::invalid_argument("unknown label '" + name + "'");
}

std::vector<std::string> LatticeFamily::labels() const {
  std::vector<std::string> out;
  for (int a = 0; a < label_count(); ++a) out.push_back(label_name(a));
  return out;
}

std::pair<Point, Point> meet_join(const LatticeFamily& fam, const Point& x, const Point& y) {
  if (x.size() != y.size()) throw std::invalid_argument("meet_join: length mismatch");
  if (x.empty()) throw std::invalid_argument("meet_join: empty points");
  Point m(x.size()), j(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    m[i] = fam.meet(x[i], y[i]);
    j[i] = fam.join(x[i], y[i]);
  }
  return {m, j};
}

std::vector<Point> closure_meet_join(const LatticeFamily& fam, const std::vector<Point>& points) {
  if (fam.kind() != LatticeKind::Boolean) {
    throw std::invalid_argument("closure_meet_join: boolean families only");
  }
  if (points.empty()) return {};
  const std::size_t len = points[0].size();
  std::set<Point> closed;
  for (const auto& p : points) {
    if (p.size() != len) throw std::invalid_argument("closure_meet_join: mixed lengths");
    for (int a : p) {
      if (a != 0 && a != 1) throw std::out_of_range("closure_meet_join: non-boolean label");
    }
    closed.insert(p);
  }
  // Worklist saturation: pair every new point against everything seen.
  std::vector<Point> work(closed.begin(), closed.end());
  while (!work.empty()) {
    const Point p = work.back();
    work.pop_back();
    for (const auto& q : std::vector<Point>(closed.begin(), closed.end())) {
      auto [m, j] = meet_join(fam, p, q);
      if (closed.insert(m).second) work.push_back(m);
      if (closed.insert(j).second) work.push_back(j);
    }
  }
  return {closed.begin(), closed.end()};
}

std::uint64_t pack_bits(const Point& x) {
  if (x.size() > 63) throw std::invalid_argument("pack_bits: too long");
  std::uint64_t v = 0;
  for (int b : x) {
    if (b != 0 && b != 1) throw std::invalid_argument("pack_bits: non-binary value");
    v = (v << 1) | static_cast<std::uint64_t>(b);
  }
  return v;
}

Point unpack_bits(std::uint64_t v, int len) {
  Point x(len);
  for (int i = 0; i < len; ++i) x[i] = static_cast<int>((v >> (len - 1 - i)) & 1U);
  return x;
}

std::string bits_to_string(std::uint64_t v, int len) {
  std::string s(len, '0');
  for (int i = 0; i < len; ++i) {
    if ((v >> (len - 1 - i)) & 1U) s[i] = '1';
  }
  return s;
}

std::uint64_t bits_from_string(const std::string& s) {
  if (s.empty() || s.size() > 63) throw std::invalid_argument("bad bitstring '" + s + "'");
  std::uint64_t v = 0;
  for (char c : s) {
    if (c != '0' && c != '1') throw std::invalid_argument("bad bitstring '" + s + "'");
    v = (v << 1) | static_cast<std::uint64_t>(c == '1');
  }
  return v;
}

}  // namespace netrep
