#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace netrep {

// A point is a tuple of label indices into its family's label list.
using Point = std::vector<int>;

enum class LatticeKind { Boolean, Ksub, Diamond };

// The three label algebras used throughout: the two-element lattice {0,1},
// the [0,k] algebra whose meet keeps equal labels and sends clashes to 0
// (join additionally absorbs 0), and the k-diamond with bot below the k
// incomparable atoms below top.
//
// Label index conventions (fixed, part of the serialization contract):
//   Boolean: 0 -> "0", 1 -> "1"
//   Ksub(k): i -> "i" for i in [0,k]; the bisubmodular alias maps "1" -> 1
//            and "-1" -> 2 at the cost-function layer.
//   Diamond(k): 0 -> "bot", i -> "i" for i in [k], k+1 -> "top"
class LatticeFamily {
 public:
  static LatticeFamily boolean();
  static LatticeFamily ksub(int k);
  static LatticeFamily diamond(int k);

  LatticeKind kind() const { return kind_; }
  int k() const { return k_; }
  int label_count() const;

  int meet(int a, int b) const;
  int join(int a, int b) const;

  std::string label_name(int a) const;
  int label_index(const std::string& name) const;  // throws on unknown label
  std::vector<std::string> labels() const;

 private:
  LatticeFamily(LatticeKind kind, int k) : kind_(kind), k_(k) {}
  void check_label(int a) const;

  LatticeKind kind_;
  int k_;
};

// Componentwise (meet, join). Throws on length mismatch or bad label.
std::pair<Point, Point> meet_join(const LatticeFamily& fam, const Point& x, const Point& y);

// Smallest superset of `points` closed under pairwise meet and join,
// in sorted (lexicographic) order. Boolean families only; every point
// must have the same length. Empty input gives the empty set.
std::vector<Point> closure_meet_join(const LatticeFamily& fam, const std::vector<Point>& points);

// Bit-vector helpers for boolean points. Position 0 of the tuple is the
// most significant bit, so the packed integer order equals lexicographic
// tuple order.
std::uint64_t pack_bits(const Point& x);
Point unpack_bits(std::uint64_t v, int len);
std::string bits_to_string(std::uint64_t v, int len);
std::uint64_t bits_from_string(const std::string& s);  // throws on non-binary chars

}  // namespace netrep
