#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "netrep/lattice.hpp"

namespace netrep {

// A (k, rho, sigma) encoding of a finite label set D into {0,1}^k:
// sigma is a bijection from D onto E subseteq {0,1}^k and rho is a
// retraction of {0,1}^k onto E (rho(a) = a for a in E). Blocks are packed
// as integers with block position 0 as the most significant bit.
class Encoding {
 public:
  Encoding(int k, std::vector<std::string> domain, std::vector<std::uint32_t> sigma,
           std::vector<std::uint32_t> rho);

  int k() const { return k_; }
  const std::vector<std::string>& domain() const { return domain_; }
  int domain_size() const { return static_cast<int>(domain_.size()); }

  std::uint32_t sigma(int label) const { return sigma_.at(label); }
  // -1 when the block is not in E.
  int sigma_inverse(std::uint32_t block) const;
  std::uint32_t rho(std::uint32_t block) const { return rho_.at(block); }
  const std::vector<std::uint32_t>& image() const { return image_; }  // E, sorted

  // Concatenation of sigma blocks; x holds label indices.
  std::uint64_t encode_tuple(const Point& x) const;
  // rho applied to each k-bit block of a kn-bit assignment.
  std::uint64_t retract_blocks(std::uint64_t v, int n) const;

  // Names: identity, unary (takes k), pair, tilde (takes k), star1, star2,
  // diamond (takes k). "pair" is unary(2) over the labels {0, 1, -1}.
  static Encoding standard(const std::string& name, int k = 0);

  // sigma_bar(x) = sigma(x_bar) on two-label domains; k, E, rho unchanged.
  Encoding bar() const;

  friend bool operator==(const Encoding& a, const Encoding& b) {
    return a.k_ == b.k_ && a.domain_ == b.domain_ && a.sigma_ == b.sigma_ && a.rho_ == b.rho_;
  }

 private:
  int k_;
  std::vector<std::string> domain_;
  std::vector<std::uint32_t> sigma_;  // per label index
  std::vector<std::uint32_t> rho_;    // size 2^k
  std::vector<std::uint32_t> image_;
};

}  // namespace netrep
