#include "netrep/encoding.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace netrep {

namespace {

// Unit block with position i (1-based) set, packed MSB-first over k bits.
std::uint32_t unit_block(int i, int k) { return 1U << (k - i); }

}  // namespace

Encoding::Encoding(int k, std::vector<std::string> domain, std::vector<std::uint32_t> sigma,
                   std::vector<std::uint32_t> rho)
    : k_(k), domain_(std::move(domain)), sigma_(std::move(sigma)), rho_(std::move(rho)) {
  if (k_ < 1 || k_ > 20) throw std::invalid_argument("encoding k out of range");
  const std::uint32_t full = 1U << k_;
  if (sigma_.size() != domain_.size()) throw std::invalid_argument("sigma size != |D|");
  if (rho_.size() != full) throw std::invalid_argument("rho must be total on {0,1}^k");
  std::set<std::uint32_t> img(sigma_.begin(), sigma_.end());
  if (img.size() != sigma_.size()) throw std::invalid_argument("sigma is not injective");
  for (std::uint32_t v : sigma_) {
    if (v >= full) throw std::invalid_argument("sigma block out of range");
  }
  for (std::uint32_t v = 0; v < full; ++v) {
    if (rho_[v] >= full) throw std::invalid_argument("rho block out of range");
    if (!img.count(rho_[v])) throw std::invalid_argument("rho image not contained in E");
  }
  for (std::uint32_t a : img) {
    if (rho_[a] != a) throw std::invalid_argument("rho does not fix E");
  }
  image_.assign(img.begin(), img.end());
}

int Encoding::sigma_inverse(std::uint32_t block) const {
  for (std::size_t i = 0; i < sigma_.size(); ++i) {
    if (sigma_[i] == block) return static_cast<int>(i);
  }
  return -1;
}

std::uint64_t Encoding::encode_tuple(const Point& x) const {
  if (x.size() * static_cast<std::size_t>(k_) > 63) {
    throw std::invalid_argument("encoded tuple too long");
  }
  std::uint64_t v = 0;
  for (int label : x) {
    if (label < 0 || label >= domain_size()) throw std::out_of_range("label out of range");
    v = (v << k_) | sigma_[label];
  }
  return v;
}

std::uint64_t Encoding::retract_blocks(std::uint64_t v, int n) const {
  const std::uint64_t mask = (1ULL << k_) - 1;
  std::uint64_t out = 0;
  for (int i = 0; i < n; ++i) {
    const auto block = static_cast<std::uint32_t>((v >> ((n - 1 - i) * k_)) & mask);
    out = (out << k_) | rho_[block];
  }
  return out;
}

Encoding Encoding::standard(const std::string& name, int k) {
  if (name == "identity") {
    return Encoding(1, {"0", "1"}, {0, 1}, {0, 1});
  }
  if (name == "unary" || name == "pair") {
    if (name == "pair") k = 2;
    if (k < 1) throw std::invalid_argument("unary encoding needs k >= 1");
    std::vector<std::string> labels;
    std::vector<std::uint32_t> sigma;
    labels.push_back("0");
    sigma.push_back(0);
    for (int i = 1; i <= k; ++i) {
      labels.push_back(name == "pair" ? (i == 1 ? "1" : "-1") : std::to_string(i));
      sigma.push_back(unit_block(i, k));
    }
    std::vector<std::uint32_t> rho(1U << k, 0);
    for (int i = 1; i <= k; ++i) rho[unit_block(i, k)] = unit_block(i, k);
    return Encoding(k, std::move(labels), std::move(sigma), std::move(rho));
  }
  if (name == "star1" || name == "star2") {
    const std::uint32_t ten = 0b10;   // (1,0)
    const std::uint32_t one = 0b01;   // (0,1)
    std::vector<std::uint32_t> rho = {one, one, ten, one};  // fixes (1,0) only
    std::vector<std::uint32_t> sigma =
        (name == "star1") ? std::vector<std::uint32_t>{one, ten}   // 0 -> (0,1), 1 -> (1,0)
                          : std::vector<std::uint32_t>{ten, one};  // 0 -> (1,0), 1 -> (0,1)
    return Encoding(2, {"0", "1"}, std::move(sigma), std::move(rho));
  }
  if (name == "tilde") {
    if (k < 1) throw std::invalid_argument("tilde encoding needs k >= 1");
    const int kk = 2 * k;
    std::vector<std::string> labels;
    std::vector<std::uint32_t> sigma;
    labels.push_back("0");
    sigma.push_back(0);
    const std::uint32_t low_all = (1U << k) - 1;
    for (int i = 1; i <= k; ++i) {
      labels.push_back(std::to_string(i));
      // (e_i | complement of e_i), packed over 2k bits.
      const std::uint32_t hi = unit_block(i, k);
      const std::uint32_t lo = low_all & ~unit_block(i, k);
      sigma.push_back((hi << k) | lo);
    }
    std::vector<std::uint32_t> rho(1U << kk, 0);
    for (std::size_t i = 1; i < sigma.size(); ++i) rho[sigma[i]] = sigma[i];
    return Encoding(kk, std::move(labels), std::move(sigma), std::move(rho));
  }
  if (name == "diamond") {
    if (k < 2) throw std::invalid_argument("diamond encoding needs k >= 2");
    const LatticeFamily fam = LatticeFamily::diamond(k);
    std::vector<std::uint32_t> sigma;
    const std::uint32_t all = (1U << k) - 1;
    sigma.push_back(0);  // bot
    for (int i = 1; i <= k; ++i) sigma.push_back(unit_block(i, k));
    sigma.push_back(all);  // top
    std::vector<std::uint32_t> rho(1U << k, all);
    rho[0] = 0;
    for (int i = 1; i <= k; ++i) rho[unit_block(i, k)] = unit_block(i, k);
    return Encoding(k, fam.labels(), std::move(sigma), std::move(rho));
  }
  throw std::invalid_argument("unknown standard encoding '" + name + "'");
}

Encoding Encoding::bar() const {
  if (domain_.size() != 2) throw std::invalid_argument("bar(): two-label domains only");
  return Encoding(k_, domain_, {sigma_[1], sigma_[0]}, rho_);
}

}  // namespace netrep
