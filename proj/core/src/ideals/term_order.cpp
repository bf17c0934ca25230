#include "frobcheck/ideals/term_order.hpp"

#include <algorithm>

#include "frobcheck/errors.hpp"

namespace frobcheck {

TermOrder::TermOrder(std::vector<std::size_t> block) : block_(std::move(block)) {
  std::sort(block_.begin(), block_.end());
  block_.erase(std::unique(block_.begin(), block_.end()), block_.end());
  for (auto i : block_) {
    if (i >= 64) throw InvalidArgument("eliminated variable index must be below 64");
    mask_ |= std::uint64_t{1} << i;
  }
}

namespace {

bool in_block(std::uint64_t mask, std::size_t i) { return i < 64 && ((mask >> i) & 1u); }

// Grevlex restricted to the variables whose block membership equals `want`.
int masked_grevlex(const Monomial& a, const Monomial& b, std::uint64_t mask, bool want) {
  unsigned da = 0, db = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (in_block(mask, i) == want) {
      da += a[i];
      db += b[i];
    }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (in_block(mask, i) != want) continue;
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace

int TermOrder::compare(const Monomial& a, const Monomial& b) const noexcept {
  if (block_.empty()) return grevlex_compare(a, b);
  if (int c = masked_grevlex(a, b, mask_, true)) return c;
  return masked_grevlex(a, b, mask_, false);
}

std::string TermOrder::name() const {
  if (block_.empty()) return "grevlex";
  std::string s = "elimination(";
  for (std::size_t i = 0; i < block_.size(); ++i) s += (i ? "," : "") + std::to_string(block_[i]);
  return s + ")";
}

}  // namespace frobcheck
