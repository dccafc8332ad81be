#include "icx/table.hpp"

#include <string>

#include "icx/errors.hpp"

namespace icx {

std::string_view to_string(AlgorithmTag tag) {
  switch (tag) {
    case AlgorithmTag::sieve:
      return "sieve";
    case AlgorithmTag::dp:
      return "dp";
    case AlgorithmTag::oracle:
      return "oracle";
  }
  return "unknown";
}

ComplexityTable::ComplexityTable(std::vector<std::uint8_t> complexity,
                                 std::optional<std::vector<std::uint8_t>> rank, AlgorithmTag tag)
    : complexity_(std::move(complexity)), rank_(std::move(rank)), tag_(tag) {
  if (complexity_.size() < 2) throw ConfigError("complexity table must cover at least n = 1");
  if (rank_ && rank_->size() != complexity_.size()) {
    throw ConfigError("rank column length differs from complexity column");
  }
  complexity_[0] = 0;
  if (rank_) (*rank_)[0] = 0;
}

unsigned ComplexityTable::complexity(std::uint64_t n) const {
  if (n == 0 || n > limit()) {
    throw RangeError("n = " + std::to_string(n) + " outside table range [1, " +
                     std::to_string(limit()) + "]");
  }
  return complexity_[n];
}

unsigned ComplexityTable::rank(std::uint64_t n) const {
  if (!rank_) throw CapabilityError("table carries no rank column");
  if (n == 0 || n > limit()) {
    throw RangeError("n = " + std::to_string(n) + " outside table range [1, " +
                     std::to_string(limit()) + "]");
  }
  return (*rank_)[n];
}

std::span<const std::uint8_t> ComplexityTable::ranks() const noexcept {
  if (!rank_) return {};
  return *rank_;
}

ComplexityTable ComplexityTable::prefix(std::uint64_t limit) const {
  if (limit == 0 || limit > this->limit()) {
    throw RangeError("prefix limit " + std::to_string(limit) + " outside [1, " +
                     std::to_string(this->limit()) + "]");
  }
  std::vector<std::uint8_t> c(complexity_.begin(), complexity_.begin() + limit + 1);
  std::optional<std::vector<std::uint8_t>> r;
  if (rank_) r.emplace(rank_->begin(), rank_->begin() + limit + 1);
  return ComplexityTable(std::move(c), std::move(r), tag_);
}

}  // namespace icx
