#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace icx {

/// Argument outside the mathematical domain of an operation (e.g. n < 2 for log-based quantities).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Query beyond the range covered by a table.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Builder configuration that cannot be honoured (limit too large, zero limit, ...).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The requested analysis needs data the table does not carry (ranks, enough sequence points).
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller broke an ordering or usage contract.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Exhaustive search ran past its ones budget without producing the target.
class CapExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Damaged or foreign table file.
class IntegrityError : public std::runtime_error {
 public:
  enum class Kind { bad_magic, unsupported_version, checksum_mismatch, truncated, malformed };

  IntegrityError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// Filesystem failure while persisting; carries the last position known to be durable on disk.
class IoError : public std::runtime_error {
 public:
  IoError(const std::string& what, std::uint64_t durable_position)
      : std::runtime_error(what), durable_position_(durable_position) {}

  std::uint64_t durable_position() const noexcept { return durable_position_; }

 private:
  std::uint64_t durable_position_;
};

}  // namespace icx
