#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "wqg/linalg.hpp"

namespace wqg {

/// Where an identity failed: the basis indices plugged in and the nonzero
/// difference (left side minus right side).
struct Witness {
  std::vector<std::size_t> indices;
  Vector discrepancy;
  std::string note;
};

struct CheckItem {
  std::string id;
  bool passed = true;
  std::size_t cases = 0;
  std::vector<Witness> witnesses;
};

struct CheckOptions {
  bool all_witnesses = false;
};

class CheckReport {
 public:
  std::vector<CheckItem> items;

  bool overall() const;
  bool passed(const std::string& id) const;  // throws InvalidInput for unknown ids
  const CheckItem* find(const std::string& id) const;
  std::vector<std::string> failed_ids() const;
  void append(const CheckReport& other, const std::string& prefix = "");
  void add_flag(const std::string& id, bool ok, const std::string& note = "");
};

/// Collects the outcome of one identity over an ordered sweep of cases,
/// keeping the lexicographically first failure (or all, on request).
class ItemRecorder {
 public:
  ItemRecorder(CheckReport& report, std::string id, const CheckOptions& opts);
  ItemRecorder(const ItemRecorder&) = delete;
  ItemRecorder& operator=(const ItemRecorder&) = delete;
  ~ItemRecorder();

  /// Compares lhs and rhs; records a witness when they differ.
  bool expect_equal(const Vector& lhs, const Vector& rhs, std::vector<std::size_t> indices,
                    std::string note = "");
  bool expect_equal(const Scalar& lhs, const Scalar& rhs, std::vector<std::size_t> indices,
                    std::string note = "");
  void fail(std::vector<std::size_t> indices, Vector discrepancy, std::string note = "");
  void pass_case() { ++item_.cases; }
  /// False once a witness is held and only the first one is wanted.
  bool keep_going() const { return item_.passed || opts_.all_witnesses; }

 private:
  CheckReport& report_;
  CheckItem item_;
  CheckOptions opts_;
};

}  // namespace wqg
