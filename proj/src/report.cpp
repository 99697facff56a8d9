#include "wqg/report.hpp"

#include <algorithm>

#include "wqg/errors.hpp"

namespace wqg {

bool CheckReport::overall() const {
  return std::all_of(items.begin(), items.end(), [](const CheckItem& i) { return i.passed; });
}

const CheckItem* CheckReport::find(const std::string& id) const {
  for (const auto& i : items) {
    if (i.id == id) return &i;
  }
  return nullptr;
}

bool CheckReport::passed(const std::string& id) const {
  const CheckItem* i = find(id);
  if (i == nullptr) throw InvalidInput("no report item '" + id + "'");
  return i->passed;
}

std::vector<std::string> CheckReport::failed_ids() const {
  std::vector<std::string> out;
  for (const auto& i : items) {
    if (!i.passed) out.push_back(i.id);
  }
  return out;
}

void CheckReport::append(const CheckReport& other, const std::string& prefix) {
  for (auto item : other.items) {
    item.id = prefix + item.id;
    items.push_back(std::move(item));
  }
}

void CheckReport::add_flag(const std::string& id, bool ok, const std::string& note) {
  CheckItem item;
  item.id = id;
  item.passed = ok;
  item.cases = 1;
  if (!ok) item.witnesses.push_back(Witness{{}, {}, note});
  items.push_back(std::move(item));
}

ItemRecorder::ItemRecorder(CheckReport& report, std::string id, const CheckOptions& opts)
    : report_(report), opts_(opts) {
  item_.id = std::move(id);
}

ItemRecorder::~ItemRecorder() { report_.items.push_back(std::move(item_)); }

bool ItemRecorder::expect_equal(const Vector& lhs, const Vector& rhs, std::vector<std::size_t> indices,
                                std::string note) {
  ++item_.cases;
  if (lhs == rhs) return true;
  fail(std::move(indices), lhs.size() == rhs.size() ? lhs - rhs : Vector{}, std::move(note));
  return false;
}

bool ItemRecorder::expect_equal(const Scalar& lhs, const Scalar& rhs, std::vector<std::size_t> indices,
                                std::string note) {
  ++item_.cases;
  if (lhs == rhs) return true;
  fail(std::move(indices), Vector{lhs - rhs}, std::move(note));
  return false;
}

void ItemRecorder::fail(std::vector<std::size_t> indices, Vector discrepancy, std::string note) {
  if (item_.passed || opts_.all_witnesses) {
    item_.witnesses.push_back(Witness{std::move(indices), std::move(discrepancy), std::move(note)});
  }
  item_.passed = false;
}

}  // namespace wqg
