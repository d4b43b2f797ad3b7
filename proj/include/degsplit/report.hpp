#pragma once

#include <string>
#include <vector>

namespace degsplit {

/// Itemized verification outcome; `pass()` holds iff every item passes.
class Report {
 public:
  struct Item {
    std::string name;
    bool pass = false;
    std::string detail;
  };

  void add(std::string name, bool pass, std::string detail = {}) {
    items_.push_back({std::move(name), pass, std::move(detail)});
  }

  bool pass() const {
    for (const auto& item : items_) {
      if (!item.pass) return false;
    }
    return true;
  }

  /// Looks up an item by name; nullptr when absent.
  const Item* find(const std::string& name) const {
    for (const auto& item : items_) {
      if (item.name == name) return &item;
    }
    return nullptr;
  }

  const std::vector<Item>& items() const noexcept { return items_; }

  /// One "PASS name" / "FAIL name: detail" line per item.
  std::string to_string() const {
    std::string out;
    for (const auto& item : items_) {
      out += item.pass ? "PASS " : "FAIL ";
      out += item.name;
      if (!item.detail.empty()) out += ": " + item.detail;
      out += '\n';
    }
    return out;
  }

 private:
  std::vector<Item> items_;
};

}  // namespace degsplit
