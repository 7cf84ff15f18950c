#pragma once

#include <string>
#include <vector>

namespace superkit {

struct CheckItem {
  std::string id;
  bool ok = false;
  std::string detail;
};

struct CheckList {
  std::vector<CheckItem> items;
  bool ok() const {
    for (const auto& i : items)
      if (!i.ok) return false;
    return true;
  }
  void add(const std::string& id, bool ok, const std::string& detail = "") {
    items.push_back({id, ok, detail});
  }
};

}  // namespace superkit
