#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace abelcone::verify {

struct Options {
  int g_min = 1;
  int g_max = 4;
  std::string only;  // substring filter on item ids; empty runs everything
  std::uint64_t seed = 0;
};

struct Item {
  std::string id;
  bool pass = false;
  std::string detail;
};

struct Report {
  std::vector<Item> items;
  bool all_pass() const;
};

// The reproduction suite: every line item recomputes one of the published
// values or sampled properties and compares exactly (or within the stated
// tolerance for the descent-based items).
Report run(const Options& opts);

nlohmann::ordered_json report_json(const Report& r);
std::string report_text(const Report& r);

}  // namespace abelcone::verify
