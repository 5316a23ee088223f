#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace homalg::cli {

using Json = nlohmann::ordered_json;

struct Table {
  std::string title;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// Output of one subcommand.  `json` is authoritative; the tables are the
/// flat projection used for CSV and text.
struct Report {
  Json json;
  std::vector<Table> tables;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

struct Settings {
  std::uint64_t budget = 0;
  bool budget_given = false;
  std::size_t jobs = 1;
};

Report homology_cyclic(std::size_t n, std::size_t max_degree, const Settings& s);
Report homology_product(std::size_t n, std::size_t m, std::size_t max_degree, const Settings& s);
Report homology_group(const std::string& name, std::size_t max_degree, const Settings& s);
Report ext_table(std::size_t max_n, const Settings& s);
Report e2_table(const std::vector<std::size_t>& ns, std::size_t max_p, const Settings& s);
Report kunneth(std::size_t n, bool verify_bar, const Settings& s);
Report bloch(std::size_t q, const Settings& s);
Report witness_verify(const std::vector<std::size_t>& ns, bool swapped_middle_term, const Settings& s);
Report witness_classes(std::size_t n, const Settings& s);
Report paper_tables(const Settings& s);

}  // namespace homalg::cli
