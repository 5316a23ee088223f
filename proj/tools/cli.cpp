#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "homalg/cache.hpp"
#include "homalg/errors.hpp"
#include "usage_error.hpp"

namespace homalg::cli {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void csv_line(std::ostream& out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_field(cells[i]);
  out << '\n';
}

std::string render_csv(const Report& r) {
  std::ostringstream out;
  if (r.tables.size() == 1) {
    csv_line(out, r.tables[0].header);
    for (const auto& row : r.tables[0].rows) csv_line(out, row);
    return out.str();
  }
  // Several tables: long form, one cell per line.
  csv_line(out, {"table", "row", "column", "value"});
  for (const auto& t : r.tables) {
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      for (std::size_t j = 0; j < t.header.size() && j < t.rows[i].size(); ++j) {
        csv_line(out, {t.title, std::to_string(i), t.header[j], t.rows[i][j]});
      }
    }
  }
  return out.str();
}

std::string render_text(const Report& r) {
  std::ostringstream out;
  for (const auto& t : r.tables) {
    out << t.title << '\n';
    std::vector<std::size_t> width(t.header.size(), 0);
    auto measure = [&](const std::vector<std::string>& cells) {
      for (std::size_t j = 0; j < cells.size() && j < width.size(); ++j) width[j] = std::max(width[j], cells[j].size());
    };
    measure(t.header);
    for (const auto& row : t.rows) measure(row);
    auto line = [&](const std::vector<std::string>& cells) {
      std::string s;
      for (std::size_t j = 0; j < cells.size() && j < width.size(); ++j) {
        s += cells[j];
        if (j + 1 < cells.size()) s += std::string(width[j] - cells[j].size() + 2, ' ');
      }
      while (!s.empty() && s.back() == ' ') s.pop_back();
      out << "  " << s << '\n';
    };
    line(t.header);
    for (const auto& row : t.rows) line(row);
    out << '\n';
  }
  if (r.passed()) {
    out << "status: passed\n";
  } else {
    out << "status: FAILED\n";
    for (const auto& f : r.failures) out << "  - " << f << '\n';
  }
  return out.str();
}

std::string render(Report& r, const std::string& format) {
  Json failures = Json::array();
  for (const auto& f : r.failures) failures.push_back(f);
  r.json["failures"] = failures;
  r.json["passed"] = r.passed();
  if (format == "csv") return render_csv(r);
  if (format == "text") return render_text(r);
  return r.json.dump(2) + "\n";
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact homological algebra for finite groups, monomial groups and Bloch groups of finite fields.",
               "homalg"};
  app.fallthrough();
  app.require_subcommand(1);

  std::string format = "json";
  std::string output;
  std::string cache_dir;
  bool no_cache = false;
  Settings settings;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--output", output, "Write the report to this file instead of stdout");
  app.add_option("--cache-dir", cache_dir, "Cache directory (default: $HOMALG_CACHE_DIR or ~/.cache/homalg)");
  app.add_flag("--no-cache", no_cache, "Disable the on-disk cache");
  auto* budget_opt = app.add_option("--budget", settings.budget, "Size budget for bar complexes or presentations");
  app.add_option("--jobs", settings.jobs, "Worker threads for parameter sweeps")->check(CLI::Range(1, 256));

  std::function<Report()> action;
  std::string command_name;

  auto* homology = app.add_subcommand("homology", "Group homology from the bar complex");
  homology->require_subcommand(1);
  std::size_t n = 0, m = 0, max_degree = 3, max_n = 12, max_p = 3, q = 0;
  std::string group_name;
  auto* h_cyc = homology->add_subcommand("cyclic", "H_i(Z/n) against the closed form");
  h_cyc->add_option("--n", n, "Order")->required();
  h_cyc->add_option("--max-degree", max_degree, "Highest degree")->capture_default_str();
  h_cyc->callback([&] { action = [&] { return homology_cyclic(n, max_degree, settings); }; });
  auto* h_prod = homology->add_subcommand("product", "H_i(Z/n x Z/m) against the Kunneth formula");
  h_prod->add_option("--n", n, "First order")->required();
  h_prod->add_option("--m", m, "Second order")->required();
  h_prod->add_option("--max-degree", max_degree, "Highest degree")->capture_default_str();
  h_prod->callback([&] { action = [&] { return homology_product(n, m, max_degree, settings); }; });
  auto* h_group = homology->add_subcommand("group", "H_i of a named group (Z/n, S3, Dk, Q8, GM2(n), AxB)");
  h_group->add_option("--name", group_name, "Group name")->required();
  h_group->add_option("--max-degree", max_degree, "Highest degree")->capture_default_str();
  h_group->callback([&] { action = [&] { return homology_group(group_name, max_degree, settings); }; });

  auto* ext_cmd = app.add_subcommand("ext-table", "Ext(Z/2,Z/n), Ext(Z/n,Z/2) and cyclic extensions");
  ext_cmd->add_option("--max-n", max_n, "Largest n")->capture_default_str();
  ext_cmd->callback([&] { action = [&] { return ext_table(max_n, settings); }; });

  auto* e2_cmd = app.add_subcommand("e2", "E^2 page of the swap extension of the torus in GM2(n)");
  e2_cmd->add_option("--n", n, "Order of the roots of unity")->required();
  e2_cmd->add_option("--max-p", max_p, "Largest p")->capture_default_str();
  e2_cmd->callback([&] { action = [&] { return e2_table({n}, max_p, settings); }; });

  bool verify_bar = false;
  auto* kun_cmd = app.add_subcommand("kunneth", "Kunneth decomposition of H_3(Z/n x Z/n)");
  kun_cmd->add_option("--n", n, "Order")->required();
  kun_cmd->add_flag("--verify-bar", verify_bar, "Also compute H_3 from the bar complex");
  kun_cmd->callback([&] { action = [&] { return kunneth(n, verify_bar, settings); }; });

  auto* bloch_cmd = app.add_subcommand("bloch", "Pre-Bloch and Bloch groups of F_q and the four-term sequence");
  bloch_cmd->add_option("--q", q, "Field size (prime power)")->required();
  bloch_cmd->callback([&] { action = [&] { return bloch(q, settings); }; });

  auto* witness = app.add_subcommand("witness", "Explicit chains in the bar complex of GM2(n)");
  witness->require_subcommand(1);
  std::vector<std::size_t> ns;
  bool swapped = false;
  auto* w_verify = witness->add_subcommand("verify", "Check the boundary identities");
  w_verify->add_option("--n", ns, "Even n (several allowed)")->required();
  w_verify->add_flag("--swapped-middle-term", swapped,
                     "Use (xi,1) as the first entry of the third symbol of the middle term");
  w_verify->callback([&] { action = [&] { return witness_verify(ns, swapped, settings); }; });
  std::size_t class_n = 2;
  auto* w_classes = witness->add_subcommand("classes", "Homology classes of omega and chi");
  w_classes->add_option("--n", class_n, "Even n")->capture_default_str();
  w_classes->callback([&] { action = [&] { return witness_classes(class_n, settings); }; });

  auto* report = app.add_subcommand("report", "Combined reports");
  report->require_subcommand(1);
  auto* tables = report->add_subcommand("paper-tables", "Ext table, E^2 table and identity checklist");
  tables->callback([&] { action = [&] { return paper_tables(settings); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }
  settings.budget_given = budget_opt->count() > 0;
  for (const auto* sub : app.get_subcommands()) {
    command_name = sub->get_name();
    for (const auto* leaf : sub->get_subcommands()) command_name += " " + leaf->get_name();
  }

  if (!no_cache) {
    try {
      set_active_cache(std::make_shared<DiskCache>(
          cache_dir.empty() ? default_cache_dir() : std::filesystem::path(cache_dir), &err));
    } catch (const std::exception& e) {
      err << "homalg: warning: cache disabled (" << e.what() << ")\n";
      set_active_cache(nullptr);
    }
  } else {
    set_active_cache(nullptr);
  }

  Report result;
  int status = kPassed;
  try {
    result = action();
    status = result.passed() ? kPassed : kFailed;
  } catch (const UsageError& e) {
    err << "homalg: " << e.what() << "\n";
    return kUsage;
  } catch (const OddOrder& e) {
    err << "homalg: " << e.what() << "\n";
    return kUsage;
  } catch (const DegreeOutOfRange& e) {
    err << "homalg: " << e.what() << "\n";
    return kUsage;
  } catch (const BudgetExceeded& e) {
    result = Report{};
    result.json = Json{{"command", command_name},
                       {"error", "budget_exceeded"},
                       {"message", e.what()},
                       {"requested", e.requested()},
                       {"budget", e.budget()}};
    result.failures.push_back(std::string("budget exceeded: ") + e.what() + " (raise --budget to proceed)");
    status = kFailed;
  } catch (const Error& e) {
    err << "homalg: " << e.what() << "\n";
    return kFailed;
  }

  const std::string text = render(result, format);
  if (output.empty()) {
    out << text;
  } else {
    std::ofstream file(output, std::ios::binary | std::ios::trunc);
    file << text;
    if (!file) {
      err << "homalg: cannot write " << output << "\n";
      return kUsage;
    }
  }
  if (status == kFailed) {
    for (const auto& f : result.failures) err << "homalg: verification failed: " << f << "\n";
  }
  set_active_cache(nullptr);
  return status;
}

}  // namespace homalg::cli
