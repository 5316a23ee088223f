#include "commands.hpp"

#include <functional>
#include <future>
#include <sstream>

#include "homalg/abgroup.hpp"
#include "homalg/bar.hpp"
#include "homalg/bloch.hpp"
#include "homalg/cyclichom.hpp"
#include "homalg/errors.hpp"
#include "homalg/finite_field.hpp"
#include "homalg/groups.hpp"
#include "homalg/witness.hpp"
#include "usage_error.hpp"

namespace homalg::cli {

namespace {

Json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

Json group_json(const FgAbelianGroup& g) {
  Json factors = Json::array();
  for (const auto& d : g.invariant_factors()) factors.push_back(integer_json(d));
  return Json{{"invariant_factors", factors}, {"free_rank", g.free_rank()}};
}

std::string show(const FgAbelianGroup& g) { return g.to_string(); }
std::string yes_no(bool b) { return b ? "true" : "false"; }

std::uint64_t bar_budget(const Settings& s) { return s.budget_given ? s.budget : kDefaultBarBudget; }

// Runs f(0..count-1) on up to `jobs` threads; results stay in index order.
template <class T>
std::vector<T> parallel_map(std::size_t count, std::size_t jobs, const std::function<T(std::size_t)>& f) {
  std::vector<T> out;
  out.reserve(count);
  if (jobs <= 1) {
    for (std::size_t i = 0; i < count; ++i) out.push_back(f(i));
    return out;
  }
  for (std::size_t start = 0; start < count; start += jobs) {
    std::vector<std::future<T>> batch;
    for (std::size_t i = start; i < std::min(count, start + jobs); ++i) {
      batch.push_back(std::async(std::launch::async, f, i));
    }
    for (auto& fut : batch) out.push_back(fut.get());
  }
  return out;
}

FgAbelianGroup cyclic_group(std::size_t n) { return FgAbelianGroup::cyclic(Integer(static_cast<unsigned long>(n))); }

// Homology of Z/n x Z/m from the closed forms of the factors.
FgAbelianGroup kunneth_closed(std::size_t n, std::size_t m, std::size_t k) {
  FgAbelianGroup total;
  for (std::size_t i = 0; i <= k; ++i) {
    total = FgAbelianGroup::direct_sum(
        total, tensor(cyclic_homology_closed(n, i), cyclic_homology_closed(m, k - i)));
  }
  for (std::size_t i = 0; k >= 1 && i <= k - 1; ++i) {
    total = FgAbelianGroup::direct_sum(
        total, tor(cyclic_homology_closed(n, i), cyclic_homology_closed(m, k - 1 - i)));
  }
  return total;
}

FiniteGroup dihedral(std::size_t k) {
  std::vector<std::string> labels;
  for (std::size_t e = 0; e < 2; ++e) {
    for (std::size_t r = 0; r < k; ++r) labels.push_back("r^" + std::to_string(r) + (e ? "s" : ""));
  }
  auto law = [k](Element x, Element y) {
    const std::size_t e1 = x / k, r1 = x % k, e2 = y / k, r2 = y % k;
    const std::size_t r = (r1 + (e1 ? k - r2 : r2)) % k;
    return static_cast<Element>(((e1 ^ e2) * k) + r);
  };
  return FiniteGroup::from_law(2 * k, law, std::move(labels), "D" + std::to_string(k));
}

FiniteGroup quaternion8() {
  // index 2u + sign, u in {1, i, j, k}
  static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  auto law = [](Element x, Element y) {
    const int u = x / 2, v = y / 2;
    return static_cast<Element>(2 * unit[u][v] + ((x % 2) ^ (y % 2) ^ sign[u][v]));
  };
  return FiniteGroup::from_law(8, law, {"1", "-1", "i", "-i", "j", "-j", "k", "-k"}, "Q8");
}

std::size_t parse_size(const std::string& text, const std::string& what) {
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(text, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != text.size() || v == 0) throw UsageError("bad " + what + " in group name: " + text);
  return v;
}

FiniteGroup named_group(const std::string& name) {
  if (auto x = name.find('x'); x != std::string::npos) {
    return product(named_group(name.substr(0, x)), named_group(name.substr(x + 1)));
  }
  if (name.rfind("Z/", 0) == 0) return cyclic(parse_size(name.substr(2), "order"));
  if (name == "S3") return dihedral(3);
  if (name == "Q8") return quaternion8();
  if (name.size() > 1 && name[0] == 'D') return dihedral(parse_size(name.substr(1), "dihedral index"));
  if (name.rfind("GM2(", 0) == 0 && name.back() == ')') {
    return gm2(parse_size(name.substr(4, name.size() - 5), "monomial index")).group;
  }
  throw UsageError("unknown group '" + name + "' (expected Z/n, S3, Dk, Q8, GM2(n) or AxB)");
}

Report group_homology_report(const FiniteGroup& g, std::size_t max_degree, const Settings& s,
                             const std::function<std::optional<FgAbelianGroup>(std::size_t)>& closed,
                             Json params) {
  ChainComplex c = bar_complex(g, max_degree + 1, bar_budget(s));
  Report r;
  Table t{"homology", {"degree", "bar", "closed_form", "match"}, {}};
  Json degrees = Json::array();
  for (std::size_t i = 0; i <= max_degree; ++i) {
    FgAbelianGroup h = homology(c, static_cast<int>(i));
    Json entry{{"degree", i}, {"group", group_json(h)}, {"display", show(h)}};
    std::optional<FgAbelianGroup> expected = closed(i);
    if (expected) {
      const bool match = h.isomorphic_to(*expected);
      entry["closed_form"] = group_json(*expected);
      entry["match"] = match;
      if (!match) r.failures.push_back("H_" + std::to_string(i) + ": bar " + show(h) + " vs closed form " + show(*expected));
      t.rows.push_back({std::to_string(i), show(h), show(*expected), yes_no(match)});
    } else {
      t.rows.push_back({std::to_string(i), show(h), "", ""});
    }
    degrees.push_back(entry);
  }
  r.json = std::move(params);
  r.json["group_order"] = g.order();
  r.json["degrees"] = degrees;
  r.tables.push_back(std::move(t));
  return r;
}

}  // namespace

Report homology_cyclic(std::size_t n, std::size_t max_degree, const Settings& s) {
  if (n == 0) throw UsageError("--n must be positive");
  return group_homology_report(
      cyclic(n), max_degree, s, [n](std::size_t i) { return std::optional(cyclic_homology_closed(n, i)); },
      Json{{"command", "homology cyclic"}, {"n", n}, {"max_degree", max_degree}});
}

Report homology_product(std::size_t n, std::size_t m, std::size_t max_degree, const Settings& s) {
  if (n == 0 || m == 0) throw UsageError("--n and --m must be positive");
  return group_homology_report(
      product(cyclic(n), cyclic(m)), max_degree, s,
      [n, m](std::size_t i) { return std::optional(kunneth_closed(n, m, i)); },
      Json{{"command", "homology product"}, {"n", n}, {"m", m}, {"max_degree", max_degree}});
}

Report homology_group(const std::string& name, std::size_t max_degree, const Settings& s) {
  FiniteGroup g;
  try {
    g = named_group(name);
  } catch (const InvalidGroup& e) {
    throw UsageError(e.what());
  }
  return group_homology_report(
      g, max_degree, s, [](std::size_t) { return std::optional<FgAbelianGroup>(); },
      Json{{"command", "homology group"}, {"group", name}, {"max_degree", max_degree}});
}

Report ext_table(std::size_t max_n, const Settings& s) {
  if (max_n == 0) throw UsageError("--max-n must be positive");
  struct Row {
    Json json;
    std::vector<std::string> cells;
    std::vector<std::string> failures;
  };
  const FgAbelianGroup z2 = cyclic_group(2);
  auto compute = [&](std::size_t i) {
    const std::size_t n = i + 1;
    const FgAbelianGroup zn = cyclic_group(n);
    const FgAbelianGroup cyclic_total = cyclic_group(2 * n);
    const FgAbelianGroup expected = n % 2 == 0 ? z2 : FgAbelianGroup();
    const FgAbelianGroup e1 = ext(z2, zn);
    const FgAbelianGroup e2 = ext(zn, z2);
    Row row;
    auto nonsplit = [&](const FgAbelianGroup& kernel, const FgAbelianGroup& quotient, std::size_t& cyclic_count) {
      std::size_t count = 0;
      cyclic_count = 0;
      for (const auto& c : classify_extensions(kernel, quotient)) {
        if (c.split) continue;
        ++count;
        if (c.datum.total.isomorphic_to(cyclic_total)) ++cyclic_count;
      }
      return count;
    };
    std::size_t cyc1 = 0, cyc2 = 0;
    const std::size_t ns1 = nonsplit(zn, z2, cyc1);
    const std::size_t ns2 = nonsplit(z2, zn, cyc2);
    const std::size_t want = n % 2 == 0 ? 1 : 0;
    const bool ok1 = e1.isomorphic_to(expected), ok2 = e2.isomorphic_to(expected);
    const bool ok3 = ns1 == want && cyc1 == want && ns2 == want && cyc2 == want;
    if (!ok1) row.failures.push_back("Ext(Z/2, Z/" + std::to_string(n) + ") = " + show(e1));
    if (!ok2) row.failures.push_back("Ext(Z/" + std::to_string(n) + ", Z/2) = " + show(e2));
    if (!ok3) row.failures.push_back("non-split extensions for n = " + std::to_string(n));
    row.json = Json{{"n", n},
                    {"ext_z2_zn", group_json(e1)},
                    {"ext_zn_z2", group_json(e2)},
                    {"expected", group_json(expected)},
                    {"nonsplit_zn_by_z2", ns1},
                    {"nonsplit_zn_by_z2_cyclic", cyc1},
                    {"nonsplit_z2_by_zn", ns2},
                    {"nonsplit_z2_by_zn_cyclic", cyc2},
                    {"match", ok1 && ok2 && ok3}};
    row.cells = {std::to_string(n), show(e1), show(e2), show(expected), std::to_string(ns1),
                 std::to_string(cyc1), std::to_string(ns2), std::to_string(cyc2), yes_no(ok1 && ok2 && ok3)};
    return row;
  };
  auto rows = parallel_map<Row>(max_n, s.jobs, compute);
  Report r;
  Table t{"ext_table",
          {"n", "ext(Z/2,Z/n)", "ext(Z/n,Z/2)", "expected", "nonsplit_quotient_z2", "cyclic_quotient_z2",
           "nonsplit_quotient_zn", "cyclic_quotient_zn", "match"},
          {}};
  Json arr = Json::array();
  for (auto& row : rows) {
    arr.push_back(row.json);
    t.rows.push_back(row.cells);
    r.failures.insert(r.failures.end(), row.failures.begin(), row.failures.end());
  }
  r.json = Json{{"command", "ext-table"}, {"max_n", max_n}, {"rows", arr}};
  r.tables.push_back(std::move(t));
  return r;
}

Report e2_table(const std::vector<std::size_t>& ns, std::size_t max_p, const Settings& s) {
  struct Block {
    Json json;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> failures;
  };
  auto compute = [&](std::size_t idx) {
    const std::size_t n = ns[idx];
    if (n == 0) throw UsageError("--n must be positive");
    Block b;
    Json entries = Json::array();
    for (std::size_t q = 0; q <= 2; ++q) {
      for (std::size_t p = 0; p <= max_p; ++p) {
        FgAbelianGroup e = e2_page_gm2(n, p, q);
        std::optional<FgAbelianGroup> expected;
        if (q == 0) {
          expected = p == 0 ? FgAbelianGroup::free(1) : (p % 2 ? cyclic_group(2) : FgAbelianGroup());
        } else if (q == 1) {
          expected = p == 0 ? cyclic_group(n) : FgAbelianGroup();
        } else if (p == 1) {
          expected = n % 2 == 0 ? cyclic_group(2) : FgAbelianGroup();
        }
        Json entry{{"p", p}, {"q", q}, {"group", group_json(e)}, {"display", show(e)}};
        std::vector<std::string> cells{std::to_string(n), std::to_string(p), std::to_string(q), show(e)};
        if (expected) {
          const bool ok = e.isomorphic_to(*expected);
          entry["expected"] = group_json(*expected);
          entry["match"] = ok;
          cells.push_back(show(*expected));
          cells.push_back(yes_no(ok));
          if (!ok) {
            b.failures.push_back("E2_{" + std::to_string(p) + "," + std::to_string(q) + "} for n = " +
                                 std::to_string(n) + " is " + show(e) + ", expected " + show(*expected));
          }
        } else {
          entry["expected"] = nullptr;
          cells.push_back("");
          cells.push_back("");
        }
        entries.push_back(entry);
        b.rows.push_back(cells);
      }
    }
    b.json = Json{{"n", n}, {"entries", entries}};
    return b;
  };
  auto blocks = parallel_map<Block>(ns.size(), s.jobs, compute);
  Report r;
  Table t{"e2_page", {"n", "p", "q", "group", "expected", "match"}, {}};
  Json arr = Json::array();
  for (auto& b : blocks) {
    arr.push_back(b.json);
    t.rows.insert(t.rows.end(), b.rows.begin(), b.rows.end());
    r.failures.insert(r.failures.end(), b.failures.begin(), b.failures.end());
  }
  r.json = Json{{"command", "e2"}, {"max_p", max_p}, {"pages", arr}};
  r.tables.push_back(std::move(t));
  return r;
}

Report kunneth(std::size_t n, bool verify_bar, const Settings& s) {
  if (n == 0) throw UsageError("--n must be positive");
  KunnethH3 k = kunneth_h3_t2(n);
  const FgAbelianGroup total = k.total();
  Report r;
  r.json = Json{{"command", "kunneth"},
                {"n", n},
                {"H3_H0", group_json(k.h3_h0)},
                {"H0_H3", group_json(k.h0_h3)},
                {"H1_H2", group_json(k.h1_h2)},
                {"H2_H1", group_json(k.h2_h1)},
                {"tensor_part", group_json(k.tensor_part())},
                {"tor", group_json(k.tor)},
                {"total", group_json(total)}};
  Table t{"kunneth", {"summand", "group"}, {}};
  t.rows = {{"H3(x)H0", show(k.h3_h0)}, {"H0(x)H3", show(k.h0_h3)}, {"H1(x)H2", show(k.h1_h2)},
            {"H2(x)H1", show(k.h2_h1)}, {"tensor_part", show(k.tensor_part())}, {"tor", show(k.tor)},
            {"total", show(total)}};
  if (verify_bar) {
    FgAbelianGroup bar = group_homology(product(cyclic(n), cyclic(n)), 3, bar_budget(s));
    const bool ok = bar.isomorphic_to(total);
    r.json["bar_H3"] = group_json(bar);
    r.json["bar_match"] = ok;
    t.rows.push_back({"bar_H3", show(bar)});
    if (!ok) r.failures.push_back("bar complex H3 is " + show(bar) + ", Kunneth total " + show(total));
  }
  r.tables.push_back(std::move(t));
  return r;
}

Report bloch(std::size_t q, const Settings& s) {
  std::optional<FiniteField> field;
  try {
    field.emplace(q);
  } catch (const InvalidField& e) {
    throw UsageError(e.what());
  }
  const FiniteField& f = *field;
  const std::uint64_t budget = s.budget_given ? s.budget : kDefaultRelatorBudget;
  Report r;

  FourTermReport four = verify_four_term(f, budget);
  std::size_t pairs = 0, failed_pairs = 0;
  for (FieldElement a = 0; a < q; ++a) {
    for (FieldElement b = 0; b < q; ++b) {
      if (!is_admissible(f, a, b)) continue;
      ++pairs;
      if (!lambda_prime_relator_check(f, a, b)) ++failed_pairs;
    }
  }
  bool presentations_agree = true;
  FgAbelianGroup k2 = four.k2;
  try {
    MilnorK2 k = milnor_k2(f);
    k2 = k.from_tensor.group;
  } catch (const PresentationMismatch& e) {
    presentations_agree = false;
    r.failures.push_back(std::string("K2 presentations disagree: ") + e.what());
  }
  TorTilde tt = tor_tilde(f);
  const FgAbelianGroup tt_expected = cyclic_group(q % 2 ? 2 * (q - 1) : q - 1);
  const bool tt_ok = tt.group.isomorphic_to(tt_expected);

  const char* nodes[4] = {"B", "P", "tensor_sigma", "K2M"};
  Json exact = Json::object();
  for (int i = 0; i < 4; ++i) {
    exact[nodes[i]] = four.exact[i];
    if (!four.exact[i]) r.failures.push_back(std::string("four-term sequence not exact at ") + nodes[i]);
  }
  if (failed_pairs) r.failures.push_back(std::to_string(failed_pairs) + " admissible pairs fail the lambda' relator identity");
  if (!k2.is_trivial()) r.failures.push_back("K2M is " + show(k2) + ", expected 0");
  if (!tt_ok) r.failures.push_back("tor_tilde is " + show(tt.group) + ", expected " + show(tt_expected));

  r.json = Json{{"command", "bloch"},
                {"q", q},
                {"P", group_json(four.pre_bloch)},
                {"B", group_json(four.bloch)},
                {"K2M", group_json(k2)},
                {"tor_tilde", group_json(tt.group)},
                {"exact", exact},
                {"tensor_sigma", group_json(four.tensor_sigma)},
                {"lambda_image", group_json(four.lambda_image)},
                {"K2M_presentations_agree", presentations_agree},
                {"lambda_prime", Json{{"admissible_pairs", pairs}, {"failures", failed_pairs}}},
                {"tor", group_json(tt.tor)},
                {"tor_tilde_expected", group_json(tt_expected)}};
  Table t{"bloch", {"quantity", "value"}, {}};
  t.rows = {{"q", std::to_string(q)},
            {"P", show(four.pre_bloch)},
            {"B", show(four.bloch)},
            {"tensor_sigma", show(four.tensor_sigma)},
            {"lambda_image", show(four.lambda_image)},
            {"K2M", show(k2)},
            {"tor_tilde", show(tt.group)},
            {"exact_at_B", yes_no(four.exact[0])},
            {"exact_at_P", yes_no(four.exact[1])},
            {"exact_at_tensor_sigma", yes_no(four.exact[2])},
            {"exact_at_K2M", yes_no(four.exact[3])},
            {"lambda_prime_pairs", std::to_string(pairs)},
            {"lambda_prime_failures", std::to_string(failed_pairs)}};
  r.tables.push_back(std::move(t));
  return r;
}

Report witness_verify(const std::vector<std::size_t>& ns, bool swapped_middle_term, const Settings& s) {
  for (std::size_t n : ns) {
    if (n == 0 || n % 2) throw UsageError("witness verify needs even n, got " + std::to_string(n));
    if (n > 64) throw UsageError("witness verify supports n <= 64");
  }
  const MiddleTermForm form = swapped_middle_term ? MiddleTermForm::swapped_entry : MiddleTermForm::middle_summand;
  auto reports = parallel_map<WitnessReport>(
      ns.size(), s.jobs, [&](std::size_t i) { return verify_identities(CyclotomicContext(ns[i]), form); });
  Report r;
  Table t{"identities", {"n", "identity", "statement", "holds", "residual_terms"}, {}};
  Json arr = Json::array();
  for (const auto& w : reports) {
    Json ids = Json::array();
    auto add = [&](const IdentityCheck& c) {
      ids.push_back(Json{{"name", c.name},
                         {"statement", c.statement},
                         {"holds", c.holds},
                         {"residual_terms", c.residual.size()}});
      t.rows.push_back({std::to_string(w.n), c.name, c.statement, yes_no(c.holds), std::to_string(c.residual.size())});
      if (!c.holds) {
        r.failures.push_back(c.name + " fails for n = " + std::to_string(w.n) + " (" +
                             std::to_string(c.residual.size()) + " residual terms)");
      }
    };
    for (const auto& c : w.identities) add(c);
    add(w.decomposition);
    t.rows.push_back({std::to_string(w.n), "omega_cycle", "d(omega) = 0", yes_no(w.omega_is_cycle), ""});
    if (!w.omega_is_cycle) r.failures.push_back("omega is not a cycle for n = " + std::to_string(w.n));
    arr.push_back(Json{{"n", w.n}, {"identities", ids}, {"omega_is_cycle", w.omega_is_cycle}, {"all_hold", w.all_hold()}});
  }
  r.json = Json{{"command", "witness verify"},
                {"middle_term", swapped_middle_term ? "swapped" : "summand"},
                {"results", arr}};
  r.tables.push_back(std::move(t));
  return r;
}

Report witness_classes(std::size_t n, const Settings& s) {
  if (n == 0 || n % 2) throw UsageError("witness classes needs even n, got " + std::to_string(n));
  if (n > 64) throw UsageError("witness classes supports n <= 64");
  CyclotomicContext ctx(n);
  ResolvedClasses c = resolve_classes(ctx, s.budget_given ? s.budget : kClassBudget);
  auto class_json = [](const CycleClass& k) {
    Json coords = Json::array(), moduli = Json::array();
    for (const auto& v : k.coordinates) coords.push_back(integer_json(v));
    for (const auto& v : k.moduli) moduli.push_back(integer_json(v));
    return Json{{"coordinates", coords}, {"moduli", moduli}, {"order", integer_json(k.order)}};
  };
  Report r;
  const bool order_ok = c.chi_torus.order == static_cast<long>(n);
  if (!c.twice_omega_is_chi) r.failures.push_back("2 class(omega) != class(chi) in H3(GM2)");
  if (!order_ok) r.failures.push_back("class(chi) in H3(T2) has order " + c.chi_torus.order.get_str());
  r.json = Json{{"command", "witness classes"},
                {"n", n},
                {"tor_generator", ctx.tor_label()},
                {"H3_GM2", group_json(c.h3_monomial)},
                {"H3_T2", group_json(c.h3_torus)},
                {"omega", class_json(c.omega)},
                {"chi", class_json(c.chi)},
                {"chi_in_T2", class_json(c.chi_torus)},
                {"twice_omega_equals_chi", c.twice_omega_is_chi},
                {"chi_order_in_T2", integer_json(c.chi_torus.order)},
                {"chi_nonzero_in_GM2", c.chi_nonzero_in_monomial}};
  Table t{"classes", {"quantity", "value"}, {}};
  t.rows = {{"H3(GM2)", show(c.h3_monomial)},
            {"H3(T2)", show(c.h3_torus)},
            {"class(omega)", c.omega.to_string()},
            {"class(chi)", c.chi.to_string()},
            {"class(chi) in H3(T2)", c.chi_torus.to_string()},
            {"2 class(omega) = class(chi)", yes_no(c.twice_omega_is_chi)},
            {"order of class(chi) in H3(T2)", c.chi_torus.order.get_str()},
            {"class(chi) nonzero in H3(GM2)", yes_no(c.chi_nonzero_in_monomial)}};
  r.tables.push_back(std::move(t));
  return r;
}

Report paper_tables(const Settings& s) {
  Report ext = ext_table(12, s);
  Report e2 = e2_table({2, 3, 4, 8}, 3, s);
  Report ids = witness_verify({2, 4, 8, 16}, false, s);
  Report r;
  r.json = Json{{"command", "report paper-tables"},
                {"ext_table", ext.json["rows"]},
                {"e2_page", e2.json["pages"]},
                {"identities", ids.json["results"]}};
  for (Report* part : {&ext, &e2, &ids}) {
    r.tables.insert(r.tables.end(), part->tables.begin(), part->tables.end());
    r.failures.insert(r.failures.end(), part->failures.begin(), part->failures.end());
  }
  return r;
}

}  // namespace homalg::cli
