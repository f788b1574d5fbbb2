#include "betaperm/beta_tree.hpp"
#include "betaperm/bijection.hpp"
#include "betaperm/distribution.hpp"
#include "betaperm/enumeration.hpp"
#include "betaperm/error.hpp"
#include "betaperm/permutation.hpp"
#include "betaperm/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace betaperm;

namespace {

enum class Format { lines, csv, json };

struct Options {
  Format format = Format::lines;
  std::string out;
};

using Row = std::vector<std::pair<std::string, int>>;

void emit_row(std::ostream& os, Format format, const Row& row) {
  switch (format) {
  case Format::lines:
    for (const auto& [name, value] : row) os << name << ' ' << value << '\n';
    break;
  case Format::csv: {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i].first;
    os << '\n';
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i].second;
    os << '\n';
    break;
  }
  case Format::json: {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [name, value] : row) j[name] = value;
    os << j.dump() << '\n';
    break;
  }
  }
}

void emit_value(std::ostream& os, Format format, std::string_view key, const std::string& value) {
  if (format == Format::json)
    os << nlohmann::json{{key, value}}.dump() << '\n';
  else
    os << value << '\n';
}

Row perm_row(const Permutation& p) {
  const auto s = perm_stats(p);
  Row row;
  for (auto name : perm_stat_names()) row.emplace_back(std::string(name), perm_stat(s, name));
  return row;
}

Row tree_row(const BetaTree& t) {
  const auto s = tree_stats(t);
  Row row;
  for (auto name : tree_stat_names()) row.emplace_back(std::string(name), tree_stat(s, name));
  return row;
}

template <typename Range>
void emit_objects(std::ostream& os, Format format, std::string_view family, int size, const Range& objects,
                  bool count_only) {
  const auto count = objects.size();
  if (count_only) {
    if (format == Format::json)
      os << nlohmann::json{{"family", family}, {"size", size}, {"count", count}}.dump() << '\n';
    else
      os << count << '\n';
    return;
  }
  if (format == Format::json) {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& o : objects) list.push_back(to_string(o));
    os << nlohmann::json{{"family", family}, {"size", size}, {"count", count}, {"objects", list}}.dump()
       << '\n';
    return;
  }
  if (format == Format::csv) os << "object\n";
  for (const auto& o : objects) os << to_string(o) << '\n';
}

std::string joint_csv(const ConjectureReport& r) {
  std::string out;
  for (const auto& name : r.avoiders.schema) out += name + ",";
  out += "avoiders,two_stack_sortable\n";
  std::map<std::vector<int>, std::pair<std::uint64_t, std::uint64_t>> joint;
  for (const auto& [k, c] : r.avoiders.rows) joint[k].first = c;
  for (const auto& [k, c] : r.sortable.rows) joint[k].second = c;
  for (const auto& [k, c] : joint) {
    for (int v : k) out += std::to_string(v) + ",";
    out += std::to_string(c.first) + "," + std::to_string(c.second) + "\n";
  }
  return out;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Trees, pattern-avoiding permutations and the bijections between them"};
  app.require_subcommand(1);
  Options opt;
  const std::map<std::string, Format> formats{
      {"lines", Format::lines}, {"csv", Format::csv}, {"json", Format::json}};
  app.add_option("--format", opt.format, "Output format: lines, csv or json")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
      ->capture_default_str();
  app.add_option("--out", opt.out, "Write output to FILE instead of stdout");

  std::ostringstream os;
  int status = 0;

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "List avoiders or trees of a given size");
  enumerate->require_subcommand(1);
  int length = 0;
  int edges = 0;
  bool count_only = false;
  auto* en_av = enumerate->add_subcommand("avoiders", "Avoiders of length N");
  en_av->add_option("--n", length, "Length")->required()->check(CLI::Range(0, kMaxScanLength));
  en_av->add_flag("--count-only", count_only, "Print only the number of objects");
  en_av->callback([&] {
    emit_objects(os, opt.format, "avoiders", length, gen_avoiders(length), count_only);
  });
  auto* en_tr = enumerate->add_subcommand("trees", "Trees with N edges");
  en_tr->add_option("--edges", edges, "Edge count")->required()->check(CLI::Range(0, kMaxScanLength));
  en_tr->add_flag("--count-only", count_only, "Print only the number of objects");
  en_tr->callback([&] { emit_objects(os, opt.format, "trees", edges, gen_trees(edges), count_only); });

  // map
  auto* map = app.add_subcommand("map", "Apply the tree/permutation bijection");
  map->require_subcommand(1);
  std::string input;
  auto* t2p = map->add_subcommand("tree-to-perm", "Tree to avoider");
  t2p->add_option("tree", input, "Tree, e.g. \"(2 (1) (1))\"")->required();
  t2p->callback([&] { emit_value(os, opt.format, "perm", to_string(tree_to_perm(parse_tree(input)))); });
  auto* p2t = map->add_subcommand("perm-to-tree", "Avoider to tree");
  p2t->add_option("perm", input, "Permutation, e.g. \"2 1 3\"")->required();
  p2t->callback(
      [&] { emit_value(os, opt.format, "tree", to_string(perm_to_tree(parse_permutation(input)))); });

  // stats
  auto* stats = app.add_subcommand("stats", "Statistics of one object");
  stats->require_subcommand(1);
  auto* st_p = stats->add_subcommand("perm", "Permutation statistics");
  st_p->add_option("perm", input, "Permutation")->required();
  st_p->callback([&] { emit_row(os, opt.format, perm_row(parse_permutation(input))); });
  auto* st_t = stats->add_subcommand("tree", "Tree statistics");
  st_t->add_option("tree", input, "Tree")->required();
  st_t->callback([&] { emit_row(os, opt.format, tree_row(parse_tree(input))); });

  // apply
  auto* apply_cmd = app.add_subcommand("apply", "Apply one of the maps");
  std::string map_name;
  int index = 1;
  apply_cmd->add_option("map", map_name, "psi, psi-inv, phi, theta, h or mirror")
      ->required()
      ->check(CLI::IsMember({"psi", "psi-inv", "phi", "theta", "h", "mirror"}));
  apply_cmd->add_option("object", input, "Permutation or tree")->required();
  apply_cmd->add_option("--i", index, "Index for phi")->capture_default_str();
  apply_cmd->callback([&] {
    std::string result;
    if (map_name == "psi") result = to_string(psi(parse_permutation(input)));
    else if (map_name == "psi-inv") result = to_string(psi_inv(parse_permutation(input)));
    else if (map_name == "phi") result = to_string(phi(index, parse_permutation(input)));
    else if (map_name == "theta") result = to_string(theta(parse_permutation(input)));
    else if (map_name == "h") result = to_string(involution_h(parse_tree(input)));
    else result = to_string(mirror(parse_tree(input)));
    emit_value(os, opt.format, "result", result);
  });

  // distribution
  auto* dist = app.add_subcommand("distribution", "Joint distribution of statistics over a family");
  std::string family = "avoiders";
  std::string stat_list;
  int size = 0;
  std::optional<int> class_k;
  bool indecomposable_only = false;
  dist->add_option("--family", family, "avoiders, trees, all-perms or two-stack-sortable")
      ->capture_default_str();
  dist->add_option("--n", size, "Length, or edges for trees")->required();
  dist->add_option("--stats", stat_list, "Comma-separated statistic names")->required();
  dist->add_option("--k", class_k, "Keep objects with k left-to-right maxima (root label k)");
  dist->add_flag("--indecomposable", indecomposable_only, "Keep indecomposable objects only");
  dist->callback([&] {
    EnumerationDomain domain{parse_family(family), size, class_k, indecomposable_only};
    const auto table = distribution(domain, parse_stat_list(stat_list));
    os << (opt.format == Format::json ? to_json(table) + "\n" : to_csv(table));
  });

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Exhaustively check a claim");
  std::string claim;
  std::optional<int> max_n;
  std::string claim_ids;
  for (const auto& c : claim_registry()) claim_ids += (claim_ids.empty() ? "" : ", ") + c.id;
  verify_cmd->add_option("claim", claim, "One of: " + claim_ids)->required();
  verify_cmd->add_option("--max-n", max_n, "Largest size to check (default 8)");
  verify_cmd->callback([&] {
    const auto report = verify(claim, max_n.value_or(8));
    os << (opt.format == Format::json ? to_json(report) : describe(report)) << '\n';
    if (!report.passed) status = 1;
  });

  // conjecture
  auto* conj = app.add_subcommand("conjecture", "Compare (comp,asc,ldr,rmax) on avoiders and two-stack-sortable permutations");
  int conj_n = 0;
  bool force = false;
  conj->add_option("--n", conj_n, "Length")->required();
  conj->add_flag("--force", force, "Allow n = " + std::to_string(kMaxScanLength));
  conj->callback([&] {
    const auto r = conjecture_check(conj_n, force);
    switch (opt.format) {
    case Format::json: os << to_json(r) << '\n'; break;
    case Format::csv: os << joint_csv(r); break;
    case Format::lines:
      os << "n=" << conj_n << ": " << (r.report.passed ? "equal" : "unequal") << " (avoiders "
         << r.avoiders.total() << ", two-stack-sortable " << r.sortable.total() << ", "
         << r.report.millis << " ms)\n";
      if (r.report.counterexample) os << "first difference at " << r.report.counterexample->object
                                      << ": " << r.report.counterexample->detail << '\n';
      os << "avoiders\n" << to_csv(r.avoiders) << "two-stack-sortable\n" << to_csv(r.sortable);
      break;
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }

  if (opt.out.empty()) {
    std::cout << os.str();
  } else {
    std::ofstream file(opt.out);
    if (!file) {
      std::cerr << "error: cannot write " << opt.out << '\n';
      return 2;
    }
    file << os.str();
  }
  return status;
}
