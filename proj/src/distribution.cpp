#include "betaperm/distribution.hpp"

#include "betaperm/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <sstream>

namespace betaperm {

void DistributionTable::add(const std::vector<int>& key, std::uint64_t count) {
  if (key.size() != schema.size()) throw InvalidInput("key arity does not match the schema");
  if (count == 0) return;
  rows[key] += count;
}

std::uint64_t DistributionTable::total() const noexcept {
  std::uint64_t sum = 0;
  for (const auto& [key, count] : rows) sum += count;
  return sum;
}

const std::vector<std::string_view>& perm_stat_names() {
  static const std::vector<std::string_view> names{"comp", "asc",  "des", "lmin", "rmin",
                                                   "lmax", "rmax", "ldr", "lir"};
  return names;
}

const std::vector<std::string_view>& tree_stat_names() {
  static const std::vector<std::string_view> names{
      "leaves", "internal", "root", "sub",  "lpath", "rpath",
      "lsub",   "rsub",     "stem", "stemh", "stemhm"};
  return names;
}

int perm_stat(const PermStats& s, std::string_view name) {
  if (name == "comp") return s.comp;
  if (name == "asc") return s.asc;
  if (name == "des") return s.des;
  if (name == "lmin") return s.lmin;
  if (name == "rmin") return s.rmin;
  if (name == "lmax") return s.lmax;
  if (name == "rmax") return s.rmax;
  if (name == "ldr") return s.ldr;
  if (name == "lir") return s.lir;
  throw InvalidInput("unknown permutation statistic '" + std::string(name) + "'");
}

int tree_stat(const TreeStats& s, std::string_view name) {
  if (name == "leaves") return s.leaves;
  if (name == "internal") return s.internal;
  if (name == "root") return s.root;
  if (name == "sub") return s.sub;
  if (name == "lpath") return s.lpath;
  if (name == "rpath") return s.rpath;
  if (name == "lsub") return s.lsub;
  if (name == "rsub") return s.rsub;
  if (name == "stem") return s.stem;
  if (name == "stemh") return s.stemh;
  if (name == "stemhm") return s.stemhm;
  throw InvalidInput("unknown tree statistic '" + std::string(name) + "'");
}

std::vector<std::string> parse_stat_list(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto end = comma == std::string_view::npos ? text.size() : comma;
    std::string_view item = text.substr(start, end - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (item.empty()) throw InvalidInput("empty statistic name in list");
    out.emplace_back(item);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

namespace {

void check_names(const std::vector<std::string>& stats, const std::vector<std::string_view>& vocab,
                 std::string_view kind) {
  if (stats.empty()) throw InvalidInput("at least one statistic is required");
  for (const auto& s : stats)
    if (std::find(vocab.begin(), vocab.end(), s) == vocab.end())
      throw InvalidInput("unknown " + std::string(kind) + " statistic '" + s + "'");
}

std::vector<int> perm_key(const Permutation& p, const std::vector<std::string>& stats) {
  const PermStats s = perm_stats(p);
  std::vector<int> key;
  key.reserve(stats.size());
  for (const auto& name : stats) key.push_back(perm_stat(s, name));
  return key;
}

} // namespace

DistributionTable distribution(const EnumerationDomain& domain,
                               const std::vector<std::string>& stats) {
  DistributionTable table;
  table.schema = stats;
  if (is_tree_family(domain.kind)) {
    check_names(stats, tree_stat_names(), "tree");
    for_each_tree(domain, [&](const BetaTree& t) {
      const TreeStats s = tree_stats(t);
      std::vector<int> key;
      for (const auto& name : stats) key.push_back(tree_stat(s, name));
      table.add(key);
    });
  } else {
    check_names(stats, perm_stat_names(), "permutation");
    for_each_perm(domain, [&](const Permutation& p) { table.add(perm_key(p, stats)); });
  }
  return table;
}

DistributionTable distribution_of(std::span<const Permutation> family,
                                  const std::vector<std::string>& stats) {
  check_names(stats, perm_stat_names(), "permutation");
  DistributionTable table;
  table.schema = stats;
  for (const auto& p : family) table.add(perm_key(p, stats));
  return table;
}

std::optional<DistributionDiff> compare_distributions(const DistributionTable& a,
                                                      const DistributionTable& b) {
  if (a.schema.size() != b.schema.size())
    throw InvalidInput("cannot compare tables of arity " + std::to_string(a.schema.size()) +
                       " and " + std::to_string(b.schema.size()));
  auto ia = a.rows.begin();
  auto ib = b.rows.begin();
  while (ia != a.rows.end() || ib != b.rows.end()) {
    if (ib == b.rows.end() || (ia != a.rows.end() && ia->first < ib->first))
      return DistributionDiff{ia->first, ia->second, 0};
    if (ia == a.rows.end() || ib->first < ia->first)
      return DistributionDiff{ib->first, 0, ib->second};
    if (ia->second != ib->second) return DistributionDiff{ia->first, ia->second, ib->second};
    ++ia;
    ++ib;
  }
  return std::nullopt;
}

std::string to_csv(const DistributionTable& t) {
  std::string out;
  for (const auto& name : t.schema) out += name + ",";
  out += "count\n";
  for (const auto& [key, count] : t.rows) {
    for (int v : key) out += std::to_string(v) + ",";
    out += std::to_string(count) + "\n";
  }
  return out;
}

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    fields.push_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                       : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

template <typename Int>
Int parse_int(std::string_view field, std::size_t line) {
  Int value{};
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size())
    throw ParseError("bad integer '" + std::string(field) + "' in CSV line " + std::to_string(line), line);
  return value;
}

} // namespace

DistributionTable table_from_csv(std::string_view text) {
  DistributionTable t;
  std::size_t line_no = 0;
  bool header = true;
  std::size_t start = 0;
  while (start < text.size()) {
    auto nl = text.find('\n', start);
    std::string_view line = text.substr(start, nl == std::string_view::npos ? std::string_view::npos
                                                                            : nl - start);
    start = nl == std::string_view::npos ? text.size() : nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    auto fields = split_fields(line);
    if (header) {
      if (fields.size() < 2 || fields.back() != "count")
        throw ParseError("CSV header must end with a count column", line_no);
      for (std::size_t i = 0; i + 1 < fields.size(); ++i) t.schema.emplace_back(fields[i]);
      header = false;
      continue;
    }
    if (fields.size() != t.schema.size() + 1)
      throw ParseError("CSV row has the wrong number of fields", line_no);
    std::vector<int> key;
    for (std::size_t i = 0; i < t.schema.size(); ++i) key.push_back(parse_int<int>(fields[i], line_no));
    t.add(key, parse_int<std::uint64_t>(fields.back(), line_no));
  }
  if (header) throw ParseError("missing CSV header", 0);
  return t;
}

std::string to_json(const DistributionTable& t) {
  nlohmann::json j;
  j["schema"] = t.schema;
  j["rows"] = nlohmann::json::array();
  for (const auto& [key, count] : t.rows) j["rows"].push_back({{"key", key}, {"count", count}});
  j["total"] = t.total();
  return j.dump();
}

DistributionTable table_from_json(std::string_view text) {
  try {
    const auto j = nlohmann::json::parse(text);
    DistributionTable t;
    t.schema = j.at("schema").get<std::vector<std::string>>();
    for (const auto& row : j.at("rows"))
      t.add(row.at("key").get<std::vector<int>>(), row.at("count").get<std::uint64_t>());
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("bad distribution JSON: ") + e.what());
  }
}

} // namespace betaperm
