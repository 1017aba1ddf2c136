#include "eqg/families.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "eqg/errors.hpp"

namespace eqg {

namespace {

std::string power_label(const std::string& base, std::size_t k) {
  if (k == 0) return "";
  if (k == 1) return base;
  return base + "^" + std::to_string(k);
}

std::size_t parse_size(std::string_view text, std::string_view spec) {
  std::size_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || text.empty())
    throw SpecError("malformed group spec '" + std::string(spec) + "': expected a number, got '" + std::string(text) + "'");
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Splits on a standalone "x" or "*" token (product separator).
std::vector<std::string_view> split_factors(std::string_view spec) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i < spec.size(); ++i) {
    const char c = spec[i];
    const bool sep_char = c == '*' || c == 'x';
    if (!sep_char) continue;
    const bool left_ws = i > 0 && std::isspace(static_cast<unsigned char>(spec[i - 1]));
    const bool right_ws = i + 1 < spec.size() && std::isspace(static_cast<unsigned char>(spec[i + 1]));
    if (c == '*' || (left_ws && right_ws)) {
      parts.push_back(trim(spec.substr(start, i - start)));
      start = i + 1;
    }
  }
  parts.push_back(trim(spec.substr(start)));
  return parts;
}

FiniteGroup make_atom(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw SpecError("malformed group spec '" + std::string(spec) + "': missing ':'");
  const auto family = spec.substr(0, colon);
  const auto arg = spec.substr(colon + 1);
  if (family == "table") return load_group_file(std::filesystem::path(std::string(arg)));
  if (family == "cyclic") {
    const auto n = parse_size(arg, spec);
    if (n < 1) throw SpecError("cyclic:n requires n >= 1");
    return cyclic_group(n);
  }
  if (family == "dihedral") {
    const auto n = parse_size(arg, spec);
    if (n < 3) throw SpecError("dihedral:n requires n >= 3");
    return dihedral_group(n);
  }
  if (family == "dicyclic") {
    const auto n = parse_size(arg, spec);
    if (n < 2) throw SpecError("dicyclic:n requires n >= 2");
    return dicyclic_group(n);
  }
  if (family == "symmetric") {
    const auto n = parse_size(arg, spec);
    if (n < 1 || n > 5) throw SpecError("symmetric:n requires 1 <= n <= 5");
    return symmetric_group(n);
  }
  if (family == "elab") {
    const auto caret = arg.find('^');
    if (caret == std::string_view::npos) throw SpecError("elab spec must look like elab:p^k");
    const auto p = parse_size(arg.substr(0, caret), spec);
    const auto k = parse_size(arg.substr(caret + 1), spec);
    if (!is_prime(p) || k < 1) throw SpecError("elab:p^k requires a prime p and k >= 1");
    std::size_t order = 1;
    for (std::size_t i = 0; i < k; ++i) {
      order *= p;
      if (order > 4096) throw SpecError("elab group too large");
    }
    return elementary_abelian_group(p, k);
  }
  throw SpecError("unknown group family '" + std::string(family) + "'");
}

}  // namespace

FiniteGroup cyclic_group(std::size_t n) {
  std::vector<Element> table(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = i == 0 ? "e" : power_label("g", i);
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = static_cast<Element>((i + j) % n);
  }
  return FiniteGroup(FiniteGroup::Trusted{}, "cyclic:" + std::to_string(n), std::move(labels), std::move(table));
}

FiniteGroup dihedral_group(std::size_t n) {
  const auto order = 2 * n;
  std::vector<Element> table(order * order);
  std::vector<std::string> labels(order);
  for (std::size_t x = 0; x < order; ++x) {
    const auto a = x % n;
    const auto b = x / n;
    labels[x] = x == 0 ? "e" : power_label("r", a) + (b == 1 ? "s" : "");
    for (std::size_t y = 0; y < order; ++y) {
      const auto c = y % n;
      const auto d = y / n;
      // (r^a s^b)(r^c s^d) = r^(a + (-1)^b c) s^(b+d)
      const auto rot = b == 0 ? (a + c) % n : (a + n - c) % n;
      table[x * order + y] = static_cast<Element>(rot + n * ((b + d) % 2));
    }
  }
  return FiniteGroup(FiniteGroup::Trusted{}, "dihedral:" + std::to_string(n), std::move(labels), std::move(table));
}

FiniteGroup dicyclic_group(std::size_t n) {
  const auto m = 2 * n;  // order of a
  const auto order = 4 * n;
  std::vector<Element> table(order * order);
  std::vector<std::string> labels(order);
  for (std::size_t x = 0; x < order; ++x) {
    const auto i = x % m;
    const auto j = x / m;
    labels[x] = x == 0 ? "e" : power_label("a", i) + (j == 1 ? "x" : "");
    for (std::size_t y = 0; y < order; ++y) {
      const auto k = y % m;
      const auto l = y / m;
      std::size_t rot = 0;
      std::size_t xs = 0;
      if (j == 0) {
        rot = (i + k) % m;
        xs = l;
      } else if (l == 0) {
        // a^i x a^k = a^(i-k) x
        rot = (i + m - k) % m;
        xs = 1;
      } else {
        // a^i x a^k x = a^(i-k) x^2 = a^(i-k+n)
        rot = (i + m - k + n) % m;
        xs = 0;
      }
      table[x * order + y] = static_cast<Element>(rot + m * xs);
    }
  }
  return FiniteGroup(FiniteGroup::Trusted{}, "dicyclic:" + std::to_string(n), std::move(labels), std::move(table));
}

namespace {

std::string cycle_label(const std::vector<int>& perm) {
  const auto n = perm.size();
  std::vector<bool> seen(n, false);
  std::string out;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s] || perm[s] == static_cast<int>(s)) continue;
    out += "(";
    std::size_t x = s;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first) out += " ";
      out += std::to_string(x + 1);
      first = false;
      x = static_cast<std::size_t>(perm[x]);
    }
    out += ")";
  }
  return out.empty() ? "e" : out;
}

bool is_even(const std::vector<int>& perm) {
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inversions;
  return inversions % 2 == 0;
}

}  // namespace

FiniteGroup symmetric_group(std::size_t n) {
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  const auto order = perms.size();
  std::map<std::vector<int>, Element> index;
  for (std::size_t i = 0; i < order; ++i) index[perms[i]] = static_cast<Element>(i);

  std::vector<Element> table(order * order);
  std::vector<std::string> labels(order);
  std::vector<Element> even;
  std::vector<int> comp(n);
  for (std::size_t a = 0; a < order; ++a) {
    labels[a] = cycle_label(perms[a]);
    if (is_even(perms[a])) even.push_back(static_cast<Element>(a));
    for (std::size_t b = 0; b < order; ++b) {
      // (a * b)(i) = a(b(i))
      for (std::size_t i = 0; i < n; ++i) comp[i] = perms[a][static_cast<std::size_t>(perms[b][i])];
      table[a * order + b] = index.at(comp);
    }
  }
  return FiniteGroup(FiniteGroup::Trusted{}, "symmetric:" + std::to_string(n), std::move(labels), std::move(table))
      .with_anchor("alternating", std::move(even));
}

FiniteGroup elementary_abelian_group(std::size_t p, std::size_t k) {
  std::size_t order = 1;
  for (std::size_t i = 0; i < k; ++i) order *= p;
  auto digits = [&](std::size_t x) {
    std::vector<std::size_t> d(k);
    for (std::size_t i = k; i-- > 0;) {
      d[i] = x % p;
      x /= p;
    }
    return d;
  };
  std::vector<Element> table(order * order);
  std::vector<std::string> labels(order);
  for (std::size_t x = 0; x < order; ++x) {
    const auto dx = digits(x);
    if (x == 0) {
      labels[x] = "e";
    } else {
      std::string l = "(";
      for (std::size_t i = 0; i < k; ++i) l += (i ? "," : "") + std::to_string(dx[i]);
      labels[x] = l + ")";
    }
    for (std::size_t y = 0; y < order; ++y) {
      const auto dy = digits(y);
      std::size_t z = 0;
      for (std::size_t i = 0; i < k; ++i) z = z * p + (dx[i] + dy[i]) % p;
      table[x * order + y] = static_cast<Element>(z);
    }
  }
  return FiniteGroup(FiniteGroup::Trusted{}, "elab:" + std::to_string(p) + "^" + std::to_string(k), std::move(labels),
                     std::move(table));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const auto na = a.order();
  const auto nb = b.order();
  const auto order = na * nb;
  std::vector<Element> table(order * order);
  std::vector<std::string> labels(order);
  for (std::size_t x = 0; x < order; ++x) {
    const auto xa = static_cast<Element>(x / nb);
    const auto xb = static_cast<Element>(x % nb);
    labels[x] = x == 0 ? "e" : "(" + a.label(xa) + "," + b.label(xb) + ")";
    for (std::size_t y = 0; y < order; ++y) {
      const auto ya = static_cast<Element>(y / nb);
      const auto yb = static_cast<Element>(y % nb);
      table[x * order + y] = static_cast<Element>(a.multiply(xa, ya) * nb + b.multiply(xb, yb));
    }
  }
  return FiniteGroup(FiniteGroup::Trusted{}, a.name() + " x " + b.name(), std::move(labels), std::move(table));
}

FiniteGroup make_group(std::string_view spec) {
  spec = trim(spec);
  if (spec.empty()) throw SpecError("empty group spec");
  const auto factors = split_factors(spec);
  for (auto f : factors)
    if (f.empty()) throw SpecError("malformed group spec '" + std::string(spec) + "': empty factor");
  FiniteGroup g = make_atom(factors.front());
  for (std::size_t i = 1; i < factors.size(); ++i) {
    auto next = make_atom(factors[i]);
    if (g.order() * next.order() > 4096) throw SpecError("direct product too large");
    g = direct_product(g, next);
  }
  return factors.size() > 1 ? g.renamed(std::string(spec)) : g;
}

FiniteGroup group_from_json(const nlohmann::json& doc) {
  try {
    const auto name = doc.value("name", std::string("table"));
    const auto rows = doc.at("table").get<std::vector<std::vector<long long>>>();
    const auto n = rows.size();
    if (doc.contains("order") && doc.at("order").get<std::size_t>() != n)
      throw InvariantError("declared order does not match the table size");
    auto labels = doc.contains("labels") ? doc.at("labels").get<std::vector<std::string>>() : std::vector<std::string>{};
    if (labels.empty())
      for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    if (labels.size() != n) throw InvariantError("label count does not match the table size");
    for (const auto& r : rows) {
      if (r.size() != n) throw InvariantError("table is not square");
      for (auto v : r)
        if (v < 0 || static_cast<std::size_t>(v) >= n) throw InvariantError("table entry " + std::to_string(v) + " out of range");
    }

    // Locate the identity and move it to index 0, keeping the other elements in order.
    std::size_t id = n;
    for (std::size_t i = 0; i < n && id == n; ++i) {
      bool left = true;
      for (std::size_t j = 0; j < n && left; ++j) left = static_cast<std::size_t>(rows[i][j]) == j;
      if (left) id = i;
    }
    if (id == n) throw InvariantError("table has no identity row");
    std::vector<std::size_t> old_of_new;
    old_of_new.push_back(id);
    for (std::size_t i = 0; i < n; ++i)
      if (i != id) old_of_new.push_back(i);
    std::vector<Element> new_of_old(n);
    for (std::size_t k = 0; k < n; ++k) new_of_old[old_of_new[k]] = static_cast<Element>(k);

    std::vector<Element> table(n * n);
    std::vector<std::string> new_labels(n);
    for (std::size_t i = 0; i < n; ++i) {
      new_labels[i] = labels[old_of_new[i]];
      for (std::size_t j = 0; j < n; ++j)
        table[i * n + j] = new_of_old[static_cast<std::size_t>(rows[old_of_new[i]][old_of_new[j]])];
    }
    return FiniteGroup(name, std::move(new_labels), std::move(table));
  } catch (const nlohmann::json::exception& e) {
    throw SpecError(std::string("malformed Cayley-table JSON: ") + e.what());
  }
}

FiniteGroup load_group_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open table file '" + path.string() + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw SpecError("table file '" + path.string() + "' is not valid JSON: " + e.what());
  }
  return group_from_json(doc);
}

nlohmann::ordered_json group_to_json(const FiniteGroup& group) {
  nlohmann::ordered_json doc;
  doc["name"] = group.name();
  doc["order"] = group.order();
  doc["labels"] = group.labels();
  doc["table"] = group.table_rows();
  return doc;
}

}  // namespace eqg

namespace eqg {

std::vector<Subgroup> resolve_subgroups(const FiniteGroup& group, std::string_view selector) {
  const std::string sel(selector);
  if (sel == "center") return {center(group)};
  if (sel == "trivial") return {trivial_subgroup(group)};
  if (sel == "all-normal") {
    std::vector<Subgroup> out;
    for (auto& h : normal_subgroups(group))
      if (h.size() < group.order()) out.push_back(std::move(h));
    return out;
  }
  if (auto it = group.anchors().find(sel); it != group.anchors().end()) return {make_subgroup(group, it->second)};
  if (sel.empty() || !std::isdigit(static_cast<unsigned char>(sel.front())))
    throw SpecError("unknown subgroup selector '" + sel + "'");

  std::vector<Element> members;
  std::stringstream ss(sel);
  std::string token;
  while (std::getline(ss, token, ',')) {
    std::size_t used = 0;
    unsigned long value = 0;
    try {
      value = std::stoul(token, &used);
    } catch (const std::exception&) {
      throw SpecError("bad element index '" + token + "' in subgroup selector");
    }
    if (used != token.size()) throw SpecError("bad element index '" + token + "' in subgroup selector");
    if (value >= group.order()) throw SpecError("element index " + token + " out of range");
    members.push_back(static_cast<Element>(value));
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return {make_subgroup(group, std::move(members))};
}

}  // namespace eqg
