#include "precrossed/registry.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

namespace precrossed {

std::string_view kind_name(const RegistryObject& object) {
  switch (object.index()) {
    case 0: return "group";
    case 1: return "rack";
    case 2: return "augrack";
    case 3: return "precrossed";
  }
  return "?";
}

void Registry::add(const std::string& name, RegistryObject object) {
  if (!objects_.emplace(name, std::move(object)).second) {
    throw Error(ErrorKind::ParseError, "duplicate declaration of '" + name + "'");
  }
  order_.push_back(name);
}

const RegistryObject& Registry::at(const std::string& name) const {
  auto it = objects_.find(name);
  if (it == objects_.end()) throw Error(ErrorKind::ParseError, "undeclared identifier '" + name + "'");
  return it->second;
}

namespace {

struct Entry {
  std::string key;
  std::string value;
  int line = 0;
  int column = 0;
};

struct Block {
  std::string kind;
  std::string name;
  int line = 0;
  std::vector<Entry> entries;
};

[[noreturn]] void fail(int line, int column, const std::string& message) {
  throw Error(ErrorKind::ParseError,
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message);
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

/// Splits on `sep` outside parentheses; empty input gives no pieces.
std::vector<std::string> split_top(std::string_view s, char sep) {
  std::vector<std::string> out;
  if (trim(s).empty()) return out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (s[i] == sep && depth == 0) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  out.push_back(trim(s.substr(start)));
  return out;
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

std::optional<int> parse_int(std::string_view s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

/// Label lookup falling back to a plain index.
std::optional<int> resolve(const std::vector<std::string>& labels, std::string_view token) {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == token) return static_cast<int>(i);
  }
  auto v = parse_int(token);
  if (v && *v >= 0 && *v < static_cast<int>(labels.size())) return v;
  return std::nullopt;
}

std::vector<Block> split_blocks(std::string_view text) {
  static const std::set<std::string> kinds{"group", "rack", "augrack", "precrossed"};
  std::vector<Block> blocks;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  bool in_braces = false;
  std::string brace_text;
  int brace_line = 0;

  const auto add_brace_entries = [&](const std::string& body, int line) {
    for (const auto& piece : split_top(body, ';')) {
      if (piece.empty()) continue;
      const auto pos = piece.find_first_of("=:");
      if (pos == std::string::npos) fail(line, 1, "expected 'key = value' in '" + piece + "'");
      blocks.back().entries.push_back(Entry{trim(piece.substr(0, pos)), trim(piece.substr(pos + 1)), line, 1});
    }
  };

  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw.substr(0, raw.find('#'));
    if (trim(line).empty()) continue;

    if (in_braces) {
      const auto close = line.find('}');
      brace_text += " " + line.substr(0, close);
      if (close != std::string::npos) {
        if (!trim(line.substr(close + 1)).empty()) fail(line_no, static_cast<int>(close) + 2, "text after '}'");
        add_brace_entries(brace_text, brace_line);
        in_braces = false;
      } else {
        brace_text += ";";
      }
      continue;
    }

    if (!std::isspace(static_cast<unsigned char>(line[0]))) {
      const auto brace = line.find('{');
      std::istringstream header(line.substr(0, brace));
      Block block;
      block.line = line_no;
      header >> block.kind >> block.name;
      std::string extra;
      if (!kinds.count(block.kind)) fail(line_no, 1, "unknown block kind '" + block.kind + "'");
      if (!is_identifier(block.name)) fail(line_no, static_cast<int>(block.kind.size()) + 2, "bad name '" + block.name + "'");
      if (header >> extra) fail(line_no, 1, "unexpected '" + extra + "' in header");
      blocks.push_back(std::move(block));
      if (brace != std::string::npos) {
        const auto close = line.find('}', brace);
        if (close == std::string::npos) {
          in_braces = true;
          brace_text = line.substr(brace + 1) + ";";
          brace_line = line_no;
        } else {
          if (!trim(line.substr(close + 1)).empty()) fail(line_no, static_cast<int>(close) + 2, "text after '}'");
          add_brace_entries(line.substr(brace + 1, close - brace - 1), line_no);
        }
      }
      continue;
    }

    if (blocks.empty()) fail(line_no, 1, "indented line outside a block");
    const auto first = line.find_first_not_of(" \t");
    const auto pos = line.find(':');
    if (pos == std::string::npos) {
      // Bare keyword such as `trivial`.
      const auto word = trim(line);
      if (!is_identifier(word)) fail(line_no, static_cast<int>(first) + 1, "expected 'key: value'");
      blocks.back().entries.push_back(Entry{word, "", line_no, static_cast<int>(first) + 1});
      continue;
    }
    blocks.back().entries.push_back(Entry{trim(line.substr(first, pos - first)), trim(line.substr(pos + 1)), line_no,
                                          static_cast<int>(pos) + 2});
  }
  if (in_braces) fail(brace_line, 1, "unterminated '{'");
  return blocks;
}

class BlockReader {
 public:
  BlockReader(const Block& block, std::set<std::string> allowed) : block_(block) {
    for (const auto& e : block.entries) {
      if (!allowed.count(e.key)) fail(e.line, e.column, "unknown key '" + e.key + "' in " + block.kind);
      if (!seen_.insert(e.key).second) fail(e.line, e.column, "repeated key '" + e.key + "'");
    }
  }

  const Entry* get(const std::string& key) const {
    for (const auto& e : block_.entries) {
      if (e.key == key) return &e;
    }
    return nullptr;
  }

  const Entry& require(const std::string& key) const {
    if (const auto* e = get(key)) return *e;
    fail(block_.line, 1, block_.kind + " '" + block_.name + "' needs '" + key + "'");
  }

 private:
  const Block& block_;
  std::set<std::string> seen_;
};

const FiniteGroup& group_ref(const Registry& reg, const Entry& e) {
  if (!reg.contains(e.value)) fail(e.line, e.column, "undeclared identifier '" + e.value + "'");
  const auto& obj = reg.at(e.value);
  if (const auto* g = std::get_if<FiniteGroup>(&obj)) return *g;
  fail(e.line, e.column, "'" + e.value + "' is a " + std::string(kind_name(obj)) + ", not a group");
}

int element(const std::vector<std::string>& labels, const std::string& token, const Entry& e) {
  auto v = resolve(labels, token);
  if (!v) fail(e.line, e.column, "unknown element '" + token + "'");
  return *v;
}

Table parse_table(const Entry& e, const std::vector<std::string>& row_labels) {
  Table table;
  for (const auto& row : split_top(e.value, '/')) {
    std::vector<int> r;
    for (const auto& tok : split_top(row, ',')) r.push_back(element(row_labels, tok, e));
    table.push_back(std::move(r));
  }
  return table;
}

Permutation parse_cycles(const std::string& text, int points, const Entry& e) {
  Permutation p(points);
  for (int i = 0; i < points; ++i) p[i] = i;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != '(') fail(e.line, e.column, "expected '(' in permutation '" + text + "'");
    const auto close = text.find(')', i);
    if (close == std::string::npos) fail(e.line, e.column, "unclosed cycle in '" + text + "'");
    std::vector<int> cycle;
    for (const auto& tok : split_top(text.substr(i + 1, close - i - 1), ',')) {
      auto v = parse_int(tok);
      if (!v || *v < 1 || *v > points) fail(e.line, e.column, "bad point '" + tok + "'");
      cycle.push_back(*v - 1);
    }
    // Cycles compose left to right, matching the group product.
    Permutation c(points);
    for (int k = 0; k < points; ++k) c[k] = k;
    for (std::size_t k = 0; k < cycle.size(); ++k) c[cycle[k]] = cycle[(k + 1) % cycle.size()];
    Permutation next(points);
    for (int k = 0; k < points; ++k) next[k] = c[p[k]];
    p = std::move(next);
    i = close + 1;
  }
  return p;
}

int max_point(const std::string& text) {
  int best = 0;
  int cur = 0;
  for (char ch : text) {
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      cur = cur * 10 + (ch - '0');
      best = std::max(best, cur);
    } else {
      cur = 0;
    }
  }
  return best;
}

FiniteGroup build_group(const Block& b) {
  BlockReader r(b, {"table", "elements", "permutations", "points", "cyclic", "trivial"});
  std::vector<std::string> labels;
  if (const auto* e = r.get("elements")) labels = split_top(e->value, ',');
  if (const auto* e = r.get("cyclic")) {
    auto n = parse_int(e->value);
    if (!n || *n < 1) fail(e->line, e->column, "cyclic needs a positive order");
    auto g = FiniteGroup::cyclic(*n);
    if (!labels.empty()) g = FiniteGroup::from_table(g.table(), labels);
    return g;
  }
  if (r.get("trivial")) return FiniteGroup::trivial();
  if (const auto* e = r.get("permutations")) {
    int points = max_point(e->value);
    if (const auto* p = r.get("points")) {
      auto n = parse_int(p->value);
      if (!n || *n < points) fail(p->line, p->column, "points must cover every moved point");
      points = *n;
    }
    std::vector<Permutation> gens;
    for (const auto& tok : split_top(e->value, ',')) gens.push_back(parse_cycles(tok, std::max(points, 1), *e));
    return FiniteGroup::from_permutations(gens, std::max(points, 1));
  }
  const auto& t = r.require("table");
  std::vector<std::string> row_labels = labels;
  if (row_labels.empty()) {
    const auto n = split_top(t.value, '/').size();
    for (std::size_t i = 0; i < n; ++i) row_labels.push_back(std::to_string(i));
  }
  return FiniteGroup::from_table(parse_table(t, row_labels), labels);
}

LabeledRack build_rack(const Block& b) {
  BlockReader r(b, {"table", "elements"});
  const auto& t = r.require("table");
  std::vector<std::string> labels;
  if (const auto* e = r.get("elements")) labels = split_top(e->value, ',');
  if (labels.empty()) {
    const auto n = split_top(t.value, '/').size();
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  }
  return LabeledRack{Rack::validate(parse_table(t, labels)), labels};
}

/// `a->t, b->e` or a positional list.
std::vector<Element> parse_map(const Entry& e, const std::vector<std::string>& domain,
                               const std::vector<std::string>& codomain) {
  const auto pieces = split_top(e.value, ',');
  std::vector<Element> out(domain.size(), -1);
  const bool arrows = !pieces.empty() && pieces.front().find("->") != std::string::npos;
  if (!arrows && pieces.size() != domain.size()) {
    fail(e.line, e.column, "expected " + std::to_string(domain.size()) + " values");
  }
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (arrows) {
      const auto pos = pieces[i].find("->");
      if (pos == std::string::npos) fail(e.line, e.column, "expected 'a->b' in '" + pieces[i] + "'");
      const int from = element(domain, trim(pieces[i].substr(0, pos)), e);
      out[from] = element(codomain, trim(pieces[i].substr(pos + 2)), e);
    } else {
      out[i] = element(codomain, pieces[i], e);
    }
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i] < 0) fail(e.line, e.column, "no value for '" + domain[i] + "'");
  }
  return out;
}

AugmentedRack build_augrack(const Block& b, const Registry& reg) {
  BlockReader r(b, {"group", "subset", "carrier", "pi", "action"});
  const auto& g = group_ref(reg, r.require("group"));
  if (const auto* s = r.get("subset")) {
    if (r.get("carrier") || r.get("pi") || r.get("action")) {
      fail(s->line, s->column, "'subset' already fixes carrier, pi and action");
    }
    std::vector<Element> subset;
    for (const auto& tok : split_top(s->value, ',')) subset.push_back(element(g.labels(), tok, *s));
    return conjugation_structure(g, subset);
  }
  const auto& c = r.require("carrier");
  auto carrier = split_top(c.value, ',');
  const auto& pe = r.require("pi");
  const auto pi = pe.value == "trivial" ? std::vector<Element>(carrier.size(), g.identity())
                                        : parse_map(pe, carrier, g.labels());
  Table action;
  const auto* a = r.get("action");
  if (!a || a->value == "trivial") {
    action = RightAction::trivial(g, static_cast<int>(carrier.size())).table();
  } else {
    action = parse_table(*a, carrier);
  }
  return AugmentedRack::validate(std::move(carrier), g, std::move(action), pi);
}

PreCrossedModule build_precrossed(const Block& b, const Registry& reg) {
  BlockReader r(b, {"x", "g", "pi", "action"});
  const auto& xe = r.require("x");
  const auto& ge = r.require("g");
  const auto& x = group_ref(reg, xe);
  const auto& g = group_ref(reg, ge);
  const bool same = xe.value == ge.value || x == g;

  const auto& pe = r.require("pi");
  std::vector<Element> pi;
  if (pe.value == "id") {
    if (!same) fail(pe.line, pe.column, "'id' needs x and g to be the same group");
    for (int i = 0; i < x.order(); ++i) pi.push_back(i);
  } else if (pe.value == "trivial") {
    pi.assign(x.order(), g.identity());
  } else {
    pi = parse_map(pe, x.labels(), g.labels());
  }

  Table action;
  const auto* ae = r.get("action");
  if (!ae || ae->value == "trivial") {
    action = RightAction::trivial(g, x.order()).table();
  } else if (ae->value == "conjugation") {
    if (!same) fail(ae->line, ae->column, "'conjugation' needs x and g to be the same group");
    action = RightAction::conjugation(g).table();
  } else {
    action = parse_table(*ae, x.labels());
  }
  return PreCrossedModule::validate(x, g, std::move(action), std::move(pi));
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

std::string render_table(const Table& t, const std::vector<std::string>& labels) {
  std::vector<std::string> rows;
  for (const auto& row : t) {
    std::vector<std::string> cells;
    for (int v : row) cells.push_back(labels[v]);
    rows.push_back(join(cells, ","));
  }
  return join(rows, " / ");
}

}  // namespace

Registry parse_registry(std::string_view text) {
  Registry reg;
  for (const auto& block : split_blocks(text)) {
    if (reg.contains(block.name)) fail(block.line, 1, "duplicate declaration of '" + block.name + "'");
    try {
      if (block.kind == "group") {
        reg.add(block.name, build_group(block));
      } else if (block.kind == "rack") {
        reg.add(block.name, build_rack(block));
      } else if (block.kind == "augrack") {
        reg.add(block.name, build_augrack(block, reg));
      } else {
        reg.add(block.name, build_precrossed(block, reg));
      }
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::ParseError) throw;
      throw Error(e.kind(), block.kind + " '" + block.name + "' (line " + std::to_string(block.line) + "): " + e.what());
    }
  }
  return reg;
}

Registry parse_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_registry(buffer.str());
}

std::string serialize(const Registry& registry) {
  std::ostringstream out;
  std::vector<std::pair<std::string, FiniteGroup>> groups;
  const auto group_name = [&](const FiniteGroup& g, const std::string& fallback) {
    for (const auto& [name, known] : groups) {
      if (known == g) return name;
    }
    out << "group " << fallback << "\n";
    out << "  elements: " << join(g.labels(), ", ") << "\n";
    out << "  table: " << render_table(g.table(), g.labels()) << "\n";
    groups.emplace_back(fallback, g);
    return fallback;
  };

  for (const auto& name : registry.names()) {
    const auto& obj = registry.at(name);
    if (const auto* g = std::get_if<FiniteGroup>(&obj)) {
      bool known = false;
      for (const auto& entry : groups) known = known || entry.first == name;
      if (!known) group_name(*g, name);
    } else if (const auto* r = std::get_if<LabeledRack>(&obj)) {
      out << "rack " << name << "\n";
      out << "  elements: " << join(r->labels, ", ") << "\n";
      out << "  table: " << render_table(r->rack.table(), r->labels) << "\n";
    } else if (const auto* a = std::get_if<AugmentedRack>(&obj)) {
      const auto gname = group_name(a->group(), name + "__g");
      std::vector<std::string> pi;
      for (Element v : a->pi()) pi.push_back(a->group().label(v));
      out << "augrack " << name << "\n";
      out << "  group: " << gname << "\n";
      out << "  carrier: " << join(a->carrier(), ", ") << "\n";
      out << "  pi: " << join(pi, ", ") << "\n";
      out << "  action: " << render_table(a->action().table(), a->carrier()) << "\n";
    } else if (const auto* p = std::get_if<PreCrossedModule>(&obj)) {
      const auto xname = group_name(p->x_group(), name + "__x");
      const auto gname = group_name(p->group(), name + "__g");
      std::vector<std::string> pi;
      for (Element v : p->pi()) pi.push_back(p->group().label(v));
      out << "precrossed " << name << "\n";
      out << "  x: " << xname << "\n";
      out << "  g: " << gname << "\n";
      out << "  pi: " << join(pi, ", ") << "\n";
      out << "  action: " << render_table(p->action().table(), p->x_group().labels()) << "\n";
    }
  }
  return out.str();
}

}  // namespace precrossed
