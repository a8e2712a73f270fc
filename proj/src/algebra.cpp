#include "precrossed/algebra.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>

namespace precrossed {

namespace {

bool in_range(int v, int n) { return v >= 0 && v < n; }

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return labels;
}

void check_labels(const std::vector<std::string>& labels, int n, ErrorKind kind) {
  if (static_cast<int>(labels.size()) != n) {
    throw Error(kind, "expected " + std::to_string(n) + " labels, got " +
                          std::to_string(labels.size()));
  }
  std::set<std::string> seen;
  for (const auto& l : labels) {
    if (l.empty() || !seen.insert(l).second) throw Error(kind, "duplicate or empty label '" + l + "'");
  }
}

Permutation compose(const Permutation& p, const Permutation& q) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// FiniteGroup

FiniteGroup FiniteGroup::from_table(Table table, std::vector<std::string> labels) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw Error(ErrorKind::NoIdentity, "empty table");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) throw Error(ErrorKind::NotLatinSquare, "table is not square");
    for (int v : row) {
      if (!in_range(v, n)) throw Error(ErrorKind::NotLatinSquare, "entry out of range");
    }
  }
  for (int i = 0; i < n; ++i) {
    std::vector<char> row_seen(n, 0), col_seen(n, 0);
    for (int j = 0; j < n; ++j) {
      if (row_seen[table[i][j]]++) {
        throw Error(ErrorKind::NotLatinSquare, "row " + std::to_string(i) + " repeats an entry");
      }
      if (col_seen[table[j][i]]++) {
        throw Error(ErrorKind::NotLatinSquare, "column " + std::to_string(i) + " repeats an entry");
      }
    }
  }
  int identity = -1;
  for (int e = 0; e < n && identity < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = table[e][a] == a && table[a][e] == a;
    if (ok) identity = e;
  }
  if (identity < 0) throw Error(ErrorKind::NoIdentity, "no two-sided identity");
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (table[table[a][b]][c] != table[a][table[b][c]]) {
          throw Error(ErrorKind::NotAssociative, "(" + std::to_string(a) + "*" + std::to_string(b) +
                                                     ")*" + std::to_string(c));
        }
      }
    }
  }
  if (labels.empty()) labels = default_labels(n);
  check_labels(labels, n, ErrorKind::NotLatinSquare);

  FiniteGroup g;
  g.table_ = std::move(table);
  g.labels_ = std::move(labels);
  g.identity_ = identity;
  g.inverse_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (g.table_[a][b] == identity) g.inverse_[a] = b;
    }
  }
  return g;
}

FiniteGroup FiniteGroup::from_permutations(const std::vector<Permutation>& generators, int points) {
  if (points < 1) throw Error(ErrorKind::NoIdentity, "permutation group needs at least one point");
  for (const auto& p : generators) {
    std::vector<char> seen(points, 0);
    bool ok = static_cast<int>(p.size()) == points;
    for (std::size_t i = 0; ok && i < p.size(); ++i) ok = in_range(p[i], points) && !seen[p[i]]++;
    if (!ok) throw Error(ErrorKind::NotLatinSquare, "generator is not a permutation of " +
                                                        std::to_string(points) + " points");
  }
  Permutation id(points);
  for (int i = 0; i < points; ++i) id[i] = i;

  std::set<Permutation> elements{id};
  std::vector<Permutation> frontier{id};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& p : frontier) {
      for (const auto& s : generators) {
        auto q = compose(p, s);
        if (elements.insert(q).second) next.push_back(std::move(q));
      }
    }
    frontier = std::move(next);
  }

  std::vector<Permutation> sorted(elements.begin(), elements.end());
  std::map<Permutation, int> index;
  for (std::size_t i = 0; i < sorted.size(); ++i) index[sorted[i]] = static_cast<int>(i);
  const int n = static_cast<int>(sorted.size());
  Table table(n, std::vector<int>(n));
  std::vector<std::string> labels;
  for (int a = 0; a < n; ++a) {
    labels.push_back(cycle_notation(sorted[a]));
    for (int b = 0; b < n; ++b) table[a][b] = index.at(compose(sorted[a], sorted[b]));
  }
  return from_table(std::move(table), std::move(labels));
}

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) throw Error(ErrorKind::NoIdentity, "cyclic group of order < 1");
  Table table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  }
  return from_table(std::move(table));
}

std::optional<Element> FiniteGroup::find(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return static_cast<Element>(i);
  }
  int v = -1;
  auto [ptr, ec] = std::from_chars(label.data(), label.data() + label.size(), v);
  if (ec == std::errc() && ptr == label.data() + label.size() && in_range(v, order())) return v;
  return std::nullopt;
}

FiniteGroup FiniteGroup::subgroup(const std::vector<Element>& elements,
                                  std::vector<Element>* embedding) const {
  std::vector<Element> sorted(elements);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::map<Element, int> position;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (!in_range(sorted[i], order())) throw Error(ErrorKind::NotClosed, "element out of range");
    position[sorted[i]] = static_cast<int>(i);
  }
  const int n = static_cast<int>(sorted.size());
  Table table(n, std::vector<int>(n));
  std::vector<std::string> labels;
  for (int a = 0; a < n; ++a) {
    labels.push_back(labels_[sorted[a]]);
    for (int b = 0; b < n; ++b) {
      auto it = position.find(mul(sorted[a], sorted[b]));
      if (it == position.end()) throw Error(ErrorKind::NotClosed, "subset is not closed under multiplication");
      table[a][b] = it->second;
    }
  }
  if (embedding) *embedding = sorted;
  return from_table(std::move(table), std::move(labels));
}

// ---------------------------------------------------------------------------
// RightAction

RightAction RightAction::validate(const FiniteGroup& group, int carrier_size, Table table,
                                  const FiniteGroup* carrier_group) {
  const int n = group.order();
  if (static_cast<int>(table.size()) != carrier_size) {
    throw Error(ErrorKind::ActionInvalid, "action table has wrong number of rows");
  }
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) throw Error(ErrorKind::ActionInvalid, "action row has wrong length");
    for (int v : row) {
      if (!in_range(v, carrier_size)) throw Error(ErrorKind::ActionInvalid, "action entry out of range");
    }
  }
  for (int x = 0; x < carrier_size; ++x) {
    if (table[x][group.identity()] != x) {
      throw Error(ErrorKind::ActionInvalid, "identity does not act trivially on " + std::to_string(x));
    }
    for (int g = 0; g < n; ++g) {
      for (int h = 0; h < n; ++h) {
        if (table[table[x][g]][h] != table[x][group.mul(g, h)]) {
          throw Error(ErrorKind::ActionInvalid, "(x^g)^h != x^(gh) for x=" + std::to_string(x));
        }
      }
    }
  }
  if (carrier_group) {
    for (int g = 0; g < n; ++g) {
      for (int x = 0; x < carrier_size; ++x) {
        for (int y = 0; y < carrier_size; ++y) {
          if (table[carrier_group->mul(x, y)][g] != carrier_group->mul(table[x][g], table[y][g])) {
            throw Error(ErrorKind::NotByAutomorphisms, "(xy)^g != x^g y^g for g=" + group.label(g));
          }
        }
      }
    }
  }
  RightAction action;
  action.table_ = std::move(table);
  action.group_order_ = n;
  return action;
}

RightAction RightAction::trivial(const FiniteGroup& group, int carrier_size) {
  Table table(carrier_size, std::vector<int>(group.order()));
  for (int x = 0; x < carrier_size; ++x) std::fill(table[x].begin(), table[x].end(), x);
  return validate(group, carrier_size, std::move(table));
}

RightAction RightAction::conjugation(const FiniteGroup& group) {
  const int n = group.order();
  Table table(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x) {
    for (int g = 0; g < n; ++g) table[x][g] = group.conjugate(x, g);
  }
  return validate(group, n, std::move(table), &group);
}

bool RightAction::is_trivial() const {
  for (std::size_t x = 0; x < table_.size(); ++x) {
    for (int v : table_[x]) {
      if (v != static_cast<int>(x)) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Rack

Rack Rack::validate(Table op) {
  const int n = static_cast<int>(op.size());
  for (const auto& row : op) {
    if (static_cast<int>(row.size()) != n) throw Error(ErrorKind::NotBijective, "rack table is not square");
    for (int v : row) {
      if (!in_range(v, n)) throw Error(ErrorKind::NotBijective, "rack entry out of range");
    }
  }
  for (int y = 0; y < n; ++y) {
    std::vector<char> seen(n, 0);
    for (int x = 0; x < n; ++x) {
      if (seen[op[x][y]]++) {
        throw Error(ErrorKind::NotBijective, "x -> x ◁ " + std::to_string(y) + " is not a bijection");
      }
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        if (op[op[x][y]][z] != op[op[x][z]][op[y][z]]) {
          throw Error(ErrorKind::NotSelfDistributive, "fails at (" + std::to_string(x) + "," +
                                                          std::to_string(y) + "," + std::to_string(z) + ")");
        }
      }
    }
  }
  Rack r;
  r.op_ = std::move(op);
  return r;
}

// ---------------------------------------------------------------------------
// AugmentedRack

AugmentedRack AugmentedRack::validate(std::vector<std::string> carrier, FiniteGroup group, Table action,
                                      std::vector<Element> pi) {
  const int n = static_cast<int>(carrier.size());
  check_labels(carrier, n, ErrorKind::ActionInvalid);
  auto act = RightAction::validate(group, n, std::move(action));
  if (static_cast<int>(pi.size()) != n) throw Error(ErrorKind::NotEquivariant, "pi has wrong length");
  for (int v : pi) {
    if (!in_range(v, group.order())) throw Error(ErrorKind::NotEquivariant, "pi value out of range");
  }
  for (int x = 0; x < n; ++x) {
    for (int g = 0; g < group.order(); ++g) {
      if (pi[act.apply(x, g)] != group.conjugate(pi[x], g)) {
        throw Error(ErrorKind::NotEquivariant,
                    "pi(" + carrier[x] + "^" + group.label(g) + ") != " + group.label(g) + "^-1 pi(" +
                        carrier[x] + ") " + group.label(g));
      }
    }
  }
  Table op(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) op[x][y] = act.apply(x, pi[y]);
  }
  auto rack = Rack::validate(std::move(op));
  return AugmentedRack(std::move(carrier), std::move(group), std::move(act), std::move(pi), std::move(rack));
}

AugmentedRack conjugation_structure(const FiniteGroup& group, const std::vector<Element>& subset) {
  std::map<Element, int> position;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (!in_range(subset[i], group.order()) || !position.emplace(subset[i], static_cast<int>(i)).second) {
      throw Error(ErrorKind::NotClosed, "subset has an invalid or repeated element");
    }
  }
  const int n = static_cast<int>(subset.size());
  Table action(n, std::vector<int>(group.order()));
  std::vector<std::string> carrier;
  for (int x = 0; x < n; ++x) {
    carrier.push_back(group.label(subset[x]));
    for (int g = 0; g < group.order(); ++g) {
      auto it = position.find(group.conjugate(subset[x], g));
      if (it == position.end()) {
        throw Error(ErrorKind::NotClosed, "conjugate of " + group.label(subset[x]) + " by " + group.label(g) +
                                              " leaves the subset");
      }
      action[x][g] = it->second;
    }
  }
  return AugmentedRack::validate(std::move(carrier), group, std::move(action), subset);
}

// ---------------------------------------------------------------------------
// PreCrossedModule

PreCrossedModule PreCrossedModule::validate(FiniteGroup x_group, FiniteGroup group, Table action,
                                            std::vector<Element> pi) {
  const int nx = x_group.order();
  if (static_cast<int>(pi.size()) != nx) throw Error(ErrorKind::NotHomomorphism, "pi has wrong length");
  for (int v : pi) {
    if (!in_range(v, group.order())) throw Error(ErrorKind::NotHomomorphism, "pi value out of range");
  }
  for (int a = 0; a < nx; ++a) {
    for (int b = 0; b < nx; ++b) {
      if (pi[x_group.mul(a, b)] != group.mul(pi[a], pi[b])) {
        throw Error(ErrorKind::NotHomomorphism, "pi(" + x_group.label(a) + x_group.label(b) +
                                                    ") != pi(" + x_group.label(a) + ")pi(" +
                                                    x_group.label(b) + ")");
      }
    }
  }
  auto act = RightAction::validate(group, nx, std::move(action), &x_group);
  for (int x = 0; x < nx; ++x) {
    for (int g = 0; g < group.order(); ++g) {
      if (pi[act.apply(x, g)] != group.conjugate(pi[x], g)) {
        throw Error(ErrorKind::NotEquivariant, "pi(x^g) != g^-1 pi(x) g for x=" + x_group.label(x) +
                                                   ", g=" + group.label(g));
      }
    }
  }
  return PreCrossedModule(std::move(x_group), std::move(group), std::move(act), std::move(pi));
}

bool PreCrossedModule::pi_surjective() const {
  std::set<Element> image(pi_.begin(), pi_.end());
  return static_cast<int>(image.size()) == group_.order();
}

PreCrossedModule PreCrossedModule::restrict_to_image() const {
  std::vector<Element> embedding;
  auto image = group_.subgroup(pi_, &embedding);
  std::map<Element, int> position;
  for (std::size_t i = 0; i < embedding.size(); ++i) position[embedding[i]] = static_cast<int>(i);
  std::vector<Element> pi;
  for (Element v : pi_) pi.push_back(position.at(v));
  Table action(x_group_.order(), std::vector<int>(image.order()));
  for (int x = 0; x < x_group_.order(); ++x) {
    for (int g = 0; g < image.order(); ++g) action[x][g] = action_.apply(x, embedding[g]);
  }
  return validate(x_group_, std::move(image), std::move(action), std::move(pi));
}

AugmentedRack PreCrossedModule::as_augmented_rack() const {
  return AugmentedRack::validate(x_group_.labels(), group_, action_.table(), pi_);
}

PrecrossedAction precrossed_action(const PreCrossedModule& p) {
  const auto& x = p.x_group();
  const int n = x.order();
  std::vector<Permutation> phi(n, Permutation(n));
  for (int a = 0; a < n; ++a) {
    for (int y = 0; y < n; ++y) phi[a][y] = p.action().apply(y, p.pi()[a]);
  }
  auto image = FiniteGroup::from_permutations(phi, n);
  // from_permutations sorts elements by image list; recover that order.
  std::vector<Permutation> sorted(phi.begin(), phi.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (static_cast<int>(sorted.size()) != image.order()) {
    throw Error(ErrorKind::NotHomomorphism, "image of phi is not closed");
  }
  std::vector<Element> pi(n);
  for (int a = 0; a < n; ++a) {
    pi[a] = static_cast<Element>(std::lower_bound(sorted.begin(), sorted.end(), phi[a]) - sorted.begin());
  }
  Table action(n, std::vector<int>(image.order()));
  for (int y = 0; y < n; ++y) {
    for (int s = 0; s < image.order(); ++s) action[y][s] = sorted[s][y];
  }
  auto module = PreCrossedModule::validate(x, image, std::move(action), std::move(pi));
  return PrecrossedAction{std::move(phi), std::move(image), std::move(module)};
}

std::string cycle_notation(const Permutation& p) {
  std::string out;
  std::vector<char> done(p.size(), 0);
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (done[start] || p[start] == static_cast<int>(start)) continue;
    out += "(";
    std::size_t i = start;
    bool first = true;
    while (!done[i]) {
      done[i] = 1;
      if (!first) out += ",";
      out += std::to_string(i + 1);
      first = false;
      i = static_cast<std::size_t>(p[i]);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

}  // namespace precrossed
