#include "precrossed/commands.hpp"

#include <algorithm>
#include <chrono>
#include <charconv>

#include "precrossed/oracles.hpp"

namespace precrossed {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Agree: return "AGREE";
    case Verdict::Disagree: return "DISAGREE";
    case Verdict::NotApplicable: return "N/A";
  }
  return "?";
}

const std::vector<HomologyGroup>& Report::table(std::string_view tag) const {
  for (const auto& [name, groups] : tables) {
    if (name == tag) return groups;
  }
  throw Error(ErrorKind::IndexOutOfRange, "report has no table '" + std::string(tag) + "'");
}

std::string Report::render(bool machine_only) const {
  std::string out;
  if (machine_only) {
    for (const auto& l : machine) out += l + "\n";
    return out;
  }
  out += "command: " + command + "\n";
  for (const auto& l : lines) out += l + "\n";
  for (const auto& w : warnings) out += "warning: " + w + "\n";
  out += "verdict: " + std::string(to_string(verdict)) + "\n";
  return out;
}

Pipeline parse_pipeline(std::string_view text) {
  if (text == "envelope") return Pipeline::Envelope;
  if (text == "clauwens") return Pipeline::Clauwens;
  if (text == "rackcomplex") return Pipeline::RackComplex;
  if (text == "coskeleton") return Pipeline::Coskeleton;
  if (text == "nerve") return Pipeline::Nerve;
  throw Error(ErrorKind::ParseError, "unknown pipeline '" + std::string(text) + "'");
}

std::string_view to_string(Pipeline p) {
  switch (p) {
    case Pipeline::Envelope: return "envelope";
    case Pipeline::Clauwens: return "clauwens";
    case Pipeline::RackComplex: return "rackcomplex";
    case Pipeline::Coskeleton: return "coskeleton";
    case Pipeline::Nerve: return "nerve";
  }
  return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

[[noreturn]] void incompatible(const RegistryObject& object, Pipeline p) {
  throw Error(ErrorKind::Incompatible, "pipeline " + std::string(to_string(p)) + " does not accept a " +
                                           std::string(kind_name(object)));
}

/// The part after "H_m = ".
std::string value(const HomologyGroup& h) {
  const auto s = h.render();
  return s.substr(s.find(" = ") + 3);
}

/// Left-aligned columns separated by two spaces.
std::vector<std::string> columns(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::vector<std::string> out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    out.push_back(line);
  }
  return out;
}

std::string caps_echo(const MatrixCaps& caps) {
  return " --cap " + std::to_string(caps.simplices);
}

std::string cells_line(const std::vector<std::size_t>& cells) {
  std::string s = "cells:";
  for (auto n : cells) s += " " + std::to_string(n);
  return s;
}

AugmentedRack as_augrack(const RegistryObject& object, std::string_view command) {
  if (const auto* a = std::get_if<AugmentedRack>(&object)) return *a;
  if (const auto* p = std::get_if<PreCrossedModule>(&object)) return p->as_augmented_rack();
  throw Error(ErrorKind::Incompatible,
              std::string(command) + " needs an augrack or precrossed object, got a " + std::string(kind_name(object)));
}

}  // namespace

std::vector<HomologyGroup> run_pipeline(const RegistryObject& object, Pipeline pipeline, int m_max, int max_length,
                                        const Coefficients& coeff, const MatrixCaps& caps, std::string* tag,
                                        std::vector<std::size_t>* cells) {
  if (m_max < 0) throw Error(ErrorKind::DegreeOutOfRange, "max degree must be non-negative");
  SpecPtr spec;
  std::string name(to_string(pipeline));
  const auto* group = std::get_if<FiniteGroup>(&object);
  const auto* rack = std::get_if<LabeledRack>(&object);
  const auto* aug = std::get_if<AugmentedRack>(&object);
  const auto* pcm = std::get_if<PreCrossedModule>(&object);

  switch (pipeline) {
    case Pipeline::Envelope:
      if (pcm) {
        spec = build_envelope(*pcm, WordMode::GroupSyllable);
        name += " [GROUP_SYLLABLE]";
      } else if (aug) {
        spec = build_envelope(*aug, WordMode::FreeLetter);
        name += " [FREE_LETTER]";
      } else {
        incompatible(object, pipeline);
      }
      break;
    case Pipeline::Clauwens:
      if (pcm) {
        spec = build_clauwens(pcm->as_augmented_rack());
      } else if (aug) {
        spec = build_clauwens(*aug);
      } else {
        incompatible(object, pipeline);
      }
      name += " [MONOID_LETTER]";
      break;
    case Pipeline::RackComplex: {
      if (tag) *tag = name;
      ChainComplex c;
      if (rack) {
        c = rack_complex(rack->rack, rack->labels, m_max + 1);
      } else if (aug) {
        c = rack_complex(*aug, m_max + 1);
      } else if (pcm) {
        c = rack_complex(pcm->as_augmented_rack(), m_max + 1);
      } else {
        incompatible(object, pipeline);
      }
      if (cells) {
        cells->clear();
        for (int k = 0; k <= c.max_degree; ++k) cells->push_back(c.dimension(k));
      }
      return homology_range(c, m_max, coeff);
    }
    case Pipeline::Coskeleton:
      if (!pcm) incompatible(object, pipeline);
      spec = build_coskeleton(*pcm);
      break;
    case Pipeline::Nerve:
      if (group) {
        spec = build_nerve(*group);
      } else if (pcm) {
        spec = build_nerve(pcm->group());
      } else {
        incompatible(object, pipeline);
      }
      break;
  }
  if (tag) *tag = name;
  const auto c = chain_complex(*spec, m_max, max_length, caps);
  if (cells) {
    cells->clear();
    for (int k = 0; k <= c.max_degree; ++k) cells->push_back(c.dimension(k));
  }
  return homology_range(c, m_max, coeff);
}

std::vector<int> parse_lengths(std::string_view text) {
  const auto number = [&](std::string_view s) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || v < 0) {
      throw Error(ErrorKind::ParseError, "bad length '" + std::string(s) + "' in '" + std::string(text) + "'");
    }
    return v;
  };
  std::vector<int> out;
  if (const auto dots = text.find(".."); dots != std::string_view::npos) {
    const int lo = number(text.substr(0, dots));
    const int hi = number(text.substr(dots + 2));
    if (lo > hi) throw Error(ErrorKind::ParseError, "empty length range '" + std::string(text) + "'");
    for (int l = lo; l <= hi; ++l) out.push_back(l);
    return out;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = std::min(text.find(',', start), text.size());
    out.push_back(number(text.substr(start, comma - start)));
    start = comma + 1;
  }
  return out;
}

bool is_isomorphism(const InducedMap& f) {
  const auto& s = f.source.group;
  const auto& t = f.target.group;
  if (s.betti != t.betti || s.torsion != t.torsion) return false;
  // Between isomorphic finitely generated abelian groups a surjection is an
  // isomorphism, so test whether the image and the relations span Z^t.
  const std::size_t rows = f.target.orders.size();
  const std::size_t src = f.source.orders.size();
  if (rows == 0) return true;
  SparseIntMatrix m(rows, src + rows);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < src; ++c) {
      if (f.matrix[r][c] != 0) m.add(r, c, f.matrix[r][c]);
    }
    if (f.target.orders[r] != 0) m.add(r, src + r, f.target.orders[r]);
  }
  const auto snf = smith_normal_form(m);
  if (snf.rank != rows) return false;
  return std::all_of(snf.diagonal.begin(), snf.diagonal.begin() + static_cast<std::ptrdiff_t>(rows),
                     [](const Integer& d) { return d == 1; });
}

Report cmd_validate(const Registry& registry, std::string_view input) {
  Report r;
  r.command = "validate " + std::string(input);
  for (const auto& name : registry.names()) {
    const auto& obj = registry.at(name);
    std::string detail;
    if (const auto* g = std::get_if<FiniteGroup>(&obj)) {
      detail = "order " + std::to_string(g->order());
    } else if (const auto* k = std::get_if<LabeledRack>(&obj)) {
      detail = "size " + std::to_string(k->rack.size());
    } else if (const auto* a = std::get_if<AugmentedRack>(&obj)) {
      detail = "size " + std::to_string(a->size()) + " over a group of order " + std::to_string(a->group().order());
    } else if (const auto* p = std::get_if<PreCrossedModule>(&obj)) {
      detail = "|X| = " + std::to_string(p->x_group().order()) + ", |G| = " + std::to_string(p->group().order()) +
               (p->pi_surjective() ? ", pi surjective" : ", pi not surjective");
    }
    r.lines.push_back(std::string(kind_name(obj)) + " " + name + ": " + detail);
  }
  r.lines.push_back("objects: " + std::to_string(registry.names().size()));
  return r;
}

Report cmd_homology(const Registry& registry, std::string_view input, const std::string& object, Pipeline pipeline,
                    int m_max, int max_length, const Coefficients& coeff, const MatrixCaps& caps) {
  const auto start = Clock::now();
  Report r;
  r.command = "homology " + std::string(input) + " --object " + object + " --pipeline " +
              std::string(to_string(pipeline)) + " --max-degree " + std::to_string(m_max) + " --max-length " +
              std::to_string(max_length) + " --coeff " + coeff.name() + caps_echo(caps);
  const auto& obj = registry.at(object);
  std::string tag;
  std::vector<std::size_t> cells;
  auto groups = run_pipeline(obj, pipeline, m_max, max_length, coeff, caps, &tag, &cells);
  const bool truncated = pipeline == Pipeline::Envelope || pipeline == Pipeline::Clauwens;
  r.lines.push_back("object: " + object + " (" + std::string(kind_name(obj)) + ")");
  r.lines.push_back("pipeline: " + tag);
  r.lines.push_back("truncation: L = " + std::to_string(max_length) + (truncated ? "" : " (not used by this pipeline)"));
  r.lines.push_back(cells_line(cells));
  for (const auto& h : groups) {
    r.lines.push_back(h.render());
    r.machine.push_back(h.machine());
  }
  r.tables.emplace_back(std::string(to_string(pipeline)), std::move(groups));
  r.seconds = since(start);
  return r;
}

Report cmd_compare_ra(const Registry& registry, std::string_view input, const std::string& object, int m_max,
                      int max_length, const MatrixCaps& caps) {
  const auto start = Clock::now();
  Report r;
  r.command = "compare-ra " + std::string(input) + " --object " + object + " --max-degree " + std::to_string(m_max) +
              " --max-length " + std::to_string(max_length) + caps_echo(caps);
  const auto a = as_augrack(registry.at(object), "compare-ra");
  const RegistryObject obj = a;
  const auto Z = Coefficients::integers();

  r.lines.push_back("object: " + object + " (augmented rack of size " + std::to_string(a.size()) + ")");
  r.lines.push_back("truncation: L = " + std::to_string(max_length) + " (envelope, clauwens)");
  std::vector<std::vector<std::string>> rows{{"degree"}};
  for (auto p : {Pipeline::Envelope, Pipeline::Clauwens, Pipeline::RackComplex}) {
    std::string tag;
    std::vector<std::size_t> cells;
    auto groups = run_pipeline(obj, p, m_max, max_length, Z, caps, &tag, &cells);
    r.lines.push_back("pipeline: " + tag + " " + cells_line(cells));
    rows[0].push_back(std::string(to_string(p)));
    r.tables.emplace_back(std::string(to_string(p)), std::move(groups));
  }
  bool agree = true;
  for (int m = 0; m <= m_max; ++m) {
    std::vector<std::string> row{"H_" + std::to_string(m)};
    for (const auto& [tag, groups] : r.tables) {
      row.push_back(value(groups[m]));
      agree = agree && groups[m] == r.tables.front().second[m];
    }
    rows.push_back(std::move(row));
  }
  for (auto& l : columns(rows)) r.lines.push_back(std::move(l));
  r.verdict = agree ? Verdict::Agree : Verdict::Disagree;
  r.seconds = since(start);
  return r;
}

Report cmd_check_tri(const Registry& registry, std::string_view input, const std::string& object, int m_max,
                     const Coefficients& coeff, const std::vector<int>& lengths, const MatrixCaps& caps) {
  const auto start = Clock::now();
  Report r;
  std::string list;
  for (std::size_t i = 0; i < lengths.size(); ++i) list += (i ? "," : "") + std::to_string(lengths[i]);
  r.command = "check-tri " + std::string(input) + " --object " + object + " --max-degree " + std::to_string(m_max) +
              " --coeff " + coeff.name() + " --lengths " + list + caps_echo(caps);
  if (!coeff.is_field()) throw Error(ErrorKind::Incompatible, "check-tri needs field coefficients");
  if (lengths.empty()) throw Error(ErrorKind::Incompatible, "check-tri needs at least one length");
  if (m_max < 0) throw Error(ErrorKind::DegreeOutOfRange, "max degree must be non-negative");

  const auto& obj = registry.at(object);
  const FiniteGroup* x = nullptr;
  if (const auto* g = std::get_if<FiniteGroup>(&obj)) {
    x = g;
  } else if (const auto* p = std::get_if<PreCrossedModule>(&obj)) {
    if (!p->action().is_trivial()) {
      throw Error(ErrorKind::Incompatible, "check-tri needs a trivial action of G on X");
    }
    x = &p->x_group();
  } else {
    throw Error(ErrorKind::Incompatible, "check-tri needs a group or precrossed object");
  }
  const auto trivial = FiniteGroup::trivial();
  const auto p = PreCrossedModule::validate(*x, trivial, RightAction::trivial(trivial, x->order()).table(),
                                            std::vector<Element>(x->order(), trivial.identity()));

  // Generators of the tensor algebra: one per basis element of the reduced
  // homology of X, in its own degree.
  std::vector<std::pair<int, std::uint64_t>> generators;
  std::vector<HomologyGroup> hx;
  if (m_max >= 1) {
    const auto nerve = build_nerve(*x);
    hx = homology_range(chain_complex(*nerve, m_max, 0, caps), m_max, coeff);
  }
  std::string gens = "generators:";
  for (int d = 1; d <= m_max; ++d) {
    generators.emplace_back(d, static_cast<std::uint64_t>(hx[d].betti));
    gens += " " + std::to_string(hx[d].betti) + "@" + std::to_string(d);
  }
  r.lines.push_back("object: X = " + object + " (order " + std::to_string(x->order()) + "), G trivial");
  r.lines.push_back("coefficients: " + coeff.name());
  r.lines.push_back(gens.size() > 11 ? gens : gens + " none");

  std::vector<long long> expected;
  for (int m = 0; m <= m_max; ++m) expected.push_back(static_cast<long long>(tensor_algebra_dims(generators, m)));

  const auto env = build_envelope(p, WordMode::GroupSyllable);
  std::vector<std::vector<HomologyGroup>> by_length;
  for (int L : lengths) {
    by_length.push_back(homology_range(chain_complex(*env, m_max, L, caps), m_max, coeff));
    r.tables.emplace_back("envelope L=" + std::to_string(L), by_length.back());
  }

  std::vector<std::vector<std::string>> rows{{"degree", "expected"}};
  for (int L : lengths) rows[0].push_back("L=" + std::to_string(L));
  rows[0].push_back("result");
  bool agree = true;
  int covered = 0;
  for (int m = 0; m <= m_max; ++m) {
    std::vector<std::string> row{"m=" + std::to_string(m), std::to_string(expected[m])};
    bool checked = false;
    bool ok = true;
    for (std::size_t i = 0; i < lengths.size(); ++i) {
      const long long b = by_length[i][m].betti;
      // Lengths below m+1 are shown for the stabilization table only.
      if (lengths[i] >= m + 1) {
        checked = true;
        ok = ok && b == expected[m];
        row.push_back(std::to_string(b));
      } else {
        row.push_back("(" + std::to_string(b) + ")");
      }
    }
    row.push_back(!checked ? "uncovered" : ok ? "ok" : "mismatch");
    if (!checked) r.warnings.push_back("no length >= " + std::to_string(m + 1) + " covers degree " + std::to_string(m));
    covered += checked ? 1 : 0;
    agree = agree && ok;
    rows.push_back(std::move(row));
  }
  for (auto& l : columns(rows)) r.lines.push_back(std::move(l));
  r.lines.push_back("values in parentheses come from L < m+1 and are not compared");
  r.verdict = covered == 0 ? Verdict::NotApplicable : agree ? Verdict::Agree : Verdict::Disagree;
  r.seconds = since(start);
  return r;
}

Report cmd_check_coskeleton(const Registry& registry, std::string_view input, const std::string& object, int m_max,
                            const MatrixCaps& caps) {
  const auto start = Clock::now();
  Report r;
  const int L = m_max + 1;
  r.command = "check-coskeleton " + std::string(input) + " --object " + object + " --max-degree " +
              std::to_string(m_max) + caps_echo(caps);
  const auto& obj = registry.at(object);
  const auto* given = std::get_if<PreCrossedModule>(&obj);
  if (!given) throw Error(ErrorKind::Incompatible, "check-coskeleton needs a precrossed object");
  const PreCrossedModule p = given->pi_surjective() ? *given : given->restrict_to_image();
  r.lines.push_back("object: " + object + " (|X| = " + std::to_string(p.x_group().order()) +
                    ", |G| = " + std::to_string(p.group().order()) + ")");
  if (!given->pi_surjective()) {
    r.lines.push_back("pi is not surjective: G replaced by pi(X) of order " + std::to_string(p.group().order()));
  }
  r.lines.push_back("truncation: L = " + std::to_string(L) + " (envelope side of the induced maps)");

  const auto Z = Coefficients::integers();
  const auto f = canonical_to_coskeleton(p);
  const auto env = chain_complex(*f.source, m_max, L, caps);
  const auto cosk = chain_complex(*f.target, m_max, 0, caps);
  const auto nerve = chain_complex(*build_nerve(p.group()), m_max, 0, caps);
  r.tables.emplace_back("coskeleton", homology_range(cosk, m_max, Z));
  r.tables.emplace_back("nerve", homology_range(nerve, m_max, Z));

  std::vector<std::vector<std::string>> rows{{"degree", "coskeleton", "nerve"}};
  bool agree = true;
  for (int m = 0; m <= m_max; ++m) {
    const auto& a = r.tables[0].second[m];
    const auto& b = r.tables[1].second[m];
    rows.push_back({"H_" + std::to_string(m), value(a), value(b)});
    agree = agree && a == b;
  }
  for (auto& l : columns(rows)) r.lines.push_back(std::move(l));

  for (int m = 0; m <= m_max; ++m) {
    const auto map = induced_map(f, env, cosk, m);
    const bool iso = is_isomorphism(map);
    r.checks["induced H_" + std::to_string(m) + " isomorphism"] = iso;
    std::string matrix = "[";
    for (std::size_t t = 0; t < map.matrix.size(); ++t) {
      matrix += t ? "; " : "";
      for (std::size_t s = 0; s < map.matrix[t].size(); ++s) matrix += (s ? " " : "") + map.matrix[t][s].get_str();
    }
    matrix += "]";
    if (map.matrix.empty() || map.matrix.front().empty()) matrix = "0";
    r.lines.push_back("induced E/G -> M/G on H_" + std::to_string(m) + ": " + value(map.source.group) + " -> " +
                      value(map.target.group) + " matrix " + matrix + (iso ? " isomorphism" : " not an isomorphism"));
  }
  r.verdict = agree ? Verdict::Agree : Verdict::Disagree;
  r.seconds = since(start);
  return r;
}

Report cmd_sweep(const Registry& registry, std::string_view input, const std::string& object, Pipeline pipeline,
                 int m, const std::vector<int>& lengths, const Coefficients& coeff, const MatrixCaps& caps) {
  const auto start = Clock::now();
  Report r;
  std::string list;
  for (std::size_t i = 0; i < lengths.size(); ++i) list += (i ? "," : "") + std::to_string(lengths[i]);
  r.command = "sweep " + std::string(input) + " --object " + object + " --pipeline " +
              std::string(to_string(pipeline)) + " --degree " + std::to_string(m) + " --lengths " + list +
              " --coeff " + coeff.name() + caps_echo(caps);
  if (lengths.empty()) throw Error(ErrorKind::Incompatible, "sweep needs at least one length");
  const auto& obj = registry.at(object);

  std::vector<std::vector<std::string>> rows{{"L", "cells", "H_" + std::to_string(m)}};
  std::vector<HomologyGroup> values;
  std::vector<bool> empty;
  std::string tag;
  for (int L : lengths) {
    std::vector<std::size_t> cells;
    auto groups = run_pipeline(obj, pipeline, m, L, coeff, caps, &tag, &cells);
    if (cells[m] == 0) {
      r.warnings.push_back("no nondegenerate " + std::to_string(m) + "-simplices at L = " + std::to_string(L) +
                           "; H_" + std::to_string(m) + " = 0 reported");
    }
    rows.push_back({std::to_string(L), std::to_string(cells[m]), value(groups[m])});
    values.push_back(groups[m]);
    empty.push_back(cells[m] == 0);
  }
  r.lines.push_back("object: " + object + " (" + std::string(kind_name(obj)) + ")");
  r.lines.push_back("pipeline: " + tag);
  for (auto& l : columns(rows)) r.lines.push_back(std::move(l));
  std::string stable = "stabilization: none within the range";
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    // Agreement between two empty bases says nothing about stabilization.
    if (!empty[i] && values[i] == values[i + 1]) {
      stable = "stabilization: L = " + std::to_string(lengths[i]) + " equals L = " + std::to_string(lengths[i + 1]) +
               " (" + value(values[i]) + ")";
      break;
    }
  }
  r.lines.push_back(stable);
  r.tables.emplace_back("sweep", std::move(values));
  r.seconds = since(start);
  return r;
}

}  // namespace precrossed
