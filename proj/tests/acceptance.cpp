// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. An optional argument names the CLI binary, used for the
// byte-for-byte determinism check across processes.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "support/dense_smith.hpp"
#include "precrossed/commands.hpp"
#include "precrossed/oracles.hpp"

using namespace precrossed;

namespace {

const std::string kFixtures = PRECROSSED_DATA_DIR "/fixtures.txt";

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail.clear();
    pass = false;
    detail += (detail.empty() ? "" : "; ") + why;
  }
};

std::string value(const HomologyGroup& h) {
  const auto s = h.render();
  return s.substr(s.find(" = ") + 3);
}

std::string row(const std::vector<HomologyGroup>& groups) {
  std::string out;
  for (const auto& h : groups) out += (out.empty() ? "" : ",") + value(h);
  return out;
}

int run(const std::string& label, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (o.pass && seconds > limit_seconds) o.fail("took " + std::to_string(seconds) + " s");
  char timing[32];
  std::snprintf(timing, sizeof timing, "%.2f s", seconds);
  std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << label << " | " << o.detail << " | " << timing << "\n";
  std::cout.flush();
  return o.pass ? 0 : 1;
}

std::string capture(const std::string& command) {
  std::string out;
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen((command + " 2>/dev/null").c_str(), "r"), pclose);
  if (!pipe) return "<popen failed>";
  std::array<char, 4096> buf;
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe.get())) out.append(buf.data(), n);
  return out;
}

PreCrossedModule a3_in_s3(const FiniteGroup& s3) {
  std::vector<Element> a3{*s3.find("()"), *s3.find("(1,2,3)"), *s3.find("(1,3,2)")};
  std::vector<Element> embedding;
  auto x = s3.subgroup(a3, &embedding);
  Table action(x.order(), std::vector<int>(s3.order()));
  for (int i = 0; i < x.order(); ++i) {
    for (int g = 0; g < s3.order(); ++g) {
      const int image = s3.conjugate(embedding[i], g);
      action[i][g] = static_cast<int>(std::find(embedding.begin(), embedding.end(), image) - embedding.begin());
    }
  }
  return validate_precrossed(x, s3, action, embedding);
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  const auto reg = parse_input(kFixtures);
  const auto pcm = [&](const char* n) { return std::get<PreCrossedModule>(reg.at(n)); };
  const auto aug = [&](const char* n) { return std::get<AugmentedRack>(reg.at(n)); };
  const auto grp = [&](const char* n) { return std::get<FiniteGroup>(reg.at(n)); };
  int failures = 0;

  failures += run("1 three-pipeline agreement: compare-ra, M=2, L=3", 600, [&] {
    Outcome o;
    for (const char* name : {"One", "Transpositions"}) {
      const auto r = cmd_compare_ra(reg, kFixtures, name, 2, 3);
      o.detail += std::string(o.detail.empty() ? "" : "; ") + name + " " + std::string(to_string(r.verdict)) + " " +
                  row(r.table("rackcomplex"));
      if (r.verdict != Verdict::Agree) o.fail(std::string(name) + " DISAGREE");
    }
    return o;
  });

  failures += run("2 trivial racks over the trivial group: rank d^m on all pipelines", 60, [&] {
    Outcome o;
    for (const auto& [name, d] : {std::pair{"Triv1", 1}, std::pair{"Triv2", 2}}) {
      const auto r = cmd_compare_ra(reg, kFixtures, name, 2, 3);
      long long rank = 1;
      for (int m = 0; m <= 2; ++m) {
        for (const auto& [tag, groups] : r.tables) {
          if (groups[m].betti != rank || !groups[m].torsion.empty()) {
            o.fail(std::string(name) + " " + tag + " H_" + std::to_string(m) + " = " + value(groups[m]));
          }
        }
        rank *= d;
      }
      if (o.pass) o.detail += std::string(o.detail.empty() ? "" : "; ") + name + " " + row(r.table("envelope"));
    }
    return o;
  });

  failures += run("3 check-tri over F2 on X = Z/2: Betti 1,1,2,4 at L = m+1", 600, [&] {
    Outcome o;
    const std::vector<long long> expected{1, 1, 2, 4};
    for (int m = 0; m <= 3; ++m) {
      if (tensor_algebra_dims({{1, 1}, {2, 1}, {3, 1}}, m) != static_cast<std::uint64_t>(expected[m])) {
        o.fail("tensor algebra dims differ in degree " + std::to_string(m));
      }
      const auto r = cmd_check_tri(reg, kFixtures, "Z2", 3, Coefficients::prime_field(2), {m + 1});
      const auto b = r.table("envelope L=" + std::to_string(m + 1))[m].betti;
      if (b != expected[m] || r.verdict != Verdict::Agree) {
        o.fail("m=" + std::to_string(m) + " betti " + std::to_string(b));
      }
      if (o.pass) o.detail += (m ? "," : "betti ") + std::to_string(b);
    }
    return o;
  });

  failures += run("4 check-tri over Q on X = Z/2: PH_m = 0 for 1 <= m <= 3", 600, [&] {
    Outcome o;
    for (int m = 1; m <= 3; ++m) {
      const auto r = cmd_check_tri(reg, kFixtures, "Z2", 3, Coefficients::rationals(), {m + 1});
      const auto b = r.table("envelope L=" + std::to_string(m + 1))[m].betti;
      if (b != 0 || r.verdict != Verdict::Agree) o.fail("m=" + std::to_string(m) + " betti " + std::to_string(b));
      if (o.pass) o.detail += (m > 1 ? "," : "betti ") + std::to_string(b);
    }
    return o;
  });

  failures += run("5 check-coskeleton: H_m(M/G) equals bar homology, H_0 map iso", 600, [&] {
    Outcome o;
    for (const auto& [name, expect] : {std::pair{"IdZ2", "Z,Z/2,0"}, std::pair{"IdZ3", "Z,Z/3,0"}}) {
      const auto r = cmd_check_coskeleton(reg, kFixtures, name, 2);
      const auto got = row(r.table("coskeleton"));
      if (r.verdict != Verdict::Agree) o.fail(std::string(name) + " DISAGREE");
      if (got != expect) o.fail(std::string(name) + " gave " + got);
      if (row(r.table("nerve")) != expect) o.fail(std::string(name) + " nerve gave " + row(r.table("nerve")));
      if (!r.checks.at("induced H_0 isomorphism")) o.fail(std::string(name) + " H_0 map not an isomorphism");
      if (o.pass) o.detail += std::string(o.detail.empty() ? "" : "; ") + name + " " + got;
    }
    return o;
  });

  failures += run("6 property suites", 600, [&] {
    Outcome o;
    // Simplicial identities on all four builders, degrees <= 4, L <= 3.
    std::vector<std::pair<std::string, SpecPtr>> specs{
        {"envelope Z2triv", build_envelope(pcm("Z2triv"), WordMode::GroupSyllable)},
        {"envelope IdZ3", build_envelope(pcm("IdZ3"), WordMode::GroupSyllable)},
        {"envelope One", build_envelope(aug("One"))},
        {"envelope Transpositions", build_envelope(aug("Transpositions"))},
        {"clauwens One", build_clauwens(aug("One"))},
        {"clauwens Transpositions", build_clauwens(aug("Transpositions"))},
        {"coskeleton IdZ2", build_coskeleton(pcm("IdZ2"))},
        {"coskeleton IdZ3", build_coskeleton(pcm("IdZ3"))},
        {"nerve S3", build_nerve(grp("S3"))},
        {"nerve Z3", build_nerve(grp("Z3"))},
    };
    std::size_t checked = 0;
    for (const auto& [name, spec] : specs) {
      const auto r = check_simplicial_identities(*spec, 4, spec->truncated() ? 3 : 0, 1u << 30);
      checked += r.simplices_checked;
      if (!r.ok) o.fail(name + ": " + r.violation);
    }

    // Boundary of boundary, as a hard assertion on every complex.
    for (const auto& [name, spec] : specs) {
      try {
        chain_complex(*spec, 2, spec->truncated() ? 3 : 0).verify();
      } catch (const Error& e) {
        o.fail(name + ": " + e.what());
      }
    }
    try {
      rack_complex(aug("Tetrahedral"), 3).verify();
    } catch (const Error& e) {
      o.fail(std::string("rack complex: ") + e.what());
    }

    // Smith normal form contracts against the dense oracle.
    std::mt19937 rng(1234);
    std::uniform_int_distribution<int> side(1, 20), entry(-9, 9);
    int snf_bad = 0;
    for (int trial = 0; trial < 1000; ++trial) {
      const int rows = side(rng), cols = side(rng);
      DenseMatrix m(rows, cols);
      oracle::Matrix om(rows, std::vector<oracle::BigInt>(cols));
      for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
          const int v = entry(rng);
          m(r, c) = v;
          om[r][c] = v;
        }
      }
      const auto snf = smith_normal_form(SparseIntMatrix::from_dense(m), true);
      const auto expected = oracle::smith_diagonal(om);
      DenseMatrix d(rows, cols);
      bool ok = true;
      for (std::size_t i = 0; i < snf.diagonal.size(); ++i) {
        d(i, i) = snf.diagonal[i];
        ok = ok && oracle::BigInt(snf.diagonal[i].get_str()) == expected[i];
        if (i + 1 < snf.diagonal.size() && snf.diagonal[i + 1] != 0) ok = ok && snf.diagonal[i + 1] % snf.diagonal[i] == 0;
      }
      ok = ok && *snf.u * m * *snf.v == d;
      snf_bad += ok ? 0 : 1;
    }
    if (snf_bad) o.fail(std::to_string(snf_bad) + " SNF mismatches");

    // Independence of G: the envelope only sees the pre-crossed action.
    const auto s3 = grp("S3");
    for (const auto& p : {pcm("IdZ2"), pcm("IdZ3"), pcm("TrivZ2"), a3_in_s3(s3)}) {
      const auto a = build_envelope(p, WordMode::GroupSyllable);
      const auto b = build_envelope(precrossed_action(p).module, WordMode::GroupSyllable);
      const auto ca = chain_complex(*a, 2, 3), cb = chain_complex(*b, 2, 3);
      for (int k = 0; k <= 3; ++k) {
        if (ca.basis[k] != cb.basis[k] || ca.boundary[k].entries().size() != cb.boundary[k].entries().size()) {
          o.fail("envelope depends on G in degree " + std::to_string(k));
          continue;
        }
        const auto ea = ca.boundary[k].entries(), eb = cb.boundary[k].entries();
        for (std::size_t i = 0; i < ea.size(); ++i) {
          if (ea[i].row != eb[i].row || ea[i].col != eb[i].col || ea[i].value != eb[i].value) {
            o.fail("boundary depends on G in degree " + std::to_string(k));
            break;
          }
        }
      }
    }

    // Truncation stabilization of H_1.
    std::vector<std::pair<std::string, SpecPtr>> envelopes{
        {"Z2triv", build_envelope(pcm("Z2triv"), WordMode::GroupSyllable)},
        {"IdZ2", build_envelope(pcm("IdZ2"), WordMode::GroupSyllable)},
        {"IdZ3", build_envelope(pcm("IdZ3"), WordMode::GroupSyllable)},
        {"One", build_envelope(aug("One"))},
        {"Triv2", build_envelope(aug("Triv2"))},
        {"Transpositions", build_envelope(aug("Transpositions"))},
    };
    for (const auto& [name, spec] : envelopes) {
      const auto h2 = homology(chain_complex(*spec, 1, 2), 1, Coefficients::integers());
      const auto h3 = homology(chain_complex(*spec, 1, 3), 1, Coefficients::integers());
      if (!(h2 == h3)) o.fail(name + " H_1 " + value(h2) + " at L=2 vs " + value(h3) + " at L=3");
    }
    if (o.pass) {
      o.detail = std::to_string(checked) + " simplices, 1000 SNF, 4 modules independent of G, " +
                 std::to_string(envelopes.size()) + " H_1 stable";
    }
    return o;
  });

  failures += run("7 determinism: repeated runs give byte-identical reports", 600, [&] {
    Outcome o;
    const std::vector<std::function<Report()>> commands{
        [&] { return cmd_compare_ra(reg, kFixtures, "Transpositions", 2, 3); },
        [&] { return cmd_check_tri(reg, kFixtures, "Z2", 3, Coefficients::prime_field(2), {1, 2, 3, 4}); },
        [&] { return cmd_check_coskeleton(reg, kFixtures, "IdZ3", 2); },
        [&] { return cmd_homology(reg, kFixtures, "Z2triv", Pipeline::Envelope, 1, 2, Coefficients::integers()); },
    };
    for (std::size_t i = 0; i < commands.size(); ++i) {
      if (commands[i]().render() != commands[i]().render()) o.fail("in-process report " + std::to_string(i));
    }
    int processes = 0;
    if (!cli.empty()) {
      for (const std::string args :
           {"compare-ra " + kFixtures + " --object Transpositions --max-degree 2 --max-length 3",
            "compare-ra " + kFixtures + " --object One --max-degree 2 --max-length 3",
            "check-tri " + kFixtures + " --object Z2 --max-degree 3 --coeff F2 --lengths 1..4",
            "check-tri " + kFixtures + " --object Z2 --max-degree 3 --coeff Q --lengths 2,3,4",
            "check-coskeleton " + kFixtures + " --object IdZ2 --max-degree 2",
            "check-coskeleton " + kFixtures + " --object IdZ3 --max-degree 2"}) {
        const auto a = capture(cli + " " + args);
        const auto b = capture(cli + " " + args);
        if (a.empty() || a != b) o.fail("CLI output differs for: " + args);
        ++processes;
      }
    }
    if (o.pass) {
      o.detail = std::to_string(commands.size()) + " in-process reports, " + std::to_string(processes) +
                 " CLI commands run twice";
    }
    return o;
  });

  std::cout << (failures ? std::to_string(failures) + " criteria failed\n" : "all criteria passed\n");
  return failures ? 1 : 0;
}
