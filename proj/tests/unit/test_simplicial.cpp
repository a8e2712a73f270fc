#include "doctest.h"

#include <algorithm>
#include <set>

#include "../support/fixtures.hpp"
#include "precrossed/simplicial.hpp"

using namespace precrossed;
using test_support::error_of;
using test_support::get;

namespace {

std::vector<std::string> encodings(const SimplicialSpec& spec, const std::vector<Simplex>& simplices) {
  std::vector<std::string> out;
  for (const auto& s : simplices) out.push_back(spec.encode(s));
  return out;
}

PreCrossedModule id_s3() {
  const auto& s3 = get<FiniteGroup>("S3");
  std::vector<Element> id(6);
  for (int i = 0; i < 6; ++i) id[i] = i;
  return validate_precrossed(s3, s3, RightAction::conjugation(s3).table(), id);
}

/// A_3 inside S_3 acted on by conjugation: pi is not surjective and the
/// pre-crossed action is nontrivial.
PreCrossedModule a3_in_s3() {
  const auto& s3 = get<FiniteGroup>("S3");
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

/// Nerve whose d_0 forgets the last entry instead of the first.
class CorruptNerve : public NerveSpec {
 public:
  using NerveSpec::NerveSpec;

 protected:
  Simplex do_face(int i, const Simplex& s) const override {
    if (i != 0) return NerveSpec::do_face(i, s);
    auto t = std::get<NerveTuple>(s.payload);
    t.pop_back();
    return Simplex{s.degree - 1, t};
  }
};

std::vector<std::pair<std::string, SpecPtr>> all_builders() {
  std::vector<std::pair<std::string, SpecPtr>> out;
  for (const auto& name : test_support::fixtures().names()) {
    const auto& obj = test_support::fixtures().at(name);
    if (const auto* g = std::get_if<FiniteGroup>(&obj)) {
      if (g->order() <= 6) out.emplace_back("nerve " + name, build_nerve(*g));
    } else if (const auto* a = std::get_if<AugmentedRack>(&obj)) {
      out.emplace_back("clauwens " + name, build_clauwens(*a));
      if (a->size() <= 3) out.emplace_back("envelope " + name, build_envelope(*a, WordMode::FreeLetter));
    } else if (const auto* p = std::get_if<PreCrossedModule>(&obj)) {
      out.emplace_back("envelope " + name, build_envelope(*p, WordMode::GroupSyllable));
      out.emplace_back("coskeleton " + name, build_coskeleton(*p));
    }
  }
  out.emplace_back("envelope id S3", build_envelope(id_s3(), WordMode::GroupSyllable));
  out.emplace_back("coskeleton id S3", build_coskeleton(id_s3()));
  out.emplace_back("envelope A3 in S3", build_envelope(a3_in_s3(), WordMode::GroupSyllable));
  out.emplace_back("coskeleton A3 in S3", build_coskeleton(a3_in_s3()));
  return out;
}

}  // namespace

TEST_SUITE("simplicial") {
  TEST_CASE("envelope of Z/2 -> 1") {
    const auto env = build_envelope(get<PreCrossedModule>("Z2triv"), WordMode::GroupSyllable);
    CHECK(encodings(*env, env->nondegenerate(2, 2)) == std::vector<std::string>{"(t@0)(t@1)", "(t@1)(t@0)"});
    // 1 + 3 + 3*2 words over (t@j) with adjacent positions distinct.
    CHECK(env->enumerate(3, 2).size() == 10);
    CHECK(env->nondegenerate(2, 2).size() == 2);
  }

  TEST_CASE("envelope of a trivial X is a point") {
    const auto env = build_envelope(get<PreCrossedModule>("TrivZ2"), WordMode::GroupSyllable);
    for (int k = 1; k <= 4; ++k) {
      CHECK(env->enumerate(k, 3).size() == 1);
      CHECK(env->nondegenerate(k, 3).empty());
    }
  }

  TEST_CASE("free-letter envelope of the one-element rack") {
    const auto env = build_envelope(get<AugmentedRack>("One"), WordMode::FreeLetter);
    const auto words = encodings(*env, env->nondegenerate(1, 2));
    CHECK(std::set<std::string>(words.begin(), words.end()) ==
          std::set<std::string>{"(a@0)", "(a^-1@0)", "(a@0)(a@0)", "(a^-1@0)(a^-1@0)"});
  }

  TEST_CASE("Clauwens object") {
    const auto one = build_clauwens(get<AugmentedRack>("One"));
    CHECK(encodings(*one, one->nondegenerate(2, 2)) == std::vector<std::string>{"(a@0)(a@1)", "(a@1)(a@0)"});
    const auto t = build_clauwens(get<AugmentedRack>("Transpositions"));
    CHECK(encodings(*t, t->nondegenerate(1, 1)) ==
          std::vector<std::string>{"((1,2)@0)", "((1,3)@0)", "((2,3)@0)"});
    const auto empty = build_clauwens(validate_augmented_rack({}, get<FiniteGroup>("Z2"), {}, {}));
    for (int k = 1; k <= 3; ++k) {
      CHECK(empty->enumerate(k, 3).size() == 1);
      CHECK(empty->nondegenerate(k, 3).empty());
    }
  }

  TEST_CASE("faces") {
    const auto env = build_envelope(get<PreCrossedModule>("Z2triv"), WordMode::GroupSyllable);
    const auto& alg = env->algebra();
    const auto t0 = env->make(alg.reduce({{1, 1, 0}}, 1, 0));
    CHECK(env->encode(env->face(0, t0)) == "1");
    CHECK(env->encode(env->face(1, t0)) == "1");
    const auto t01 = env->make(alg.reduce({{1, 1, 0}, {1, 1, 1}}, 2, 0));
    CHECK(env->encode(env->face(1, t01)) == "1");
    CHECK(env->encode(env->face(0, t01)) == "(t@0)");
    CHECK(env->encode(env->face(2, t01)) == "(t@0)");
    CHECK(error_of([&] { env->face(3, t01); }) == ErrorKind::IndexOutOfRange);

    // d_2 of (y@1)(x@0): the letter at position 1 becomes pi(y) and is pushed past (x@0).
    const auto p = id_s3();
    const auto s3 = build_envelope(p, WordMode::GroupSyllable);
    const auto& g = p.group();
    const int y = *g.find("(1,2)");
    const int x = *g.find("(1,2,3)");
    const auto w = s3->make(s3->algebra().reduce({{y, 1, 1}, {x, 1, 0}}, 2, g.identity()));
    const auto d2 = std::get<EnvelopeWord>(s3->face(2, w).payload);
    REQUIRE(d2.length() == 1);
    CHECK(d2.letters[0] == Letter{p.action().apply(x, g.inverse(y)), 1, 0});
  }

  TEST_CASE("degeneracies and degeneracy detection") {
    const auto env = build_envelope(get<PreCrossedModule>("Z2triv"), WordMode::GroupSyllable);
    const auto& alg = env->algebra();
    const auto t0 = env->make(alg.reduce({{1, 1, 0}}, 1, 0));
    CHECK(env->encode(env->degeneracy(0, t0)) == "(t@1)");
    CHECK(env->encode(env->degeneracy(1, t0)) == "(t@0)");
    CHECK(env->degeneracy(0, t0).degree == 2);
    const auto base = env->make(alg.identity_word(2));
    for (int i = 0; i <= 2; ++i) CHECK(env->encode(env->degeneracy(i, base)) == "1");

    CHECK(env->is_degenerate(env->make(alg.reduce({{1, 1, 1}}, 2, 0))));
    CHECK_FALSE(env->is_degenerate(env->make(alg.reduce({{1, 1, 0}, {1, 1, 1}}, 2, 0))));
    for (int k = 1; k <= 4; ++k) CHECK(env->is_degenerate(env->make(alg.identity_word(k))));
  }

  TEST_CASE("nerve") {
    const auto z2 = build_nerve(get<FiniteGroup>("Z2"));
    CHECK(z2->enumerate(2, 0).size() == 4);
    CHECK(z2->nondegenerate(2, 0).size() == 1);
    CHECK(z2->enumerate(3, 0).size() == 8);
    const auto point = build_nerve(get<FiniteGroup>("T"));
    for (int k = 0; k <= 3; ++k) CHECK(point->enumerate(k, 0).size() == 1);
    const auto& s3g = get<FiniteGroup>("S3");
    const auto s3 = build_nerve(s3g);
    const int a = *s3g.find("(1,2)");
    const int b = *s3g.find("(1,2,3)");
    const auto d1 = s3->face(1, Simplex{2, NerveTuple{a, b}});
    CHECK(std::get<NerveTuple>(d1.payload) == NerveTuple{s3g.mul(a, b)});
  }

  TEST_CASE("coskeleton") {
    const auto z2 = build_coskeleton(get<PreCrossedModule>("IdZ2"));
    CHECK(z2->enumerate(1, 0).size() == 2);
    CHECK(z2->enumerate(2, 0).size() == 4);
    // With X trivial every vertex equals the identity, so M/G is a point.
    const auto triv = build_coskeleton(get<PreCrossedModule>("TrivZ2"));
    for (int k = 0; k <= 3; ++k) CHECK(triv->enumerate(k, 0).size() == 1);
    // id: G -> G has |G|^k families, one per vertex tuple.
    const auto s3 = build_coskeleton(id_s3());
    CHECK(s3->enumerate(2, 0).size() == 36);
  }

  TEST_CASE("simplicial identities on the documented examples") {
    const auto env = build_envelope(get<PreCrossedModule>("Z2triv"), WordMode::GroupSyllable);
    const auto r = check_simplicial_identities(*env, 4, 3, 1u << 30);
    CHECK(r.ok);
    CHECK(r.simplices_checked > 0);
    CHECK(check_simplicial_identities(*build_nerve(get<FiniteGroup>("S3")), 3, 0, 1u << 30).ok);

    const CorruptNerve bad(get<FiniteGroup>("S3"));
    const auto broken = check_simplicial_identities(bad, 3, 0, 1u << 30);
    CHECK_FALSE(broken.ok);
    CHECK_FALSE(broken.violation.empty());
  }

  TEST_CASE("simplicial identities hold exhaustively on every builder") {
    for (const auto& [name, spec] : all_builders()) {
      const int L = spec->truncated() ? 3 : 0;
      const auto r = check_simplicial_identities(*spec, 4, L, 1u << 30);
      CHECK_MESSAGE(r.ok, name << ": " << r.violation);
    }
    // L = 4 on the smallest word fixtures.
    CHECK(check_simplicial_identities(*build_envelope(get<PreCrossedModule>("Z2triv"), WordMode::GroupSyllable), 4,
                                      4, 1u << 30)
              .ok);
    CHECK(check_simplicial_identities(*build_clauwens(get<AugmentedRack>("One")), 4, 4, 1u << 30).ok);
  }

  TEST_CASE("faces never increase length and degeneracies preserve it") {
    for (const auto& [name, spec] : all_builders()) {
      if (!spec->truncated()) continue;
      bool ok = true;
      for (int k = 1; k <= 3; ++k) {
        for (const auto& s : spec->enumerate(k, 3)) {
          for (int i = 0; i <= k; ++i) {
            ok = ok && spec->face(i, s).length() <= s.length();
            ok = ok && spec->degeneracy(i, s).length() == s.length();
          }
        }
      }
      CHECK_MESSAGE(ok, name);
    }
  }

  TEST_CASE("the envelope depends only on the pre-crossed action") {
    for (const auto& p : {get<PreCrossedModule>("IdZ2"), get<PreCrossedModule>("IdZ3"),
                          get<PreCrossedModule>("TrivZ2"), id_s3(), a3_in_s3()}) {
      const auto reduced = precrossed_action(p).module;
      const auto a = build_envelope(p, WordMode::GroupSyllable);
      const auto b = build_envelope(reduced, WordMode::GroupSyllable);
      for (int k = 0; k <= 3; ++k) {
        const auto sa = a->enumerate(k, 3);
        const auto sb = b->enumerate(k, 3);
        REQUIRE(encodings(*a, sa) == encodings(*b, sb));
        for (std::size_t n = 0; n < sa.size(); ++n) {
          for (int i = 0; i <= k; ++i) {
            if (k > 0) CHECK(a->encode(a->face(i, sa[n])) == b->encode(b->face(i, sb[n])));
            CHECK(a->encode(a->degeneracy(i, sa[n])) == b->encode(b->degeneracy(i, sb[n])));
          }
        }
      }
    }
  }

  TEST_CASE("the canonical map to the coskeleton is simplicial") {
    for (const auto& p : {get<PreCrossedModule>("IdZ2"), get<PreCrossedModule>("IdZ3"),
                          get<PreCrossedModule>("Z2triv"), a3_in_s3()}) {
      const auto f = canonical_to_coskeleton(p);
      const auto r = check_commutes(f, 3, 3, 1u << 30);
      CHECK_MESSAGE(r.ok, r.violation);
    }
    const auto r = check_commutes(canonical_to_coskeleton(id_s3()), 3, 2, 1u << 30);
    CHECK_MESSAGE(r.ok, r.violation);
  }

  TEST_CASE("caps") {
    const auto env = build_envelope(get<AugmentedRack>("Transpositions"), WordMode::FreeLetter);
    CHECK(error_of([&] { env->enumerate(3, 3, 100); }) == ErrorKind::ResourceBound);
  }
}
