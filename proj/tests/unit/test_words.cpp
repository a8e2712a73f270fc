#include "doctest.h"

#include <random>
#include <set>

#include "../support/fixtures.hpp"
#include "precrossed/simplicial.hpp"
#include "precrossed/words.hpp"

using namespace precrossed;
using test_support::error_of;
using test_support::get;

namespace {

PreCrossedModule id_s3() {
  const auto& s3 = get<FiniteGroup>("S3");
  std::vector<Element> id(6);
  for (int i = 0; i < 6; ++i) id[i] = i;
  return validate_precrossed(s3, s3, RightAction::conjugation(s3).table(), id);
}

/// Every normal form of the given degree and length bound, with every tail.
std::vector<EnvelopeWord> all_words(const WordSpec& spec, int degree, int max_length) {
  std::vector<EnvelopeWord> out;
  const auto& g = spec.algebra().group();
  for (const auto& s : spec.enumerate(degree, max_length)) {
    for (int t = 0; t < g.order(); ++t) {
      auto w = std::get<EnvelopeWord>(s.payload);
      w.tail = t;
      out.push_back(std::move(w));
    }
  }
  return out;
}

}  // namespace

TEST_SUITE("words") {
  TEST_CASE("reduce") {
    const auto gs = WordAlgebra::for_precrossed(get<PreCrossedModule>("Z2triv"), WordMode::GroupSyllable);
    CHECK(gs.reduce({{1, 1, 0}, {1, 1, 0}}, 1, 0).letters.empty());
    CHECK(gs.reduce({{1, 1, 0}, {1, 1, 1}, {1, 1, 1}}, 2, 0).letters == std::vector<Letter>{{1, 1, 0}});

    const auto free = WordAlgebra::for_augmented_rack(get<AugmentedRack>("One"), WordMode::FreeLetter);
    CHECK(free.reduce({{0, 1, 0}, {0, -1, 0}}, 1, 0).letters.empty());
    CHECK(free.reduce({{0, 1, 0}, {0, -1, 1}}, 2, 0).length() == 2);

    const auto monoid = WordAlgebra::for_augmented_rack(get<AugmentedRack>("One"), WordMode::MonoidLetter);
    CHECK(monoid.reduce({{0, 1, 0}, {0, 1, 0}}, 1, 0).length() == 2);
    CHECK(error_of([&] { monoid.reduce({{0, -1, 0}}, 1, 0); }) == ErrorKind::ModeMismatch);
    CHECK(error_of([&] { monoid.reduce({{0, 1, 1}}, 1, 0); }) == ErrorKind::IndexOutOfRange);
  }

  TEST_CASE("mode compatibility") {
    CHECK(error_of([] { WordAlgebra::for_precrossed(get<PreCrossedModule>("IdZ2"), WordMode::MonoidLetter); }) ==
          ErrorKind::ModeMismatch);
    CHECK(error_of([] { WordAlgebra::for_augmented_rack(get<AugmentedRack>("One"), WordMode::GroupSyllable); }) ==
          ErrorKind::ModeMismatch);
  }

  TEST_CASE("multiply") {
    const auto gs = WordAlgebra::for_precrossed(get<PreCrossedModule>("Z2triv"), WordMode::GroupSyllable);
    const auto t0 = gs.reduce({{1, 1, 0}}, 1, 0);
    CHECK(gs.multiply(t0, t0) == gs.identity_word(1));
    CHECK(error_of([&] { gs.multiply(t0, gs.identity_word(2)); }) == ErrorKind::DegreeMismatch);

    const auto z3 = WordAlgebra::for_precrossed(get<PreCrossedModule>("IdZ3"), WordMode::GroupSyllable);
    auto a = z3.identity_word(2);
    auto b = z3.identity_word(2);
    a.tail = 1;
    b.tail = 2;
    CHECK(z3.multiply(a, b).tail == 0);
    CHECK(z3.multiply(a, a).tail == 2);

    // A tail g in front of a letter twists the letter by g^-1.
    const auto p = id_s3();
    const auto s3 = WordAlgebra::for_precrossed(p, WordMode::GroupSyllable);
    const auto& g = p.group();
    const int t = *g.find("(1,2)");
    const int r = *g.find("(1,2,3)");
    auto w1 = s3.identity_word(2);
    w1.tail = t;
    const auto w2 = s3.reduce({{r, 1, 1}}, 2, g.identity());
    const auto prod = s3.multiply(w1, w2);
    REQUIRE(prod.length() == 1);
    CHECK(prod.letters[0].base == g.conjugate(r, g.inverse(t)));
    CHECK(prod.tail == t);
  }

  TEST_CASE("twist") {
    const auto p = id_s3();
    const auto s3 = WordAlgebra::for_precrossed(p, WordMode::GroupSyllable);
    const auto& g = p.group();
    const int t = *g.find("(1,2)");
    const int r = *g.find("(1,2,3)");
    const auto w = s3.twist(t, s3.reduce({{r, 1, 0}}, 1, g.identity()));
    CHECK(w.letters[0].base == g.mul(r, r));
  }

  TEST_CASE("normalize_mixed") {
    const auto p = id_s3();
    const auto s3 = WordAlgebra::for_precrossed(p, WordMode::GroupSyllable);
    const auto& g = p.group();
    const int t = *g.find("(1,2)");
    const int r = *g.find("(1,2,3)");
    const int u = *g.find("(1,3)");

    const std::vector<MixedItem> lone{Element{t}};
    const auto w0 = s3.normalize_mixed(lone, 2);
    CHECK(w0.letters.empty());
    CHECK(w0.tail == t);

    // [pi(y), (x,0)] with y = (1,2): (x^{pi(y)^-1}, 0) and tail pi(y).
    const std::vector<MixedItem> one{Element{t}, Letter{r, 1, 0}};
    const auto w1 = s3.normalize_mixed(one, 2);
    REQUIRE(w1.length() == 1);
    CHECK(w1.letters[0].base == p.action().apply(r, g.inverse(t)));
    CHECK(w1.tail == t);

    // [(x,0), g, (y,1), h] -> (x,0)(y^{g^-1},1) with tail gh.
    const std::vector<MixedItem> two{Letter{r, 1, 0}, Element{t}, Letter{u, 1, 1}, Element{r}};
    const auto w2 = s3.normalize_mixed(two, 2);
    REQUIRE(w2.length() == 2);
    CHECK(w2.letters[0] == Letter{r, 1, 0});
    CHECK(w2.letters[1] == Letter{p.action().apply(u, g.inverse(t)), 1, 1});
    CHECK(w2.tail == g.mul(t, r));
  }

  TEST_CASE("encode") {
    const auto free = WordAlgebra::for_augmented_rack(get<AugmentedRack>("One"), WordMode::FreeLetter);
    CHECK(free.encode(free.identity_word(1)) == "1");
    CHECK(free.encode(free.reduce({{0, 1, 0}, {0, -1, 1}}, 2, 0)) == "(a@0)(a^-1@1)");
    CHECK(free.encode(free.reduce({{0, 1, 0}}, 1, 1)) == "(a@0)|t");
  }

  TEST_CASE("reduce is idempotent and multiply is associative") {
    struct Case {
      std::shared_ptr<const WordSpec> spec;
      int degree;
      int length;
    };
    const std::vector<Case> exhaustive{
        {build_envelope(get<PreCrossedModule>("IdZ3"), WordMode::GroupSyllable), 2, 3},
        {build_envelope(get<PreCrossedModule>("IdZ2"), WordMode::GroupSyllable), 3, 3},
        {build_envelope(get<AugmentedRack>("One"), WordMode::FreeLetter), 2, 3},
        {build_envelope(get<AugmentedRack>("Transpositions"), WordMode::FreeLetter), 1, 1},
        {build_clauwens(get<AugmentedRack>("One")), 3, 3},
        {build_clauwens(get<AugmentedRack>("Triv2")), 2, 2},
    };
    for (const auto& c : exhaustive) {
      const auto& alg = c.spec->algebra();
      const auto words = all_words(*c.spec, c.degree, c.length);
      for (const auto& w : words) {
        const auto again = alg.reduce(w.letters, w.degree, w.tail);
        CHECK(again == w);
      }
      bool assoc = true;
      for (const auto& a : words) {
        for (const auto& b : words) {
          const auto ab = alg.multiply(a, b);
          for (const auto& d : words) assoc = assoc && alg.multiply(ab, d) == alg.multiply(a, alg.multiply(b, d));
        }
      }
      CHECK_MESSAGE(assoc, to_string(alg.mode()));
    }

    // Degree 3, length 3 for |X| <= 3: sampled triples.
    const std::vector<Case> sampled{
        {build_envelope(get<PreCrossedModule>("IdZ3"), WordMode::GroupSyllable), 3, 3},
        {build_envelope(get<AugmentedRack>("Transpositions"), WordMode::FreeLetter), 3, 3},
        {build_clauwens(get<AugmentedRack>("Transpositions")), 3, 3},
    };
    std::mt19937 rng(2024);
    for (const auto& c : sampled) {
      const auto& alg = c.spec->algebra();
      const auto words = all_words(*c.spec, c.degree, c.length);
      std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
      bool assoc = true;
      for (int i = 0; i < 20000; ++i) {
        const auto& a = words[pick(rng)];
        const auto& b = words[pick(rng)];
        const auto& d = words[pick(rng)];
        assoc = assoc && alg.multiply(alg.multiply(a, b), d) == alg.multiply(a, alg.multiply(b, d));
      }
      CHECK_MESSAGE(assoc, to_string(alg.mode()));
    }
  }

  TEST_CASE("twist is a bijection on normal forms of each length") {
    const auto p = id_s3();
    const std::vector<std::shared_ptr<const WordSpec>> specs{
        build_envelope(p, WordMode::GroupSyllable),
        build_envelope(get<AugmentedRack>("Transpositions"), WordMode::FreeLetter),
        build_clauwens(get<AugmentedRack>("Tetrahedral")),
    };
    for (const auto& spec : specs) {
      const auto& alg = spec->algebra();
      const auto simplices = spec->enumerate(2, 2);
      for (int g = 0; g < alg.group().order(); ++g) {
        std::set<std::string> images;
        for (const auto& s : simplices) {
          const auto& w = std::get<EnvelopeWord>(s.payload);
          const auto tw = alg.twist(g, w);
          CHECK(tw.length() == w.length());
          CHECK(tw.mode == w.mode);
          CHECK(alg.reduce(tw.letters, tw.degree, tw.tail) == tw);
          images.insert(alg.encode(tw));
        }
        CHECK(images.size() == simplices.size());
      }
    }
  }
}
