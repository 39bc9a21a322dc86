#include <doctest.h>

#include <map>
#include <random>

#include "helpers.hpp"

using namespace cap;

TEST_CASE("parse: paper presentation of order 81") {
  PcPresentation P = parse_presentation("gens x,y,s2; pow x^9=1, y^3=s2; comm [y,x]=s2");
  CHECK(P.n == 4);
  CHECK(P.log_order() == 4);
  CHECK(check_consistency(P).ok);
}

TEST_CASE("parse: cyclic group of order 3") {
  PcPresentation P = parse_presentation("gens a; pow a^3=1");
  CHECK(P.n == 1);
  CHECK(P.log_order() == 1);
  CHECK(P.power[0].is_identity());
}

TEST_CASE("parse: order 3^6 presentation") {
  PcPresentation P =
      parse_presentation("gens x,y,s2,s3,t3; pow x^9=t3, y^3=s3; comm [y,x]=s2,[s2,x]=s3,[s2,y]=t3");
  CHECK(P.log_order() == 6);
  CHECK(check_consistency(P).ok);
  CHECK(are_isomorphic(P, test::group("729_17")));
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_presentation("gens a; pow b^3=1"), ParseError);
  CHECK_THROWS_AS(parse_presentation("pow a^3=1"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens a,a"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens a,b; comm [a,a]=1"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens a,b; comm [a,c]=1"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens a,b,c; comm [b,a]=a"), ParseError);
  // [a,b] is read as [b,a]^-1
  CHECK(parse_presentation("gens a,b,c; comm [a,b]=c") == parse_presentation("gens a,b,c; comm [b,a]=c^2"));
}

TEST_CASE("print and parse round trip") {
  for (const auto& e : test::catalog().entries) {
    PcPresentation Q = parse_presentation(print_presentation(e.pres, e.name));
    CHECK_MESSAGE(Q == e.pres, e.name);
  }
}

TEST_CASE("collect") {
  const PcPresentation& G = test::group("81_4");
  CHECK(collect({}, G).is_identity());
  CHECK(test::word(G, "y*y*y") == test::word(G, "s2"));
  CHECK(commutator(test::word(G, "y"), test::word(G, "x"), G) == test::word(G, "s2"));

  // abelian C9 x C3 against its multiplication table Z/9 x Z/3
  const PcPresentation& A = test::group("C9xC3");
  auto coords = [&](const Elem& e) {
    for (int a = 0; a < 9; ++a)
      for (int b = 0; b < 3; ++b)
        if (multiply(power(test::word(A, "x"), a, A), power(test::word(A, "y"), b, A), A) == e) return std::pair{a, b};
    return std::pair{-1, -1};
  };
  CHECK(coords(test::word(A, "x^2*y*x^2")) == std::pair{4, 1});
  CHECK(coords(test::word(A, "y^2*x^8*y*x^5")) == std::pair{4, 0});
}

TEST_CASE("collection is confluent") {
  std::mt19937_64 rng(7);
  for (const char* name : {"81_4", "729_17", "2187_190"}) {
    const PcPresentation& P = test::group(name);
    std::uniform_int_distribution<int> gen(0, P.n - 1), ex(-4, 4);
    for (int t = 0; t < 200; ++t) {
      Word w1, w2;
      for (int k = 0; k < 6; ++k) w1.emplace_back(gen(rng), ex(rng));
      for (int k = 0; k < 6; ++k) w2.emplace_back(gen(rng), ex(rng));
      Word w = w1;
      w.insert(w.end(), w2.begin(), w2.end());
      CHECK(collect(w, P) == multiply(collect(w1, P), collect(w2, P), P));
    }
  }
}

TEST_CASE("group laws over all elements") {
  for (const auto& e : test::catalog().entries) {
    const PcPresentation& P = e.pres;
    if (P.log_order() > 6) continue;
    auto all = enumerate_elements(P);
    long long big = 1;
    for (int i = 0; i < P.n; ++i) big *= 3;
    for (const auto& a : all) {
      CHECK(multiply(identity(), a, P) == a);
      CHECK(multiply(a, inverse(a, P), P).is_identity());
      CHECK(power(a, big, P).is_identity());
    }
  }
}

TEST_CASE("element orders") {
  const PcPresentation& G = test::group("81_4");
  CHECK(element_order(identity(), G) == 1);
  CHECK(element_order(test::word(G, "x"), G) == 9);

  // histogram of <729,9> against repeated multiplication
  const PcPresentation& T = test::group("729_9");
  std::map<long long, int> lib, brute;
  for (const auto& a : enumerate_elements(T)) {
    ++lib[element_order(a, T)];
    Elem b = a;
    long long k = 1;
    while (!b.is_identity()) {
      b = multiply(b, a, T);
      ++k;
    }
    ++brute[k];
  }
  CHECK(lib == brute);
  CHECK(lib[1] == 1);
  int total = 0;
  for (auto [o, c] : lib) total += c;
  CHECK(total == 729);
}

TEST_CASE("consistency") {
  CHECK(check_consistency(test::group("trivial")).ok);
  for (const char* name : {"81_4", "729_17", "729_20", "2187_180", "2187_190", "729_9"})
    CHECK_MESSAGE(check_consistency(test::group(name)).ok, name);

  PcPresentation bad = parse_presentation("gens a,b,c,d; pow a^3=c; comm [b,a]=c; comm [c,b]=d");
  CHECK_FALSE(check_consistency(bad).ok);

  // <81,4> with [y,x] changed to s2^2: decide by brute-force associativity
  PcPresentation alt = parse_presentation("gens x,y,s2; pow x^9=1, y^3=s2; comm [y,x]=s2^2");
  auto all = enumerate_elements(alt);
  bool assoc = true;
  for (size_t i = 0; i < all.size() && assoc; ++i)
    for (size_t j = 0; j < all.size() && assoc; ++j)
      for (size_t k = 0; k < all.size() && assoc; k += 7)
        assoc = multiply(multiply(all[i], all[j], alt), all[k], alt) == multiply(all[i], multiply(all[j], all[k], alt), alt);
  CHECK(check_consistency(alt).ok == assoc);
}

TEST_CASE("enumerate elements") {
  CHECK(enumerate_elements(test::group("C3")).size() == 3);
  CHECK(enumerate_elements(test::group("81_4")).size() == 81);
  CHECK(enumerate_elements(test::group("729_9")).size() == 729);
}
