#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "powerseq/arith.hpp"
#include "powerseq/catalog.hpp"

using namespace powerseq;

namespace {

std::vector<Rat> rats(std::initializer_list<long> xs) {
  std::vector<Rat> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

std::vector<Rat> powers_of(const std::vector<Rat>& xs, int k) {
  std::vector<Rat> out;
  for (const auto& x : xs) {
    Rat p = 1;
    for (int i = 0; i < k; ++i) p *= x;
    out.push_back(p);
  }
  return out;
}

UPoly random_upoly(std::mt19937_64& rng, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::vector<Rat> c;
  for (int i = deg(rng); i >= 0; --i) c.push_back(oracle::random_q(rng, 5));
  return UPoly(c);
}

// x_j = e_j (-(j-2) x1 + (j-1) e2 x2), j = 3..n, for k = 2.
std::vector<Rat> epsilon_point(const std::vector<int>& eps, const Rat& x1, const Rat& x2, int n) {
  std::vector<Rat> x{x1, x2};
  for (int j = 3; j <= n; ++j) x.push_back(eps[j - 2] * (Rat(-(j - 2)) * x1 + Rat((j - 1) * eps[0]) * x2));
  return x;
}

bool on_some_epsilon_curve(const std::vector<Rat>& x) {
  const int n = static_cast<int>(x.size());
  for (const auto& eps : sign_vectors(n - 1)) {
    bool all = true;
    for (const auto& eq : curve_equations({EpsilonCurve{eps}, 2, n})) all = all && evaluate(eq, x) == 0;
    if (all) return true;
  }
  return false;
}

Rat rat_pow(const Rat& x, int k) {
  Rat p = 1;
  for (int i = 0; i < k; ++i) p *= x;
  return p;
}

}  // namespace

TEST_CASE("second differences") {
  auto d = second_diffs(powers_of(rats({3, 6, 9, 12}), 2));
  CHECK(d == rats({18, 18}));
  CHECK(is_constant(powers_of(rats({3, 6, 9, 12}), 2)) == Rat(18));
  CHECK(is_constant(rats({1, 1, 1, 1})) == Rat(0));
  CHECK(is_constant(rats({1, 4, 10})) == Rat(3));
  CHECK_FALSE(is_constant(rats({1, 4, 10, 11})));
  CHECK_THROWS_AS(second_diffs(rats({1, 2})), std::invalid_argument);
  // D = 2a^2 for squares of an arithmetic progression with step a.
  for (long a = 1; a <= 9; ++a)
    for (long b = -5; b <= 5; ++b) {
      std::vector<Rat> xs;
      for (long i = 1; i <= 6; ++i) xs.emplace_back(a * i + b);
      CHECK(is_constant(powers_of(xs, 2)) == Rat(2 * a * a));
    }
}

TEST_CASE("classification examples") {
  auto r = classify(rats({1, 3, 5, 7}), 2);
  CHECK(r.cls == SeqClass::trivial);
  REQUIRE(r.ap);
  CHECK(r.ap->first == 2);
  CHECK(r.ap->second == -1);
  auto c = classify(rats({2, -2, 2, 2}), 2);
  CHECK(c.cls == SeqClass::trivial);
  REQUIRE(c.ap);
  CHECK(c.ap->first == 0);
  CHECK(c.ap->second == 2);
  // Cubes 8, -8, 8, 8 have second differences 32 and -16.
  CHECK(classify(rats({2, -2, 2, 2}), 3).cls == SeqClass::not_constant);
  CHECK(classify(rats({1, 2, 2, 1}), 3).cls == SeqClass::nontrivial);
  CHECK(classify(rats({2, 2, 2, 2}), 3).cls == SeqClass::degenerate);
  CHECK(classify(rats({1, 2, 4, 8}), 2).cls == SeqClass::not_constant);
  CHECK(classify(rats({1, 2, 3}), 2).cls == SeqClass::degenerate_by_length);
  CHECK(to_text(SeqClass::not_constant) == "not-constant-second-diff");
  // 6, 23, 32, 39: squares 36, 529, 1024, 1521 with D = 2.
  auto h = classify(rats({6, 23, 32, 39}), 2);
  CHECK(h.second_diff == Rat(2));
  CHECK(h.cls == SeqClass::nontrivial);
}

TEST_CASE("trivial classification matches the square-polynomial oracle") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> sign(0, 1);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Rat> xs;
    if (trial % 2 == 0) {
      Rat a = oracle::random_q(rng), b = oracle::random_q(rng);
      for (int i = 1; i <= 5; ++i) xs.push_back((sign(rng) ? 1 : -1) * (a * i + b));
    } else {
      for (int i = 0; i < 5; ++i) xs.push_back(oracle::random_q(rng));
    }
    auto rec = classify(xs, 2);
    if (rec.cls == SeqClass::not_constant) {
      CHECK_FALSE(is_constant(powers_of(xs, 2)));
      continue;
    }
    CHECK((rec.cls == SeqClass::trivial) == oracle::square_polynomial_trivial(xs));
    if (rec.ap) {
      for (std::size_t i = 0; i < xs.size(); ++i) {
        Rat lin = rec.ap->first * Rat(static_cast<long>(i + 1)) + rec.ap->second;
        CHECK((xs[i] == lin || xs[i] == -lin));
      }
    }
  }
}

TEST_CASE("quadratic fits") {
  auto f = fit_quadratic(rats({1, 4, 9}));
  REQUIRE(f);
  CHECK(f->a == 1);
  CHECK(f->b == 0);
  CHECK(f->c == 0);
  std::vector<Rat> odd;
  for (long i = 1; i <= 6; ++i) odd.emplace_back((2 * i - 1) * (2 * i - 1));
  auto g = fit_quadratic(odd);
  REQUIRE(g);
  CHECK(g->a == 4);
  CHECK(g->b == -4);
  CHECK(g->c == 1);
  CHECK_FALSE(fit_quadratic(rats({1, 2, 4, 8})));
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 50; ++trial) {
    Rat a = oracle::random_q(rng), b = oracle::random_q(rng), c = oracle::random_q(rng);
    const long first = trial % 5 - 2;
    std::vector<Rat> v;
    for (long x = first; x < first + 7; ++x) v.push_back((a * x + b) * x + c);
    auto q = fit_quadratic(v, first);
    REQUIRE(q);
    for (std::size_t i = 0; i < v.size(); ++i) CHECK((*q)(Rat(first + static_cast<long>(i))) == v[i]);
    CHECK(q->a == *is_constant(v) / 2);
  }
}

TEST_CASE("bridge between sequences and surface points") {
  auto p = to_point(classify(rats({1, 2, 3, 4, 5}), 2));
  CHECK(to_text(p) == "[1:2:3:4:5]");
  CHECK(membership(p, SurfaceId(5, 2)));
  CHECK(to_point(classify(rats({7, 14, 21, 28, 35}), 2)) == p);
  auto back = from_point(p, 2);
  CHECK(back.cls == SeqClass::trivial);
  CHECK(to_point(back) == p);
  auto lifted = lift_point(ProjPoint::from_ints({1, 1, 2}), 3, true);
  REQUIRE_FALSE(lifted.empty());
  CHECK_THROWS_AS(from_point(lifted[0], 3), std::domain_error);
}

TEST_CASE("epsilon curves and trivial sequences coincide") {
  std::mt19937_64 rng(43);
  for (int n = 4; n <= 7; ++n) {
    for (const auto& eps : sign_vectors(n - 1)) {
      auto x = epsilon_point(eps, oracle::random_q(rng), oracle::random_q(rng), n);
      if (std::all_of(x.begin(), x.end(), [](const Rat& r) { return r == 0; })) continue;
      auto rec = classify(x, 2);
      CHECK(rec.cls == SeqClass::trivial);
      CHECK(on_some_epsilon_curve(x));
    }
  }
  // Conversely every trivial sequence lies on an epsilon curve.
  for (int trial = 0; trial < 60; ++trial) {
    Rat a = oracle::random_q(rng), b = oracle::random_q(rng);
    std::vector<Rat> x;
    for (int i = 1; i <= 6; ++i) {
      Rat lin = a * i + b;
      x.push_back((trial + i) % 3 ? lin : Rat(-lin));
    }
    REQUIRE(classify(x, 2).cls == SeqClass::trivial);
    CHECK(on_some_epsilon_curve(x));
  }
}

TEST_CASE("square search is complete against brute force") {
  for (long d : {1L, 2L, 8L}) {
    const long h = 40;
    std::set<std::vector<long>> expect;
    for (const auto& s : oracle::brute_square_quadruples(h, d)) {
      std::vector<Rat> xs(s.x.begin(), s.x.end());
      if (!oracle::square_polynomial_trivial(xs)) expect.insert(s.x);
    }
    std::set<std::vector<long>> got;
    for (const auto& r : search_sequences({2, 4, h, Rat(d), false})) {
      CHECK(r.cls == SeqClass::nontrivial);
      CHECK(r.second_diff == Rat(d));
      std::vector<long> x;
      for (const auto& e : r.entries) x.push_back(e.get_num().get_si());
      got.insert(x);
    }
    CHECK(got == expect);
    if (d == 2) CHECK_FALSE(got.empty());
  }
}

TEST_CASE("free searches verify their own output") {
  auto sq = search_sequences({2, 5, 12, std::nullopt, false});
  std::set<std::string> seen;
  for (const auto& r : sq) {
    CHECK(r.cls == SeqClass::nontrivial);
    CHECK(is_constant(powers_of(r.entries, 2)));
    CHECK(seen.insert(to_text(to_point(r))).second);
  }
  for (const auto& r : search_sequences({3, 4, 12, std::nullopt, false})) {
    CHECK(r.cls == SeqClass::nontrivial);
    CHECK(is_constant(powers_of(r.entries, 3)));
  }
  // Same parameters give the same list.
  auto again = search_sequences({2, 5, 12, std::nullopt, false});
  REQUIRE(again.size() == sq.size());
  for (std::size_t i = 0; i < sq.size(); ++i) CHECK(again[i].entries == sq[i].entries);
  CHECK_THROWS_AS(search_sequences({2, 4, 0, std::nullopt, false}), std::invalid_argument);
}

TEST_CASE("allison family") {
  auto found = search_sequences({2, 8, 10000, std::nullopt, true});
  REQUIRE_FALSE(found.empty());
  for (const auto& r : found) {
    REQUIRE(r.entries.size() == 8);
    CHECK(r.cls == SeqClass::nontrivial);
    auto f = fit_quadratic(r.powers, -3);
    REQUIRE(f);
    // Symmetric under x -> 1 - x: f = a(x^2 - x) + c.
    CHECK(f->b == -f->a);
    for (long x = -3; x <= 4; ++x) CHECK((*f)(Rat(x)) == r.powers[static_cast<std::size_t>(x + 3)]);
  }
}

TEST_CASE("y-AP records verify and scale") {
  auto recs = yap_search(3, 4, {12, 0, 0});
  REQUIRE_FALSE(recs.empty());
  for (const auto& r : recs) {
    CHECK(yap_verify(r));
    // Window identity 2v^2 = x3^3 - 2x2^3 + x1^3.
    for (std::size_t j = 0; j + 2 < r.points.size(); ++j)
      CHECK(2 * r.v * r.v ==
            rat_pow(r.points[j + 2].first, 3) - 2 * rat_pow(r.points[j + 1].first, 3) + rat_pow(r.points[j].first, 3));
  }
  const auto& r = recs.front();
  auto s = yap_scale(r, Rat(4), Rat(8));
  CHECK(yap_verify(s));
  CHECK(s.b == 64 * r.b);
  auto w = yap_equivalent(r, s);
  REQUIRE(std::holds_alternative<EquivWitness>(w));
  CHECK(std::get<EquivWitness>(w).lambda == 4);
  CHECK(std::get<EquivWitness>(w).mu == 8);
  auto id = yap_equivalent(r, r);
  REQUIRE(is_equivalent(id));
  CHECK(std::get<EquivWitness>(id).lambda == 1);
  CHECK(std::get<EquivWitness>(id).mu == 1);
  CHECK_THROWS_AS(yap_scale(r, Rat(2), Rat(3)), std::invalid_argument);

  YapRecord bad = r;
  bad.points[1].second += 1;
  CHECK_FALSE(yap_verify(bad));
  YapRecord flipped = r;
  flipped.u = -flipped.u;
  CHECK(std::holds_alternative<NotEquivalent>(yap_equivalent(r, flipped)));
  YapRecord zero = r;
  zero.v = 0;
  CHECK_THROWS_AS(yap_verify(zero), std::invalid_argument);
}

TEST_CASE("y-AP equivalence is an equivalence relation and search output is reduced") {
  auto recs = yap_search(3, 3, {6, 0, 0});
  REQUIRE(recs.size() > 3);
  std::mt19937_64 rng(44);
  for (std::size_t i = 0; i < recs.size(); ++i) {
    CHECK(is_equivalent(yap_equivalent(recs[i], recs[i])));
    for (std::size_t j = i + 1; j < recs.size(); ++j) {
      CHECK_FALSE(is_equivalent(yap_equivalent(recs[i], recs[j])));
      CHECK_FALSE(is_equivalent(yap_equivalent(recs[j], recs[i])));
    }
  }
  // Scalings: symmetric and transitive through a common record.
  for (int pair = 0; pair < 100; ++pair) {
    const auto& r = recs[static_cast<std::size_t>(pair) % recs.size()];
    Rat s1 = oracle::random_q(rng, 5), s2 = oracle::random_q(rng, 5);
    auto a = yap_scale(r, s1 * s1, s1 * s1 * s1);
    auto b = yap_scale(r, s2 * s2, -s2 * s2 * s2);
    CHECK(yap_verify(a));
    CHECK(is_equivalent(yap_equivalent(r, a)));
    CHECK(is_equivalent(yap_equivalent(a, r)));
    // Transitivity through r.
    CHECK(is_equivalent(yap_equivalent(a, b)));
  }
}

TEST_CASE("proportional x implies equivalent for even and odd k") {
  std::mt19937_64 rng(45);
  for (int k : {3, 4, 5}) {
    auto recs = yap_search(k, 3, {8, 0, 0});
    REQUIRE_FALSE(recs.empty());
    for (int trial = 0; trial < 100; ++trial) {
      const auto& r = recs[static_cast<std::size_t>(trial) % recs.size()];
      Rat s = oracle::random_q(rng, 4);
      Rat lambda = k % 2 == 0 ? s : s * s;
      Rat mu = k % 2 == 0 ? rat_pow(s, k / 2) : rat_pow(s, k);
      auto t = yap_scale(r, lambda, trial % 2 ? mu : -mu);
      CHECK(yap_verify(t));
      auto w = yap_equivalent(r, t);
      REQUIRE(is_equivalent(w));
      CHECK(std::get<EquivWitness>(w).lambda == lambda);
    }
  }
}

TEST_CASE("integer y-APs found by brute force are covered by the search") {
  const long xmax = 12;
  auto recs = yap_search(3, 4, {xmax, 0, 0});
  auto brute = oracle::brute_integer_yaps(4, 40, xmax);
  REQUIRE_FALSE(brute.empty());
  for (const auto& y : brute) {
    YapRecord r;
    r.k = 3;
    r.b = y.b;
    r.u = y.u;
    r.v = y.v;
    for (int j = 1; j <= 4; ++j) r.points.push_back({Rat(y.x[j - 1]), Rat(y.u + y.v * j)});
    REQUIRE(yap_verify(r));
    bool covered = false;
    for (const auto& s : recs) covered = covered || is_equivalent(yap_equivalent(s, r));
    CHECK(covered);
  }
  CHECK_THROWS_AS(yap_search(2, 4, {5, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(yap_search(3, 2, {5, 0, 0}), std::invalid_argument);
}

TEST_CASE("polynomial sequences") {
  UPoly t = UPoly::variable();
  std::vector<UPoly> f;
  for (long j = 1; j <= 5; ++j) f.push_back(UPoly(j) * t + UPoly(1));
  auto r = polyseq_classify(f, 2);
  CHECK(r.cls == PolySeqClass::ap_form);
  CHECK(r.second_diff == UPoly(2) * t * t);
  REQUIRE(r.a);
  CHECK(*r.a == t);
  CHECK(*r.b == UPoly(1));
  CHECK(r.signs == std::vector<int>(5, 1));

  std::vector<UPoly> c;
  for (long j = 1; j <= 5; ++j) c.push_back(UPoly(j) * (t * t + UPoly(3)));
  CHECK(polyseq_classify(c, 2).cls == PolySeqClass::constant_proportional);
  std::vector<UPoly> bad{t, t * t, t, t};
  CHECK_THROWS_AS(polyseq_classify(bad, 2), std::invalid_argument);
  CHECK_THROWS_AS(polyseq_classify({t, t, t}, 2), std::invalid_argument);

  CHECK(miain_bound(0) == 12);
  CHECK(miain_bound(5) == 17);
  for (int n = 0; n < 50; ++n) CHECK(miain_bound(n + 1) == miain_bound(n) + 1);
}

TEST_CASE("constructed families never come back unresolved above the threshold") {
  std::mt19937_64 rng(46);
  std::uniform_int_distribution<int> sign(0, 1);
  const int n2 = threshold_n(2, 0);
  for (int trial = 0; trial < 100; ++trial) {
    // ap-form along a line of an epsilon curve, with polynomial parameters.
    UPoly a = random_upoly(rng, 2) + UPoly::variable();
    UPoly b = random_upoly(rng, 3);
    std::vector<UPoly> f;
    std::vector<int> eps;
    for (int j = 1; j <= n2; ++j) {
      eps.push_back(sign(rng) ? 1 : -1);
      f.push_back(UPoly(eps.back()) * (UPoly(j) * a + b));
    }
    auto r = polyseq_classify(f, 2);
    CHECK(r.cls != PolySeqClass::unresolved);
    if (r.cls == PolySeqClass::ap_form) {
      REQUIRE(r.a);
      for (int j = 1; j <= n2; ++j) CHECK(f[j - 1] == UPoly(r.signs[j - 1]) * (UPoly(j) * *r.a + *r.b));
      CHECK(r.second_diff == UPoly(2) * *r.a * *r.a);
    }
  }
  for (int k : {2, 3, 4}) {
    const int n = threshold_n(k, 0);
    for (int trial = 0; trial < 34; ++trial) {
      UPoly h = random_upoly(rng, 3) + UPoly::monomial(Rat(1), 4);
      std::vector<UPoly> f;
      for (int j = 1; j <= n; ++j) f.push_back(UPoly(k == 2 ? Rat(2 * j + 1) : Rat(sign(rng) && k % 2 == 0 ? -3 : 3)) * h);
      CHECK(polyseq_classify(f, k).cls == PolySeqClass::constant_proportional);
    }
  }
}
