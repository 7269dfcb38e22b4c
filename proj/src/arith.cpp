#include "powerseq/arith.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace powerseq {

std::string to_text(SeqClass c) {
  switch (c) {
    case SeqClass::trivial: return "trivial";
    case SeqClass::degenerate: return "degenerate";
    case SeqClass::nontrivial: return "nontrivial";
    case SeqClass::not_constant: return "not-constant-second-diff";
    case SeqClass::degenerate_by_length: return "degenerate-by-length";
  }
  return "?";
}

std::string to_text(PolySeqClass c) {
  switch (c) {
    case PolySeqClass::constant_proportional: return "constant-proportional";
    case PolySeqClass::ap_form: return "ap-form";
    case PolySeqClass::unresolved: return "unresolved";
  }
  return "?";
}

std::vector<Rat> second_diffs(const std::vector<Rat>& values) {
  if (values.size() < 3) throw std::invalid_argument("second differences need at least 3 values");
  std::vector<Rat> out;
  for (std::size_t i = 2; i < values.size(); ++i) out.push_back(values[i] - 2 * values[i - 1] + values[i - 2]);
  return out;
}

std::optional<Rat> is_constant(const std::vector<Rat>& values) {
  auto d = second_diffs(values);
  for (const auto& x : d)
    if (x != d.front()) return std::nullopt;
  return d.front();
}

namespace {

// Solves x_i = +-(a*i + b), i = 1..n, with the first sign fixed to +1.
template <class T>
std::optional<std::pair<T, T>> solve_ap(const std::vector<T>& x, std::vector<int>* signs) {
  for (int e2 : {1, -1}) {
    T a = x[1] * e2 - x[0];
    T b = x[0] - a;
    std::vector<int> s;
    bool ok = true;
    for (std::size_t i = 0; i < x.size() && ok; ++i) {
      T g = a * static_cast<long>(i + 1) + b;
      if (x[i] == g) {
        s.push_back(1);
      } else if (x[i] == T(-g)) {
        s.push_back(-1);
      } else {
        ok = false;
      }
    }
    if (ok) {
      if (signs) *signs = std::move(s);
      return std::make_pair(a, b);
    }
  }
  return std::nullopt;
}

std::vector<Rat> powers_of(const std::vector<Rat>& xs, int k) {
  std::vector<Rat> out;
  for (const auto& x : xs) out.push_back(rat_pow(x, static_cast<unsigned>(k)));
  return out;
}

}  // namespace

SeqRecord classify(const std::vector<Rat>& entries, int k) {
  if (k < 2) throw std::invalid_argument("classify needs k >= 2");
  SeqRecord rec;
  rec.entries = entries;
  rec.k = k;
  rec.powers = powers_of(entries, k);
  if (entries.size() >= 3) rec.second_diff = is_constant(rec.powers);
  if (entries.size() < 4) {
    rec.cls = SeqClass::degenerate_by_length;
    return rec;
  }
  if (!rec.second_diff) {
    rec.cls = SeqClass::not_constant;
    return rec;
  }
  if (k == 2) {
    rec.ap = solve_ap(entries, nullptr);
    rec.cls = rec.ap ? SeqClass::trivial : SeqClass::nontrivial;
    return rec;
  }
  bool all_equal = std::all_of(rec.powers.begin(), rec.powers.end(), [&](const Rat& p) { return p == rec.powers.front(); });
  rec.cls = all_equal ? SeqClass::degenerate : SeqClass::nontrivial;
  return rec;
}

std::optional<QuadFit> fit_quadratic(const std::vector<Rat>& powers, long first) {
  auto d = is_constant(powers);
  if (!d) return std::nullopt;
  // Newton form through the first three nodes, then re-checked on every node.
  Rat x0(first);
  QuadFit f;
  f.a = *d / 2;
  Rat slope = powers[1] - powers[0];  // f(x0+1) - f(x0) = a(2x0+1) + b
  f.b = slope - f.a * (2 * x0 + 1);
  f.c = powers[0] - f.a * x0 * x0 - f.b * x0;
  for (std::size_t i = 0; i < powers.size(); ++i)
    if (f(Rat(first + static_cast<long>(i))) != powers[i]) return std::nullopt;
  return f;
}

ProjPoint to_point(const SeqRecord& rec) { return ProjPoint::from_rats(rec.entries); }

SeqRecord from_point(const ProjPoint& p, int k) {
  auto r = p.rational();
  if (!r) throw std::domain_error("point has irrational coordinates");
  return classify(*r, k);
}

namespace {

bool wanted(const SeqRecord& r) { return r.cls == SeqClass::nontrivial; }

// Global sign: for odd k the first nonzero entry is made positive; even k uses |x|.
std::vector<Rat> sign_normal(std::vector<Rat> xs, int k) {
  if (k % 2 == 0) {
    for (auto& x : xs) x = abs(x);
    return xs;
  }
  for (const auto& x : xs) {
    if (sgn(x) != 0) {
      if (sgn(x) < 0)
        for (auto& y : xs) y = -y;
      break;
    }
  }
  return xs;
}

std::string key_of(const std::vector<Rat>& xs) {
  std::string s;
  for (const auto& x : xs) s += x.get_str() + ",";
  return s;
}

// Extends a prefix whose k-th powers have second difference D, keeping |x| <= height.
bool extend(std::vector<Integer>& xs, std::vector<Integer>& ps, const Integer& d, int k, int length, long height) {
  while (static_cast<int>(xs.size()) < length) {
    std::size_t m = ps.size();
    Integer next = 2 * ps[m - 1] - ps[m - 2] + d;
    auto r = exact_root(next, static_cast<unsigned>(k));
    if (!r || abs(*r) > height) return false;
    xs.push_back(*r);
    ps.push_back(next);
  }
  return true;
}

std::vector<Rat> to_rats(const std::vector<Integer>& xs) {
  std::vector<Rat> out;
  for (const auto& x : xs) out.emplace_back(x);
  return out;
}

std::vector<SeqRecord> search_allison(const SearchParams& p) {
  std::vector<SeqRecord> out;
  std::set<std::string> seen;
  const unsigned k = static_cast<unsigned>(p.k);
  // Values of a(x^2 - x) + c on x = -3..4 are c + {12,6,2,0,0,2,6,12}a.
  const long weights[8] = {12, 6, 2, 0, 0, 2, 6, 12};
  long s_lo = (p.k % 2 == 0) ? 0 : -p.height;
  for (long s = s_lo; s <= p.height; ++s) {
    Integer c = int_pow(Integer(s), k);
    if (abs(c) > p.height) {
      if (s > 0) break;
      continue;
    }
    for (long a = -p.height; a <= p.height; ++a) {
      if (a == 0) continue;
      std::vector<Rat> entries;
      bool ok = true;
      for (long w : weights) {
        auto r = exact_root(Integer(c + w * a), k);
        if (!r) {
          ok = false;
          break;
        }
        entries.emplace_back(*r);
      }
      if (!ok) continue;
      auto rec = classify(entries, p.k);
      if (!wanted(rec)) continue;
      auto norm = ProjPoint::from_rats(sign_normal(entries, p.k)).rational();
      if (seen.insert(key_of(*norm)).second) out.push_back(std::move(rec));
    }
  }
  return out;
}

}  // namespace

std::vector<SeqRecord> search_sequences(const SearchParams& p) {
  if (p.height < 1) throw std::invalid_argument("search height must be >= 1");
  if (p.k < 2) throw std::invalid_argument("search needs k >= 2");
  if (p.allison) return search_allison(p);
  if (p.length < 4) throw std::invalid_argument("search length must be >= 4");
  const unsigned k = static_cast<unsigned>(p.k);
  const long lo = (p.k % 2 == 0) ? 0 : -p.height;
  std::vector<SeqRecord> out;
  std::set<std::string> seen;
  auto consider = [&](std::vector<Integer> xs, std::vector<Integer> ps, const Integer& d) {
    if (!extend(xs, ps, d, p.k, p.length, p.height)) return;
    auto rec = classify(to_rats(xs), p.k);
    if (!wanted(rec)) return;
    auto norm = sign_normal(rec.entries, p.k);
    // With D free the projective point is the key; with D fixed only the sign is free.
    std::string key = p.D ? key_of(norm) : key_of(*ProjPoint::from_rats(norm).rational());
    if (seen.insert(key).second) out.push_back(std::move(rec));
  };
  if (p.D) {
    if (p.D->get_den() != 1) return out;  // integer entries force an integer D
    Integer d = p.D->get_num();
    for (long x1 = lo; x1 <= p.height; ++x1) {
      Integer p1 = int_pow(Integer(x1), k);
      for (long x2 = lo; x2 <= p.height; ++x2) {
        Integer p2 = int_pow(Integer(x2), k);
        consider({Integer(x1), Integer(x2)}, {p1, p2}, d);
      }
    }
    return out;
  }
  for (long x1 = lo; x1 <= p.height; ++x1) {
    Integer p1 = int_pow(Integer(x1), k);
    for (long x2 = lo; x2 <= p.height; ++x2) {
      Integer p2 = int_pow(Integer(x2), k);
      for (long x3 = lo; x3 <= p.height; ++x3) {
        if (std::gcd(std::gcd(x1, x2), x3) != 1) continue;
        if (p.k % 2 == 1) {
          long first = x1 != 0 ? x1 : (x2 != 0 ? x2 : x3);
          if (first < 0) continue;
        }
        Integer p3 = int_pow(Integer(x3), k);
        consider({Integer(x1), Integer(x2), Integer(x3)}, {p1, p2, p3}, p3 - 2 * p2 + p1);
      }
    }
  }
  return out;
}

bool yap_verify(const YapRecord& rec) {
  if (is_zero(rec.v)) throw std::invalid_argument("y-AP with v = 0");
  if (is_zero(rec.b)) throw std::invalid_argument("y-AP with b = 0");
  if (rec.k < 2) throw std::invalid_argument("y-AP needs k >= 2");
  if (rec.points.size() < 3) return false;
  const unsigned k = static_cast<unsigned>(rec.k);
  std::vector<Rat> xk;
  for (std::size_t j = 0; j < rec.points.size(); ++j) {
    const auto& [x, y] = rec.points[j];
    if (y != rec.u + rec.v * static_cast<long>(j + 1)) return false;
    xk.push_back(rat_pow(x, k));
    if (y * y != xk.back() + rec.b) return false;
  }
  for (const auto& d : second_diffs(xk))
    if (d != 2 * rec.v * rec.v) return false;
  return true;
}

bool is_equivalent(const EquivResult& r) { return std::holds_alternative<EquivWitness>(r); }

EquivResult yap_equivalent(const YapRecord& s, const YapRecord& t) {
  if (s.k != t.k || s.points.size() != t.points.size()) return NotEquivalent{"k or length differ"};
  std::optional<Rat> lambda;
  for (std::size_t j = 0; j < s.points.size() && !lambda; ++j)
    if (!is_zero(s.points[j].first)) lambda = t.points[j].first / s.points[j].first;
  if (!lambda || is_zero(*lambda)) return NotEquivalent{"no nonzero scaling of x"};
  for (std::size_t j = 0; j < s.points.size(); ++j)
    if (t.points[j].first != *lambda * s.points[j].first) return NotEquivalent{"x' is not proportional to x"};
  Rat lk = rat_pow(*lambda, static_cast<unsigned>(s.k));
  if (!exact_root(lk, 2)) return NotEquivalent{"lambda^k is not a rational square"};
  if (is_zero(s.v)) return NotEquivalent{"v = 0"};
  Rat mu = t.v / s.v;
  if (mu * mu != lk) return NotEquivalent{"v'/v is not a square root of lambda^k"};
  if (t.u != mu * s.u) return NotEquivalent{"u' != mu*u (sign mismatch)"};
  for (std::size_t j = 0; j < s.points.size(); ++j)
    if (t.points[j].second != mu * s.points[j].second) return NotEquivalent{"y' != mu*y"};
  if (t.b != mu * mu * s.b) return NotEquivalent{"b' != mu^2*b"};
  return EquivWitness{*lambda, mu};
}

YapRecord yap_scale(const YapRecord& rec, const Rat& lambda, const Rat& mu) {
  if (mu * mu != rat_pow(lambda, static_cast<unsigned>(rec.k))) throw std::invalid_argument("scaling needs mu^2 = lambda^k");
  YapRecord out = rec;
  for (auto& [x, y] : out.points) {
    x *= lambda;
    y *= mu;
  }
  out.u *= mu;
  out.v *= mu;
  out.b *= mu * mu;
  return out;
}

namespace {

using i128 = __int128;

long isqrt_exact(i128 n) {
  if (n < 0) return -1;
  auto r = static_cast<long>(std::sqrt(static_cast<long double>(n)));
  while (static_cast<i128>(r) * r > n) --r;
  while (static_cast<i128>(r + 1) * (r + 1) <= n) ++r;
  return static_cast<i128>(r) * r == n ? r : -1;
}

// Builds the record with the given (x1, x2, x3); nullopt when it does not extend.
std::optional<YapRecord> yap_from_triple(int k, int length, const long x[3], long w, const YapBounds& bounds) {
  const unsigned uk = static_cast<unsigned>(k);
  Rat p1 = rat_pow(Rat(x[0]), uk);
  Rat p2 = rat_pow(Rat(x[1]), uk);
  Rat v(w, 2);
  v.canonicalize();
  Rat y1 = ((p2 - p1) / v - v) / 2;
  YapRecord rec;
  rec.k = k;
  rec.v = v;
  rec.u = y1 - v;
  rec.b = y1 * y1 - p1;
  if (is_zero(rec.b)) return std::nullopt;
  if (bounds.b_max > 0 && abs(rec.b) > bounds.b_max) return std::nullopt;
  for (int j = 1; j <= length; ++j) {
    Rat y = rec.u + rec.v * j;
    if (bounds.y_max > 0 && abs(y) > bounds.y_max) return std::nullopt;
    Rat xj;
    if (j <= 3) {
      xj = Rat(x[j - 1]);
    } else {
      auto r = exact_root(Rat(y * y - rec.b), uk);
      if (!r) return std::nullopt;
      xj = *r;
    }
    rec.points.emplace_back(xj, y);
  }
  return rec;
}

// Direction key: primitive integer vector up to positive scaling.
std::string direction_key(const YapRecord& rec) {
  std::vector<Rat> xs;
  for (const auto& pt : rec.points) xs.push_back(pt.first);
  auto norm = *ProjPoint::from_rats(xs).rational();
  int sign = 1;
  for (const auto& x : xs) {
    if (sgn(x) != 0) {
      sign = sgn(x);
      break;
    }
  }
  std::string key = sign > 0 ? "+" : "-";
  return key + key_of(norm);
}

}  // namespace

std::vector<YapRecord> yap_search(int k, int length, const YapBounds& bounds) {
  if (k < 3) throw std::invalid_argument("y-AP search needs k >= 3");
  if (length < 3) throw std::invalid_argument("y-AP search needs length >= 3");
  if (bounds.x_max < 0) throw std::invalid_argument("x_max must be >= 0");
  // 2D must fit in 120 bits.
  long double mag = 1;
  for (int i = 0; i < k; ++i) mag *= static_cast<long double>(bounds.x_max);
  if (mag > 1e34L) throw std::invalid_argument("x_max^k too large for the y-AP scan");

  const long lo = (k % 2 == 0) ? 0 : -bounds.x_max;
  std::vector<i128> pw;
  for (long x = lo; x <= bounds.x_max; ++x) {
    i128 v = 1;
    for (int i = 0; i < k; ++i) v *= x;
    pw.push_back(v);
  }
  auto power = [&](long x) { return pw[static_cast<std::size_t>(x - lo)]; };

  std::vector<YapRecord> out;
  std::map<std::string, std::vector<std::size_t>> groups;
  for (long m = 0; m <= bounds.x_max; ++m) {
    long mlo = std::max(lo, -m);
    long t[3];
    for (t[0] = mlo; t[0] <= m; ++t[0]) {
      for (t[1] = mlo; t[1] <= m; ++t[1]) {
        for (t[2] = mlo; t[2] <= m; ++t[2]) {
          if (std::max({std::labs(t[0]), std::labs(t[1]), std::labs(t[2])}) != m) continue;
          i128 d = power(t[2]) - 2 * power(t[1]) + power(t[0]);
          if (d <= 0) continue;
          long w = isqrt_exact(2 * d);  // D = 2v^2 with v = w/2
          if (w <= 0) continue;
          auto rec = yap_from_triple(k, length, t, w, bounds);
          if (!rec) continue;
          auto& group = groups[direction_key(*rec)];
          bool dup = std::any_of(group.begin(), group.end(), [&](std::size_t i) { return is_equivalent(yap_equivalent(out[i], *rec)); });
          if (dup) continue;
          group.push_back(out.size());
          out.push_back(std::move(*rec));
        }
      }
    }
  }
  return out;
}

namespace {

std::vector<UPoly> upowers(const std::vector<UPoly>& f, int k) {
  std::vector<UPoly> out;
  for (const auto& p : f) out.push_back(pow(p, static_cast<unsigned>(k)));
  return out;
}

}  // namespace

PolySeq polyseq_classify(const std::vector<UPoly>& entries, int k) {
  if (entries.size() < 4) throw std::invalid_argument("polynomial sequence needs length >= 4");
  if (k < 2) throw std::invalid_argument("polynomial sequence needs k >= 2");
  auto pk = upowers(entries, k);
  UPoly d = pk[2] - pk[1] * 2 + pk[0];
  for (std::size_t i = 3; i < pk.size(); ++i)
    if (pk[i] - pk[i - 1] * 2 + pk[i - 2] != d) throw std::invalid_argument("k-th powers do not have constant second differences");

  PolySeq out;
  out.entries = entries;
  out.k = k;
  out.second_diff = d;

  const UPoly* h = nullptr;
  for (const auto& f : entries)
    if (!f.is_zero()) {
      h = &f;
      break;
    }
  bool proportional = std::all_of(entries.begin(), entries.end(), [&](const UPoly& f) {
    return h == nullptr || f.is_zero() || f * h->leading() == *h * f.leading();
  });
  if (proportional) {
    out.cls = PolySeqClass::constant_proportional;
    return out;
  }
  if (k == 2) {
    std::vector<int> signs;
    if (auto ab = solve_ap(entries, &signs)) {
      out.cls = PolySeqClass::ap_form;
      out.a = ab->first;
      out.b = ab->second;
      out.signs = std::move(signs);
      return out;
    }
  }
  out.cls = PolySeqClass::unresolved;
  return out;
}

int miain_bound(int n) {
  if (n < 0) throw std::invalid_argument("bound needs N >= 0");
  return n + 12;
}

}  // namespace powerseq
