#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "powerseq/rational.hpp"
#include "powerseq/surfaces.hpp"
#include "powerseq/upoly.hpp"

namespace powerseq {

enum class SeqClass { trivial, degenerate, nontrivial, not_constant, degenerate_by_length };

std::string to_text(SeqClass c);

struct SeqRecord {
  std::vector<Rat> entries;
  int k = 2;
  std::vector<Rat> powers;
  std::optional<Rat> second_diff;
  SeqClass cls = SeqClass::not_constant;
  // For trivial records: entries[i] = +-(a*(i+1) + b).
  std::optional<std::pair<Rat, Rat>> ap;
};

/// Throws std::invalid_argument when fewer than 3 values are given.
std::vector<Rat> second_diffs(const std::vector<Rat>& values);
std::optional<Rat> is_constant(const std::vector<Rat>& values);

/// Length < 4 yields degenerate_by_length (still with powers and, if possible, D).
SeqRecord classify(const std::vector<Rat>& entries, int k);

struct QuadFit {
  Rat a, b, c;
  Rat operator()(const Rat& x) const { return (a * x + b) * x + c; }
};

/// Interpolates (first + i, powers[i]). nullopt when second differences are not constant.
std::optional<QuadFit> fit_quadratic(const std::vector<Rat>& powers, long first = 1);

ProjPoint to_point(const SeqRecord& rec);
/// Throws std::domain_error for points with irrational coordinates.
SeqRecord from_point(const ProjPoint& p, int k);

struct SearchParams {
  int k = 2;
  int length = 4;
  long height = 10;
  std::optional<Rat> D;
  bool allison = false;
};

/// Nontrivial (k=2) or nondegenerate (k>=3) integer sequences, deduplicated by
/// normalized point and global sign. Allison mode scans a(x^2-x)+c on -3..4 (length 8).
std::vector<SeqRecord> search_sequences(const SearchParams& params);

struct YapRecord {
  int k = 3;
  Rat b;
  std::vector<std::pair<Rat, Rat>> points;  // (x_j, y_j), j = 1..len
  Rat u, v;
};

/// Throws std::invalid_argument for v = 0 or b = 0.
bool yap_verify(const YapRecord& rec);

struct EquivWitness {
  Rat lambda, mu;
};
struct NotEquivalent {
  std::string reason;
};
using EquivResult = std::variant<EquivWitness, NotEquivalent>;

EquivResult yap_equivalent(const YapRecord& s, const YapRecord& t);
bool is_equivalent(const EquivResult& r);

/// (x, y) -> (lambda x, mu y); throws unless mu^2 = lambda^k.
YapRecord yap_scale(const YapRecord& rec, const Rat& lambda, const Rat& mu);

struct YapBounds {
  long x_max = 10;
  long y_max = 0;  // 0 = no bound on |numerator(y_j)|
  long b_max = 0;  // 0 = no bound on |numerator(b)|
};

/// Scans integer triples (x1, x2, x3) with |x_i| <= x_max, solves for the rational AP
/// (u, v), and extends to the requested length. One representative per equivalence class.
std::vector<YapRecord> yap_search(int k, int length, const YapBounds& bounds);

enum class PolySeqClass { constant_proportional, ap_form, unresolved };

std::string to_text(PolySeqClass c);

struct PolySeq {
  std::vector<UPoly> entries;
  int k = 2;
  PolySeqClass cls = PolySeqClass::unresolved;
  UPoly second_diff;
  // ap-form witnesses: f_j = signs[j] * (a*j + b).
  std::optional<UPoly> a, b;
  std::vector<int> signs;
};

/// Throws std::invalid_argument for length < 4 or non-constant second differences.
PolySeq polyseq_classify(const std::vector<UPoly>& entries, int k);

int miain_bound(int n);

}  // namespace powerseq
