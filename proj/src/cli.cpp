#include "powerseq/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "powerseq/arith.hpp"
#include "powerseq/catalog.hpp"
#include "powerseq/json_io.hpp"
#include "powerseq/surfaces.hpp"
#include "powerseq/symdiff.hpp"

namespace powerseq {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Options {
  int k = 0;
  int n = 0;
  int g = 0;
  int n_min = 4;
  int n_max = 12;
  int length = 4;
  long height = 100;
  std::string d;
  bool allison = false;
  bool radical = false;
  long x_max = 10;
  long y_max = 0;
  long b_max = 0;
  int samples = 100;
  std::uint64_t seed = 1;
  std::string point;
  std::string entries;
  std::string out;
  std::string format;
};

struct Result {
  int code = 0;
  std::string text;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  return parts;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<Rat> parse_rats(const std::string& s) {
  std::vector<Rat> out;
  for (const auto& part : split(s, ',')) out.push_back(parse_rat(trim(part)));
  if (out.empty()) throw UsageError("empty list");
  return out;
}

UPoly parse_upoly(const std::string& s) {
  const Poly p = parse_poly(s, {"t"});
  UPoly out;
  for (const auto& [e, c] : p.terms()) out += UPoly::monomial(c, e.empty() ? 0 : e[0]);
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json envelope(const std::string& command) { return {{"schema", kSchema}, {"command", command}}; }

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) out += (c == '"') ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

void need_csv_or_json(const Options& o) {
  if (o.format != "json" && o.format != "csv") throw UsageError("--format must be json or csv");
}

void need_json(const Options& o, const std::string& cmd) {
  if (o.format != "json") throw UsageError(cmd + " only supports --format json");
}

Result verify_omega(const Options& o) {
  need_json(o, "verify-omega");
  Json j = envelope("verify-omega");
  j["k"] = o.k;
  j["certificates"] = Json::array();
  for (const auto& spec : plane_catalog(o.k)) {
    try {
      auto c = verify_integrality(spec);
      j["certificates"].push_back(to_json(c));
      if (!c.verified) {
        j["counterexample"] = {{"curve_spec", to_text(spec)}, {"reason", "quotient did not re-multiply"}};
        return {2, dump(j)};
      }
    } catch (const NotIntegralError& e) {
      j["counterexample"] = {{"curve_spec", to_text(spec)}, {"reason", e.what()}};
      return {2, dump(j)};
    }
  }
  return {0, dump(j)};
}

Result transition(const Options& o) {
  need_json(o, "transition");
  Json j = envelope("transition");
  bool ok = transition_verify(o.k);
  j["k"] = o.k;
  j["verified"] = ok;
  if (!ok) j["counterexample"] = {{"k", o.k}, {"reason", "U3 form does not transform to the U1/U2 forms"}};
  return {ok ? 0 : 2, dump(j)};
}

Result catalog_cmd(const Options& o) {
  need_json(o, "catalog");
  int n = o.n == 0 ? 3 : o.n;
  if (n < 3 || n > 12) throw UsageError("--n must be in 3..12");
  Json j = envelope("catalog");
  j["k"] = o.k;
  j["n"] = n;
  Json curves = Json::array();
  auto add = [&](const CurveSpec& c) {
    Json eqs = Json::array();
    if (const auto* ca = std::get_if<Calpha>(&c.kind); ca && std::holds_alternative<Calpha::Symbolic>(ca->alpha)) {
      eqs.push_back(to_text(calpha_equation(c.k)));
    } else {
      for (const auto& e : curve_equations(c)) eqs.push_back(to_text(e));
    }
    curves.push_back({{"name", to_text(c)}, {"equations", eqs}});
  };
  for (const auto& c : plane_catalog(o.k)) add(c);
  if (n >= 4) {
    for (int i = 4; i <= n; ++i) add({PullbackRn{i}, o.k, n});
    if (o.k % 2 == 0) {
      for (const auto& eps : sign_vectors(n - 1)) add({EpsilonCurve{eps}, o.k, n});
    }
  }
  j["curves"] = curves;
  return {0, dump(j)};
}

Result through_point(const Options& o) {
  need_json(o, "through-point");
  auto p = ProjPoint::from_rats(parse_rats(o.point));
  if (p.size() != 3) throw UsageError("--point needs 3 coordinates");
  auto r = curves_through_point(p, o.k);
  Json j = envelope("through-point");
  j["report"] = to_json(r);
  if (!r.on_delta && r.total_multiplicity != 2) {
    j["counterexample"] = {{"point", to_text(p)}, {"reason", "total multiplicity off the discriminant is not 2"}};
    return {2, dump(j)};
  }
  return {0, dump(j)};
}

const std::vector<GenusType> kTypes = {GenusType::a, GenusType::a_prime, GenusType::b,
                                       GenusType::c, GenusType::d,       GenusType::e};

Result genus_table(const Options& o) {
  need_csv_or_json(o);
  if (o.n_min < 4 || o.n_max < o.n_min) throw UsageError("need 4 <= --n-min <= --n-max");
  if (o.format == "csv") {
    std::string s = "n";
    for (auto t : kTypes) s += "," + to_text(t);
    s += "\n";
    for (int n = o.n_min; n <= o.n_max; ++n) {
      SurfaceId sid(n, o.k);
      s += std::to_string(n);
      for (auto t : kTypes) s += "," + (applicable(t, o.k) ? to_text(genus_of_type(t, sid)) : std::string());
      s += "\n";
    }
    return {0, s};
  }
  Json j = envelope("genus-table");
  j["k"] = o.k;
  j["rows"] = Json::array();
  for (int n = o.n_min; n <= o.n_max; ++n) {
    SurfaceId sid(n, o.k);
    Json row = {{"n", n}};
    for (auto t : kTypes) row[to_text(t)] = applicable(t, o.k) ? Json(rat_json(genus_of_type(t, sid))) : Json(nullptr);
    j["rows"].push_back(row);
  }
  return {0, dump(j)};
}

Result thresholds(const Options& o) {
  if (o.g < 0) throw UsageError("--g must be >= 0");
  int t = threshold_n(o.k, o.g);
  if (o.format == "text") return {0, std::to_string(t) + "\n"};
  if (o.format == "csv") return {0, "k,g,threshold_n\n" + std::to_string(o.k) + "," + std::to_string(o.g) + "," + std::to_string(t) + "\n"};
  if (o.format != "json") throw UsageError("--format must be text, json or csv");
  Json j = envelope("thresholds");
  j["k"] = o.k;
  j["g"] = o.g;
  j["threshold_n"] = t;
  if (o.k == 2) {
    j["k2_max_form"] = threshold_n_k2_max_form(o.g);
    j["k2_fixed_form"] = threshold_n_k2_fixed_form();
  }
  return {0, dump(j)};
}

Result check_point(const Options& o) {
  need_json(o, "check-point");
  SurfaceId s(o.n, o.k);
  auto p = ProjPoint::from_rats(parse_rats(o.point));
  if (p.size() != o.n) throw UsageError("--point needs n coordinates");
  bool member = membership(p, s);
  Json j = envelope("check-point");
  j["n"] = o.n;
  j["k"] = o.k;
  j["point"] = to_json(p);
  j["membership"] = member;
  j["no_three_zeros"] = member ? Json(no_three_zeros(p, s)) : Json(nullptr);
  return {0, dump(j)};
}

Result lift(const Options& o) {
  need_csv_or_json(o);
  auto p = ProjPoint::from_rats(parse_rats(o.point));
  if (p.size() < 3) throw UsageError("--point needs at least 3 coordinates");
  auto lifts = lift_point(p, o.k, o.radical);
  if (o.format == "csv") {
    std::string s = "point\n";
    for (const auto& q : lifts) s += csv_quote(to_text(q)) + "\n";
    return {0, s};
  }
  Json j = envelope("lift");
  j["k"] = o.k;
  j["from"] = to_json(p);
  j["lifts"] = Json::array();
  for (const auto& q : lifts) j["lifts"].push_back(to_json(q));
  return {0, dump(j)};
}

Result jacobian(const Options& o) {
  need_csv_or_json(o);
  SurfaceId s(o.n, o.k);
  std::vector<ProjPoint> pts;
  if (!o.point.empty()) {
    auto p = ProjPoint::from_rats(parse_rats(o.point));
    if (p.size() != o.n || !membership(p, s)) throw UsageError("--point must be a point of X_{n,k}");
    pts.push_back(p);
  } else {
    if (o.samples < 1) throw UsageError("--samples must be >= 1");
    pts = sample_points(s, o.samples, o.seed);
  }
  std::vector<JacobianReport> reps;
  int failures = 0;
  for (const auto& p : pts) {
    reps.push_back(jacobian_rank(p, s));
    if (reps.back().rank != reps.back().expected) ++failures;
  }
  if (o.format == "csv") {
    std::string out = "point,rank,expected\n";
    for (const auto& r : reps) out += csv_quote(to_text(r.point)) + "," + std::to_string(r.rank) + "," + std::to_string(r.expected) + "\n";
    return {failures ? 2 : 0, out};
  }
  Json j = envelope("jacobian");
  j["n"] = o.n;
  j["k"] = o.k;
  j["reports"] = Json::array();
  for (const auto& r : reps) j["reports"].push_back(to_json(r));
  j["failures"] = failures;
  return {failures ? 2 : 0, dump(j)};
}

Result pullbacks(const Options& o) {
  need_json(o, "pullbacks");
  if (o.n < 4) throw UsageError("--n must be >= 4");
  std::vector<CurveSpec> bases;
  for (int i = 4; i <= o.n; ++i) bases.push_back(calpha(Rat(i), o.k));
  if (o.k % 2 == 0) {
    for (const auto& e : sign_vectors(2)) bases.push_back({TypeIV{e[0], e[1]}, o.k, 3});
  } else {
    bases.push_back({TypeV{}, o.k, 3});
  }
  Json j = envelope("pullbacks");
  j["n"] = o.n;
  j["k"] = o.k;
  j["ledgers"] = Json::array();
  int code = 0;
  for (const auto& b : bases) {
    auto l = pullback_ledger(b, o.n);
    j["ledgers"].push_back(to_json(l));
    if (!l.verified && code == 0) {
      code = 2;
      j["counterexample"] = {{"base", to_text(b)}, {"reason", "pullback ledger did not verify"}};
    }
  }
  return {code, dump(j)};
}

Result twist(const Options& o) {
  need_csv_or_json(o);
  if (o.g < 0) throw UsageError("--g must be >= 0");
  SurfaceId s(o.n, o.k);
  auto t = twist_ledger(s, o.g);
  if (o.format == "csv") {
    return {0, "n,k,g,start,subtracted,final_twist,degree_bound,negative\n" + std::to_string(o.n) + "," + std::to_string(o.k) +
                   "," + std::to_string(o.g) + "," + std::to_string(t.start) + "," + std::to_string(t.subtracted) + "," +
                   std::to_string(t.final_twist) + "," + to_text(t.degree_bound) + "," + (t.negative ? "true" : "false") + "\n"};
  }
  Json j = envelope("twist-ledger");
  j["ledger"] = to_json(t, s, o.g);
  return {0, dump(j)};
}

template <class Rec>
std::string json_lines(const std::vector<Rec>& recs) {
  std::string s;
  for (const auto& r : recs) s += to_json(r).dump() + "\n";
  return s;
}

Result search_seq(const Options& o, int k) {
  need_csv_or_json(o);
  SearchParams p;
  p.k = k;
  p.length = o.allison ? 8 : o.length;
  p.height = o.height;
  p.allison = o.allison;
  if (!o.d.empty()) p.D = parse_rat(o.d);
  if (p.height < 1) throw UsageError("--height must be >= 1");
  if (!p.allison && p.length < 4) throw UsageError("--length must be >= 4");
  auto recs = search_sequences(p);
  if (o.format == "csv") {
    return {0, "k,length,height,count_nontrivial\n" + std::to_string(k) + "," + std::to_string(p.length) + "," +
                   std::to_string(p.height) + "," + std::to_string(recs.size()) + "\n"};
  }
  return {0, json_lines(recs)};
}

Result search_yap(const Options& o) {
  need_csv_or_json(o);
  if (o.k < 3) throw UsageError("--k must be >= 3");
  if (o.length < 3) throw UsageError("--length must be >= 3");
  if (o.x_max < 0 || o.y_max < 0 || o.b_max < 0) throw UsageError("bounds must be >= 0");
  auto recs = yap_search(o.k, o.length, {o.x_max, o.y_max, o.b_max});
  for (const auto& r : recs) {
    if (!yap_verify(r)) {
      Json j = envelope("search-yap");
      j["counterexample"] = to_json(r);
      return {2, dump(j)};
    }
  }
  if (o.format == "csv") {
    return {0, "k,length,x_max,count\n" + std::to_string(o.k) + "," + std::to_string(o.length) + "," + std::to_string(o.x_max) +
                   "," + std::to_string(recs.size()) + "\n"};
  }
  return {0, json_lines(recs)};
}

Result classify_seq(const Options& o) {
  need_json(o, "classify-seq");
  auto xs = parse_rats(o.entries);
  if (xs.size() < 3) throw UsageError("--entries needs at least 3 values");
  Json j = envelope("classify-seq");
  j["record"] = to_json(classify(xs, o.k));
  return {0, dump(j)};
}

Result classify_polyseq(const Options& o) {
  need_json(o, "classify-polyseq");
  std::vector<UPoly> fs;
  for (const auto& part : split(o.entries, ';')) fs.push_back(parse_upoly(trim(part)));
  if (fs.size() < 4) throw UsageError("--entries needs at least 4 polynomials");
  auto ps = polyseq_classify(fs, o.k);
  Json j = envelope("classify-polyseq");
  j["sequence"] = to_json(ps);
  if (ps.cls == PolySeqClass::unresolved && static_cast<int>(fs.size()) >= threshold_n(o.k, 0)) {
    j["counterexample"] = {{"reason", "unresolved sequence at or above threshold_n(k, 0)"}};
    return {2, dump(j)};
  }
  return {0, dump(j)};
}

// "key = value" lines become flags unless the flag is already on the command line.
void apply_config(std::vector<std::string>& args) {
  auto it = std::find(args.begin(), args.end(), "--config");
  if (it == args.end()) return;
  if (it + 1 == args.end()) throw UsageError("--config needs a path");
  std::string path = *(it + 1);
  args.erase(it, it + 2);
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file " + path);
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw UsageError("config line without '=': " + line);
    std::string key = "--" + trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (std::find(args.begin(), args.end(), key) != args.end()) continue;
    if (value == "true") {
      args.push_back(key);
    } else if (value != "false") {
      args.push_back(key);
      args.push_back(value);
    }
  }
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact computations for sequences of powers with constant second differences", "powerseq"};
  app.require_subcommand(1);

  std::map<std::string, std::function<Result()>> handlers;
  std::map<std::string, std::string> default_format;
  auto sub = [&](const std::string& name, const std::string& help, std::function<Result()> h, const std::string& fmt = "json") {
    auto* s = app.add_subcommand(name, help);
    s->add_option("--out", o.out, "Write output to this path instead of standard output");
    s->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    s->add_option("--seed", o.seed, "Seed for sampling");
    handlers[name] = std::move(h);
    default_format[name] = fmt;
    return s;
  };
  auto k_flag = [&](CLI::App* s, int min = 2) { s->add_option("--k", o.k, "Exponent k")->required()->check(CLI::Range(min, 64)); };
  auto n_flag = [&](CLI::App* s, int min = 3) { s->add_option("--n", o.n, "Number of variables n")->required()->check(CLI::Range(min, 64)); };

  auto* s = sub("verify-omega", "Integrality certificates for the plane catalog", [&] { return verify_omega(o); });
  k_flag(s);
  s = sub("transition", "Check that the chart forms glue", [&] { return transition(o); });
  k_flag(s);
  s = sub("catalog", "List catalog curves with their equations", [&] { return catalog_cmd(o); });
  k_flag(s);
  s->add_option("--n", o.n, "Also list curves on X_{n,k}");
  s = sub("through-point", "Catalog curves through a point of P^2", [&] { return through_point(o); });
  k_flag(s);
  s->add_option("--point", o.point, "Comma-separated coordinates")->required();
  s = sub("genus-table", "Genus of each curve type; CSV columns n,a,a',b,c,d,e", [&] { return genus_table(o); });
  k_flag(s);
  s->add_option("--n-min", o.n_min, "First n");
  s->add_option("--n-max", o.n_max, "Last n");
  s = sub("thresholds", "Smallest n from which low-genus curves are all known", [&] { return thresholds(o); }, "text");
  k_flag(s);
  s->add_option("--g", o.g, "Genus bound")->required();
  s = sub("check-point", "Membership of a point in X_{n,k}", [&] { return check_point(o); });
  n_flag(s);
  k_flag(s);
  s->add_option("--point", o.point, "Comma-separated coordinates")->required();
  s = sub("lift", "Lift a point of X_{n-1,k} to X_{n,k}; CSV column point", [&] { return lift(o); });
  k_flag(s);
  s->add_option("--point", o.point, "Comma-separated coordinates")->required();
  s->add_flag("--radical", o.radical, "Allow radical coordinates");
  s = sub("jacobian", "Jacobian rank at given or sampled points; CSV columns point,rank,expected", [&] { return jacobian(o); });
  n_flag(s, 4);
  k_flag(s);
  s->add_option("--point", o.point, "Comma-separated coordinates");
  s->add_option("--samples", o.samples, "Number of sampled points");
  s = sub("pullbacks", "Pullback ledgers of plane curves to X_{n,k}", [&] { return pullbacks(o); });
  n_flag(s, 4);
  k_flag(s);
  s = sub("twist-ledger", "Twist bookkeeping; CSV columns n,k,g,start,subtracted,final_twist,degree_bound,negative",
          [&] { return twist(o); });
  n_flag(s, 4);
  k_flag(s);
  s->add_option("--g", o.g, "Genus bound")->required();
  auto search_flags = [&](CLI::App* c) {
    c->add_option("--length", o.length, "Sequence length");
    c->add_option("--height", o.height, "Bound on |x_i| (on |a|, |c| in Allison mode)")->required();
    c->add_option("--D", o.d, "Fixed second difference");
    c->add_flag("--allison", o.allison, "Scan the symmetric family a(x^2-x)+c on -3..4");
  };
  s = sub("search-squares", "Nontrivial square sequences; JSON lines, CSV columns k,length,height,count_nontrivial",
          [&] { return search_seq(o, 2); });
  search_flags(s);
  s = sub("search-powers", "Nondegenerate k-th power sequences; JSON lines, CSV columns k,length,height,count_nontrivial",
          [&] { return search_seq(o, o.k); });
  k_flag(s);
  search_flags(s);
  s = sub("search-yap", "y-arithmetic progressions on y^2 = x^k + b; JSON lines, CSV columns k,length,x_max,count",
          [&] { return search_yap(o); });
  k_flag(s, 3);
  s->add_option("--length", o.length, "Progression length");
  s->add_option("--x-max", o.x_max, "Bound on |x_1|, |x_2|, |x_3|")->required();
  s->add_option("--y-max", o.y_max, "Bound on |y_j| (0 = none)");
  s->add_option("--b-max", o.b_max, "Bound on |b| (0 = none)");
  s = sub("classify-seq", "Classify a sequence of rationals", [&] { return classify_seq(o); });
  k_flag(s);
  s->add_option("--entries", o.entries, "Comma-separated entries")->required();
  s = sub("classify-polyseq", "Classify a sequence of polynomials in t", [&] { return classify_polyseq(o); });
  k_flag(s);
  s->add_option("--entries", o.entries, "Semicolon-separated polynomials in t")->required();

  Result res;
  try {
    apply_config(args);
    std::reverse(args.begin(), args.end());
    app.parse(args);
    std::string name = app.get_subcommands().front()->get_name();
    if (o.format.empty()) o.format = default_format[name];
    res = handlers[name]();
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  } catch (const NotIntegralError& e) {
    err << "verification failure: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    err << "usage error: " << e.what() << "\n";
    return 1;
  }

  if (o.out.empty()) {
    out << res.text;
  } else {
    std::ofstream f(o.out, std::ios::binary);
    if (!f || !(f << res.text) || !f.flush()) {
      err << "cannot write " << o.out << "\n";
      return 1;
    }
  }
  return res.code;
}

}  // namespace powerseq
