// Copyright 2026 The tmcf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tmcf/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tmcf/analysis.hpp"
#include "tmcf/products3.hpp"
#include "tmcf/thuemorse.hpp"

namespace tmcf::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Environment overrides; a flag given on the command line wins.
constexpr const char* kEnvMaxDegree = "TMCF_MAX_DEGREE";
constexpr const char* kEnvKCutoff = "TMCF_K_CUTOFF";

struct Options {
  std::string b = "2";
  std::string ell;
  std::string m = "1..2";
  long u = -1;
  long v = -1;
  std::size_t kmax = 0;
  std::string out;
  std::string format = "csv";
  std::string k_cutoff;
  std::string max_degree;
  bool with_cf = false;
};

struct Outcome {
  std::string body;
  bool passed = true;
  std::string summary;
};

long parse_long(const std::string& text, const std::string& what) {
  long value = 0;
  const char* first = text.data();
  const char* last = first + text.size();
  if (!text.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last) {
    throw UsageError(what + ": expected an integer, got '" + text + "'");
  }
  return value;
}

unsigned long parse_positive(const std::string& text, const std::string& what) {
  const long v = parse_long(text, what);
  if (v <= 0) throw UsageError(what + " must be positive, got '" + text + "'");
  return static_cast<unsigned long>(v);
}

std::string env_or(const std::string& flag, const char* name) {
  if (!flag.empty()) return flag;
  const char* env = std::getenv(name);
  return env ? std::string(env) : std::string();
}

Limits limits_of(const Options& o) {
  Limits l;
  const std::string s = env_or(o.max_degree, kEnvMaxDegree);
  if (!s.empty()) l.max_degree = parse_positive(s, "max degree");
  return l;
}

AnalysisConfig analysis_of(const Options& o) {
  AnalysisConfig c;
  const std::string s = env_or(o.k_cutoff, kEnvKCutoff);
  if (!s.empty()) {
    c.k_cutoff = parse_positive(s, "K cutoff");
    if (c.k_cutoff < 2) throw UsageError("K cutoff must be at least 2");
  }
  return c;
}

std::vector<unsigned> levels_of(const std::string& text, unsigned max_level) {
  if (text.empty()) throw UsageError("--ell is required");
  std::vector<unsigned> out;
  for (const long l : parse_range(text, 0).values()) {
    if (l > static_cast<long>(max_level)) {
      throw UsageError("level " + std::to_string(l) + " exceeds the maximum " + std::to_string(max_level));
    }
    out.push_back(static_cast<unsigned>(l));
  }
  return out;
}

// The rational-CF experiments work with denominators b^{2^{l+1}-1}; the
// exponent is held to the same cap as polynomial degrees.
void check_exponent(unsigned ell, const Limits& limits, const char* what) {
  if (ell >= 40) throw ResourceLimitExceeded(std::string(what) + ": level too large");
  limits.check_degree((std::size_t{2} << ell) - 1, what);
}

const char* tf(bool x) { return x ? "true" : "false"; }

std::string na_or(const std::optional<std::size_t>& x) { return x ? std::to_string(*x) : "NA"; }

Json decimal_json(const std::optional<double>& x) { return x ? Json(*x) : Json(nullptr); }

Json valuation_json(const Valuation2& v) { return v.is_infinite() ? Json("inf") : Json(v.value()); }

Json rationals_json(const std::vector<Rational>& xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(x.to_string());
  return a;
}

Json bigints_json(const std::vector<BigInt>& xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(to_string(x));
  return a;
}

std::string json_body(const Json& j) { return j.dump(2) + "\n"; }

// vtable ---------------------------------------------------------------------

Outcome cmd_vtable(const Options& o) {
  const auto levels = levels_of(o.ell, kMaxVLevel);
  const auto tables = v_tables_up_to(*std::max_element(levels.begin(), levels.end()));
  Outcome r;
  std::ostringstream csv;
  csv << "ell,j,value,nu2,expected_nu2\n";
  Json reports = Json::array();
  std::size_t failed = 0;
  for (const unsigned ell : levels) {
    const VTable& t = tables[ell];
    const ValuationReport rep = verify_valuation_pattern(t);
    if (!rep.passed()) ++failed;
    for (std::size_t j = 0; j < t.values.size(); ++j) {
      csv << ell << ',' << j << ',' << t.values[j].to_string() << ',' << rep.observed[j].to_string() << ','
          << expected_v_valuation(ell, j) << '\n';
    }
    Json mism = Json::array();
    for (const auto& mm : rep.mismatches) {
      mism.push_back({{"j", mm.index}, {"observed", valuation_json(mm.observed)}, {"expected", mm.expected}});
    }
    Json nus = Json::array();
    for (const auto& nu : rep.observed) nus.push_back(valuation_json(nu));
    reports.push_back({{"ell", ell},
                       {"values", rationals_json(t.values)},
                       {"nu2", nus},
                       {"mismatches", mism},
                       {"passed", rep.passed()}});
  }
  r.passed = failed == 0;
  r.summary = "vtable: " + std::to_string(levels.size()) + " level(s), " + std::to_string(failed) + " failed";
  r.body = o.format == "json" ? json_body({{"command", "vtable"}, {"passed", r.passed}, {"levels", reports}})
                              : csv.str();
  return r;
}

// identity -------------------------------------------------------------------

Outcome cmd_identity(const Options& o) {
  const auto levels = levels_of(o.ell, kMaxVLevel);
  const Limits limits = limits_of(o);
  const auto tables = v_tables_up_to(*std::max_element(levels.begin(), levels.end()));
  Outcome r;
  std::ostringstream csv;
  csv << "ell,terms,identity_holds,quotient_count,all_degree_one,contraction_sound,"
         "contraction_matches_substitution,contraction_matches_previous,passed\n";
  Json reports = Json::array();
  std::size_t failed = 0;
  for (const unsigned ell : levels) {
    const FzfracReport f = verify_fzfrac(tables[ell], limits);
    std::optional<ContractionReport> c;
    if (ell >= 1) c = verify_contraction(tables[ell - 1], tables[ell], limits);
    const bool ok = f.passed() && (!c || c->passed());
    if (!ok) ++failed;
    auto opt = [&](bool ContractionReport::*field) -> std::string { return c ? tf((*c).*field) : "NA"; };
    csv << ell << ',' << f.expected_quotient_count << ',' << tf(f.identity_holds) << ',' << f.quotient_count
        << ',' << tf(f.all_degree_one) << ',' << opt(&ContractionReport::sound) << ','
        << opt(&ContractionReport::matches_substitution) << ',' << opt(&ContractionReport::matches_previous_level)
        << ',' << tf(ok) << '\n';
    Json j = {{"ell", ell},
              {"terms", f.expected_quotient_count},
              {"identity_holds", f.identity_holds},
              {"quotient_count", f.quotient_count},
              {"all_degree_one", f.all_degree_one},
              {"leading_coefficients", rationals_json(f.leading_coefficients)}};
    j["first_divergence"] = f.first_divergence ? Json(*f.first_divergence) : Json(nullptr);
    if (c) {
      j["contraction"] = {{"sound", c->sound},
                          {"matches_substitution", c->matches_substitution},
                          {"matches_previous_level", c->matches_previous_level}};
    } else {
      j["contraction"] = nullptr;
    }
    j["passed"] = ok;
    reports.push_back(std::move(j));
  }
  r.passed = failed == 0;
  r.summary = "identity: " + std::to_string(levels.size()) + " level(s), " + std::to_string(failed) + " failed";
  r.body = o.format == "json" ? json_body({{"command", "identity"}, {"passed", r.passed}, {"levels", reports}})
                              : csv.str();
  return r;
}

// tm3 ------------------------------------------------------------------------

Outcome cmd_tm3(const Options& o) {
  const auto levels = levels_of(o.ell, kMaxAlphaBetaLevel);
  const Limits limits = limits_of(o);
  if (o.u == 0 || o.v == 0) throw UsageError("--u and --v must be nonzero");
  if (o.u * o.u == o.v) throw UsageError("requires u^2 != v");
  const bool tm = o.u == -1 && o.v == -1;
  const auto tables = alphabeta_tables_up_to(o.u, o.v, *std::max_element(levels.begin(), levels.end()));
  Outcome r;
  std::ostringstream csv;
  csv << "u,v,ell,terms,complete,vanishing_beta,identity,tm3_pattern,literal_beta_reading,passed\n";
  Json reports = Json::array();
  std::size_t failed = 0;
  for (const unsigned ell : levels) {
    const AlphaBetaTable& t = tables[ell];
    const GtildeIdentityReport id = verify_gtilde_identity(t, limits);
    std::optional<TM3Report> p;
    if (tm) p = verify_tm3_pattern(t);
    // vanishing betas are a legal outcome away from u = v = -1
    const bool ok = tm ? (p->passed() && id.passed()) : (!id.evaluated || id.identity_holds);
    if (!ok) ++failed;
    const std::string identity = id.evaluated ? tf(id.identity_holds) : "NA";
    csv << o.u << ',' << o.v << ',' << ell << ',' << t.full_size() << ',' << tf(t.complete()) << ','
        << na_or(id.truncated_at) << ',' << identity << ',' << (p ? tf(p->passed()) : "NA") << ','
        << (p ? tf(p->literal_beta_reading_holds) : "NA") << ',' << tf(ok) << '\n';

    Json j = {{"ell", ell},
              {"terms", t.full_size()},
              {"complete", t.complete()},
              {"alpha", rationals_json(t.alpha)},
              {"beta", rationals_json(t.beta)},
              {"vanishing_beta", t.vanishing_beta}};
    j["halted_at"] = t.halted ? Json(t.halted->index) : Json(nullptr);
    j["identity"] = id.evaluated ? Json(id.identity_holds) : Json(nullptr);
    if (p) {
      Json an = Json::array(), bn = Json::array(), mism = Json::array();
      for (const auto& x : p->alpha_valuations) an.push_back(valuation_json(x));
      for (const auto& x : p->beta_valuations) bn.push_back(valuation_json(x));
      for (const auto* list : {&p->alpha_mismatches, &p->beta_mismatches}) {
        for (const auto& mm : *list) {
          mism.push_back({{"sequence", mm.sequence == 'a' ? "alpha" : "beta"},
                          {"j", mm.index},
                          {"observed", valuation_json(mm.observed)},
                          {"expected", mm.expected}});
        }
      }
      j["tm3"] = {{"alpha_nu2", an},
                  {"beta_nu2", bn},
                  {"exceptional_indices", {p->exceptional_alpha_first, p->exceptional_alpha_second}},
                  {"mismatches", mism},
                  {"all_beta_nonzero", p->all_beta_nonzero},
                  {"literal_beta_reading_holds", p->literal_beta_reading_holds},
                  {"passed", p->passed()}};
    }
    j["passed"] = ok;
    reports.push_back(std::move(j));
  }
  Json seeds = Json::array();
  for (const auto& d : seed_divergence(o.u, o.v)) {
    seeds.push_back({{"seed", d.name}, {"level0", d.level0.to_string()}, {"higher", d.higher.to_string()}});
  }
  r.passed = failed == 0;
  r.summary = "tm3: u=" + std::to_string(o.u) + " v=" + std::to_string(o.v) + ", " +
              std::to_string(levels.size()) + " level(s), " + std::to_string(failed) + " failed";
  r.body = o.format == "json" ? json_body({{"command", "tm3"},
                                           {"u", o.u},
                                           {"v", o.v},
                                           {"passed", r.passed},
                                           {"seed_divergence", seeds},
                                           {"levels", reports}})
                              : csv.str();
  return r;
}

// stats ----------------------------------------------------------------------

std::vector<long> bases_of(const std::string& text) {
  return parse_range(text, 2).values();
}

Outcome cmd_stats(const Options& o) {
  const auto bases = bases_of(o.b);
  const auto levels = levels_of(o.ell, 39);
  const Limits limits = limits_of(o);
  for (const unsigned ell : levels) check_exponent(ell, limits, "stats");
  const AnalysisConfig cfg = analysis_of(o);
  const auto rows = measure_K_sweep(bases, levels, cfg);
  const SweepSummary sum = summarize_sweep(rows);
  Outcome r;
  r.passed = sum.all_K_finite &&
             std::all_of(rows.begin(), rows.end(), [](const CFStats& s) { return s.classical_bound_holds; });
  r.summary = "stats: " + std::to_string(rows.size()) + " row(s), sup measured_K " +
              format_decimal(sum.sup_measured_K) + ", min measured_C " + format_decimal(sum.min_measured_C);
  if (o.format != "json") {
    r.body = stats_csv(rows);
    return r;
  }
  Json a = Json::array();
  for (const auto& s : rows) {
    Json j = {{"b", s.b},
              {"ell", s.ell},
              {"length", s.length},
              {"max_quotient", to_string(s.max_quotient)},
              {"measured_K", decimal_json(s.measured_K)},
              {"measured_C", decimal_json(s.measured_C)},
              {"normalized_exponent", decimal_json(s.normalized_exponent)},
              {"eligible_convergents", s.eligible_convergents},
              {"classical_bound_holds", s.classical_bound_holds}};
    if (o.with_cf) j["partial_quotients"] = bigints_json(rcf_of_rational(eval_f_at(s.ell, s.b)).quotients);
    a.push_back(std::move(j));
  }
  Json summary = {{"sup_measured_K", decimal_json(sum.sup_measured_K)},
                  {"sup_at", {{"b", sum.sup_b}, {"ell", sum.sup_ell}}},
                  {"min_measured_C", decimal_json(sum.min_measured_C)},
                  {"max_normalized_exponent", decimal_json(sum.max_normalized_exponent)},
                  {"all_K_finite", sum.all_K_finite},
                  {"note", "measured_K is an empirical lower-bound witness over convergents with q > k_cutoff, "
                           "not an explicit approximation constant"}};
  r.body = json_body({{"command", "stats"},
                      {"k_cutoff", cfg.k_cutoff},
                      {"passed", r.passed},
                      {"summary", summary},
                      {"rows", a}});
  return r;
}

// growth ---------------------------------------------------------------------

Outcome cmd_growth(const Options& o) {
  const auto levels = levels_of(o.ell, 30);
  const Limits limits = limits_of(o);
  Outcome r;
  std::string csv;
  Json reports = Json::array();
  std::size_t failed = 0;
  for (const unsigned ell : levels) {
    const std::size_t full = std::size_t{2} << ell;
    const std::size_t kmax = o.kmax == 0 ? full : o.kmax;
    if (kmax > full) {
      throw UsageError("--kmax " + std::to_string(kmax) + " exceeds " + std::to_string(full) +
                       " partial quotients at level " + std::to_string(ell));
    }
    limits.check_degree(full, "growth");
    const auto rows = convergent_growth(ell, kmax, limits);
    const GrowthEnvelope env = fit_growth_envelope(rows, std::max<std::size_t>(1, kmax / 2));
    if (!env.violations.empty()) ++failed;
    std::string part = growth_csv(ell, rows);
    if (!csv.empty()) part.erase(0, part.find('\n') + 1);
    csv += part;
    Json rj = Json::array();
    for (const auto& g : rows) rj.push_back({{"k", g.k}, {"log_num_coeff", g.log_num_coeff}, {"log_den_coeff", g.log_den_coeff}});
    reports.push_back({{"ell", ell},
                       {"kmax", kmax},
                       {"envelope",
                        {{"c1", round15(env.c1)},
                         {"c2", round15(env.c2)},
                         {"sqrt_rate", round15(env.sqrt_rate)},
                         {"fit_upto", env.fit_upto},
                         {"violations", env.violations}}},
                       {"rows", rj}});
  }
  r.passed = failed == 0;
  r.summary = "growth: " + std::to_string(levels.size()) + " level(s), " + std::to_string(failed) +
              " with envelope violations";
  r.body = o.format == "json" ? json_body({{"command", "growth"}, {"passed", r.passed}, {"levels", reports}}) : csv;
  return r;
}

// prefix ---------------------------------------------------------------------

Outcome cmd_prefix(const Options& o) {
  const auto bases = bases_of(o.b);
  const auto levels = levels_of(o.ell, 39);
  const auto ms = parse_range(o.m, 0).values();
  const Limits limits = limits_of(o);
  for (const unsigned ell : levels) {
    for (const long m : ms) check_exponent(ell + static_cast<unsigned>(m), limits, "prefix");
  }
  Outcome r;
  std::ostringstream csv;
  csv << "b,ell,m,n,required,common_prefix,divergence_index,passed\n";
  Json a = Json::array();
  std::size_t failed = 0;
  for (const long b : bases) {
    for (const unsigned ell : levels) {
      for (const long m : ms) {
        const PrefixReport p = prefix_agreement(b, ell, static_cast<unsigned>(m));
        if (!p.passed()) ++failed;
        csv << b << ',' << ell << ',' << m << ',' << p.n << ',' << p.required << ',' << p.common_prefix << ','
            << na_or(p.divergence_index) << ',' << tf(p.passed()) << '\n';
        Json j = {{"b", b}, {"ell", ell}, {"m", m}, {"n", p.n}, {"required", p.required},
                  {"common_prefix", p.common_prefix}};
        j["divergence_index"] = p.divergence_index ? Json(*p.divergence_index) : Json(nullptr);
        j["passed"] = p.passed();
        a.push_back(std::move(j));
      }
    }
  }
  r.passed = failed == 0;
  r.summary = "prefix: " + std::to_string(a.size()) + " case(s), " + std::to_string(failed) + " failed";
  r.body = o.format == "json" ? json_body({{"command", "prefix"}, {"passed", r.passed}, {"rows", a}}) : csv.str();
  return r;
}

void emit(const Options& o, const Outcome& r, std::ostream& out) {
  if (o.out.empty()) {
    out << r.body;
    return;
  }
  std::ofstream f(o.out, std::ios::binary | std::ios::trunc);
  if (!f) throw UsageError("cannot open output file '" + o.out + "'");
  f << r.body;
  if (!f.flush()) throw UsageError("failed writing '" + o.out + "'");
}

}  // namespace

std::vector<long> Range::values() const {
  std::vector<long> v;
  for (long x = first; x <= last; ++x) v.push_back(x);
  return v;
}

Range parse_range(const std::string& text, long min_value) {
  Range r;
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      r.first = r.last = parse_long(text, "range");
    } else {
      r.first = parse_long(text.substr(0, dots), "range start");
      r.last = parse_long(text.substr(dots + 2), "range end");
    }
  } catch (const UsageError& e) {
    throw std::invalid_argument(e.what());
  }
  if (r.first > r.last) throw std::invalid_argument("empty range '" + text + "'");
  if (r.first < min_value) {
    throw std::invalid_argument("value " + std::to_string(r.first) + " in '" + text + "' is below " +
                                std::to_string(min_value));
  }
  if (r.last - r.first > 100000) throw std::invalid_argument("range '" + text + "' is too long");
  return r;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Thue-Morse partial products: continued fractions, valuations and experiments", "tmcf"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&o](CLI::App* sub) {
    sub->add_option("--out", o.out, "Write output to this file instead of stdout");
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--max-degree", o.max_degree, "Degree/exponent cap (env " + std::string(kEnvMaxDegree) + ")");
  };
  auto add_ell = [&o](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--ell", o.ell, "Level, single value or a..b");
    if (required) opt->required();
  };

  auto* vt = app.add_subcommand("vtable", "v-tables and their 2-adic valuation pattern");
  add_ell(vt, true);
  add_common(vt);
  auto* id = app.add_subcommand("identity", "GCF identity, linear partial quotients, even contraction");
  add_ell(id, true);
  add_common(id);
  auto* tm = app.add_subcommand("tm3", "alpha/beta tables for the ternary products");
  add_ell(tm, true);
  tm->add_option("--u", o.u, "Parameter u (default -1)");
  tm->add_option("--v", o.v, "Parameter v (default -1)");
  add_common(tm);
  auto* st = app.add_subcommand("stats", "Regular CF statistics of f_l(b)");
  st->add_option("--b", o.b, "Base, single value or a..b (default 2)");
  add_ell(st, true);
  st->add_option("--k-cutoff", o.k_cutoff, "Exclude convergents with q <= cutoff (env " +
                                               std::string(kEnvKCutoff) + ")");
  st->add_flag("--with-cf", o.with_cf, "Include partial quotients in JSON output");
  add_common(st);
  auto* gr = app.add_subcommand("growth", "Coefficient growth of polynomial convergents");
  add_ell(gr, true);
  gr->add_option("--kmax", o.kmax, "Number of convergents (default: all)");
  add_common(gr);
  auto* px = app.add_subcommand("prefix", "Prefix agreement between f_l(b) and f_{l+m}(b)");
  px->add_option("--b", o.b, "Base, single value or a..b (default 2)");
  add_ell(px, true);
  px->add_option("--m", o.m, "Level offset, single value or a..b (default 1..2)");
  add_common(px);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  try {
    Outcome r;
    if (*vt) r = cmd_vtable(o);
    else if (*id) r = cmd_identity(o);
    else if (*tm) r = cmd_tm3(o);
    else if (*st) r = cmd_stats(o);
    else if (*gr) r = cmd_growth(o);
    else r = cmd_prefix(o);
    emit(o, r, out);
    err << r.summary << (r.passed ? "" : " [FAIL]") << '\n';
    return r.passed ? kPass : kCheckFailed;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceLimitExceeded& e) {
    err << "resource limit: " << e.what() << " (raise --max-degree or " << kEnvMaxDegree << ")\n";
    return kUsage;
  } catch (const PropositionViolated& e) {
    err << "check failed: " << e.what() << '\n';
    return kCheckFailed;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "check failed: " << e.what() << '\n';
    return kCheckFailed;
  }
}

}  // namespace tmcf::cli
