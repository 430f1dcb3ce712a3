#include "cli/commands.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cli/document.hpp"
#include "cli/random_instances.hpp"
#include "cli/svg.hpp"
#include "tropsd/errors.hpp"
#include "tropsd/factor.hpp"
#include "tropsd/newton_subdiv.hpp"
#include "tropsd/psd_cone.hpp"
#include "tropsd/puiseux.hpp"
#include "tropsd/trop_core.hpp"

namespace tropsd::cli {
namespace {

using Json = nlohmann::ordered_json;

struct Context {
  bool json = false;
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

SymMatrix read_matrix(const std::string& path, std::istream& in) {
  std::string text;
  if (path.empty() || path == "-") {
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  } else {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw DocumentError("cannot open '" + path + "'");
    text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
  }
  return parse_matrix_document(text);
}

std::string format_vector(const Vector& v) {
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + v[k].str();
  return s + ")";
}

std::string format_point(const LatticePoint& p) {
  return "(" + std::to_string(p.i + 1) + "," + std::to_string(p.j + 1) + ")";
}

std::string format_point_set(const PointSet& s) {
  std::string out;
  for (std::size_t k = 0; k < s.size(); ++k) out += (k ? " " : "") + format_point(s[k]);
  return out;
}

std::string format_subset(const std::vector<std::size_t>& s) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.size(); ++k) out += (k ? "," : "") + std::to_string(s[k] + 1);
  return out + "}";
}

Json json_vector(const Vector& v) {
  Json arr = Json::array();
  for (const auto& x : v) arr.push_back(x.str());
  return arr;
}

Json json_point_set(const PointSet& s) {
  Json arr = Json::array();
  for (const auto& p : s) arr.push_back(Json::array({p.i + 1, p.j + 1}));
  return arr;
}

Json json_matrix(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string format_violation(const SymMatrix& a, const IndexPair& pair) {
  const auto i = std::to_string(pair.first + 1);
  const auto j = std::to_string(pair.second + 1);
  const auto& [p, q] = pair;
  return "A[" + i + "," + i + "] + A[" + j + "," + j + "] > 2*A[" + i + "," + j + "] (" + a(p, p).str() +
         " + " + a(q, q).str() + " > " + (Rat(2) * a(p, q)).str() + ")";
}

// Shared non-member report; returns the exit code.
int report_non_member(const Context& ctx, const SymMatrix& a, const MembershipVerdict& verdict,
                      const std::string& note) {
  const auto& pair = *verdict.violated_pair;
  if (ctx.json) {
    Json j;
    j["member"] = false;
    j["violated_pair"] = Json::array({pair.first + 1, pair.second + 1});
    if (!note.empty()) j["note"] = note;
    ctx.out << j.dump(2) << '\n';
  } else {
    ctx.out << "verdict: non-member" << (note.empty() ? "" : " (" + note + ")") << '\n';
    ctx.out << "violated: " << format_violation(a, pair) << '\n';
  }
  return kExitNonMember;
}

int cmd_check(const Context& ctx, const SymMatrix& a, const std::string& method) {
  Json j;
  j["method"] = method;
  bool member = false;
  std::ostringstream text;
  text << "method: " << method << '\n';

  if (method == "inequalities") {
    const auto verdict = is_trop_psd_inequalities(a);
    member = verdict.is_member;
    if (!member) {
      const auto& [p, q] = *verdict.violated_pair;
      j["violated_pair"] = Json::array({p + 1, q + 1});
      text << "violated: " << format_violation(a, *verdict.violated_pair) << '\n';
    }
  } else if (method == "det") {
    Rat diagonal(0);
    for (std::size_t i = 0; i < a.n(); ++i) diagonal += a(i, i);
    const Rat det = trop_det_assignment(a);
    member = (diagonal == det);
    j["trop_det"] = det.str();
    j["diagonal_sum"] = diagonal.str();
    text << "tropical determinant: " << det << '\n' << "diagonal sum: " << diagonal << '\n';
  } else {
    const auto sub = lower_subdivision(a);
    member = is_trivial(sub);
    Json cells = Json::array();
    text << "cells: " << sub.cells.size() << '\n';
    for (std::size_t c = 0; c < sub.cells.size(); ++c) {
      cells.push_back(json_point_set(sub.cells[c]));
      text << "  cell " << c + 1 << ": " << format_point_set(sub.cells[c]) << '\n';
    }
    j["cells"] = std::move(cells);
  }
  j["member"] = member;
  text << "verdict: " << (member ? "member" : "non-member") << '\n';
  if (ctx.json) {
    ctx.out << j.dump(2) << '\n';
  } else {
    ctx.out << text.str();
  }
  return member ? kExitMember : kExitNonMember;
}

int cmd_witness(const Context& ctx, const SymMatrix& a, const std::string& signs_text,
                const std::string& specialize_text) {
  const auto verdict = is_trop_psd_inequalities(a);
  if (!verdict.is_member) return report_non_member(ctx, a, verdict, "no PSD lift exists");
  const SignPattern signs = signs_text.empty() ? SignPattern::all_positive(a.n())
                                               : SignPattern::parse(a.n(), signs_text);
  std::optional<Rat> u;
  if (!specialize_text.empty()) {
    u = Rat::parse(specialize_text);
    if (u->sign() <= 0 || *u >= Rat(1)) throw InvalidInput("--specialize needs 0 < u < 1");
  }
  if (a.n() > kPrincipalMinorsMaxN) {
    throw CapacityError("witness verification expands 2^n - 1 minors and accepts n <= " +
                        std::to_string(kPrincipalMinorsMaxN));
  }

  const PuiseuxMatrix m = construct_witness(a, signs);
  const auto minors = principal_minors(m);
  const bool valuation_ok = (m.valuation() == a);
  bool minors_ok = true;
  for (const auto& pm : minors) minors_ok = minors_ok && pm.value.is_positive();
  bool pass = valuation_ok && minors_ok;

  Json j;
  j["member"] = true;
  j["signs"] = signs.str();
  Json entries = Json::array();
  for (std::size_t i = 0; i < a.n(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < a.n(); ++k) row.push_back(m(i, k).str());
    entries.push_back(std::move(row));
  }
  j["witness"] = std::move(entries);
  Json jminors = Json::array();
  for (const auto& pm : minors) {
    Json subset = Json::array();
    for (auto s : pm.subset) subset.push_back(s + 1);
    jminors.push_back({{"subset", subset},
                       {"value", pm.value.str()},
                       {"leading", pm.value.is_zero() ? std::string("0")
                                                      : PuiseuxPoly::monomial(pm.value.leading_coefficient(),
                                                                              pm.value.valuation())
                                                            .str()},
                       {"positive", pm.value.is_positive()}});
  }
  j["principal_minors"] = std::move(jminors);
  j["valuation_matches"] = valuation_ok;

  std::ostringstream text;
  text << "signs: " << (signs.str().empty() ? "(none)" : signs.str()) << '\n';
  text << "witness:\n";
  for (std::size_t i = 0; i < a.n(); ++i) {
    text << "  [";
    for (std::size_t k = 0; k < a.n(); ++k) text << (k ? ", " : "") << m(i, k);
    text << "]\n";
  }
  text << "principal minors:\n";
  for (const auto& pm : minors) {
    text << "  " << format_subset(pm.subset) << ": " << pm.value;
    if (pm.value.is_zero()) {
      text << "  [zero]\n";
    } else {
      text << "  [leading " << PuiseuxPoly::monomial(pm.value.leading_coefficient(), pm.value.valuation())
           << (pm.value.is_positive() ? ", positive]" : ", not positive]") << '\n';
    }
  }
  text << "valuation matches A: " << (valuation_ok ? "yes" : "no") << '\n';
  text << "verdict: " << (valuation_ok && minors_ok ? "PASS" : "FAIL") << '\n';

  if (u) {
    const bool special_ok = specialize_and_check(m, *u);
    const Rat threshold = specialization_threshold(m);
    const mpz_class scale = exponent_denominator_lcm(m);
    const Matrix values = specialize(m, *u);
    pass = pass && special_ok;
    j["specialization"] = {{"u", u->str()},
                           {"exponent_scale", scale.get_str()},
                           {"threshold", threshold.str()},
                           {"matrix", json_matrix(values)},
                           {"pass", special_ok}};
    text << "specialization: t = u^" << scale.get_str() << " at u = " << *u << '\n';
    text << "threshold: " << threshold << '\n';
    text << "specialized matrix: " << values << '\n';
    text << "specialized minors positive: " << (special_ok ? "PASS" : "FAIL") << '\n';
  }
  j["pass"] = pass;

  if (ctx.json) {
    ctx.out << j.dump(2) << '\n';
  } else {
    ctx.out << text.str();
  }
  return pass ? kExitMember : kExitNonMember;
}

int cmd_decompose(const Context& ctx, const SymMatrix& a) {
  const auto verdict = is_trop_psd_inequalities(a);
  if (!verdict.is_member) {
    return report_non_member(ctx, a, verdict, "symmetric Barvinok rank is infinite");
  }
  const auto d = decompose_rank_one(a);
  const bool ok = (d.reconstruct() == a);
  if (ctx.json) {
    Json j;
    j["member"] = true;
    Json vectors = Json::array();
    for (const auto& v : d.vectors) vectors.push_back(json_vector(v));
    j["vectors"] = std::move(vectors);
    j["reconstruction"] = ok;
    ctx.out << j.dump(2) << '\n';
  } else {
    ctx.out << "vectors: " << d.vectors.size() << '\n';
    for (std::size_t k = 0; k < d.vectors.size(); ++k) {
      ctx.out << "  u" << k + 1 << " = " << format_vector(d.vectors[k]) << '\n';
    }
    ctx.out << "reconstruction min_k u_k (.) u_k^T = A: " << (ok ? "PASS" : "FAIL") << '\n';
  }
  return ok ? kExitMember : kExitNonMember;
}

int cmd_rank(const Context& ctx, const SymMatrix& a) {
  const auto verdict = is_trop_psd_inequalities(a);
  if (!verdict.is_member) {
    return report_non_member(ctx, a, verdict, "symmetric Barvinok rank is infinite");
  }
  const auto cover = minimum_facet_cover(a);
  const std::size_t bound = symmetric_rank_bound(a.n());
  if (ctx.json) {
    Json j;
    j["member"] = true;
    j["rank"] = cover.size();
    j["bound"] = bound;
    Json jcover = Json::array();
    for (const auto& f : cover) {
      jcover.push_back({{"vector", json_vector(f.functional.lambda)}, {"touching", json_point_set(f.touching_set)}});
    }
    j["cover"] = std::move(jcover);
    ctx.out << j.dump(2) << '\n';
  } else {
    ctx.out << "symmetric Barvinok rank: " << cover.size() << '\n';
    ctx.out << "bound max(n, floor(n^2/4)): " << bound << '\n';
    ctx.out << "minimum cover:\n";
    for (std::size_t k = 0; k < cover.size(); ++k) {
      ctx.out << "  u" << k + 1 << " = " << format_vector(cover[k].functional.lambda) << "  touches "
              << format_point_set(cover[k].touching_set) << '\n';
    }
  }
  return kExitMember;
}

int cmd_factor(const Context& ctx, const SymMatrix& a) {
  const auto verdict = is_trop_psd_inequalities(a);
  if (!verdict.is_member) {
    return report_non_member(ctx, a, verdict, "no factorization B (.) B^T exists");
  }
  const auto g = gram_factor(a);
  const bool ok = (trop_mat_mul(g.b, g.b.transpose()) == a.to_matrix());
  if (ctx.json) {
    Json j;
    j["member"] = true;
    j["B"] = json_matrix(g.b);
    j["reconstruction"] = ok;
    ctx.out << j.dump(2) << '\n';
  } else {
    ctx.out << "B (" << g.b.rows() << " x " << g.b.cols() << "):\n";
    for (std::size_t i = 0; i < g.b.rows(); ++i) {
      ctx.out << "  [";
      for (std::size_t k = 0; k < g.b.cols(); ++k) ctx.out << (k ? ", " : "") << g.b(i, k);
      ctx.out << "]\n";
    }
    ctx.out << "B (.) B^T = A: " << (ok ? "PASS" : "FAIL") << '\n';
  }
  return ok ? kExitMember : kExitNonMember;
}

int cmd_random(const Context& ctx, std::uint64_t seed, std::size_t n, bool any, std::size_t count) {
  InstanceSampler sampler(seed);
  for (std::size_t k = 0; k < count; ++k) {
    ctx.out << render_matrix_document(any ? sampler.any(n) : sampler.member(n)) << '\n';
  }
  return kExitMember;
}

int cmd_svg(const Context& ctx, const SymMatrix& a, const std::string& out_path) {
  const std::string svg = render_subdivision_svg(a);
  if (out_path.empty() || out_path == "-") {
    ctx.out << svg;
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw DocumentError("cannot write '" + out_path + "'");
    file << svg;
    if (!file) throw DocumentError("failed writing '" + out_path + "'");
  }
  return kExitMember;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with tropical positive semidefinite matrices", "tropsd"};
  app.require_subcommand(1);
  app.fallthrough();

  bool json = false;
  std::uint64_t seed = 1;
  app.add_flag("--json", json, "Machine-readable JSON output");
  app.add_option("--seed", seed, "Seed for the random command");

  std::string input = "-";
  auto add_input = [&input](CLI::App* sub) {
    sub->add_option("input", input, "Matrix document (JSON); '-' or omitted reads stdin");
  };

  auto* check = app.add_subcommand("check", "Decide tropical PSD membership");
  add_input(check);
  std::string method = "inequalities";
  check->add_option("--method", method, "inequalities | det | subdivision")
      ->check(CLI::IsMember({"inequalities", "det", "subdivision"}));

  auto* witness = app.add_subcommand("witness", "Construct and verify a Puiseux PSD lift");
  add_input(witness);
  std::string signs;
  std::string specialize_at;
  witness->add_option("--signs", signs, "Off-diagonal signs, one '+'/'-' per pair (use --signs=...)");
  witness->add_option("--specialize", specialize_at, "Also check the rational specialization at t = u^L");

  auto* decompose = app.add_subcommand("decompose", "Greedy tropical rank-one decomposition");
  add_input(decompose);
  auto* rank = app.add_subcommand("rank", "Exact symmetric Barvinok rank");
  add_input(rank);
  auto* factor = app.add_subcommand("factor", "Tropical Gram factor B with B (.) B^T = A");
  add_input(factor);

  auto* random = app.add_subcommand("random", "Emit random matrix documents, one per line");
  std::size_t n = 0;
  std::size_t count = 1;
  random->add_option("--n", n, "Dimension")->required()->check(CLI::Range(std::size_t{1}, std::size_t{1000}));
  random->add_option("--count", count, "Number of documents")->check(CLI::Range(std::size_t{0}, std::size_t{1000000}));
  auto* member_flag = random->add_flag("--member", "Sample tropical PSD matrices (default)");
  auto* any_flag = random->add_flag("--any", "Sample unconstrained symmetric matrices");
  member_flag->excludes(any_flag);

  auto* svg = app.add_subcommand("svg", "Draw the subdivision of 2*Delta_2 (n = 3 only)");
  add_input(svg);
  std::string out_path;
  svg->add_option("--out", out_path, "Output path; stdout when omitted");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return 0;
    }
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  const Context ctx{json, in, out, err};
  try {
    if (*random) return cmd_random(ctx, seed, n, any_flag->count() > 0, count);
    const SymMatrix a = read_matrix(input, in);
    if (*check) return cmd_check(ctx, a, method);
    if (*witness) return cmd_witness(ctx, a, signs, specialize_at);
    if (*decompose) return cmd_decompose(ctx, a);
    if (*rank) return cmd_rank(ctx, a);
    if (*factor) return cmd_factor(ctx, a);
    if (*svg) return cmd_svg(ctx, a, out_path);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace tropsd::cli
