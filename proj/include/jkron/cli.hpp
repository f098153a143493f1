#pragma once

// Command line front end. run_cli takes the arguments after the program name
// and returns the process exit code: 0 ok, 1 input error, 2 degenerate pair,
// 3 predictor/oracle disagreement.

#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "jkron/bounds.hpp"
#include "jkron/io.hpp"
#include "jkron/oracle.hpp"
#include "jkron/predict_frechet.hpp"
#include "jkron/predict_generic.hpp"
#include "jkron/similarity.hpp"
#include "jkron/toeplitz.hpp"

namespace jkron {

enum ExitCode : int { kExitOk = 0, kExitInput = 1, kExitDegenerate = 2, kExitDisagree = 3 };

namespace cli {

struct Inputs {
  std::string p, f, x, y, w;
  std::string mode = "generic";
  std::string out;
  std::string dump;
  bool raw_kron = false;
  std::size_t cap = 400;
};

struct Problem {
  BivariatePoly p;
  std::optional<UnivariatePoly> f;
  JordanSpec x, y;
};

inline Problem load_problem(const Inputs& in, bool need_f = false) {
  Problem pr;
  if (!in.p.empty() && !in.f.empty())
    throw ParseError("give only one of --p and --f");
  if (!in.f.empty()) {
    pr.f = parse_univariate(in.f);
    pr.p = bezout_quotient(*pr.f);
  } else if (!in.p.empty() && !need_f) {
    pr.p = parse_bivariate(in.p);
  } else {
    throw ParseError(need_f ? "--f is required" : "one of --p or --f is required");
  }
  if (!in.w.empty()) {
    if (!in.x.empty() || !in.y.empty())
      throw ParseError("--W excludes --X and --Y");
    pr.x = pr.y = parse_jordan_spec(in.w);
  } else {
    if (in.x.empty() || in.y.empty())
      throw ParseError("--X and --Y (or --W) are required");
    pr.x = parse_jordan_spec(in.x);
    pr.y = parse_jordan_spec(in.y);
  }
  return pr;
}

inline Json inputs_json(const Problem& pr) {
  Json j;
  if (pr.f)
    j["f"] = format_univariate(*pr.f);
  j["p"] = format_bivariate(pr.p);
  j["X"] = to_json(pr.x);
  j["Y"] = to_json(pr.y);
  return j;
}

inline Json multiplicity_json(Multiplicity m) {
  return m.is_infinite() ? Json("inf") : Json(m.value());
}

inline Json pair_json(const PairPrediction& pp) {
  Json j{{"lam", to_string(pp.lam)}, {"mu", to_string(pp.mu)}, {"m", pp.m},         {"n", pp.n},
         {"eig", to_string(pp.eig)}, {"branch", pp.branch},     {"sizes", to_json(pp.sizes)}};
  if (pp.order)
    j["order"] = pp.order;
  return j;
}

inline Json pair_json(const FrechetPair& fp) {
  Json j{{"lam", to_string(fp.lam)}, {"mu", to_string(fp.mu)}, {"m", fp.m}, {"n", fp.n},
         {"eig", to_string(fp.eig)}, {"branch", fp.branch}};
  if (fp.lam != fp.mu) {
    j["k"] = multiplicity_json(fp.k);
    j["h"] = multiplicity_json(fp.h);
    j["s"] = to_json(fp.s_parts);
    j["t"] = to_json(fp.t_parts);
  } else {
    j["d"] = multiplicity_json(fp.d);
    j["nullities"] = fp.nullities;
    Json table = Json::array();
    for (const auto& r : fp.ranks)
      table.push_back({{"ell", r.ell}, {"k", r.k}, {"rank", r.rank}, {"maxRank", r.max_rank}});
    j["ranks"] = table;
  }
  j["sizes"] = to_json(fp.sizes);
  return j;
}

inline Json degenerate_json(const DegenerateCase& e) {
  return {{"lam", to_string(e.lam)},         {"mu", to_string(e.mu)},
          {"m", e.m},                        {"n", e.n},
          {"localDegree", e.local_degree},   {"maxBlockSize", e.max_block_size},
          {"countLower", e.count.lower},     {"countUpper", e.count.upper}};
}

inline void emit(const Json& doc, const Inputs& in, std::ostream& out) {
  if (in.out.empty()) {
    out << doc.dump(2) << '\n';
    return;
  }
  std::ofstream f(in.out);
  if (!f)
    throw ParseError("cannot write " + in.out);
  f << doc.dump(2) << '\n';
}

inline void require_cap(const Problem& pr, std::size_t cap) {
  const std::size_t dim = pr.x.dimension() * pr.y.dimension();
  if (dim > cap)
    throw DimensionCap("dimension " + std::to_string(dim) + " exceeds cap " + std::to_string(cap));
}

inline Json report(const std::string& mode, const Problem& pr) {
  return Json{{"schema", kSchema}, {"mode", mode}, {"inputs", inputs_json(pr)}};
}

inline int cmd_predict(const Inputs& in, std::ostream& out, const std::string& mode) {
  const Problem pr = load_problem(in, mode == "frechet");
  Json doc = report(mode, pr);
  if (mode == "frechet") {
    const FrechetPrediction fp = frechet_detailed(*pr.f, pr.x, pr.y);
    doc["result"] = to_json(fp.structure);
    doc["diagnostics"] = Json::array();
    for (const auto& pair : fp.pairs)
      doc["diagnostics"].push_back(pair_json(pair));
  } else if (mode == "generic") {
    try {
      const GenericPrediction gp = predict_generic_detailed(pr.p, pr.x, pr.y);
      doc["result"] = to_json(gp.structure);
      doc["diagnostics"] = Json::array();
      for (const auto& pair : gp.pairs)
        doc["diagnostics"].push_back(pair_json(pair));
    } catch (const DegenerateCase& e) {
      doc["error"] = e.what();
      doc["degenerate"] = degenerate_json(e);
      emit(doc, in, out);
      return kExitDegenerate;
    }
  } else {
    throw ParseError("--mode must be generic or frechet");
  }
  emit(doc, in, out);
  return kExitOk;
}

inline int cmd_oracle(const Inputs& in, std::ostream& out) {
  const Problem pr = load_problem(in);
  require_cap(pr, in.cap);
  Json doc = report("oracle", pr);
  doc["rawKron"] = in.raw_kron;
  doc["result"] = to_json(in.raw_kron ? oracle_jcf_raw(pr.p, pr.x, pr.y) : oracle_jcf(pr.p, pr.x, pr.y));
  if (!in.dump.empty()) {
    std::ofstream f(in.dump);
    if (!f)
      throw ParseError("cannot write " + in.dump);
    f << dump(in.raw_kron ? build_raw_kron(pr.p, pr.x, pr.y) : build_full(pr.p, pr.x, pr.y));
  }
  emit(doc, in, out);
  return kExitOk;
}

/// First eigenvalue (ascending) where the two structures differ.
inline Json minimized_diff(const JordanStructure& predicted, const JordanStructure& oracle) {
  std::set<Rational> eigs;
  for (const auto& [e, s] : predicted.entries())
    eigs.insert(e);
  for (const auto& [e, s] : oracle.entries())
    eigs.insert(e);
  for (const auto& e : eigs) {
    const BlockSizes* a = predicted.find(e);
    const BlockSizes* b = oracle.find(e);
    const BlockSizes none;
    if (!a || !b || *a != *b)
      return {{"eig", to_string(e)}, {"predicted", to_json(a ? *a : none)}, {"oracle", to_json(b ? *b : none)}};
  }
  return nullptr;
}

inline int cmd_check(const Inputs& in, std::ostream& out) {
  const bool frechet = in.mode == "frechet";
  if (!frechet && in.mode != "generic")
    throw ParseError("--mode must be generic or frechet");
  const Problem pr = load_problem(in, frechet);
  require_cap(pr, in.cap);
  Json doc = report("check", pr);
  doc["predictor"] = in.mode;

  const JordanStructure oracle = oracle_jcf(pr.p, pr.x, pr.y);
  JordanStructure predicted;
  bool bounds_hold = true;
  if (frechet) {
    predicted = frechet_jcf(*pr.f, pr.x, pr.y);
  } else {
    // Degenerate pairs take the oracle's answer and are checked against the bounds instead.
    Json checks = Json::array();
    const bool constant = pr.p.is_constant();
    for (const auto& bx : pr.x.blocks())
      for (const auto& by : pr.y.blocks()) {
        const BivariatePoly t = taylor_at(pr.p, bx.eig, by.eig);
        if (constant) {
          predicted.add(t.coeff(0, 0), BlockSizes(bx.size * by.size, 1));
          continue;
        }
        const GenericCaseTag tag = classify_values(t.coeff(1, 0), t.coeff(0, 1), bx.size, by.size);
        try {
          const PairPrediction pp = predict_pair_from_taylor(t, bx.eig, by.eig, bx.size, by.size, tag);
          predicted.add(pp.eig, pp.sizes);
        } catch (const DegenerateCase& e) {
          const JordanStructure pair = oracle_jcf(pr.p, JordanSpec{bx}, JordanSpec{by});
          const BlockSizes& sizes = pair.entries().begin()->second;
          predicted.add(t.coeff(0, 0), sizes);
          Json c = degenerate_json(e);
          c["observedCount"] = sizes.size();
          c["observedMaxBlock"] = sizes.front();
          c["holds"] = e.count.lower <= sizes.size() && sizes.size() <= e.count.upper &&
                       sizes.front() <= e.max_block_size;
          bounds_hold = bounds_hold && c["holds"].get<bool>();
          checks.push_back(c);
        }
      }
    if (!checks.empty())
      doc["bounds"] = checks;
  }
  const bool agree = predicted == oracle && bounds_hold;
  doc["predicted"] = to_json(predicted);
  doc["oracle"] = to_json(oracle);
  doc["agreement"] = agree;
  if (predicted != oracle)
    doc["diff"] = minimized_diff(predicted, oracle);
  emit(doc, in, out);
  return agree ? kExitOk : kExitDisagree;
}

inline int cmd_bounds(std::size_t m, std::size_t n, std::size_t d, const Inputs& in, std::ostream& out) {
  Json doc{{"schema", kSchema}, {"mode", "bounds"}, {"m", m}, {"n", n}, {"d", d}};
  doc.update(to_json(block_count_bounds(m, n, d), max_block_size_bound(m, n, d)));
  doc["filtration"] = filtration_dims(m, n).u;
  emit(doc, in, out);
  return kExitOk;
}

struct ScanArgs {
  std::size_t m_max = 4, n_max = 4, d_max = 2, ell_max = 2;
  unsigned threads = 0;
};

inline std::string record_key(const ToeplitzSpec& s) {
  return std::to_string(s.m) + ' ' + std::to_string(s.n) + ' ' + std::to_string(s.d) + ' ' +
         std::to_string(s.ell) + ' ' + std::to_string(s.k);
}

inline std::string quad_key(const Quadruple& q) {
  return std::to_string(q.m) + ' ' + std::to_string(q.n) + ' ' + std::to_string(q.d) + ' ' + std::to_string(q.ell);
}

/// Append-only JSONL scan. With --out, completed quadruples are listed in
/// "<out>.progress" and skipped on a rerun; records already in the file are
/// never written twice.
inline int cmd_scan(const ScanArgs& a, const Inputs& in, std::ostream& out) {
  const auto quads = scan_quadruples(a.m_max, a.n_max, a.d_max, a.ell_max);
  if (in.out.empty()) {
    for (const auto& group : scan_deficiencies_grouped(quads, a.threads))
      for (const auto& r : group)
        out << to_json(r).dump() << '\n';
    return kExitOk;
  }

  const std::string progress_path = in.out + ".progress";
  std::set<std::string> done, seen;
  {
    std::ifstream prog(progress_path);
    for (std::string line; std::getline(prog, line);)
      if (!line.empty())
        done.insert(line);
    std::ifstream prev(in.out);
    for (std::string line; std::getline(prev, line);)
      if (!line.empty())
        seen.insert(record_key(deficiency_from_json(parse_json_text(line)).spec));
  }
  std::vector<Quadruple> pending;
  for (const auto& q : quads)
    if (!done.count(quad_key(q)))
      pending.push_back(q);

  std::ofstream rec(in.out, std::ios::app), prog(progress_path, std::ios::app);
  if (!rec || !prog)
    throw ParseError("cannot append to " + in.out);
  std::size_t written = 0;
  const std::size_t batch = 16;
  for (std::size_t start = 0; start < pending.size(); start += batch) {
    const std::vector<Quadruple> chunk(pending.begin() + start,
                                       pending.begin() + std::min(pending.size(), start + batch));
    const auto groups = scan_deficiencies_grouped(chunk, a.threads);
    for (std::size_t g = 0; g < chunk.size(); ++g) {
      for (const auto& r : groups[g])
        if (seen.insert(record_key(r.spec)).second) {
          rec << to_json(r).dump() << '\n';
          ++written;
        }
      rec.flush();
      prog << quad_key(chunk[g]) << '\n';
      prog.flush();
    }
  }
  Json doc{{"schema", kSchema},       {"mode", "scan-ranks"},           {"out", in.out},
           {"quadruples", quads.size()}, {"resumedSkipped", quads.size() - pending.size()},
           {"recordsWritten", written}};
  out << doc.dump(2) << '\n';
  return kExitOk;
}

struct ReduceArgs {
  bool demo = false;
  std::size_t m = 3, n = 3, r = 1;
  std::string blocks;
  unsigned long long seed = 1;
};

/// Random block Toeplitz input with A_1..A_(r-1) = 0 and a unit A_r.
inline BlockToeplitzUT random_reducible(std::size_t m, std::size_t n, std::size_t r, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-3, 3), unit(1, 3), sign(0, 1);
  BlockToeplitzUT z{m, {}};
  for (std::size_t i = 0; i < m; ++i) {
    UTToeplitz a(n);
    if (i == 0 || i >= r)
      for (std::size_t k = 0; k < n; ++k)
        a[k] = coeff(rng);
    if (i == r)
      a[0] = sign(rng) ? unit(rng) : -unit(rng);
    z.blocks.push_back(std::move(a));
  }
  return z;
}

inline BlockToeplitzUT blocks_from_json(const Json& j) {
  if (!j.is_array() || j.empty() || !j.front().is_array() || j.front().empty())
    throw ParseError("--blocks must be a nonempty array of first rows");
  BlockToeplitzUT z{j.size(), {}};
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != j.front().size())
      throw ParseError("--blocks rows must all have the same length");
    std::vector<Rational> c;
    for (const auto& v : row)
      c.push_back(rational_from_json(v));
    z.blocks.emplace_back(std::move(c));
  }
  return z;
}

inline int cmd_reduce(const ReduceArgs& a, const Inputs& in, std::ostream& out) {
  if (a.demo == !a.blocks.empty())
    throw ParseError("reduce needs exactly one of --demo or --blocks");
  if (a.m == 0 || a.n == 0 || a.r == 0)
    throw ParseError("m, n and r must be positive");
  BlockToeplitzUT z;
  Json doc{{"schema", kSchema}, {"mode", "reduce"}};
  if (a.demo) {
    std::mt19937_64 rng(a.seed);
    z = random_reducible(a.m, a.n, a.r, rng);
    doc["seed"] = a.seed;
  } else {
    z = blocks_from_json(parse_json_text(read_text_arg(a.blocks)));
  }
  doc["m"] = z.m;
  doc["n"] = z.block_size();
  doc["r"] = a.r;
  const SimilarityResult res = reduce_shifted(z, a.r);
  doc["Z"] = matrix_rows(res.z);
  doc["X"] = matrix_rows(res.x);
  doc["target"] = matrix_rows(res.target);
  doc["D"] = matrix_rows(res.d);
  doc["W"] = matrix_rows(res.w);
  doc["residual"] = matrix_rows(res.residual());
  doc["residualZero"] = res.residual().is_zero();
  doc["scalingResidualZero"] = res.scaling_residual().is_zero();
  doc["similarityResidualZero"] = res.full_residual().is_zero();
  emit(doc, in, out);
  return kExitOk;
}

} // namespace cli

inline int run_cli(const std::vector<std::string>& args, std::ostream& out = std::cout,
                   std::ostream& err = std::cerr) {
  using namespace cli;
  CLI::App app{"Jordan structure of polynomials in Kronecker products of Jordan matrices"};
  app.require_subcommand(1);
  Inputs in;

  const auto add_problem = [&](CLI::App* s, bool with_p) {
    if (with_p)
      s->add_option("--p", in.p, "bivariate polynomial: rows by x power separated by ';'");
    s->add_option("--f", in.f, "univariate polynomial, coefficients lowest degree first");
    s->add_option("--X", in.x, "Jordan spec JSON or @file");
    s->add_option("--Y", in.y, "Jordan spec JSON or @file");
    s->add_option("--W", in.w, "sets X = Y = W");
    s->add_option("--out", in.out, "write the report to a file");
  };

  auto* predict = app.add_subcommand("predict", "closed-form Jordan structure");
  add_problem(predict, true);
  predict->add_option("--mode", in.mode, "generic or frechet")->check(CLI::IsMember({"generic", "frechet"}));

  auto* oracle = app.add_subcommand("oracle", "brute-force Jordan structure");
  add_problem(oracle, true);
  oracle->add_flag("--raw-kron", in.raw_kron, "use the literal Kronecker-ordered matrix");
  oracle->add_option("--dump", in.dump, "write the matrix to this file");
  oracle->add_option("--cap", in.cap, "largest allowed dimension");

  auto* check = app.add_subcommand("check", "compare predictor and oracle");
  add_problem(check, true);
  check->add_option("--mode", in.mode, "generic or frechet")->check(CLI::IsMember({"generic", "frechet"}));
  check->add_option("--cap", in.cap, "largest allowed dimension");

  auto* frechet = app.add_subcommand("frechet", "Jordan structure of the formal Frechet derivative");
  add_problem(frechet, false);

  std::size_t bm = 0, bn = 0, bd = 0;
  auto* bounds = app.add_subcommand("bounds", "degenerate-pair bounds");
  bounds->add_option("m", bm)->required()->check(CLI::PositiveNumber);
  bounds->add_option("n", bn)->required()->check(CLI::PositiveNumber);
  bounds->add_option("d", bd)->required()->check(CLI::PositiveNumber);
  bounds->add_option("--out", in.out);

  ScanArgs sa;
  auto* scan = app.add_subcommand("scan-ranks", "rank-deficient R_k matrices as JSON lines");
  scan->add_option("--m-max", sa.m_max)->check(CLI::PositiveNumber);
  scan->add_option("--n-max", sa.n_max)->check(CLI::PositiveNumber);
  scan->add_option("--d-max", sa.d_max)->check(CLI::PositiveNumber);
  scan->add_option("--ell-max", sa.ell_max)->check(CLI::PositiveNumber);
  scan->add_option("--threads", sa.threads, "worker threads, 0 = hardware");
  scan->add_option("--out", in.out, "append records here and resume from <out>.progress");

  ReduceArgs ra;
  auto* reduce = app.add_subcommand("reduce", "explicit similarity to I(x)A0 + N^r(x)I");
  reduce->add_flag("--demo", ra.demo, "random instance");
  reduce->add_option("m", ra.m, "block count");
  reduce->add_option("n", ra.n, "block size");
  reduce->add_option("r", ra.r, "shift order");
  reduce->add_option("--blocks", ra.blocks, "first rows of A_0..A_(m-1), JSON or @file");
  reduce->add_option("--seed", ra.seed);
  reduce->add_option("--out", in.out);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*predict)
      return cmd_predict(in, out, in.mode);
    if (*oracle)
      return cmd_oracle(in, out);
    if (*check)
      return cmd_check(in, out);
    if (*frechet)
      return cmd_predict(in, out, "frechet");
    if (*bounds)
      return cmd_bounds(bm, bn, bd, in, out);
    if (*scan)
      return cmd_scan(sa, in, out);
    if (*reduce)
      return cmd_reduce(ra, in, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}

} // namespace jkron
