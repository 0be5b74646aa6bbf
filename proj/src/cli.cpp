#include "qbf/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <functional>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

#include "qbf/beurling.hpp"
#include "qbf/corep.hpp"
#include "qbf/freeqg.hpp"
#include "qbf/qgmatrix.hpp"

namespace qbf::cli {

using ojson = nlohmann::ordered_json;

namespace {

bool is_half_integer(double x) {
  const double t = 2.0 * x;
  return std::isfinite(t) && t == std::round(t) && x >= 0.0;
}

HalfInt half(double x) { return HalfInt::from_twice(static_cast<int>(std::lround(2.0 * x))); }

std::vector<HalfInt> labels_up_to(double top, int from_twice = 0) {
  std::vector<HalfInt> out;
  for (int t2 = from_twice; t2 <= static_cast<int>(std::lround(2.0 * top)); ++t2) out.push_back(HalfInt::from_twice(t2));
  return out;
}

// Runs fn(i) for i in [0, n) on at most `jobs` threads; rethrows the first failure.
template <class Fn>
void parallel_for(std::size_t n, int jobs, Fn&& fn) {
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = next++; i < n; i = next++) fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
        next = n;
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

// Cells fill their own slot; concatenating slots in index order gives canonical output.
struct Cell {
  std::vector<ojson> rows;
  std::vector<std::string> failures;
};

CommandResult collect(std::vector<Cell>& cells) {
  CommandResult res;
  for (auto& c : cells) {
    for (auto& r : c.rows) res.rows.push_back(std::move(r));
    for (auto& f : c.failures) res.messages.push_back(std::move(f));
  }
  if (!res.messages.empty()) res.exit_code = kPropertyFailure;
  return res;
}

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

TwoByTwoOp corrupt(TwoByTwoOp m) {
  m.a(0, 0) += 1e-3;
  return m;
}

ojson relation_row(double q, HalfInt s, const std::string& matrix, const std::string& set, const RelationReport& rep) {
  ojson row;
  row["q"] = q;
  row["s"] = s.value();
  row["matrix"] = matrix;
  row["relations"] = set;
  row["max_residual"] = rep.max_residual;
  row["worst"] = rep.worst();
  row["passed"] = rep.passed;
  return row;
}

}  // namespace

void SweepConfig::validate() const {
  if (q.empty()) throw ConfigError("--q needs at least one value");
  for (double x : q) {
    if (!(x > -1.0 && x < 1.0) || x == 0.0) throw ConfigError("q=" + fmt(x) + " is outside (-1,1)\\{0}");
  }
  if (!is_half_integer(s_max)) throw ConfigError("--s-max must be a nonnegative half-integer");
  if (!is_half_integer(t_max)) throw ConfigError("--t-max must be a nonnegative half-integer");
  if (t_max > 12.0) throw ConfigError("--t-max is capped at 12");
  if (beta.empty()) throw ConfigError("--beta needs at least one value");
  for (double b : beta) {
    if (!(b >= 1.0) || !std::isfinite(b)) throw ConfigError("beta=" + fmt(b) + " must be >= 1");
  }
  try {
    (void)Weight::parse(weight);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("--weight: ") + e.what());
  }
  if (!(tol > 0.0) || !(fusion_tol > 0.0)) throw ConfigError("tolerances must be positive");
  if (format != "json" && format != "csv") throw ConfigError("--format must be json or csv");
  if (jobs < 1) throw ConfigError("--jobs must be positive");
  if (samples < 0) throw ConfigError("--samples must be nonnegative");
}

ojson SweepConfig::to_json() const {
  ojson j;
  j["q"] = q;
  j["s_max"] = s_max;
  j["t_max"] = t_max;
  j["beta"] = beta;
  j["weight"] = weight;
  j["tol"] = tol;
  j["fusion_tol"] = fusion_tol;
  j["samples"] = samples;
  j["input"] = input;
  j["format"] = format;
  return j;
}

CommandResult cmd_check_relations(const SweepConfig& cfg) {
  cfg.validate();
  const auto ss = labels_up_to(cfg.s_max);
  const cplx rho = std::polar(1.0, std::numbers::pi / 3.0);
  std::vector<Cell> cells(cfg.q.size() * ss.size());

  parallel_for(cells.size(), cfg.jobs, [&](std::size_t idx) {
    const double qv = cfg.q[idx / ss.size()];
    const HalfInt s = ss[idx % ss.size()];
    const QParam q(qv);
    Cell& cell = cells[idx];
    const std::string as_name = "A_" + to_string(s);

    TwoByTwoOp as = make_As(q, s);
    if (cfg.inject_corruption) as = corrupt(as);

    auto record = [&](const std::string& matrix, const std::string& set, const RelationReport& rep) {
      cell.rows.push_back(relation_row(qv, s, matrix, set, rep));
      if (!rep.passed) {
        cell.failures.push_back("relation failure: q=" + fmt(qv) + " " + matrix + " " + set + " worst relation '" +
                                rep.worst() + "' residual " + fmt(rep.max_residual));
      }
    };
    record(as_name, "AN_q", check_anq(as, q, cfg.tol));
    record(as_name, "SL_q(2,C)", check_slq2c(as, q, cfg.tol));

    const TwoByTwoOp ac = TwoByTwoOp::character(rho);
    record("char(e^{i pi/3})", "SU_q(2)", check_suq2(ac, q, cfg.tol));

    const std::string composite = "char(e^{i pi/3})*" + as_name;
    try {
      const TwoByTwoOp prod = iwasawa_compose(ac, as, q, cfg.tol);
      record(composite, "SL_q(2,C)", check_slq2c(prod, q, cfg.tol));

      const BlockOpMat cm = inflate_compact(ac, as.dim()).as_blocks();
      const BlockOpMat dm = inflate_solvable(as, 1).as_blocks();
      bool commute = true;
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          for (int k = 0; k < 2; ++k)
            for (int l = 0; l < 2; ++l) commute = commute && check_doubly_commute(cm.block(i, j), dm.block(k, l), cfg.tol);
      ojson row;
      row["q"] = qv;
      row["s"] = s.value();
      row["matrix"] = composite;
      row["relations"] = "doubly-commuting factors";
      row["passed"] = commute;
      cell.rows.push_back(row);
      if (!commute) cell.failures.push_back("factor entries of " + composite + " do not doubly commute");
    } catch (const std::invalid_argument& e) {
      ojson row;
      row["q"] = qv;
      row["s"] = s.value();
      row["matrix"] = composite;
      row["relations"] = "SL_q(2,C)";
      row["worst"] = e.what();
      row["passed"] = false;
      cell.rows.push_back(row);
      cell.failures.push_back("relation failure: q=" + fmt(qv) + " " + composite + ": " + e.what());
    }
  });
  return collect(cells);
}

CommandResult cmd_norm_table(const SweepConfig& cfg) {
  cfg.validate();
  const Weight w = Weight::parse(cfg.weight);
  const auto ss = labels_up_to(cfg.s_max);
  const auto ts = labels_up_to(cfg.t_max);
  std::vector<Cell> cells(cfg.q.size() * ss.size());

  parallel_for(cells.size(), cfg.jobs, [&](std::size_t idx) {
    const double qv = cfg.q[idx / ss.size()];
    const HalfInt s = ss[idx % ss.size()];
    const QParam q(qv);
    const TwoByTwoOp as = make_As(q, s);
    const TwoByTwoOp fundamental = make_As(q, HalfInt::from_twice(1));
    Cell& cell = cells[idx];
    for (HalfInt t : ts) {
      const double norm = rep_norm(as, q, t);
      const double lower = std::pow(q.abs(), -2.0 * s.value() * t.value());
      const double upper = std::pow(rep_norm(fundamental, q, t), s.twice());
      const double slack = 1e-9 * std::max(1.0, upper);
      const bool ok = lower - slack <= norm && norm <= upper + slack;
      ojson row;
      row["q"] = qv;
      row["s"] = s.value();
      row["t"] = t.value();
      row["norm"] = norm;
      row["lower_bound"] = lower;
      row["ratio_upper"] = upper;
      row["weighted"] = norm / w(t);
      row["sandwich_ok"] = ok;
      cell.rows.push_back(row);
      if (!ok) {
        cell.failures.push_back("sandwich violated at q=" + fmt(qv) + " s=" + to_string(s) + " t=" + to_string(t));
      }
    }
  });
  return collect(cells);
}

CommandResult cmd_boundedness(const SweepConfig& cfg) {
  cfg.validate();
  const auto ss = labels_up_to(cfg.s_max);
  const HalfInt t_max = half(cfg.t_max);
  std::vector<Cell> cells(cfg.q.size() * ss.size() * cfg.beta.size());

  parallel_for(cells.size(), cfg.jobs, [&](std::size_t idx) {
    const std::size_t per_q = ss.size() * cfg.beta.size();
    const double qv = cfg.q[idx / per_q];
    const HalfInt s = ss[(idx % per_q) / cfg.beta.size()];
    const double beta = cfg.beta[idx % cfg.beta.size()];
    const QParam q(qv);

    const bool bounded = classify_boundedness(q, s, beta);
    const CbEstimate est = cb_norm_estimate(make_As(q, s), q, Weight::exponential(beta), t_max);
    const double threshold = std::pow(q.abs(), -s.value());
    std::string agree;
    if (std::abs(threshold - beta) <= 1e-3 * beta) {
      agree = "inconclusive";
    } else {
      agree = (bounded == (est.trend == Trend::saturating)) ? "yes" : "no";
    }

    ojson row;
    row["q"] = qv;
    row["s"] = s.value();
    row["beta"] = beta;
    row["threshold"] = threshold;
    row["closed_form"] = bounded ? "bounded" : "unbounded";
    row["numeric_trend"] = to_string(est.trend);
    row["agree"] = agree;
    row["sup"] = est.sup_value;
    row["argmax_t"] = est.argmax.value();
    cells[idx].rows.push_back(row);
    if (agree == "no") {
      cells[idx].failures.push_back("verdict disagreement at q=" + fmt(qv) + " s=" + to_string(s) + " beta=" + fmt(beta));
    }
  });
  return collect(cells);
}

namespace {

cplx parse_complex(const nlohmann::json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) return {j[0].get<double>(), j[1].get<double>()};
  throw ConfigError("expected a number or [re, im], got " + j.dump());
}

CMat parse_matrix(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) throw ConfigError("expected a nonempty matrix (array of rows)");
  const auto n = static_cast<Eigen::Index>(j.size());
  CMat m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) throw ConfigError("matrix must be square");
    for (Eigen::Index k = 0; k < n; ++k) m(i, k) = parse_complex(row[static_cast<std::size_t>(k)]);
  }
  return m;
}

struct Candidate {
  CMat v;
  CMat f;  // empty: identity
  F2Word word;
  cplx rho;
  std::string note;
};

std::vector<Candidate> read_candidates(const std::string& path, const std::string& kind) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open input file '" + path + "'");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("input file '" + path + "': " + e.what());
  }
  const nlohmann::json& list = doc.is_object() && doc.contains("candidates") ? doc["candidates"] : doc;
  if (!list.is_array()) throw ConfigError("input must be an array of candidates or {\"candidates\": [...]}");
  std::vector<Candidate> out;
  for (const auto& item : list) {
    if (!item.is_object()) throw ConfigError("each candidate must be an object");
    Candidate c;
    if (kind == "suq2") {
      if (!item.contains("rho")) throw ConfigError("suq2 candidates need \"rho\"");
      c.rho = parse_complex(item["rho"]);
    } else {
      if (!item.contains("V")) throw ConfigError(kind + " candidates need \"V\"");
      c.v = parse_matrix(item["V"]);
      if (item.contains("F")) c.f = parse_matrix(item["F"]);
      if (item.contains("word")) {
        if (!item["word"].is_string()) throw ConfigError("\"word\" must be a string such as \"g1g2\"");
        try {
          c.word = F2Word::parse(item["word"].get<std::string>());
        } catch (const std::invalid_argument& e) {
          throw ConfigError(e.what());
        }
      }
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Candidate> sample_candidates(const std::string& kind, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto uniform = [&](double lo, double hi) { return lo + (hi - lo) * unit(rng); };
  std::vector<Candidate> out;
  const cplx i1(0.0, 1.0);

  if (kind == "ofplus") {
    Candidate id;
    id.v = CMat::Identity(2, 2);
    id.note = "theta=0";
    out.push_back(id);
    for (int k = 0; k < count; ++k) {
      const double th = uniform(-2.0, 2.0);
      Candidate c;
      c.v.resize(2, 2);
      c.v << std::cosh(th), i1 * std::sinh(th), -i1 * std::sinh(th), std::cosh(th);
      c.note = "theta=" + fmt(th);
      out.push_back(std::move(c));
    }
  } else if (kind == "ufplus") {
    for (int k = 0; k < count; ++k) {
      Candidate c;
      c.v = CMat::Zero(2, 2);
      for (int d = 0; d < 2; ++d) c.v(d, d) = std::polar(std::exp(uniform(-1.5, 1.5)), uniform(0.0, 2.0 * std::numbers::pi));
      std::vector<int> letters(static_cast<std::size_t>(rng() % 6));
      for (int& l : letters) l = 1 + static_cast<int>(rng() % 2);
      c.word = F2Word(letters);
      out.push_back(std::move(c));
    }
  } else if (kind == "snplus") {
    std::vector<int> perm = {0, 1, 2, 3};
    do {
      Candidate c;
      c.v = CMat::Zero(4, 4);
      for (int r = 0; r < 4; ++r) c.v(r, perm[r]) = 1.0;
      c.note = "permutation";
      out.push_back(std::move(c));
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (int k = 0; k < count; ++k) {
      Candidate c = out[rng() % 24];
      c.v(static_cast<Eigen::Index>(rng() % 4), static_cast<Eigen::Index>(rng() % 4)) += uniform(0.01, 0.5);
      c.note = "perturbed";
      out.push_back(std::move(c));
    }
  } else {
    for (int k = 0; k < count; ++k) {
      Candidate c;
      c.rho = std::polar(std::exp(uniform(-std::log(4.0), std::log(4.0))), uniform(-std::numbers::pi, std::numbers::pi));
      out.push_back(std::move(c));
    }
  }
  return out;
}

}  // namespace

CommandResult cmd_char_spec(const SweepConfig& cfg, const std::string& kind) {
  cfg.validate();
  if (kind != "ofplus" && kind != "ufplus" && kind != "snplus" && kind != "suq2") {
    throw ConfigError("unknown char-spec kind '" + kind + "'");
  }
  const std::vector<Candidate> cands =
      cfg.input.empty() ? sample_candidates(kind, cfg.samples, cfg.seed) : read_candidates(cfg.input, kind);

  // F matrices are validated up front so malformed input is a usage error, not a worker failure.
  std::vector<FMatrix> fs;
  if (kind == "ofplus" || kind == "ufplus") {
    const auto flavor = kind == "ofplus" ? FMatrix::Flavor::orthogonal : FMatrix::Flavor::unitary;
    for (const auto& c : cands) {
      const CMat f = c.f.size() ? c.f : CMat(CMat::Identity(c.v.rows(), c.v.rows()));
      if (f.rows() != c.v.rows()) throw ConfigError("F and V sizes differ");
      try {
        fs.emplace_back(f, flavor, cfg.tol);
      } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
      }
    }
  }
  if (kind == "suq2") {
    for (const auto& c : cands)
      if (c.rho == cplx(0.0, 0.0)) throw ConfigError("rho = 0 is not a character parameter");
  }

  std::vector<Cell> cells(cands.size());
  parallel_for(cells.size(), cfg.jobs, [&](std::size_t idx) {
    const Candidate& c = cands[idx];
    Cell& cell = cells[idx];
    if (kind == "snplus") {
      ojson row;
      row["index"] = idx;
      row["note"] = c.note;
      row["accepted"] = snplus_char_check(c.v, 1e-9);
      cell.rows.push_back(row);
      return;
    }
    for (double beta : cfg.beta) {
      ojson row;
      row["index"] = idx;
      row["beta"] = beta;
      if (kind == "suq2") {
        row["rho_re"] = c.rho.real();
        row["rho_im"] = c.rho.imag();
        row["abs_rho"] = std::abs(c.rho);
        row["in_spec"] = suq2_char_in_spec(c.rho, beta);
      } else if (kind == "ofplus") {
        row["note"] = c.note;
        const bool relations = ofplus_char_check(c.v, fs[idx], cfg.tol);
        row["relations_ok"] = relations;
        row["norm_v"] = op_norm(c.v);
        row["rep_norm_1"] = ofplus_rep_norm(c.v, HalfInt::from_twice(2));
        try {
          row["in_spec"] = ofplus_in_spec(c.v, fs[idx], beta, cfg.tol);
        } catch (const std::logic_error& e) {
          row["in_spec"] = false;
          cell.failures.push_back("candidate " + std::to_string(idx) + ": " + e.what());
        }
      } else {
        const bool relations = ufplus_char_check(c.v, fs[idx], cfg.tol);
        row["relations_ok"] = relations;
        row["word"] = c.word.str();
        row["norm_v"] = op_norm(c.v);
        row["norm_v_inv"] = relations ? op_norm(c.v.inverse()) : 0.0;
        row["rep_norm_word"] = relations ? ufplus_rep_norm(c.v, c.word) : 0.0;
        row["in_spec"] = ufplus_in_spec(c.v, fs[idx], beta, cfg.tol);
      }
      cell.rows.push_back(row);
    }
  });
  return collect(cells);
}

CommandResult cmd_fusion_verify(const SweepConfig& cfg) {
  cfg.validate();
  const auto ts = labels_up_to(cfg.s_max);
  const auto decomp_ss = labels_up_to(cfg.s_max, 1);

  struct Named {
    std::string name;
    std::function<TwoByTwoOp(const QParam&)> make;
  };
  const std::vector<Named> mats = {
      {"char(0.5)", [](const QParam&) { return TwoByTwoOp::character(0.5); }},
      {"char(2)", [](const QParam&) { return TwoByTwoOp::character(2.0); }},
      {"char(e^{i pi/3})", [](const QParam&) { return TwoByTwoOp::character(std::polar(1.0, std::numbers::pi / 3.0)); }},
      {"A_1/2", [](const QParam& q) { return make_As(q, HalfInt::from_twice(1)); }},
      {"A_1", [](const QParam& q) { return make_As(q, HalfInt::from_twice(2)); }},
  };

  const std::size_t fusion_per_q = mats.size() * ts.size() * ts.size();
  const std::size_t per_q = fusion_per_q + decomp_ss.size();
  std::vector<Cell> cells(cfg.q.size() * per_q);

  parallel_for(cells.size(), cfg.jobs, [&](std::size_t idx) {
    const double qv = cfg.q[idx / per_q];
    const std::size_t k = idx % per_q;
    const QParam q(qv);
    Cell& cell = cells[idx];
    ojson row;
    row["q"] = qv;

    if (k < fusion_per_q) {
      const Named& m = mats[k / (ts.size() * ts.size())];
      const HalfInt t1 = ts[(k / ts.size()) % ts.size()];
      const HalfInt t2 = ts[k % ts.size()];
      const FusionReport rep = verify_fusion(m.make(q), q, t1, t2, cfg.fusion_tol);
      std::string summands;
      for (auto it = rep.summands.rbegin(); it != rep.summands.rend(); ++it) {
        summands += (summands.empty() ? "" : ",") + to_string(*it);
      }
      row["section"] = "fusion";
      row["matrix"] = m.name;
      row["t1"] = t1.value();
      row["t2"] = t2.value();
      row["blocks"] = summands;
      row["residual"] = rep.residual;
      row["passed"] = rep.passed;
      if (!rep.passed) {
        cell.failures.push_back("fusion failed: q=" + fmt(qv) + " " + m.name + " t1=" + to_string(t1) +
                                " t2=" + to_string(t2) + " residual " + fmt(rep.residual));
      }
    } else {
      const HalfInt s = decomp_ss[k - fusion_per_q];
      const std::string name = "A_1/2 bot A_" + to_string(s);
      row["section"] = "decompose";
      row["matrix"] = name;
      row["s"] = s.value();
      try {
        const AnqDecomposition dec = decompose_anq(anq_bot(make_As(q, HalfInt::from_twice(1)), make_As(q, s)), q, cfg.fusion_tol);
        std::string blocks;
        for (const auto& [label, mult] : dec.blocks) {
          for (int r = 0; r < mult; ++r) blocks += (blocks.empty() ? "" : ",") + to_string(label);
        }
        const bool ok = dec.residual <= cfg.fusion_tol;
        row["blocks"] = blocks;
        row["residual"] = dec.residual;
        row["passed"] = ok;
        if (!ok) cell.failures.push_back("decomposition residual too large for " + name);
      } catch (const std::exception& e) {
        row["blocks"] = std::string("error: ") + e.what();
        row["passed"] = false;
        cell.failures.push_back("decomposition failed for " + name + ": " + e.what());
      }
    }
    cell.rows.push_back(row);
  });
  return collect(cells);
}

namespace {

std::string csv_cell(const ojson& v) {
  if (v.is_null()) return "";
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number_unsigned()) return std::to_string(v.get<unsigned long long>());
  if (v.is_number_float()) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v.get<double>());
    return buf;
  }
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") != std::string::npos) {
    std::string quoted = "\"";
    for (char ch : s) {
      if (ch == '"') quoted += '"';
      quoted += ch;
    }
    return quoted + "\"";
  }
  return s;
}

}  // namespace

std::string render(const SweepConfig& cfg, const std::string& command, const CommandResult& result) {
  if (cfg.format == "csv") {
    std::vector<std::string> header;
    for (const auto& row : result.rows)
      for (const auto& item : row.items())
        if (std::find(header.begin(), header.end(), item.key()) == header.end()) header.push_back(item.key());
    std::ostringstream os;
    for (std::size_t k = 0; k < header.size(); ++k) os << (k ? "," : "") << header[k];
    os << '\n';
    for (const auto& row : result.rows) {
      for (std::size_t k = 0; k < header.size(); ++k) {
        os << (k ? "," : "");
        if (row.contains(header[k])) os << csv_cell(row[header[k]]);
      }
      os << '\n';
    }
    return os.str();
  }
  ojson doc;
  doc["meta"]["command"] = command;
  doc["meta"]["config"] = cfg.to_json();
  doc["meta"]["seed"] = cfg.seed;
  doc["meta"]["version"] = kVersion;
  doc["rows"] = result.rows;
  return doc.dump(2) + "\n";
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  SweepConfig cfg;
  std::string kind;

  CLI::App app{"Numerical checks for SU_q(2) and SL_q(2,C) representations", "qbf"};
  app.set_version_flag("--version", kVersion);
  app.set_config("--config", "", "Flat key=value file mirroring the long flags; flags given on the command line win");
  app.require_subcommand(1);
  app.fallthrough();

  app.add_option("--q", cfg.q, "Deformation parameters, comma separated")->delimiter(',');
  app.add_option("--s-max", cfg.s_max, "Largest label s (half-integer)");
  app.add_option("--t-max", cfg.t_max, "Largest corepresentation label t (half-integer, at most 12)");
  app.add_option("--beta", cfg.beta, "Weight bases beta >= 1, comma separated")->delimiter(',');
  app.add_option("--weight", cfg.weight, "poly:ALPHA or exp:BETA (norm-table)");
  app.add_option("--tol", cfg.tol, "Relation tolerance");
  app.add_option("--fusion-tol", cfg.fusion_tol, "Intertwiner residual tolerance");
  app.add_option("--seed", cfg.seed, "Sampler seed");
  app.add_option("--format", cfg.format, "json or csv");
  app.add_option("--out", cfg.out, "Output path (default stdout)");
  app.add_option("--jobs", cfg.jobs, "Worker threads");
  app.add_option("--input", cfg.input, "JSON candidate file for char-spec");
  app.add_option("--samples", cfg.samples, "Sampler size for char-spec");
  app.add_flag("--inject-corruption", cfg.inject_corruption, "Perturb generated matrices")->group("");

  auto* check = app.add_subcommand("check-relations", "Relation residuals of A_s and Iwasawa products");
  auto* norms = app.add_subcommand("norm-table", "||v^(t)|| of A_s with its lower and upper bounds");
  auto* bounded = app.add_subcommand("boundedness", "Closed-form boundedness verdicts against the numeric trend");
  auto* chars = app.add_subcommand("char-spec", "Character membership verdicts");
  chars->add_option("kind", kind, "ofplus, ufplus, snplus or suq2")
      ->required()
      ->check(CLI::IsMember({"ofplus", "ufplus", "snplus", "suq2"}));
  auto* fusion = app.add_subcommand("fusion-verify", "Fusion intertwiners and AN_q decompositions");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  std::string command;
  CommandResult result;
  try {
    if (check->parsed()) {
      command = "check-relations";
      result = cmd_check_relations(cfg);
    } else if (norms->parsed()) {
      command = "norm-table";
      result = cmd_norm_table(cfg);
    } else if (bounded->parsed()) {
      command = "boundedness";
      result = cmd_boundedness(cfg);
    } else if (chars->parsed()) {
      command = "char-spec " + kind;
      result = cmd_char_spec(cfg, kind);
    } else if (fusion->parsed()) {
      command = "fusion-verify";
      result = cmd_fusion_verify(cfg);
    }
  } catch (const ConfigError& e) {
    err << "qbf: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "qbf: internal error: " << e.what() << '\n';
    return kPropertyFailure;
  }

  const std::string text = render(cfg, command, result);
  if (cfg.out.empty()) {
    out << text;
  } else {
    std::ofstream file(cfg.out, std::ios::binary);
    if (!file || !(file << text)) {
      err << "qbf: cannot write '" << cfg.out << "'\n";
      return kUsageError;
    }
  }
  for (const auto& m : result.messages) err << "qbf: " << m << '\n';
  return result.exit_code;
}

}  // namespace qbf::cli
