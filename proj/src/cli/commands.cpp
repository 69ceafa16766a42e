#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdlib>
#include <deque>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "derivcalc/cli.hpp"
#include "derivcalc/errors.hpp"
#include "derivcalc/fixtures.hpp"
#include "derivcalc/genpoly.hpp"
#include "derivcalc/leibniz.hpp"
#include "derivcalc/parser.hpp"
#include "derivcalc/reconstruct.hpp"
#include "derivcalc/sampling.hpp"

namespace derivcalc {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

// Bad command input that is not a syntax error in an expression.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// --- output ------------------------------------------------------------------

std::string render_inline(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_null()) return "none";
  if (v.is_array()) {
    std::string s;
    for (const auto& e : v) s += (s.empty() ? "" : "; ") + render_inline(e);
    return s;
  }
  if (v.is_object()) {
    std::string s;
    for (const auto& [key, e] : v.items()) s += (s.empty() ? "" : ", ") + key + ": " + render_inline(e);
    return s;
  }
  return v.dump();
}

// "key: value" lines; nested objects are indented, arrays of objects become
// one "- ..." line per element.
void render_text(const Json& report, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& [key, v] : report.items()) {
    if (v.is_object()) {
      out << pad << key << ":\n";
      render_text(v, out, indent + 2);
    } else if (v.is_array() && !v.empty() && v.front().is_object()) {
      out << pad << key << ":\n";
      for (const auto& e : v) out << pad << "  - " << render_inline(e) << '\n';
    } else {
      out << pad << key << ": " << render_inline(v) << '\n';
    }
  }
}

struct Context {
  std::ostream& out;
  std::ostream& err;
  bool json = false;
  std::uint64_t seed = kDefaultSeed;

  int emit(const Json& report, int code) const {
    if (json) {
      out << report.dump(2) << '\n';
    } else {
      render_text(report, out, 0);
    }
    return code;
  }
};

Json exprs(const std::vector<RatFunc>& xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(x.to_string());
  return a;
}

std::string index_key(const MultiIndex& i) {
  std::string s;
  for (std::size_t m = 0; m < i.arity(); ++m) s += (m ? "," : "") + std::to_string(i[m]);
  return s;
}

// --- input -------------------------------------------------------------------

// "-" reads stdin, "@path" reads a file, anything else is the payload itself.
std::string read_payload(const std::string& arg) {
  if (arg == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  if (!arg.empty() && arg.front() == '@') {
    std::ifstream f(arg.substr(1));
    if (!f) throw UsageError("cannot read " + arg.substr(1));
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
  }
  return arg;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(std::string("invalid JSON: ") + e.what());
  }
}

std::string json_string(const Json& v, const std::string& what) {
  if (!v.is_string()) throw UsageError(what + " must be a string");
  return v.get<std::string>();
}

MapTable parse_table(const std::string& text, std::size_t k) {
  const Json j = parse_json(text);
  if (!j.is_object()) throw UsageError("table must be a JSON object");
  MapTable table(k);
  for (const auto& [key, v] : j.items()) {
    RatFunc x = parse_expr(key, k);
    RatFunc y = parse_expr(json_string(v, "table value"), k);
    try {
      table.add(std::move(x), std::move(y));
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
  }
  return table;
}

GridValues parse_grid(const std::string& text) {
  const Json j = parse_json(text);
  if (!j.is_object() || !j.contains("k") || !j.contains("n") || !j.contains("values")) {
    throw UsageError("grid must be an object with \"k\", \"n\" and \"values\"");
  }
  if (!j["k"].is_number_unsigned() || !j["n"].is_number_unsigned() || j["k"].get<std::size_t>() == 0) {
    throw UsageError("grid \"k\" and \"n\" must be nonnegative integers with k >= 1");
  }
  if (!j["values"].is_object()) throw UsageError("grid \"values\" must be an object");
  GridValues grid;
  grid.nvars = j["k"].get<std::size_t>();
  grid.n = j["n"].get<unsigned>();
  for (const auto& [key, v] : j["values"].items()) {
    std::vector<MultiIndex::value_type> idx;
    std::stringstream ss(key);
    std::string part;
    while (std::getline(ss, part, ',')) {
      try {
        std::size_t used = 0;
        const unsigned long value = std::stoul(part, &used);
        if (used != part.size() || value > grid.n) throw std::invalid_argument(part);
        idx.push_back(static_cast<MultiIndex::value_type>(value));
      } catch (const std::exception&) {
        throw UsageError("bad grid index \"" + key + "\"");
      }
    }
    if (idx.size() != grid.nvars) throw UsageError("grid index \"" + key + "\" needs k entries");
    grid.values[MultiIndex(std::move(idx))] = parse_expr(json_string(v, "grid value"), grid.nvars);
  }
  try {
    grid.require_complete();
  } catch (const PreconditionError& e) {
    throw UsageError(e.what());
  }
  return grid;
}

std::vector<Derivation> parse_derivation_chain(const std::string& text, std::size_t k) {
  const OpWord w = parse_word(text, k);
  if (w.terms.size() != 1 || !w.terms.front().coefficient.is_one()) {
    throw UsageError("expected a single composition d1 o d2 o ... without coefficient");
  }
  return w.terms.front().word;
}

// One of --op, --deriv or --word.
struct OperatorArgs {
  std::string op;
  std::string deriv;
  std::string word;

  void add_to(CLI::App* cmd) {
    auto* o = cmd->add_option("--op", op, "operator literal, e.g. \"t1 * d[2] + d[1]\"");
    auto* d = cmd->add_option("--deriv", deriv, "derivation literal, e.g. \"t1 -> 1; t2 -> t1\"");
    auto* w = cmd->add_option("--word", word, "composition word, e.g. \"(t1 -> 1) o (t1 -> t1)\"");
    o->excludes(d)->excludes(w);
    d->excludes(w);
    opts_ = {o, d, w};
  }

  void require() const {
    for (auto* o : opts_) {
      if (o->count() > 0) return;
    }
    throw UsageError("one of --op, --deriv or --word is required");
  }

  DiffOp resolve(std::size_t k) const {
    require();
    if (opts_[0]->count()) return parse_diffop(op, k);
    if (opts_[1]->count()) return DiffOp::from_derivation(parse_derivation(deriv, k));
    return normalize(parse_word(word, k));
  }

  RatFunc apply(std::size_t k, const RatFunc& f) const {
    require();
    if (opts_[0]->count()) return apply_diffop(parse_diffop(op, k), f);
    if (opts_[1]->count()) return apply_derivation(parse_derivation(deriv, k), f);
    return apply_word(parse_word(word, k), f);
  }

 private:
  std::vector<CLI::Option*> opts_;
};

CLI::Option* add_k(CLI::App* cmd, std::size_t& k, bool required = true) {
  auto* o = cmd->add_option("--k", k, "number of variables t1..tk")->check(CLI::PositiveNumber);
  if (required) o->required();
  return o;
}

Json operator_report(const DiffOp& e) {
  Json r;
  r["operator"] = e.to_string();
  r["degree"] = degree(e);
  return r;
}

Json outcome_report(const CheckOutcome& c) {
  Json r;
  r["status"] = c.passed ? "pass" : "fail";
  if (!c.passed) {
    r["reason"] = c.reason;
    r["witness"] = exprs(c.witness);
    if (c.value) r["value"] = c.value->to_string();
  }
  return r;
}

std::vector<RatFunc> sample_polynomials(std::size_t k, std::size_t count, std::uint64_t seed) {
  Sampler s(seed);
  std::vector<RatFunc> out;
  for (std::size_t i = 0; i < count; ++i) out.emplace_back(s.nonzero_polynomial(k, 2));
  return out;
}

// --- commands ------------------------------------------------------------------

struct Commands {
  explicit Commands(Context& c) : ctx(c) {}

  Context& ctx;
  std::function<int()> action;

  // Shared option storage; each subcommand uses the fields it needs.
  std::size_t k = 1;
  std::deque<OperatorArgs> operator_args;  // one per subcommand, stable addresses
  std::string expr_a;
  std::string expr_b;
  std::string list_a;
  std::string list_b;
  std::string payload;
  int level = 0;
  std::size_t count = 3;
  bool flag = false;
  unsigned small_a = 0;
  unsigned small_b = 0;
  unsigned char2_degree = 4;
  unsigned char2_k = 8;
  unsigned pair_exponent = 6;
  std::string derivs = "(t1 -> 1) o (t1 -> 1)";
  int tuples = 5;

  void install(CLI::App& app) {
    apply_cmd(app);
    normalize_cmd(app);
    compose_cmd(app);
    order_cmd(app);
    defect_cmd(app);
    gpdeg_cmd(app);
    expoly_cmd(app);
    reconstruct_cmd(app);
    fit_cmd(app);
    recurrence_cmd(app);
    demo_cmd(app);
  }

  void apply_cmd(CLI::App& app) {
    auto* c = app.add_subcommand("apply", "apply an operator, derivation or word to an expression");
    add_k(c, k);
    OperatorArgs* ops = &operator_args.emplace_back();
    ops->add_to(c);
    c->add_option("--f", expr_a, "expression to act on")->required();
    c->callback([this, ops] {
      action = [this, ops] {
        Json r;
        r["result"] = ops->apply(k, parse_expr(expr_a, k)).to_string();
        return ctx.emit(r, kOk);
      };
    });
  }

  void normalize_cmd(CLI::App& app) {
    auto* c = app.add_subcommand("normalize", "rewrite a composition word in canonical form");
    add_k(c, k);
    c->add_option("--word", expr_a, "composition word")->required();
    c->callback([this] {
      action = [this] { return ctx.emit(operator_report(normalize(parse_word(expr_a, k))), kOk); };
    });
  }

  void compose_cmd(CLI::App& app) {
    auto* c = app.add_subcommand("compose", "canonical form of left o right");
    add_k(c, k);
    c->add_option("--left", expr_a, "operator applied second")->required();
    c->add_option("--right", expr_b, "operator applied first")->required();
    c->callback([this] {
      action = [this] {
        return ctx.emit(operator_report(compose(parse_diffop(expr_a, k), parse_diffop(expr_b, k))), kOk);
      };
    });
  }

  void order_cmd(CLI::App& app) {
    auto* c = app.add_subcommand("order", "exact order of an operator, or a sampled upper-bound check");
    add_k(c, k);
    OperatorArgs* ops = &operator_args.emplace_back();
    ops->add_to(c);
    auto* upper = c->add_option("--upper", level, "check order <= N on samples instead")->check(CLI::NonNegativeNumber);
    c->add_option("--samples", list_a, "sample elements separated by ';'");
    c->add_option("--sample-count", count, "number of seeded samples when --samples is absent")
        ->check(CLI::PositiveNumber);
    c->callback([this, ops, upper] {
      action = [this, ops, upper] {
        const DiffOp e = ops->resolve(k);
        if (upper->count()) {
          const auto samples = list_a.empty() ? sample_polynomials(k, count, ctx.seed) : parse_expr_list(list_a, k);
          const CheckOutcome res = order_upper_check(PointMap::from_diffop(e), level, samples);
          Json r;
          r["bound"] = level;
          r.update(outcome_report(res));
          return ctx.emit(r, res.passed ? kOk : kFailed);
        }
        Json r;
        try {
          const ExactOrder o = order_exact(e);
          r["order"] = o.order;
          r["zero-map"] = o.zero_map;
          return ctx.emit(r, kOk);
        } catch (const DomainError& ex) {
          r["status"] = "not-in-O0";
          r["reason"] = ex.what();
          r["value-at-1"] = apply_diffop(e, RatFunc::one(k)).to_string();
          return ctx.emit(r, kFailed);
        }
      };
    });
  }

  void defect_cmd(CLI::App& app) {
    auto* c = app.add_subcommand("defect", "nested Leibniz defect of an operator");
    add_k(c, k);
    OperatorArgs* ops = &operator_args.emplace_back();
    ops->add_to(c);
    c->add_option("--x", expr_a, "base point")->required();
    c->add_option("--y", list_a, "y1; y2; ... (one y gives D(xy) - D(x)y - D(y)x)")->required();
    c->callback([this, ops] {
      action = [this, ops] {
        const PointMap d = PointMap::from_diffop(ops->resolve(k));
        const auto ys = parse_expr_list(list_a, k);
        Json r;
        r["defect"] = nested_defect(d, parse_expr(expr_a, k), ys).to_string();
        return ctx.emit(r, kOk);
      };
    });
  }

  void gpdeg_cmd(CLI::App& app) {
    auto* c = app.add_subcommand("gpdeg", "check that x -> E(x)/x is a generalized polynomial of degree <= N");
    add_k(c, k);
    OperatorArgs* ops = &operator_args.emplace_back();
    ops->add_to(c);
    c->add_option("--n", level, "degree bound")->required()->check(CLI::Range(-1, 64));
    c->add_option("--increments", list_a, "increments g separated by ';'");
    c->add_option("--points", list_b, "base points separated by ';'");
    c->add_option("--sample-count", count, "number of seeded increments when --increments is absent")
        ->check(CLI::PositiveNumber);
    c->callback([this, ops] {
      action = [this, ops] {
        const SemigroupMap f = SemigroupMap::over_identity(ops->resolve(k));
        const auto gs = list_a.empty() ? default_gp_samples(k, count, ctx.seed) : parse_expr_list(list_a, k);
        const auto xs = list_b.empty() ? default_gp_samples(k, 2, ctx.seed + 1) : parse_expr_list(list_b, k);
        const CheckOutcome res = gp_degree_check(f, level, gs, xs);
        Json r;
        r["level"] = level;
        r.update(outcome_report(res));
        return ctx.emit(r, res.passed ? kOk : kFailed);
      };
    });
  }

  void expoly_cmd(CLI::App& app) {
    auto* c = app.add_subcommand("expoly", "exponent polynomial p(i) = E(t^i) / t^i");
    add_k(c, k);
    OperatorArgs* ops = &operator_args.emplace_back();
    ops->add_to(c);
    c->callback([this, ops] {
      action = [this, ops] {
        const ExpPoly p = exponent_polynomial(ops->resolve(k));
        Json r;
        r["exponent-polynomial"] = p.to_string();
        r["degree"] = expoly_degree(p);
        return ctx.emit(r, kOk);
      };
    });
  }

  void reconstruct_cmd(CLI::App& app) {
    auto* c = app.add_subcommand("reconstruct", "rebuild an operator from its values on a monomial grid");
    c->add_option("--grid", payload, "GridValues JSON, @file, or - for stdin")->required();
    c->callback([this] {
      action = [this] {
        const GridValues grid = parse_grid(read_payload(payload));
        try {
          return ctx.emit(operator_report(reconstruct_operator(grid)), kOk);
        } catch (const DegreeOverflow& e) {
          Json r;
          r["status"] = "overflow";
          r["index"] = index_key(e.index());
          r["reason"] = e.what();
          return ctx.emit(r, kFailed);
        }
      };
    });
  }

  void fit_cmd(CLI::App& app) {
    auto* c = app.add_subcommand("fit", "fit an operator of degree <= N to a table of values");
    add_k(c, k);
    c->add_option("--n", small_a, "degree bound")->required();
    c->add_flag("--require-o0", flag, "exclude the identity term");
    c->add_option("--table", payload, "MapTable JSON, @file, or - for stdin")->required();
    c->callback([this] {
      action = [this] {
        const MapTable table = parse_table(read_payload(payload), k);
        const FitResult fit = fit_operator(table, small_a, flag);
        Json r;
        if (!fit.feasible()) {
          r["status"] = "infeasible";
          if (fit.inconsistent_row) {
            r["inconsistent-row"] = *fit.inconsistent_row;
            r["argument"] = table.entries()[*fit.inconsistent_row].first.to_string();
          }
          return ctx.emit(r, kFailed);
        }
        r["status"] = "feasible";
        r.update(operator_report(*fit.op));
        r["solution-dim"] = fit.solution_dim;
        return ctx.emit(r, kOk);
      };
    });
  }

  void recurrence_cmd(CLI::App& app) {
    auto* c = app.add_subcommand("recurrence", "check c_N a_n + ... + c_0 a_(n-N) = 0 along a sequence");
    add_k(c, k, false);
    c->add_option("--coeffs", list_a, "c_0; c_1; ...; c_N")->required();
    c->add_option("--seq", list_b, "a_0; a_1; ...")->required();
    c->callback([this] {
      action = [this] {
        RecurrenceSpec spec{parse_expr_list(list_a, k), parse_expr_list(list_b, k)};
        const RecurrenceOutcome res = check_recurrence(spec);
        Json r;
        r["status"] = res.passed ? "pass" : "fail";
        if (res.first_failure) r["first-failure"] = *res.first_failure;
        return ctx.emit(r, res.passed ? kOk : kFailed);
      };
    });
  }

  void demo_cmd(CLI::App& app) {
    auto* demo = app.add_subcommand("demo", "worked counterexamples and the exact-order demo");
    demo->require_subcommand(1);
    demo->fallthrough();

    auto* c2 = demo->add_subcommand("char2", "an order-2 map over GF(2)[x] that is not a derivation");
    c2->add_option("--max-degree", char2_degree, "exhaustive input degree bound")->capture_default_str();
    c2->add_option("--max-k", char2_k, "largest power checked for compositions")->capture_default_str();
    c2->callback([this] { action = [this] { return char2(); }; });

    auto* pr = demo->add_subcommand("product-ring", "two nonzero derivations of Q[x] x Q[x] with zero composition");
    pr->add_option("--max-exponent", pair_exponent, "monomial exponent bound")->capture_default_str();
    pr->callback([this] { action = [this] { return product_ring(); }; });

    auto* co = demo->add_subcommand("theorem2", "exact order of a composition of n derivations");
    co->alias("composition-order");
    add_k(co, k, false);
    co->add_option("--derivs", derivs, "composition d1 o ... o dn")->capture_default_str();
    co->add_option("--tuples", tuples, "sampled tuples for the top-level vanishing check")->capture_default_str();
    co->callback([this] { action = [this] { return composition_order(); }; });
  }

  int char2() {
    const Char2Report rep = char2_order_check(char2_degree);
    std::size_t cases = 0;
    bool identity = true;
    bool derivations = true;
    const auto quadratics = GF2Poly::all_up_to(2);
    for (const auto& d1x : quadratics) {
      for (const auto& d2x : quadratics) {
        const Char2ComposeReport cr = char2_compose_check(d1x, d2x, char2_k);
        ++cases;
        identity = identity && cr.identity_holds;
        derivations = derivations && cr.composition_is_derivation;
      }
    }
    Json r;
    r["D(x)"] = rep.d_of_x.to_string();
    r["D(x^2)"] = rep.d_of_x2.to_string();
    r["max-degree"] = rep.max_degree;
    r["additive"] = rep.additive;
    r["two-fold-defect-vanishes"] = rep.two_fold_vanishes;
    if (rep.derivation_witness) {
      r["derivation-witness"] = Json::array({rep.derivation_witness->first.to_string(),
                                             rep.derivation_witness->second.to_string()});
    } else {
      r["derivation-witness"] = nullptr;
    }
    r["is-derivation"] = rep.derivation_candidate();
    r["compose-cases"] = cases;
    r["compose-max-k"] = char2_k;
    r["compose-identity-holds"] = identity;
    r["compositions-are-derivations"] = derivations;
    const bool ok = rep.passed() && !rep.derivation_candidate() && identity && derivations;
    r["status"] = ok ? "pass" : "fail";
    return ctx.emit(r, ok ? kOk : kFailed);
  }

  int product_ring() {
    const ProductRingReport rep = product_ring_demo(pair_exponent);
    const PairPoly sample = PairPoly::monomials(2, 3);
    Json r;
    r["max-exponent"] = rep.max_exponent;
    r["d2(x^2, x^3)"] = product_d2(sample).to_string();
    r["d1(d2(x^2, x^3))"] = product_d1(product_d2(sample)).to_string();
    r["d1-is-derivation"] = rep.d1_is_derivation;
    r["d2-is-derivation"] = rep.d2_is_derivation;
    r["d1-nonzero"] = rep.d1_nonzero;
    r["d2-nonzero"] = rep.d2_nonzero;
    r["composition-vanishes"] = rep.composition_vanishes;
    r["status"] = rep.passed() ? "pass" : "fail";
    return ctx.emit(r, rep.passed() ? kOk : kFailed);
  }

  int composition_order() {
    CompositionOrderOptions opts;
    opts.seed = ctx.seed;
    opts.vanishing_tuples = tuples;
    const CompositionOrderReport rep = composition_order_demo(parse_derivation_chain(derivs, k), opts);
    Json r;
    r["n"] = rep.n;
    r.update(operator_report(rep.composed));
    r["exponent-polynomial"] = rep.exponent_poly.to_string();
    r["exponent-degree"] = rep.exponent_degree;
    if (rep.lower_witness) {
      Json w;
      w["x"] = rep.lower_witness->x.to_string();
      w["ys"] = exprs(rep.lower_witness->ys);
      w["value"] = rep.lower_witness->value.to_string();
      r["lower-witness"] = w;
    } else {
      r["lower-witness"] = nullptr;
    }
    r["top-defect-vanishes"] = rep.top_vanishes;
    r["status"] = rep.passed() ? "pass" : "fail";
    return ctx.emit(r, rep.passed() ? kOk : kFailed);
  }
};

std::uint64_t seed_from_env(std::uint64_t fallback) {
  const char* env = std::getenv("DERIVCALC_SEED");
  if (env == nullptr || *env == '\0') return fallback;
  try {
    std::size_t used = 0;
    const std::string s(env);
    const unsigned long long v = std::stoull(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string("DERIVCALC_SEED is not an unsigned integer: ") + env);
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Context ctx{out, err};
  Commands cmds(ctx);

  CLI::App app("Exact calculus of derivations and differential operators over Q(t1..tk)", "derivcalc");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", ctx.json, "machine-readable output");
  app.add_option("--seed", ctx.seed, "seed for sampled checks (DERIVCALC_SEED overrides)");
  cmds.install(app);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    ctx.seed = seed_from_env(ctx.seed);
    return cmds.action();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DimensionError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kFailed;
  }
}

}  // namespace derivcalc
