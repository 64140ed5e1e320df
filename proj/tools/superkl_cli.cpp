// superkl: single computations and verification sweeps.
//
// Exit codes: 0 ok, 1 a check failed, 2 bad input, 3 window exhausted.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>

#include "superkl/atypicality.hpp"
#include "superkl/bases.hpp"
#include "superkl/characters.hpp"
#include "superkl/duality.hpp"
#include "superkl/errors.hpp"
#include "superkl/io.hpp"
#include "superkl/suites.hpp"

using namespace superkl;

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kBadInput = 2, kWindow = 3 };

struct Options {
  std::string kind, suite, format = "json", flavor;
  std::vector<std::string> weights;
  std::optional<int> m, n, window, range, max_rank, degree_bound;
  std::uint64_t seed = 0;
  int jobs = 1;
  std::optional<std::size_t> max_states;
};

std::optional<int> env_window() {
  const char* v = std::getenv("SUPERKL_WINDOW");
  if (!v || !*v) return std::nullopt;
  try {
    return std::stoi(v);
  } catch (const std::exception&) {
    throw ParseError(std::string("SUPERKL_WINDOW is not an integer: ") + v);
  }
}

Weight read_weight(const Options& o, const std::string& text, Flavor fallback, bool use_n = true) {
  Flavor fl = o.flavor.empty() ? fallback : parse_flavor(o.flavor);
  Weight f = parse_weight(text, fl);
  if (o.m && *o.m != f.m())
    throw ParseError("--m " + std::to_string(*o.m) + " but the weight has " + std::to_string(f.m()) + " negative entries");
  if (o.n && use_n) {
    if (f.has_tail()) {
      if (*o.n < f.n()) throw ParseError("--n is shorter than the prefix of the weight");
      f = f.window(*o.n);
    } else if (*o.n != f.n()) {
      throw ParseError("--n does not match the finite weight");
    }
  }
  if (!f.is_dominant()) throw ParseError("weight is not dominant: " + f.to_string());
  return f;
}

void emit(const Options& o, const Json& j, const std::string& text) {
  if (o.format == "text") std::cout << text;
  else std::cout << j.dump(2) << "\n";
}

int compute(const Options& o) {
  const std::size_t need = o.kind == "kl" ? 2 : 1;
  if (o.weights.size() != need)
    throw ParseError("compute " + o.kind + " takes " + std::to_string(need) + " weight argument(s)");
  if (o.kind == "natural") {
    // Reductive input goes across to the super side, super input comes back.
    Weight f = read_weight(o, o.weights[0], Flavor::reductive);
    if (!f.has_tail()) throw ParseError("the natural map needs a profinite weight (trailing ,*)");
    Weight g = f.flavor() == Flavor::reductive ? natural_map(f) : natural_inv(f);
    emit(o, Json{{"input", to_json(f)}, {"output", to_json(g)}}, g.to_string() + "\n");
    return kOk;
  }
  Weight f = read_weight(o, o.weights[0], Flavor::super, o.kind != "character");
  const bool super = f.flavor() == Flavor::super;
  const int slack = o.window.value_or(env_window().value_or(3));
  if (o.kind == "canonical") {
    Expansion x = super ? super_canonical(f) : red_canonical(f);
    emit(o, to_json(f, "U", x, 0), to_text(f, "U", x));
  } else if (o.kind == "dual") {
    // Super: terms with matched entries >= min entry - window.
    // Reductive: positions 1..max(window, prefix).
    int w = super ? f.min_entry() - slack : std::max(slack, f.n());
    Expansion x = super ? super_dual_canonical(f, w) : red_dual_canonical(f, w);
    emit(o, to_json(f, "L", x, w), to_text(f, "L", x));
  } else if (o.kind == "kl") {
    Weight g = f, h = read_weight(o, o.weights[1], f.flavor());
    LaurentPoly u = kl_u(g, h), l = kl_l(g, h);
    emit(o, Json{{"g", to_json(g)}, {"f", to_json(h)}, {"u", to_json(u)}, {"l", to_json(l)}},
         "u = " + u.to_string() + "\nl = " + l.to_string() + "\n");
  } else if (o.kind == "atypicality") {
    if (super) {
      int k = super_atypicality(f);
      Json pairs = Json::array();
      for (auto [i, j] : atypical_pairs(f)) pairs.push_back(Json::array({i, j}));
      emit(o, Json{{"weight", to_json(f)}, {"atypicality", k}, {"pairs", pairs}}, std::to_string(k) + "\n");
    } else {
      PairSet s = sigma_plus(f);
      emit(o, Json{{"weight", to_json(f)}, {"atypicality", static_cast<int>(s.size())}, {"pairs", to_json(s)}},
           std::to_string(s.size()) + "\n");
    }
  } else if (o.kind == "character") {
    if (!f.has_tail()) throw ParseError("characters need a profinite weight (trailing ,*)");
    if (!o.degree_bound) throw ParseError("compute character needs --degree-bound");
    int vars = o.n.value_or(2);  // --n counts positive variables here
    SymPoly p = super ? char_super_irreducible(f, vars, *o.degree_bound)
                      : char_reductive_irreducible(f, vars, *o.degree_bound);
    emit(o, Json{{"weight", to_json(f)}, {"character", to_json(p)}}, to_text(p));
  } else {
    throw ParseError("unknown kind: " + o.kind);
  }
  return kOk;
}

int verify(const Options& o) {
  SuiteOptions s;
  s.seed = o.seed;
  s.jobs = std::max(o.jobs, 1);
  if (o.m) s.m = *o.m;
  std::optional<int> range = o.range ? o.range : env_window();
  if (range) {
    s.range = *range;
    s.oracle_range = *range;
    s.jantzen_range = *range;
  }
  if (o.max_rank) {
    s.max_rank = *o.max_rank;
    s.jantzen_rank = *o.max_rank;
  }
  if (o.window) s.max_prefix = *o.window;
  if (o.max_states) s.max_states = *o.max_states;
  SuiteReport r = run_suite(o.suite, s);
  emit(o, to_json(r), to_text(r));
  std::cerr << r.name << ": " << r.seconds << " s\n";
  return r.ok() ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Canonical bases and Kazhdan-Lusztig polynomials on super and reductive Fock spaces"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--flavor", o.flavor, "super or reductive")->check(CLI::IsMember({"super", "reductive"}));
    sub->add_option("--m", o.m, "size of the negative block");
    sub->add_option("--window", o.window, "window slack (compute) or prefix bound (verify)");
    sub->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  };
  auto* comp = app.add_subcommand("compute", "compute one object");
  comp->add_option("kind", o.kind, "canonical|dual|kl|atypicality|natural|character")
      ->required()
      ->check(CLI::IsMember({"canonical", "dual", "kl", "atypicality", "natural", "character"}));
  comp->add_option("weights", o.weights, "weight(s) as \"a,b|c,d\" with optional trailing \",*\"")->required();
  comp->add_option("--n", o.n, "finite window (or number of positive variables for characters)");
  comp->add_option("--degree-bound", o.degree_bound, "positive-variable degree bound for characters");
  common(comp);
  auto* ver = app.add_subcommand("verify", "run a verification suite");
  ver->add_option("suite", o.suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
  ver->add_option("--range", o.range, "entries in [-range, range]");
  ver->add_option("--max-rank", o.max_rank, "bound on m + n");
  ver->add_option("--seed", o.seed, "sampling seed");
  ver->add_option("--jobs", o.jobs, "worker threads; output does not depend on it");
  ver->add_option("--max-states", o.max_states, "state bound for Bruhat searches");
  common(ver);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }
  try {
    return comp->parsed() ? compute(o) : verify(o);
  } catch (const WindowExhausted& e) {
    std::cerr << "window exhausted: " << e.what() << "\n";
    return kWindow;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
}
