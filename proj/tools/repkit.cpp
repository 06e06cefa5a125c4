// Command-line front end. Exit codes: 0 success, 1 a check failed, 2 bad input.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "repkit/constructions.hpp"
#include "repkit/guard.hpp"
#include "repkit/invariants.hpp"
#include "repkit/reports.hpp"
#include "repkit/serialize.hpp"
#include "repkit/translation.hpp"

using namespace repkit;

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

AnyRep load(const std::string& path) {
  try {
    return parse_rep(read_file(path));
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

CoverRep load_cover(const std::string& path) {
  AnyRep a = load(path);
  if (!std::holds_alternative<CoverRep>(a)) throw InputError(path + ": expected a cover representation");
  return std::get<CoverRep>(a);
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw InputError("cannot write " + out);
  f << text;
}

long long to_int(const std::string& s) {
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    throw InputError("not an integer: " + s);
  }
  if (pos != s.size()) throw InputError("not an integer: " + s);
  return v;
}

AnyRep build_shape(const std::vector<std::string>& shape, int r) {
  const std::string& kind = shape.at(0);
  auto need = [&](std::size_t n) {
    if (shape.size() != n + 1) throw InputError("--shape " + kind + " takes " + std::to_string(n) + " argument(s)");
  };
  if (kind == "x-cover") {
    need(1);
    return build_X_cover(static_cast<int>(to_int(shape[1])), r);
  }
  if (kind == "x-alpha") {
    std::vector<long long> alpha;
    for (std::size_t i = 1; i < shape.size(); ++i) alpha.push_back(to_int(shape[i]));
    if (alpha.size() != static_cast<std::size_t>(r)) throw InputError("--shape x-alpha takes r coefficients");
    return build_X_alpha(alpha, r);
  }
  if (kind == "thin-edge") {
    need(0);
    return thin_edge(r);
  }
  if (kind == "a-tree") {
    need(2);
    return build_A_tree_rep(static_cast<int>(to_int(shape[1])), static_cast<int>(to_int(shape[2])), Word{}, 1, r).rep;
  }
  if (kind == "standard") {
    need(1);
    auto name = parse_standard_name(shape[1]);
    if (!name) throw InputError("unknown standard representation " + shape[1]);
    return standard_rep(*name, r);
  }
  if (kind == "m-family") {
    need(1);
    if (r != 3) throw InputError("m-family is implemented for r = 3");
    return family_M(static_cast<int>(to_int(shape[1])));
  }
  throw InputError("unknown shape " + kind);
}

int finish_report(const Report& rep, const std::string& path) {
  std::string text = rep.dump();
  if (!path.empty()) emit(text, path);
  for (const auto& c : rep.checks) std::cout << (c.pass ? "pass " : "FAIL ") << c.name << "\n";
  return rep.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kronecker and cover representations: constructions and checks"};
  app.require_subcommand(1);
  std::string out, report, in_a, in_b, suite, dot_in;
  std::vector<std::string> shape;
  int r = 3, power = 1, ql = 1, m = 0, window = 0;
  std::uint64_t seed = 0;

  auto* build = app.add_subcommand("build", "build a named representation");
  build->add_option("--shape", shape, "x-cover i | x-alpha a.. | thin-edge | a-tree l n | standard NAME | m-family n")
      ->required()
      ->expected(1, -1);
  build->add_option("--r", r);
  build->add_option("--out", out);

  auto* push = app.add_subcommand("pushdown", "push a cover representation down");
  push->add_option("file", in_a)->required();
  push->add_option("--out", out);

  auto* tau = app.add_subcommand("tau", "Auslander-Reiten translate, power K (negative for tau^-1)");
  tau->add_option("file", in_a)->required();
  tau->add_option("--power", power);
  tau->add_option("--out", out);

  auto* hom = app.add_subcommand("hom", "dim Hom(A, B)");
  hom->add_option("a", in_a)->required();
  hom->add_option("b", in_b)->required();

  auto* wid = app.add_subcommand("width", "d-, d+ and width of a cover representation");
  wid->add_option("file", in_a)->required();
  wid->add_option("--ql", ql);

  auto* cons = app.add_subcommand("construct", "constructions");
  cons->require_subcommand(1);
  auto* wc = cons->add_subcommand("width-component", "quasi-simple representative of a width-m component");
  wc->add_option("--m", m)->required();
  wc->add_option("--seed", seed);
  wc->add_option("--out", out);
  wc->add_option("--report", report);

  auto* ver = app.add_subcommand("verify", "run a verification suite");
  ver->add_option("suite", suite, "euler | tau-dims | inj-equivalence | glue | rank-width | stability | all")
      ->required();
  auto* m_opt = ver->add_option("--m", m);
  ver->add_option("--r", r);
  ver->add_option("--seed", seed);
  auto* w_opt = ver->add_option("--window", window);
  ver->add_option("--report", report);

  auto* dot = app.add_subcommand("export-dot", "Graphviz rendering of a cover representation");
  dot->add_option("file", dot_in)->required();
  dot->add_option("--out", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (r < 2) throw InputError("--r must be at least 2");
    if (*build) {
      emit(serialize(build_shape(shape, r)), out);
    } else if (*push) {
      emit(serialize(pushdown(load_cover(in_a))), out);
    } else if (*tau) {
      AnyRep a = load(in_a);
      if (auto* c = std::get_if<CoverRep>(&a))
        emit(serialize(tau_power_cover(*c, power)), out);
      else
        emit(serialize(tau_kronecker(std::get<KroneckerRep>(a), power)), out);
    } else if (*hom) {
      AnyRep a = load(in_a), b = load(in_b);
      if (a.index() != b.index()) throw InputError("hom: both inputs must be of the same kind");
      if (auto* c = std::get_if<CoverRep>(&a))
        std::cout << hom_dim(*c, std::get<CoverRep>(b)) << "\n";
      else
        std::cout << hom_dim(std::get<KroneckerRep>(a), std::get<KroneckerRep>(b)) << "\n";
    } else if (*wid) {
      CoverRep c = load_cover(in_a);
      TauOrbit o(c);
      int dm = d_minus(o), dp = d_plus(o);
      std::cout << "d- " << dm << "\nd+ " << dp << "\nwidth " << width(o, ql) << "\n";
    } else if (*wc) {
      WidthComponent w = width_m_component(m, {seed, std::nullopt});
      if (!out.empty()) emit(serialize(w.rep), out);
      Report rep;
      rep.command = "construct width-component --m " + std::to_string(m);
      rep.seed = seed;
      rep.r = 3;
      CheckRecord c;
      c.name = "width-component m=" + std::to_string(m);
      c.anchor = "recomputed width equals m, dims (n+1, n) or (n, n+1), quasi-simple";
      int recomputed = width(w.rep, w.ql);
      DimVector d = w.rep.dim_vector();
      auto qs = is_quasi_simple(w.rep, seed);
      c.data = {{"recipe", w.recipe}, {"dims", Json::array({d.a, d.b})}, {"d_minus", w.report.d_minus},
                {"d_plus", w.report.d_plus}, {"width", recomputed}, {"quasi_simple_route", qs.route}};
      c.pass = recomputed == m && (d.a == d.b + 1 || d.b == d.a + 1) && qs.verdict == QuasiSimpleVerdict::yes;
      rep.checks.push_back(c);
      std::cout << "width " << recomputed << "\ndims " << to_string(d) << "\n";
      if (!report.empty()) emit(rep.dump(), report);
      return rep.passed() ? 0 : 1;
    } else if (*ver) {
      SuiteOptions opt;
      opt.r = r;
      opt.seed = seed;
      if (w_opt->count()) opt.window = window;
      std::optional<int> mm;
      if (m_opt->count()) mm = m;
      return finish_report(run_verify(suite, opt, mm), report);
    } else if (*dot) {
      AnyRep a = load(dot_in);
      if (!std::holds_alternative<CoverRep>(a)) throw InputError("export-dot: expected a cover representation");
      emit(export_dot(std::get<CoverRep>(a)), out);
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const GuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
