// stardisc: command-line front end for the star-discrepancy library.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
// 3 grid budget exceeded.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "stardisc/stardisc.hpp"

namespace {

using namespace stardisc;

enum ExitCode { ok = 0, verification_failed = 1, usage_error = 2, over_budget = 3 };

struct Input {
  PointSet points;
  std::string digest;
};

Input load(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open '" + path + "'");
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  return {parse_points(text), hex_digest(fnv1a64(text))};
}

Rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash != std::string::npos)
      return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    const auto dot = s.find('.');
    if (dot == std::string::npos) return Rational(std::stoll(s));
    const std::string frac = s.substr(dot + 1);
    long long den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    const long long whole = dot == 0 ? 0 : std::stoll(s.substr(0, dot));
    return Rational(whole * den + (frac.empty() ? 0 : std::stoll(frac)), den);
  } catch (const std::logic_error&) {
    throw std::invalid_argument("cannot parse '" + s + "' as a rational number");
  }
}

Json rational_json(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

unsigned default_threads() {
  if (const char* env = std::getenv("STARDISC_THREADS")) {
    const int t = std::atoi(env);
    if (t > 0) return static_cast<unsigned>(t);
  }
  return 1;
}

class Stopwatch {
public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void emit(const Json& report) { std::cout << report.dump(2) << '\n'; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact star discrepancy, lower-bound witnesses and combinatorial complexity"};
  app.require_subcommand(1);
  unsigned threads = default_threads();
  app.add_option("--threads", threads, "Worker threads (default: $STARDISC_THREADS or 1)")
      ->check(CLI::PositiveNumber);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a point set");
  std::string kind;
  std::size_t gen_n = 0, gen_d = 2, gen_m = 0;
  std::uint64_t gen_seed = 0;
  bool gen_header = false;
  gen->add_option("--kind", kind, "chain, staircase, random, lattice or halton")->required();
  gen->add_option("--n", gen_n, "Number of points")->check(CLI::PositiveNumber);
  gen->add_option("--d", gen_d, "Dimension")->check(CLI::PositiveNumber);
  gen->add_option("--m", gen_m, "Points per axis (lattice)")->check(CLI::PositiveNumber);
  gen->add_option("--seed", gen_seed, "Seed (random)");
  gen->add_flag("--header", gen_header, "Write a '# d=.. n=..' header line");

  // disc
  auto* disc = app.add_subcommand("disc", "Exact star discrepancy");
  std::string disc_file;
  std::size_t mesh = 0;
  double budget = default_grid_budget;
  std::uint64_t sample = 0, seed = 1;
  disc->add_option("file", disc_file, "Points file or '-'")->required();
  disc->add_option("--mesh", mesh, "Cross-check with the mesh oracle at resolution m");
  disc->add_option("--budget", budget, "Maximum grid cells")->check(CLI::PositiveNumber);
  disc->add_option("--sample", sample, "Random-corner lower bound with this many samples");
  disc->add_option("--seed", seed, "Seed for --sample");

  // witness
  auto* wit = app.add_subcommand("witness", "Certified witness box for D* >= d/(12n)");
  std::string wit_file;
  bool simple = false;
  wit->add_option("file", wit_file, "Points file or '-'")->required();
  wit->add_flag("--simple", simple, "Use the n >= 2ed^2 construction instead");

  // shatter
  auto* sh = app.add_subcommand("shatter", "Shatter count and Sauer-Shelah bound");
  std::string sh_file;
  sh->add_option("file", sh_file, "Points file or '-'")->required();
  sh->add_option("--budget", budget, "Maximum search work")->check(CLI::PositiveNumber);

  // boundary
  auto* bd = app.add_subcommand("boundary", "Maximum boundary box and property P(r)");
  std::string bd_file, r_text;
  bd->add_option("file", bd_file, "Points file or '-'")->required();
  bd->add_option("--r", r_text, "Threshold r as integer, decimal or p/q (default d/4)");
  bd->add_option("--budget", budget, "Maximum search work")->check(CLI::PositiveNumber);

  // bounds
  auto* bn = app.add_subcommand("bounds", "Counting bounds at (n, d, r)");
  std::size_t b_n = 0, b_d = 0, b_r = 0;
  bn->add_option("--n", b_n)->required()->check(CLI::PositiveNumber);
  bn->add_option("--d", b_d)->required()->check(CLI::PositiveNumber);
  bn->add_option("--r", b_r, "Default ceil(d/4)");

  // check
  auto* ck = app.add_subcommand("check", "Numerical checks of the two proof inequalities");
  std::size_t grid = 2001, qgrid = 100000;
  ck->add_option("--grid", grid, "Grid points per axis for the Bernoulli check")
      ->check(CLI::Range(2, 100000));
  ck->add_option("--qgrid", qgrid, "Grid points for the rational-function check")
      ->check(CLI::Range(2, 100000000));

  // verify
  auto* vf = app.add_subcommand("verify", "Run a verification suite");
  std::string suite;
  std::size_t seeds = 20;
  vf->add_option("--suite", suite, "theorem1, theorem2, figure1 or bounds")->required();
  vf->add_option("--seeds", seeds, "Number of seeded instances");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return usage_error;
  }

  const Stopwatch clock;
  try {
    if (gen->parsed()) {
      GeneratorSpec spec;
      spec.kind = parse_generator_kind(kind);
      spec.d = gen_d;
      spec.seed = gen_seed;
      if (spec.kind == GeneratorKind::lattice) {
        if (gen_m == 0) throw std::invalid_argument("lattice needs --m");
        spec.n = gen_m;
      } else {
        if (gen_n == 0) throw std::invalid_argument("--n is required");
        spec.n = gen_n;
      }
      write_points(std::cout, generate(spec), gen_header);
      return ok;
    }

    if (disc->parsed()) {
      const auto in = load(disc_file);
      Json params = {{"file", disc_file}, {"budget", budget}, {"threads", threads}};
      Json results;
      int code = ok;
      if (sample > 0) {
        params["sample"] = sample;
        params["seed"] = seed;
        results["lower_bound"] = to_json(lower_bound_sample(in.points, sample, seed));
      } else {
        const auto exact = star_discrepancy_exact(in.points, {.budget = budget, .threads = threads});
        results = to_json(exact);
        if (mesh > 0) {
          params["mesh"] = mesh;
          const double oracle = star_discrepancy_oracle(in.points, mesh, budget);
          const bool agree = std::abs(oracle - exact.value) <= 1e-12;
          results["oracle"] = {{"value", oracle}, {"agree", agree}};
          if (!agree) code = verification_failed;
        }
      }
      emit(make_report("disc", in.digest, params, results, clock.seconds()));
      if (code != ok) std::cerr << "error: exact value and mesh oracle disagree\n";
      return code;
    }

    if (wit->parsed()) {
      const auto in = load(wit_file);
      const auto cert = simple ? simple_witness(in.points) : theorem1_witness(in.points);
      Json results = to_json(cert);
      if (!cert.partition && !simple && in.points.size() > 25 * in.points.dim())
        results["kappa"] = kappa_threshold(in.points.size(), in.points.dim());
      emit(make_report("witness", in.digest, {{"file", wit_file}, {"simple", simple}}, results,
                       clock.seconds()));
      if (cert.guarantee_valid && !cert.holds()) {
        std::cerr << "error: certified bound not attained\n";
        return verification_failed;
      }
      return ok;
    }

    if (sh->parsed()) {
      const auto in = load(sh_file);
      const auto rep = shatter_report(in.points, budget);
      emit(make_report("shatter", in.digest, {{"file", sh_file}, {"budget", budget}},
                       to_json(rep), clock.seconds()));
      return ok;
    }

    if (bd->parsed()) {
      const auto in = load(bd_file);
      const Rational r = r_text.empty() ? Rational(static_cast<long long>(in.points.dim()), 4)
                                        : parse_rational(r_text);
      const auto mb = max_boundary_box(in.points, budget);
      const bool has_p = has_property_P(in.points, r, budget);
      emit(make_report("boundary", in.digest,
                       {{"file", bd_file}, {"r", rational_json(r)}, {"budget", budget}},
                       {{"max_boundary", mb.count},
                        {"box", to_json(mb.box)},
                        {"has_property_P", has_p}},
                       clock.seconds()));
      return ok;
    }

    if (bn->parsed()) {
      const std::size_t r = b_r == 0 ? (b_d + 3) / 4 : b_r;
      emit(make_report("bounds", "none", {{"n", b_n}, {"d", b_d}, {"r", r}},
                       to_json(bounds_table(b_n, b_d, r)), clock.seconds()));
      return ok;
    }

    if (ck->parsed()) {
      const auto bern = check_bernoulli_inequality(grid, grid);
      const auto rat = check_case3_rational(qgrid);
      emit(make_report("check", "none", {{"grid", grid}, {"qgrid", qgrid}},
                       {{"bernoulli", to_json(bern, true)}, {"case3_rational", to_json(rat, false)}},
                       clock.seconds()));
      return bern.verified && rat.verified ? ok : verification_failed;
    }

    if (vf->parsed()) {
      const auto result = run_suite(suite, {.seeds = seeds, .threads = threads});
      emit(make_report("verify", "none", {{"suite", suite}, {"seeds", seeds}}, result.to_json(),
                       clock.seconds()));
      return result.all_pass() ? ok : verification_failed;
    }
  } catch (const budget_exceeded& e) {
    std::cerr << "error: " << e.what()
              << (disc->parsed() ? "; raise --budget or use --sample\n" : "; raise --budget\n");
    return over_budget;
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage_error;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage_error;
  }
  return usage_error;
}
