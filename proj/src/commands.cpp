#include "omcanon/commands.hpp"

#include "omcanon/bases.hpp"
#include "omcanon/io.hpp"
#include "omcanon/realization.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <ostream>
#include <random>

namespace omc {

namespace {

struct Context {
  InputDocument doc;
  OrientedMatroid om;
  CanonicalFormEngine engine;
};

Context load(const CommandOptions& opts) {
  Context ctx;
  ctx.doc = load_input(opts.input);
  ctx.om = to_oriented_matroid(ctx.doc, validation_enabled(static_cast<int>(ctx.doc.elements.size())));
  return ctx;
}

int base_position(const Context& ctx, const CommandOptions& opts) {
  if (!opts.base) return 0;
  const int p = ctx.om.position_of_label(*opts.base);
  if (p < 0) throw Error("unknown base element '" + *opts.base + "'");
  return p;
}

Json tope_list(const std::vector<SignVector>& topes, int n) {
  Json out = Json::array();
  for (const auto& p : topes) out.push_back(to_string(p, n));
  return out;
}

Json tutte_json(const Polynomial& t) {
  Json out = Json::array();
  for (const auto& [k, v] : t) {
    if (v == 0) continue;
    Json term;
    term["x"] = k.first;
    term["y"] = k.second;
    term["coefficient"] = v;
    out.push_back(std::move(term));
  }
  return out;
}

Json cmd_info(Context& ctx) {
  const OrientedMatroid& om = ctx.om;
  const auto alg = ctx.engine.algebra(om);
  Json out;
  out["rank"] = om.rank();
  out["elements"] = om.labels();
  Json atoms = Json::array();
  for (Mask a : om.atoms()) {
    Json cls = Json::array();
    for (int p : bits_of(a)) cls.push_back(om.labels()[static_cast<std::size_t>(p)]);
    atoms.push_back(std::move(cls));
  }
  out["atoms"] = std::move(atoms);
  out["n_circuits"] = om.circuits().size();
  out["n_cocircuits"] = om.cocircuits().size();
  out["n_topes"] = om.topes().size();
  Json os = Json::array();
  for (int k = 0; k <= om.rank(); ++k) os.push_back(alg->dim(k));
  out["os_dims"] = std::move(os);
  Json red = Json::array();
  for (int k = 0; k < om.rank(); ++k) red.push_back(alg->reduced_dim(k));
  out["reduced_dims"] = std::move(red);
  out["beta"] = beta(om.underlying());
  out["tutte"] = tutte_json(tutte(om.underlying()));
  return out;
}

SignVector parse_tope(const Context& ctx, const std::string& text) {
  const int n = ctx.om.size();
  const SignVector p = parse_sign_vector(text, n);
  if (ctx.om.is_tope(p)) return p;
  int best = n + 1;
  std::vector<SignVector> nearest;
  for (const auto& t : ctx.om.sorted_topes()) {
    const int d = popcount((t.pos ^ p.pos) | (t.neg ^ p.neg));
    if (d < best) {
      best = d;
      nearest.clear();
    }
    if (d == best) nearest.push_back(t);
  }
  std::string msg = "not a tope; nearest topes:";
  for (const auto& t : nearest) msg += " " + to_string(t, n);
  throw Error(msg);
}

Json cmd_canonical(Context& ctx, const CommandOptions& opts) {
  const SignVector p = parse_tope(ctx, opts.tope);
  const auto alg = ctx.engine.algebra(ctx.om);
  const OSElement x = opts.nonreduced ? ctx.engine.nonreduced(ctx.om, p) : ctx.engine.tope_form(ctx.om, p);
  if (!is_integral(x.coords)) throw InvariantViolation("canonical form with non-integral coordinates");
  return os_element_to_json(*alg, ctx.om, x);
}

Json cmd_basis(Context& ctx, const CommandOptions& opts) {
  const int r = ctx.om.rank();
  const int grade = opts.grade < 0 ? r - 1 : opts.grade;
  if (grade > r - 1) throw Error("reduced degree must lie in 0.." + std::to_string(r - 1));
  const Flag flag = build_flag(ctx.om, opts.seed, base_position(ctx, opts));
  const auto alg = ctx.engine.algebra(ctx.om);
  Json out;
  out["grade"] = grade;
  out["seed"] = opts.seed;
  Json elems = Json::array();
  for (const auto& [p, f] : graded_basis(ctx.engine, flag, r - grade)) {
    Json e;
    e["tope"] = to_string(p, ctx.om.size());
    e["form"] = os_element_to_json(*alg, ctx.om, f);
    elems.push_back(std::move(e));
  }
  out["basis"] = std::move(elems);
  return out;
}

std::vector<Rational> parse_weights(const Context& ctx, const std::string& text, int base) {
  const int n = ctx.om.size();
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  parts.push_back(cur);
  if (static_cast<int>(parts.size()) != n - 1)
    throw Error("expected " + std::to_string(n - 1) + " weights, one per element other than the base");
  std::vector<Rational> w(static_cast<std::size_t>(n));
  std::size_t j = 0;
  for (int s = 0; s < n; ++s)
    if (s != base) w[static_cast<std::size_t>(s)] = parse_rational(parts[j++]);
  return w;
}

Json aomoto_json(Context& ctx, const AomotoReport& rep) {
  const auto alg = ctx.engine.algebra(ctx.om);
  const int n = ctx.om.size();
  Json out;
  out["dim_H"] = rep.dim_h;
  out["beta"] = rep.beta;
  out["is_generic"] = rep.is_generic;
  out["certificate"] = rep.certificate;
  out["reduced_dim"] = rep.reduced_top_dim;
  out["image_rank"] = rep.image_rank;
  out["cohomology_dims"] = rep.cohomology_dims;
  out["bounded_topes"] = tope_list(rep.t0, n);
  Json basis = Json::array();
  for (std::size_t i = 0; i < rep.t0.size(); ++i) {
    Json e;
    e["tope"] = to_string(rep.t0[i], n);
    e["form"] = os_element_to_json(*alg, ctx.om, rep.basis_images[i]);
    basis.push_back(std::move(e));
  }
  out["basis"] = std::move(basis);
  return out;
}

Json cmd_aomoto(Context& ctx, const CommandOptions& opts) {
  const int base = base_position(ctx, opts);
  const auto w = parse_weights(ctx, opts.weights, base);
  const Extension ext = perturbing_extension(ctx.om, base, opts.seed);
  return aomoto_json(ctx, aomoto(ctx.engine, ctx.om, ext, w, base));
}

struct Verifier {
  Json checks = Json::array();
  Json failures = Json::array();

  void run(const std::string& name, const std::function<std::string()>& body) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool pass = false;
    try {
      detail = body();
      pass = detail.empty();
    } catch (const std::exception& e) {
      detail = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    Json c;
    c["name"] = name;
    c["pass"] = pass;
    if (!pass) c["detail"] = detail;
    c["seconds"] = secs;
    checks.push_back(std::move(c));
    if (!pass) failures.push_back(name);
  }
};

std::vector<Rational> random_weights(int n, int base, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  std::vector<Rational> w(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) {
    if (s == base) continue;
    Rational q(num(rng), den(rng));
    q.canonicalize();
    w[static_cast<std::size_t>(s)] = q;
  }
  return w;
}

void verify_residues(Context& ctx, Verifier& v) {
  const int n = ctx.om.size();
  for (const auto& p : ctx.om.sorted_topes()) {
    v.run("residues " + to_string(p, n), [&]() -> std::string {
      const auto rep = ctx.engine.check_residue_axioms(ctx.om, p);
      for (const auto& a : rep.atoms)
        if (!a.pass) return "atom " + std::to_string(a.atom) + (a.facet ? " (facet)" : " (non-facet)") + " fails";
      return "";
    });
  }
}

void verify_simplex(Context& ctx, Verifier& v, std::uint64_t seed) {
  const Extension ext = perturbing_extension(ctx.om, 0, seed);
  for (Mask b : ctx.om.underlying().bases()) {
    std::string name = "simplex";
    for (int p : bits_of(b)) name += " " + ctx.om.labels()[static_cast<std::size_t>(p)];
    v.run(name, [&]() -> std::string {
      return simplex_identity_check(ctx.engine, ctx.om, ext, b).pass ? "" : "sides differ";
    });
  }
}

void verify_triangulation(Context& ctx, Verifier& v, std::uint64_t seed) {
  if (!ctx.doc.matrix) {
    v.run("triangulation (matrix input required)", [] { return std::string(); });
    return;
  }
  const Matrix& m = *ctx.doc.matrix;
  const int n = ctx.om.size();
  std::mt19937_64 rng(seed);
  const auto alg = ctx.engine.algebra(ctx.om);
  for (const auto& p : ctx.om.sorted_topes()) {
    v.run("triangulation " + to_string(p, n), [&]() -> std::string {
      const OSElement expected = ctx.engine.tope_form(ctx.om, p);
      const Matrix mp = reorient_columns(m, p);
      const Chirotope chi = reorient(ctx.om.chirotope(), p);
      std::vector<int> order(static_cast<std::size_t>(n));
      std::iota(order.begin(), order.end(), 0);
      for (int t = 0; t < 5; ++t) {
        if (t > 0) std::shuffle(order.begin(), order.end(), rng);
        const auto tri = placing_triangulation(mp, order);
        if (canonical_form_from_triangulation(*alg, chi, tri) != expected)
          return "insertion order " + std::to_string(t) + " disagrees with the recursion";
      }
      return "";
    });
  }
}

void verify_bases(Context& ctx, Verifier& v, std::uint64_t seed) {
  const Flag flag = build_flag(ctx.om, seed);
  const auto alg = ctx.engine.algebra(ctx.om);
  const auto whitney = whitney_numbers(ctx.om.underlying());
  const int r = ctx.om.rank();
  for (int k = 1; k <= r; ++k) {
    v.run("graded basis k=" + std::to_string(k), [&]() -> std::string {
      const auto basis = graded_basis(ctx.engine, flag, k);
      for (const auto& [p, f] : basis)
        if (!is_integral(f.coords)) return "non-integral coordinates";
      // dim dOS^{r-k} = sum_{j <= r-k} (-1)^{r-k-j} |w_j|
      std::int64_t expect = 0;
      for (int j = 0; j <= r - k; ++j) {
        const std::int64_t w = std::abs(whitney[static_cast<std::size_t>(j)]);
        expect += ((r - k - j) & 1) ? -w : w;
      }
      if (static_cast<std::int64_t>(basis.size()) != expect) return "dimension differs from the Whitney numbers";
      return "";
    });
  }
}

void verify_aomoto(Context& ctx, Verifier& v, std::uint64_t seed) {
  v.run("aomoto", [&]() -> std::string {
    const Extension ext = perturbing_extension(ctx.om, 0, seed);
    std::mt19937_64 rng(seed);
    bool found = false;
    for (int t = 0; t < 5 && !found; ++t) {
      const auto rep = aomoto(ctx.engine, ctx.om, ext, random_weights(ctx.om.size(), 0, rng), 0);
      if (static_cast<std::int64_t>(rep.t0.size()) != rep.beta) return "|T^0| differs from beta";
      found = rep.is_generic;
    }
    return found ? "" : "no generic weights among 5 samples";
  });
}

Json cmd_verify(Context& ctx, const CommandOptions& opts, bool& ok) {
  static const std::vector<std::string> suites{"residues", "simplex", "triangulation", "bases", "aomoto"};
  if (opts.suite != "all" && std::find(suites.begin(), suites.end(), opts.suite) == suites.end())
    throw Error("unknown suite '" + opts.suite + "'");
  Verifier v;
  const auto want = [&](const char* s) { return opts.suite == "all" || opts.suite == s; };
  if (want("residues")) verify_residues(ctx, v);
  if (want("simplex")) verify_simplex(ctx, v, opts.seed);
  if (want("triangulation")) verify_triangulation(ctx, v, opts.seed);
  if (want("bases")) verify_bases(ctx, v, opts.seed);
  if (want("aomoto")) verify_aomoto(ctx, v, opts.seed);
  ok = v.failures.empty();
  Json out;
  out["suite"] = opts.suite;
  out["pass"] = ok;
  out["failures"] = v.failures;
  out["checks"] = v.checks;
  return out;
}

}  // namespace

bool validation_enabled(int num_elements) {
  const char* env = std::getenv("OMCANON_VALIDATE");
  if (env && std::string(env) == "off") return false;
  return num_elements <= 10;
}

int run_command(const CommandOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    Context ctx = load(opts);
    Json result;
    bool ok = true;
    if (opts.command == "info") {
      result = cmd_info(ctx);
    } else if (opts.command == "canonical") {
      result = cmd_canonical(ctx, opts);
    } else if (opts.command == "basis") {
      result = cmd_basis(ctx, opts);
    } else if (opts.command == "aomoto") {
      result = cmd_aomoto(ctx, opts);
    } else if (opts.command == "verify") {
      result = cmd_verify(ctx, opts, ok);
    } else {
      throw Error("unknown command '" + opts.command + "'");
    }
    out << result.dump(2) << "\n";
    return ok ? 0 : 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvariantViolation& e) {
    err << "invariant violated: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace omc
