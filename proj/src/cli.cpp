#include "unitary/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "unitary/arith.hpp"
#include "unitary/asymptotics.hpp"
#include "unitary/complex.hpp"
#include "unitary/errors.hpp"
#include "unitary/homology.hpp"
#include "unitary/presentation.hpp"
#include "unitary/ring.hpp"
#include "unitary/serialize.hpp"
#include "unitary/shelling.hpp"

namespace unitary {

namespace {

constexpr const char* kSieveEnv = "UNITARY_SIEVE_LIMIT";

struct Output {
  Json json;
  std::optional<Table> table;  // preferred for csv and text when present
  std::optional<std::string> raw;  // emitted verbatim regardless of format
};

struct Settings {
  std::string format = "json";
  std::uint64_t sieve_limit = kDefaultSieveLimit;
  std::string out_path;
  int cap = kDefaultSubsetCap;
  unsigned threads = 0;
};

class Context {
 public:
  explicit Context(const Settings& s) : settings_(s) {}
  const Settings& settings() const { return settings_; }
  std::shared_ptr<const Sieve> sieve() {
    if (!sieve_) sieve_ = Sieve::create(settings_.sieve_limit);
    return sieve_;
  }
  SubsetScan scan(std::uint64_t n) {
    return SubsetScan::run(sieve(), n, settings_.cap, settings_.threads);
  }

 private:
  const Settings& settings_;
  std::shared_ptr<const Sieve> sieve_;
};

Json vertex_sets(const std::vector<std::vector<std::uint64_t>>& sets) {
  Json out = Json::array();
  for (const auto& s : sets) out.push_back(s);
  return out;
}

std::string join(const std::vector<std::uint64_t>& v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

Json variable_json(const Variable& y) { return Json::array({y.column, y.height}); }

// ---------------------------------------------------------------------------
// Commands

Output cmd_special_fns(Context& ctx, std::uint64_t n) {
  const SpecialFunctions sf = special_functions(*ctx.sieve(), n);
  return {{{"n", n}, {"pi", sf.pi}, {"pi_prime", sf.pi_prime}, {"ell", sf.ell}, {"v", sf.v},
           {"pi_k", sf.pi_k}},
          std::nullopt, std::nullopt};
}

Output cmd_lambda(Context& ctx, std::uint64_t n) {
  const auto sieve = ctx.sieve();
  const LambdaPartition lambda = lambda_vector(*sieve, n);
  Table t{{"i", "p", "lambda"}, {}};
  for (std::size_t i = 0; i < lambda.parts.size(); ++i) {
    t.rows.push_back({std::to_string(i + 1), std::to_string(sieve->prime(i + 1)),
                      std::to_string(lambda.parts[i])});
  }
  return {{{"n", n}, {"lambda", lambda.parts}, {"total", lambda.total()}}, t, std::nullopt};
}

Output cmd_complex(Context& ctx, std::uint64_t n, bool dot) {
  const auto complex = SimplicialComplex::build(ctx.sieve(), n);
  if (dot) return {Json::object(), std::nullopt, to_dot(complex)};
  std::vector<std::vector<std::uint64_t>> facets;
  for (std::uint64_t f : complex.facets()) facets.push_back(complex.vertex_set(f));
  const Connectivity c = connectivity(complex);
  return {{{"n", n},
           {"vertices", complex.vertices()},
           {"facets", vertex_sets(facets)},
           {"dimension", complex.dimension()},
           {"isolated", c.isolated},
           {"components", vertex_sets(c.components)}},
          std::nullopt, std::nullopt};
}

Output cmd_fh(Context& ctx, std::uint64_t n, bool with_h) {
  const FHVectors fh = f_h_vectors(*ctx.sieve(), n);
  Json j{{"n", n}, {"f", fh.f}};
  if (with_h) j["h"] = fh.h;
  return {j, std::nullopt, std::nullopt};
}

Output cmd_hilbert(Context& ctx, std::uint64_t n) {
  const HilbertSeries hs = hilbert_series(f_h_vectors(*ctx.sieve(), n));
  return {{{"n", n},
           {"artinified", hs.artinified.to_string()},
           {"numerator", hs.numerator.to_string()},
           {"denominator_exponent", hs.denominator_exponent},
           {"froberg_identity", froberg_identity_holds(hs)}},
          std::nullopt, std::nullopt};
}

Output cmd_socle(Context& ctx, std::uint64_t n) {
  const auto sieve = ctx.sieve();
  const auto basis = socle_basis(*sieve, n);
  return {{{"n", n}, {"basis", basis}, {"dimension", basis.size()}, {"gorenstein", basis.size() == 1}},
          std::nullopt, std::nullopt};
}

Output cmd_socle_density(Context& ctx, std::optional<std::size_t> terms,
                         std::optional<std::uint64_t> empirical) {
  const auto sieve = ctx.sieve();
  if (terms) {
    const Rational sum = socle_density_series(*sieve, *terms);
    return {{{"terms", *terms}, {"exact", to_string(sum)}, {"decimal", to_decimal(sum, 30)}},
            std::nullopt, std::nullopt};
  }
  const std::uint64_t n = *empirical;
  const std::uint64_t dim = socle_dimension(*sieve, n);
  return {{{"n", n},
           {"dimension", dim},
           {"density", static_cast<double>(dim) / static_cast<double>(n)},
           {"interval_estimate", socle_interval_estimate(*sieve, n) / static_cast<double>(n)}},
          std::nullopt, std::nullopt};
}

Output cmd_syzygies(std::uint64_t n, bool list) {
  const SyzygySet m = monomial_syzygies(n);
  const std::uint64_t k2 = k2_dimension(n);
  Json j{{"n", n},
         {"size", m.size()},
         {"k2_dimension", k2},
         {"ratio", k2 == 0 ? 0.0 : static_cast<double>(m.size()) / static_cast<double>(k2)}};
  if (!list) return {j, std::nullopt, std::nullopt};
  Table t{{"i", "j"}, {}};
  Json points = Json::array();
  for (const auto& [a, b] : m.points()) {
    points.push_back(Json::array({a, b}));
    t.rows.push_back({std::to_string(a), std::to_string(b)});
  }
  j["points"] = points;
  return {j, t, std::nullopt};
}

Output cmd_generators(Context& ctx, std::uint64_t n) {
  const IdealPresentation p = generators(*ctx.sieve(), n);
  Json vars = Json::array();
  for (const Variable& y : p.variables.vars) vars.push_back(variable_json(y));
  Json a = Json::array();
  for (const Variable& y : p.squares) a.push_back(variable_json(y));
  Json b = Json::array();
  for (const auto& [y, z] : p.column_products) b.push_back(Json::array({variable_json(y), variable_json(z)}));
  return {{{"n", n}, {"variables", vars}, {"A", a}, {"B", b}, {"C", p.separated}}, std::nullopt,
          std::nullopt};
}

Output cmd_mu(Context& ctx, std::uint64_t n) {
  const MuCounts mu = mu_counts(*ctx.sieve(), n);
  return {{{"n", n}, {"mu_A", mu.mu_a}, {"mu_B", mu.mu_b}, {"mu_C", mu.mu_c}}, std::nullopt,
          std::nullopt};
}

Output cmd_max_gen_degree(Context& ctx, std::uint64_t n) {
  const GeneratorDegreeReport r = generator_degree_report(*ctx.sieve(), n);
  return {{{"n", n},
           {"degree", r.degree},
           {"is_quadratic", r.degree <= 2},
           {"v", r.v},
           {"bound_v", r.bound_v},
           {"bound_v_plus_2", r.bound_v_plus_2}},
          std::nullopt, std::nullopt};
}

Output cmd_multistable(Context& ctx, std::uint64_t n, int degree) {
  const MultistabilityResult r = check_multistability(*ctx.sieve(), n, degree);
  Json j{{"n", n}, {"ok", r.ok}, {"groups", r.groups}, {"ideal_monomials_checked", r.monomials}};
  if (!r.ok) {
    Json w = Json::array();
    for (const auto& [index, e] : r.witness) w.push_back(Json::array({index, e}));
    j["witness"] = {{"monomial", w}, {"from", r.from}, {"to", r.to}};
  }
  return {j, std::nullopt, std::nullopt};
}

Output cmd_shelling(Context& ctx, std::uint64_t n, bool verify, bool reverse) {
  const auto complex = SimplicialComplex::build(ctx.sieve(), n);
  FacetOrder order = shelling_order(complex);
  if (reverse) std::reverse(order.facets.begin(), order.facets.end());
  Json j{{"n", n}, {"order", vertex_sets(order.facets)}, {"reversed", reverse}};
  Table t{{"position", "facet"}, {}};
  for (std::size_t i = 0; i < order.facets.size(); ++i) {
    t.rows.push_back({std::to_string(i + 1), join(order.facets[i], " ")});
  }
  if (verify) {
    const ShellingCheck check = verify_shelling(order);
    j["verified"] = check.ok;
    j["witness"] = check.witness ? Json::array({check.witness->first + 1, check.witness->second + 1})
                                 : Json(nullptr);
  }
  return {j, t, std::nullopt};
}

Output cmd_homology(Context& ctx, std::uint64_t n) {
  const auto complex = SimplicialComplex::build(ctx.sieve(), n);
  const HomologyProfile profile = reduced_homology(complex);
  Json groups = Json::array();
  Table t{{"degree", "rank", "torsion"}, {}};
  for (const auto& g : profile.groups) {
    groups.push_back({{"degree", g.degree}, {"rank", g.rank}, {"torsion", to_json(g.torsion)}});
    t.rows.push_back({std::to_string(g.degree), std::to_string(g.rank), to_json(g.torsion).dump()});
  }
  return {{{"n", n}, {"groups", groups}, {"torsion_free", profile.torsion_free()}}, t, std::nullopt};
}

Output cmd_homdegree(Context& ctx, std::uint64_t n) {
  return {{{"n", n},
           {"homological_degree", homological_degree(ctx.sieve(), n)},
           {"v", predicted_homological_degree(n)}},
          std::nullopt, std::nullopt};
}

Output cmd_betti(Context& ctx, std::uint64_t n) {
  const BettiTable table = hochster_betti(ctx.scan(n));
  Json entries = Json::array();
  Table t{{"i", "U", "value"}, {}};
  for (const auto& e : table.entries) {
    entries.push_back({{"i", e.i}, {"U", e.subset}, {"value", e.value}});
    t.rows.push_back({std::to_string(e.i), join(e.subset, " "), std::to_string(e.value)});
  }
  return {{{"n", n}, {"entries", entries}, {"totals", table.totals}}, t, std::nullopt};
}

Output cmd_regularity(Context& ctx, std::uint64_t n) {
  const int reg = regularity(ctx.scan(n));
  return {{{"n", n}, {"regularity", reg}, {"v", predicted_homological_degree(n)}}, std::nullopt,
          std::nullopt};
}

Output cmd_poincare(Context& ctx, std::uint64_t n, int t_max) {
  const PoincareSeries ps = poincare_series(ctx.scan(n), t_max);
  Table t{{"degree", "polynomial_ring", "square_zero"}, {}};
  for (std::size_t d = 0; d < ps.square_zero.size(); ++d) {
    const BigInt poly = d < ps.polynomial_ring.size() ? ps.polynomial_ring[d] : BigInt(0);
    t.rows.push_back({std::to_string(d), poly.str(), ps.square_zero[d].str()});
  }
  return {{{"n", n},
           {"t_max", t_max},
           {"polynomial_ring", to_json(ps.polynomial_ring)},
           {"square_zero", to_json(ps.square_zero)}},
          t, std::nullopt};
}

Output cmd_exterior_betti(Context& ctx, std::uint64_t n, int i) {
  return {{{"n", n}, {"i", i}, {"value", to_json(exterior_betti(ctx.scan(n), i))}}, std::nullopt,
          std::nullopt};
}

Output cmd_symmetric_scan(Context& ctx, int r_max) {
  const SymmetricScan scan = symmetric_scan(*ctx.sieve(), r_max);
  Json matches = Json::array();
  Table t{{"r", "n", "polynomial"}, {}};
  for (const auto& m : scan.matches) {
    matches.push_back({{"r", m.r}, {"n", m.n}, {"polynomial", m.polynomial.to_string()}});
    t.rows.push_back({std::to_string(m.r), std::to_string(m.n), m.polynomial.to_string()});
  }
  Json intervals = Json::array();
  for (const auto& c : scan.intervals) {
    intervals.push_back({{"r", c.r},
                         {"lo", c.lo},
                         {"hi", c.hi},
                         {"pruned", c.pruned},
                         {"vertex_lower_bound", c.vertex_lower_bound},
                         {"top_face_upper_bound", c.top_face_upper_bound}});
  }
  return {{{"r_max", r_max}, {"matches", matches}, {"intervals", intervals}}, t, std::nullopt};
}

Output cmd_h2_scan(Context& ctx, std::uint64_t lo, std::uint64_t hi) {
  const auto rows = h2_scan(*ctx.sieve(), lo, hi);
  Json j = Json::array();
  Table t{{"n", "h2", "ell", "strict_local_max", "ell_jump"}, {}};
  std::uint64_t negative = 0;
  for (const auto& r : rows) {
    j.push_back({{"n", r.n},
                 {"h2", r.h2},
                 {"ell", r.ell},
                 {"strict_local_max", r.strict_local_max},
                 {"ell_jump", r.ell_jump}});
    t.rows.push_back({std::to_string(r.n), std::to_string(r.h2), std::to_string(r.ell),
                      r.strict_local_max ? "1" : "0", r.ell_jump ? "1" : "0"});
    if (r.h2 < 0) ++negative;
  }
  return {{{"rows", j}, {"negative_count", negative}, {"row_count", rows.size()}}, t, std::nullopt};
}

Output cmd_ell_growth(const std::vector<std::uint64_t>& samples) {
  const EllGrowthFit fit = fit_ell_growth(samples.empty() ? default_ell_samples() : samples);
  Json j = Json::array();
  Table t{{"n", "ell", "estimate"}, {}};
  for (const auto& s : fit.samples) {
    j.push_back({{"n", s.n}, {"ell", s.ell}, {"estimate", s.estimate}});
    std::ostringstream est;
    est.precision(12);
    est << s.estimate;
    t.rows.push_back({std::to_string(s.n), std::to_string(s.ell), est.str()});
  }
  return {{{"C", fit.c}, {"band_low", fit.band_low}, {"band_high", fit.band_high}, {"samples", j}}, t,
          std::nullopt};
}

Output cmd_lambda_estimate(Context& ctx, double log10_n, std::size_t count) {
  const auto sieve = ctx.sieve();
  Json j = Json::array();
  Table t{{"i", "p", "estimate"}, {}};
  for (std::size_t i = 1; i <= count; ++i) {
    const double est = lambda_estimate(*sieve, log10_n, i);
    j.push_back({{"i", i}, {"p", sieve->prime(i)}, {"estimate", est}});
    std::ostringstream os;
    os.precision(12);
    os << est;
    t.rows.push_back({std::to_string(i), std::to_string(sieve->prime(i)), os.str()});
  }
  return {{{"log10_n", log10_n}, {"estimates", j}}, t, std::nullopt};
}

std::string render(const Output& o, const std::string& format) {
  if (o.raw) return *o.raw;
  if (format == "json") return o.json.dump() + "\n";
  if (format == "csv") return to_csv(o.table ? *o.table : table_from_object(o.json));
  return o.table ? to_text(*o.table) : text_from_object(o.json);
}

std::uint64_t sieve_limit_from_env() {
  const char* env = std::getenv(kSieveEnv);
  if (env == nullptr || *env == '\0') return kDefaultSieveLimit;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(env, &used);
    if (used != std::string(env).size() || v < 2) throw std::invalid_argument("bad");
    return v;
  } catch (const std::exception&) {
    throw CLI::ValidationError(std::string(kSieveEnv) + " must be an integer >= 2");
  }
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in the unitary-convolution algebra and its simplicial complex",
               "unitary"};
  app.require_subcommand(1, 1);
  Settings settings;

  app.add_option("--format", settings.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  auto* sieve_opt = app.add_option("--sieve-limit", settings.sieve_limit,
                                   "Largest integer the prime sieve covers (env UNITARY_SIEVE_LIMIT)")
                        ->check(CLI::Range(std::uint64_t{2}, (std::uint64_t{1} << 32) - 1));
  app.add_option("--out", settings.out_path, "Write the payload to FILE instead of stdout");

  std::function<Output(Context&)> action;
  std::uint64_t n = 0;
  std::uint64_t n2 = 0;
  int index = 0;
  int degree = 0;
  int t_max = 10;
  bool flag_a = false;
  bool flag_b = false;
  std::optional<std::size_t> terms;
  std::optional<std::uint64_t> empirical;
  std::vector<std::uint64_t> samples;
  double log10_n = 0;
  std::size_t count = 20;

  auto add = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    return sub;
  };
  auto add_n = [&](CLI::App* sub) {
    sub->add_option("N", n, "Truncation bound")
        ->required()
        ->check(CLI::Range(std::uint64_t{1}, std::numeric_limits<std::uint64_t>::max()));
  };
  auto add_cap = [&](CLI::App* sub) {
    sub->add_option("--cap", settings.cap,
                    "Most vertices allowed in a subset scan; cost is 2^vertices subcomplexes")
        ->capture_default_str();
    sub->add_option("--threads", settings.threads, "Worker threads (0: hardware concurrency)");
  };

  struct Simple {
    const char* name;
    const char* help;
    std::function<Output(Context&, std::uint64_t)> run;
  };
  const std::vector<Simple> simple = {
      {"special-fns", "pi, pi', ell, v and the pi_k counts", cmd_special_fns},
      {"lambda", "Exponent partition lambda_i = max{j : p_i^j <= N}", cmd_lambda},
      {"fvector", "Face counts of the complex",
       [](Context& c, std::uint64_t x) { return cmd_fh(c, x, false); }},
      {"hvector", "f- and h-vectors of the complex",
       [](Context& c, std::uint64_t x) { return cmd_fh(c, x, true); }},
      {"hilbert", "Artinified and Stanley-Reisner Hilbert series", cmd_hilbert},
      {"socle", "Socle basis of the truncated algebra", cmd_socle},
      {"generators", "Minimal generators A, B, C of the defining ideal", cmd_generators},
      {"mu", "Minimal generator counts of A, B and C", cmd_mu},
      {"max-gen-degree", "Largest minimal generator degree, by enumeration", cmd_max_gen_degree},
      {"homology", "Reduced integral homology of the complex", cmd_homology},
      {"homdegree", "Top degree of nonzero reduced homology", cmd_homdegree},
  };
  for (const auto& s : simple) {
    CLI::App* sub = add(s.name, s.help);
    add_n(sub);
    sub->callback([&, run = s.run] { action = [&, run](Context& c) { return run(c, n); }; });
  }

  {
    CLI::App* sub = add("complex", "Vertices, facets and connectivity of the complex");
    add_n(sub);
    sub->add_flag("--dot", flag_a, "Emit the 1-skeleton in Graphviz format");
    sub->callback([&] { action = [&](Context& c) { return cmd_complex(c, n, flag_a); }; });
  }
  {
    CLI::App* sub = add("socle-density", "Socle density: exact series or empirical ratio");
    auto* t = sub->add_option("--terms", terms, "Number of primes in the exact partial sum")
                  ->check(CLI::Range(1, 100'000));
    auto* e = sub->add_option("--empirical", empirical, "Count the socle at this N")
                  ->check(CLI::Range(std::uint64_t{2}, std::numeric_limits<std::uint64_t>::max()));
    t->excludes(e);
    sub->require_option(1);
    sub->callback([&] { action = [&](Context& c) { return cmd_socle_density(c, terms, empirical); }; });
  }
  {
    CLI::App* sub = add("syzygies", "Monomial syzygy count against dim K_2");
    add_n(sub);
    sub->add_flag("--list", flag_a, "Include every lattice point");
    sub->callback([&] { action = [&](Context&) { return cmd_syzygies(n, flag_a); }; });
  }
  {
    CLI::App* sub = add("multistable", "Exchange property of the ideal on low-degree monomials");
    add_n(sub);
    sub->add_option("--degree", degree, "Degree bound (default: largest generator degree)");
    sub->callback([&] { action = [&](Context& c) { return cmd_multistable(c, n, degree); }; });
  }
  {
    CLI::App* sub = add("shelling", "Lexicographic facet order, optionally verified");
    add_n(sub);
    sub->add_flag("--verify", flag_a, "Run the shelling criterion and report a witness on failure");
    sub->add_flag("--reverse", flag_b, "Use the ascending order instead");
    sub->callback([&] { action = [&](Context& c) { return cmd_shelling(c, n, flag_a, flag_b); }; });
  }
  {
    CLI::App* sub = add("betti", "Multigraded Betti numbers over the polynomial ring");
    add_n(sub);
    add_cap(sub);
    sub->callback([&] { action = [&](Context& c) { return cmd_betti(c, n); }; });
  }
  {
    CLI::App* sub = add("regularity", "Castelnuovo-Mumford regularity by subset scan");
    add_n(sub);
    add_cap(sub);
    sub->callback([&] { action = [&](Context& c) { return cmd_regularity(c, n); }; });
  }
  {
    CLI::App* sub = add("poincare", "Coarse Poincare series over both rings");
    add_n(sub);
    add_cap(sub);
    sub->add_option("--tmax", t_max, "Highest degree of the expansion")
        ->check(CLI::Range(0, 10'000))
        ->capture_default_str();
    sub->callback([&] { action = [&](Context& c) { return cmd_poincare(c, n, t_max); }; });
  }
  {
    CLI::App* sub = add("exterior-betti", "Betti number over the exterior algebra");
    add_n(sub);
    sub->add_option("I", index, "Homological index")->required()->check(CLI::Range(0, 10'000));
    add_cap(sub);
    sub->callback([&] { action = [&](Context& c) { return cmd_exterior_betti(c, n, index); }; });
  }
  {
    CLI::App* sub = add("symmetric-scan", "n with a palindromic Hilbert polynomial, by primorial interval");
    sub->add_option("RMAX", index, "Largest interval index")->required()->check(CLI::Range(1, 15));
    sub->callback([&] { action = [&](Context& c) { return cmd_symmetric_scan(c, index); }; });
  }
  {
    CLI::App* sub = add("h2-scan", "h_2 over a range of N");
    sub->add_option("NMIN", n, "First N")->required()->check(CLI::Range(std::uint64_t{2}, std::numeric_limits<std::uint64_t>::max()));
    sub->add_option("NMAX", n2, "Last N")->required();
    sub->callback([&] { action = [&](Context& c) { return cmd_h2_scan(c, n, n2); }; });
  }
  {
    CLI::App* sub = add("ell-growth", "Fit of ell(n) against the Lambert-W solution");
    sub->add_option("--samples", samples, "Sample points n (default 10^3 .. 10^16)")->delimiter(',');
    sub->callback([&] { action = [&](Context&) { return cmd_ell_growth(samples); }; });
  }
  {
    CLI::App* sub = add("lambda-estimate", "ln(n)/ln(p_i) for n = 10^L");
    sub->add_option("--log10", log10_n, "L = log10(n)")->required()->check(CLI::PositiveNumber);
    sub->add_option("--count", count, "Number of primes")
        ->capture_default_str()
        ->check(CLI::Range(1, 100'000));
    sub->callback([&] { action = [&](Context& c) { return cmd_lambda_estimate(c, log10_n, count); }; });
  }

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
    if (sieve_opt->count() == 0) settings.sieve_limit = sieve_limit_from_env();
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    Context ctx(settings);
    const Output result = action(ctx);
    const std::string payload = render(result, settings.format);
    if (settings.out_path.empty()) {
      out << payload;
    } else {
      std::ofstream file(settings.out_path, std::ios::binary);
      if (!file) {
        err << "usage error: cannot open " << settings.out_path << " for writing\n";
        return kExitUsage;
      }
      file << payload;
    }
  } catch (const CapExceeded& e) {
    err << "refused: " << e.what() << "\n";
    return kExitRefused;
  } catch (const DomainError& e) {
    err << "refused: " << e.what() << "\n";
    return kExitRefused;
  } catch (const OverflowError& e) {
    err << "refused: " << e.what() << "\n";
    return kExitRefused;
  }
  return kExitOk;
}

}  // namespace unitary
