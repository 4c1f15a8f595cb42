#include "qpslab/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <ctime>
#include <functional>
#include <map>
#include <sstream>
#include <thread>

#include "qpslab/conventions.hpp"
#include "qpslab/random.hpp"

namespace qpslab {

namespace {

const std::vector<std::string> kSuites{"pairing",     "cartan-dirac", "dorfman-closure", "double",     "lemma-kernel",
                                       "regact",      "gs-theorem1",  "gs-theorem2",     "bivector",   "diagram-gs",
                                       "weyl-fiber",  "leaf-form"};

const std::vector<std::string> kGroups{"sl2", "sl3", "sl4", "gl2", "gl3", "gl4"};

struct PointContext {
  const GroupContext& ctx;
  std::size_t index;
  SplitMix64 rng;
};

using Records = std::vector<CheckRecord>;

void add(Records& out, const PointContext& pc, const json& point, const std::string& check, bool passed,
         std::string witness = "") {
  out.push_back({pc.index, check, point, passed, passed ? "" : std::move(witness)});
}

void add_lines(Records& out, const PointContext& pc, const json& point, const std::vector<CheckLine>& lines,
               const std::string& prefix = "") {
  for (const auto& l : lines) add(out, pc, point, prefix + l.id, l.passed, l.witness);
}

template <class T>
Mat<T> sample(PointContext& pc, SampleKind kind) {
  return cast_matrix<T>(random_point(pc.ctx, kind, pc.rng).m);
}

template <class T>
Mat<T> sample_algebra(PointContext& pc) {
  return cast_matrix<T>(random_algebra(pc.ctx, pc.rng).m);
}

template <class T>
Vec<T> sample_vector(PointContext& pc, std::size_t n) {
  return cast_vector<T>(random_vector(n, pc.rng));
}

template <class T>
Mat<T> basis(const GroupContext& ctx, std::size_t k) {
  return cast_matrix<T>(ctx.basis_element(k));
}

/// GS points; index 0 lies over t = identity and index 1 over a non-regular t.
template <class T>
GSPoint<T> sample_gs(PointContext& pc) {
  const Mat<Exact> g = random_point(pc.ctx, SampleKind::G, pc.rng).m;
  Mat<Exact> b;
  if (pc.index == 0) {
    b = random_point(pc.ctx, SampleKind::U, pc.rng).m;
  } else if (pc.index == 1) {
    b = nonregular_torus_point(pc.ctx, pc.rng).m * random_point(pc.ctx, SampleKind::U, pc.rng).m;
  } else {
    b = random_point(pc.ctx, SampleKind::B, pc.rng).m;
  }
  return make_gs_point(pc.ctx, cast_matrix<T>(g), cast_matrix<T>(b));
}

template <class T>
Vec<T> pack(const GroupContext& ctx, const Mat<T>& x, const Mat<T>& a) {
  Vec<T> v = ctx.coords(x);
  const Vec<T> c = ctx.metric_to_dual(a);
  v.insert(v.end(), c.begin(), c.end());
  return v;
}

template <class T>
std::string vstr(const Vec<T>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_display(v[i]);
  return s + "]";
}

// ---------------------------------------------------------------------------

template <class T>
Records suite_pairing(PointContext& pc) {
  const auto& ctx = pc.ctx;
  Records out;
  const Mat<T> g = sample<T>(pc, SampleKind::G);
  const json point{{"g", matrix_to_json(g)}};
  const Mat<T> x = sample_algebra<T>(pc), a = sample_algebra<T>(pc);
  const Mat<T> y = sample_algebra<T>(pc), b = sample_algebra<T>(pc);
  const Mat<T> z(x.rows(), x.cols());
  const std::size_t d = ctx.dim_g();
  const T v = pairing(ctx, x, a, y, b);
  add(out, pc, point, "symmetry", approx_equal(v, pairing(ctx, y, b, x, a)));
  add(out, pc, point, "coordinates", approx_equal(v, pairing(d, pack(ctx, x, a), pack(ctx, y, b))),
      "metric " + to_display(v) + " vs dual " + to_display(pairing(d, pack(ctx, x, a), pack(ctx, y, b))));
  add(out, pc, point, "isotropic-tangent", is_zero(pairing(ctx, x, z, y, z)));
  add(out, pc, point, "isotropic-cotangent", is_zero(pairing(ctx, z, a, z, b)));
  // (ρ(ξ), σ(ξ)) pairs with itself to 2(σ(ξ), ρ(ξ)) = 0.
  const auto l = cartan_dirac(ctx, g);
  add(out, pc, point, "cartan-dirac-isotropic", is_lagrangian(l).ok, is_lagrangian(l).witness);
  return out;
}

template <class T>
std::size_t centralizer_dim(const GroupContext& ctx, const Mat<T>& g) {
  const std::size_t d = ctx.dim_g();
  Mat<T> m(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    const Mat<T> e = basis<T>(ctx, j);
    const Vec<T> c = ctx.coords(lie::adjoint(g, e) - e);
    for (std::size_t i = 0; i < d; ++i) m(i, j) = c[i];
  }
  return kernel(m).dim();
}

template <class T>
bool closure_holds(const GroupContext& ctx, const Mat<T>& g, const Mat<T>& xi, const Mat<T>& zeta, std::string& witness) {
  const ProductSpace m = group_space(ctx);
  const Point<T> p{g};
  const auto [t, c] = dorfman(m, cartan_dirac_section(ctx, ctx.coords(xi)), cartan_dirac_section(ctx, ctx.coords(zeta)),
                              cartan_eta_family(m), p);
  const auto expect = cartan_dirac_section(ctx, ctx.coords(lie::bracket(xi, zeta)))(p);
  if (approx_equal(t, expect.first) && approx_equal(c, expect.second)) return true;
  witness = "bracket " + vstr(t) + " / " + vstr(c) + ", expected " + vstr(expect.first) + " / " + vstr(expect.second);
  return false;
}

template <class T>
Records suite_cartan_dirac(PointContext& pc) {
  const auto& ctx = pc.ctx;
  Records out;
  const Mat<T> g = sample<T>(pc, SampleKind::G);
  const json point{{"g", matrix_to_json(g)}};
  const auto l = cartan_dirac(ctx, g);
  const auto v = is_lagrangian(l);
  add(out, pc, point, "lagrangian", v.ok && l.dim() == ctx.dim_g(), v.witness);
  const std::size_t expected = ctx.dim_g() - centralizer_dim(ctx, g);
  const std::size_t got = tangent_projection(l).dim();
  add(out, pc, point, "conjugacy-tangent", got == expected,
      "projection dim " + std::to_string(got) + ", expected " + std::to_string(expected));
  std::string w;
  const bool ok = closure_holds(ctx, g, sample_algebra<T>(pc), sample_algebra<T>(pc), w);
  add(out, pc, point, "closure", ok, w);
  return out;
}

template <class T>
Records suite_dorfman_closure(PointContext& pc) {
  const auto& ctx = pc.ctx;
  Records out;
  const Mat<T> g = sample<T>(pc, SampleKind::G);
  const json point{{"g", matrix_to_json(g)}};
  bool ok = true;
  std::string witness;
  for (std::size_t i = 0; ok && i < ctx.dim_g(); ++i)
    for (std::size_t j = 0; ok && j < ctx.dim_g(); ++j) {
      std::string w;
      if (!closure_holds(ctx, g, basis<T>(ctx, i), basis<T>(ctx, j), w)) {
        ok = false;
        witness = "basis pair (" + std::to_string(i) + "," + std::to_string(j) + "): " + w;
      }
    }
  add(out, pc, point, "closure-basis", ok, witness);
  return out;
}

template <class T>
Records suite_double(PointContext& pc) {
  const auto& ctx = pc.ctx;
  Records out;
  const DoublePoint<T> p{sample<T>(pc, SampleKind::G), sample<T>(pc, SampleKind::G)};
  const json point = point_to_json(p);
  const std::size_t dg = ctx.dim_g();
  const ProductSpace d = double_space(ctx);
  const auto ph = phi_map(d);
  const Mat<T> w = omega_double_matrix(ctx, p.a, p.b);
  add(out, pc, point, "skew", is_skew(w));
  {
    bool ok = true;
    std::string witness;
    const Mat<T> z(p.a.rows(), p.a.cols());
    for (std::size_t k = 0; ok && k < 2 * dg; ++k) {
      const Mat<T> e = basis<T>(ctx, k % dg);
      if (!moment_condition_check(ctx, p, k < dg ? e : z, k < dg ? z : e)) {
        ok = false;
        witness = "basis element " + std::to_string(k) + " of g+g";
      }
    }
    add(out, pc, point, "A1-moment", ok, witness);
  }
  {
    bool ok = true;
    std::string witness;
    for (int t = 0; ok && t < 3; ++t) {
      const Vec<T> x = sample_vector<T>(pc, d.dim()), y = sample_vector<T>(pc, d.dim()), z = sample_vector<T>(pc, d.dim());
      const T lhs = d_two_form(d, omega_double_family(ctx), p.point(), x, y, z);
      const T rhs = -pullback_eta(ph, p.point(), x, y, z);
      if (!approx_equal(lhs, rhs)) {
        ok = false;
        witness = "d omega = " + to_display(lhs) + ", -Phi^* eta = " + to_display(rhs);
      }
    }
    add(out, pc, point, "A2-closure", ok, witness);
  }
  {
    const auto k = kernel(vstack(w, jacobian(ph, p.point())));
    add(out, pc, point, "A3-nondegeneracy", k.dim() == 0, k.dim() ? "common kernel " + vstr(k.vector(0)) : "");
  }
  {
    bool ok = true;
    std::string witness;
    for (int t = 0; ok && t < 10; ++t) {
      const Mat<T> g1 = sample<T>(pc, SampleKind::G), g2 = sample<T>(pc, SampleKind::G);
      const auto act = double_action_map(ctx, g1, g2);
      const Mat<T> ja = jacobian(act, p.point());
      const Point<T> q = act.eval(p.point());
      if (!approx_equal(ja.transpose() * omega_double_matrix(ctx, q[0], q[1]) * ja, w)) {
        ok = false;
        witness = "action element " + std::to_string(t);
      }
    }
    add(out, pc, point, "A4-invariance", ok, witness);
  }
  {
    const auto pushed = pushforward(graph_two_form(TwoFormFiber<T>{p.point(), w}), ph, p.point());
    const auto [m1, m2] = phi(p);
    const bool ok = fiber_equal(pushed, product_fiber(cartan_dirac(ctx, m1), cartan_dirac(ctx, m2)));
    add(out, pc, point, "f-dirac", ok, "Phi_* graph(omega) differs from the Cartan-Dirac product");
  }
  return out;
}

template <class T>
Records suite_lemma_kernel(PointContext& pc) {
  const auto& ctx = pc.ctx;
  Records out;
  const Mat<T> b = sample<T>(pc, SampleKind::B);
  const json point{{"b", matrix_to_json(b)}};
  const std::size_t db = ctx.dim_b();
  Mat<T> u(db, ctx.dim_u());
  for (std::size_t k = 0; k < ctx.dim_u(); ++k) u(ctx.u_range().begin + k, k) = T(1);
  const auto k = lemma_kernel(ctx, b);
  add(out, pc, point, "kernel-equals-u", equal(k, Subspace<T>::span(u)), "kernel dim " + std::to_string(k.dim()));
  // ξ = s + n: [∀x∈b (σ_b(ξ), x) = 0] ⇔ s = 0, over the basis and random combinations.
  auto holds = [&](const Mat<T>& xi) {
    const Mat<T> s = lie::sigma(ctx, b, xi);
    for (std::size_t j = 0; j < db; ++j)
      if (!is_zero(ctx.form(s, basis<T>(ctx, j)))) return false;
    return true;
  };
  bool ok = true;
  std::string witness;
  for (std::size_t i = 0; ok && i < db + 4; ++i) {
    Mat<T> xi;
    bool s_zero;
    if (i < db) {
      xi = basis<T>(ctx, i);
      s_zero = i >= ctx.u_range().begin;
    } else {
      const Vec<T> c = sample_vector<T>(pc, db);
      Vec<T> cc = c;
      if (i % 2 == 0)
        for (std::size_t t = 0; t < ctx.rank(); ++t) cc[t] = T(0);
      s_zero = true;
      for (std::size_t t = 0; t < ctx.rank(); ++t) s_zero = s_zero && is_zero(cc[t]);
      xi = ctx.from_coords_in(cc, ctx.b_range());
    }
    if (holds(xi) != s_zero) {
      ok = false;
      witness = "xi " + vstr(ctx.coords(xi)) + ": condition " + (holds(xi) ? "holds" : "fails") +
                " but t-component " + (s_zero ? "vanishes" : "is nonzero");
    }
  }
  add(out, pc, point, "basis-split", ok, witness);
  return out;
}

template <class T>
Records suite_regact(PointContext& pc) {
  Records out;
  const auto p = sample_gs<T>(pc);
  const json point = point_to_json(p);
  const auto r = regact_check(pc.ctx, p);
  add(out, pc, point, "dimension", r.dim == r.expected,
      "intersection dim " + std::to_string(r.dim) + ", dim u " + std::to_string(r.expected));
  add(out, pc, point, "equals-rho-u", r.equals_rho_u, "intersection differs from rho(0+u)");
  return out;
}

template <class T>
Records suite_theorem1(PointContext& pc) {
  Records out;
  const auto p = sample_gs<T>(pc);
  const json point = point_to_json(p);
  add_lines(out, pc, point, theorem1_check(pc.ctx, p));
  const Mat<T> h = sample<T>(pc, SampleKind::B);
  add(out, pc, point, "representative-independence", representative_independence(pc.ctx, p, h),
      "fibers at (g,b) and (gh^-1, hbh^-1) disagree");
  return out;
}

template <class T>
Records suite_theorem2(PointContext& pc) {
  Records out;
  const auto p = sample_gs<T>(pc);
  add_lines(out, pc, point_to_json(p), theorem2_check(pc.ctx, p));
  return out;
}

template <class T>
Records suite_bivector(PointContext& pc) {
  Records out;
  const auto p = sample_gs<T>(pc);
  add_lines(out, pc, point_to_json(p), reconstruct_bivector(pc.ctx, p).checks);
  return out;
}

template <class T>
Records suite_diagram(PointContext& pc) {
  const auto& ctx = pc.ctx;
  Records out;
  const auto p = sample_gs<T>(pc);
  const json point = point_to_json(p);
  add(out, pc, point, "kappa-mu-lambda", approx_equal(chevalley(ctx, mu(p)), chevalley(ctx, lambda(p))),
      "kappa(mu) " + vstr(chevalley(ctx, mu(p))) + " vs kappa(lambda) " + vstr(chevalley(ctx, lambda(p))));
  add(out, pc, point, "mu-in-steinberg-fiber", steinberg_membership(ctx, mu(p), lambda(p)));
  const Mat<T> h = sample<T>(pc, SampleKind::B);
  const auto q = act(p, h);
  add(out, pc, point, "well-defined",
      equivalent(ctx, p, q) && approx_equal(mu(p), mu(q)) && approx_equal(lambda(p), lambda(q)));
  const Mat<T> g = sample<T>(pc, SampleKind::G);
  const Mat<T> u = sample<T>(pc, SampleKind::U);
  const Mat<T> e = Mat<T>::identity(u.rows());
  add(out, pc, point, "unipotent-in-F1", steinberg_membership(ctx, g * u * inverse(g), e));
  const Mat<T> t = sample<T>(pc, SampleKind::RegularSemisimpleT);
  const std::size_t dim = tangent_projection(cartan_dirac(ctx, t)).dim();
  add(out, pc, point, "steinberg-codimension", dim == ctx.dim_g() - ctx.rank(),
      "conjugacy class tangent dim " + std::to_string(dim));
  return out;
}

Records suite_weyl(PointContext& pc) {
  const auto& ctx = pc.ctx;
  Records out;
  const Mat<Exact> h = random_point(ctx, SampleKind::G, pc.rng).m;
  const Mat<Exact> t = random_point(ctx, SampleKind::RegularSemisimpleT, pc.rng).m;
  const Mat<Float> g = cast_matrix<Float>(h * t * inverse(h));
  const json point{{"g", matrix_to_json(g)}};
  const auto pts = weyl_fiber_enum(ctx, g);
  std::size_t order = 1;
  for (int i = 2; i <= ctx.n(); ++i) order *= static_cast<std::size_t>(i);
  add(out, pc, point, "count", pts.size() == order,
      std::to_string(pts.size()) + " points, |W| = " + std::to_string(order));
  bool distinct = true;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) distinct = distinct && !equivalent(ctx, pts[i], pts[j]);
  add(out, pc, point, "inequivalent", distinct);
  double scale = 1;
  for (const auto& x : g.data()) scale = std::max(scale, std::abs(x));
  double residual = 0;
  for (const auto& q : pts) {
    const Mat<Float> r = mu(q) - g;
    for (const auto& x : r.data()) residual = std::max(residual, std::abs(x) / scale);
  }
  std::ostringstream os;
  os << "max relative residual " << residual;
  add(out, pc, point, "residual", residual < 1e-8, os.str());
  return out;
}

template <class T>
Records suite_leaf(PointContext& pc) {
  Records out;
  const auto p = sample_gs<T>(pc);
  const std::size_t n = leaf_space(pc.ctx).dim();
  std::vector<std::array<Vec<T>, 3>> triples;
  for (int k = 0; k < 3; ++k) triples.push_back({sample_vector<T>(pc, n), sample_vector<T>(pc, n), sample_vector<T>(pc, n)});
  add_lines(out, pc, point_to_json(p), leaf_form_check(pc.ctx, p, triples));
  return out;
}

template <class T>
std::function<Records(PointContext&)> suite_function(const std::string& name) {
  if (name == "pairing") return suite_pairing<T>;
  if (name == "cartan-dirac") return suite_cartan_dirac<T>;
  if (name == "dorfman-closure") return suite_dorfman_closure<T>;
  if (name == "double") return suite_double<T>;
  if (name == "lemma-kernel") return suite_lemma_kernel<T>;
  if (name == "regact") return suite_regact<T>;
  if (name == "gs-theorem1") return suite_theorem1<T>;
  if (name == "gs-theorem2") return suite_theorem2<T>;
  if (name == "bivector") return suite_bivector<T>;
  if (name == "diagram-gs") return suite_diagram<T>;
  if (name == "weyl-fiber") return suite_weyl;
  if (name == "leaf-form") return suite_leaf<T>;
  throw ConfigError("unknown suite: " + name);
}

}  // namespace

const std::vector<std::string>& suite_names() { return kSuites; }

bool is_known_suite(const std::string& name) {
  return std::find(kSuites.begin(), kSuites.end(), name) != kSuites.end();
}

void apply_hook(TestHooks& hooks, const std::string& name) {
  if (name == "sigma-half") {
    hooks.sigma_half = true;
  } else if (name == "sigma-sign") {
    hooks.sigma_sign = true;
  } else if (name == "omega-sign") {
    hooks.omega_sign = true;
  } else if (name == "dorfman-eta") {
    hooks.dorfman_eta = true;
  } else {
    throw ConfigError("unknown corruption hook: " + name);
  }
}

std::vector<std::string> hook_names(const TestHooks& hooks) {
  std::vector<std::string> out;
  if (hooks.sigma_half) out.emplace_back("sigma-half");
  if (hooks.sigma_sign) out.emplace_back("sigma-sign");
  if (hooks.omega_sign) out.emplace_back("omega-sign");
  if (hooks.dorfman_eta) out.emplace_back("dorfman-eta");
  return out;
}

void CampaignConfig::validate() const {
  if (!is_known_suite(suite)) throw ConfigError("unknown suite: " + suite);
  if (std::find(kGroups.begin(), kGroups.end(), group) == kGroups.end())
    throw ConfigError("unknown group: " + group + " (expected sl2, sl3, sl4, gl2, gl3 or gl4)");
  if (backend != "exact" && backend != "float") throw ConfigError("backend must be exact or float");
  if (samples < 1) throw ConfigError("samples must be at least 1");
  if (!(tolerance > 0)) throw ConfigError("tolerance must be positive");
  if (jobs < 1) throw ConfigError("jobs must be at least 1");
}

json CampaignConfig::to_json() const {
  return {{"suite", suite},     {"group", group},         {"backend", backend},
          {"samples", samples}, {"seed", seed},           {"tolerance", tolerance},
          {"jobs", jobs},       {"corrupt", hook_names(hooks)}};
}

std::size_t VerificationReport::passed() const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [](const CheckRecord& r) { return r.passed; }));
}

json VerificationReport::to_json(const std::string& timestamp) const {
  json recs = json::array();
  for (const auto& r : records) {
    json j{{"index", r.index}, {"check", r.check}, {"point", r.point}, {"passed", r.passed}};
    if (!r.witness.empty()) j["witness"] = r.witness;
    recs.push_back(std::move(j));
  }
  return {{"schema", "qpslab/1"},
          {"config", config.to_json()},
          {"records", recs},
          {"summary", {{"total", total()}, {"passed", passed()}, {"failed", failed()}}},
          {"convention_ledger", {{"hash", convention_ledger_hash()}, {"entries", convention_ledger()}}},
          {"timestamp", timestamp}};
}

std::string VerificationReport::summary_text() const {
  std::vector<std::string> order;
  std::map<std::string, std::pair<std::size_t, std::size_t>> counts;
  for (const auto& r : records) {
    if (!counts.count(r.check)) order.push_back(r.check);
    auto& c = counts[r.check];
    c.second++;
    if (r.passed) c.first++;
  }
  std::ostringstream os;
  for (const auto& id : order) os << "  " << id << "  " << counts[id].first << "/" << counts[id].second << "\n";
  return os.str();
}

VerificationReport run_suite(const CampaignConfig& config) {
  config.validate();
  set_float_tolerance(config.tolerance);
  const GroupContext ctx = GroupContext::from_name(config.group, config.hooks);
  const bool use_float = config.backend == "float";
  const auto fn = use_float ? suite_function<Float>(config.suite) : suite_function<Exact>(config.suite);

  SplitMix64 master(config.seed);
  std::vector<std::uint64_t> seeds(config.samples);
  for (auto& s : seeds) s = master.next();

  std::vector<Records> per_point(config.samples);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= config.samples) return;
      PointContext pc{ctx, i, SplitMix64(seeds[i])};
      try {
        per_point[i] = fn(pc);
      } catch (const std::exception& e) {
        per_point[i] = {CheckRecord{i, "error", json(), false, e.what()}};
      }
    }
  };
  const unsigned n = std::min<unsigned>(config.jobs, static_cast<unsigned>(config.samples));
  if (n <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < n; ++k) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  VerificationReport report;
  report.config = config;
  for (auto& r : per_point)
    for (auto& rec : r) report.records.push_back(std::move(rec));
  return report;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace qpslab
